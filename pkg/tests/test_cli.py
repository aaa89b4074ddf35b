import csv
import io
import json
import re
import subprocess
import sys

import pytest

from hsforce.cli import main
from hsforce.regions import region_plist, region_star
from hsforce.report import RunConfig, emit_svg
from hsforce.symbolic import TailSeq, embed_coordinate


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_nbt():
    assert run("nbt", "2/7") == (0, "10011001\n", "")
    code, out, _ = run("nbt", "2/7", "--format", "json")
    assert json.loads(out) == {"q": "2/7", "code": "10011001"}


def test_forced_csv_sections():
    code, out, _ = run("forced", "--star", "2/7", "--max-period", "2", "--format", "csv")
    assert code == 0
    forced, excluded = out.split("# excluded\n")
    assert forced.splitlines()[1:] == ["period,code", "1,0", "1,1"]
    rows = list(csv.reader(io.StringIO(excluded)))
    assert rows[0] == ["period", "code", "witness_forward", "witness_backward", "rect_index"]
    assert rows[1][:2] == ["2", "10"]


def test_region_json():
    code, out, _ = run("region", "--plist", "2/5,2/7,1/3", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("nbt", "3/4"),
        ("nbt", "1/0"),
        ("region", "--maximal", "01"),
        ("forced", "--star", "2/7", "--max-period", "30"),
        ("plot", "--star", "2/7", "--out", "x.svg", "--depth", "4"),
        ("region", "--plist", "1/3,1/3"),
        ("compare", "star:2/7", "bogus"),
    ],
)
def test_precondition_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and "error" in err


def test_non_plist_exit_2():
    from itertools import permutations
    from fractions import Fraction

    from hsforce.regions import limiting_structure

    qs = sorted({Fraction(m, n) for n in range(3, 10) for m in range(1, n) if 2 * m < n})
    L = next(L for L in permutations(qs, 4) if not limiting_structure(L).is_plist)
    code, _, err = run("region", "--plist", ",".join(map(str, L)))
    assert code == 2 and "P-list" in err


def test_unknown_flag_usage():
    code, _, _ = run("nbt", "2/7", "--bogus")
    assert code == 2
    code, _, _ = run("region", "--star", "2/7", "--maximal", "11")
    assert code == 2


def test_compare_and_verify():
    code, out, _ = run("compare", "star:2/5", "star:2/7")
    assert code == 0 and "forces" in out and "does not" not in out
    code, out, _ = run("compare", "star:2/7", "star:2/5", "--format", "json")
    d = json.loads(out)
    assert d["forces"] is False and d["rect_index"] == 0
    code, out, _ = run("verify", "--plist", "2/5,2/7,1/3", "--format", "json")
    assert [r["status"] for r in json.loads(out)] == ["verified", "verified"]
    code, out, _ = run("maximal-check", "01")
    assert code == 0 and out.startswith("not maximal")
    code, out, _ = run("limiting", "2/5,2/7,1/3")
    assert "C1 C3" in out and "P-list" in out


def test_determinism():
    argv = ("forced", "--star", "2/7", "--max-period", "10", "--format", "csv")
    assert run(*argv) == run(*argv)


def test_tailseq_round_trip():
    _, out, _ = run("forced", "--plist", "2/5,2/7,1/3", "--max-period", "8", "--format", "json")
    d = json.loads(out)
    texts = [v for r in d["region"] for k, v in r.items() if k != "provenance"]
    texts += [e["witness"][k] for e in d["excluded"] for k in ("forward", "backward")]
    for t in texts:
        assert str(TailSeq.parse(t)) == t


def test_svg_boxes_and_dots(tmp_path):
    out = tmp_path / "p.svg"
    code, _, _ = run("plot", "--plist", "2/5,2/7,1/3", "--out", str(out))
    svg = out.read_text()
    assert code == 0
    assert svg.count('class="domain"') == 2 and "<circle" not in svg
    assert 'data-depth="16"' in svg
    code, _, _ = run("plot", "--star", "2/7", "--out", str(out), "--max-period", "4", "--depth", "12")
    svg = out.read_text()
    assert svg.count('class="domain"') == 1
    assert 'class="forced"' in svg and 'class="excluded"' in svg


def test_svg_star_box_geometry():
    cfg = RunConfig("plot", size=1000, depth=20)
    svg = emit_svg(region_star("2/7"), None, cfg)
    x0 = float(embed_coordinate(TailSeq.parse("0110010(0)"), 20)) * 1000
    x1 = float(embed_coordinate(TailSeq.parse("1(0)"), 20)) * 1000
    m = re.search(r'id="domain-0" class="domain" x="([\d.]+)" y="[\d.]+" width="([\d.]+)"', svg)
    assert abs(float(m.group(1)) - x0) < 1e-3
    assert abs(float(m.group(1)) + float(m.group(2)) - x1) < 2e-3
    assert emit_svg(region_plist(["2/5", "2/7", "1/3"]), [], cfg).count("<circle") == 0


def test_svg_unwritable(tmp_path):
    code, _, err = run("plot", "--star", "2/7", "--out", str(tmp_path / "no" / "dir.svg"))
    assert code == 2 and "cannot write" in err


def test_cap_env_lowers_only(monkeypatch):
    monkeypatch.setenv("HSFORCE_CAP", "6")
    assert run("forced", "--star", "2/7", "--max-period", "7")[0] == 2
    assert run("forced", "--star", "2/7", "--max-period", "6")[0] == 0


def test_console_script():
    r = subprocess.run(
        [sys.executable, "-m", "hsforce.cli", "nbt", "1/3"], capture_output=True, text=True
    )
    assert r.returncode == 0 and r.stdout == "1001\n"


def test_internal_error_exit_1(monkeypatch):
    from hsforce import cli

    def boom(args, out):
        raise RuntimeError("boom")

    monkeypatch.setitem(cli.COMMANDS, "nbt", boom)
    code, _, err = run("nbt", "2/7")
    assert code == 1 and "internal error" in err
