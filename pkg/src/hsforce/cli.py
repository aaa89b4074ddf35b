"""Command line front end.

Exit status: 0 on success, 2 on bad input (including violated
preconditions such as a non-maximal decoration or a non-P-list), 1 on
internal errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .forcing import Mode, forced_periodic, forces_pair, region_of, sufficient_order_check
from .nbt import nbt_code, parse_rational
from .orbits import Family, HomoclinicOrbit, decoration, parse_generator, plist, star
from .regions import PruningRegion, limiting_structure
from .report import (
    RunConfig,
    dumps,
    emit_svg,
    forced_csv,
    forced_text,
    region_csv,
    region_text,
    report_points,
)
from .symbolic import TailSeq, is_shift_maximal, rotations
from .verify import verify_pruning_domain


class UsageError(Exception):
    pass


def _add_generator(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--maximal", metavar="W", help="maximal decoration W")
    g.add_argument("--star", metavar="M/N", help="star homoclinic orbit of q = M/N")
    g.add_argument("--plist", metavar="LIST", help="comma separated rationals, e.g. 2/5,2/7,1/3")


def _generator(args) -> HomoclinicOrbit:
    if args.maximal is not None:
        return decoration(args.maximal)
    if args.star is not None:
        return star(parse_rational(args.star))
    return plist(parse_rational(s) for s in args.plist.split(",") if s.strip())


def _spec(args) -> str:
    if args.maximal is not None:
        return f"maximal:{args.maximal}"
    if args.star is not None:
        return f"star:{args.star}"
    return f"plist:{args.plist}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsforce",
        description="Pruning regions and forced orbits of horseshoe homoclinic orbits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("nbt", help="NBT code of a rational in (0, 1/2)")
    p.add_argument("q", metavar="M/N")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("maximal-check", help="is W shift-maximal?")
    p.add_argument("w")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("region", help="pruning region of a generator")
    _add_generator(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("forced", help="periodic orbits forced by a generator")
    _add_generator(p)
    p.add_argument("--max-period", type=int, default=12)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("compare", help="does generator A force orbit B?")
    p.add_argument("a", metavar="GEN_A", help="maximal:W, star:M/N or plist:LIST")
    p.add_argument("b", metavar="GEN_B")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check the pruning-domain conditions of each rectangle")
    _add_generator(p)
    p.add_argument("--bound", type=int, default=256)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("limiting", help="limiting points and P-list verdict of a rational list")
    p.add_argument("qs", metavar="LIST")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("plot", help="SVG picture of the region and the enumerated orbits")
    _add_generator(p)
    p.add_argument("--out", required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--max-period", type=int, default=0, help="0 draws no orbits")
    p.add_argument("--size", type=int, default=480)
    return parser


def _cmd_nbt(args, out) -> None:
    code = nbt_code(parse_rational(args.q))
    out.write(dumps(code.as_dict()) if args.format == "json" else code.word + "\n")


def _cmd_maximal(args, out) -> None:
    ok = is_shift_maximal(args.w)
    reason = None
    if not ok:
        top = TailSeq.periodic(args.w)
        i = next(i for i, r in enumerate(rotations(args.w)) if TailSeq.periodic(r) > top)
        reason = f"shift {i} is larger"
    if args.format == "json":
        out.write(dumps({"w": args.w, "maximal": ok, "reason": reason}))
    else:
        out.write(("maximal" if ok else f"not maximal ({reason})") + "\n")


def _cmd_region(args, out) -> None:
    g = _generator(args)
    region = region_of(g)
    if args.format == "json":
        out.write(dumps(region.as_list()))
    elif args.format == "csv":
        out.write(region_csv(region))
    else:
        out.write(region_text(region))


def _cmd_forced(args, out) -> None:
    cfg = RunConfig("forced", _spec(args), args.max_period, args.format)
    report = forced_periodic(_generator(args), cfg.max_period)
    if cfg.format == "json":
        out.write(dumps(report.as_dict()))
    elif cfg.format == "csv":
        out.write(forced_csv(report))
    else:
        out.write(forced_text(report))


def _cmd_compare(args, out) -> None:
    a, b = parse_generator(args.a), parse_generator(args.b)
    res = forces_pair(a, b)
    hint = None
    if a.family is b.family:
        if a.family is Family.STAR:
            hint = sufficient_order_check(Mode.STAR_PAIR, a.q, b.q)
        elif a.family is Family.MAXIMAL:
            hint = sufficient_order_check(Mode.MAXIMAL_PAIR, a.decoration, b.decoration)
        elif len(a.qs) == len(b.qs):
            hint = sufficient_order_check(Mode.PLIST_COMBINATORICS, a.qs, b.qs)
    if args.format == "json":
        d = {"a": a.as_dict(), "b": b.as_dict(), "forces": res.avoids}
        if not res.avoids:
            d["witness"] = res.witness.as_dict()
            d["rect_index"] = res.rect_index
        d["sufficient_check"] = hint.value if hint else None
        out.write(dumps(d))
        return
    if res.avoids:
        out.write(f"{a.label()} forces {b.label()}\n")
    else:
        out.write(
            f"{a.label()} does not force {b.label()}: orbit meets rectangle "
            f"{res.rect_index} at {res.witness}\n"
        )
    if hint is not None:
        out.write(f"order criterion: {hint.value}\n")


def _cmd_verify(args, out) -> None:
    cfg = RunConfig("verify", _spec(args), bound=args.bound)
    region = region_of(_generator(args))
    rows = []
    for i, r in enumerate(region):
        # later P-list domains are pruning domains for the map already pruned by earlier ones
        excluded = PruningRegion(region.rectangles[:i]) if i else None
        rows.append((i, r, verify_pruning_domain(r, excluded, cfg.bound)))
    if args.format == "json":
        out.write(dumps([{"index": i, "rectangle": r.as_dict(), **v.as_dict()} for i, r, v in rows]))
        return
    for i, r, v in rows:
        line = f"[{i}] {r.provenance}: {v.status.value} after {v.steps} steps"
        if v.witness is not None:
            line += f" (n={v.n}, {v.side.value} side, witness {v.witness})"
        out.write(line + "\n")
        for note in v.notes:
            out.write(f"    note: {note}\n")


def _cmd_limiting(args, out) -> None:
    pl = limiting_structure(parse_rational(s) for s in args.qs.split(",") if s.strip())
    if args.format == "json":
        out.write(dumps(pl.as_dict()))
        return
    out.write("limiting: " + " ".join(f"C{i}" for i in sorted(pl.limiting)) + "\n")
    for i, j in sorted(pl.successor.items()):
        out.write(f"  C{i} -> " + (f"C{j}" if j <= pl.n else "sentinel") + "\n")
    out.write("P-list\n" if pl.is_plist else f"not a P-list: {pl.violation}\n")


def _cmd_plot(args, out) -> None:
    cfg = RunConfig("plot", _spec(args), max(args.max_period, 1), "text", args.size, args.depth, args.out)
    g = _generator(args)
    region = region_of(g)
    points = []
    if args.max_period:
        points = report_points(forced_periodic(region, cfg.max_period))
    svg = emit_svg(region, points, cfg)
    try:
        Path(cfg.out).write_text(svg, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {cfg.out}: {e}") from e
    out.write(f"wrote {cfg.out}\n")


COMMANDS = {
    "nbt": _cmd_nbt,
    "maximal-check": _cmd_maximal,
    "region": _cmd_region,
    "forced": _cmd_forced,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
    "limiting": _cmd_limiting,
    "plot": _cmd_plot,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        COMMANDS[args.cmd](args, out)
    except (ValueError, UsageError) as e:
        err.write(f"hsforce: error: {e}\n")
        return 2
    except Exception as e:  # noqa: BLE001
        err.write(f"hsforce: internal error: {e!r}\n")
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
