"""Serialisation of regions and forcing reports: JSON, CSV, text and SVG."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .forcing import ForcingReport
from .orbits import PERIOD_CAP, orbit_points, period_cap
from .regions import PruningRegion
from .symbolic import PlanePoint, embed_coordinate

__all__ = ["RunConfig", "dumps", "forced_csv", "forced_text", "region_csv", "region_text", "emit_svg", "report_points"]

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str = "forced"
    generator: str | None = None
    max_period: int = 12
    format: str = "text"
    size: int = 480
    depth: int = 16
    out: str | None = None
    bound: int = 256

    def __post_init__(self) -> None:
        cap = period_cap()
        if not 1 <= self.max_period <= cap:
            raise ValueError(f"--max-period must lie in 1..{cap} (hard cap {PERIOD_CAP})")
        if not 8 <= self.depth <= 64:
            raise ValueError("--depth must lie in 8..64")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.size < 16:
            raise ValueError("--size must be at least 16 pixels")
        if self.bound < 1:
            raise ValueError("--bound must be positive")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _writer(buf: io.StringIO):
    return csv.writer(buf, lineterminator="\n")


def forced_csv(report: ForcingReport) -> str:
    buf = io.StringIO()
    w = _writer(buf)
    buf.write("# forced\n")
    w.writerow(["period", "code"])
    for o in report.forced:
        w.writerow([o.period, o.code])
    buf.write("# excluded\n")
    w.writerow(["period", "code", "witness_forward", "witness_backward", "rect_index"])
    for o, p, i in report.excluded:
        w.writerow([o.period, o.code, p.forward, p.backward, i])
    return buf.getvalue()


def forced_text(report: ForcingReport) -> str:
    lines = []
    if report.generator is not None:
        lines.append(f"generator {report.generator.label()}")
    lines.append(f"max period {report.max_period}")
    lines.append(f"forced {len(report.forced)}, excluded {len(report.excluded)}")
    by_period: dict[int, list[str]] = {}
    for o in report.forced:
        by_period.setdefault(o.period, []).append(o.code)
    for n in sorted(by_period):
        lines.append(f"  period {n:2d}: " + " ".join(by_period[n]))
    return "\n".join(lines) + "\n"


def region_csv(region: PruningRegion) -> str:
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["index", "x_min", "x_max", "y_min", "y_max", "provenance"])
    for i, r in enumerate(region):
        w.writerow([i, r.x_min, r.x_max, r.y_min, r.y_max, r.provenance])
    return buf.getvalue()


def region_text(region: PruningRegion) -> str:
    out = []
    for i, r in enumerate(region):
        out.append(f"[{i}] {r.provenance}")
        out.append(f"    {r.x_min} < x < {r.x_max}")
        out.append(f"    {r.y_min} < y < {r.y_max}")
    return "\n".join(out) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def emit_svg(
    region: PruningRegion,
    orbits: Iterable[tuple[PlanePoint, str]] | None = None,
    cfg: RunConfig | None = None,
) -> str:
    """Symbol-plane picture of ``region`` with optional orbit points.

    Axes are ``embed_coordinate`` of the forward (x) and backward (y) tails
    at ``cfg.depth``; ``orbits`` pairs each point with a style class,
    ``"forced"`` or ``"excluded"``.
    """
    cfg = cfg or RunConfig(subcommand="plot")
    size, depth = cfg.size, cfg.depth

    def px(c: Fraction) -> float:
        return float(c) * size

    def py(c: Fraction) -> float:
        return (1 - float(c)) * size

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" data-depth="{depth}">',
        f"<metadata>symbol plane; embed depth {depth}</metadata>",
        "<style>.domain{fill:#c44;fill-opacity:0.35;stroke:#822;stroke-width:1}"
        ".forced{fill:#036}.excluded{fill:#bbb}</style>",
        f'<rect id="frame" x="0" y="0" width="{size}" height="{size}" fill="none" stroke="#000"/>',
    ]
    for i, r in enumerate(region):
        x0, x1 = px(embed_coordinate(r.x_min, depth)), px(embed_coordinate(r.x_max, depth))
        y0, y1 = py(embed_coordinate(r.y_max, depth)), py(embed_coordinate(r.y_min, depth))
        out.append(
            f'<rect id="domain-{i}" class="domain" x="{_fmt(x0)}" y="{_fmt(y0)}" '
            f'width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}"><title>{r.provenance}</title></rect>'
        )
    for k, (p, style) in enumerate(orbits or ()):
        cx, cy = px(embed_coordinate(p.forward, depth)), py(embed_coordinate(p.backward, depth))
        out.append(f'<circle id="pt-{k}" class="{style}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def report_points(report: ForcingReport) -> list[tuple[PlanePoint, str]]:
    """Every point of every enumerated orbit, styled forced/excluded."""
    pts = []
    for o in report.forced:
        pts.extend((p, "forced") for p in orbit_points(o))
    for o, _, _ in report.excluded:
        pts.extend((p, "excluded") for p in orbit_points(o))
    return pts
