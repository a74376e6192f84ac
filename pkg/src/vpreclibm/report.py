"""Profile + optimized-config analysis: CSV table, SVG bar charts, fusion hints.

The three charts mirror the per-site analysis views: call counts, input
dynamic range, and original-vs-optimized output precision with reference
lines at 23 and 28 bits.  SVG is generated directly so every bar carries its
raw value in a ``data-value`` attribute and the chart group carries the
pixel-per-unit scale, keeping chart geometry checkable against the CSV.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .profiles import (
    CallSiteRecord,
    PrecisionConfig,
    format_hex,
    interval_is_empty,
)

__all__ = ["ReportRow", "build_report", "write_csv", "render_charts", "suggest_sincos"]

P_ORIGINAL = 52


@dataclass
class ReportRow:
    rank: int
    func: str
    site_id: int
    calls: int
    nan_count: int
    inf_count: int
    in0: tuple[float, float]
    in1: tuple[float, float] | None
    out: tuple[float, float]
    in0_dynamic_range: float | None
    in1_dynamic_range: float | None
    out_exponent_span: int | None
    p_original: int
    p_optimized: int
    r_optimized: int
    mode: str


def _endpoint_magnitudes(iv: tuple[float, float]) -> list[float]:
    if interval_is_empty(iv):
        return []
    return [abs(v) for v in iv if v != 0.0 and math.isfinite(v)]


def dynamic_range(iv: tuple[float, float]) -> float | None:
    """log2 span of the nonzero endpoint magnitudes; None when undefined."""
    mags = _endpoint_magnitudes(iv)
    if not mags:
        return None
    return math.log2(max(mags)) - math.log2(min(mags))


def exponent_span(iv: tuple[float, float]) -> int | None:
    mags = _endpoint_magnitudes(iv)
    if not mags:
        return None
    return int(math.floor(math.log2(max(mags))) - math.floor(math.log2(min(mags))))


def build_report(
    records: Sequence[CallSiteRecord],
    config: PrecisionConfig,
    top_n: int = 50,
) -> tuple[list[ReportRow], list[str]]:
    """Top-N rows by call count plus warnings for config/profile mismatches."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    warnings: list[str] = []
    ordered = sorted(records, key=lambda r: (-r.calls, r.site_id))[:top_n]
    profiled_ids = {r.site_id for r in records}

    rows = []
    for rank, rec in enumerate(ordered):
        entry = config.entry_for(rec.site_id)
        if entry is None:
            fmt, mode = config.default_format, "vprec"
        else:
            fmt, mode = entry.fmt, entry.mode
        rows.append(
            ReportRow(
                rank=rank,
                func=rec.func,
                site_id=rec.site_id,
                calls=rec.calls,
                nan_count=rec.nan_count,
                inf_count=rec.inf_count,
                in0=rec.in0,
                in1=rec.in1,
                out=rec.out,
                in0_dynamic_range=dynamic_range(rec.in0),
                in1_dynamic_range=dynamic_range(rec.in1) if rec.in1 is not None else None,
                out_exponent_span=exponent_span(rec.out),
                p_original=P_ORIGINAL,
                p_optimized=fmt.precision_bits,
                r_optimized=fmt.exponent_bits,
                mode=mode,
            )
        )
    for entry in config.entries:
        if entry.site_id not in profiled_ids:
            warnings.append(
                f"config site 0x{entry.site_id:x} ({entry.func}) absent from profile; reported with calls=0"
            )
            rows.append(
                ReportRow(
                    rank=len(rows),
                    func=entry.func,
                    site_id=entry.site_id,
                    calls=0,
                    nan_count=0,
                    inf_count=0,
                    in0=(math.inf, -math.inf),
                    in1=None,
                    out=(math.inf, -math.inf),
                    in0_dynamic_range=None,
                    in1_dynamic_range=None,
                    out_exponent_span=None,
                    p_original=P_ORIGINAL,
                    p_optimized=entry.fmt.precision_bits,
                    r_optimized=entry.fmt.exponent_bits,
                    mode=entry.mode,
                )
            )
    return rows, warnings


_CSV_FIELDS = [
    "rank", "func", "id", "calls", "nan", "inf",
    "in0_min", "in0_max", "in1_min", "in1_max", "out_min", "out_max",
    "in0_dynamic_range", "in1_dynamic_range", "out_exponent_span",
    "p_original", "p_optimized", "r_optimized", "mode",
]


def _iv_cells(iv: tuple[float, float] | None) -> tuple[str, str]:
    if iv is None or interval_is_empty(iv):
        return "", ""
    return format_hex(iv[0]), format_hex(iv[1])


def write_csv(rows: Iterable[ReportRow], fp: TextIO) -> None:
    w = csv.writer(fp, lineterminator="\n")
    w.writerow(_CSV_FIELDS)
    for r in rows:
        in0 = _iv_cells(r.in0)
        in1 = _iv_cells(r.in1)
        out = _iv_cells(r.out)
        w.writerow(
            [
                r.rank,
                r.func,
                f"0x{r.site_id:x}",
                r.calls,
                r.nan_count,
                r.inf_count,
                in0[0], in0[1], in1[0], in1[1], out[0], out[1],
                repr(r.in0_dynamic_range) if r.in0_dynamic_range is not None else "",
                repr(r.in1_dynamic_range) if r.in1_dynamic_range is not None else "",
                r.out_exponent_span if r.out_exponent_span is not None else "",
                r.p_original,
                r.p_optimized,
                r.r_optimized,
                r.mode,
            ]
        )


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 56, 16, 24, 88
_PLOT_H = 240.0
_BAR_SLOT = 22
_BAR_W = 14


def _svg_open(width: float, height: float, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}" font-family="monospace" font-size="10">',
        f'<title>{title}</title>',
        f'<text x="{_MARGIN_L}" y="14" font-size="12">{title}</text>',
    ]


def _axes(lines: list[str], width: float) -> None:
    x0, y0, y1 = _MARGIN_L, _MARGIN_T, _MARGIN_T + _PLOT_H
    lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')
    lines.append(f'<line x1="{x0}" y1="{y1}" x2="{width - _MARGIN_R}" y2="{y1}" stroke="black"/>')


def _x_label(lines: list[str], i: int, label: str) -> None:
    x = _MARGIN_L + i * _BAR_SLOT + _BAR_SLOT / 2
    y = _MARGIN_T + _PLOT_H + 12
    lines.append(
        f'<text x="{x:g}" y="{y:g}" text-anchor="end" transform="rotate(-45 {x:g} {y:g})">{label}</text>'
    )


def _y_tick(lines: list[str], value: float, scale: float, label: str | None = None, color: str = "black") -> None:
    y = _MARGIN_T + _PLOT_H - value * scale
    lines.append(f'<line x1="{_MARGIN_L - 4}" y1="{y:g}" x2="{_MARGIN_L}" y2="{y:g}" stroke="{color}"/>')
    lines.append(
        f'<text x="{_MARGIN_L - 6}" y="{y + 3:g}" text-anchor="end" fill="{color}">{label or f"{value:g}"}</text>'
    )


def _bar_chart(
    labels: list[str],
    values: list[float | None],
    title: str,
    y_max: float,
    unit: str,
    overlay: list[float | None] | None = None,
    overlay_color: str = "#9ed98f",
    reference_lines: Sequence[float] = (),
) -> str:
    n = max(len(labels), 1)
    width = _MARGIN_L + n * _BAR_SLOT + _MARGIN_R
    height = _MARGIN_T + _PLOT_H + _MARGIN_B
    y_max = max(y_max, 1e-9)
    scale = _PLOT_H / y_max
    lines = _svg_open(width, height, title)
    lines.append(f'<g class="plot" data-y-scale="{scale!r}" data-unit="{unit}">')
    _axes(lines, width)
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        _y_tick(lines, y_max * frac, scale)
    for ref in reference_lines:
        y = _MARGIN_T + _PLOT_H - ref * scale
        lines.append(
            f'<line x1="{_MARGIN_L}" y1="{y:g}" x2="{width - _MARGIN_R}" y2="{y:g}" '
            f'stroke="teal" stroke-dasharray="4 3" class="reference" data-value="{ref:g}"/>'
        )
        _y_tick(lines, ref, scale, color="teal")
    series = [(values, "bar", "#7fc8dd", float(_BAR_W), 0.0)]
    if overlay is not None:
        # narrower, offset overlay so the original bars stay visible behind
        series.append((overlay, "bar-optimized", overlay_color, _BAR_W / 2, _BAR_W / 4))
    for vals, cls, color, bar_w, dx in series:
        for i, v in enumerate(vals):
            if v is None:
                continue
            h = v * scale
            x = _MARGIN_L + i * _BAR_SLOT + (_BAR_SLOT - _BAR_W) / 2 + dx
            y = _MARGIN_T + _PLOT_H - h
            lines.append(
                f'<rect class="{cls}" x="{x:g}" y="{y!r}" width="{bar_w:g}" '
                f'height="{h!r}" fill="{color}" data-value="{v!r}"/>'
            )
    for i, lab in enumerate(labels):
        _x_label(lines, i, lab)
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines)


def render_charts(rows: Sequence[ReportRow], out_dir: str) -> dict[str, str]:
    """Write counts, dynamic-range and precision charts; returns name -> path."""
    os.makedirs(out_dir, exist_ok=True)
    labels = [f"{r.rank}_{r.func.upper()}" for r in rows]

    counts = [float(r.calls) for r in rows]
    counts_svg = _bar_chart(
        labels, counts, "libm call counts per call-site", max(counts, default=1.0), "calls"
    )

    ranges = [r.in0_dynamic_range for r in rows]
    max_range = max((v for v in ranges if v is not None), default=1.0)
    range_svg = _bar_chart(
        labels, ranges, "input dynamic range per call-site (log2)", max(max_range, 1.0), "bits"
    )

    originals = [float(r.p_original) for r in rows]
    optimized = [float(r.p_optimized) for r in rows]
    precision_svg = _bar_chart(
        labels,
        originals,
        "output precision per call-site (bits)",
        60.0,
        "bits",
        overlay=optimized,
        reference_lines=(23.0, 28.0),
    )

    paths = {}
    for name, svg in (("counts", counts_svg), ("dynamic_range", range_svg), ("precision", precision_svg)):
        path = os.path.join(out_dir, f"{name}.svg")
        with open(path, "w") as f:
            f.write(svg + "\n")
        paths[name] = path
    return paths


def suggest_sincos(records: Sequence[CallSiteRecord]) -> list[tuple[CallSiteRecord, CallSiteRecord]]:
    """Heuristic sin/cos fusion candidates: equal call counts and identical
    operand intervals suggest both sites consume the same argument stream and
    could be replaced by one sincos call."""
    sins = [r for r in records if r.func == "sin"]
    coss = [r for r in records if r.func == "cos"]
    pairs = []
    for s in sins:
        for c in coss:
            if s.calls == c.calls and not interval_is_empty(s.in0) and s.in0 == c.in0:
                pairs.append((s, c))
    pairs.sort(key=lambda p: (-p[0].calls, p[0].site_id, p[1].site_id))
    return pairs
