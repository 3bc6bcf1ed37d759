"""Static SVG rendering of envelopes and summed envelopes for one scenario."""

from __future__ import annotations

import csv
import io
from xml.sax.saxutils import escape

from .aggregate import AnalysisResult
from .envelope import build_inner, build_outer

WIDTH, HEIGHT = 800, 500
PAD_LEFT, PAD_RIGHT, PAD_TOP, PAD_BOTTOM = 60, 170, 20, 40
COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def plot_series(result: AnalysisResult) -> dict:
    """Polylines to draw, keyed by series name, as lists of ``(t, v)``.

    Every attacker contributes its outer and inner envelope.  The summed
    envelopes are added when there is more than one attacker; for a single
    attacker they coincide with its own envelopes.
    """
    series = {}
    for att in result.attackers:
        for env in (build_outer(att), build_inner(att)):
            series[f"A{att.index} {env.kind}"] = [(vx.t, vx.v) for vx in env.vertices]
    if len(result.attackers) > 1:
        for label, env in (("E_max", result.e_max), ("E_min", result.e_min)):
            series[label] = [(float(t), float(v)) for t, v in zip(env.times, env.total)]

    lo = min(t for pts in series.values() for t, _ in pts)
    hi = max(t for pts in series.values() for t, _ in pts)
    # pad with the zero level so every trace spans the same axis
    for name, pts in series.items():
        if pts[0][0] > lo:
            pts.insert(0, (lo, 0.0))
        if pts[-1][0] < hi:
            pts.append((hi, 0.0))
    return series


def markers(result: AnalysisResult) -> list:
    return [(t, result.signed_peak) for t in result.t_star_all]


def series_csv(series: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("series", "t", "V"))
    for name, pts in series.items():
        for t, v in pts:
            writer.writerow((name, f"{t:.9g}", f"{v:.9g}"))
    return buf.getvalue()


def _scale(lo, hi, out_lo, out_hi):
    if hi - lo <= 0:
        lo, hi = lo - 1.0, hi + 1.0
    margin = 0.05 * (hi - lo)
    lo, hi = lo - margin, hi + margin
    return lambda x: out_lo + (x - lo) / (hi - lo) * (out_hi - out_lo)


def render_svg(result: AnalysisResult, title: str = "", units=("ns", "V")) -> str:
    series = plot_series(result)
    marks = markers(result)
    ts = [t for pts in series.values() for t, _ in pts]
    vs = [v for pts in series.values() for _, v in pts] + [0.0]
    x = _scale(min(ts), max(ts), PAD_LEFT, WIDTH - PAD_RIGHT)
    y = _scale(min(vs), max(vs), HEIGHT - PAD_BOTTOM, PAD_TOP)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<title>{escape(title)}</title>')
    x0, x1 = PAD_LEFT, WIDTH - PAD_RIGHT
    y0, y1 = HEIGHT - PAD_BOTTOM, PAD_TOP
    out.append('<g class="axes" stroke="black" stroke-width="1">')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    out.append(f'<line x1="{x0}" y1="{y(0.0):.2f}" x2="{x1}" y2="{y(0.0):.2f}" stroke-dasharray="3,3" stroke="#999"/>')
    out.append("</g>")
    ticks = (
        (x0, y0 + 15, "middle", min(ts)),
        (x1, y0 + 15, "middle", max(ts)),
        (x0 - 5, y1 + 10, "end", max(vs)),
        (x0 - 5, y0, "end", min(vs)),
    )
    for px, py, anchor, value in ticks:
        out.append(f'<text x="{px}" y="{py}" text-anchor="{anchor}">{value:.3g}</text>')
    out.append(f'<text x="{(x0 + x1) / 2}" y="{HEIGHT - 8}" text-anchor="middle">t ({escape(units[0])})</text>')
    out.append(f'<text x="15" y="{(y0 + y1) / 2}" text-anchor="middle" transform="rotate(-90 15 {(y0 + y1) / 2})">V ({escape(units[1])})</text>')

    for k, (name, pts) in enumerate(series.items()):
        color = COLORS[k % len(COLORS)]
        width = 2.5 if name.startswith("E_") else 1.5
        coords = " ".join(f"{x(t):.2f},{y(v):.2f}" for t, v in pts)
        out.append(
            f'<polyline class="series" data-series="{escape(name)}" fill="none" '
            f'stroke="{color}" stroke-width="{width}" points="{coords}"/>'
        )
        ly = PAD_TOP + 15 + 18 * k
        out.append(f'<line x1="{x1 + 15}" y1="{ly - 4}" x2="{x1 + 35}" y2="{ly - 4}" stroke="{color}" stroke-width="{width}"/>')
        out.append(f'<text x="{x1 + 40}" y="{ly}">{escape(name)}</text>')

    for t, v in marks:
        out.append(
            f'<circle class="marker" data-t="{t:.9g}" data-v="{v:.9g}" cx="{x(t):.2f}" cy="{y(v):.2f}" '
            f'r="5" fill="none" stroke="black" stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
