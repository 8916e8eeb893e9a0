"""Output rendering: CSV, JSON-friendly dicts, SVG plots, certificate text.

Numbers render with 12 significant digits everywhere, so files produced by
different commands agree on shared quantities.  The SVG writer is a small
hand-rolled line plotter (axes, ticks, legend, optional log scales) kept
free of plotting dependencies on purpose: the plots are diagnostic, and a
deterministic byte-for-byte output is worth more here than styling.
"""

from __future__ import annotations

import math
from dataclasses import asdict, is_dataclass
from typing import Any, Iterable, Sequence

from .invariants import BoundInterval, Certificate
from .stability import AnnulusQuotientReport, SweepRow, TrajectoryPoint


def fmt(x: float) -> str:
    """12 significant digits; the one number format used in every report."""
    return f"{float(x):.12g}"


def format_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0.0:
        return fmt(c.real)
    sign = "+" if c.imag >= 0 else "-"
    return f"{fmt(c.real)}{sign}{fmt(abs(c.imag))}i"


def jsonable(value: Any) -> Any:
    """Recursively convert to JSON-safe data (complex -> string)."""
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [jsonable(v) for v in value]
    return str(value)


def interval_text(interval: BoundInterval) -> str:
    lo = "absent" if interval.lower is None else fmt(interval.lower)
    hi = "absent" if interval.upper is None else fmt(interval.upper)
    tag = " exact" if interval.exact else ""
    return f"[{lo}, {hi}]{tag}"


def _detail_value(v: Any) -> str:
    if isinstance(v, complex):
        return format_complex(v)
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, (list, tuple)):
        return "; ".join(_detail_value(x) for x in v)
    return str(v)


def certificate_block(label: str, interval: BoundInterval) -> str:
    """Key-value text block: the --explain rendering of one interval."""
    lines = [f"{label}: {interval_text(interval)}"]
    if not interval.certificates:
        lines.append("  (no certificates)")
    for i, cert in enumerate(interval.certificates):
        lines.append(f"  certificate[{i}]: {cert.kind}")
        for k, v in cert.detail.items():
            lines.append(f"    {k} = {_detail_value(v)}")
    return "\n".join(lines)


def explain_text(intervals: Sequence[tuple[str, BoundInterval]]) -> str:
    return "\n".join(certificate_block(label, iv) for label, iv in intervals)


# --- CSV ----------------------------------------------------------------------

SWEEP_HEADER = "A,a,sExact,eLower,mUpper"
TRAJECTORY_HEADER = "k,r,bound,certificateKind"


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (fmt(row.A), fmt(row.a), fmt(row.s_exact), fmt(row.e_lower), fmt(row.m_upper))
            )
        )
    return "\n".join(lines) + "\n"


def trajectory_csv(points: Iterable[TrajectoryPoint]) -> str:
    lines = [TRAJECTORY_HEADER]
    for p in points:
        lines.append(f"{p.k},{fmt(p.r)},{fmt(p.bound)},{p.certificate_kind}")
    return "\n".join(lines) + "\n"


def stability_csv(
    s_points: Iterable[TrajectoryPoint], e_points: Iterable[TrajectoryPoint]
) -> str:
    """Both trajectories under one header; certificateKind tells them apart."""
    lines = [TRAJECTORY_HEADER]
    for p in list(s_points) + list(e_points):
        lines.append(f"{p.k},{fmt(p.r)},{fmt(p.bound)},{p.certificate_kind}")
    return "\n".join(lines) + "\n"


# --- SVG ----------------------------------------------------------------------

_PALETTE = ("#1061a8", "#c04a2c", "#3a7a3a", "#7a4a9a", "#9a7a1a")
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 72, 24, 34, 54


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    span = hi - lo
    raw = span / max(count - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    out = []
    t = start
    while t <= hi + 1e-12 * span:
        out.append(t)
        t += step
    return out or [lo]


def line_plot_svg(
    series: Sequence[tuple[str, Sequence[float], Sequence[float]]],
    title: str,
    x_label: str,
    y_label: str,
    log_y: bool = False,
    width: int = 720,
    height: int = 480,
) -> str:
    """Minimal multi-series line plot.

    series is a list of (label, xs, ys); log_y plots log10 of the values
    and labels ticks with powers of ten.
    """
    if not series or any(len(xs) == 0 or len(xs) != len(ys) for _, xs, ys in series):
        raise ValueError("each series needs matching nonempty xs and ys")

    def ty(v: float) -> float:
        if log_y:
            if v <= 0.0:
                raise ValueError(f"log scale needs positive values, got {v}")
            return math.log10(v)
        return v

    all_x = [x for _, xs, _ in series for x in xs]
    all_y = [ty(y) for _, _, ys in series for y in ys]
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo, y_hi = min(all_y), max(all_y)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    plot_w = width - _MARGIN_L - _MARGIN_R
    plot_h = height - _MARGIN_T - _MARGIN_B

    def px(x: float) -> float:
        return _MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return _MARGIN_T + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width/2:.1f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
    ]
    # axes
    x0, y0 = _MARGIN_L, _MARGIN_T + plot_h
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0 + plot_w}" y2="{y0}" stroke="black"/>'
    )
    parts.append(f'<line x1="{x0}" y1="{_MARGIN_T}" x2="{x0}" y2="{y0}" stroke="black"/>')
    for t in _ticks(x_lo, x_hi):
        X = px(t)
        parts.append(f'<line x1="{X:.1f}" y1="{y0}" x2="{X:.1f}" y2="{y0 + 5}" stroke="black"/>')
        parts.append(
            f'<text x="{X:.1f}" y="{y0 + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{t:.6g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        Y = py(t)
        label = f"1e{t:.0f}" if log_y and abs(t - round(t)) < 1e-9 else f"{t:.3g}"
        if log_y and abs(t - round(t)) >= 1e-9:
            label = f"10^{t:.2g}"
        parts.append(f'<line x1="{x0 - 5}" y1="{Y:.1f}" x2="{x0}" y2="{Y:.1f}" stroke="black"/>')
        parts.append(
            f'<text x="{x0 - 8}" y="{Y + 4:.1f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{label}</text>'
        )
    parts.append(
        f'<text x="{x0 + plot_w/2:.1f}" y="{height - 14}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{_MARGIN_T + plot_h/2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 18 {_MARGIN_T + plot_h/2:.1f})">{y_label}</text>'
    )
    # series
    for i, (label, xs, ys) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{px(x):.2f},{py(ty(y)):.2f}" for x, y in zip(xs, ys))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = _MARGIN_T + 16 + 16 * i
        lx = x0 + plot_w - 150
        parts.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{ly}" font-family="sans-serif" font-size="11">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def sweep_svg(rows: Sequence[SweepRow]) -> str:
    xs = [r.A for r in rows]
    return line_plot_svg(
        [
            ("sExact = a", xs, [r.s_exact for r in rows]),
            ("eLower (slit clearance)", xs, [r.e_lower for r in rows]),
            ("mUpper = sExact/eLower", xs, [r.m_upper for r in rows]),
        ],
        title="punctured-disk bounds along a = e^(-A)",
        x_label="A = -log a",
        y_label="value (log scale)",
        log_y=True,
    )


def stability_svg(
    s_points: Sequence[TrajectoryPoint],
    e_points: Sequence[TrajectoryPoint],
    limit: float,
) -> str:
    ks = [p.k for p in s_points]
    return line_plot_svg(
        [
            ("s lower bound on annulus k", ks, [p.bound for p in s_points]),
            ("e lower bound (stable)", [p.k for p in e_points], [p.bound for p in e_points]),
            ("limit |z0|", ks, [limit] * len(ks)),
        ],
        title="bounds along the annulus exhaustion of the punctured disk",
        x_label="exhaustion index k (radius halves each step)",
        y_label="certified lower bound",
        log_y=False,
    )


def annulus_report_text(report: AnnulusQuotientReport) -> str:
    lines = [
        f"annulus inner radius = {fmt(report.inner_radius)}, base point = "
        f"{format_complex(report.z0)}",
        f"  s in [{fmt(report.s_lower)}, "
        + (fmt(report.s_upper) if report.s_upper is not None else "1 (trivial)")
        + "]",
        f"  e in [{fmt(report.e_lower)}, {fmt(report.e_upper)}]",
        f"  m lower = {fmt(report.m_lower)}"
        + (
            f", m upper = {fmt(report.m_upper)}"
            if report.m_upper is not None
            else ", m upper = absent"
        ),
        f"  verdict: {report.verdict}",
        f"  evidence: s bound reaches {fmt(report.evidence[-1].bound)} at r = "
        f"{fmt(report.evidence[-1].r)}, limit {fmt(report.evidence_limit)}, "
        f"converged = {report.evidence_converged}",
    ]
    return "\n".join(lines)
