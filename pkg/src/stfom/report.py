"""Rendering: ranked CSV table, log-log SVG figure, bounds summary text.

All numeric cells go through format_sig(), which renders a fixed number
of significant figures in plain scientific notation ('2.98e-1', no
exponent padding).  The formatter is idempotent: parsing an emitted cell
and reformatting it reproduces the identical string.  Everything here is
deterministic, so identical inputs yield byte-identical outputs.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Mapping
from xml.sax.saxutils import escape

from .bounds import (
    CAVENDISH_FOM,
    DEFAULT_ANCHORS,
    BoundAnchor,
    ModelId,
    anchored_bound,
    fom_threshold,
    orders_of_improvement,
    si_bound,
)
from .catalog import CATEGORIES, Catalog, RecordFilter, rank, select_for_figure
from .errors import EmptyInputError
from .fom import FomResult
from .formula import format_material
from .quantities import Constants


def format_sig(x: float, sig: int = 3) -> str:
    """Scientific notation with sig significant figures.

    The mantissa rounds half to even; the exponent is written as a bare
    integer ('2.79e11', '2.98e-1').
    """
    mantissa, exponent = f"{x:.{sig - 1}e}".split("e")
    return f"{mantissa}e{int(exponent)}"


TABLE_HEADER = ("reference", "type", "element", "m", "N", "f0",
                "sqrt_sf", "sqrt_sa", "fom")


def emit_table(catalog: Catalog, results: Mapping[str, FomResult]) -> str:
    """CSV of every record's inputs and derived values, best FOM first."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for record in rank(catalog, results, "all"):
        result = results[record.name]
        writer.writerow([
            record.name,
            record.category,
            format_material(record.material),
            format_sig(record.mass_kg),
            format_sig(result.n_nuclei),
            format_sig(record.f0_hz) if record.f0_hz is not None else "",
            format_sig(result.sqrt_sf),
            format_sig(result.sqrt_sa),
            format_sig(result.fom),
        ])
    return out.getvalue()


@dataclass(frozen=True)
class FigurePoint:
    """One record prepared for plotting."""

    name: str
    category: str
    mass_kg: float
    fom: float
    marker: str  # "circle" or "circle-open"
    thermal_fom: float | None = None
    in_figure: bool = True


def build_figure_points(
    catalog: Catalog,
    results: Mapping[str, FomResult],
    k: int = 3,
) -> tuple[FigurePoint, ...]:
    """Figure points for every record; in_figure marks the k best per category.

    Differential measurements get open markers.  A thermal diamond
    accompanies a point only when the measured noise sits well above the
    thermal floor, so the floor is genuinely a separate feature.
    """
    selected = {record.name for record in select_for_figure(catalog, results, k)}
    points = []
    for record in rank(catalog, results, "all"):
        result = results[record.name]
        points.append(FigurePoint(
            name=record.name,
            category=record.category,
            mass_kg=record.mass_kg,
            fom=result.fom,
            marker="circle-open" if record.mode == "differential" else "circle",
            thermal_fom=result.thermal_fom if result.show_thermal_marker else None,
            in_figure=record.name in selected,
        ))
    return tuple(points)


# Fixed log-log frame: mass from 1e-27 to 1e3 kg, FOM from 1e-12 to 1e15.
_X_LOG_MIN, _X_LOG_MAX = -27, 3
_Y_LOG_MIN, _Y_LOG_MAX = -12, 15
_VIEW_W, _VIEW_H = 1080, 620
_PLOT_LEFT, _PLOT_RIGHT = 80.0, 820.0
_PLOT_TOP, _PLOT_BOTTOM = 30.0, 560.0

CATEGORY_COLORS: Mapping[str, str] = {
    "trapped-ion": "#e377c2",
    "atom-interferometry": "#17becf",
    "nanotube": "#1f77b4",
    "nanowire": "#ff7f0e",
    "nanobeam": "#2ca02c",
    "membrane": "#d62728",
    "optical-levitation": "#7f7f7f",
    "magnetic-levitation": "#bcbd22",
    "mesoscopic": "#9467bd",
    "massive": "#8c564b",
}


def _px(mass_kg: float) -> float:
    frac = (math.log10(mass_kg) - _X_LOG_MIN) / (_X_LOG_MAX - _X_LOG_MIN)
    return _PLOT_LEFT + frac * (_PLOT_RIGHT - _PLOT_LEFT)


def _py(fom: float) -> float:
    frac = (math.log10(fom) - _Y_LOG_MIN) / (_Y_LOG_MAX - _Y_LOG_MIN)
    return _PLOT_BOTTOM - frac * (_PLOT_BOTTOM - _PLOT_TOP)


def _attr(text: str) -> str:
    return escape(text, {'"': "&quot;"})


def emit_figure(
    points: tuple[FigurePoint, ...],
    anchors: Mapping[ModelId, BoundAnchor] | None = None,
) -> tuple[str, str]:
    """Render the figure; returns (svg_text, data_text).

    The data text lists one 'name category mass fom marker' line per
    rendered marker, spaces in names replaced by underscores so the
    fields stay whitespace-separated.  Shaded bands mark the FOM ranges
    that would probe each model below its current lower bound; each band
    rect carries its threshold in a data attribute.
    """
    if anchors is None:
        anchors = DEFAULT_ANCHORS
    plotted = sorted(
        (p for p in points if p.in_figure), key=lambda p: (p.fom, p.name)
    )
    if not plotted:
        raise EmptyInputError("no points selected for the figure")

    svg: list[str] = []
    svg.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_VIEW_W} {_VIEW_H}" '
        f'font-family="Helvetica, Arial, sans-serif" font-size="12">'
    )
    svg.append(f'<rect x="0" y="0" width="{_VIEW_W}" height="{_VIEW_H}" fill="white"/>')

    # Shaded bands from the bottom of the frame up to each model's
    # current reach; the wider (discrete) band goes underneath.
    band_styles = {
        ModelId.ULTRA_LOCAL_DISCRETE: ("#c8d8e8", "0.55"),
        ModelId.NON_LOCAL_CONTINUOUS: ("#9fb8cf", "0.55"),
    }
    for model in ModelId:
        anchor = anchors[model]
        threshold = fom_threshold(model, anchor.lower_bound, anchor)
        top = min(max(_py(threshold), _PLOT_TOP), _PLOT_BOTTOM)
        color, opacity = band_styles[model]
        svg.append(
            f'<rect class="band" data-model="{model.value}" '
            f'data-fom-threshold="{format_sig(threshold)}" '
            f'x="{_PLOT_LEFT:.2f}" y="{top:.2f}" '
            f'width="{_PLOT_RIGHT - _PLOT_LEFT:.2f}" '
            f'height="{_PLOT_BOTTOM - top:.2f}" '
            f'fill="{color}" fill-opacity="{opacity}"/>'
        )

    for decade in range(_X_LOG_MIN, _X_LOG_MAX + 1):
        x = _px(10.0 ** decade)
        svg.append(
            f'<line x1="{x:.2f}" y1="{_PLOT_TOP:.2f}" '
            f'x2="{x:.2f}" y2="{_PLOT_BOTTOM:.2f}" '
            f'stroke="#dddddd" stroke-width="0.5"/>'
        )
        if decade % 3 == 0:
            svg.append(
                f'<text x="{x:.2f}" y="{_PLOT_BOTTOM + 16:.2f}" '
                f'text-anchor="middle">1e{decade}</text>'
            )
    for decade in range(_Y_LOG_MIN, _Y_LOG_MAX + 1):
        y = _py(10.0 ** decade)
        svg.append(
            f'<line x1="{_PLOT_LEFT:.2f}" y1="{y:.2f}" '
            f'x2="{_PLOT_RIGHT:.2f}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="0.5"/>'
        )
        if decade % 3 == 0:
            svg.append(
                f'<text x="{_PLOT_LEFT - 8:.2f}" y="{y + 4:.2f}" '
                f'text-anchor="end">1e{decade}</text>'
            )
    svg.append(
        f'<rect x="{_PLOT_LEFT:.2f}" y="{_PLOT_TOP:.2f}" '
        f'width="{_PLOT_RIGHT - _PLOT_LEFT:.2f}" '
        f'height="{_PLOT_BOTTOM - _PLOT_TOP:.2f}" '
        f'fill="none" stroke="black" stroke-width="1"/>'
    )
    svg.append(
        f'<text x="{(_PLOT_LEFT + _PLOT_RIGHT) / 2:.2f}" '
        f'y="{_PLOT_BOTTOM + 38:.2f}" text-anchor="middle">test mass [kg]</text>'
    )
    svg.append(
        f'<text x="22" y="{(_PLOT_TOP + _PLOT_BOTTOM) / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 22 {(_PLOT_TOP + _PLOT_BOTTOM) / 2:.2f})">'
        f'figure of merit [m^2 s^-3]</text>'
    )

    data_lines = ["# name category mass fom marker"]
    for p in plotted:
        color = CATEGORY_COLORS[p.category]
        x, y = _px(p.mass_kg), _py(p.fom)
        if p.marker == "circle-open":
            paint = f'fill="none" stroke="{color}" stroke-width="2"'
        else:
            paint = f'fill="{color}"'
        svg.append(
            f'<circle class="point" data-name="{_attr(p.name)}" '
            f'data-category="{p.category}" data-marker="{p.marker}" '
            f'cx="{x:.2f}" cy="{y:.2f}" r="5" {paint}>'
            f'<title>{escape(p.name)}: {format_sig(p.fom)}</title></circle>'
        )
        data_lines.append(
            f"{p.name.replace(' ', '_')} {p.category} "
            f"{format_sig(p.mass_kg)} {format_sig(p.fom)} {p.marker}"
        )
        if p.thermal_fom is not None:
            ty = _py(p.thermal_fom)
            svg.append(
                f'<path class="thermal-point" data-name="{_attr(p.name)}" '
                f'data-category="{p.category}" data-marker="diamond" '
                f'd="M {x:.2f} {ty - 6:.2f} L {x + 6:.2f} {ty:.2f} '
                f'L {x:.2f} {ty + 6:.2f} L {x - 6:.2f} {ty:.2f} Z" '
                f'fill="none" stroke="{color}" stroke-width="1.5">'
                f'<title>{escape(p.name)} thermal floor: '
                f'{format_sig(p.thermal_fom)}</title></path>'
            )
            data_lines.append(
                f"{p.name.replace(' ', '_')} {p.category} "
                f"{format_sig(p.mass_kg)} {format_sig(p.thermal_fom)} diamond"
            )

    legend_y = _PLOT_TOP + 10
    for category in CATEGORIES:
        if not any(p.category == category for p in plotted):
            continue
        color = CATEGORY_COLORS[category]
        svg.append(
            f'<circle cx="{_PLOT_RIGHT + 24:.2f}" cy="{legend_y:.2f}" r="5" '
            f'fill="{color}"/>'
        )
        svg.append(
            f'<text x="{_PLOT_RIGHT + 36:.2f}" y="{legend_y + 4:.2f}">'
            f'{category}</text>'
        )
        legend_y += 20

    svg.append("</svg>")
    return "\n".join(svg) + "\n", "\n".join(data_lines) + "\n"


def emit_bounds_summary(
    catalog: Catalog,
    results: Mapping[str, FomResult],
    anchors: Mapping[ModelId, BoundAnchor] | None = None,
    constants: Constants | None = None,
    which: RecordFilter = "all",
) -> str:
    """Line-keyed 'key: value' summary of the bounds the catalog implies.

    The conservative entries always come from the best absolute
    measurement on Earth; the best entries honour the requested filter.
    Bounds are computed from the table-precision (3 significant figure)
    figures of merit so every printed line is consistent with the others
    at the precision shown.
    """
    if anchors is None:
        anchors = DEFAULT_ANCHORS
    if constants is None:
        constants = Constants()

    ranked = rank(catalog, results, which)
    if not ranked:
        raise EmptyInputError("no records pass the filter")
    conservative_pool = rank(catalog, results, "absolute-on-earth")

    try:
        baseline_record = catalog.get("Cavendish 1798")
        baseline_fom = results[baseline_record.name].fom
        baseline_name = baseline_record.name
    except KeyError:
        baseline_fom = CAVENDISH_FOM
        baseline_name = "-"

    lines = [
        f"records: {len(catalog)}",
        f"filter: {which}",
        f"baseline_record: {baseline_name}",
        f"baseline_fom: {format_sig(baseline_fom)}",
    ]

    def rounded(value: float) -> float:
        return float(format_sig(value))

    best = ranked[0]
    best_fom = rounded(results[best.name].fom)
    conservative = conservative_pool[0] if conservative_pool else None

    if conservative is not None:
        conservative_fom = rounded(results[conservative.name].fom)
        lines += [
            f"conservative_record: {conservative.name}",
            f"conservative_fom: {format_sig(conservative_fom)}",
            "conservative_orders_vs_baseline: "
            f"{orders_of_improvement(conservative_fom, baseline_fom):.1f}",
        ]
    else:
        lines.append("conservative_record: -")
    lines += [
        f"best_record: {best.name}",
        f"best_fom: {format_sig(best_fom)}",
        "best_orders_vs_baseline: "
        f"{orders_of_improvement(best_fom, baseline_fom):.1f}",
    ]

    for model in ModelId:
        anchor = anchors[model]
        key = model.value
        lines.append(f"{key}.lower_bound: {format_sig(anchor.lower_bound)}")
        if conservative is not None:
            lines += [
                f"{key}.conservative_bound: "
                f"{format_sig(anchored_bound(model, conservative_fom, anchor))}",
                f"{key}.conservative_si_bound: "
                f"{format_sig(si_bound(model, conservative_fom, constants))}",
            ]
        best_bound = anchored_bound(model, best_fom, anchor)
        lines += [
            f"{key}.best_bound: {format_sig(best_bound)}",
            f"{key}.best_si_bound: {format_sig(si_bound(model, best_fom, constants))}",
            f"{key}.best_below_lower_bound: "
            f"{'true' if best_bound < anchor.lower_bound else 'false'}",
        ]
    return "\n".join(lines) + "\n"
