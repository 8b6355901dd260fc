import csv
import io
import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from stfom import (
    Catalog,
    EmptyInputError,
    ExperimentRecord,
    FigurePoint,
    build_figure_points,
    emit_bounds_summary,
    emit_figure,
    emit_table,
    evaluate_catalog,
    format_sig,
    parse_material,
)

# ---------------------------------------------------------------- format_sig

@pytest.mark.parametrize("value, expected", [
    (0.2977854, "2.98e-1"),
    (2.794646e11, "2.79e11"),
    (1.0, "1.00e0"),
    (0.0, "0.00e0"),
    (-0.2977854, "-2.98e-1"),
    (1e100, "1.00e100"),
    (9.999e-13, "1.00e-12"),
])
def test_format_sig_three_figures(value, expected):
    assert format_sig(value) == expected


def test_format_sig_other_precisions():
    assert format_sig(0.1403, 4) == "1.403e-1"
    assert format_sig(math.pi, 6) == "3.14159e0"
    # exact binary ties round half to even
    assert format_sig(0.125, 2) == "1.2e-1"
    assert format_sig(0.375, 2) == "3.8e-1"


@given(st.floats(min_value=1e-30, max_value=1e30),
       st.sampled_from([1.0, -1.0]))
def test_format_sig_idempotent(magnitude, sign):
    once = format_sig(sign * magnitude)
    assert format_sig(float(once)) == once


# ---------------------------------------------------------------- emit_table

def _table_rows(catalog, results):
    text = emit_table(catalog, results)
    return list(csv.reader(io.StringIO(text)))


def test_table_header_and_size(catalog, results):
    text = emit_table(catalog, results)
    assert "\r" not in text and text.endswith("\n")
    rows = _table_rows(catalog, results)
    assert rows[0] == ["reference", "type", "element", "m", "N", "f0",
                       "sqrt_sf", "sqrt_sa", "fom"]
    assert len(rows) == 47


def test_table_first_row_is_best(catalog, results):
    rows = _table_rows(catalog, results)
    assert rows[1] == ["Asenbaum '17", "atom-interferometry", "Rb",
                       "1.44e-19", "1.01e6", "", "7.08e-28", "4.92e-9",
                       "2.45e-11"]


def test_table_known_row_cells(catalog, results):
    rows = _table_rows(catalog, results)
    gisler = next(r for r in rows if r[0] == "Gisler '22")
    assert gisler[3] == "9.30e-15"
    assert gisler[4] == "2.79e11"
    assert gisler[5] == "1.41e6"
    assert gisler[8] == "2.98e-1"
    assert rows[-1][0] == "Cavendish 1798"


def test_table_blank_resonance_cells(catalog, results):
    rows = _table_rows(catalog, results)
    assert sum(1 for r in rows[1:] if r[5] == "") == 4


def test_table_sorted_and_cells_idempotent(catalog, results):
    rows = _table_rows(catalog, results)
    foms = [float(r[8]) for r in rows[1:]]
    assert foms == sorted(foms)
    for row in rows[1:]:
        for cell in row[3:]:
            if cell:
                assert format_sig(float(cell)) == cell


# -------------------------------------------------------------- figure points

def test_points_cover_catalog_and_selection(catalog, results):
    points = build_figure_points(catalog, results, k=3)
    assert len(points) == 46
    assert sum(p.in_figure for p in points) == 29
    open_markers = {p.name for p in points if p.marker == "circle-open"}
    assert open_markers == {
        "Armano '18", "Asenbaum '17", "Biedermann '15", "Hamilton '15"
    }


def test_points_have_no_thermal_floor_without_q_and_t(catalog, results):
    # the reference records quote no temperature or quality factor
    assert all(p.thermal_fom is None for p in
               build_figure_points(catalog, results))


def _thermal_catalog():
    record = ExperimentRecord(
        name="Hot Probe", year=2024, reference="synthetic",
        category="membrane", material=parse_material("Si3N4"),
        mass_kg=1e-9, f0_hz=1e3, sqrt_sf=1e-14, temp_k=300.0, quality=1e7,
    )
    catalog = Catalog((record,))
    return catalog, evaluate_catalog(catalog)


def test_thermal_floor_well_below_measurement_gets_a_marker():
    catalog, results = _thermal_catalog()
    (point,) = build_figure_points(catalog, results, k=1)
    result = results["Hot Probe"]
    assert not result.thermally_limited
    assert result.show_thermal_marker
    assert point.thermal_fom == result.thermal_fom
    assert point.thermal_fom < point.fom / 4


# ----------------------------------------------------------------- emit_figure

def _local(tag):
    return tag.rsplit("}", 1)[-1]


def _svg_elements(svg_text, name):
    root = ET.fromstring(svg_text)
    return [el for el in root.iter() if _local(el.tag) == name]


def _dat_marker_lines(dat_text):
    return [line.split() for line in dat_text.splitlines()
            if line and not line.startswith("#")]


def test_figure_svg_is_wellformed_xml(catalog, results):
    svg, dat = emit_figure(build_figure_points(catalog, results, k=3))
    root = ET.fromstring(svg)
    assert _local(root.tag) == "svg"
    assert root.get("viewBox") == "0 0 1080 620"


def test_figure_markers_match_data_lines(catalog, results):
    svg, dat = emit_figure(build_figure_points(catalog, results, k=3))
    circles = [c for c in _svg_elements(svg, "circle")
               if c.get("class") == "point"]
    lines = _dat_marker_lines(dat)
    assert len(circles) == 29
    assert len(lines) == 29
    assert dat.splitlines()[0] == "# name category mass fom marker"
    for fields in lines:
        assert len(fields) == 5
        assert " " not in fields[0]
        assert fields[4] in ("circle", "circle-open")
    names = {fields[0] for fields in lines}
    assert "Asenbaum_'17" in names
    assert "Gisler_'22" in names
    open_named = {f[0] for f in lines if f[4] == "circle-open"}
    assert open_named == {"Armano_'18", "Asenbaum_'17",
                          "Biedermann_'15", "Hamilton_'15"}


def test_figure_points_carry_metadata(catalog, results):
    svg, _ = emit_figure(build_figure_points(catalog, results, k=3))
    circles = [c for c in _svg_elements(svg, "circle")
               if c.get("class") == "point"]
    by_name = {c.get("data-name"): c for c in circles}
    probe = by_name["Asenbaum '17"]
    assert probe.get("data-category") == "atom-interferometry"
    assert probe.get("data-marker") == "circle-open"
    assert probe.get("fill") == "none"
    filled = by_name["Gisler '22"]
    assert filled.get("data-marker") == "circle"
    assert filled.get("fill") not in (None, "none")


def test_figure_bands_encode_reach_thresholds(catalog, results):
    svg, _ = emit_figure(build_figure_points(catalog, results, k=3))
    bands = [r for r in _svg_elements(svg, "rect") if r.get("class") == "band"]
    assert {b.get("data-model") for b in bands} == {
        "ultra-local-discrete", "non-local-continuous"
    }
    thresholds = {b.get("data-model"): b.get("data-fom-threshold")
                  for b in bands}
    assert thresholds["ultra-local-discrete"] == "2.98e-10"
    assert thresholds["non-local-continuous"] == "2.98e-12"
    for band in bands:
        threshold = float(band.get("data-fom-threshold"))
        frac = (math.log10(threshold) + 12) / 27
        expected_y = 560.0 - frac * 530.0
        assert abs(float(band.get("y")) - expected_y) < 0.5
        assert abs(float(band.get("y")) + float(band.get("height")) - 560.0) < 0.01


def test_figure_renders_thermal_diamond():
    catalog, results = _thermal_catalog()
    svg, dat = emit_figure(build_figure_points(catalog, results, k=1))
    paths = [p for p in _svg_elements(svg, "path")
             if p.get("class") == "thermal-point"]
    assert len(paths) == 1
    assert paths[0].get("data-marker") == "diamond"
    lines = _dat_marker_lines(dat)
    assert [f[4] for f in lines] == ["circle", "diamond"]
    assert lines[0][0] == lines[1][0] == "Hot_Probe"
    assert float(lines[1][3]) < float(lines[0][3])


def test_figure_single_point_is_valid():
    point = FigurePoint(name="solo", category="membrane",
                        mass_kg=1e-9, fom=1.0, marker="circle")
    svg, dat = emit_figure((point,))
    ET.fromstring(svg)
    assert len(_dat_marker_lines(dat)) == 1


def test_figure_rejects_empty_selection():
    point = FigurePoint(name="unused", category="membrane",
                        mass_kg=1e-9, fom=1.0, marker="circle",
                        in_figure=False)
    with pytest.raises(EmptyInputError):
        emit_figure((point,))


# --------------------------------------------------------- emit_bounds_summary

def _summary_map(text):
    entries = {}
    for line in text.splitlines():
        key, _, value = line.partition(": ")
        entries[key] = value
    return entries


def test_summary_lines_are_key_value(catalog, results):
    text = emit_bounds_summary(catalog, results)
    for line in text.splitlines():
        assert ": " in line
        key = line.split(": ", 1)[0]
        assert key == key.strip() and " " not in key


def test_summary_default_content(catalog, results):
    entries = _summary_map(emit_bounds_summary(catalog, results))
    assert entries["records"] == "46"
    assert entries["filter"] == "all"
    assert entries["baseline_record"] == "Cavendish 1798"
    assert entries["baseline_fom"] == "1.00e14"
    assert entries["conservative_record"] == "Gisler '22"
    assert entries["conservative_fom"] == "2.98e-1"
    assert entries["conservative_orders_vs_baseline"] == "14.5"
    assert entries["best_record"] == "Asenbaum '17"
    assert entries["best_fom"] == "2.45e-11"
    assert entries["best_orders_vs_baseline"] == "24.6"


def test_summary_bounds_are_consistent_at_table_precision(catalog, results):
    entries = _summary_map(emit_bounds_summary(catalog, results))
    assert entries["ultra-local-discrete.lower_bound"] == "1.00e-25"
    assert entries["ultra-local-discrete.conservative_bound"] == "1.00e-16"
    assert entries["non-local-continuous.lower_bound"] == "1.00e-35"
    assert entries["non-local-continuous.conservative_bound"] == "1.00e-24"
    assert entries["ultra-local-discrete.conservative_si_bound"] == "4.00e-14"
    assert entries["non-local-continuous.conservative_si_bound"] == "6.69e-26"
    assert entries["ultra-local-discrete.best_bound"] == "8.22e-27"
    assert entries["non-local-continuous.best_bound"] == "8.22e-35"
    assert entries["ultra-local-discrete.best_below_lower_bound"] == "true"
    assert entries["non-local-continuous.best_below_lower_bound"] == "false"


def test_summary_honours_filter(catalog, results):
    entries = _summary_map(
        emit_bounds_summary(catalog, results, which="absolute-on-earth"))
    assert entries["filter"] == "absolute-on-earth"
    assert entries["best_record"] == "Gisler '22"
    assert entries["best_fom"] == entries["conservative_fom"]
    assert (entries["ultra-local-discrete.best_bound"]
            == entries["ultra-local-discrete.conservative_bound"])


def test_summary_baseline_only_catalog(catalog):
    solo = Catalog((catalog.get("Cavendish 1798"),))
    solo_results = evaluate_catalog(solo)
    entries = _summary_map(emit_bounds_summary(solo, solo_results))
    assert entries["records"] == "1"
    assert entries["conservative_record"] == "Cavendish 1798"
    assert entries["best_record"] == "Cavendish 1798"
    assert entries["best_orders_vs_baseline"] == "0.0"
    assert entries["conservative_orders_vs_baseline"] == "0.0"


def test_summary_without_any_absolute_earth_record(catalog):
    differential = Catalog(tuple(
        r for r in catalog if r.mode == "differential"))
    partial = evaluate_catalog(differential)
    entries = _summary_map(emit_bounds_summary(differential, partial))
    assert entries["conservative_record"] == "-"
    assert entries["baseline_record"] == "-"
    assert "ultra-local-discrete.conservative_bound" not in entries
    assert "ultra-local-discrete.best_bound" in entries
    with pytest.raises(EmptyInputError):
        emit_bounds_summary(differential, partial, which="absolute-on-earth")
