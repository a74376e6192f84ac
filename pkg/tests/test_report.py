import csv
import io
import math
import xml.etree.ElementTree as ET

import pytest

from vpreclibm.formats import FloatFormat
from vpreclibm.profiles import CallSiteRecord, ConfigEntry, PrecisionConfig
from vpreclibm.report import (
    build_report,
    dynamic_range,
    render_charts,
    suggest_sincos,
    write_csv,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def rec(func="sin", site_id=1, calls=100, in0=(-1.0, 1.0), in1=None, out=(-1.0, 1.0), **kw):
    return CallSiteRecord(
        func=func, site_id=site_id, calls=calls, in0=in0, in1=in1, out=out, **kw
    )


def cfg_for(records, p=28, r=8):
    entries = [ConfigEntry(r_.site_id, r_.func, FloatFormat(r, p), "vprec") for r_ in records]
    return PrecisionConfig(FloatFormat(11, 52), entries)


class TestDynamicRange:
    def test_spec_example(self):
        assert dynamic_range((0.5, 8.0)) == 4.0

    def test_all_zero_undefined(self):
        assert dynamic_range((0.0, 0.0)) is None
        assert dynamic_range((math.inf, -math.inf)) is None

    def test_single_nonzero_endpoint(self):
        assert dynamic_range((0.0, 8.0)) == 0.0


class TestBuildReport:
    def test_rows_in_frequency_order(self):
        records = [rec(site_id=i, calls=10 * (i % 3) + i) for i in range(1, 8)]
        rows, warnings = build_report(records, cfg_for(records), top_n=50)
        assert [(-r.calls, r.site_id) for r in rows] == sorted((-r.calls, r.site_id) for r in rows)
        assert not warnings

    def test_top_n_truncates(self):
        records = [rec(site_id=i, calls=100 - i) for i in range(60)]
        rows, _ = build_report(records, cfg_for(records), top_n=50)
        assert len(rows) == 50 and rows[0].calls == 100

    def test_config_site_missing_from_profile_warns(self):
        records = [rec(site_id=1)]
        config = cfg_for(records).with_entry(ConfigEntry(99, "cos", FloatFormat(8, 20), "vprec"))
        rows, warnings = build_report(records, config, top_n=10)
        ghost = [r for r in rows if r.site_id == 99]
        assert len(ghost) == 1 and ghost[0].calls == 0
        assert any("0x63" in w for w in warnings)

    def test_unconfigured_profiled_site_uses_default(self):
        records = [rec(site_id=1)]
        rows, _ = build_report(records, PrecisionConfig(), top_n=10)
        assert rows[0].p_optimized == 52 and rows[0].r_optimized == 11

    def test_top_n_must_be_positive(self):
        with pytest.raises(ValueError):
            build_report([], PrecisionConfig(), top_n=0)


class TestCsv:
    def test_numeric_fields_reparse_exactly(self):
        records = [
            rec(site_id=3, calls=2549, in0=(float.fromhex("-0x1.92p+1"), float.fromhex("0x1.92p+1"))),
            rec(func="atan2", site_id=4, calls=7, in0=(-2.0, 0.5), in1=(0.25, 4.0), out=(-1.5, 1.5)),
        ]
        rows, _ = build_report(records, cfg_for(records), top_n=10)
        buf = io.StringIO()
        write_csv(rows, buf)
        buf.seek(0)
        parsed = list(csv.DictReader(buf))
        assert len(parsed) == 2
        by_id = {p["id"]: p for p in parsed}
        p3 = by_id["0x3"]
        assert int(p3["calls"]) == 2549
        assert float.fromhex(p3["in0_min"]) == float.fromhex("-0x1.92p+1")
        assert float(p3["in0_dynamic_range"]) == 0.0
        p4 = by_id["0x4"]
        assert float.fromhex(p4["in1_max"]) == 4.0
        assert float(p4["in1_dynamic_range"]) == 4.0
        assert int(p4["p_optimized"]) == 28 and int(p4["r_optimized"]) == 8

    def test_empty_fields_for_undefined_ranges(self):
        records = [rec(site_id=1, in0=(0.0, 0.0), out=(0.0, 0.0))]
        rows, _ = build_report(records, cfg_for(records), top_n=5)
        buf = io.StringIO()
        write_csv(rows, buf)
        buf.seek(0)
        row = next(csv.DictReader(buf))
        assert row["in0_dynamic_range"] == "" and row["out_exponent_span"] == ""


def chart_rects(path, cls):
    tree = ET.parse(path)
    return [el for el in tree.iter(SVG_NS + "rect") if el.get("class") == cls]


class TestCharts:
    @pytest.fixture()
    def rows(self):
        records = [
            rec(site_id=1, calls=2549, out=(-1.0, 1.0)),
            rec(func="cos", site_id=2, calls=2549, out=(-1.0, 1.0)),
            rec(func="floor", site_id=3, calls=100, in0=(0.5, 8.0), out=(0.0, 3.0)),
        ]
        config = PrecisionConfig(
            FloatFormat(11, 52),
            [
                ConfigEntry(1, "sin", FloatFormat(4, 28), "vprec"),
                ConfigEntry(2, "cos", FloatFormat(4, 23), "vprec"),
                ConfigEntry(3, "floor", FloatFormat(4, 0), "vprec"),
            ],
        )
        rws, _ = build_report(records, config, top_n=10)
        return rws

    def test_three_charts_written(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        assert set(paths) == {"counts", "dynamic_range", "precision"}
        for p in paths.values():
            ET.parse(p)  # well-formed XML

    def test_bar_heights_carry_raw_values(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        tree = ET.parse(paths["precision"])
        plot = next(g for g in tree.iter(SVG_NS + "g") if g.get("class") == "plot")
        scale = float(plot.get("data-y-scale"))
        optimized = chart_rects(paths["precision"], "bar-optimized")
        assert [float(r.get("data-value")) for r in optimized] == [28.0, 23.0, 0.0]
        for r in optimized:
            assert float(r.get("height")) == float(r.get("data-value")) * scale
        originals = chart_rects(paths["precision"], "bar")
        assert all(float(r.get("data-value")) == 52.0 for r in originals)

    def test_reference_lines_at_23_and_28(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        tree = ET.parse(paths["precision"])
        refs = [
            float(el.get("data-value"))
            for el in tree.iter(SVG_NS + "line")
            if el.get("class") == "reference"
        ]
        assert sorted(refs) == [23.0, 28.0]

    def test_bar_touching_reference_line(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        tree = ET.parse(paths["precision"])
        plot = next(g for g in tree.iter(SVG_NS + "g") if g.get("class") == "plot")
        scale = float(plot.get("data-y-scale"))
        bars = chart_rects(paths["precision"], "bar-optimized")
        bar28 = next(b for b in bars if float(b.get("data-value")) == 28.0)
        line28 = next(
            el for el in tree.iter(SVG_NS + "line")
            if el.get("class") == "reference" and float(el.get("data-value")) == 28.0
        )
        assert math.isclose(float(bar28.get("y")), float(line28.get("y1")), abs_tol=1e-9)
        assert float(bar28.get("height")) == 28.0 * scale

    def test_zero_height_bar_for_p0(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        bars = chart_rects(paths["precision"], "bar-optimized")
        assert any(float(b.get("height")) == 0.0 for b in bars)

    def test_counts_chart_heights_match_calls(self, rows, tmp_path):
        paths = render_charts(rows, str(tmp_path))
        bars = chart_rects(paths["counts"], "bar")
        assert [float(b.get("data-value")) for b in bars] == [2549.0, 2549.0, 100.0]

    def test_empty_table_renders_axes_only(self, tmp_path):
        paths = render_charts([], str(tmp_path))
        for p in paths.values():
            tree = ET.parse(p)
            assert not list(tree.iter(SVG_NS + "rect"))
            assert list(tree.iter(SVG_NS + "line"))  # axes present


class TestSincosSuggestion:
    def test_matching_pair_suggested(self):
        records = [
            rec(func="sin", site_id=1, calls=2549, in0=(-0.3, 0.4)),
            rec(func="cos", site_id=2, calls=2549, in0=(-0.3, 0.4)),
        ]
        pairs = suggest_sincos(records)
        assert len(pairs) == 1
        assert (pairs[0][0].site_id, pairs[0][1].site_id) == (1, 2)

    def test_count_mismatch_not_suggested(self):
        records = [
            rec(func="sin", site_id=1, calls=2549, in0=(-0.3, 0.4)),
            rec(func="cos", site_id=2, calls=2548, in0=(-0.3, 0.4)),
        ]
        assert suggest_sincos(records) == []

    def test_disjoint_intervals_not_suggested(self):
        records = [
            rec(func="sin", site_id=1, calls=2549, in0=(-0.3, 0.4)),
            rec(func="cos", site_id=2, calls=2549, in0=(1.0, 2.0)),
        ]
        assert suggest_sincos(records) == []
