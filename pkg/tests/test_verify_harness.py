from itertools import product

from skewschur.lr_engine import interval_report, ribbon_lr_counts
from skewschur.partition_core import Partition, conjugate
from skewschur.skew_shapes import SkewShape, format_shape
from skewschur.verify_harness import (
    SCANS,
    cross_validate_main,
    cross_validate_product_mf,
    cross_validate_ribbon,
    enumerate_basic_shapes,
    ribbon_compositions,
)


def _brute_basic_shapes(max_size, max_rows, max_cols):
    def partitions_in_box(rows, cols):
        def rec(prefix):
            yield Partition(prefix)
            if len(prefix) < rows:
                top = prefix[-1] if prefix else cols
                for part in range(1, top + 1):
                    yield from rec(prefix + [part])

        return list(rec([]))

    found = set()
    boxes = partitions_in_box(max_rows, max_cols)
    for outer in boxes:
        for inner in boxes:
            if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
                continue
            shape = SkewShape(outer, inner)
            if 0 < shape.size <= max_size and shape.is_basic:
                found.add(shape)
    return found


def test_enumeration_tiny_bounds():
    assert [format_shape(s) for s in enumerate_basic_shapes(2, 2, 2)] == ["[1]", "[1,1]", "[2]", "[2,1]/[1]"]
    assert [format_shape(s) for s in enumerate_basic_shapes(1, 5, 5)] == ["[1]"]


def test_enumeration_golden_count():
    assert len(enumerate_basic_shapes(6, 6, 6)) == 400


def test_enumeration_is_exhaustive_and_duplicate_free():
    for bounds in ((6, 4, 4), (7, 3, 5), (5, 5, 2)):
        shapes = enumerate_basic_shapes(*bounds)
        assert len(shapes) == len(set(shapes))
        assert set(shapes) == _brute_basic_shapes(*bounds)


def _stable(report):
    data = report.to_json()
    data.pop("elapsed_seconds")
    return data


def test_reports_are_deterministic_and_versioned():
    first, second = cross_validate_main(6, 4, 4), cross_validate_main(6, 4, 4)
    assert _stable(first) == _stable(second)
    data = first.to_json()
    assert data["schema"] == 1 and data["scan"] == "main"
    assert data["checked"] == len(enumerate_basic_shapes(6, 4, 4))
    assert "disagreements" in first.to_table()


def test_trivial_bounds():
    report = cross_validate_main(1, 1, 1)
    assert report.ok and report.checked == 1


def test_main_scan_at_size_10():
    report = cross_validate_main(10, 8, 8)
    assert report.checked == 32200
    assert report.ok, report.disagreements[:5]
    assert report.stats["oracle_mf_and_full"] == 1021


def test_main_scan_on_narrow_tall_shapes():
    report = cross_validate_main(16, 6, 4)
    assert report.ok, report.disagreements[:5]
    assert report.stats["config:A7"] == 18


def test_disabling_a_configuration_is_noticed():
    report = cross_validate_main(16, 6, 4, disabled_configs=["A7"])
    shapes = {d["shape"] for d in report.disagreements}
    assert "[4,4,4,4,3,3]/[3,2,1,1,1]" in shapes
    assert all(d["oracle_full"] for d in report.disagreements)


def test_product_mf_scan_small():
    report = cross_validate_product_mf(4)
    assert report.ok
    assert report.stats["mf"] + report.stats.get("not_mf", 0) == report.checked


def test_ribbon_compositions_respect_the_hypothesis():
    comps = ribbon_compositions(4, 3)
    assert (1, 2, 1) in comps and (3, 1, 3) not in comps
    assert all(len(c) >= 3 and min(c[1:-1]) >= 2 for c in comps)
    expected = sum(1 for s in (3, 4) for c in product(range(1, 4), repeat=s) if min(c[1:-1]) >= 2)
    assert len(comps) == expected


def test_ribbon_scan_up_to_five_columns():
    report = cross_validate_ribbon(5, 5)
    assert report.ok, report.disagreements[:5]
    assert report.checked == 2100


def test_ribbon_examples_on_the_oracle_side():
    missing_example = (6, 2, 2, 2, 2, 7, 6)
    assert conjugate(Partition((8, 7, 6, 6))) not in ribbon_lr_counts(missing_example)
    assert conjugate(Partition((8, 7, 7, 1))) in ribbon_lr_counts((3, 2, 4, 2, 2, 7, 3))
    assert conjugate(Partition((8, 8, 8))) in ribbon_lr_counts((3, 2, 5, 2, 2, 7, 3))


def test_scan_registry():
    assert set(SCANS) == {"main", "mf", "product-mf", "ribbon"}


def test_interval_report_agrees_with_scan_counts():
    report = cross_validate_main(5, 5, 5)
    full = sum(1 for s in enumerate_basic_shapes(5, 5, 5) if not interval_report(s).missing)
    assert report.stats["oracle_full"] == full
