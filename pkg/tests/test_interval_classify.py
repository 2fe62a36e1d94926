from itertools import product

import pytest

from skewschur.errors import HypothesisViolated, NotBasic, OutOfRange
from skewschur.interval_classify import (
    FULL_FAMILIES,
    SYMMETRIES,
    a7_profile_ok,
    apply_symmetry,
    classify_mf,
    classify_product_mf,
    detect_bad_config,
    f1,
    f1_tilde,
    f3,
    f4,
    f4_tilde,
    f5,
    f5_hat,
    f5_tilde,
    f6,
    f7,
    match_full_interval_config,
    pieri_fixture_expansions,
    product_full_interval,
    product_interval,
    product_shape,
    reduce_shape,
    ribbon_deficit_support,
    ribbon_full_support,
    ribbon_hypothesis_holds,
    template_shape,
)
from skewschur.lr_engine import interval_report, ribbon_lr_counts, schur_expansion
from skewschur.partition_core import Partition, conjugate, dominance_interval, partitions_of
from skewschur.skew_shapes import basic_form, make_skew, profiles, ribbon_shape
from skewschur.verify_harness import enumerate_basic_shapes

SMALL = enumerate_basic_shapes(7, 6, 6)


def ribbon_missing(cols):
    w, n = profiles(ribbon_shape(cols))
    support = {conjugate(nu) for nu in ribbon_lr_counts(cols)}
    return [xi for xi in dominance_interval(w, n) if xi not in support]


# -- multiplicity-free ------------------------------------------------------------------


def test_mf_examples():
    assert classify_mf(make_skew((4, 4, 3), (2,))).multiplicity_free
    assert "R0" in classify_mf(make_skew((3, 2))).cases
    # (3,2)/(1) has inner shape (1) and complement (1) in its 3x2 box.
    assert "R4" in classify_mf(make_skew((3, 2), (1,))).cases
    with pytest.raises(NotBasic):
        classify_mf(make_skew((4, 3, 3), (3, 1, 1)))


def test_mf_classifier_agrees_with_the_expansion_on_small_shapes():
    for shape in SMALL:
        assert classify_mf(shape).multiplicity_free == schur_expansion(shape).is_multiplicity_free, shape


def test_product_mf_examples():
    assert "P2" in classify_product_mf((3, 3), (4, 4, 1)).cases
    assert schur_expansion(product_shape((3, 3), (4, 4, 1))).is_multiplicity_free
    assert not classify_product_mf((2, 2, 1), (3, 3, 1)).cases
    assert max(schur_expansion(product_shape((2, 2, 1), (3, 3, 1))).terms.values()) >= 2
    assert classify_product_mf((), (3, 2, 1)).cases == {"P0"}
    assert "P1" in classify_product_mf((4,), (3, 2, 1)).cases


# -- witnesses --------------------------------------------------------------------------


@pytest.mark.parametrize(
    "outer, inner, xi, reason",
    [
        ((4, 3, 3), (3, 1, 1), (3, 1, 1), None),
        ((6, 5, 4, 4, 1), (4, 2, 1), (5, 2, 2, 2, 1, 1), None),
        ((6, 6, 5, 3, 3), (4, 1), (5, 3, 3, 3, 2, 2), None),
        ((4, 3, 3, 3), (2, 1), (4, 4, 1, 1), "same"),
    ],
)
def test_witness_examples(outer, inner, xi, reason):
    shape = basic_form(make_skew(outer, inner))
    witness = detect_bad_config(shape)
    assert witness is not None and witness.xi == xi
    if reason is not None:
        assert witness.reason == reason
    assert xi in interval_report(shape).missing


@pytest.mark.parametrize("shape", SMALL, ids=str)
def test_witnesses_are_missing_from_the_support(shape):
    witness = detect_bad_config(shape)
    report = interval_report(shape)
    if witness is not None:
        assert witness.xi in report.missing
    if not report.missing:
        assert witness is None


# -- full-interval configurations -------------------------------------------------------


def test_config_examples():
    a7 = match_full_interval_config(make_skew((4, 4, 4, 4, 3, 3), (3, 2, 1, 1, 1)))
    assert a7.config == "A7" and a7.params == {"k": 3, "w1": 5}
    a2 = match_full_interval_config(make_skew((7, 7, 4), (6, 2)))
    assert (a2.config, a2.symmetry, a2.params) == ("A2", "pi", {"a": 2, "b": 2, "c": 2, "d": 1})
    assert not match_full_interval_config(make_skew((4, 3, 3, 3), (2, 1))).matched
    assert match_full_interval_config(make_skew((3, 3), (1,))).config == "Partition"
    assert match_full_interval_config(make_skew((3, 2, 2), (1, 1))).config == "A1"


def test_config_matches_list_every_hit_in_order():
    match = match_full_interval_config(make_skew((4, 4, 4, 4, 3, 3), (3, 2, 1, 1, 1)))
    assert match.all_matches[0][0] == match.config
    order = ("Partition", "A1") + tuple(f.name for f in FULL_FAMILIES)
    ranks = [order.index(name) for name, _, _ in match.all_matches]
    assert ranks == sorted(ranks)


@pytest.mark.parametrize("shape", enumerate_basic_shapes(8, 6, 6), ids=str)
def test_matched_templates_reconstruct_the_shape(shape):
    match = match_full_interval_config(shape)
    for name, symmetry, params in match.all_matches:
        if name in ("Partition", "A1"):
            continue
        family = next(f for f in FULL_FAMILIES if f.name == name)
        rebuilt = template_shape(name, dict(zip(family.params, params)))
        assert reduce_shape(rebuilt) == reduce_shape(apply_symmetry(shape, symmetry))


def test_a7_profile_and_structure_agree():
    for k in range(1, 5):
        for w1 in range(k + 2, 8):
            shape = f7(k, w1)
            assert profiles(shape)[0] == (w1, k + 1, k + 1, 1)
            assert a7_profile_ok(shape)
            assert match_full_interval_config(shape).config == "A7"


def test_a7_profile_rejects_near_misses():
    assert not a7_profile_ok(make_skew((4, 4, 4, 3), (3, 2, 1)))
    assert not a7_profile_ok(make_skew((2, 2)))


def test_config_support_counts():
    for b, y in product(range(1, 5), repeat=2):
        assert len(schur_expansion(f3(1, b, 1, y)).terms) == 5
    for a, y in product(range(2, 5), range(1, 5)):
        assert len(schur_expansion(f4(a, 1, y)).terms) == 3
    for a, x in product(range(1, 5), repeat=2):
        assert len(schur_expansion(f6(a, 1, x, 1)).terms) == 3


def test_a4_middle_partition():
    # With a >= 2 and x = 1 the interval is w < (y+1, 2, 1^(a-1)) < n.
    for a, y in product(range(2, 5), range(1, 5)):
        report = interval_report(f4(a, 1, y))
        assert not report.missing and len(report.interval) == 3
        assert Partition([y + 1, 2] + [1] * (a - 1)) in report.interval


R = range(0, 5)


def _never_full(shapes):
    shapes = list(shapes)
    assert shapes
    for shape in shapes:
        assert interval_report(shape).missing, shape


def test_f5_family_is_never_full():
    _never_full(f5(a, b, x, y) for a, b, x, y in product(R, repeat=4) if a >= 2 and x >= 2)


def test_f5_tilde_is_never_full_once_x_is_at_least_2():
    _never_full(f5_tilde(a, x, y, z) for a, x, y, z in product(R, repeat=4) if a >= 2 and x >= 2 and z >= 1)


def test_f5_tilde_with_a_single_top_row_can_be_full():
    full = [
        (a, y, z)
        for a, y, z in product(range(2, 5), R, range(1, 5))
        if not interval_report(f5_tilde(a, 1, y, z)).missing
    ]
    assert len(full) == 42
    assert (2, 0, 1) in full  # (5,4,1)/(3)


def test_f5_hat_is_never_full_away_from_the_pieri_corner():
    _never_full(
        f5_hat(a, b, c, x)
        for a, b, c, x in product(R, repeat=4)
        if x >= 2 and c >= 1 and (b >= 1 and a >= 1 or b == 0 and a >= 2 and a + c >= 3)
    )


def test_f5_hat_with_one_cell_below_is_a_pieri_product():
    # b = 0, a = 1 splits off a single cell: s_1 times a rotated hook.
    for c, x in product(range(2, 5), range(2, 5)):
        assert not interval_report(f5_hat(1, 0, c, x)).missing


def test_f4_tilde_and_f1_are_never_full():
    _never_full(f4_tilde(a, b, x) for a, b, x in product(R, repeat=3) if b >= 1 and a >= 2 and x >= 2)
    _never_full(f1(a, x) for a, x in product(R, repeat=2) if a >= 2 and x >= 2)
    _never_full(f1_tilde(a, x) for a, x in product(R, repeat=2) if a >= 2 and x >= 2)


def test_f1_support_is_the_two_endpoints():
    for a, x in product(range(2, 5), repeat=2):
        report = interval_report(f1(a, x))
        assert set(report.interval) - set(report.missing) == {report.w, report.n}


# -- ribbons ------------------------------------------------------------------------------


def test_ribbon_examples():
    verdict = ribbon_full_support((6, 2, 2, 2, 2, 7, 6))
    assert not verdict.full and verdict.witness.xi == (8, 7, 6, 6)
    assert verdict.witness.subset_s == {2, 3, 4, 5} and verdict.witness.subset_b == {6, 7}
    assert ribbon_full_support((3, 2, 5, 2, 2, 7, 3)).full
    assert ribbon_full_support((3, 2, 4, 2, 2, 7, 3)).full


def test_ribbon_hypothesis():
    assert ribbon_hypothesis_holds((1, 2, 1))
    assert not ribbon_hypothesis_holds((3, 1, 3))
    assert not ribbon_hypothesis_holds((2, 3))
    for bad in ((3, 1, 3), (2, 3)):
        with pytest.raises(HypothesisViolated):
            ribbon_full_support(bad)
        with pytest.raises(HypothesisViolated):
            ribbon_deficit_support(bad)


def test_three_column_ribbons():
    for r1, r2, r3 in product(range(1, 7), range(2, 7), range(1, 7)):
        missing = ribbon_missing((r1, r2, r3))
        assert bool(missing) == (r1 >= r2 + r3 or r3 >= r1 + r2)
        if r1 >= r2 + r3:
            assert (r1, r2 + r3) in missing
        if r3 >= r1 + r2:
            assert (r3, r1 + r2) in missing
        assert ribbon_full_support((r1, r2, r3)).full == (not missing)


def test_ribbon_witnesses_are_missing():
    for s in range(3, 6):
        for cols in product(range(1, 5), repeat=s):
            if not ribbon_hypothesis_holds(cols):
                continue
            verdict = ribbon_full_support(cols)
            if not verdict.full:
                assert verdict.witness.xi in ribbon_missing(cols)


def test_six_column_ribbon_missing_a_three_part_partition():
    # Two long end columns share the spare boxes; no single column can take them all.
    cols = (5, 2, 2, 2, 2, 5)
    assert (6, 6, 6) in ribbon_missing(cols)
    verdict = ribbon_deficit_support(cols)
    assert not verdict.full and verdict.witness.xi == (6, 6, 6)


def test_deficit_criterion_matches_the_oracle():
    for s in range(3, 6):
        for cols in product(range(1, 5), repeat=s):
            if not ribbon_hypothesis_holds(cols):
                continue
            missing = ribbon_missing(cols)
            verdict = ribbon_deficit_support(cols)
            assert verdict.full == (not missing), cols
            if missing:
                assert verdict.witness.xi in missing
            if not ribbon_full_support(cols).full:
                assert not verdict.full


# -- products ------------------------------------------------------------------------------


def _product_oracle(mu, nu):
    terms = schur_expansion(product_shape(mu, nu)).terms
    full = set(terms) == set(product_interval(mu, nu))
    return full, max(terms.values()) == 1


PARTS = [p for n in range(6) for p in partitions_of(n)]


def test_product_full_interval_matches_the_oracle():
    for mu in PARTS:
        for nu in PARTS:
            if not mu and not nu:
                continue
            full, mf = _product_oracle(mu, nu)
            verdict = product_full_interval(mu, nu)
            assert verdict.full == full, (mu, nu)
            assert verdict.mf == mf
            assert (verdict.case in ("a", "b", "c", "c'")) == (full and mf), (mu, nu)


def test_product_cases():
    assert product_full_interval((), (3, 1)).case == "a"
    assert product_full_interval((1, 1), (1, 1, 1)).case == "b"
    assert product_full_interval((1, 1), (2, 1, 1)).case == "c"
    assert product_full_interval((2,), (3, 1)).case == "c'"
    assert product_full_interval((3, 1), (3, 1)).case == "hook-pair"
    assert product_full_interval((3, 1), (4, 1)).case == "hook-pair"
    assert product_full_interval((2, 1, 1), (2, 1, 1, 1)).case == "hook-pair"
    assert product_full_interval((2, 1), (3, 1, 1)).case == "hook-pair"
    assert not product_full_interval((3, 1), (5, 1)).full


def test_product_shape_expansion_is_the_product():
    assert schur_expansion(product_shape((1,), (1,))).terms == {(2,): 1, (1, 1): 1}
    assert set(product_interval((2,), (1,))) == {(2, 1), (3,)}


def _fixture_sweep():
    for x, y in product(range(1, 5), repeat=2):
        if x >= y:
            yield "b", {"x": x, "y": y}, [1] * x, [1] * y
            yield "b'", {"x": x, "y": y}, [x], [y]
    for x, y in product(range(1, 5), range(0, 5)):
        if x <= y + 1:
            yield "c", {"x": x, "y": y}, [1] * x, [2] + [1] * y
    for x, z in product(range(1, 5), repeat=2):
        if x <= z:
            yield "c'", {"x": x, "z": z}, [x], [z, 1]
    for a, y in product(range(3, 6), range(1, 5)):
        yield "d", {"a": a, "y": y}, [a] + [1] * y, [1]
    for a, z in product(range(2, 6), range(1, 5)):
        yield "d'", {"a": a, "z": z}, [z] + [1] * a, [1]


@pytest.mark.parametrize("case, params, mu, nu", list(_fixture_sweep()))
def test_pieri_fixtures(case, params, mu, nu):
    fixture = pieri_fixture_expansions(case, **params)
    oracle = schur_expansion(product_shape(mu, nu))
    assert fixture.terms == oracle.terms
    assert set(fixture.terms) == set(product_interval(mu, nu))


def test_pieri_fixture_ranges():
    assert pieri_fixture_expansions("a", nu=(3, 1)).terms == {(3, 1): 1}
    for case, params in (("b", {"x": 1, "y": 2}), ("c", {"x": 3, "y": 1}), ("c'", {"x": 3, "z": 2}),
                         ("d", {"a": 2, "y": 1}), ("d'", {"a": 1, "z": 1}), ("e", {})):
        with pytest.raises(OutOfRange):
            pieri_fixture_expansions(case, **params)


def test_symmetries_preserve_the_support_up_to_conjugation():
    for shape in enumerate_basic_shapes(6, 5, 5):
        support = schur_expansion(shape).support
        for symmetry in SYMMETRIES:
            image = schur_expansion(apply_symmetry(shape, symmetry)).support
            if symmetry in ("conj", "pi-conj"):
                image = {conjugate(p) for p in image}
            assert image == support
