from itertools import product

import pytest
from hypothesis import given, strategies as st

from skewschur.errors import EmptySubset, LengthExceeded, NotBasic, NotContained, NotRibbon, ParseError
from skewschur.partition_core import conjugate
from skewschur.skew_shapes import (
    RibbonComposition,
    SkewShape,
    basic_form,
    bullet,
    components,
    conjugate_shape,
    direct_sum,
    format_shape,
    from_cells,
    has_2x2_block,
    is_connected,
    make_skew,
    parse_ribbon,
    parse_shape,
    profiles,
    ribbon_codec,
    ribbon_shape,
    ribbon_subdiagram_stats,
    rotate_pi,
    shape_predicates,
    strip_maximal_blocks,
    v_sequence,
)
from skewschur.verify_harness import enumerate_basic_shapes

SMALL = enumerate_basic_shapes(7, 5, 5)


def test_containment_is_checked():
    with pytest.raises(NotContained):
        make_skew((2, 1), (3,))
    with pytest.raises(NotContained):
        make_skew((2,), (1, 1))


def test_cells_and_profiles():
    shape = make_skew((4, 4, 3), (2,))
    assert shape.size == 9
    assert shape.row_lengths == (2, 4, 3)
    assert shape.column_lengths == (2, 2, 3, 2)
    assert profiles(shape) == ((3, 2, 2, 2), (3, 3, 2, 1))


def test_basic_form_squeezes_empty_rows_and_columns():
    assert basic_form(make_skew((5, 5, 2, 2), (5, 4, 2, 1))) == make_skew((2, 1), (1,))
    assert basic_form(make_skew((4, 3, 3), (3, 1, 1))) == make_skew((3, 2, 2), (2,))
    with pytest.raises(NotBasic):
        make_skew((4, 3, 3), (3, 1, 1)).require_basic()


def test_from_cells_rejects_non_skew_sets():
    assert from_cells({(1, 1), (1, 3)}) == make_skew((2,))  # the empty column is squeezed out
    with pytest.raises(ValueError):
        from_cells({(1, 1), (1, 3), (2, 2)})
    with pytest.raises(ValueError):
        from_cells({(1, 1), (2, 2)})  # a NW-SE diagonal is not a skew shape


def test_components_ordered_north_east_first():
    comps = components(make_skew((5, 5, 2, 2), (4, 2, 1)))
    assert comps == [make_skew((3, 3), (2,)), make_skew((2, 2), (1,))]
    assert components(make_skew((3, 2, 2), (2,))) == [make_skew((1,)), make_skew((2, 2))]


def test_shape_predicates():
    column = shape_predicates(make_skew((1, 1, 1)))
    assert column.vertical_strip and column.ribbon and column.connected
    square = shape_predicates(make_skew((4, 4), (2,)))
    assert square.has_2x2_block and square.connected and not square.ribbon
    assert shape_predicates(make_skew((5, 3, 3, 2), (2, 2, 1))).ribbon
    assert not is_connected(make_skew((5, 3, 2, 2), (2, 2, 1)))
    assert shape_predicates(make_skew((3, 3), (1,))).is_rotated_partition


def test_rotation_examples():
    assert rotate_pi(make_skew((4, 4, 2), (2, 1))) == make_skew((4, 3, 2), (2,))


@pytest.mark.parametrize("shape", SMALL, ids=format_shape)
def test_symmetries_are_involutions_and_move_profiles(shape):
    w, n = profiles(shape)
    assert rotate_pi(rotate_pi(shape)) == shape
    assert conjugate_shape(conjugate_shape(shape)) == shape
    assert profiles(rotate_pi(shape)) == (w, n)
    assert profiles(conjugate_shape(shape)) == (conjugate(n), conjugate(w))


def test_direct_sum_and_bullet():
    total = direct_sum(make_skew((2, 1)), make_skew((1, 1)))
    assert total == make_skew((3, 2, 1, 1), (1, 1))
    assert len(components(total)) == 2
    assert bullet((3, 2, 2), (2, 1, 1), 5) == make_skew((5, 4, 4, 3, 3), (3, 3, 1, 1))
    with pytest.raises(LengthExceeded):
        bullet((1, 1, 1), (1,), 2)


def test_v_sequence_strip_sizes_are_the_top_profile():
    for shape in SMALL:
        seq = v_sequence(shape)
        assert seq.strip_sizes == profiles(shape)[1]
        assert sum(len(s) for s in seq.strips) == shape.size
        assert seq.residuals[-1].size == 0


def test_v_sequence_example():
    seq = v_sequence(make_skew((5, 4, 4, 2, 2, 1, 1), (3, 3, 1)))
    assert seq.strip_sizes == (7, 4, 1)
    assert seq.strips[2] == {(3, 2)}


def test_block_stripping_examples():
    reduced, depth, width = strip_maximal_blocks(make_skew((3, 3, 3, 2), (2,)))
    assert (reduced, depth, width) == (make_skew((3, 2), (2,)), 0, 2)
    _, depth, width = strip_maximal_blocks(make_skew((4, 4, 4, 3), (2,)))
    assert (depth, width) == (1, 2)
    reduced, depth, width = strip_maximal_blocks(make_skew((8, 6, 6, 5), (3, 1, 1)))
    assert (reduced, depth, width) == (make_skew((6, 4, 4, 3), (3, 1, 1)), 2, 0)
    assert strip_maximal_blocks(make_skew((3, 2))).reduced.size == 0


def test_block_lift_restores_the_profiles():
    for shape in SMALL:
        blocks = strip_maximal_blocks(shape)
        w, n = profiles(blocks.reduced) if blocks.reduced.size else ((), ())
        assert (blocks.lift(w), blocks.lift(n)) == profiles(shape)


def test_ribbon_codec_examples():
    r = RibbonComposition((3, 2, 5, 2, 2, 7, 3))
    shape = ribbon_shape(r)
    assert shape.size == 24 and shape.num_rows == 24 - 6
    assert ribbon_codec(shape) == r
    assert ribbon_shape((2, 3)) == make_skew((2, 2, 1, 1), (1,))
    with pytest.raises(NotRibbon):
        ribbon_codec(make_skew((4, 4), (2,)))
    # Unit columns sharing a row make a row segment, so a hook is a column ribbon.
    assert ribbon_codec(make_skew((3, 1))).cols == (1, 1, 2)
    with pytest.raises(NotRibbon):
        RibbonComposition((2, 0, 1))


def test_ribbon_codec_round_trips_exhaustively():
    for s in range(1, 6):
        for cols in product(range(1, 5), repeat=s):
            shape = ribbon_shape(cols)
            assert shape.is_basic and not has_2x2_block(shape) and is_connected(shape)
            assert ribbon_codec(shape).cols == cols


@given(st.lists(st.integers(1, 5), min_size=1, max_size=8))
def test_ribbon_codec_round_trips(cols):
    assert ribbon_codec(ribbon_shape(cols)).cols == tuple(cols)


def test_ribbon_subdiagram_stats():
    r = (6, 2, 2, 2, 2, 7, 6)
    assert ribbon_subdiagram_stats(r, range(1, 8)) == (6, 27 - 6)
    assert ribbon_subdiagram_stats(r, [2, 3, 4, 5]) == (3, 5)
    assert ribbon_subdiagram_stats(r, [1, 3]) == (0, 8)
    with pytest.raises(EmptySubset):
        ribbon_subdiagram_stats(r, [])


def test_text_syntax():
    assert parse_shape("[4,4,2]/[2,1]") == make_skew((4, 4, 2), (2, 1))
    assert parse_shape("[3,2]") == make_skew((3, 2))
    assert parse_shape("ribbon:(3,2)") == ribbon_shape((3, 2))
    assert parse_ribbon("(6,2,7)").cols == (6, 2, 7)
    assert format_shape(make_skew((4, 4, 2), (2, 1))) == "[4,4,2]/[2,1]"
    for bad in ("[2]/[3]", "[2]/[1]/[1]", "4,2", "ribbon:(0,1)"):
        with pytest.raises((ParseError, NotRibbon)):
            parse_shape(bad)


def test_shape_text_round_trip():
    for shape in SMALL:
        assert parse_shape(format_shape(shape)) == shape
        assert isinstance(shape, SkewShape)
