from math import comb

import pytest
from hypothesis import given
from strategies import rect_and_partition, rects, skew_in_rect

from realschubert.core_shapes import (
    BOX,
    Rectangle,
    ShapeError,
    SkewShape,
    add_box,
    added_box,
    complement,
    conjugate,
    contains,
    enumerate_partitions,
    format_partition,
    horizontal_strips,
    intermediates,
    is_horizontal_strip,
    is_rectangular,
    is_vertical_strip,
    one_box_extensions,
    one_box_removals,
    parse_partition,
    parse_partitions,
    partition,
    size,
    skew_boxes,
)


def test_partition_normalizes_trailing_zeros():
    assert partition([3, 1, 0, 0]) == (3, 1)
    assert partition([]) == ()


@pytest.mark.parametrize("bad", [[1, 2], [2, -1]])
def test_partition_rejects_malformed(bad):
    with pytest.raises(ShapeError):
        partition(bad)


def test_rectangle_basics():
    r = Rectangle(3, 5)
    assert (r.area, r.full, r.n) == (15, (5, 5, 5), 8)
    assert Rectangle.parse("3x5") == r
    assert Rectangle.from_json(r.to_json()) == r
    with pytest.raises(ShapeError):
        Rectangle(0, 2)


@pytest.mark.parametrize(
    "lam, rect, want",
    [
        ((2, 1), Rectangle(3, 5), (5, 4, 3)),
        ((3, 2), Rectangle(3, 5), (5, 3, 2)),
        ((), Rectangle(2, 2), (2, 2)),
        ((2, 2), Rectangle(2, 2), ()),
        ((3, 1, 1), Rectangle(4, 4), (4, 3, 3, 1)),
    ],
)
def test_complement_frozen(lam, rect, want):
    assert complement(lam, rect) == want


def test_complement_rejects_oversize():
    with pytest.raises(ShapeError):
        complement((3,), Rectangle(2, 2))


def test_one_box_extensions_frozen():
    assert one_box_extensions((2, 1), (3, 3, 3)) == [(3, 1), (2, 2), (2, 1, 1)]
    assert one_box_extensions((), (1,)) == [BOX]
    assert one_box_removals((2, 2, 1)) == [(2, 1, 1), (2, 2)]


def test_added_box_and_add_box():
    assert added_box((2, 1), (2, 2)) == (2, 2)
    assert add_box((2, 1), (3, 1)) == (2, 1, 1)
    with pytest.raises(ShapeError):
        added_box((2,), (3, 1))
    with pytest.raises(ShapeError):
        add_box((1,), (2, 2))


def test_strips_and_conjugate():
    assert is_horizontal_strip((2, 1), (3, 2))
    assert not is_horizontal_strip((1,), (2, 2))
    assert is_vertical_strip((1,), (1, 1, 1)) and not is_vertical_strip((1,), (2, 2))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert is_rectangular((2, 2)) and not is_rectangular((2, 1))
    assert sorted(horizontal_strips((1,), 2, (3, 3))) == [(2, 1), (3,)]
    assert intermediates((1,), (2, 1)) == [(2,), (1, 1)]


@pytest.mark.parametrize("rect, count", [(Rectangle(2, 2), 6), (Rectangle(3, 4), 35), (Rectangle(1, 3), 4)])
def test_enumerate_partitions_counts(rect, count):
    parts = enumerate_partitions(rect)
    assert len(parts) == count == comb(rect.rows + rect.cols, rect.rows)
    assert parts == sorted(parts, key=lambda p: (size(p), p))


def test_enumerate_partitions_single_row():
    assert enumerate_partitions(Rectangle(1, 3)) == [(), (1,), (2,), (3,)]


def test_parse_and_format_round_trip():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("()") == ()
    assert format_partition((3, 1)) == "3,1"
    assert parse_partitions("2;2,1;3,1") == ((2,), (2, 1), (3, 1))
    with pytest.raises(ShapeError):
        parse_partition("a,b")


def test_skew_shape_json_and_boxes():
    s = SkewShape((1,), (2, 1))
    assert s.size == 2
    assert s.boxes() == skew_boxes((1,), (2, 1)) == [(1, 2), (2, 1)]
    assert SkewShape.from_json(s.to_json()) == s
    with pytest.raises(ShapeError):
        SkewShape((2,), (1, 1))


@given(rect_and_partition())
def test_complement_is_an_involution(data):
    rect, lam = data
    assert complement(complement(lam, rect), rect) == lam
    assert size(lam) + size(complement(lam, rect)) == rect.area


@given(rect_and_partition())
def test_extensions_grow_by_one_inside_bound(data):
    rect, lam = data
    for mu in one_box_extensions(lam, rect.full):
        assert contains(rect.full, mu) and size(mu) == size(lam) + 1
        assert lam in one_box_removals(mu)


@given(rect_and_partition())
def test_conjugate_is_an_involution(data):
    _, lam = data
    assert conjugate(conjugate(lam)) == lam


@given(skew_in_rect())
def test_skew_boxes_count(data):
    _, inner, outer = data
    assert len(skew_boxes(inner, outer)) == size(outer) - size(inner)


@given(rects)
def test_full_rectangle_complements_to_empty(rect):
    assert complement(rect.full, rect) == ()
