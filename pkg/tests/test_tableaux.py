import pytest
from hypothesis import given
from oracles import hook_length_count, skew_syt_count
from strategies import skew_in_rect, skew_tableau

from realschubert.core_shapes import Rectangle, ShapeError, SkewShape
from realschubert.tableaux import (
    IncreasingTableau,
    StandardSkewTableau,
    concatenate,
    enumerate_standard,
    rotate180,
    skew_cells,
    split,
    superstandard,
)


def test_from_rows_round_trip():
    t = StandardSkewTableau.from_rows([[1, 3], [2]])
    assert t.chain == ((), (1,), (1, 1), (2, 1))
    assert t.rows() == [[1, 3], [2]]
    assert StandardSkewTableau.from_json(t.to_json()) == t


def test_from_rows_skew():
    t = StandardSkewTableau.from_rows([[2], [1]], inner=(1,))
    assert t.inner == (1,) and t.outer == (2, 1)
    assert t.entries == {(2, 1): 1, (1, 2): 2}
    assert str(t) == ". 2\n1"


def test_from_rows_rejects_non_standard():
    with pytest.raises(ShapeError):
        StandardSkewTableau.from_rows([[2, 1]])


def test_superstandard_frozen():
    assert superstandard((3, 1)).rows() == [[1, 2, 3], [4]]
    assert superstandard(()).chain == ((),)


@pytest.mark.parametrize(
    "shape, count",
    [(SkewShape((), (2, 2)), 2), (SkewShape((), (3, 3)), 5), (SkewShape((), (3, 2, 1)), 16),
     (SkewShape((1,), (2, 1)), 2), (SkewShape((2, 1), (3, 3, 1)), 8)],
)
def test_enumerate_standard_counts(shape, count):
    tabs = enumerate_standard(shape)
    assert len(tabs) == count == skew_syt_count(shape.inner, shape.outer)
    assert len(set(tabs)) == count


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 2), (2, 2, 2), (4, 2, 1), (3, 3, 3)])
def test_straight_counts_match_hook_length(lam):
    assert len(enumerate_standard(SkewShape((), lam))) == hook_length_count(lam)


def test_rotate180_frozen():
    t = StandardSkewTableau.from_rows([[1, 2], [3]])
    r = rotate180(t, Rectangle(2, 2))
    assert r.inner == (1,) and r.outer == (2, 2)
    assert r.rows() == [[1], [2, 3]]


def test_concatenate_and_split():
    t = superstandard((2, 2))
    a, b = split(t, [1, 3])
    assert concatenate(a, b) == t
    with pytest.raises(ShapeError):
        split(t, [1, 1])
    with pytest.raises(ShapeError):
        concatenate(b, a)


def test_increasing_tableau_basics():
    k = IncreasingTableau((1,), ((2, 3), (1, 3)))
    assert k.outer == (3, 2)
    assert k.values() == [1, 2, 3, 3]
    with pytest.raises(ShapeError):
        IncreasingTableau((1,), ((2, 3), (1, 2)))
    assert IncreasingTableau.from_json(k.to_json()) == k
    assert IncreasingTableau.from_cells((1,), k.cells) == k
    with pytest.raises(ShapeError):
        IncreasingTableau((), ((1, 1),))
    assert skew_cells(SkewShape((1,), (2, 1))) == [(1, 2), (2, 1)]


@given(skew_tableau())
def test_rotate180_is_an_involution(data):
    rect, t = data
    assert rotate180(rotate180(t, rect), rect) == t


@given(skew_tableau())
def test_entries_increase(data):
    _, t = data
    ent = t.entries
    for (r, c), v in ent.items():
        assert ent.get((r, c + 1), v + 1) > v
        assert ent.get((r + 1, c), v + 1) > v


@given(skew_tableau())
def test_standard_increasing_round_trip(data):
    _, t = data
    assert IncreasingTableau.from_standard(t).to_standard() == t


@given(skew_in_rect())
def test_enumeration_count_matches_recursion(data):
    _, inner, outer = data
    assert len(enumerate_standard(SkewShape(inner, outer))) == skew_syt_count(inner, outer)
