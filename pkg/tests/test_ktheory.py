import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_lr, grid_of, jdt_rectify
from strategies import skew_tableau

from realschubert.catalog import PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, PIERI_K_ROWS, PIERI_RECT
from realschubert.core_shapes import (
    BOX,
    Rectangle,
    ShapeError,
    SkewShape,
    complement,
    contains,
    enumerate_partitions,
    size,
    skew_boxes,
)
from realschubert.ktheory import (
    bk_swap_pair_counts,
    first_order_triples,
    increasing_tableaux,
    inner_corners,
    k_coeff,
    k_coeff_pieri,
    k_promotion_count,
    k_rectify,
    k_tableaux,
    kjdt_slide,
    lr_coeff,
    lr_oracle,
    parity_chain_set,
    parity_check,
    pieri_instances,
    promotion_sign,
    strip_rows,
    superstandard_increasing,
)
from realschubert.tableaux import IncreasingTableau

SMALL_RECTS = [Rectangle(a, b) for a in range(1, 4) for b in range(1, 5)]


@pytest.mark.parametrize(
    "inner, lam, outer, want",
    [((1,), (1,), (1, 1), 1), ((2, 1), (2, 1), (3, 2, 1), 2), ((), (3, 1), (3, 1), 1), ((1,), (1,), (2,), 1),
     ((2, 1), (2, 1), (4, 2), 1), ((1,), (2,), (1, 1, 1), 0)],
)
def test_lr_frozen(inner, lam, outer, want):
    assert lr_oracle(inner, lam, outer) == want
    assert lr_coeff(inner, (lam,), outer) == want
    assert brute_lr(inner, lam, outer) == want


def test_lr_worked_instances():
    assert lr_coeff((), ((3, 1, 1), BOX, (3, 1, 1), (3, 1, 1)), (4, 4, 4, 4)) == 2
    assert lr_coeff((), ((3, 2, 1), BOX, (4, 2, 1), (3, 2, 1)), (5, 5, 5, 5)) == 12
    assert lr_coeff((), (BOX, BOX), (2,)) == 1
    assert lr_coeff((), ((2,),), (3,)) == 0


def test_lr_complementation_identity():
    for rect in (Rectangle(2, 2), Rectangle(2, 3), Rectangle(3, 3)):
        parts = [p for p in enumerate_partitions(rect) if p]
        for a in parts:
            for b in parts:
                for c in parts:
                    if size(a) + size(b) + size(c) != rect.area:
                        continue
                    full = lr_coeff((), (a, b, c), rect.full)
                    assert full == lr_coeff((), (a, b), complement(c, rect))


@pytest.mark.parametrize("inner, outer", [((1,), (3, 2)), ((2, 1), (3, 3, 1)), ((1, 1), (3, 2, 1))])
def test_lr_oracle_matches_brute_force_slides(inner, outer):
    n = size(outer) - size(inner)
    for lam in enumerate_partitions(Rectangle(3, 3)):
        if size(lam) == n:
            assert lr_oracle(inner, lam, outer) == brute_lr(inner, lam, outer)


def test_kjdt_slide_switch_rule_frozen():
    t = IncreasingTableau((1,), ((1,), (1, 2)))
    s = kjdt_slide(t, [(1, 1)])
    assert s.inner == () and s.rows == ((1, 2), (2,))
    assert k_rectify(t) == s
    assert s != superstandard_increasing((2,))


def test_kjdt_slide_merges_equal_neighbours():
    t = IncreasingTableau((1,), ((1,), (1,)))
    assert kjdt_slide(t, [(1, 1)]).rows == ((1,),)


def test_kjdt_slide_rejects_bad_corners():
    t = IncreasingTableau((2, 1), ((1,), (2,), (3,)))
    assert inner_corners((2, 1)) == [(1, 2), (2, 1)]
    with pytest.raises(ShapeError):
        kjdt_slide(t, [(1, 1)])
    with pytest.raises(ShapeError):
        kjdt_slide(t, [])
    straight = superstandard_increasing((2, 1))
    assert k_rectify(straight) == straight


@given(skew_tableau())
def test_k_rectify_of_standard_is_classical(data):
    _, t = data
    k = k_rectify(IncreasingTableau.from_standard(t))
    assert k.cells == jdt_rectify(t.inner, grid_of(t.chain))


def test_increasing_tableaux_counts():
    shape = SkewShape((), (2, 2))
    assert [t.rows for t in increasing_tableaux(shape, 3)] == [((1, 2), (2, 3))]
    assert len(list(increasing_tableaux(shape, 4))) == 2
    assert list(increasing_tableaux(shape, 5)) == []
    every = list(increasing_tableaux(SkewShape((), (3, 2)), 3))
    assert all(set(t.values()) == {1, 2, 3} for t in every)


@pytest.mark.parametrize("a, b, g, rect, want", [
    ((3, 1, 1), (3, 1, 1), (3, 1, 1), Rectangle(4, 4), 0),
    ((3, 2, 1), (4, 2, 1), (3, 2, 1), Rectangle(4, 5), 13),
    (PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, PIERI_RECT, 2),
])
def test_k_coeff_frozen(a, b, g, rect, want):
    assert k_coeff(a, b, g, rect) == want


def test_pieri_worked_k_tableaux():
    rows = sorted(t.rows for t in k_tableaux(PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, PIERI_RECT))
    assert tuple(rows) == PIERI_K_ROWS
    assert strip_rows(PIERI_ALPHA, PIERI_GAMMA, PIERI_RECT) == [1, 2, 3]
    assert k_coeff_pieri(PIERI_ALPHA, 4, PIERI_GAMMA, PIERI_RECT) == 2


def test_k_coeff_precondition():
    with pytest.raises(ShapeError):
        k_coeff((2,), (1,), (1,), Rectangle(2, 2))
    assert k_coeff((2,), (1,), (), Rectangle(2, 2)) == 0


@pytest.mark.parametrize("rect", SMALL_RECTS, ids=str)
def test_pieri_closed_form_matches_enumeration(rect):
    for a, b, g in pieri_instances(rect):
        assert k_coeff(a, b, g, rect) == k_coeff_pieri(a, size(b), g, rect)


def test_pieri_closed_form_rejects_non_strips():
    with pytest.raises(ShapeError):
        k_coeff_pieri((), 1, (1, 1), Rectangle(2, 2))


@pytest.mark.parametrize("rect", SMALL_RECTS, ids=str)
def test_single_vertical_domino_case(rect):
    for a, b, g in first_order_triples(rect):
        gc = complement(g, rect)
        if len(b) > 1 or not contains(gc, a):
            continue
        cols = [c for _, c in skew_boxes(a, gc)]
        if sorted(cols.count(c) for c in set(cols))[-1] != 2 or sum(cols.count(c) == 2 for c in set(cols)) != 1:
            continue
        assert k_coeff(a, b, g, rect) == 0
        assert len(parity_chain_set(a, b, g, rect)) == 1


@pytest.mark.parametrize("rect", SMALL_RECTS, ids=str)
def test_first_order_coefficients_onto_the_rectangle_vanish(rect):
    for a in enumerate_partitions(rect):
        for b in enumerate_partitions(rect):
            if size(a) + size(b) == rect.area - 1:
                assert k_coeff(a, b, (), rect) == 0


@pytest.mark.parametrize("rect, want", [(Rectangle(2, 2), 1), (Rectangle(2, 3), 5), (Rectangle(3, 3), 84),
                                        (Rectangle(1, 5), 0)])
def test_k_promotion_count_frozen(rect, want):
    assert k_promotion_count(rect) == want
    assert sum(bk_swap_pair_counts(rect)) == want


def test_promotion_sign_small():
    assert promotion_sign(Rectangle(2, 2)) == 1
    assert promotion_sign(Rectangle(1, 4)) == 0


def test_parity_report_fields():
    rep = parity_check((3, 2, 1), (4, 2, 1), (3, 2, 1), Rectangle(4, 5))
    assert (rep.c, rep.k, rep.orbit_count, rep.chi) == (12, 13, 1, -1)
    assert rep.congruence_ok and rep.inequality_ok and rep.ok
    assert not rep.integer_identity
    assert rep.to_json()["chi"] == -1


@settings(max_examples=30)
@given(st.sampled_from(first_order_triples(Rectangle(2, 3)) + first_order_triples(Rectangle(3, 3))))
def test_parity_identities_on_sampled_triples(triple):
    a, b, g = triple
    rect = Rectangle(3, 3) if size(a) + size(b) + size(g) == 8 else Rectangle(2, 3)
    assert parity_check(a, b, g, rect).ok
