import pytest
from hypothesis import given, strategies as st

from brauer_blocks.errors import NotInDominantChamber, NotRegular, ParityMismatch, ZeroDelta
from brauer_blocks.geometry import (
    Reflection, ShiftedPoint, apply_word, canonical_window, dot_action, facet_signature,
    in_fundamental_alcove, in_fundamental_alcove_by_signature, is_regular, length, same_facet,
    shift, singularity_degree, unshift, weight_leq,
)
from brauer_blocks.partitions import Partition, partitions_up_to

weights = st.lists(st.integers(1, 8), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))
deltas = st.integers(-6, 6).filter(bool)


def test_shift_examples():
    assert shift((), 1).extend(4).doubled == (-1, -3, -5, -7)
    assert shift((2, 2), 1).extend(4).doubled == (3, 1, -5, -7)


def test_shift_rejects_zero_delta():
    with pytest.raises(ZeroDelta):
        shift((1,), 0)


def test_unshift_parity():
    with pytest.raises(ParityMismatch):
        unshift(ShiftedPoint((2, -3), 1))


@given(weights, deltas)
def test_shift_round_trip(lam, delta):
    assert unshift(shift(lam, delta)) == lam
    assert unshift(shift(lam, delta, window=len(lam) + 5)) == lam


@given(weights, deltas)
def test_window_contains_all_large_moduli(lam, delta):
    p = shift(lam, delta)
    n = canonical_window(lam, delta)
    assert p.window == n >= max(len(lam), 1)
    assert 2 * n + delta > max(abs(d) for d in p.doubled)


def test_dot_action_examples():
    assert dot_action([Reflection.minus(1, 2)], (), 1) == (2, 2)
    assert dot_action([Reflection.minus(1, 3)], (2, 2), 1) == (3, 2, 1)
    assert dot_action([], (4, 1), 3) == (4, 1)


@given(weights, deltas, st.integers(1, 5), st.integers(1, 5))
def test_reflections_are_involutions(lam, delta, i, j):
    if i == j:
        return
    for r in (Reflection.minus(i, j), Reflection.plain(i, j)):
        p = shift(lam, delta)
        assert apply_word([r, r], p).doubled == p.extend(max(i, j)).doubled


def test_singularity_degree_examples():
    assert singularity_degree((), 1) == 0
    assert singularity_degree((), -2) == 1
    assert singularity_degree((), -4) == 2
    assert is_regular((2, 2), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_singularity_degree_lower_bound(m):
    assert all(singularity_degree(p, -2 * m) >= m for p in partitions_up_to(12))


def test_facet_signature_raw_vector():
    sig = facet_signature((6, 4, 2, 1, 0, -2, -3, -5, -6))
    assert sig.slots[:4] == ((5,), (4,), (3, 6), (7,))
    assert str(sig).startswith("5 4 (3,6) 7")


def test_facet_signature_of_shifted_points():
    assert facet_signature(shift((), 1)).is_alcove
    assert facet_signature(shift((), 1).extend(5)).slots == tuple((i,) for i in range(1, 6))
    # halved point (1, 0, -1, -2, ...): modulus 0 comes first, then the pair at 1
    assert facet_signature(shift((), -2)).slots[:2] == ((2,), (1, 3))
    with pytest.raises(NotInDominantChamber):
        facet_signature((1, 2))


def test_same_facet_examples():
    assert same_facet((), (1,), 1)
    assert not same_facet((), (2,), 1)
    assert same_facet((3, 1), (3, 1), -2)


def test_alcoves_at_delta_one():
    deg = list(partitions_up_to(12))
    assert [p for p in deg if same_facet(p, (), 1)] == [(), (1,)]
    assert sorted(p for p in deg if same_facet(p, (2, 1), 1)) == [(2, 1), (2, 2)]
    assert sorted(p for p in deg if same_facet(p, (3, 2, 1), 1)) == [(3, 1, 1), (3, 2, 1)]


@pytest.mark.parametrize("delta", [1, 2, 3, 4])
def test_fundamental_alcove_formula(delta):
    for p in partitions_up_to(12):
        assert in_fundamental_alcove(p, delta) == in_fundamental_alcove_by_signature(p, delta)


def test_fundamental_alcove_examples():
    assert in_fundamental_alcove((1,), 1)
    assert not in_fundamental_alcove((2, 1), 1)
    assert in_fundamental_alcove((), 3)


def test_weight_leq():
    assert weight_leq((), (2, 1))
    assert not weight_leq((3,), (0, 3)) and not weight_leq((0, 3), (3,))
    assert weight_leq((2, 1), (6, 5, 3, 1))


def test_length_examples():
    assert length((), 1) == 0
    assert length((2, 2), 1) == 1
    assert length((3, 2, 1), 1) == 2
    with pytest.raises(NotRegular):
        length((2,), 1)


@given(weights, st.integers(1, 4))
def test_length_zero_exactly_on_fundamental_alcove(lam, delta):
    if is_regular(lam, delta):
        assert (length(lam, delta) == 0) == in_fundamental_alcove(lam, delta)


@given(weights, weights, st.integers(-5, 6).filter(bool))
def test_same_facet_is_symmetric(a, b, delta):
    assert same_facet(a, b, delta) == same_facet(b, a, delta)
    assert same_facet(Partition(a), Partition(a), delta)
