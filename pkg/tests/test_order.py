import itertools

import pytest
from hypothesis import given, strategies as st

from dercat.errors import InputError, WindowExceeded
from dercat.order import (Kind, LPoint, PosetSpec, Q1, Q2, chain_poset, host_truncation,
                          is_forest, leq, predecessor, successor, truncate, FinPoset)


def test_successor_stays_in_fiber():
    assert successor(LPoint(0, 3)) == LPoint(0, 4)
    assert successor(LPoint(1, -1)) == LPoint(1, 0)
    assert predecessor(LPoint(0, 0)) == LPoint(0, -1)


def test_leq_on_d_points():
    assert leq(Q1, LPoint(0, -5))
    assert not leq(Q1, Q2) and not leq(Q2, Q1)
    assert leq(LPoint(0, 2), LPoint(1, -9))
    assert not leq(LPoint(0, 0), Q1)


points = st.one_of(st.just(Q1), st.just(Q2),
                   st.builds(LPoint, st.integers(0, 2), st.integers(-5, 5)))


@given(points, points, points)
def test_leq_is_a_partial_order(x, y, z):
    assert leq(x, x)
    if leq(x, y) and leq(y, x):
        assert x == y
    if leq(x, y) and leq(y, z):
        assert leq(x, z)


def test_spec_rejects_bad_input():
    with pytest.raises(InputError):
        PosetSpec(Kind.A, (), (0, 1))
    with pytest.raises(InputError):
        PosetSpec(Kind.A, ("a", "a"), (0, 1))
    with pytest.raises(InputError):
        PosetSpec(Kind.A, ("a",), (2, 1))


def test_is_forest_examples():
    assert is_forest(chain_poset([LPoint(0, 1), LPoint(0, 2), LPoint(0, 3)]))
    d = truncate(PosetSpec(Kind.D, ("t",), (-3, 3)), LPoint(0, 0), LPoint(0, 1), 1)
    assert is_forest(d)
    x, y, z, t = (LPoint(0, k) for k in range(4))
    diamond = FinPoset((x, y, z, t), ((0, 1), (0, 2), (1, 3), (2, 3)))
    assert not is_forest(diamond)


def test_truncate_type_a_chain():
    p = truncate(PosetSpec(Kind.A, ("t",), (-5, 8)), LPoint(0, 0), LPoint(0, 3), 2)
    assert [q.z for q in p.origin] == list(range(-2, 6))
    assert p.hasse_arrows == tuple((k, k + 1) for k in range(7))


def test_truncate_type_d_has_two_sources():
    p = truncate(PosetSpec(Kind.D, ("t",), (-3, 3)), LPoint(0, 0), LPoint(0, 1), 1)
    assert p.origin[:2] == (Q1, Q2)
    assert [q.z for q in p.origin[2:]] == [-1, 0, 1, 2]
    assert (0, 2) in p.hasse_arrows and (1, 2) in p.hasse_arrows


def test_truncate_concatenates_fibers():
    p = truncate(PosetSpec(Kind.A, ("s", "t"), (-3, 3)), LPoint(0, 0), LPoint(1, 0), 1)
    assert p.origin == tuple(LPoint(t, z) for t in (0, 1) for z in (-1, 0, 1))
    assert p.hasse_arrows == tuple((k, k + 1) for k in range(5))


def test_truncate_refuses_to_leave_window():
    with pytest.raises(WindowExceeded):
        truncate(PosetSpec(Kind.A, ("t",), (0, 3)), LPoint(0, 0), LPoint(0, 3), 1)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n_t", [1, 2])
def test_truncations_are_forests_and_grow_monotonically(kind, n_t):
    spec = PosetSpec(kind, tuple("ab"[:n_t]), (-2, 2))
    small, big = host_truncation(spec, 2), host_truncation(spec, 3)
    assert is_forest(small) and is_forest(big)
    for u, v in itertools.product(small.vertices, repeat=2):
        pu, pv = small.origin[u], small.origin[v]
        assert small.le(u, v) == big.le(big.index[pu], big.index[pv]) == leq(pu, pv)
