"""Tests for the partition combinatorics.

The dominance and dual tests are checked against independent brute-force
oracles (dominance via explicit prefix sums over padded lists, duals via
Young-diagram cell counting) so the implementations are never compared
only against themselves.
"""

import itertools

import pytest

from nilvar.partitions import Partition, dominates, enumerate_partitions, reduced_length


# -- oracles ---------------------------------------------------------------

def brute_partitions(n, amax):
    """All partitions of n with parts <= amax, by filtering weakly
    decreasing compositions."""
    out = set()

    def rec(rem, bound, acc):
        if rem == 0:
            out.add(tuple(acc))
            return
        for v in range(1, min(bound, rem) + 1):
            rec(rem - v, v, acc + [v])

    rec(n, amax, [])
    return out


def brute_dual(p):
    """Dual by counting cells of the transposed Young diagram."""
    cells = {(i, j) for i, v in enumerate(p) for j in range(v)}
    cols = sorted((sum(1 for (i, j) in cells if j == c) for c in range(p[0])), reverse=True) if p else []
    return tuple(cols)


def brute_dominates(p, q):
    k = max(len(p), len(q))
    pp = list(p) + [0] * (k - len(p))
    qq = list(q) + [0] * (k - len(q))
    return all(sum(pp[: i + 1]) <= sum(qq[: i + 1]) for i in range(k))


# -- construction ----------------------------------------------------------

def test_valid_construction():
    assert Partition([3, 2, 2, 1]) == (3, 2, 2, 1)
    assert Partition() == ()
    assert Partition([5]) == (5,)


def test_rejects_increasing():
    with pytest.raises(ValueError):
        Partition([2, 3])


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        Partition([3, 0])
    with pytest.raises(ValueError):
        Partition([-1])


def test_tuple_interop():
    p = Partition([2, 1])
    assert p == (2, 1)
    assert hash(p) == hash((2, 1))
    assert {p: "v"}[(2, 1)] == "v"


# -- statistics ------------------------------------------------------------

def test_size_length_multiplicity():
    p = Partition([3, 2, 2, 1])
    assert p.size() == 8
    assert p.length() == 4
    assert p.multiplicity(2) == 2
    assert p.multiplicity(5) == 0
    assert Partition().size() == 0
    assert Partition().length() == 0


# -- dual ------------------------------------------------------------------

def test_dual_worked_example():
    # the transpose of (3,2,2,1) has columns of heights 4,3,1
    assert Partition([3, 2, 2, 1]).dual() == (4, 3, 1)


def test_dual_empty():
    assert Partition().dual() == ()


def test_dual_against_oracle_and_involution():
    for n in range(9):
        for p in enumerate_partitions(n):
            assert p.dual() == brute_dual(p)
            assert p.dual().dual() == p


# -- minus_one -------------------------------------------------------------

def test_minus_one_worked_example():
    assert Partition([3, 2, 2, 1]).minus_one() == (2, 1, 1)


def test_minus_one_errors():
    with pytest.raises(ValueError):
        Partition().minus_one()
    with pytest.raises(ValueError):
        Partition([1, 1, 1]).minus_one()


def test_minus_one_size_drop():
    # |p - 1| = |p| - length(p)
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            if p[0] == 1:
                continue
            q = p.minus_one()
            assert q.size() == p.size() - p.length()


def test_reduced_length():
    assert reduced_length(Partition([3, 2, 2, 1])) == 3
    assert reduced_length(Partition([1, 1])) == 0
    assert reduced_length(Partition()) == 0
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            if p[0] >= 2:
                assert reduced_length(p) == p.minus_one().length()


# -- dominance -------------------------------------------------------------

def test_dominance_requires_equal_size():
    with pytest.raises(ValueError):
        dominates((2, 1), (2, 2))


def test_dominance_examples():
    assert dominates((1, 1, 1, 1), (4,))
    assert not dominates((4,), (1, 1, 1, 1))
    assert dominates((2, 2), (3, 1))
    assert not dominates((3, 1), (2, 2))
    assert dominates((3, 1), (3, 1))


def test_dominance_against_oracle():
    parts = [p for n in range(8) for p in enumerate_partitions(n)]
    for p, q in itertools.product(parts, repeat=2):
        if p.size() != q.size():
            continue
        assert dominates(p, q) == brute_dominates(p, q)


def test_dominance_reverses_under_dual():
    for n in range(2, 8):
        for p, q in itertools.combinations(list(enumerate_partitions(n)), 2):
            assert dominates(p, q) == dominates(q.dual(), p.dual())


# -- enumeration -----------------------------------------------------------

def test_enumerate_counts():
    # partition numbers p(0..10)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, cnt in enumerate(expected):
        assert len(list(enumerate_partitions(n))) == cnt


def test_enumerate_bounded_matches_oracle():
    for n in range(9):
        for amax in range(1, n + 2):
            got = list(enumerate_partitions(n, amax))
            assert set(map(tuple, got)) == brute_partitions(n, amax)
            # lexicographically decreasing, no repeats
            assert got == sorted(got, reverse=True)
            assert len(got) == len(set(got))


def test_enumerate_edge_cases():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(0, 3)) == [()]
    assert list(enumerate_partitions(3, 0)) == []
    assert list(enumerate_partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


# -- serialization ---------------------------------------------------------

def test_str_roundtrip():
    for n in range(8):
        for p in enumerate_partitions(n):
            assert Partition.parse(str(p)) == p
    assert str(Partition([3, 2, 2, 1])) == "[3,2,2,1]"
    assert str(Partition()) == "[]"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Partition.parse("3,2,1")
    with pytest.raises(ValueError):
        Partition.parse("[2,3]")
