"""Tests for string/band matrix realizations.

Jordan types are cross-checked against the run-combinatorial description
(an x-run of length r contributes a Jordan block of size r+1 to p(A),
and every vertex not on an x-arrow contributes a 1; dually for y), which
is computed here directly from the words -- independent of the rank-based
computation in modmatrix.
"""

import json
import random
from fractions import Fraction

import pytest

from nilvar.exactla import RationalMatrix
from nilvar.modmatrix import (
    MatrixPairModule,
    band_module,
    direct_sum,
    string_module,
    summand_dim,
)
from nilvar.words import AlgebraParams, Word, band_class, enumerate_words, runs

P33 = AlgebraParams(3, 3)
P22 = AlgebraParams(2, 2)
P43 = AlgebraParams(4, 3)


def string_jordan_oracle(word):
    """Jordan pair of M(word) straight from the run structure."""
    n = len(word) + 1
    xs = [k for l, k in runs(word) if l == "x"]
    ys = [k for l, k in runs(word) if l == "y"]
    pa = sorted((k + 1 for k in xs), reverse=True) + [1] * (n - sum(k + 1 for k in xs))
    pb = sorted((k + 1 for k in ys), reverse=True) + [1] * (n - sum(k + 1 for k in ys))
    return tuple(pa), tuple(pb)


def band_jordan_oracle(canonical, k):
    """Jordan pair of a band with k layers: each x-run of length c gives k
    blocks of size c+1; remaining vertices are singletons."""
    m = len(canonical)
    xs = [c for l, c in runs(canonical) if l == "x"]
    ys = [c for l, c in runs(canonical) if l == "y"]
    pa = sorted([c + 1 for c in xs] * k, reverse=True)
    pa += [1] * (m * k - sum(pa))
    pb = sorted([c + 1 for c in ys] * k, reverse=True)
    pb += [1] * (m * k - sum(pb))
    return tuple(pa), tuple(pb)


# -- string modules --------------------------------------------------------

def test_orientation_convention():
    # these two entries pin the action convention for everything else
    mx = string_module("x", P33)
    assert mx.A.rows[0][1] == 1 and mx.A.rank() == 1 and mx.B.rank() == 0
    my = string_module("y", P33)
    assert my.B.rows[1][0] == 1 and my.B.rank() == 1 and my.A.rank() == 0


def test_simple_module():
    s = string_module("", P33)
    assert s.n == 1
    assert s.verify_relations()
    assert s.stats() == {"rkA": 0, "rkB": 0, "top_dim": 1, "soc_dim": 1, "regular": False}


def test_regular_representation():
    lam = string_module("x^2y^2", P33)
    assert lam.n == 5
    st = lam.stats()
    # simple top; the socle is 2-dimensional, spanned by x^{a-1} and y^{b-1}
    assert st["top_dim"] == 1 and st["soc_dim"] == 2
    assert st["rkA"] == 2 and st["rkB"] == 2 and not st["regular"]
    assert lam.jordan_pair() == ((3, 1, 1), (3, 1, 1))


def test_string_relations_and_jordan_all_short_words():
    for params in (P33, P22, P43):
        for w in enumerate_words(6, params):
            m = string_module(w)
            assert m.n == len(w) + 1
            assert m.verify_relations()
            pa, pb = m.jordan_pair()
            assert (tuple(pa), tuple(pb)) == string_jordan_oracle(w)
            st = m.stats()
            # a string module has exactly one string summand: Lemma-style
            # count n - 1 = rk A + rk B
            assert st["rkA"] + st["rkB"] == m.n - 1
            # tops sit at "peaks" (y followed by x) plus one free end;
            # socles at "valleys" (x followed by y) plus one
            assert st["top_dim"] == 1 + sum(
                1 for i in range(len(w) - 1) if w[i] == "y" and w[i + 1] == "x"
            )
            assert st["soc_dim"] == 1 + sum(
                1 for i in range(len(w) - 1) if w[i] == "x" and w[i + 1] == "y"
            )


def test_string_caret_input():
    assert string_module("x^2y", P33).A == string_module("xxy", P33).A
    with pytest.raises(ValueError):
        string_module("xxy")  # plain text needs params


# -- band modules ----------------------------------------------------------

def test_band_xxy_single_layer():
    m = band_module("xxy", [2], P33)
    assert m.n == 3
    assert m.verify_relations()
    assert m.jordan_pair() == ((3,), (2, 1))
    assert m.stats() == {"rkA": 2, "rkB": 1, "top_dim": 1, "soc_dim": 1, "regular": True}
    # wrap-around entry carries the lambda
    assert m.B.rows[0][2] == 2


def test_band_xxyy_single_layer():
    m = band_module("xxyy", [1], P33)
    assert m.n == 4
    assert m.verify_relations()
    assert m.jordan_pair() == ((3, 1), (3, 1))
    assert m.stats() == {"rkA": 2, "rkB": 2, "top_dim": 1, "soc_dim": 1, "regular": True}


def test_band_layers_and_defaults():
    m = band_module("xxy", 3, P33)  # int k: lambdas default to 1, 2, 3
    assert m.n == 9
    assert m.verify_relations()
    assert m.summands == (("band", "xxy", (1, 2, 3)),)
    assert m.jordan_pair() == ((3, 3, 3), (2, 2, 2, 1, 1, 1))
    st = m.stats()
    assert st["regular"] and st["top_dim"] == 3 and st["soc_dim"] == 3


def test_band_jordan_oracle_sweep():
    rng = random.Random(5)
    bands = []
    for params in (P33, P43):
        for w in enumerate_words(6, params):
            kind, canon = band_class(w)
            if kind == "primitive":
                bands.append(canon)
    for canon in bands:
        k = rng.randint(1, 3)
        lambdas = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(k)]
        m = band_module(canon, lambdas)
        assert m.verify_relations()
        pa, pb = m.jordan_pair()
        assert (tuple(pa), tuple(pb)) == band_jordan_oracle(canon, k)
        st = m.stats()
        assert st["regular"]  # bands have rk A + rk B = n
        assert st["top_dim"] == st["soc_dim"] == k * sum(
            1 for l, _ in runs(canon) if l == "x"
        )


def test_band_canonicalizes_rotation():
    assert band_module("yxx", [1], P33).A == band_module("xxy", [1], P33).A
    assert band_module("yxx", [1], P33).B == band_module("xxy", [1], P33).B


def test_band_rejections():
    with pytest.raises(ValueError):
        band_module("xyxy", [1], P33)  # periodic
    with pytest.raises(ValueError):
        band_module("xx", [1], P33)  # single letter
    with pytest.raises(ValueError):
        band_module("xxy", [0], P33)  # lambda must be nonzero
    with pytest.raises(ValueError):
        band_module("xxy", [], P33)
    with pytest.raises(ValueError):
        band_module("xxyxx", [1], P33)  # square not valid


def test_distinct_lambdas_split_after_base_change():
    # M(w; l1, l2) with l1 != l2 has the same Jordan pair and stats as
    # M(w; l1) + M(w; l2) -- the layered matrix is conjugate to the sum
    two = band_module("xxyy", [1, 2], P33)
    split = direct_sum([band_module("xxyy", [1], P33), band_module("xxyy", [2], P33)])
    assert two.jordan_pair() == split.jordan_pair()
    assert two.stats() == split.stats()


# -- direct sums -----------------------------------------------------------

def test_direct_sum_blocks_and_metadata():
    m = direct_sum([string_module("xxy", P33), string_module("xy", P33)])
    assert m.n == 7
    assert m.verify_relations()
    assert m.summands == (("string", "xxy"), ("string", "xy"))
    assert [summand_dim(s) for s in m.summands] == [4, 3]
    st = m.stats()
    assert st == {"rkA": 3, "rkB": 2, "top_dim": 2, "soc_dim": 4, "regular": False}


def test_direct_sum_stats_additive():
    rng = random.Random(9)
    words = [w for w in enumerate_words(5, P33)]
    for _ in range(20):
        parts = [string_module(rng.choice(words)) for _ in range(rng.randint(1, 3))]
        if rng.random() < 0.5:
            parts.append(band_module("xxy", [rng.randint(1, 5)], P33))
        total = direct_sum(parts)
        assert total.verify_relations()
        st = total.stats()
        for key in ("rkA", "rkB", "top_dim", "soc_dim"):
            assert st[key] == sum(p.stats()[key] for p in parts)
        # Lemma-style count: n - #string summands = rk A + rk B
        s = sum(1 for p in parts for kind, *_ in p.summands if kind == "string")
        assert total.n - s == st["rkA"] + st["rkB"]


def test_direct_sum_param_mismatch():
    with pytest.raises(ValueError):
        direct_sum([string_module("x", P33), string_module("x", P43)])
    with pytest.raises(ValueError):
        direct_sum([])


# -- duality ---------------------------------------------------------------

def test_dual_point_is_reversed_string():
    for w in enumerate_words(5, P33):
        m = string_module(w)
        d = m.dual_point()
        assert d.verify_relations()
        # reversing the coordinate order turns the transposed matrices
        # into the string matrices of the reversed word on the nose
        n = m.n
        rev = string_module(w.reverse())
        perm = list(reversed(range(n)))
        for mat_d, mat_r in ((d.A, rev.A), (d.B, rev.B)):
            for i in range(n):
                for j in range(n):
                    assert mat_d.rows[perm[i]][perm[j]] == mat_r.rows[i][j]
        st, std = m.stats(), d.stats()
        assert std["top_dim"] == st["soc_dim"] and std["soc_dim"] == st["top_dim"]
        assert (std["rkA"], std["rkB"]) == (st["rkA"], st["rkB"])


# -- serialization ---------------------------------------------------------

def test_json_round_trip_bit_exact():
    mods = [
        string_module("xxyy", P33),
        band_module("xxy", [Fraction(1, 2), 3], P33),
        direct_sum([string_module("xy", P22)] * 2),
    ]
    for m in mods:
        blob = json.dumps(m.to_json(), sort_keys=True)
        back = MatrixPairModule.from_json(json.loads(blob))
        assert back.n == m.n and back.params == m.params
        assert back.A == m.A and back.B == m.B
        # and once more through text to be sure nothing drifts
        assert json.dumps(back.to_json(), sort_keys=True) == blob


def test_from_json_validates():
    bad = string_module("xy", P33).to_json()
    bad["n"] = 5
    with pytest.raises(ValueError):
        MatrixPairModule.from_json(bad)


def test_fraction_entries_serialize_as_ratios():
    m = band_module("xxy", [Fraction(1, 2)], P33)
    assert m.to_json()["B"][0][2] == "1/2"
