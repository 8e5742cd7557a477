"""Tests for word combinatorics: validity, bands, open strings,
admissible pairs.

The open-string lists for (a,b) = (3,3) were derived by hand from the
three pattern shapes (solving the block-length equations for each module
dimension) and are frozen here; enumerate_open_strings must reproduce
them exactly.  Admissible-pair counts for small words were likewise
enumerated by hand.
"""

import itertools

import pytest

from nilvar.words import (
    AlgebraParams,
    Word,
    admissible_pairs,
    band_class,
    enumerate_open_strings,
    enumerate_words,
    factor_triples,
    open_type,
    parse_word,
    runs,
    semi_kind,
    substring_triples,
    tau_inverse,
)

P33 = AlgebraParams(3, 3)
P23 = AlgebraParams(2, 3)
P44 = AlgebraParams(4, 4)


# -- params and validity ---------------------------------------------------

def test_params():
    assert P33.d == 5
    assert AlgebraParams(2, 2).d == 3
    with pytest.raises(ValueError):
        AlgebraParams(1, 3)


def test_word_validity():
    assert Word("xxy", P33) == "xxy"
    assert Word("", P33) == ""
    with pytest.raises(ValueError):
        Word("xxx", P33)  # x-run 3 > a-1
    with pytest.raises(ValueError):
        Word("xyyy", P33)
    with pytest.raises(ValueError):
        Word("xx", P23)  # a=2 allows no xx
    with pytest.raises(ValueError):
        Word("xz", P33)
    Word("xxx", P44)


def test_word_is_str():
    w = Word("xxy", P33)
    assert w[0] == "x" and w[2:] == "y"
    assert len(w) == 3
    assert w == "xxy" and hash(w) == hash("xxy")


def test_runs():
    assert runs("xxyxy") == [("x", 2), ("y", 1), ("x", 1), ("y", 1)]
    assert runs("") == []


def test_parse_and_caret():
    assert parse_word("x^2y", P33) == "xxy"
    assert parse_word("x^2 y^2", P33) == "xxyy"
    assert parse_word("xxy", P33) == "xxy"
    assert parse_word("", P33) == ""
    assert Word("xxyy", P33).caret() == "x^2y^2"
    assert Word("xyxy", P33).caret() == "xyxy"
    with pytest.raises(ValueError):
        parse_word("x^3y", P33)  # parses but fails validity
    with pytest.raises(ValueError):
        parse_word("ab", P33)
    # caret round trip over all short words
    for w in enumerate_words(5, P33):
        assert parse_word(w.caret(), P33) == w


def test_reverse():
    assert Word("xxy", P33).reverse() == "yxx"
    assert Word("", P33).reverse() == ""
    for w in enumerate_words(5, P33):
        assert w.reverse().reverse() == w


# -- bands -----------------------------------------------------------------

def test_band_class_basic():
    kind, data = band_class(Word("xxy", P33))
    assert kind == "primitive" and data == "xxy"
    kind, data = band_class(Word("yxx", P33))
    assert kind == "primitive" and data == "xxy"
    kind, data = band_class(Word("xyxy", P33))
    assert kind == "periodic" and data == ("xy", 2)
    assert band_class(Word("xx", P33)) == ("not-band", None)
    assert band_class(Word("x", P33)) == ("not-band", None)
    assert band_class(Word("", P33)) == ("not-band", None)
    # valid word whose square is not valid
    assert band_class(Word("xxyxx", P33)) == ("not-band", None)
    assert band_class(Word("xxyy", P33))[0] == "primitive"
    assert band_class(Word("xxyxy", P33)) == ("primitive", "xxyxy")


def test_canonical_band_shape():
    # canonical form starts with a longest x-run and ends with y,
    # and is minimal among all rotations
    for w in enumerate_words(6, P33):
        kind, data = band_class(w)
        if kind != "primitive":
            continue
        assert data in {w[i:] + w[:i] for i in range(len(w))}
        assert data == min(data[i:] + data[:i] for i in range(len(data)))
        assert data[0] == "x" and data[-1] == "y"
        longest_x = max(k for l, k in runs(data) if l == "x")
        assert runs(data)[0] == ("x", longest_x)


def test_band_rotation_invariance():
    for w in enumerate_words(6, P33):
        cls = band_class(w)
        for i in range(1, len(w)):
            rot = w[i:] + w[:i]
            try:
                rw = Word(rot, P33)
            except ValueError:
                # a rotation of a band word is again valid, so this can
                # only happen for non-bands
                assert cls[0] == "not-band"
                continue
            assert band_class(rw) == cls


# -- semi-projective / semi-injective --------------------------------------

def test_semi_kind():
    assert semi_kind(Word("xxyy", P33)) == "semi-projective"
    assert semi_kind(Word("yyxx", P33)) == "semi-injective"
    assert semi_kind(Word("xxyxyy", P33)) == "semi-projective"
    assert semi_kind(Word("xy", P33)) is None  # too short for (3,3)
    assert semi_kind(Word("", P33)) is None
    assert semi_kind(Word("xyxy", P33)) is None  # ends in one y only
    assert semi_kind(Word("xy", AlgebraParams(2, 2))) == "semi-projective"
    assert semi_kind(Word("yx", AlgebraParams(2, 2))) == "semi-injective"


def test_semi_kinds_mutually_exclusive_and_mirror():
    for w in enumerate_words(7, P33):
        k = semi_kind(w)
        kr = semi_kind(w.reverse())
        if k == "semi-projective":
            assert kr == "semi-injective"
        elif k == "semi-injective":
            assert kr == "semi-projective"
        else:
            assert kr is None


def test_tau_inverse():
    assert tau_inverse(Word("xxyy", P33)) == "xxyxxyyxyy"
    assert tau_inverse(Word("xy", AlgebraParams(2, 2))) == "xyxyxy"
    with pytest.raises(ValueError):
        tau_inverse(Word("xy", P33))
    with pytest.raises(ValueError):
        tau_inverse(Word("yyxx", P33))
    # tau-inverse of a semi-projective word is again semi-projective
    for w in enumerate_open_strings(5, P33) + enumerate_open_strings(8, P33):
        assert semi_kind(tau_inverse(w)) == "semi-projective"


# -- open strings ----------------------------------------------------------

# hand-derived open-string lists for a = b = 3, projective side, by
# module dimension (word length is dim - 1)
OPEN_33 = {
    2: [],
    3: [],
    4: [],
    5: ["xxyy"],
    6: [],
    7: ["xxyxyy"],
    8: ["xxyxxyy", "xxyyxyy"],
    9: ["xxyxyxyy", "xxyyxxyy"],
    10: ["xxyxxyxyy", "xxyxyyxyy"],
    11: ["xxyxxyxxyy", "xxyxxyyxyy", "xxyyxyyxyy"],
    12: ["xxyxxyxyxyy", "xxyxxyyxxyy", "xxyxyxyyxyy", "xxyyxxyyxyy"],
}


def test_enumerate_open_strings_33():
    for dim, expect in OPEN_33.items():
        assert [str(w) for w in enumerate_open_strings(dim, P33)] == expect


def test_open_strings_are_semi_projective_and_typed():
    for params in (P33, P23, P44, AlgebraParams(3, 4)):
        for dim in range(2, 13):
            for w in enumerate_open_strings(dim, params):
                assert len(w) == dim - 1
                assert semi_kind(w) == "semi-projective"
                side, t = open_type(w)
                assert side == "semi-projective" and t in (1, 2, 3)
                side_r, t_r = open_type(w.reverse())
                assert side_r == "semi-injective" and t_r == t


def test_open_type_examples():
    assert open_type(Word("xxyy", P33)) == ("semi-projective", 1)
    assert open_type(Word("yyxx", P33)) == ("semi-injective", 1)
    assert open_type(Word("xxyxyxyy", P33)) == ("semi-projective", 3)
    assert open_type(Word("xxy", P33)) is None
    assert open_type(Word("", P33)) is None
    assert open_type(Word("xyxy", P33)) is None
    # type 2 needs a >= 4 or b >= 4; smallest case at (4,4)
    assert open_type(Word("xxxyyxxxyyy", P44)) == ("semi-projective", 2)
    assert "xxxyyxxxyyy" in [str(w) for w in enumerate_open_strings(12, P44)]


def test_no_type2_for_33():
    # 2 <= i <= b-2 and 2 <= j <= a-2 are both empty at (3,3)
    for dim in range(2, 16):
        for w in enumerate_open_strings(dim, P33):
            assert open_type(w)[1] in (1, 3)


def test_open_strings_22():
    # at (2,2) the only open strings are (xy)^k: the algebra itself and
    # its "staircase" extensions collapse to type 1 with a-1 = b-1 = 1
    p = AlgebraParams(2, 2)
    for dim in range(2, 10):
        got = [str(w) for w in enumerate_open_strings(dim, p)]
        if dim % 2 == 1:
            assert got == ["xy" * ((dim - 1) // 2)]
        else:
            assert got == []


# -- admissible pairs ------------------------------------------------------

def test_triple_conventions():
    w = Word("xxy", P33)
    assert factor_triples(w) == [
        ("", "xx", "y"),
        ("", "xxy", ""),
        ("x", "x", "y"),
        ("x", "xy", ""),
        ("xx", "", "y"),
        ("xx", "y", ""),
    ]
    assert substring_triples(w) == [
        ("", "", "xxy"),
        ("", "x", "xy"),
        ("", "xxy", ""),
        ("xxy", "", ""),
    ]
    for d, e, f in factor_triples(Word("xxyy", P33)):
        assert d + e + f == "xxyy"
        assert d == "" or d.endswith("x")
        assert f == "" or f.startswith("y")
    for d, e, f in substring_triples(Word("xxyy", P33)):
        assert d + e + f == "xxyy"
        assert d == "" or d.endswith("y")
        assert f == "" or f.startswith("x")


def test_admissible_pair_counts():
    # frozen hand counts
    cases = [
        ("xxy", "xyxx", 5),
        ("xxy", "xxy", 4),
        ("xy", "xy", 3),
        ("xxyy", "xy", 3),
        ("xy", "xxyy", 4),
    ]
    for t1, t2, expect in cases:
        pairs = admissible_pairs(Word(t1, P33), Word(t2, P33))
        assert len(pairs) == expect, (t1, t2)
        for (d1, e1, f1), (d2, e2, f2) in pairs:
            assert e1 == e2
            assert d1 + e1 + f1 == t1 and d2 + e2 + f2 == t2


def test_admissible_pairs_rejects_mixed_params():
    with pytest.raises(ValueError):
        admissible_pairs(Word("xy", P33), Word("xy", P44))


def test_hom_to_algebra_word_count():
    # dim Hom(M(x^i y^j), M(x^{a-1} y^{b-1})) = i + j + 2 in the inner
    # range 1 <= i <= a-2, 1 <= j <= b-2; in general the count is
    # min(i,a-2) + min(j,b-2) + 2, plus 1 when (i,j) = (a-1,b-1)
    for a, b in ((3, 3), (4, 3), (4, 5)):
        p = AlgebraParams(a, b)
        lam = Word("x" * (a - 1) + "y" * (b - 1), p)
        for i in range(a):
            for j in range(b):
                if i + j == 0:
                    continue
                w = Word("x" * i + "y" * j, p)
                expect = min(i, a - 2) + min(j, b - 2) + 2
                if i == a - 1 and j == b - 1:
                    expect += 1
                assert len(admissible_pairs(w, lam)) == expect
                if 1 <= i <= a - 2 and 1 <= j <= b - 2:
                    assert expect == i + j + 2
    # the algebra word itself: End has dimension d = a + b - 1
    assert len(admissible_pairs(Word("xxyy", P33), Word("xxyy", P33))) == P33.d


# -- word enumeration ------------------------------------------------------

def test_enumerate_words_against_filter():
    for params in (P33, P23, AlgebraParams(4, 3)):
        got = enumerate_words(6, params)
        brute = [""]
        for L in range(1, 7):
            for tup in itertools.product("xy", repeat=L):
                text = "".join(tup)
                ok = all(
                    k <= (params.a - 1 if l == "x" else params.b - 1)
                    for l, k in runs(text)
                )
                if ok:
                    brute.append(text)
        assert sorted(got) == sorted(brute)
        assert len(got) == len(set(got))
