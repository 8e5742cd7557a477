"""Words in the letters x, y over the algebra K[x,y]/(xy, x^a, y^b).

A word is *valid* when no run of x is longer than a-1 and no run of y is
longer than b-1; longer runs vanish in the algebra.  Valid words index the
string modules (see modmatrix), cyclic-valid words index the bands, and a
handful of word-combinatorial notions -- semi-projectivity, the inverse
Auslander-Reiten translate, the admissible pairs that count homomorphisms
-- drive everything downstream.

Conventions, fixed once and for all:

  * the empty word is valid and indexes the simple module;
  * reverse(w) is literal reversal, no letter swap; on modules it is
    vector-space duality (transpose both matrices);
  * bands use both letters, and the canonical representative of a
    primitive band is its lexicographically least rotation (x < y).  It
    always starts with a longest x-run of the band and ends with y.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby


@dataclass(frozen=True)
class AlgebraParams:
    """The pair (a, b), both >= 2, defining K[x,y]/(xy, x^a, y^b).

    d = a + b - 1 is the K-dimension of the algebra, with monomial basis
    1, x, .., x^{a-1}, y, .., y^{b-1}.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise ValueError(f"need a, b >= 2, got ({self.a}, {self.b})")

    @property
    def d(self) -> int:
        return self.a + self.b - 1


def runs(text):
    """Run-length encoding of a word: "xxyxy" -> [(x,2),(y,1),(x,1),(y,1)]."""
    return [(letter, sum(1 for _ in grp)) for letter, grp in groupby(text)]


class Word(str):
    """A valid word.  Subclasses str, so slicing, comparison and hashing
    are plain string ones; the algebra parameters ride along as .params
    but do not enter equality -- when words from different algebras could
    meet, key on (word, params) explicitly.
    """

    __slots__ = ("params",)

    def __new__(cls, text, params: AlgebraParams):
        text = str(text)
        bad = set(text) - {"x", "y"}
        if bad:
            raise ValueError(f"letters must be x or y, got {sorted(bad)!r}")
        for letter, k in runs(text):
            bound = params.a - 1 if letter == "x" else params.b - 1
            if k > bound:
                raise ValueError(
                    f"run {letter}^{k} exceeds {bound}, not a word over "
                    f"(a,b)=({params.a},{params.b})"
                )
        w = super().__new__(cls, text)
        w.params = params
        return w

    def reverse(self) -> "Word":
        """The reversed word; duality on string modules."""
        return Word(self[::-1], self.params)

    def caret(self) -> str:
        """Caret shorthand: xxy -> "x^2y"; the empty word gives ""."""
        return "".join(f"{l}^{k}" if k > 1 else l for l, k in runs(self))

    def __repr__(self):
        return f"Word({str(self)!r}, a={self.params.a}, b={self.params.b})"


_TOKEN = re.compile(r"([xy])(?:\^(\d+))?")


def parse_word(text: str, params: AlgebraParams) -> Word:
    """Parses a word, accepting caret shorthand ("x^2y" and "xxy" both give
    the same word).  Whitespace is ignored; "" gives the empty word.
    """
    compact = "".join(text.split())
    pos, parts = 0, []
    while pos < len(compact):
        m = _TOKEN.match(compact, pos)
        if m is None:
            raise ValueError(f"cannot parse word at {compact[pos:]!r}")
        parts.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return Word("".join(parts), params)


# ---------------------------------------------------------------------------
# bands
# ---------------------------------------------------------------------------

def band_class(w: Word):
    """Classifies w as a band word.

    Returns one of
        ("not-band", None)
        ("periodic", (root, k))   w is a rotation of root^k, k >= 2,
                                  root a primitive band in canonical form
        ("primitive", canonical)  canonical = lex-least rotation of w

    A band must use both letters and have all rotations valid; for a
    mixed-letter word that is equivalent to validity of ww.  Powers of a
    single letter are never bands (all their rotations are valid, but both
    arrows must act around the cycle), hence the separate check.
    """
    p = w.params
    if len(set(w)) < 2:
        return ("not-band", None)
    try:
        Word(str(w) + str(w), p)
    except ValueError:
        return ("not-band", None)
    canonical = min(w[i:] + w[:i] for i in range(len(w)))
    n = len(w)
    for per in range(1, n + 1):
        if n % per == 0 and canonical[:per] * (n // per) == canonical:
            break
    if per < n:
        return ("periodic", (Word(canonical[:per], p), n // per))
    return ("primitive", Word(canonical, p))


# ---------------------------------------------------------------------------
# semi-projective / semi-injective words, open strings
# ---------------------------------------------------------------------------

def semi_kind(w: Word):
    """Returns "semi-projective", "semi-injective", or None.

    Semi-projective: |w| >= a+b-2, w starts with x^{a-1} and ends with
    y^{b-1}.  Semi-injective is the mirror (starts y^{b-1}, ends x^{a-1}).
    The two exclude each other -- the first letter already differs -- and
    the empty word is neither.
    """
    a, b = w.params.a, w.params.b
    if len(w) >= a + b - 2:
        if w[: a - 1] == "x" * (a - 1) and w[len(w) - (b - 1):] == "y" * (b - 1):
            return "semi-projective"
        if w[: b - 1] == "y" * (b - 1) and w[len(w) - (a - 1):] == "x" * (a - 1):
            return "semi-injective"
    return None


def tau_inverse(w: Word) -> Word:
    """The inverse Auslander-Reiten translate on words.

    Defined exactly for semi-projective w (such string modules are never
    injective), by wrapping:  tau^{-1} w = x^{a-1} y w x y^{b-1}.
    The result is again a valid word: w starts with x^{a-1} after the
    inserted y and ends with y^{b-1} before the inserted x.
    """
    if semi_kind(w) != "semi-projective":
        raise ValueError(f"tau_inverse needs a semi-projective word, got {str(w)!r}")
    p = w.params
    return Word("x" * (p.a - 1) + "y" + w + "x" + "y" * (p.b - 1), p)


# The three shapes of open strings, projective side.  Each is a block
# concatenation; since every block boundary glues a y to an x, runs never
# merge and each instantiation below is automatically a valid word.
#
#   type 1:  (x^{a-1}y)^r (x^{a-1}y^{b-1})^s (xy^{b-1})^t
#              r+s >= 1, s+t >= 1
#   type 2:  (x^{a-1}y)^r [x^{a-1}y^i] (x^{a-1}y^{b-1})^s [x^j y^{b-1}] (xy^{b-1})^t
#              optional bracketed blocks, at least one present,
#              2 <= i <= b-2, 2 <= j <= a-2,
#              r + [x^{a-1}y^i] + s >= 1,  s + [x^j y^{b-1}] + t >= 1
#   type 3:  (x^{a-1}y)^r x^i y^j (xy^{b-1})^t
#              r, t >= 1, 1 <= i <= a-2, 1 <= j <= b-2
#
# Injective-side open strings are the reversals of these.

def _blocks(params):
    a, b = params.a, params.b
    return "x" * (a - 1) + "y", "x" * (a - 1) + "y" * (b - 1), "x" + "y" * (b - 1)


def _type1(params, L):
    a, b = params.a, params.b
    A, M, B = _blocks(params)
    out = []
    for r in range(L // a + 1):
        for s in range((L - r * a) // (a + b - 2) + 1):
            rem = L - r * a - s * (a + b - 2)
            if rem % b:
                continue
            t = rem // b
            if r + s >= 1 and s + t >= 1:
                out.append(A * r + M * s + B * t)
    return out


def _type2(params, L):
    a, b = params.a, params.b
    A, M, B = _blocks(params)
    out = []
    for alpha in (0, 1):
        for beta in (0, 1):
            if alpha + beta < 1:
                continue
            for i in range(2, b - 1) if alpha else (None,):
                for j in range(2, a - 1) if beta else (None,):
                    mid_a = "x" * (a - 1) + "y" * i if alpha else ""
                    mid_b = "x" * j + "y" * (b - 1) if beta else ""
                    fixed = len(mid_a) + len(mid_b)
                    for r in range((L - fixed) // a + 1 if L >= fixed else 0):
                        for s in range((L - fixed - r * a) // (a + b - 2) + 1):
                            rem = L - fixed - r * a - s * (a + b - 2)
                            if rem < 0 or rem % b:
                                continue
                            t = rem // b
                            if r + alpha + s >= 1 and s + beta + t >= 1:
                                out.append(A * r + mid_a + M * s + mid_b + B * t)
    return out


def _type3(params, L):
    a, b = params.a, params.b
    A, _, B = _blocks(params)
    out = []
    for r in range(1, L // a + 1):
        for t in range(1, (L - r * a) // b + 1):
            for i in range(1, a - 1):
                j = L - r * a - t * b - i
                if 1 <= j <= b - 2:
                    out.append(A * r + "x" * i + "y" * j + B * t)
    return out


_GENERATORS = ((1, _type1), (2, _type2), (3, _type3))


def open_type(w: Word):
    """Decides whether w is an open string -- one whose string module has
    open orbit inside its irreducible stratum.

    Returns (side, t) with side in {"semi-projective", "semi-injective"}
    and t in {1, 2, 3} the pattern type, trying the projective side first
    and within a side the types in order; None if w matches no pattern.
    """
    for side, text in (("semi-projective", str(w)), ("semi-injective", str(w)[::-1])):
        for t, gen in _GENERATORS:
            if text in gen(w.params, len(w)):
                return (side, t)
    return None


def enumerate_open_strings(dim: int, params: AlgebraParams) -> list[Word]:
    """All projective-side open strings whose string module has dimension
    dim (word length dim - 1), deduplicated and lexicographically sorted.
    Injective-side open strings are the reversals of these.
    """
    if dim < 1:
        return []
    seen = set()
    for _, gen in _GENERATORS:
        seen.update(gen(params, dim - 1))
    return [Word(s, params) for s in sorted(seen)]


# ---------------------------------------------------------------------------
# admissible pairs
# ---------------------------------------------------------------------------

def factor_triples(w):
    """All splittings w = D E F where D is empty or ends in x and F is
    empty or starts with y.  The window vectors of E then span a quotient
    of the string module of w.
    """
    out = []
    n = len(w)
    for i in range(n + 1):
        if i > 0 and w[i - 1] != "x":
            continue
        for j in range(i, n + 1):
            if j < n and w[j] != "y":
                continue
            out.append((w[:i], w[i:j], w[j:]))
    return out


def substring_triples(w):
    """All splittings w = D E F where D is empty or ends in y and F is
    empty or starts with x.  The window vectors of E then span a submodule
    of the string module of w.
    """
    out = []
    n = len(w)
    for i in range(n + 1):
        if i > 0 and w[i - 1] != "y":
            continue
        for j in range(i, n + 1):
            if j < n and w[j] != "x":
                continue
            out.append((w[:i], w[i:j], w[j:]))
    return out


def admissible_pairs(w1, w2):
    """All pairs (factor triple of w1, substring triple of w2) with the
    same middle word.  Their number is dim Hom(M(w1), M(w2)), and each
    pair carries one basis homomorphism -- the graph map of homalg.
    """
    if getattr(w1, "params", None) != getattr(w2, "params", None):
        raise ValueError("admissible_pairs needs words over the same algebra")
    by_middle = {}
    for t in substring_triples(w2):
        by_middle.setdefault(t[1], []).append(t)
    out = []
    for t in factor_triples(w1):
        for t2 in by_middle.get(t[1], ()):
            out.append((t, t2))
    return out


def enumerate_words(max_len: int, params: AlgebraParams) -> list[Word]:
    """All valid words of length <= max_len, by length then lexicographic.
    Includes the empty word."""
    a, b = params.a, params.b
    out, layer = [Word("", params)], [""]
    for _ in range(max_len):
        nxt = []
        for text in layer:
            for letter, bound in (("x", a - 1), ("y", b - 1)):
                cand = text + letter
                tail = runs(cand)[-1]
                if tail[1] <= bound:
                    nxt.append(cand)
        layer = sorted(nxt)
        out.extend(Word(t, params) for t in layer)
    return out
