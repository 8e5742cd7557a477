"""Index modules of irreducible strata and their dimensions.

The variety decomposes into strata on which the isomorphism type of
M/soc(M) -- equivalently a well-chosen "index" direct sum of short
strings -- is constant.  An index module for dimension n is a direct sum

    S^{m_s}  +  M(x^i)^{m_x[i]}  +  M(y^j)^{m_y[j]}  +  M(x^i y^j)^{m_xy[i,j]}

of total dimension n(d-1) whose multiplicities satisfy a short list of
inequalities; each one pins down an irreducible stratum of the variety,
of dimension  n * dim Hom(L, Lambda) - dim End(L).

We store an index module as a multiset of exponent pairs (i, j) >= (0,0):
(0,0) is the simple module, (i,0) is M(x^i), (0,j) is M(y^j).  That makes
the combinatorial moves between index modules (flips and box moves)
uniform bookkeeping on pairs.
"""

from __future__ import annotations

from collections import Counter

from .homalg import end_dim
from .modmatrix import direct_sum, string_module
from .partitions import Partition
from .words import AlgebraParams, Word


class BiserialIndexModule:
    """A formal direct sum of the modules S, M(x^i), M(y^j), M(x^i y^j),
    kept as a multiset of exponent pairs.  Immutable and hashable."""

    __slots__ = ("_items",)

    def __init__(self, counts):
        items = []
        for (i, j), mult in sorted(Counter(dict(counts)).items(), reverse=True):
            if mult < 0:
                raise ValueError(f"negative multiplicity for {(i, j)}")
            if i < 0 or j < 0:
                raise ValueError(f"negative exponents {(i, j)}")
            if mult:
                items.append(((int(i), int(j)), int(mult)))
        self._items = tuple(items)

    @classmethod
    def from_parts(cls, m_s=0, m_x=None, m_y=None, m_xy=None):
        counts = Counter()
        if m_s:
            counts[(0, 0)] = m_s
        for i, mult in (m_x or {}).items():
            counts[(i, 0)] += mult
        for j, mult in (m_y or {}).items():
            counts[(0, j)] += mult
        for (i, j), mult in (m_xy or {}).items():
            if i == 0 or j == 0:
                raise ValueError(f"m_xy exponents must be positive, got {(i, j)}")
            counts[(i, j)] += mult
        return cls(counts)

    # -- views -------------------------------------------------------------

    @property
    def counts(self) -> dict:
        return dict(self._items)

    @property
    def m_s(self) -> int:
        return dict(self._items).get((0, 0), 0)

    @property
    def m_x(self) -> dict:
        return {i: m for (i, j), m in self._items if i > 0 and j == 0}

    @property
    def m_y(self) -> dict:
        return {j: m for (i, j), m in self._items if i == 0 and j > 0}

    @property
    def m_xy(self) -> dict:
        return {(i, j): m for (i, j), m in self._items if i > 0 and j > 0}

    def total_summands(self) -> int:
        return sum(m for _, m in self._items)

    def dim(self) -> int:
        """Dimension of the realization: a summand (i, j) contributes
        i + j + 1."""
        return sum(m * (i + j + 1) for (i, j), m in self._items)

    def __eq__(self, other):
        return isinstance(other, BiserialIndexModule) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"BiserialIndexModule({dict(self._items)!r})"

    # -- realization -------------------------------------------------------

    def summand_words(self, params: AlgebraParams) -> list[Word]:
        """The summands as words, largest first, with multiplicity."""
        out = []
        for (i, j), mult in self._items:
            w = Word("x" * i + "y" * j, params)
            out.extend([w] * mult)
        return out

    def realize(self, params: AlgebraParams):
        """The actual matrix pair of the direct sum."""
        return direct_sum([string_module(w) for w in self.summand_words(params)])


# ---------------------------------------------------------------------------
# recognition and dimension formulas
# ---------------------------------------------------------------------------

def is_index_module(idx: BiserialIndexModule, n: int, params: AlgebraParams) -> bool:
    """Whether idx is the index module of a stratum of the n-dimensional
    variety: the multiplicity inequalities plus total dimension n(d-1).
    """
    a, b = params.a, params.b
    mx, my, mxy = idx.m_x, idx.m_y, idx.m_xy
    if any(i > a - 2 for i in mx):
        return False
    if any(j > b - 2 for j in my):
        return False
    # mixed summands touching a boundary must be the full algebra
    if any(j == b - 1 and i != a - 1 for (i, j) in mxy):
        return False
    if any(i == a - 1 and j != b - 1 for (i, j) in mxy):
        return False
    if any(i > a - 1 or j > b - 1 for (i, j) in mxy):
        return False
    sx, sy, sxy = sum(mx.values()), sum(my.values()), sum(mxy.values())
    if sx + sxy > n or sy + sxy > n:
        return False
    if idx.m_s + sx + sy + 2 * sxy > 2 * n:
        return False
    return idx.dim() == n * (params.d - 1)


def hom_to_proj_dim(idx: BiserialIndexModule, n: int, params: AlgebraParams) -> int:
    """dim Hom(L, Lambda) for an index module L: every non-projective
    summand contributes its dimension plus one, each Lambda exactly its
    dimension -- so n(d-1) + (#summands) - (#Lambda summands)."""
    p = idx.m_xy.get((params.a - 1, params.b - 1), 0)
    return n * (params.d - 1) + idx.total_summands() - p


def stratum_dim(idx: BiserialIndexModule, n: int, params: AlgebraParams) -> int:
    """Dimension of the stratum indexed by idx inside the n-dimensional
    variety:  n * dim Hom(L, Lambda) - dim End(L)."""
    return n * hom_to_proj_dim(idx, n, params) - end_dim(idx.realize(params))


# ---------------------------------------------------------------------------
# moves between index modules
# ---------------------------------------------------------------------------

def _take_two(idx, s1, s2):
    counts = Counter(idx.counts)
    need = Counter([s1, s2])
    for key, m in need.items():
        if counts[key] < m:
            raise ValueError(f"index module has no {m} copies of {key}")
        counts[key] -= m
    return counts


def flip(idx: BiserialIndexModule, s1, s2) -> BiserialIndexModule:
    """Exchange tails between nested summands: {x^i y^j, x^p y^q} with
    p <= i, q <= j becomes {x^i y^q, x^p y^j}.  The result is less
    degenerate (its orbit is larger; the input lies in its closure).
    """
    (i, j), (p, q) = s1, s2
    if not (p <= i and q <= j):
        raise ValueError(f"flip needs nested exponents, got {s1} vs {s2}")
    counts = _take_two(idx, s1, s2)
    counts[(i, q)] += 1
    counts[(p, j)] += 1
    return BiserialIndexModule(counts)


def box_move(idx: BiserialIndexModule, s1, s2, letter: str, params: AlgebraParams) -> BiserialIndexModule:
    """Move one box of the given letter between two summands:

      x:  {x^i y^j, x^p y^q}, 1 <= p <= i <= a-2  ->  {x^{i+1} y^j, x^{p-1} y^q}
      y:  mirror in the second exponent, bounded by b-2.

    Like flip, the output is the less degenerate side.
    """
    (i, j), (p, q) = s1, s2
    if letter == "x":
        if not 1 <= p <= i <= params.a - 2:
            raise ValueError(f"x box move needs 1 <= p <= i <= a-2, got p={p}, i={i}")
        new1, new2 = (i + 1, j), (p - 1, q)
    elif letter == "y":
        if not 1 <= q <= j <= params.b - 2:
            raise ValueError(f"y box move needs 1 <= q <= j <= b-2, got q={q}, j={j}")
        new1, new2 = (i, j + 1), (p, q - 1)
    else:
        raise ValueError(f"letter must be x or y, got {letter!r}")
    counts = _take_two(idx, s1, s2)
    counts[new1] += 1
    counts[new2] += 1
    return BiserialIndexModule(counts)


# ---------------------------------------------------------------------------
# the index modules of the classification
# ---------------------------------------------------------------------------

def _minus_parts(p: Partition) -> list:
    return [v - 1 for v in p if v >= 2]


def index_of_regular_stratum(a_part, b_part, params: AlgebraParams) -> BiserialIndexModule:
    """The index module of the regular stratum C(a_part, b_part):

        L = Lambda^{n-t}  +  sum_{i=1}^t M(x^{a-c_{t-i+1}-1} y^{b-d_i-1})

    with c = a_part - 1, d = b_part - 1 (both length t).  The biggest
    leftover x-exponent pairs with the smallest leftover y-exponent.
    """
    a_part, b_part = Partition(a_part), Partition(b_part)
    n = a_part.size()
    if b_part.size() != n:
        raise ValueError("partitions must have equal size")
    if a_part.length() + b_part.length() != n:
        raise ValueError(f"not a regular pair: l(a) + l(b) = "
                         f"{a_part.length() + b_part.length()} != {n}")
    c, d = _minus_parts(a_part), _minus_parts(b_part)
    t = len(c)
    if len(d) != t:
        raise ValueError(f"not a regular pair: l(a-1) = {t} != l(b-1) = {len(d)}")
    if (a_part and a_part[0] > params.a) or (b_part and b_part[0] > params.b):
        raise ValueError("partition parts exceed the nilpotency bounds")
    counts = Counter()
    counts[(params.a - 1, params.b - 1)] += n - t
    for i in range(1, t + 1):
        counts[(params.a - c[t - i] - 1, params.b - d[i - 1] - 1)] += 1
    return BiserialIndexModule(counts)


def semiproj_index(a_part, b_part, params: AlgebraParams):
    """The open string P and index module L of a semi-projective stratum.

    Preconditions: a_part contains a, b_part contains b, the lengths obey
    l(a_part) + l(b_part) = n + 1, and l(a_part - 1) = l(b_part - 1) = t.
    With c = a_part - 1, d = b_part - 1:

        P = x^{c_1} y^{d_t} x^{c_2} y^{d_{t-1}} .. x^{c_t} y^{d_1}
        L = Lambda^{n-t}  +  sum_{i=2}^t M(x^{a-c_i-1} y^{b-d_{t-i+2}-1})

    Returns (P, L); the orbit of M(P) is dense in the stratum of L.
    """
    a_part, b_part = Partition(a_part), Partition(b_part)
    n = a_part.size()
    if b_part.size() != n:
        raise ValueError("partitions must have equal size")
    if not a_part or a_part[0] != params.a or not b_part or b_part[0] != params.b:
        raise ValueError("need a full part a in a_part and b in b_part")
    if a_part.length() + b_part.length() != n + 1:
        raise ValueError(f"need l(a) + l(b) = n + 1, got "
                         f"{a_part.length() + b_part.length()} vs {n + 1}")
    c, d = _minus_parts(a_part), _minus_parts(b_part)
    t = len(c)
    if len(d) != t:
        raise ValueError(f"need l(a-1) = l(b-1), got {t} vs {len(d)}")
    chunks = []
    for i in range(t):
        chunks.append("x" * c[i])
        chunks.append("y" * d[t - 1 - i])
    word = Word("".join(chunks), params)
    counts = Counter()
    counts[(params.a - 1, params.b - 1)] += n - t
    for i in range(2, t + 1):
        counts[(params.a - c[i - 1] - 1, params.b - d[t - i + 1] - 1)] += 1
    return word, BiserialIndexModule(counts)
