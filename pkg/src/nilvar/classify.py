"""Irreducible components of the variety of commuting nilpotent pairs.

V(n, a, b) is the set of pairs (A, B) of n x n matrices with
AB = BA = 0, A^a = 0, B^b = 0.  Its irreducible components come in two
kinds:

* regular components -- closures of strata C(a_part, b_part) indexed by
  "regular" pairs of partitions of n (the generic Jordan types of A and
  B on the stratum).  The generic modules form a family of direct sums
  of band modules, the diamond of the pair; the stratum dimension has
  the closed form delta_dim.

* orbit components -- closures of single GL_n-orbits of exceptional
  string modules: direct sums of Ext-orthogonal semi-projective open
  strings, together with their reflections (the semi-injective side).

Everything here is arithmetic on partitions and words; the only
linear-algebra input is dim End of explicit string direct sums, used
for the orbit dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homalg import end_dim, ext1_vanishes
from .modmatrix import direct_sum, string_module
from .partitions import Partition, dominates, enumerate_partitions, reduced_length
from .words import AlgebraParams, Word, enumerate_open_strings


# ---------------------------------------------------------------------------
# regular pairs and their strata
# ---------------------------------------------------------------------------

def is_regular_pair(a_part, b_part) -> bool:
    """A pair of partitions of n is regular iff the lengths add up to n
    and the reduced lengths (number of parts >= 2) agree."""
    a_part, b_part = Partition(a_part), Partition(b_part)
    n = a_part.size()
    if b_part.size() != n:
        return False
    if a_part.length() + b_part.length() != n:
        return False
    return reduced_length(a_part) == reduced_length(b_part)


def regular_pairs(n, params: AlgebraParams):
    """All regular pairs of partitions of n with parts bounded by a, b."""
    for a_part in enumerate_partitions(n, params.a):
        for b_part in enumerate_partitions(n, params.b):
            if is_regular_pair(a_part, b_part):
                yield Partition(a_part), Partition(b_part)


def _minus(p: Partition) -> Partition:
    return Partition(v - 1 for v in p if v >= 2)


def diamond_family(a_part, b_part, params: AlgebraParams):
    """The bands of the generic module on the stratum of a regular pair:
    with c = a_part - 1 and d = b_part - 1 (both sorted descending), the
    i-th band is x^{c_i} y^{d_{t-i+1}} -- the largest leftover x-run
    pairs with the smallest leftover y-run.

    Returns [(band word, multiplicity)], longest bands first.
    """
    a_part, b_part = Partition(a_part), Partition(b_part)
    c, d = _minus(a_part), _minus(b_part)
    t = len(c)
    if len(d) != t:
        raise ValueError(f"not a regular pair: l(a-1) = {t} != l(b-1) = {len(d)}")
    mults = {}
    for i in range(t):
        text = "x" * c[i] + "y" * d[t - 1 - i]
        mults[text] = mults.get(text, 0) + 1
    ordered = sorted(mults, key=lambda s: (-len(s), s))
    return [(Word(s, params), mults[s]) for s in ordered]


def delta_dim(a_part, b_part) -> int:
    """Dimension of the regular stratum C(a_part, b_part):

        n^2 - sum_i m_i^2 - sum_i n_i^2 + t^2

    where (m_i), (n_i) are the duals of a_part - 1, b_part - 1 and t is
    their common length."""
    a_part, b_part = Partition(a_part), Partition(b_part)
    n = a_part.size()
    c, d = _minus(a_part), _minus(b_part)
    return (n * n - sum(m * m for m in c.dual()) - sum(m * m for m in d.dual())
            + len(c) ** 2)


def _front_loaded(total, parts, cap):
    """The dominance-largest partition with the given number of parts,
    each in [2, cap], of the given total; None if there is none."""
    if not 2 * parts <= total <= cap * parts:
        return None
    out, left = [], total
    for k in range(parts):
        v = min(cap, left - 2 * (parts - k - 1))
        out.append(v)
        left -= v
    return out


def ip_maximal(n: int, params: AlgebraParams, i: int, p: int):
    """The dominance-largest regular pair in the cell with l(a_part) = i
    and l(a_part - 1) = l(b_part - 1) = p, or None when the cell is
    empty.  Feasibility: p <= min(i, n-i), n-i <= p(a-1), i <= p(b-1).
    """
    if not 1 <= p <= min(i, n - i):
        return None
    big_a = _front_loaded(n - (i - p), p, params.a)
    big_b = _front_loaded(n - (n - i - p), p, params.b)
    if big_a is None or big_b is None:
        return None
    return (Partition(big_a + [1] * (i - p)),
            Partition(big_b + [1] * (n - i - p)))


def is_regular_component(a_part, b_part, params: AlgebraParams) -> bool:
    """Whether the closure of the regular stratum C(a_part, b_part) is an
    irreducible component: at most one part of a_part outside {1, 2, a},
    likewise for b_part with b, and the reduced length is at most
    #(parts = a) + #(parts = b) + 1."""
    a_part, b_part = Partition(a_part), Partition(b_part)
    if not is_regular_pair(a_part, b_part):
        raise ValueError(f"({a_part}, {b_part}) is not a regular pair")
    if a_part and a_part[0] > params.a or b_part and b_part[0] > params.b:
        raise ValueError("partition parts exceed the nilpotency bounds")
    if sum(1 for v in a_part if v not in (1, 2, params.a)) > 1:
        return False
    if sum(1 for v in b_part if v not in (1, 2, params.b)) > 1:
        return False
    full = (sum(1 for v in a_part if v == params.a)
            + sum(1 for v in b_part if v == params.b))
    return reduced_length(a_part) <= full + 1


# ---------------------------------------------------------------------------
# closure criteria
# ---------------------------------------------------------------------------

def stratum_closure_leq(pair1, pair2) -> bool:
    """True when the criterion certifies C(pair1) inside the closure of
    C(pair2): the pairs lie in the same (length, reduced length) cell
    and dominate componentwise.  Says nothing about pairs in different
    cells (returns False there)."""
    a1, b1 = Partition(pair1[0]), Partition(pair1[1])
    a2, b2 = Partition(pair2[0]), Partition(pair2[1])
    for x, y in ((a1, b1), (a2, b2)):
        if not is_regular_pair(x, y):
            raise ValueError(f"({x}, {y}) is not a regular pair")
    if (a1.length(), reduced_length(a1)) != (a2.length(), reduced_length(a2)):
        return False
    return dominates(a1, a2) and dominates(b1, b2)


def delta_closure_leq_nnn(pair1, pair2) -> bool:
    """Closure order of the strata when a, b >= n (no nilpotency caps
    besides A, B nilpotent): plain componentwise dominance."""
    a1, b1 = Partition(pair1[0]), Partition(pair1[1])
    a2, b2 = Partition(pair2[0]), Partition(pair2[1])
    return dominates(a1, a2) and dominates(b1, b2)


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """One irreducible component, printable and JSON-serializable.

    kind "regular": carries the partition pair and the band family.
    kind "orbit":   carries the side and the open strings of the sum.
    kind "zero":    the point variety at n = 1.
    """
    kind: str
    dim: int
    a_part: tuple = None
    b_part: tuple = None
    family: tuple = None
    side: str = None
    strings: tuple = None

    def label(self) -> str:
        if self.kind == "regular":
            items = [str(w) if m == 1 else f"({w},{m})" for w, m in self.family]
            body = ",".join(items)
            return body if len(items) == 1 else "{" + body + "}"
        if self.kind == "orbit":
            return " ⊕ ".join(str(w) for w in self.strings)
        return "0"

    def sort_key(self):
        return (-self.dim, self.label())

    def as_dict(self) -> dict:
        if self.kind == "regular":
            return {
                "kind": "regular",
                "a": [int(v) for v in self.a_part],
                "b": [int(v) for v in self.b_part],
                "family": [{"band": w.caret(), "mult": m} for w, m in self.family],
                "dim": self.dim,
            }
        if self.kind == "orbit":
            return {
                "kind": "orbit",
                "side": self.side,
                "strings": [str(w) for w in self.strings],
                "dim": self.dim,
            }
        return {"kind": "zero", "dim": self.dim}


def _regular_component(a_part, b_part, params) -> Component:
    return Component(
        kind="regular",
        dim=delta_dim(a_part, b_part),
        a_part=tuple(a_part),
        b_part=tuple(b_part),
        family=tuple(diamond_family(a_part, b_part, params)),
    )


def regular_components(n: int, params: AlgebraParams) -> list:
    """The regular components of V(n, a, b): the dominance-largest pair
    of each feasible (length, reduced length) cell, kept when the
    maximality criterion holds."""
    out = []
    for i in range(1, n):
        for p in range(1, min(i, n - i) + 1):
            pair = ip_maximal(n, params, i, p)
            if pair is None:
                continue
            if is_regular_component(*pair, params):
                out.append(_regular_component(*pair, params))
    out.sort(key=Component.sort_key)
    return out


def _orbit_dim(words) -> int:
    mod = direct_sum([string_module(w) for w in words])
    return mod.n * mod.n - end_dim(mod)


def _ext_orthogonal(words) -> bool:
    distinct = sorted(set(words), key=str)
    for u in distinct:
        if words.count(u) >= 2 and not ext1_vanishes(u, u):
            return False
    for idx, u in enumerate(distinct):
        for v in distinct[idx + 1:]:
            if not (ext1_vanishes(u, v) and ext1_vanishes(v, u)):
                return False
    return True


def nonregular_components(n: int, params: AlgebraParams) -> list:
    """The orbit components of V(n, a, b): multisets of semi-projective
    open strings of total dimension n with no Ext^1 between distinct
    members and none on a repeated member (a string used once may have
    self-extensions), plus the reflected semi-injective versions."""
    opens = []
    for k in range(2, n + 1):
        opens.extend(enumerate_open_strings(k, params))
    opens.sort(key=lambda w: (len(w), str(w)))

    found = []

    def extend(start, left, chosen):
        if left == 0:
            if _ext_orthogonal(chosen):
                found.append(list(chosen))
            return
        for j in range(start, len(opens)):
            need = len(opens[j]) + 1
            if need > left:
                break
            chosen.append(opens[j])
            extend(j, left - need, chosen)
            chosen.pop()

    extend(0, n, [])

    out = []
    for words in found:
        dim = _orbit_dim(words)
        key = lambda w: (len(w), str(w))
        out.append(Component(kind="orbit", dim=dim, side="semi-projective",
                             strings=tuple(sorted(words, key=key))))
        mirrored = [w.reverse() for w in words]
        out.append(Component(kind="orbit", dim=dim, side="semi-injective",
                             strings=tuple(sorted(mirrored, key=key))))
    out.sort(key=Component.sort_key)
    return out


def normalize_params(n: int, a: int, b: int) -> AlgebraParams:
    """x^a = 0 on an n-dimensional nilpotent pair is no condition once
    a > n, so the bounds cap at n."""
    if n < 2:
        raise ValueError("normalize_params needs n >= 2")
    if a < 2 or b < 2:
        raise ValueError(f"need a, b >= 2, got ({a}, {b})")
    return AlgebraParams(min(a, n), min(b, n))


def components(n: int, a: int, b: int) -> list:
    """All irreducible components of V(n, a, b), regular ones first,
    each group ordered by descending dimension then label."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        # A = B = 0 is the only point
        return [Component(kind="zero", dim=0)]
    params = normalize_params(n, a, b)
    return regular_components(n, params) + nonregular_components(n, params)


def regular_dense(n: int, a: int, b: int) -> bool:
    """Whether the union of the regular strata is dense, i.e. every
    component is regular: exactly when n <= a + b - 2 or n = a + b
    (after capping the bounds at n)."""
    params = normalize_params(n, a, b)
    a, b = params.a, params.b
    return n <= a + b - 2 or n == a + b


# ---------------------------------------------------------------------------
# the unconstrained case a, b >= n
# ---------------------------------------------------------------------------

def nnn_components(n: int) -> list:
    """The components of V(n, n, n) (equivalently a, b >= n): for each
    i = 1..n-1 the regular pair ((n-i+1, 1^{i-1}), (i+1, 1^{n-i-1})),
    whose diamond is the single band x^{n-i} y^i; all have dimension
    n^2 - n + 1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    params = AlgebraParams(n, n)
    out = []
    for i in range(1, n):
        a_part = Partition((n - i + 1,) + (1,) * (i - 1))
        b_part = Partition((i + 1,) + (1,) * (n - i - 1))
        out.append(Component(
            kind="regular",
            dim=n * n - n + 1,
            a_part=tuple(a_part),
            b_part=tuple(b_part),
            family=((Word("x" * (n - i) + "y" * i, params), 1),),
        ))
    out.sort(key=Component.sort_key)
    return out


# ---------------------------------------------------------------------------
# closed form for the dimension of certain open orbits
# ---------------------------------------------------------------------------

def open_orbit_dim_formula(a_part, b_part, params: AlgebraParams) -> int:
    """Dimension of the open orbit of the semi-projective stratum of
    (a_part, b_part), when the reduced partitions have the staircase
    shape

        a_part - 1 = ((a-1)^{p-r-1}, a-v-1, 1^r),  0 <= v <= a-2,
        b_part - 1 = ((b-1)^{p-s-1}, b-w-1, 1^s),  0 <= w <= b-2,

    with 0 <= r, s <= p-1 and r = 0 when v = 0, s = 0 when w = 0:

        n^2 - p^2 - p - 1 - (a-v-2)(p-r)^2 - (b-w-2)(p-s)^2
            - v(p-r-1)^2 - w(p-s-1)^2

    Raises when the shapes do not match.
    """
    a_part, b_part = Partition(a_part), Partition(b_part)
    n = a_part.size()
    if b_part.size() != n:
        raise ValueError("partitions must have equal size")
    c, d = _minus(a_part), _minus(b_part)
    p = len(c)
    if len(d) != p or p == 0:
        raise ValueError("need equal positive reduced lengths")
    v, r = _staircase_match(c, params.a)
    w, s = _staircase_match(d, params.b)
    a, b = params.a, params.b
    return (n * n - p * p - p - 1
            - (a - v - 2) * (p - r) ** 2 - (b - w - 2) * (p - s) ** 2
            - v * (p - r - 1) ** 2 - w * (p - s - 1) ** 2)


def _staircase_match(c: Partition, cap: int):
    """Return (v, r) with c = ((cap-1)^{p-r-1}, cap-v-1, 1^r), under
    0 <= v <= cap-2 and r = 0 when v = 0; the constraints make the match
    unique.  Raises when there is none."""
    p = len(c)
    for r in range(p):
        head, mid, tail = c[:p - r - 1], c[p - r - 1], c[p - r:]
        if any(x != cap - 1 for x in head) or any(x != 1 for x in tail):
            continue
        v = cap - 1 - mid
        if 0 <= v <= cap - 2 and (v != 0 or r == 0):
            return v, r
    raise ValueError(
        f"{list(c)} does not match ((cap-1)^*, cap-v-1, 1^r) for bound {cap}")
