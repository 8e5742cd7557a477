"""Matrix-pair realizations of modules over K[x,y]/(xy, x^a, y^b).

A point of the nilpotent-pair variety is a pair (A, B) of n x n matrices
with AB = BA = A^a = B^b = 0; equivalently, an n-dimensional module with
x acting through A and y through B on coordinate vectors.  This file
builds the two families that generate everything we classify:

String modules M(C), C a valid word c_1 .. c_L, have basis e_0, .., e_L
and the letter c_i couples e_{i-1} to e_i:

    c_i = x:   e_i . x = e_{i-1}        (A e_i = e_{i-1})
    c_i = y:   e_{i-1} . y = e_i        (B e_{i-1} = e_i)

So arrows point "leftward along x, rightward along y"; M("") is the
simple module, and M(x^{a-1}y^{b-1}) is the regular representation.

Band modules M(w, lambda_1..lambda_k) over a primitive band w (taken in
canonical rotation, so w ends in y) have basis z_{i,j}, i = 1..|w| along
the word and j = 1..k layers, flattened layer-major.  Letters act within
a layer as for strings; the final y wraps around and couples the layers
into one indecomposable:

    z_{m,j} . y = lambda_j z_{1,j} + z_{1,j-1}   (z_{1,0} := 0)

All lambdas must be nonzero -- lambda = 0 would degenerate the band into
a string.  With k = 1 and distinct lambdas this realizes the familiar
one-parameter families; equal lambdas stack Jordan layers.
"""

from __future__ import annotations

from fractions import Fraction

from .exactla import RationalMatrix, hstack, vstack
from .partitions import Partition
from .words import AlgebraParams, Word, band_class, parse_word


class MatrixPairModule:
    """A pair (A, B) of n x n rational matrices together with the algebra
    parameters, optionally remembering the string/band summands it was
    assembled from (summand-aware shortcuts in homalg key on that).

    summands is a tuple of ("string", word) and ("band", word, lambdas)
    entries in block order, or None when the origin is unknown (e.g. a
    point parsed from JSON).
    """

    __slots__ = ("n", "A", "B", "params", "summands")

    def __init__(self, n, A, B, params, summands=None):
        if A.nrows != n or A.ncols != n or B.nrows != n or B.ncols != n:
            raise ValueError(f"matrices must be {n}x{n}")
        self.n = n
        self.A = A
        self.B = B
        self.params = params
        self.summands = tuple(summands) if summands is not None else None

    def __repr__(self):
        return f"MatrixPairModule(n={self.n}, a={self.params.a}, b={self.params.b})"

    # -- the defining relations -------------------------------------------

    def verify_relations(self) -> bool:
        """True iff AB = BA = A^a = B^b = 0."""
        a, b = self.params.a, self.params.b
        if not self.A.mul(self.B).is_zero():
            return False
        if not self.B.mul(self.A).is_zero():
            return False
        return _power(self.A, a).is_zero() and _power(self.B, b).is_zero()

    # -- invariants --------------------------------------------------------

    def jordan_pair(self):
        """The pair (p(A), p(B)) of Jordan types, as partitions of n."""
        return (_jordan_type(self.A), _jordan_type(self.B))

    def stats(self) -> dict:
        """Basic module invariants: ranks, top and socle dimension, and
        regularity (rk A + rk B = n, i.e. exactly n independent arrows).
        """
        rka, rkb = self.A.rank(), self.B.rank()
        top = self.n - hstack([self.A, self.B]).rank()
        soc = self.n - vstack([self.A, self.B]).rank()
        return {
            "rkA": rka,
            "rkB": rkb,
            "top_dim": top,
            "soc_dim": soc,
            "regular": rka + rkb == self.n,
        }

    def dual_point(self) -> "MatrixPairModule":
        """The dual module: transpose both matrices.  Sends M(C) to
        M(reverse(C)); summand metadata is dropped."""
        return MatrixPairModule(
            self.n, self.A.transpose(), self.B.transpose(), self.params
        )

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        """Plain-dict form with entries as exact "p/q" strings."""
        return {
            "n": self.n,
            "a": self.params.a,
            "b": self.params.b,
            "A": [[str(v) for v in row] for row in self.A.rows],
            "B": [[str(v) for v in row] for row in self.B.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MatrixPairModule":
        n = int(data["n"])
        params = AlgebraParams(int(data["a"]), int(data["b"]))
        A = RationalMatrix([[Fraction(v) for v in row] for row in data["A"]], n)
        B = RationalMatrix([[Fraction(v) for v in row] for row in data["B"]], n)
        if A.nrows != n or B.nrows != n:
            raise ValueError("matrix size does not match n")
        return cls(n, A, B, params)


def _power(m: RationalMatrix, k: int) -> RationalMatrix:
    out = m
    for _ in range(k - 1):
        if out.is_zero():
            break
        out = out.mul(m)
    return out


def _jordan_type(m: RationalMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers:
    the sequence (rk m^{k-1} - rk m^k) is the dual partition."""
    diffs = []
    prev = m.nrows
    power = m
    while prev > 0:
        r = power.rank()
        diffs.append(prev - r)
        if r == 0:
            break
        prev = r
        power = power.mul(m)
    return Partition(diffs).dual()


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def string_module(word, params: AlgebraParams | None = None) -> MatrixPairModule:
    """The string module M(word) of dimension |word| + 1.

    word may be a Word or a plain/caret string (then params is required).
    """
    if not isinstance(word, Word):
        if params is None:
            raise ValueError("params required when word is a plain string")
        word = parse_word(word, params)
    params = word.params
    n = len(word) + 1
    A = RationalMatrix.zeros(n, n)
    B = RationalMatrix.zeros(n, n)
    for i, letter in enumerate(word):
        if letter == "x":
            A.rows[i][i + 1] = Fraction(1)
        else:
            B.rows[i + 1][i] = Fraction(1)
    return MatrixPairModule(n, A, B, params, [("string", word)])


def band_module(word, lambdas, params: AlgebraParams | None = None) -> MatrixPairModule:
    """The band module M(word; lambda_1, .., lambda_k), dimension |word|*k.

    word must be a primitive band (any rotation; the canonical one is
    used).  lambdas is a sequence of nonzero scalars, or an int k for the
    default lambdas 1, 2, .., k.
    """
    if not isinstance(word, Word):
        if params is None:
            raise ValueError("params required when word is a plain string")
        word = parse_word(word, params)
    params = word.params
    kind, canonical = band_class(word)
    if kind != "primitive":
        raise ValueError(f"band_module needs a primitive band, got {kind} for {str(word)!r}")
    if isinstance(lambdas, int):
        lambdas = range(1, lambdas + 1)
    lambdas = tuple(Fraction(v) for v in lambdas)
    if not lambdas:
        raise ValueError("need at least one lambda layer")
    if any(v == 0 for v in lambdas):
        raise ValueError("band lambdas must be nonzero")

    m, k = len(canonical), len(lambdas)
    n = m * k
    A = RationalMatrix.zeros(n, n)
    B = RationalMatrix.zeros(n, n)
    idx = lambda i, j: j * m + i  # position i in layer j, layer-major
    for j in range(k):
        for i in range(m - 1):
            if canonical[i] == "x":
                A.rows[idx(i, j)][idx(i + 1, j)] = Fraction(1)
            else:
                B.rows[idx(i + 1, j)][idx(i, j)] = Fraction(1)
        # canonical form ends with y: the wrap-around letter couples the
        # end of the word back to the start, and adjacent layers to each
        # other (z_{m,j} . y = lambda_j z_{1,j} + z_{1,j-1})
        B.rows[idx(0, j)][idx(m - 1, j)] = lambdas[j]
        if j > 0:
            B.rows[idx(0, j - 1)][idx(m - 1, j)] = Fraction(1)
    return MatrixPairModule(n, A, B, params, [("band", canonical, lambdas)])


def direct_sum(modules) -> MatrixPairModule:
    """Block-diagonal direct sum; all summands must share parameters.
    Summand metadata is concatenated when every part carries it."""
    modules = list(modules)
    if not modules:
        raise ValueError("direct_sum of nothing")
    params = modules[0].params
    if any(m.params != params for m in modules):
        raise ValueError("direct_sum needs equal algebra parameters")
    n = sum(m.n for m in modules)
    A = RationalMatrix.zeros(n, n)
    B = RationalMatrix.zeros(n, n)
    off = 0
    for mod in modules:
        for i in range(mod.n):
            for j in range(mod.n):
                A.rows[off + i][off + j] = mod.A.rows[i][j]
                B.rows[off + i][off + j] = mod.B.rows[i][j]
        off += mod.n
    summands = None
    if all(m.summands is not None for m in modules):
        summands = [s for m in modules for s in m.summands]
    return MatrixPairModule(n, A, B, params, summands)


def summand_dim(s) -> int:
    """Dimension contributed by one summand descriptor."""
    if s[0] == "string":
        return len(s[1]) + 1
    return len(s[1]) * len(s[2])
