"""Self-verification suites.

Eight named checks, each confronting a fast route (closed forms, the
classification tables, graph combinatorics) with an independent slow
route (exact linear algebra, brute enumeration).  The same checks back
the command-line `verify` subcommand and the acceptance tests.

Levels: "quick" is a smoke pass in seconds, "full" runs the documented
ranges.  Check output is deterministic for a fixed seed; timings are
reported separately and never enter the details.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    components,
    delta_dim,
    nnn_components,
    nonregular_components,
    normalize_params,
    open_orbit_dim_formula,
    regular_components,
    regular_dense,
    regular_pairs,
)
from .homalg import end_dim, ext1_vanishes, hom_dim_graph, hom_dim_oracle
from .indexmod import index_of_regular_stratum, semiproj_index, stratum_dim
from .modmatrix import band_module, direct_sum, string_module
from .partitions import Partition, enumerate_partitions, reduced_length
from .words import AlgebraParams, Word, band_class, enumerate_words

# ---------------------------------------------------------------------------
# the published tables for a = b = 3 (the yardstick of checks 1 and 2)
# ---------------------------------------------------------------------------

GOLDEN_REGULAR_33 = {
    2: {(("xy", 1),): 3},
    3: {(("xxy", 1),): 7, (("xyy", 1),): 7},
    4: {(("xxyy", 1),): 13},
    5: {(("xxy", 1), ("xy", 1)): 20, (("xyy", 1), ("xy", 1)): 20},
    6: {(("xxy", 2),): 28, (("xyy", 2),): 28, (("xxy", 1), ("xyy", 1)): 30},
    7: {(("xxyy", 1), ("xxy", 1)): 40, (("xxyy", 1), ("xyy", 1)): 40},
    8: {(("xxy", 2), ("xy", 1)): 51, (("xyy", 2), ("xy", 1)): 51,
        (("xxyy", 2),): 52, (("xxy", 1), ("xyy", 1), ("xy", 1)): 53},
    9: {(("xxy", 3),): 63, (("xyy", 3),): 63,
        (("xxy", 2), ("xyy", 1)): 67, (("xxy", 1), ("xyy", 2)): 67},
    10: {(("xxyy", 1), ("xxy", 2)): 81, (("xxyy", 1), ("xyy", 2)): 81,
         (("xxyy", 1), ("xxy", 1), ("xyy", 1)): 83},
    11: {(("xxy", 3), ("xy", 1)): 96, (("xyy", 3), ("xy", 1)): 96,
         (("xxyy", 2), ("xxy", 1)): 99, (("xxyy", 2), ("xyy", 1)): 99,
         (("xxy", 2), ("xyy", 1), ("xy", 1)): 100,
         (("xxy", 1), ("xyy", 2), ("xy", 1)): 100},
    12: {(("xxy", 4),): 112, (("xyy", 4),): 112, (("xxyy", 3),): 117,
         (("xxy", 3), ("xyy", 1)): 118, (("xxy", 1), ("xyy", 3)): 118,
         (("xxy", 2), ("xyy", 2)): 120},
}

GOLDEN_ORBIT_33 = {
    5: {("xxyy",): 20},
    7: {("xxyxyy",): 40},
    8: {("xxyxxyy",): 52, ("xxyyxyy",): 52},
    9: {("xxyyxxyy",): 66, ("xxyxyxyy",): 66},
    10: {("xxyy", "xxyy"): 80, ("xxyxxyxyy",): 82, ("xxyxyyxyy",): 82},
    11: {("xxyxxyxxyy",): 98, ("xxyyxyyxyy",): 98, ("xxyxxyyxyy",): 100},
    12: {("xxyy", "xxyxyy"): 117, ("xxyyxxyyxyy",): 118,
         ("xxyxxyyxxyy",): 118, ("xxyxxyxyxyy",): 118,
         ("xxyxyxyyxyy",): 118},
}


class CheckFailure(Exception):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------------------
# random modules (check 7 and anyone else who wants fuzz input)
# ---------------------------------------------------------------------------

_PARAM_POOL = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3), (3, 4), (4, 4)]


def _random_string_word(rng, params, max_len):
    text = []
    run_letter, run_len = None, 0
    for _ in range(rng.randint(0, max_len)):
        choices = []
        for letter, cap in (("x", params.a - 1), ("y", params.b - 1)):
            if letter == run_letter:
                if run_len < cap:
                    choices.append(letter)
            else:
                choices.append(letter)
        if not choices:
            break
        letter = rng.choice(choices)
        run_len = run_len + 1 if letter == run_letter else 1
        run_letter = letter
        text.append(letter)
    return Word("".join(text), params)


def _random_band_word(rng, params):
    # alternating x/y runs always make a valid band; a single run pair is
    # automatically primitive, two pairs may be periodic and get resampled
    for _ in range(8):
        t = rng.randint(1, 2)
        chunks = []
        for _ in range(t):
            chunks.append("x" * rng.randint(1, params.a - 1))
            chunks.append("y" * rng.randint(1, params.b - 1))
        word = Word("".join(chunks), params)
        if t == 1 or band_class(word)[0] == "primitive":
            return word
    return Word("xy", params)


def random_module(rng, params=None, max_summands=3, max_len=5):
    """A seeded random direct sum of string and band modules, with the
    summand metadata kept for downstream bookkeeping checks."""
    if params is None:
        params = AlgebraParams(*rng.choice(_PARAM_POOL))
    parts = []
    for _ in range(rng.randint(1, max_summands)):
        if rng.random() < 0.3:
            word = _random_band_word(rng, params)
            mult = rng.randint(1, 2)
            lambdas = [Fraction(rng.randint(1, 5)) for _ in range(mult)]
            parts.append(band_module(word, lambdas, params))
        else:
            parts.append(string_module(_random_string_word(rng, params, max_len)))
    return direct_sum(parts)


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def _family_key(comp):
    return tuple((str(w), m) for w, m in comp.family)


def _check_regular_table(level, seed):
    top = 12 if level == "full" else 8
    rows = 0
    for n in range(2, top + 1):
        got = {_family_key(c): c.dim
               for c in regular_components(n, normalize_params(n, 3, 3))}
        if got != GOLDEN_REGULAR_33[n]:
            raise CheckFailure(f"regular components differ at n = {n}: "
                               f"{got} != {GOLDEN_REGULAR_33[n]}")
        rows += len(got)
    return f"{rows} regular components over n = 2..{top}"


def _check_orbit_table(level, seed):
    top = 12 if level == "full" else 8
    rows = 0
    for n in range(2, top + 1):
        comps = nonregular_components(n, normalize_params(n, 3, 3))
        proj = {tuple(str(w) for w in c.strings): c.dim
                for c in comps if c.side == "semi-projective"}
        want = GOLDEN_ORBIT_33.get(n, {})
        if proj != want:
            raise CheckFailure(f"orbit components differ at n = {n}: "
                               f"{proj} != {want}")
        inj = {tuple(str(w) for w in c.strings): c.dim
               for c in comps if c.side == "semi-injective"}
        mirrored = {
            tuple(sorted((s[::-1] for s in key), key=lambda t: (len(t), t))): d
            for key, d in proj.items()}
        if inj != mirrored:
            raise CheckFailure(f"reflected components differ at n = {n}")
        rows += len(comps)
    return f"{rows} orbit components (both sides) over n = 2..{top}"


def _check_nnn(level, seed):
    top = 7 if level == "full" else 5
    for n in range(2, top + 1):
        ref = [(c.a_part, c.b_part, _family_key(c), c.dim)
               for c in nnn_components(n)]
        got = [(c.a_part, c.b_part, _family_key(c), c.dim)
               for c in components(n, n, n)]
        if got != ref:
            raise CheckFailure(f"V(n, n, n) components differ at n = {n}")
        if len(ref) != n - 1 or any(d != n * n - n + 1 for *_, d in ref):
            raise CheckFailure(f"V(n, n, n) shape wrong at n = {n}: {ref}")
    return f"n = 2..{top}: n - 1 components of dimension n^2 - n + 1"


def _check_hom_agreement(level, seed):
    if level == "full":
        max_len, grids = 6, [(3, 3), (2, 3), (4, 3)]
    else:
        max_len, grids = 4, [(3, 3), (2, 3)]
    pairs = 0
    for a, b in grids:
        params = AlgebraParams(a, b)
        words = list(enumerate_words(max_len, params))
        mods = {w: string_module(w) for w in words}
        for w1 in words:
            for w2 in words:
                g = hom_dim_graph(w1, w2)
                o = hom_dim_oracle(mods[w1], mods[w2])
                if g != o:
                    raise CheckFailure(
                        f"Hom({w1}, {w2}) at ({a}, {b}): "
                        f"graph count {g}, linear algebra {o}")
                pairs += 1
    return f"{pairs} string pairs across {len(grids)} parameter sets"


def _semiproj_pairs(n, params):
    for a_part in enumerate_partitions(n, params.a):
        if params.a not in a_part:
            continue
        for b_part in enumerate_partitions(n, params.b):
            if params.b not in b_part:
                continue
            if len(a_part) + len(b_part) != n + 1:
                continue
            if reduced_length(a_part) != reduced_length(b_part):
                continue
            yield Partition(a_part), Partition(b_part)


def _check_stratum_dims(level, seed):
    if level == "full":
        top, bounds = 10, [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    else:
        top, bounds = 6, [(2, 2), (2, 3), (3, 3)]
    regular = semiproj = formulas = 0
    for n in range(2, top + 1):
        for a, b in bounds:
            params = normalize_params(n, a, b)
            for pair in regular_pairs(n, params):
                idx = index_of_regular_stratum(*pair, params)
                if delta_dim(*pair) != stratum_dim(idx, n, params):
                    raise CheckFailure(
                        f"delta formula vs index module at {pair}, ({a}, {b}):"
                        f" {delta_dim(*pair)} != {stratum_dim(idx, n, params)}")
                regular += 1
            for pair in _semiproj_pairs(n, params):
                word, idx = semiproj_index(*pair, params)
                orbit = n * n - end_dim(string_module(word))
                if orbit != stratum_dim(idx, n, params):
                    raise CheckFailure(
                        f"open orbit vs stratum at {pair}, ({a}, {b}): "
                        f"{orbit} != {stratum_dim(idx, n, params)}")
                try:
                    closed = open_orbit_dim_formula(*pair, params)
                except ValueError:
                    closed = None
                if closed is not None:
                    if closed != orbit:
                        raise CheckFailure(
                            f"closed form at {pair}, ({a}, {b}): "
                            f"{closed} != {orbit}")
                    formulas += 1
                if (a, b) == (3, 3):
                    table = GOLDEN_ORBIT_33.get(n, {}).get((str(word),))
                    if table is not None and table != orbit:
                        raise CheckFailure(
                            f"table value at {pair}: {table} != {orbit}")
                semiproj += 1
    return (f"{regular} regular and {semiproj} semi-projective strata, "
            f"{formulas} closed-form values")


def _check_remarks(level, seed):
    # a string used once may carry self-extensions and still give a
    # component: the open string of dimension 9
    p33 = AlgebraParams(3, 3)
    w = Word("xxyxyxyy", p33)
    if ext1_vanishes(w, w):
        raise CheckFailure("Ext^1(M(xxyxyxyy), M(xxyxyxyy)) should not vanish")
    rows = {tuple(str(u) for u in c.strings): c.dim
            for c in nonregular_components(9, p33)
            if c.side == "semi-projective"}
    if rows.get(("xxyxyxyy",)) != 66:
        raise CheckFailure(f"xxyxyxyy should give a 66-dimensional component,"
                           f" got {rows}")
    # the smallest variety with orbit components: two open orbits at n = 3
    comps = components(3, 2, 2)
    summary = sorted((c.kind, c.dim, tuple(str(w) for w in c.strings))
                     for c in comps)
    if summary != [("orbit", 6, ("xy",)), ("orbit", 6, ("yx",))]:
        raise CheckFailure(f"V(3, 2, 2) should be two 6-dimensional orbit "
                           f"closures, got {summary}")
    return "self-extension exemption and V(3, 2, 2) both as published"


def _check_random_modules(level, seed):
    import random
    count = 10_000 if level == "full" else 500
    rng = random.Random(seed)
    for k in range(count):
        mod = random_module(rng)
        if not mod.verify_relations():
            raise CheckFailure(f"relations fail at sample {k}: "
                               f"{mod.to_json()}")
        stats = mod.stats()
        strings = sum(1 for s in mod.summands if s[0] == "string")
        if stats["rkA"] + stats["rkB"] != mod.n - strings:
            raise CheckFailure(
                f"rank bookkeeping fails at sample {k}: rkA + rkB = "
                f"{stats['rkA'] + stats['rkB']}, n - #strings = "
                f"{mod.n - strings}")
        xs = ys = 0
        for s in mod.summands:
            mult = 1 if s[0] == "string" else len(s[2])
            xs += mult * str(s[1]).count("x")
            ys += mult * str(s[1]).count("y")
        if stats["rkA"] != xs or stats["rkB"] != ys:
            raise CheckFailure(
                f"letter-count ranks fail at sample {k}: "
                f"({stats['rkA']}, {stats['rkB']}) != ({xs}, {ys})")
    return f"{count} random modules, seed {seed}"


def _check_regular_density(level, seed):
    if level == "full":
        top, bounds = 12, [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    else:
        top, bounds = 8, [(2, 2), (2, 3), (3, 3)]
    cases = 0
    for n in range(2, top + 1):
        for a, b in bounds:
            empty = not nonregular_components(n, normalize_params(n, a, b))
            if empty != regular_dense(n, a, b):
                raise CheckFailure(
                    f"density criterion fails at n = {n}, ({a}, {b}): "
                    f"criterion {regular_dense(n, a, b)}, enumeration "
                    f"{'empty' if empty else 'nonempty'}")
            cases += 1
    return f"{cases} (n, a, b) cases"


CHECKS = [
    ("regular-table", _check_regular_table),
    ("orbit-table", _check_orbit_table),
    ("nnn-components", _check_nnn),
    ("hom-agreement", _check_hom_agreement),
    ("stratum-dims", _check_stratum_dims),
    ("remarks", _check_remarks),
    ("random-modules", _check_random_modules),
    ("regular-density", _check_regular_density),
]


def run_check(name, level="quick", seed=0) -> CheckResult:
    fn = dict(CHECKS).get(name)
    if fn is None:
        raise ValueError(f"unknown check {name!r}; have "
                         f"{', '.join(n for n, _ in CHECKS)}")
    t0 = time.perf_counter()
    try:
        detail = fn(level, seed)
        passed = True
    except CheckFailure as exc:
        detail = str(exc)
        passed = False
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


def run_suite(level="quick", seed=0, names=None, jobs=1) -> list:
    """Run the named checks (all by default) and return their results in
    listing order.  jobs > 1 runs them in a thread pool; the result
    order stays deterministic."""
    picked = [n for n, _ in CHECKS] if names is None else list(names)
    unknown = [n for n in picked if n not in dict(CHECKS)]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_check, n, level, seed) for n in picked]
            return [f.result() for f in futures]
    return [run_check(n, level, seed) for n in picked]
