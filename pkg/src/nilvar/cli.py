"""Command-line interface.

    nilvar classify --n 12 --a 3 --b 3
    nilvar tables --a 3 --b 3 --max-n 12
    nilvar hom --source xxy --target xy --oracle
    nilvar ext --source xy --target xxyy
    nilvar module --word xxyy --format json
    nilvar verify --level full --seed 0

Exit codes: 0 on success, 1 on usage or domain errors, 2 when a
verification-style command finds a disagreement.  Output is plain text
or JSON (--format) and is byte-identical across runs for fixed inputs;
NILVAR_THREADS caps the worker count of `verify` (default sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .classify import components, normalize_params
from .homalg import ext1_vanishes, hom_dim_graph, hom_dim_oracle
from .modmatrix import band_module, string_module
from .verify import CHECKS, run_suite
from .words import AlgebraParams, Word


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; keep 2 reserved for failed
    # verification and report usage trouble as 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _component_block(out, comps):
    heads = {"regular": "regular:", "orbit": "open orbits:", "zero": "point:"}
    width = max(len(c.label()) for c in comps)
    seen = []
    for c in comps:
        if c.kind not in seen:
            seen.append(c.kind)
            out.append(heads[c.kind])
        out.append(f"  {c.label():<{width}}  {c.dim}")


def cmd_classify(args) -> int:
    comps = components(args.n, args.a, args.b)
    if args.format == "json":
        params = normalize_params(args.n, args.a, args.b)
        print(_dump({"n": args.n, "a": params.a, "b": params.b,
                     "components": [c.as_dict() for c in comps]}))
        return 0
    out = [f"V({args.n}, {args.a}, {args.b}): {len(comps)} "
           f"component{'s' if len(comps) != 1 else ''}"]
    _component_block(out, comps)
    print("\n".join(out))
    return 0


def cmd_tables(args) -> int:
    rows_reg, rows_orb = [], []
    for n in range(2, args.max_n + 1):
        for c in components(n, args.a, args.b):
            target = rows_reg if c.kind == "regular" else rows_orb
            if c.kind == "orbit" and c.side != "semi-projective":
                continue
            target.append((n, c.label(), c.dim))
    if args.format == "json":
        print(_dump({"a": args.a, "b": args.b, "max_n": args.max_n,
                     "regular": [{"n": n, "component": s, "dim": d}
                                 for n, s, d in rows_reg],
                     "open_orbits": [{"n": n, "component": s, "dim": d}
                                     for n, s, d in rows_orb]}))
        return 0
    out = []
    for title, rows in ((f"regular components, a = {args.a}, b = {args.b}",
                         rows_reg),
                        (f"open-orbit components, semi-projective side, "
                         f"a = {args.a}, b = {args.b} "
                         f"(semi-injective mirrors have equal dimensions)",
                         rows_orb)):
        out.append(title)
        if not rows:
            out.append("  (none)")
        else:
            width = max(len(s) for _, s, _ in rows)
            last_n = None
            for n, s, d in rows:
                tag = f"n = {n:<3}" if n != last_n else " " * 7
                out.append(f"{tag} {s:<{width}}  {d}")
                last_n = n
        out.append("")
    print("\n".join(out).rstrip())
    return 0


def cmd_hom(args) -> int:
    params = AlgebraParams(args.a, args.b)
    src = Word(args.source, params)
    tgt = Word(args.target, params)
    graph = hom_dim_graph(src, tgt)
    if args.oracle:
        oracle = hom_dim_oracle(string_module(src), string_module(tgt))
        if args.format == "json":
            print(_dump({"source": str(src), "target": str(tgt),
                         "graph": graph, "oracle": oracle,
                         "agree": graph == oracle}))
        else:
            print(f"Hom(M({src}), M({tgt})) = {graph}")
            print(f"linear-algebra oracle = {oracle}")
            if graph != oracle:
                print("DISAGREEMENT between counting and linear algebra")
        return 0 if graph == oracle else 2
    if args.format == "json":
        print(_dump({"source": str(src), "target": str(tgt), "graph": graph}))
    else:
        print(f"Hom(M({src}), M({tgt})) = {graph}")
    return 0


def cmd_ext(args) -> int:
    params = AlgebraParams(args.a, args.b)
    src = Word(args.source, params)
    tgt = Word(args.target, params)
    vanishes = ext1_vanishes(src, tgt)
    if args.format == "json":
        print(_dump({"source": str(src), "target": str(tgt),
                     "vanishes": vanishes}))
    else:
        print(f"Ext^1(M({src}), M({tgt})) {'=' if vanishes else '!='} 0")
    return 0


def cmd_module(args) -> int:
    params = AlgebraParams(args.a, args.b)
    word = Word(args.word, params)
    if args.lambdas is not None:
        lambdas = [Fraction(part) for part in args.lambdas.split(",")]
        mod = band_module(word, lambdas, params)
        label = f"band {word.caret()} with parameters {args.lambdas}"
    else:
        mod = string_module(word)
        label = f"M({word})"
    stats = mod.stats()
    pa, pb = mod.jordan_pair()
    if args.format == "json":
        payload = mod.to_json()
        payload["stats"] = stats
        payload["jordan"] = {"A": list(pa), "B": list(pb)}
        print(_dump(payload))
        return 0
    print(f"{label}: dimension {mod.n} over K[x, y] / "
          f"(xy, x^{params.a}, y^{params.b})")
    print(f"  rank A = {stats['rkA']}, rank B = {stats['rkB']}")
    print(f"  top = {stats['top_dim']}, socle = {stats['soc_dim']}")
    print(f"  Jordan type of A: {tuple(pa)}")
    print(f"  Jordan type of B: {tuple(pb)}")
    print(f"  regular: {'yes' if stats['regular'] else 'no'}")
    return 0


def cmd_verify(args) -> int:
    raw = os.environ.get("NILVAR_THREADS", "1")
    try:
        jobs = max(1, int(raw))
    except ValueError:
        print(f"nilvar: error: NILVAR_THREADS must be an integer, got {raw!r}",
              file=sys.stderr)
        return 1
    results = run_suite(args.level, seed=args.seed, names=args.check or None,
                        jobs=jobs)
    if args.format == "json":
        print(_dump([{"name": r.name, "passed": r.passed, "detail": r.detail}
                     for r in results]))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="nilvar",
                     description="Irreducible components of the varieties "
                                 "of matrix pairs (A, B) with AB = BA = "
                                 "A^a = B^b = 0.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"),
                       default="table")

    def add_params(p, a_default=None, b_default=None):
        p.add_argument("--a", type=int, default=a_default,
                       required=a_default is None,
                       help="nilpotency bound for A")
        p.add_argument("--b", type=int, default=b_default,
                       required=b_default is None,
                       help="nilpotency bound for B")

    p = sub.add_parser("classify",
                       help="irreducible components of one V(n, a, b)")
    p.add_argument("--n", type=int, required=True, help="matrix size")
    add_params(p)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables",
                       help="component tables over a range of n")
    add_params(p)
    p.add_argument("--max-n", type=int, default=12)
    add_format(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("hom", help="Hom dimension between string modules")
    p.add_argument("--source", required=True, help="source string, e.g. xxy")
    p.add_argument("--target", required=True, help="target string")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the count against exact linear algebra")
    add_params(p, 3, 3)
    add_format(p)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("ext",
                       help="does Ext^1 between string modules vanish "
                            "(target must be semi-projective)")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    add_params(p, 3, 3)
    add_format(p)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("module", help="inspect one string or band module")
    p.add_argument("--word", required=True)
    p.add_argument("--lambdas",
                   help="comma-separated nonzero rationals; builds the band "
                        "module with these parameters instead of the string")
    add_params(p, 3, 3)
    add_format(p)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action="append", metavar="NAME",
                   help="run only this check (repeatable); available: "
                        + ", ".join(name for name, _ in CHECKS))
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"nilvar: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
