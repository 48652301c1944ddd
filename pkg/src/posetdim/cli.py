"""Command-line entry point: ``posetdim {gen,analyze,extract,exact,bounds}``.

Exit codes: 0 success, 2 parse or validation error, 3 budget exhausted
(the best result found so far is still printed, flagged ``exact: false``).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bounds
from .dimension import BudgetExceeded, DEFAULT_NODE_BUDGET, has_dim_at_most
from .extremal import DEFAULT_BUDGET, ex_star_max_dim, verify_theorem1_instance
from .invariants import goodwillie_subposet, height, max_antichain, min_chain_cover
from .io import REPORT_SCHEMA, ParseError, digest, format_dot, format_poset, parse_poset, report_json, report_text
from .poset import (
    PosetError,
    antichain,
    boolean_lattice,
    chain,
    induced,
    random_poset,
    standard_example,
)

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3

# largest extraction for which the dimension certificate is computed
CERTIFY_LIMIT = 40

CONSTRUCTORS = {
    "chain": (chain, (int,)),
    "antichain": (antichain, (int,)),
    "boolean": (boolean_lattice, (int,)),
    "standard": (standard_example, (int,)),
    "random": (random_poset, (int, float, int)),
    "cor2": (bounds.build_corollary2_witness, (int, int)),
}


class UsageError(ValueError):
    pass


def build(kind: str, params: list[str]):
    if kind not in CONSTRUCTORS:
        raise UsageError(f"unknown constructor {kind!r}; choose from {', '.join(CONSTRUCTORS)}")
    fn, types = CONSTRUCTORS[kind]
    if len(params) != len(types):
        raise UsageError(f"{kind} takes {len(types)} parameter(s), got {len(params)}")
    try:
        args = [t(v) for t, v in zip(types, params)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return fn(*args)


def _load(path: str):
    with open(path) as fh:
        text = fh.read()
    return parse_poset(text), digest(text)


def _realizer_rows(r, members=None):
    """Realizer rows in host element ids; ``members`` maps induced indices back."""
    if r is None:
        return []
    if members is None:
        return [list(e) for e in r.extensions]
    return [[members[i] for i in e] for e in r.extensions]


def cmd_gen(args):
    p = build(args.kind, args.params)
    text = format_poset(p)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(format_dot(p))
    return None, EXIT_OK


def cmd_analyze(args):
    p, dig = _load(args.input)
    h, hchain = height(p)
    anti = max_antichain(p)
    cover = min_chain_cover(p)
    dim, cert, exhausted = None, None, False
    try:
        if p.n == 0:
            dim = 0
        else:
            for d in range(1, max(anti.size, 1) + 1):
                ok, r = has_dim_at_most(p, d, args.budget)
                if ok:
                    dim, cert = d, r
                    break
    except BudgetExceeded:
        exhausted = True
    result = {
        "n": p.n,
        "height": h,
        "height_chain": list(hchain),
        "width": anti.size,
        "max_antichain": list(anti.members),
        "chain_cover_size": len(cover),
        "chain_cover": [list(c) for c in cover.chains],
        "dimension": dim,
        "realizer": _realizer_rows(cert),
    }
    return _report(args, dig, result, exact=not exhausted), EXIT_BUDGET if exhausted else EXIT_OK


def cmd_extract(args):
    p, dig = _load(args.input)
    ex = goodwillie_subposet(p, args.d)
    result = {
        "n": p.n,
        "d": args.d,
        "kind": ex.kind,
        "subset": list(ex.subset),
        "size": len(ex.subset),
        "guarantee": ex.guarantee_int,
        "guarantee_real": round(ex.guarantee, 6),
    }
    if ex.chains is not None:
        result["chains"] = [list(c) for c in ex.chains.chains]
    if len(ex.subset) <= CERTIFY_LIMIT:
        ok, r = has_dim_at_most(induced(p, ex.subset), args.d)
        result["dim_at_most_d"] = ok
        result["realizer"] = _realizer_rows(r, ex.subset)
    return _report(args, dig, result, exact=True), EXIT_OK


def cmd_exact(args):
    p, dig = _load(args.input)
    res = ex_star_max_dim(p, args.d, args.budget)
    result = {
        "n": p.n,
        "d": args.d,
        "value": res.value,
        "witness": list(res.witness),
        "realizer": _realizer_rows(res.certificate, res.witness),
        "nodes": res.stats.nodes,
    }
    return _report(args, dig, result, exact=res.exact, elapsed=res.stats.elapsed), (
        EXIT_OK if res.exact else EXIT_BUDGET
    )


def cmd_bounds(args):
    sub = args.sub
    if sub == "table":
        if not args.json:
            sys.stdout.write(bounds.table_tsv())
            return None, EXIT_OK
        rows = [{"d": r.d, "m": r.m, "exponent": r.rounded} for r in bounds.table()]
        return _report(args, None, {"rows": rows}, exact=True), EXIT_OK
    vals = args.values
    if sub == "lower":
        n, d = _ints(vals, 2)
        real, guarantee = bounds.goodwillie_lower_bound(n, d)
        return _report(args, None, {"n": n, "d": d, "bound": round(real, 4), "guarantee": guarantee}, exact=True), EXIT_OK
    if sub == "cor2":
        n, d = _ints(vals, 2)
        c = bounds.corollary2_bound(n, d)
        result = {
            "n": n,
            "d": d,
            "m_star": c.m_star,
            "digits": list(c.digits.digits),
            "digit_bound": c.digit_bound,
            "smoothed": round(c.smoothed, 6),
        }
        return _report(args, None, result, exact=True), EXIT_OK
    if sub == "thm1":
        if len(vals) != 3:
            raise UsageError("thm1 takes: <poset file> <d> <k>")
        p, dig = _load(vals[0])
        d, k = _ints(vals[1:], 2)
        rep = verify_theorem1_instance(p, d, k, args.budget)
        result = {
            "d": d,
            "k": k,
            "base_value": rep.base.value,
            "lhs": rep.lhs.value,
            "lhs_exact": rep.lhs.exact,
            "rhs": rep.rhs,
            "holds": rep.holds,
        }
        return _report(args, dig, result, exact=rep.lhs.exact), EXIT_OK if rep.lhs.exact else EXIT_BUDGET
    raise UsageError(f"unknown bounds sub-command {sub!r}")


def _ints(vals, count):
    if len(vals) != count:
        raise UsageError(f"expected {count} integer arguments")
    try:
        return [int(v) for v in vals]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report(args, dig, result, exact, elapsed=None):
    return {
        "schema": REPORT_SCHEMA,
        "command": args.argv,
        "input_digest": dig,
        "result": result,
        "exact": exact,
        "elapsed": round(elapsed if elapsed is not None else time.perf_counter() - args.t0, 3),
    }


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetdim", description="Low-dimension subposets: exact tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a constructed poset in 'poset v1' format")
    g.add_argument("kind", help=f"one of: {', '.join(CONSTRUCTORS)}")
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--out")
    g.add_argument("--dot", help="also write the Hasse diagram in DOT format")
    g.set_defaults(func=cmd_gen)

    for name, func, help_ in (
        ("analyze", cmd_analyze, "height, width, chain cover and dimension"),
        ("extract", cmd_extract, "subposet of size >= ceil(sqrt(d n)) and dimension <= d"),
        ("exact", cmd_exact, "exact largest subposet of dimension <= d"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("input")
        if name != "analyze":
            s.add_argument("d", type=int)
        s.add_argument("--json", action="store_true")
        s.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET if name == "analyze" else DEFAULT_BUDGET)
        s.add_argument("--threads", type=int, default=1, help="accepted for scripting; the search is sequential")
        s.set_defaults(func=func)

    b = sub.add_parser("bounds", help="table | lower n d | cor2 n d | thm1 FILE d k")
    b.add_argument("sub", choices=["table", "lower", "cor2", "thm1"])
    b.add_argument("values", nargs="*")
    b.add_argument("--json", action="store_true")
    b.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    b.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = make_parser().parse_args(argv)
    args.argv = argv
    args.t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except (ParseError, PosetError, UsageError, ValueError) as exc:
        print(f"posetdim: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"posetdim: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if report is not None:
        sys.stdout.write(report_json(report) if args.json else report_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
