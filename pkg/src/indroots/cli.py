"""Command-line interface.

Graphs are given as graph6 strings, ``@file`` (one graph6 per line, ``-`` for
stdin) or ``--family name:params``, in any mix and in order.  Data goes to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a verification
failed, 2 usage or input error, 3 budget exceeded, 4 internal invariant
violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canon import CanonError
from .engine import BudgetExceeded, PolyCache, default_cache, indpoly, set_default_cache
from .families import FAMILY_NAMES, make
from .graph import Graph, GraphError, parse_graph6, read_graph6_lines, render_graph6
from .poly import format_poly
from .roots import InvariantError, xi

CACHE_ENV = "INDROOTS_CACHE"


class UsageError(Exception):
    pass


class _GraphInput(argparse.Action):
    """Collect positional graph6/@file items and --family specs into one ordered list."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = getattr(namespace, "inputs", None) or []
        tag = "family" if option_string else "graph"
        if isinstance(values, str):
            values = [values]
        items.extend((tag, v) for v in values)
        namespace.inputs = items


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graphs", nargs="*", action=_GraphInput, metavar="GRAPH",
                   help="graph6 string or @file of graph6 lines (@- reads stdin)")
    p.add_argument("--family", action=_GraphInput, metavar="SPEC",
                   help=f"named family, e.g. u_n:7 or g_gkl:3,2,1; names: {', '.join(FAMILY_NAMES)}")


def _load_graphs(args) -> list[tuple[str, Graph]]:
    out = []
    for tag, text in getattr(args, "inputs", None) or []:
        if tag == "family":
            G = make(text)
            out.append((text, G))
        elif text.startswith("@"):
            name = text[1:]
            fh = sys.stdin if name == "-" else open(name, encoding="ascii")
            try:
                for i, G in enumerate(read_graph6_lines(fh)):
                    out.append((f"{name}:{i + 1}", G))
            finally:
                if fh is not sys.stdin:
                    fh.close()
        else:
            out.append((text, parse_graph6(text)))
    return out


def _need(graphs, count: int | None = None, at_least: int = 1):
    if count is not None and len(graphs) != count:
        raise UsageError(f"expected exactly {count} graph(s), got {len(graphs)}")
    if len(graphs) < at_least:
        raise UsageError(f"expected at least {at_least} graph(s), got {len(graphs)}")
    return graphs


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# subcommands ----------------------------------------------------------


def cmd_poly(args) -> int:
    for label, G in _need(_load_graphs(args)):
        P = indpoly(G)
        _emit(args, {"graph": label, "graph6": render_graph6(G), "poly": format_poly(P),
                     "coefficients": list(P.coeffs)}, format_poly(P))
    return 0


def cmd_xi(args) -> int:
    if args.digits < 1 or args.digits > 200:
        raise UsageError("--digits must be between 1 and 200")
    for label, G in _need(_load_graphs(args)):
        iv = xi(G)
        exact = iv.is_exact()
        data = {"graph": label, "exact": exact, **iv.to_json()}
        if exact:
            data["value"] = str(iv.hi)
        else:
            lo, hi = iv.decimal_enclosure(args.digits)
            data["decimal"] = [str(lo), str(hi)]
        _emit(args, data, iv.render(args.digits))
    return 0


def cmd_compare(args) -> int:
    from .order import relation_report

    (la, A), (lb, B) = _need(_load_graphs(args), 2)
    rep = relation_report(A, B, la, lb)
    text = rep["relation"]
    if rep["witnesses"]:
        text += " witnesses " + " ".join(rep["witnesses"])
    _emit(args, rep, text)
    return 0


def cmd_equiv(args) -> int:
    graphs = _need(_load_graphs(args), at_least=2)
    polys = [format_poly(indpoly(G)) for _, G in graphs]
    same = len(set(polys)) == 1
    _emit(args, {"equivalent": same, "graphs": [l for l, _ in graphs], "polys": polys},
          "equivalent" if same else "not equivalent")
    return 0


def cmd_wc(args) -> int:
    from .wellcovered import maximal_independent_sets, pendant_edges_perfect_matching

    for label, G in _need(_load_graphs(args)):
        rep = maximal_independent_sets(G)
        data = {"graph": label, **rep.to_json(G.n), "pendant_matching": pendant_edges_perfect_matching(G)}
        sizes = ",".join(f"{k}:{v}" for k, v in sorted(rep.sizes.items()))
        _emit(args, data, f"well_covered={data['well_covered']} very_well_covered={data['very_well_covered']} "
                          f"sizes={sizes}")
    return 0


GEN_CLASSES = ("trees", "unicyclic", "connected", "girth", "wc_unicyclic", "coronas")


def cmd_gen(args) -> int:
    from . import enumeration as en
    from .families import corona

    inputs = getattr(args, "inputs", None) or []
    if args.cls and inputs:
        raise UsageError("give either a class or --family inputs, not both")
    if inputs:
        for _, G in _load_graphs(args):
            print(render_graph6(G))
        return 0
    if not args.cls or args.n is None:
        raise UsageError("gen needs CLASS N or --family SPEC")
    n = args.n
    if args.cls == "trees":
        stream = en.trees(n)
    elif args.cls == "unicyclic":
        stream = en.connected_unicyclic(n)
    elif args.cls == "connected":
        stream = en.connected_graphs(n)
    elif args.cls == "girth":
        stream = en.connected_min_girth(n, args.girth)
    elif args.cls == "wc_unicyclic":
        from .wellcovered import is_well_covered

        stream = (G for G in en.connected_unicyclic(n) if is_well_covered(G))
    else:
        stream = (corona(T) for T in en.trees(n))
    count = en.write_graph6(stream, sys.stdout)
    print(f"{count} graphs", file=sys.stderr)
    return 0


def _corpus(name: str, n: int):
    from . import enumeration as en

    table = {
        "trees": en.trees,
        "unicyclic": en.connected_unicyclic,
        "connected": en.connected_graphs,
    }
    if name not in table:
        raise UsageError(f"unknown corpus {name!r}")
    return list(table[name](n))


def cmd_survey(args) -> int:
    from . import enumeration as en

    if args.workers < 1:
        raise UsageError("--workers must be positive")
    if args.kind == "extremal":
        rep = en.survey_extremal(args.target, args.n, workers=args.workers, antichain_size=args.antichain)
        if args.json:
            print(rep.dumps())
        else:
            print(f"{rep.cls} n={rep.n}: {rep.count} graphs, {len(rep.violations)} violations"
                  f"{'' if rep.asserted else ' (conjecture, not asserted)'}")
            print("lower-bound class: " + " ".join(e["graph6"] for e in rep.extremal_lower))
            print("upper-bound class: " + " ".join(e["graph6"] for e in rep.extremal_upper))
            for v in rep.violations:
                print("violation: " + json.dumps(v, sort_keys=True))
            for a in rep.antichains:
                print("antichain: " + " ".join(a))
        return 0 if rep.ok else 1
    graphs = _corpus(args.target, args.n)
    if args.kind == "classes":
        classes = en.equivalence_classes(graphs)
        data = [{"poly": c.poly, "size": c.size, "members": c.members} for c in classes]
        if args.json:
            print(json.dumps(data, sort_keys=True, indent=2))
        else:
            for c in classes:
                print(f"{c.size}\t{c.poly}\t{' '.join(c.members)}")
        return 0
    found = en.antichains(graphs, args.max_size)
    if args.json:
        print(json.dumps([list(a) for a in found], indent=2))
    else:
        for a in found:
            print(" ".join(a))
    return 0


def cmd_verify(args) -> int:
    from .verification import CHECKS, run_checks

    names = [n for n, _ in CHECKS]
    for o in args.only or []:
        if o not in names:
            raise UsageError(f"unknown check {o!r}; choose from {', '.join(names)}")
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    results = run_checks("full" if args.full else "quick", args.only, args.workers)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def cmd_cache(args) -> int:
    path = args.cache or os.environ.get(CACHE_ENV)
    if not path:
        raise UsageError(f"no cache file: pass --cache or set {CACHE_ENV}")
    cache = PolyCache(path)
    if args.action == "stats":
        _emit(args, {"path": str(path), "records": len(cache)}, f"{path}: {len(cache)} records")
    elif args.action == "compact":
        n = cache.compact()
        _emit(args, {"path": str(path), "records": n}, f"compacted {path}: {n} records")
    else:
        for key, P in sorted(cache.items()):
            _emit(args, {"key": key.decode("ascii"), "poly": format_poly(P)}, f"{key.decode('ascii')}\t{format_poly(P)}")
    return 0


# parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--cache", metavar="PATH", help=f"polynomial cache file (default: ${CACHE_ENV})")

    parser = argparse.ArgumentParser(
        prog="indroots",
        description="Exact independence polynomials, their largest real roots, and the induced graph order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="independence polynomial")
    _add_graph_args(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("xi", parents=[common], help="largest real root as a certified interval")
    _add_graph_args(p)
    p.add_argument("--digits", type=int, default=12, help="decimal places in the printed interval")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("compare", parents=[common], help="relation between two graphs")
    _add_graph_args(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("equiv", parents=[common], help="do the graphs share one polynomial?")
    _add_graph_args(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("wc", parents=[common], help="well-covered report")
    _add_graph_args(p)
    p.set_defaults(func=cmd_wc)

    p = sub.add_parser("gen", parents=[common], help="emit graph6 lines for a class or family")
    p.add_argument("cls", nargs="?", choices=GEN_CLASSES, help="graph class to enumerate")
    p.add_argument("n", nargs="?", type=int, help="order")
    p.add_argument("--girth", type=int, default=6, help="girth bound for the 'girth' class")
    p.add_argument("--family", action=_GraphInput, metavar="SPEC", help="emit a named family member")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("survey", parents=[common], help="extremal survey, equivalence classes, antichains")
    p.add_argument("kind", choices=("extremal", "classes", "antichains"))
    p.add_argument("target", help="survey class for 'extremal'; corpus (trees, unicyclic, connected) otherwise")
    p.add_argument("n", type=int, help="order")
    p.add_argument("--workers", type=int, default=1, help="worker processes (results are merged deterministically)")
    p.add_argument("--antichain", type=int, default=0, metavar="K", help="with 'extremal': also report antichains up to size K")
    p.add_argument("--max-size", type=int, default=2, help="with 'antichains': largest antichain size sought")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", parents=[common], help="run the regression suite and print a pass/fail table")
    p.add_argument("--full", action="store_true", help="use the larger exhaustive budgets")
    p.add_argument("--only", action="append", metavar="CHECK", help="run only the named check (repeatable)")
    p.add_argument("--workers", type=int, default=1, help="worker processes for the survey steps; output is identical for any count")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", parents=[common], help="inspect or compact the polynomial cache")
    p.add_argument("action", choices=("stats", "compact", "list"))
    p.set_defaults(func=cmd_cache)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    path = args.cache or os.environ.get(CACHE_ENV)
    previous = default_cache()
    if path and args.command != "cache":
        set_default_cache(PolyCache(path))
    try:
        return args.func(args)
    except (BudgetExceeded, CanonError) as exc:
        print(f"indroots {args.command}: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"indroots {args.command}: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"indroots {args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return 4
    finally:
        set_default_cache(previous)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
