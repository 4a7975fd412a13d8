#!/usr/bin/env python3
"""Look for large antichains among trees (or unicyclic graphs) of one order.

Prints the number of classes, incomparable pairs, and the largest antichain
found, which bears on whether antichains grow without bound.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from indroots.enumeration import antichains, comparability, connected_unicyclic, trees
from indroots.order import RelationKind


@dataclass
class SearchConfig:
    corpus: str = "trees"
    orders: tuple[int, ...] = (8, 9, 10)
    max_size: int = 6
    show: int = 3


def run(cfg: SearchConfig) -> list[dict]:
    gen = trees if cfg.corpus == "trees" else connected_unicyclic
    rows = []
    for n in cfg.orders:
        graphs = list(gen(n))
        keys, rel = comparability(graphs)
        pairs = sum(r is RelationKind.INCOMPARABLE for r in rel.values())
        found = antichains(graphs, cfg.max_size)
        best = max((len(a) for a in found), default=1)
        rows.append({"n": n, "graphs": len(graphs), "classes": len(keys), "incomparable_pairs": pairs,
                     "largest_antichain": best, "examples": [list(a) for a in found[: cfg.show]]})
        print(f"n={n}: {len(graphs)} graphs, {len(keys)} classes, {pairs} incomparable pairs, "
              f"largest antichain {best}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", choices=("trees", "unicyclic"), default="trees")
    ap.add_argument("--orders", type=int, nargs="+", default=[8, 9, 10])
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--json", action="store_true", help="print the full rows as JSON at the end")
    args = ap.parse_args()
    rows = run(SearchConfig(args.corpus, tuple(args.orders), args.max_size))
    if args.json:
        print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
