#!/usr/bin/env python3
"""Run the extremal surveys for every graph class and write one JSON report each.

Example: python scripts/run_surveys.py --out results/surveys --workers 4
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from indroots.engine import PolyCache, set_default_cache
from indroots.enumeration import survey_extremal


@dataclass
class SurveyConfig:
    out: Path = Path("results/surveys")
    workers: int = 1
    cache: Path | None = None
    # class -> orders surveyed
    plan: dict[str, list[int]] = field(default_factory=lambda: {
        "trees": list(range(1, 12)),
        "unicyclic": list(range(4, 11)),
        "wc_trees": [2, 4, 6, 8, 10, 12],
        "wc_unicyclic_even": [6, 8, 10],
        "wc_unicyclic_odd": [3, 5, 7, 9, 11],
        "bipartite": list(range(2, 9)),
        "triangle_free": list(range(2, 9)),
    })


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=SurveyConfig.out)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--cache", type=Path, help="polynomial cache file; reruns skip known polynomials")
    ap.add_argument("--only", action="append", help="survey only these classes")
    args = ap.parse_args()
    cfg = SurveyConfig(out=args.out, workers=args.workers, cache=args.cache)
    if cfg.cache:
        set_default_cache(PolyCache(cfg.cache))
    cfg.out.mkdir(parents=True, exist_ok=True)

    summary = []
    for cls, orders in cfg.plan.items():
        if args.only and cls not in args.only:
            continue
        for n in orders:
            t0 = time.perf_counter()
            rep = survey_extremal(cls, n, workers=cfg.workers)
            dt = time.perf_counter() - t0
            (cfg.out / f"{cls}_{n:02d}.json").write_text(rep.dumps() + "\n")
            status = "ok" if rep.ok else "VIOLATIONS"
            note = "" if rep.asserted else " (observed only)"
            print(f"{cls:18s} n={n:2d} graphs={rep.count:6d} violations={len(rep.violations)} {status}{note} {dt:.1f}s")
            summary.append({"class": cls, "n": n, "count": rep.count, "ok": rep.ok,
                            "violations": len(rep.violations), "seconds": round(dt, 2)})
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")


if __name__ == "__main__":
    main()
