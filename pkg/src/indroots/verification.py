"""Regression suite over the extremal, equivalence and well-coveredness results.

Each check is a named, deterministic computation returning pass/fail plus a
short detail string.  ``quick`` budgets run in seconds; ``full`` budgets use
the larger exhaustive orders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable

from .canon import canonical_key
from .engine import indpoly, indpoly_bruteforce, indpoly_clique
from .enumeration import (
    connected_graphs,
    connected_min_girth,
    connected_unicyclic,
    equivalence_classes,
    survey_extremal,
    topp_volkmann_members,
    trees,
)
from .families import corona, cycle, d_n, dagger_swap, g_gkl, g_2n, path, star_swap, t1, t2, u_n
from .graph import is_triangle_free
from .instances import random_dagger_instance, random_star_swap_instance
from .order import RelationKind, compare, is_preceq
from .poly import corona_transform, format_poly, sign_at
from .roots import xi
from .wellcovered import is_well_covered, pendant_edges_perfect_matching

BUDGETS = {
    "quick": {
        "g2n": 9, "unicyclic": 7, "trees": 8, "corona_trees": 6, "transfer_trees": 5,
        "girth": 9, "wc_trees": 10, "wc_unicyclic": 9, "sp_order": 13, "odd": (3, 5, 7, 9),
        "swaps": 40, "bipartite": 6, "oracle": 8, "corona_random": 50, "connected_oracle": 6,
    },
    "full": {
        "g2n": 12, "unicyclic": 9, "trees": 8, "corona_trees": 8, "transfer_trees": 6,
        "girth": 12, "wc_trees": 12, "wc_unicyclic": 11, "sp_order": 17, "odd": (3, 5, 7, 9, 11),
        "swaps": 200, "bipartite": 8, "oracle": 10, "corona_random": 200, "connected_oracle": 8,
    },
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _key(G) -> bytes:
    return canonical_key(G)


def check_g10(b) -> tuple[bool, str]:
    p = format_poly(indpoly(g_2n(5)))
    return p == "1 + 10x + 36x^2 + 59x^3 + 45x^4 + 13x^5", p


def check_counterexample_family(b) -> tuple[bool, str]:
    bad = [n for n in range(5, b["g2n"] + 1)
           if indpoly(corona(path(n))) != indpoly(g_2n(n)) or pendant_edges_perfect_matching(g_2n(n))]
    return not bad, f"n=5..{b['g2n']}, failures {bad}"


def check_xi_decimals(b) -> tuple[bool, str]:
    out = []
    for G, want in ((t1(), "-0.2451223338"), (t2(), "-0.2410859067")):
        lo, hi = xi(G).decimal_enclosure(10)
        out.append((lo <= Decimal(want) <= hi and hi - lo <= Decimal("1e-9"), f"{lo}..{hi}"))
    return all(ok for ok, _ in out), " / ".join(d for _, d in out)


def check_t1_t2(b) -> tuple[bool, str]:
    rel = compare(t1(), t2())
    D = indpoly(t2()) - indpoly(t1())
    ok = (rel.kind is RelationKind.INCOMPARABLE and sign_at(D, Fraction(-1, 10)) > 0
          and sign_at(D, Fraction(-1, 5)) < 0)
    return ok, f"{rel.kind.value} witnesses {[str(w) for w in rel.witnesses]}"


def _survey(cls, ns, workers=1) -> tuple[bool, str]:
    bad = [n for n in ns if not survey_extremal(cls, n, workers=workers).ok]
    return not bad, f"orders {ns[0]}..{ns[-1]}, failing {bad}"


def check_unicyclic_extremes(b):
    return _survey("unicyclic", list(range(4, b["unicyclic"] + 1)), b["workers"])


def check_tree_extremes(b):
    ok, detail = _survey("trees", list(range(1, b["trees"] + 1)), b["workers"])
    from .enumeration import antichains

    small = all(not antichains(trees(n), 2) for n in range(1, 8))
    eight = bool(antichains(trees(8), 2))
    return ok and small and eight, f"{detail}; all comparable to 7: {small}; incomparable at 8: {eight}"


def check_unicyclic_classes(b):
    bad = []
    for n in range(4, b["unicyclic"] + 1):
        cls = {c.poly: set(c.members) for c in equivalence_classes(connected_unicyclic(n))}
        want_c = {_key(cycle(n)).decode(), _key(d_n(n)).decode()}
        if n == 4:
            want_c.add(_key(u_n(4)).decode())
        if cls[format_poly(indpoly(cycle(n)))] != want_c:
            bad.append(n)
        if n >= 5 and cls[format_poly(indpoly(u_n(n)))] != {_key(u_n(n)).decode()}:
            bad.append(n)
    return not bad, f"orders 4..{b['unicyclic']}, failing {bad}"


def check_corona(b):
    bad = 0
    for n in range(1, b["corona_trees"] + 1):
        for T in trees(n):
            bad += indpoly(corona(T)) != corona_transform(indpoly(T), n)
    rng = random.Random(7)
    from .instances import random_connected

    for _ in range(b["corona_random"]):
        n = rng.randint(1, 8)
        G = random_connected(rng, n, rng.randint(0, 6))
        bad += indpoly(corona(G)) != corona_transform(indpoly(G), n)
    moved = 0
    ts = [T for n in range(1, b["transfer_trees"] + 1) for T in trees(n)]
    for H in ts:
        for G in ts:
            moved += is_preceq(H, G) != is_preceq(corona(H), corona(G))
    return bad == 0 and moved == 0, f"transform mismatches {bad}, transfer mismatches {moved}"


def check_wc_characterisations(b):
    c7 = _key(cycle(7))
    girth_bad = sum(
        is_well_covered(G) != pendant_edges_perfect_matching(G)
        for n in range(2, b["girth"] + 1)
        for G in connected_min_girth(n, 6)
        if _key(G) != c7
    )
    tree_bad = 0
    for n in range(2, b["wc_trees"] + 1):
        coronas = {_key(corona(T)) for T in trees(n // 2)} if n % 2 == 0 else set()
        tree_bad += sum(is_well_covered(T) != (_key(T) in coronas) for T in trees(n))
    uni_bad = 0
    for n in range(3, b["wc_unicyclic"] + 1):
        tv = {k.encode() for k in topp_volkmann_members(n)}
        uni_bad += sum(is_well_covered(G) != (_key(G) in tv) for G in connected_unicyclic(n))
    ok = girth_bad == tree_bad == uni_bad == 0
    return ok, f"girth>=6 {girth_bad}, trees {tree_bad}, unicyclic {uni_bad} exceptions"


def check_minimal_odd_family(b):
    bad = []
    for order in range(5, b["sp_order"] + 1, 2):
        t = (order - 3) // 2
        polys = {indpoly(g_gkl(3, k, t - k)) for k in range(t + 1)}
        t5 = (order - 5) // 2
        if t5 >= 1:
            polys |= {indpoly(g_gkl(5, k, t5 - k)) for k in range(t5 + 1)}
        if len(polys) != 1:
            bad.append(order)
    surveys = [n for n in b["odd"] if not survey_extremal("wc_unicyclic_odd", n, workers=b["workers"]).ok]
    return not bad and not surveys, f"orders 5..{b['sp_order']} split {bad}; odd surveys failing {surveys}"


def check_swaps(b):
    rng = random.Random(2024)
    sbad = dbad = 0
    for _ in range(b["swaps"]):
        G, u, v, w = random_star_swap_instance(rng)
        sbad += not is_preceq(star_swap(G, u, v, w), G)
    for _ in range(b["swaps"]):
        G, u, v, w, x = random_dagger_instance(rng)
        dbad += not is_preceq(dagger_swap(G, u, v, w, x), G)
    return sbad == dbad == 0, f"{b['swaps']} instances each; star {sbad}, dagger {dbad} failures"


def check_bipartite(b):
    ok, detail = _survey("bipartite", list(range(2, b["bipartite"] + 1)), b["workers"])
    tf = [n for n in range(2, b["bipartite"] + 1)
          if survey_extremal("triangle_free", n, workers=b["workers"]).violations]
    return ok, f"{detail}; triangle-free observations at {tf}"


def check_oracles(b):
    bad = 0
    for n in range(1, b["oracle"] + 1):
        for T in trees(n):
            bad += indpoly(T) != indpoly_bruteforce(T)
    for n in range(3, b["oracle"] + 1):
        for G in connected_unicyclic(n):
            bad += indpoly(G) != indpoly_bruteforce(G)
            if not is_triangle_free(G):
                tri = next((a, c, d) for a, c in G.edges() for d in range(G.n)
                           if G.has_edge(a, d) and G.has_edge(c, d))
                bad += indpoly(G) != indpoly_clique(G, tri)
    for n in range(1, b["connected_oracle"] + 1):
        for G in connected_graphs(n):
            bad += indpoly(G) != indpoly_bruteforce(G)
    for n in range(1, b["oracle"] + 1):
        for G in connected_min_girth(n, 6):
            bad += indpoly(G) != indpoly_bruteforce(G)
    return bad == 0, f"{bad} disagreements"


CHECKS: list[tuple[str, Callable]] = [
    ("g10-polynomial", check_g10),
    ("counterexample-family", check_counterexample_family),
    ("xi-decimals", check_xi_decimals),
    ("t1-t2-incomparable", check_t1_t2),
    ("unicyclic-extremes", check_unicyclic_extremes),
    ("tree-extremes", check_tree_extremes),
    ("unicyclic-classes", check_unicyclic_classes),
    ("corona-identities", check_corona),
    ("wellcovered-criteria", check_wc_characterisations),
    ("minimal-odd-family", check_minimal_odd_family),
    ("swap-monotonicity", check_swaps),
    ("bipartite-bounds", check_bipartite),
    ("oracle-agreement", check_oracles),
]


def run_checks(budget: str = "quick", only: list[str] | None = None, workers: int = 1) -> list[CheckResult]:
    """Run the named checks in order; ``workers`` only fans out the survey steps."""
    b = dict(BUDGETS[budget], workers=workers)
    out = []
    for name, fn in CHECKS:
        if only and name not in only:
            continue
        passed, detail = fn(b)
        out.append(CheckResult(name, bool(passed), detail))
    return out
