"""Well-covered and very well-covered recognition plus the structural criteria."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .engine import BudgetExceeded
from .graph import Graph, _bits, component_masks, is_tree

MIS_LIMIT = 22


@dataclass
class MaximalSetReport:
    sizes: Counter = field(default_factory=Counter)
    min_witness: frozenset[int] = frozenset()
    max_witness: frozenset[int] = frozenset()

    @property
    def well_covered(self) -> bool:
        return len(self.sizes) <= 1

    def to_json(self, n: int) -> dict:
        return {
            "sizes": {str(k): v for k, v in sorted(self.sizes.items())},
            "well_covered": self.well_covered,
            "very_well_covered": self.well_covered and n > 0 and 2 * min(self.sizes) == n,
        }


def maximal_independent_sets(G: Graph) -> MaximalSetReport:
    """Enumerate maximal independent sets (Bron-Kerbosch on the complement, pivoted)."""
    if G.n > MIS_LIMIT:
        raise BudgetExceeded(f"maximal-set enumeration limited to {MIS_LIMIT} vertices")
    full = G.vertex_mask
    closed = [G.adj[v] | 1 << v for v in range(G.n)]
    report = MaximalSetReport()
    if G.n == 0:
        report.sizes[0] = 1
        return report

    def bk(R: int, P: int, X: int) -> None:
        if not P:
            if not X:
                size = R.bit_count()
                report.sizes[size] += 1
                if not report.min_witness or size < len(report.min_witness):
                    report.min_witness = frozenset(_bits(R))
                if size > len(report.max_witness):
                    report.max_witness = frozenset(_bits(R))
            return
        # pivot maximising |P - N[u]| in the complement, i.e. fewest branches
        pivot = min(_bits(P | X), key=lambda u: (P & closed[u]).bit_count())
        for v in _bits(P & closed[pivot]):
            keep = full & ~closed[v]
            bk(R | 1 << v, P & keep, X & keep)
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, full, 0)
    return report


def is_well_covered(G: Graph) -> bool:
    return maximal_independent_sets(G).well_covered


def is_very_well_covered(G: Graph) -> bool:
    rep = maximal_independent_sets(G)
    return rep.well_covered and G.n > 0 and 2 * min(rep.sizes) == G.n


def pendant_edges_perfect_matching(G: Graph) -> bool:
    """True iff the edges incident with leaves form a perfect matching."""
    covered = 0
    for v in range(G.n):
        if G.adj[v].bit_count() == 1:
            u = G.adj[v].bit_length() - 1
            if G.adj[u].bit_count() == 1:
                # K_2 component: the single edge is counted from both ends
                if u < v:
                    continue
            if covered & (1 << v | 1 << u):
                return False
            covered |= 1 << v | 1 << u
    return covered == G.vertex_mask


def is_well_covered_tree_plus_leaf(G: Graph, x: int, part: int) -> bool:
    """Does ``G[part]`` plus a new leaf on ``x`` have a pendant perfect matching?"""
    from .graph import induced_by_mask

    H = induced_by_mask(G, part | 1 << x)
    xi = bin(part & ((1 << x) - 1)).count("1")
    adj = list(H.adj) + [1 << xi]
    adj[xi] |= 1 << H.n
    H2 = Graph(H.n + 1, tuple(adj))
    return is_tree(H2) and pendant_edges_perfect_matching(H2)


def wellcovered_branch(G: Graph, x: int) -> frozenset[int] | None:
    """The well-covered branch induced by ``x`` (including ``x``), or ``None``.

    It is ``x`` together with every component of ``G - x`` that is a tree joined
    to ``x`` by one edge and turns ``x`` plus a pendant leaf into a well-covered
    tree.  ``x`` must keep at least one neighbour outside the branch.
    """
    G._check_vertex(x)
    rest = G.vertex_mask & ~(1 << x)
    S = 0
    for comp in component_masks(G, rest):
        if (G.adj[x] & comp).bit_count() != 1:
            continue
        if is_well_covered_tree_plus_leaf(G, x, comp):
            S |= comp
    if not S or not G.adj[x] & ~S:
        return None
    return frozenset(_bits(S | 1 << x))
