"""Isomorphism-free generation of small graph classes and the extremal surveys.

Trees come from canonical rooted level sequences filtered to a centre root.
Everything else is built on top of trees (or smaller graphs) and deduplicated
by canonical key, so each generator yields one graph per isomorphism class in
a deterministic order.
"""

from __future__ import annotations

import functools
import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .canon import canonical_key
from .engine import BudgetExceeded, indpoly
from .families import (
    build_s3_s5,
    build_s4,
    complete,
    complete_bipartite,
    corona,
    cycle,
    d_n,
    g_gkl,
    m_n,
    path,
    star,
    u_n,
)
from .graph import (
    Graph,
    _bits,
    add_edge,
    distances_from,
    is_bipartite,
    is_triangle_free,
    parse_graph6,
    render_graph6,
)
from .order import RelationKind, decide_polys
from .poly import format_poly
from .roots import InvariantError, largest_root
from .wellcovered import is_well_covered

TREE_LIMIT = 14
UNICYCLIC_LIMIT = 12
CONNECTED_LIMIT = 8
GIRTH_LIMIT = 12

SURVEY_CLASSES = (
    "trees",
    "unicyclic",
    "wc_trees",
    "wc_unicyclic_even",
    "wc_unicyclic_odd",
    "bipartite",
    "triangle_free",
)


def _key(G: Graph) -> str:
    return canonical_key(G).decode("ascii")


# trees ----------------------------------------------------------------


def rooted_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of rooted trees on ``n`` vertices (root at level 0).

    Each rooted tree appears once, as the sequence whose subtrees are listed
    in non-increasing order.
    """
    if n < 1:
        raise ValueError("rooted trees need n >= 1")
    L = list(range(n))
    while True:
        yield tuple(L)
        p = n - 1
        while p > 0 and L[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n):
            L[i] = L[i - p + q]


def level_sequence_graph(L: Iterable[int]) -> Graph:
    """Tree of a level sequence; vertex i is the i-th entry, vertex 0 the root."""
    L = list(L)
    last_at: dict[int, int] = {}
    edges = []
    for i, lev in enumerate(L):
        if lev:
            edges.append((last_at[lev - 1], i))
        last_at[lev] = i
    return Graph.from_edges(len(L), edges)


def _child_segments(L: tuple[int, ...]) -> list[tuple[int, int]]:
    starts = [i for i in range(1, len(L)) if L[i] == 1]
    return [(s, e) for s, e in zip(starts, starts[1:] + [len(L)])]


def _free_tree_representative(L: tuple[int, ...]) -> bool:
    """Keep ``L`` iff its root is a centre and, for bicentral trees, the root half wins."""
    segs = _child_segments(L)
    if not segs:
        return True
    depths = sorted((max(L[s:e]) for s, e in segs), reverse=True)
    d1 = depths[0]
    d2 = depths[1] if len(depths) > 1 else 0
    if d1 == d2:
        return True
    if d1 != d2 + 1:
        return False
    # bicentral: compare the two halves separated by the central edge
    deep = next((s, e) for s, e in segs if max(L[s:e]) == d1)
    far = tuple(x - 1 for x in L[deep[0] : deep[1]])
    near = (0,) + tuple(x for s, e in segs if (s, e) != deep for x in L[s:e])
    return near >= far


def trees(n: int) -> Iterator[Graph]:
    """Every free tree of order ``n`` exactly once."""
    if not 1 <= n <= TREE_LIMIT:
        raise BudgetExceeded(f"trees are generated for 1 <= n <= {TREE_LIMIT}, got {n}")
    for L in rooted_level_sequences(n):
        if _free_tree_representative(L):
            yield level_sequence_graph(L)


def rooted_trees(n: int) -> Iterator[tuple[Graph, int]]:
    """Every rooted tree of order ``n`` once, as ``(tree, root)`` with root 0."""
    if not 1 <= n <= TREE_LIMIT:
        raise BudgetExceeded(f"rooted trees are generated for 1 <= n <= {TREE_LIMIT}, got {n}")
    for L in rooted_level_sequences(n):
        yield level_sequence_graph(L), 0


# graphs built by dedup --------------------------------------------------


def _dedup(graphs: Iterable[Graph], seen: set[str] | None = None) -> Iterator[Graph]:
    seen = set() if seen is None else seen
    for G in graphs:
        k = _key(G)
        if k not in seen:
            seen.add(k)
            yield G


def _non_edges(G: Graph, min_dist: int = 1) -> Iterator[tuple[int, int]]:
    for u in range(G.n):
        dist = distances_from(G, u)
        for v in range(u + 1, G.n):
            if dist[v] > min_dist:
                yield u, v


def connected_unicyclic(n: int) -> Iterator[Graph]:
    """Each connected unicyclic graph of order ``n`` once (trees plus one edge)."""
    if not 3 <= n <= UNICYCLIC_LIMIT:
        raise BudgetExceeded(f"unicyclic graphs are generated for 3 <= n <= {UNICYCLIC_LIMIT}, got {n}")
    return _dedup(add_edge(T, u, v) for T in trees(n) for u, v in _non_edges(T))


@functools.lru_cache(maxsize=None)
def _connected_g6(n: int) -> tuple[str, ...]:
    if n == 1:
        return (render_graph6(Graph.empty(1)),)
    out = []
    seen: set[str] = set()
    for g6 in _connected_g6(n - 1):
        P = parse_graph6(g6)
        base = list(P.adj) + [0]
        for S in range(1, 1 << P.n):
            adj = base[:]
            adj[-1] = S
            for v in _bits(S):
                adj[v] |= 1 << P.n
            G = Graph(n, tuple(adj))
            k = _key(G)
            if k not in seen:
                seen.add(k)
                out.append(k)
    return tuple(sorted(out))


def connected_graphs(n: int) -> Iterator[Graph]:
    """Each connected graph of order ``n`` once, by vertex extension plus canonical dedup.

    Every connected graph has a non-cut vertex, so it arises from a connected
    graph one smaller.  Output is the canonical form, sorted by key.
    """
    if not 1 <= n <= CONNECTED_LIMIT:
        raise BudgetExceeded(f"connected graphs are generated for 1 <= n <= {CONNECTED_LIMIT}, got {n}")
    for g6 in _connected_g6(n):
        yield parse_graph6(g6)


def connected_min_girth(n: int, g: int) -> Iterator[Graph]:
    """Connected graphs of order ``n`` with girth at least ``g`` (forests included)."""
    if not 1 <= n <= GIRTH_LIMIT:
        raise BudgetExceeded(f"girth-restricted graphs are generated for 1 <= n <= {GIRTH_LIMIT}, got {n}")
    if g < 3:
        raise ValueError("girth bound must be at least 3")
    seen: set[str] = set()
    frontier = list(_dedup(trees(n), seen))
    yield from frontier
    while frontier:
        nxt = []
        for G in frontier:
            # a new edge uv closes a cycle of length dist(u, v) + 1
            for u, v in _non_edges(G, g - 2):
                nxt.append(add_edge(G, u, v))
        frontier = list(_dedup(nxt, seen))
        yield from frontier


# the well-covered unicyclic families ----------------------------------


def _branch_sets(m: int) -> Iterator[list[tuple[Graph, int]]]:
    """All well-covered branches of order ``2m`` hanging from one vertex."""
    from .families import rooted_branch_pieces

    for T, root in rooted_trees(m + 1):
        yield rooted_branch_pieces(T, root)


def topp_volkmann_members(N: int) -> dict[str, tuple[Graph, str]]:
    """Members of order ``N`` of C_3, C_4, C_5, C_7, S_3, S_4, S_5 and KU, by canonical key."""
    out: dict[str, tuple[Graph, str]] = {}

    def put(G: Graph, label: str) -> None:
        out.setdefault(_key(G), (G, label))

    if N in (3, 4, 5, 7):
        put(cycle(N), f"C_{N}")
    for g, label in ((3, "S_3"), (5, "S_5")):
        if N <= g or (N - g) % 2:
            continue
        total = (N - g) // 2
        # second branch vertex: any other one on C_3, a nonadjacent one on C_5
        c2 = 1 if g == 3 else 2
        for m1 in range(1, total + 1):
            m2 = total - m1
            if m2 > m1:
                continue
            for b1 in _branch_sets(m1):
                if m2 == 0:
                    put(build_s3_s5(g, {0: b1}, validate=False), label)
                    continue
                for b2 in _branch_sets(m2):
                    put(build_s3_s5(g, {0: b1, c2: b2}, validate=False), label)
    if N >= 6 and N % 2 == 0:
        for Tp in trees(N // 2 - 1):
            T = corona(Tp)
            for u, v in T.edges():
                if T.degree(u) > 1 and T.degree(v) > 1:
                    put(build_s4(T, u, v), "S_4")
    if N >= 6 and N % 2 == 0:
        for U in connected_unicyclic(N // 2):
            put(corona(U), "KU")
    return out


# surveys --------------------------------------------------------------


@dataclass
class SurveyReport:
    """Outcome of checking one graph class against its claimed extremal graphs."""

    cls: str
    n: int
    count: int = 0
    lower: str = ""
    upper: str = ""
    asserted: bool = True
    extremal_lower: list[dict] = field(default_factory=list)
    extremal_upper: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    equivalence_classes: list[dict] = field(default_factory=list)
    antichains: list[list[str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.asserted or not self.violations

    def to_json(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


@dataclass
class _ClassSetup:
    corpus: list[Graph]
    lower: Graph
    upper: Graph
    eq_lower: set[str] | None = None
    eq_upper: set[str] | None = None
    asserted: bool = True


def _keys(*graphs: Graph) -> set[str]:
    return {_key(G) for G in graphs}


def _setup(cls: str, n: int) -> _ClassSetup:
    if cls == "trees":
        return _ClassSetup(list(trees(n)), path(n), star(n), _keys(path(n)), _keys(star(n)))
    if cls == "unicyclic":
        if n < 4:
            raise BudgetExceeded("unicyclic survey needs n >= 4")
        lo = _keys(cycle(n), d_n(n))
        hi = _keys(u_n(n))
        if n == 4:
            lo |= hi
            hi |= lo
        return _ClassSetup(list(connected_unicyclic(n)), cycle(n), u_n(n), lo, hi)
    if cls == "wc_trees":
        if n % 2 or n < 2:
            raise BudgetExceeded("well-covered trees have even order")
        m = n // 2
        corpus = [T for T in trees(n) if is_well_covered(T)]
        lo, hi = corona(path(m)), corona(star(m))
        return _ClassSetup(corpus, lo, hi, _keys(lo), _keys(hi))
    if cls == "wc_unicyclic_even":
        if n % 2 or n < 6:
            raise BudgetExceeded("even well-covered unicyclic survey needs even n >= 6")
        m = n // 2
        corpus = [G for G in connected_unicyclic(n) if is_well_covered(G)]
        top = u_n(m) if m >= 4 else complete(3)
        return _ClassSetup(corpus, corona(cycle(m)), corona(top))
    if cls == "wc_unicyclic_odd":
        if n % 2 == 0 or n < 3:
            raise BudgetExceeded("odd well-covered unicyclic survey needs odd n >= 3")
        corpus = [G for G in connected_unicyclic(n) if is_well_covered(G)] if n > 3 else [cycle(3)]
        low = cycle(n) if n <= 7 else g_gkl(3, (n - 3) // 2, 0)
        return _ClassSetup(corpus, low, m_n(n))
    if cls in ("bipartite", "triangle_free"):
        test = is_bipartite if cls == "bipartite" else is_triangle_free
        corpus = [G for G in connected_graphs(n) if test(G)]
        return _ClassSetup(corpus, path(n), complete_bipartite((n + 1) // 2, n // 2), asserted=cls == "bipartite")
    raise ValueError(f"unknown survey class {cls!r}; choose from {', '.join(SURVEY_CLASSES)}")


def _assess(g6: str, lower6: str, upper6: str) -> tuple[str, str, bool, bool]:
    """(key, poly text, lower <= G, G <= upper) for one corpus graph."""
    G = parse_graph6(g6)
    PG = indpoly(G)
    PL = indpoly(parse_graph6(lower6))
    PU = indpoly(parse_graph6(upper6))
    low_ok = PL == PG or decide_polys(PL, PG).holds
    up_ok = PU == PG or decide_polys(PG, PU).holds
    return _key(G), format_poly(PG), low_ok, up_ok


def _run(tasks: list[str], lower6: str, upper6: str, workers: int) -> list[tuple[str, str, bool, bool]]:
    if workers <= 1 or len(tasks) < 2:
        return [_assess(t, lower6, upper6) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_assess, tasks, [lower6] * len(tasks), [upper6] * len(tasks), chunksize=16))


def survey_extremal(cls: str, n: int, workers: int = 1, antichain_size: int = 0) -> SurveyReport:
    """Check every graph of the class against the claimed lower and upper graphs.

    Violations list graphs outside the claimed bounds, and, where strictness is
    claimed, any mismatch between the graphs equivalent to a bound and the
    expected exceptions.  For ``triangle_free`` nothing is asserted.
    """
    setup = _setup(cls, n)
    lower6, upper6 = render_graph6(setup.lower), render_graph6(setup.upper)
    by_key = {_key(G): G for G in setup.corpus}
    rows = sorted(_run([render_graph6(by_key[k]) for k in sorted(by_key)], lower6, upper6, workers))
    rep = SurveyReport(cls, n, len(rows), lower6, upper6, setup.asserted)
    PL, PU = format_poly(indpoly(setup.lower)), format_poly(indpoly(setup.upper))
    classes: dict[str, list[str]] = defaultdict(list)
    for key, ptext, low_ok, up_ok in rows:
        classes[ptext].append(key)
        if not low_ok:
            rep.violations.append({"graph6": key, "kind": "below lower bound"})
        if not up_ok:
            rep.violations.append({"graph6": key, "kind": "above upper bound"})
    for side, ptext, expected, store in (
        ("lower", PL, setup.eq_lower, rep.extremal_lower),
        ("upper", PU, setup.eq_upper, rep.extremal_upper),
    ):
        found = set(classes.get(ptext, []))
        store.extend({"key": k, "graph6": render_graph6(by_key[k])} for k in sorted(found))
        if expected is not None and found != expected:
            rep.violations.append(
                {"kind": f"equality set at {side} bound", "found": sorted(found), "expected": sorted(expected)}
            )
    rep.equivalence_classes = [
        {"poly": p, "size": len(ks), "members": ks} for p, ks in sorted(classes.items(), key=lambda kv: kv[1][0])
    ]
    if antichain_size >= 2:
        rep.antichains = [list(a) for a in antichains(setup.corpus, antichain_size)]
    return rep


# equivalence classes and antichains -------------------------------------


@dataclass
class EquivalenceClass:
    poly: str
    members: list[str]

    @property
    def size(self) -> int:
        return len(self.members)


def equivalence_classes(graphs: Iterable[Graph]) -> list[EquivalenceClass]:
    """Partition by exact independence polynomial; members are canonical keys."""
    groups: dict[str, set[str]] = defaultdict(set)
    for G in graphs:
        groups[format_poly(indpoly(G))].add(_key(G))
    out = [EquivalenceClass(p, sorted(ks)) for p, ks in groups.items()]
    out.sort(key=lambda c: c.members[0])
    return out


def _incomparable(PH, PG, xh, xg) -> bool:
    return not decide_polys(PH, PG, xg).holds and not decide_polys(PG, PH, xh).holds


def comparability(graphs: Iterable[Graph]) -> tuple[list[str], dict[tuple[int, int], RelationKind]]:
    """Class representatives (canonical keys) and the relation for each pair of them."""
    reps: dict[str, str] = {}
    for G in graphs:
        p = format_poly(indpoly(G))
        k = _key(G)
        if p not in reps or k < reps[p]:
            reps[p] = k
    keys = sorted(reps.values())
    polys = [indpoly(parse_graph6(k)) for k in keys]
    roots = [largest_root(P, -2, 0) for P in polys]
    rel: dict[tuple[int, int], RelationKind] = {}
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            ij = decide_polys(polys[i], polys[j], roots[j]).holds
            ji = decide_polys(polys[j], polys[i], roots[i]).holds
            if ij:
                rel[i, j] = RelationKind.FIRST_STRICTLY_LESS
            elif ji:
                rel[i, j] = RelationKind.SECOND_STRICTLY_LESS
            else:
                rel[i, j] = RelationKind.INCOMPARABLE
    return keys, rel


def antichains(graphs: Iterable[Graph], max_size: int, limit: int = 100) -> list[tuple[str, ...]]:
    """Pairwise-incomparable sets of size 2..``max_size`` (canonical keys).

    Works on one representative per equivalence class.  Returns the maximal
    antichains (capped at ``max_size`` members), largest first, at most
    ``limit`` of them.
    """
    if max_size < 2:
        return []
    keys, rel = comparability(graphs)
    k = len(keys)
    inc = [0] * k
    for (i, j), r in rel.items():
        if r is RelationKind.INCOMPARABLE:
            inc[i] |= 1 << j
            inc[j] |= 1 << i
    found: set[tuple[str, ...]] = set()

    def grow(R: list[int], P: int, X: int) -> None:
        if len(R) == max_size or not P:
            if len(R) >= 2 and (len(R) == max_size or not X):
                found.add(tuple(keys[i] for i in R))
            return
        for v in list(_bits(P)):
            grow(R + [v], P & inc[v], X & inc[v])
            P &= ~(1 << v)
            X |= 1 << v

    grow([], (1 << k) - 1, 0)
    out = sorted(found, key=lambda a: (-len(a), a))[:limit]
    # verification pass: every pair inside a reported set must be incomparable
    for a in out:
        idx = [keys.index(x) for x in a]
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, j = sorted((idx[x], idx[y]))
                if rel[i, j] is not RelationKind.INCOMPARABLE:
                    raise InvariantError("reported antichain contains a comparable pair")
    return out


def write_graph6(graphs: Iterable[Graph], fh) -> int:
    count = 0
    for G in graphs:
        fh.write(render_graph6(G) + "\n")
        count += 1
    return count
