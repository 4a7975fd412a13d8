"""Named graphs and graph transforms, with documented vertex numbering."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    _bits,
    add_edge,
    delete_edge,
    disjoint_union,
    distances_from,
    is_tree,
    shortest_path,
)

FAMILY_NAMES = (
    "path", "star", "cycle", "complete", "complete_bipartite",
    "d_n", "u_n", "m_n", "g_gkl", "g_2n", "t1", "t2",
)


class FamilyError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """``"u_n:7"``, ``"g_gkl:3,2,1"``, ``"t1"``."""
        name, _, rest = text.strip().partition(":")
        if name not in FAMILY_NAMES:
            raise FamilyError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise FamilyError(f"family parameters must be integers: {rest!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        return self.name + (":" + ",".join(map(str, self.params)) if self.params else "")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``S_n``: centre 0 joined to ``1..n-1``."""
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    _need(a >= 1 and b >= 0, "complete_bipartite needs a >= 1, b >= 0")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def d_n(n: int) -> Graph:
    """Triangle ``0,1,2`` with the path ``2-3-...-(n-1)`` hanging from vertex 2."""
    _need(n >= 4, "d_n needs n >= 4")
    return Graph.from_edges(n, [(0, 1), (0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)])


def u_n(n: int) -> Graph:
    """Triangle ``0,1,2`` with leaves ``3..n-1`` all attached to vertex 0."""
    _need(n >= 4, "u_n needs n >= 4")
    return Graph.from_edges(n, [(0, 1), (0, 2), (1, 2)] + [(0, i) for i in range(3, n)])


def m_n(n: int) -> Graph:
    """Triangle ``0,1,2`` with ``(n-3)/2`` paths of length 2 hanging from vertex 0.

    Leg ``i`` is ``0 - (3+2i) - (4+2i)``.
    """
    _need(n >= 3 and n % 2 == 1, "m_n needs odd n >= 3")
    edges = [(0, 1), (0, 2), (1, 2)]
    for i in range((n - 3) // 2):
        edges += [(0, 3 + 2 * i), (3 + 2 * i, 4 + 2 * i)]
    return Graph.from_edges(n, edges)


def g_gkl(g: int, k: int, l: int) -> Graph:
    """Cycle ``0..g-1`` with ``P_k*`` hanging from vertex 0 and ``P_l*`` from vertex 2.

    Each hanging corona attaches through an end vertex of its path, so that
    vertex has degree 3 once the path is long enough.  Path vertices of the
    ``P_k*`` are ``g, g+2, ...`` with their pendant leaves at ``g+1, g+3, ...``;
    the ``P_l*`` follows.
    """
    _need(g in (3, 5), "g_gkl needs g in {3, 5}")
    _need(k >= 0 and l >= 0 and k + l > 0, "g_gkl needs k, l >= 0 and k + l > 0")
    n = g + 2 * (k + l)
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for root, length in ((0, k), (2, l)):
        prev = root
        for _ in range(length):
            edges += [(prev, nxt), (nxt, nxt + 1)]
            prev = nxt
            nxt += 2
    return Graph.from_edges(n, edges)


# G_10 labels: v1..v5 -> 0..4, x1 x2 -> 5 6, y1 y2 -> 7 8, z1 -> 9
G10_EDGES = [(4, 5), (5, 6), (4, 3), (3, 2), (2, 9), (2, 1), (1, 0), (2, 7), (7, 8)]


def g_2n(n: int) -> Graph:
    """``G_{2n}``: the order-10 base tree, then ``v_k - w_k`` pendant pairs chained from ``v_5``.

    ``v_k`` is vertex ``10 + 2(k-6)`` and ``w_k`` the next index, for ``k >= 6``.
    """
    _need(n >= 5, "g_2n needs n >= 5")
    edges = list(G10_EDGES)
    prev = 4
    for k in range(6, n + 1):
        v = 10 + 2 * (k - 6)
        edges += [(prev, v), (v, v + 1)]
        prev = v
    return Graph.from_edges(2 * n, edges)


T1_EDGES = [(0, 1), (0, 5), (1, 2), (1, 3), (1, 4), (5, 6), (5, 7)]
T2_EDGES = [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (4, 6), (5, 7)]


def t1() -> Graph:
    return Graph.from_edges(8, T1_EDGES)


def t2() -> Graph:
    return Graph.from_edges(8, T2_EDGES)


_BUILDERS = {
    "path": (path, 1), "star": (star, 1), "cycle": (cycle, 1), "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2), "d_n": (d_n, 1), "u_n": (u_n, 1),
    "m_n": (m_n, 1), "g_gkl": (g_gkl, 3), "g_2n": (g_2n, 1), "t1": (t1, 0), "t2": (t2, 0),
}


def make(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.name not in _BUILDERS:
        raise FamilyError(f"unknown family {spec.name!r}")
    fn, arity = _BUILDERS[spec.name]
    _need(len(spec.params) == arity, f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    return fn(*spec.params)


# transforms -----------------------------------------------------------


def corona(G: Graph) -> Graph:
    """``G*``: vertex ``n + v`` is the new pendant neighbour of ``v``."""
    n = G.n
    adj = [row | 1 << (n + v) for v, row in enumerate(G.adj)] + [1 << v for v in range(n)]
    return Graph(2 * n, tuple(adj))


def star_swap_vertex(G: Graph, u: int) -> tuple[list[int], list[int]]:
    """For a leaf ``u``: the nearest vertices of degree >= 3 and the ``u``-to-``v`` path."""
    dist = distances_from(G, u)
    far = [v for v in dist if G.degree(v) >= 3]
    if not far:
        return [], []
    d = min(dist[v] for v in far)
    near = sorted(v for v in far if dist[v] == d)
    return near, shortest_path(G, u, near[0])


def star_swap(G: Graph, u: int, v: int, w: int) -> Graph:
    """``(G - vw) + uw`` with the leaf/nearest-branch/neighbour preconditions checked."""
    for a in (u, v, w):
        G._check_vertex(a)
    if G.degree(u) != 1:
        raise FamilyError(f"u={u} is not a leaf")
    near, _ = star_swap_vertex(G, u)
    if v not in near:
        raise FamilyError(f"v={v} is not a nearest vertex of degree >= 3 to u={u}")
    route = shortest_path(G, u, v)
    if not G.has_edge(v, w):
        raise FamilyError(f"w={w} is not a neighbour of v={v}")
    if w == u:
        raise FamilyError("w must differ from u")
    if w in route:
        raise FamilyError(f"w={w} lies on the path from u to v")
    return add_edge(delete_edge(G, v, w), u, w)


def dagger_targets(G: Graph, u: int, x: int) -> tuple[frozenset[int], int, list[int]]:
    """Branch ``S``, the prescribed ``v``, and the ``u``-to-``x`` path inside ``G[S]``."""
    from .wellcovered import wellcovered_branch

    S = wellcovered_branch(G, x)
    if S is None:
        raise FamilyError(f"x={x} does not induce a well-covered branch")
    deg2 = [a for a in S if a != x and G.degree(a) == 2]
    if len(deg2) < 2:
        raise FamilyError("the branch needs at least two vertices of degree 2 besides x")
    if u not in S or u == x or G.degree(u) != 2:
        raise FamilyError(f"u={u} is not a degree-2 vertex of the branch")
    smask = sum(1 << a for a in S)
    dist = distances_from(G, u, smask)
    big = [a for a in S if (G.adj[a] & smask).bit_count() >= 4]
    if big:
        d = min(dist[a] for a in big)
        v = min(a for a in big if dist[a] == d)
        if d > dist[x]:
            v = x
    else:
        v = x
    return S, v, shortest_path(G, u, x, smask)


def dagger_swap(G: Graph, u: int, v: int, w: int, x: int | None = None) -> Graph:
    """``G - vw + uw`` inside a well-covered branch induced by ``x``.

    When ``x`` is omitted every vertex is tried as the branch root and the
    first one whose branch satisfies all preconditions is used.
    """
    for a in (u, v, w):
        G._check_vertex(a)
    roots = [x] if x is not None else [r for r in range(G.n) if r not in (u,)]
    errors = []
    for r in roots:
        try:
            S, want_v, route = dagger_targets(G, u, r)
        except FamilyError as exc:
            errors.append(str(exc))
            continue
        if v != want_v:
            errors.append(f"v={v} is not the prescribed vertex {want_v}")
            continue
        if w not in S or not G.has_edge(v, w):
            errors.append(f"w={w} is not a neighbour of v inside the branch")
            continue
        if G.degree(w) < 2:
            errors.append(f"w={w} is a leaf")
            continue
        if w in route:
            errors.append(f"w={w} lies on the path from u to x")
            continue
        return add_edge(delete_edge(G, v, w), u, w)
    raise FamilyError("; ".join(dict.fromkeys(errors)) or "no branch root satisfies the preconditions")


def build_s4(T: Graph, u: int, v: int) -> Graph:
    """``(T + K_2) + au + bv`` with ``a = n``, ``b = n + 1``."""
    from .wellcovered import pendant_edges_perfect_matching

    if not (is_tree(T) and T.n >= 2 and pendant_edges_perfect_matching(T)):
        raise FamilyError("T must be a well-covered tree")
    if not T.has_edge(u, v):
        raise FamilyError(f"{u}-{v} is not an edge of T")
    if T.degree(u) == 1 or T.degree(v) == 1:
        raise FamilyError(f"{u}-{v} is a pendant edge")
    n = T.n
    G = disjoint_union(T, Graph.from_edges(2, [(0, 1)]))
    return add_edge(add_edge(G, n, u), n + 1, v)


Branch = Sequence[tuple[Graph, int]]


def build_s3_s5(g: int, branches: dict[int, Branch], validate: bool = True) -> Graph:
    """Cycle ``0..g-1`` where cycle vertex ``c`` joins ``T_i*`` at the given vertex.

    ``branches[c]`` lists ``(T_i, attach)`` pairs; ``attach`` must be one of the
    original vertices ``0..|T_i|-1`` of ``T_i*`` (not a pendant leaf).
    """
    from .wellcovered import is_well_covered, is_well_covered_tree_plus_leaf

    if g not in (3, 5):
        raise FamilyError("g must be 3 or 5")
    used = sorted(c for c, br in branches.items() if br)
    if not used:
        raise FamilyError("at least one cycle vertex must carry a branch")
    if len(used) > 2:
        raise FamilyError("at most two cycle vertices may carry branches")
    for c in used:
        if not 0 <= c < g:
            raise FamilyError(f"cycle vertex {c} out of range")
    if g == 5 and len(used) == 2 and (used[1] - used[0]) % 5 in (1, 4):
        raise FamilyError("for g = 5 the two branch vertices must be nonadjacent")
    G = Graph.from_edges(g, [(i, (i + 1) % g) for i in range(g)])
    for c in used:
        for T, attach in branches[c]:
            if not is_tree(T):
                raise FamilyError("each branch piece must be a tree")
            if not 0 <= attach < T.n:
                raise FamilyError(f"attachment vertex {attach} is a leaf of T*, not one of its original vertices")
            base = G.n
            G = disjoint_union(G, corona(T))
            G = add_edge(G, c, base + attach)
    if validate:
        for c in used:
            part = 0
            for comp_v in _branch_vertices(G, c, g):
                part |= 1 << comp_v
            if not is_well_covered_tree_plus_leaf(G, c, part):
                raise FamilyError(f"branch at cycle vertex {c} is not well-covered")
        if G.n <= 18 and not is_well_covered(G):
            raise FamilyError("result is not well-covered")
    return G


def _branch_vertices(G: Graph, c: int, g: int) -> list[int]:
    cyc = (1 << g) - 1
    seen = {c}
    stack = [u for u in _bits(G.adj[c] & ~cyc)]
    out = []
    while stack:
        a = stack.pop()
        if a in seen:
            continue
        seen.add(a)
        out.append(a)
        stack.extend(b for b in _bits(G.adj[a]) if b not in seen)
    return out


def rooted_branch_pieces(T: Graph, root: int) -> list[tuple[Graph, int]]:
    """Split a tree at ``root`` into ``(subtree, attach)`` pieces for :func:`build_s3_s5`."""
    from .graph import component_masks, induced_by_mask

    pieces = []
    rest = T.vertex_mask & ~(1 << root)
    for comp in component_masks(T, rest):
        attach_v = (T.adj[root] & comp).bit_length() - 1
        order = list(_bits(comp))
        pieces.append((induced_by_mask(T, comp), order.index(attach_v)))
    return pieces


__all__ = [
    "FamilySpec", "FamilyError", "make", "corona", "star_swap", "dagger_swap", "build_s4",
    "build_s3_s5", "path", "star", "cycle", "complete", "complete_bipartite", "d_n", "u_n",
    "m_n", "g_gkl", "g_2n", "t1", "t2",
]
