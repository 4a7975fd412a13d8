"""Exact canonical labelling by individualisation-refinement.

Ordered partitions are refined to equitable ones with counting refinement;
non-discrete partitions branch on the first smallest non-singleton cell.
Leaves are compared by their relabelled adjacency rows and the smallest one is
the canonical form.  Two pruning rules keep trees and cycles cheap:

* when a leaf reproduces a certificate already seen, the map between the two
  leaves is an automorphism, and the search jumps back to the deepest common
  ancestor of the two leaves;
* children of a node are skipped when they lie in the orbit of an explored
  sibling under the automorphisms found so far that fix the node's path.
"""

from __future__ import annotations

from .graph import Graph, _bits, render_graph6

CANON_LIMIT = 24


class CanonError(ValueError):
    pass


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            first = sig[cell[0]]
            if all(sig[v] == first for v in cell):
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                out.append(groups[key])
            changed = True
        cells = out
        if not changed:
            return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in _bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(a) for a in range(n)]


def canonical_order(G: Graph) -> list[int]:
    """A vertex order whose relabelled adjacency is an isomorphism invariant.

    ``order[i]`` is the vertex of ``G`` placed at canonical position ``i``.
    """
    n = G.n
    if n > CANON_LIMIT:
        raise CanonError(f"canonical labelling limited to {CANON_LIMIT} vertices")
    if n <= 1:
        return list(range(n))
    adj = G.adj
    seen: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
    gens: list[list[int]] = []
    best: list = [None, None]

    def explore(cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            hit = seen.get(cert)
            if hit is not None:
                prev_path, prev_order = hit
                perm = [0] * n
                for a, b in zip(prev_order, order):
                    perm[a] = b
                if any(perm[a] != a for a in range(n)):
                    gens.append(perm)
                k = 0
                while k < len(path) and k < len(prev_path) and path[k] == prev_path[k]:
                    k += 1
                return k
            seen[cert] = (list(path), order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return None
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        depth = len(path)
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                fixing = [g for g in gens if all(g[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(n, fixing)
                    if any(roots[v] == roots[u] for u in explored):
                        continue
            child = cells[:idx] + [[v], [u for u in target if u != v]] + cells[idx + 1:]
            res = explore(child, path + [v])
            explored.append(v)
            if res is not None and res < depth:
                return res
        return None

    explore([list(range(n))], [])
    return best[1]


def canonical_graph(G: Graph) -> Graph:
    order = canonical_order(G)
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in _bits(G.adj[v]):
            row |= 1 << pos[u]
        adj[pos[v]] = row
    return Graph(G.n, tuple(adj))


def canonical_key(G: Graph) -> bytes:
    """Exact isomorphism-class key: the graph6 bytes of the canonical relabelling."""
    return render_graph6(canonical_graph(G)).encode("ascii")
