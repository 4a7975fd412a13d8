"""Random valid inputs for the star swap and dagger operations."""

from __future__ import annotations

import random

from .families import corona, dagger_targets, rooted_branch_pieces, star_swap_vertex
from .graph import Graph, add_edge, disjoint_union, shortest_path
from .wellcovered import wellcovered_branch


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labelled tree from a Prüfer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    G = random_tree(rng, n)
    for _ in range(extra if n >= 3 else 0):
        u, v = rng.sample(range(n), 2)
        if not G.has_edge(u, v):
            G = add_edge(G, u, v)
    return G


def random_star_swap_instance(rng: random.Random, n_range=(5, 11)) -> tuple[Graph, int, int, int]:
    """A graph with a leaf ``u`` and valid ``v``, ``w`` for the star swap."""
    while True:
        n = rng.randint(*n_range)
        G = random_connected(rng, n, rng.choice((0, 0, 1, 2)))
        leaves = [a for a in range(n) if G.degree(a) == 1]
        if not leaves:
            continue
        u = rng.choice(leaves)
        near, _ = star_swap_vertex(G, u)
        if not near:
            continue
        v = rng.choice(near)
        route = shortest_path(G, u, v)
        ws = [w for w in sorted(G.neighbors(v)) if w != u and w not in route]
        if ws:
            return G, u, v, rng.choice(ws)


def random_dagger_instance(rng: random.Random, branch_range=(3, 7)) -> tuple[Graph, int, int, int, int]:
    """``(G, u, v, w, x)``: a branch hanging at ``x`` plus a small random remainder."""
    while True:
        T = random_tree(rng, rng.randint(*branch_range))
        x = 0
        rest = random_connected(rng, rng.randint(1, 4), rng.choice((0, 1)))
        G = disjoint_union(Graph.empty(1), rest)
        G = add_edge(G, 0, 1 + rng.randrange(rest.n))
        for piece, attach in rooted_branch_pieces(T, x):
            base = G.n
            G = add_edge(disjoint_union(G, corona(piece)), x, base + attach)
        S = wellcovered_branch(G, x)
        us = sorted(a for a in S or () if a != x and G.degree(a) == 2)
        if len(us) < 2:
            continue
        u = rng.choice(us)
        S, v, route = dagger_targets(G, u, x)
        ws = [w for w in sorted(G.neighbors(v)) if w in S and G.degree(w) >= 2 and w not in route]
        if ws:
            return G, u, v, rng.choice(ws), x
