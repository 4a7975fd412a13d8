"""Independence polynomials, computed three independent ways.

``indpoly`` is the production path: split into components, use closed forms
for recognisable components, otherwise branch on a maximum-degree vertex with
``I(G) = I(G - v) + x I(G - N[v])``.  Components of moderate size are memoised
across calls by canonical key.  ``indpoly_clique`` and ``indpoly_bruteforce``
exist to cross-check it.
"""

from __future__ import annotations

import base64
import os
import threading
from pathlib import Path

from .canon import canonical_key
from .graph import Graph, GraphError, _bits, component_masks, induced_by_mask, is_clique
from .poly import Poly, format_poly, parse_poly, poly_pow_binomial

SOFT_LIMIT = 64
BRUTE_LIMIT = 25
# smaller components are cheaper to recompute than to canonise
CACHE_MIN_ORDER = 8


class BudgetExceeded(RuntimeError):
    pass


class PolyCache:
    """Canonical-key -> polynomial map with optional append-only file backing.

    File records are ``base64(key) TAB polynomial-text``, one per line.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path else None
        self._data: dict[bytes, Poly] = {}
        self._lock = threading.Lock()
        self._loaded = self.path is None
        self.hits = 0
        self.misses = 0

    def _load(self) -> None:
        if self._loaded:
            return
        with self._lock:
            if self._loaded:
                return
            if self.path.exists():
                with open(self.path, encoding="ascii") as fh:
                    for line in fh:
                        line = line.rstrip("\n")
                        if not line:
                            continue
                        key64, text = line.split("\t", 1)
                        self._data[base64.b64decode(key64)] = parse_poly(text)
            self._loaded = True

    def get(self, key: bytes) -> Poly | None:
        self._load()
        p = self._data.get(key)
        if p is None:
            self.misses += 1
        else:
            self.hits += 1
        return p

    def put(self, key: bytes, p: Poly) -> None:
        self._load()
        with self._lock:
            if key in self._data:
                return
            self._data[key] = p
            if self.path is not None:
                record = base64.b64encode(key).decode("ascii") + "\t" + format_poly(p) + "\n"
                # one write per record keeps appends from interleaving
                fd = os.open(self.path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
                try:
                    os.write(fd, record.encode("ascii"))
                finally:
                    os.close(fd)

    def __len__(self) -> int:
        self._load()
        return len(self._data)

    def items(self):
        self._load()
        return list(self._data.items())

    def compact(self) -> int:
        """Rewrite the backing file with one record per key; returns record count."""
        self._load()
        if self.path is None:
            return len(self._data)
        with self._lock:
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            with open(tmp, "w", encoding="ascii") as fh:
                for key in sorted(self._data):
                    fh.write(base64.b64encode(key).decode("ascii") + "\t" + format_poly(self._data[key]) + "\n")
            os.replace(tmp, self.path)
        return len(self._data)


_default_cache = PolyCache()


def default_cache() -> PolyCache:
    return _default_cache


def set_default_cache(cache: PolyCache) -> None:
    global _default_cache
    _default_cache = cache


# closed forms ---------------------------------------------------------

_PATHS = [Poly((1,)), Poly((1, 1))]


def path_poly(k: int) -> Poly:
    """``I(P_k)`` from ``I(P_k) = I(P_{k-1}) + x I(P_{k-2})``."""
    while len(_PATHS) <= k:
        _PATHS.append(_PATHS[-1] + _PATHS[-2].shift(1))
    return _PATHS[k]


def cycle_poly(k: int) -> Poly:
    """``I(C_k) = I(P_{k-1}) + x I(P_{k-3})`` for ``k >= 3``."""
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return path_poly(k - 1) + path_poly(k - 3).shift(1)


def complete_bipartite_poly(a: int, b: int) -> Poly:
    return poly_pow_binomial(1, 1, a) + poly_pow_binomial(1, 1, b) - 1


def _closed_form(adj: tuple[int, ...], comp: int) -> Poly | None:
    verts = list(_bits(comp))
    k = len(verts)
    if k == 1:
        return Poly((1, 1))
    degs = [(adj[v] & comp).bit_count() for v in verts]
    e = sum(degs) // 2
    if e == k * (k - 1) // 2:
        return Poly((1, k))
    dmax = max(degs)
    if e == k - 1 and dmax <= 2:
        return path_poly(k)
    if e == k and dmax == 2 and min(degs) == 2:
        return cycle_poly(k)
    # complete bipartite (stars included): two sides, all cross edges present
    side_a = adj[verts[0]] & comp
    side_b = comp & ~side_a
    a, b = side_a.bit_count(), side_b.bit_count()
    if e == a * b:
        if all((adj[v] & comp) == side_a for v in _bits(side_b)) and all(
            (adj[v] & comp) == side_b for v in _bits(side_a)
        ):
            return complete_bipartite_poly(a, b)
    return None


# production path ------------------------------------------------------


def indpoly(G: Graph, cache: PolyCache | None = None) -> Poly:
    """Exact independence polynomial ``I(G, x)``."""
    if G.n > SOFT_LIMIT:
        raise BudgetExceeded(
            f"order {G.n} exceeds the {SOFT_LIMIT}-vertex budget; brute force is limited to {BRUTE_LIMIT}"
        )
    if cache is None:
        cache = _default_cache
    adj = G.adj
    memo: dict[int, Poly] = {}

    def connected(comp: int) -> Poly:
        hit = memo.get(comp)
        if hit is not None:
            return hit
        p = _closed_form(adj, comp)
        key = None
        if p is None and comp.bit_count() >= CACHE_MIN_ORDER:
            key = canonical_key(induced_by_mask(G, comp))
            p = cache.get(key)
        if p is None:
            best_v, best_d = -1, -1
            for v in _bits(comp):
                d = (adj[v] & comp).bit_count()
                if d > best_d:
                    best_v, best_d = v, d
            p = general(comp & ~(1 << best_v)) + general(comp & ~(adj[best_v] | 1 << best_v)).shift(1)
            if key is not None:
                cache.put(key, p)
        memo[comp] = p
        return p

    def general(mask: int) -> Poly:
        if not mask:
            return Poly((1,))
        out = Poly((1,))
        for comp in component_masks(G, mask):
            out = out * connected(comp)
        return out

    return general(G.vertex_mask)


def indpoly_clique(G: Graph, C) -> Poly:
    """``I(G) = I(G - C) + x * sum_{v in C} I(G - N[v])`` for a clique ``C``."""
    C = sorted(set(C))
    for v in C:
        G._check_vertex(v)
    if not is_clique(G, C):
        raise GraphError(f"{C} does not induce a complete subgraph")
    cmask = 0
    for v in C:
        cmask |= 1 << v
    total = indpoly(induced_by_mask(G, G.vertex_mask & ~cmask))
    acc = Poly()
    for v in C:
        acc = acc + indpoly(induced_by_mask(G, G.vertex_mask & ~(G.adj[v] | 1 << v)))
    return total + acc.shift(1)


def indpoly_bruteforce(G: Graph) -> Poly:
    """Count independent k-subsets by visiting every vertex subset."""
    n = G.n
    if n > BRUTE_LIMIT:
        raise BudgetExceeded(f"brute force limited to {BRUTE_LIMIT} vertices")
    counts = [0] * (n + 1)
    indep = bytearray(1 << n)
    size = bytearray(1 << n)
    indep[0] = 1
    counts[0] = 1
    adj = G.adj
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        if indep[rest] and not adj[low] & rest:
            indep[mask] = 1
            size[mask] = size[rest] + 1
            counts[size[mask]] += 1
    return Poly(counts)


def independence_number(G: Graph) -> int:
    return indpoly(G).degree


def alpha_branch_and_bound(G: Graph) -> int:
    """Maximum independent set size by branch and bound (independent of ``indpoly``)."""
    adj = G.adj
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        v = max(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        if not adj[v] & cand:
            search(cand & ~(1 << v), size + 1)
            return
        search(cand & ~(adj[v] | 1 << v), size + 1)
        search(cand & ~(1 << v), size)

    search(G.vertex_mask, 0)
    return best
