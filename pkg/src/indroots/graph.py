"""Simple undirected graphs on vertices ``0..n-1`` stored as neighbour bitmasks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INF = float("inf")


class GraphError(ValueError):
    """Invalid vertex, edge, or operation precondition."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the bitmask of neighbours of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {u}-{v}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # basic queries ----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# neighbourhoods and surgery ---------------------------------------------


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    G._check_vertex(v)
    return frozenset(_bits(G.adj[v] | 1 << v))


def closed_neighborhood_edge(G: Graph, u: int, v: int) -> frozenset[int]:
    if not G.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    return closed_neighborhood(G, u) | closed_neighborhood(G, v)


def induced_by_mask(G: Graph, keep: int) -> Graph:
    """Induced subgraph on the vertices in ``keep``, reindexed in increasing order."""
    order = list(_bits(keep))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for u in _bits(G.adj[v] & keep):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(order), tuple(adj))


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    mask = 0
    for v in S:
        G._check_vertex(v)
        mask |= 1 << v
    return induced_by_mask(G, G.vertex_mask & ~mask)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    mask = 0
    for v in S:
        G._check_vertex(v)
        mask |= 1 << v
    return induced_by_mask(G, mask)


def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError("cannot add a self-loop")
    if G.has_edge(u, v):
        raise GraphError(f"{u}-{v} is already an edge")
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v or not G.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph(G.n + H.n, G.adj + tuple(row << shift for row in H.adj))


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("perm must be a permutation of the vertices")
    adj = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in _bits(G.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(G.n, tuple(adj))


# invariants -------------------------------------------------------------


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the connected components of ``G[within]``."""
    rest = G.vertex_mask if within is None else within
    out = []
    adj = G.adj
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def components(G: Graph) -> list[Graph]:
    return [induced_by_mask(G, c) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(component_masks(G)) == 1


def distances_from(G: Graph, s: int, within: int | None = None) -> dict[int, int]:
    allowed = G.vertex_mask if within is None else within
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in _bits(G.adj[v] & allowed):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_path(G: Graph, s: int, t: int, within: int | None = None) -> list[int] | None:
    allowed = G.vertex_mask if within is None else within
    parent = {s: -1}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            path = [t]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        for u in _bits(G.adj[v] & allowed):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return None


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in _bits(G.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def degree_sequence(G: Graph) -> tuple[int, ...]:
    """Degrees in nondecreasing order."""
    return tuple(sorted(G.degrees()))


def max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


def min_degree(G: Graph) -> int:
    return min(G.degrees(), default=0)


def leaves(G: Graph) -> list[int]:
    return [v for v in range(G.n) if G.adj[v].bit_count() == 1]


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def is_unicyclic(G: Graph) -> bool:
    """Connected with exactly one cycle."""
    return G.n >= 3 and G.m == G.n and is_connected(G)


def is_bipartite(G: Graph) -> bool:
    color: dict[int, int] = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in _bits(G.adj[v]):
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_triangle_free(G: Graph) -> bool:
    return not any(G.adj[u] & G.adj[v] for u, v in G.edges())


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    S = list(S)
    return all(G.has_edge(a, b) for i, a in enumerate(S) for b in S[i + 1:])


# subgraph embedding -----------------------------------------------------

EMBED_LIMIT = 12


def subgraph_embedding_exists(H: Graph, G: Graph) -> bool:
    """True iff ``H`` is isomorphic to a (not necessarily induced) subgraph of ``G``."""
    if H.n > EMBED_LIMIT or G.n > EMBED_LIMIT:
        raise GraphError(f"subgraph search limited to {EMBED_LIMIT} vertices")
    if H.n > G.n or H.m > G.m:
        return False
    hdeg = H.degrees()
    gdeg = G.degrees()
    # map high-degree vertices of H first, preferring ones adjacent to mapped vertices
    order: list[int] = []
    placed = 0
    while len(order) < H.n:
        best = max(
            (v for v in range(H.n) if not placed >> v & 1),
            key=lambda v: ((H.adj[v] & placed).bit_count(), hdeg[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    image = [-1] * H.n

    def extend(i: int, used: int) -> bool:
        if i == H.n:
            return True
        v = order[i]
        need = [image[u] for u in _bits(H.adj[v]) if image[u] >= 0]
        cand = G.vertex_mask & ~used
        for w in need:
            cand &= G.adj[w]
        for w in _bits(cand):
            if gdeg[w] < hdeg[v]:
                continue
            image[v] = w
            if extend(i + 1, used | 1 << w):
                return True
        image[v] = -1
        return False

    return extend(0, 0)


# graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def render_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _encode_n(G.n) + "".join(body)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. An optional ``>>graph6<<`` header is accepted."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start) from None
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if len(s) == start:
        raise Graph6Error("empty input", start)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range", i)
    pos = start
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    else:
        if len(s) > pos + 1 and s[pos + 1] == "~":
            width = 6
            pos += 2
        else:
            width = 3
            pos += 1
        if len(s) < pos + width:
            raise Graph6Error("truncated vertex-count header", len(s))
        n = 0
        for k in range(width):
            n = n << 6 | (ord(s[pos + k]) - 63)
        pos += width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph data", pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = ord(body[-1]) - 63
        if pad & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
