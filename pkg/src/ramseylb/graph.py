"""Immutable simple graphs over dense vertex indices, with the combinators
used by the extremal constructions (complement, union, cone, blow-up,
circulants, multipartite graphs, chorded cycles).

Adjacency is stored as one integer bitmask per vertex, which is what the
search kernels consume directly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple undirected graph on vertices 0..n-1. Immutable."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError("negative order")
        if len(adj) != n:
            raise ValueError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"adjacency bit out of range at vertex {v}")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def order(self) -> int:
        return self.n

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def masks(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] & (1 << v))

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            higher = self._adj[u] >> (u + 1)
            for d in bits(higher):
                out.append((u, u + 1 + d))
        return out

    def is_regular(self, d: int) -> bool:
        return all(row.bit_count() == d for row in self._adj)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.n}, edges={self.edge_count()})"


# ---------------------------------------------------------------------------
# basic families


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def matching_graph(n: int) -> Graph:
    """nK2: n independent edges on 2n vertices."""
    return Graph.from_edges(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    if any(s <= 0 for s in part_sizes):
        raise ValueError("part sizes must be positive")
    n = sum(part_sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for size in part_sizes:
        part_mask = ((1 << size) - 1) << start
        for v in range(start, start + size):
            adj.append(full & ~part_mask)
        start += size
    return Graph(n, adj)


def circulant(n: int, connections: Iterable[int]) -> Graph:
    conns = set(connections)
    for s in conns:
        if not 1 <= s <= n // 2:
            raise ValueError(f"circulant offset {s} out of range 1..{n // 2}")
    edges = []
    for u in range(n):
        for s in conns:
            edges.append((u, (u + s) % n))
    return Graph.from_edges(n, edges)


def regular_graph(n: int, d: int) -> Graph:
    """Canonical d-regular graph on n vertices (circulant realization)."""
    if not 0 <= d < n:
        raise ValueError(f"degree {d} out of range for order {n}")
    if n * d % 2 != 0:
        raise ValueError(f"no {d}-regular graph on {n} vertices: n*d is odd")
    offsets = set(range(1, d // 2 + 1))
    if d % 2 == 1:
        offsets.add(n // 2)
    return circulant(n, offsets)


def cycle_with_chords(length: int, chords: Sequence[tuple[int, int]]) -> Graph:
    if length < 3:
        raise ValueError("cycle needs at least 3 vertices")
    g_edges = [(i, (i + 1) % length) for i in range(length)]
    cycle_set = {(min(u, v), max(u, v)) for u, v in g_edges}
    seen = set()
    for u, v in chords:
        if not (0 <= u < length and 0 <= v < length) or u == v:
            raise ValueError(f"invalid chord ({u},{v})")
        key = (min(u, v), max(u, v))
        if key in cycle_set:
            raise ValueError(f"chord ({u},{v}) is a cycle edge")
        if key in seen:
            raise ValueError(f"duplicate chord ({u},{v})")
        seen.add(key)
    return Graph.from_edges(length, g_edges + list(seen))


# ---------------------------------------------------------------------------
# combinators


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~(row | (1 << v)) for v, row in enumerate(g.masks())])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.masks()) + [row << g.n for row in h.masks()]
    return Graph(g.n + h.n, adj)


def cone(g: Graph) -> Graph:
    """K1 + g: a new last vertex adjacent to every vertex of g."""
    apex = g.n
    adj = [row | (1 << apex) for row in g.masks()]
    adj.append((1 << g.n) - 1)
    return Graph(g.n + 1, adj)


def join(g: Graph, h: Graph) -> Graph:
    """All of g joined completely to all of h."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.masks()]
    adj += [(row << g.n) | g_mask for row in h.masks()]
    return Graph(g.n + h.n, adj)


def blow_up(g: Graph, h: Graph) -> Graph:
    """g[h]: each vertex of g replaced by a copy of h; copies of adjacent
    g-vertices are completely joined. Vertex (u, i) maps to index u*|h| + i."""
    k = h.n
    n = g.n * k
    h_template = h.masks()
    adj = [0] * n
    for u in range(g.n):
        base = u * k
        cross = 0
        for v in bits(g.adj_mask(u)):
            cross |= ((1 << k) - 1) << (v * k)
        for i in range(k):
            adj[base + i] = (h_template[i] << base) | cross
    return Graph(n, adj)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        row = g.adj_mask(v)
        for u in vs:
            if row & (1 << u):
                adj[index[v]] |= 1 << index[u]
    return Graph(len(vs), adj)


def induced_by_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the vertices of `mask`, plus the dense-to-original
    index map."""
    vs = list(bits(mask))
    sub = induced(g, vs)
    return sub, vs


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj_mask(v)):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks."""
    unseen = (1 << g.n) - 1
    out = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj_mask(v)
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        unseen &= ~comp
    return out
