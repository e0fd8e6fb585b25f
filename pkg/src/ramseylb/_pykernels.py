"""Pure-Python search kernels over bitmask adjacency.

All functions take (n, adj) where adj is a list of per-vertex neighbor
bitmasks, and return a witness vertex list or None. The compiled extension
(_ckernels) implements the same contract; see kernels.py for selection.
"""

from __future__ import annotations

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# cliques: branch and bound with a greedy-coloring bound (Tomita style)


def find_clique(n, adj, k):
    """A k-clique as a vertex list, or None."""
    if k <= 0:
        return []
    if k == 1:
        return [0] if n >= 1 else None
    if k > n:
        return None
    stack = []

    def expand(cand):
        depth = len(stack)
        if depth + cand.bit_count() < k:
            return False
        # greedy coloring of the candidates; color number bounds clique growth
        order = []
        colors = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                colors.append(color)
                avail &= ~(adj[v] | (1 << v))
                uncolored &= ~(1 << v)
        rest = cand
        for i in range(len(order) - 1, -1, -1):
            if depth + colors[i] < k:
                return False
            v = order[i]
            stack.append(v)
            if depth + 1 == k or expand(rest & adj[v]):
                return True
            stack.pop()
            rest &= ~(1 << v)
        return False

    if expand((1 << n) - 1):
        return list(stack)
    return None


# ---------------------------------------------------------------------------
# K4-e: an edge whose endpoints share two common neighbors


def find_k4me(n, adj):
    for u in range(n):
        row = adj[u] >> (u + 1)
        for d in _bits(row):
            v = u + 1 + d
            common = adj[u] & adj[v]
            if common.bit_count() >= 2:
                w = (common & -common).bit_length() - 1
                common &= common - 1
                x = (common & -common).bit_length() - 1
                return [u, v, w, x]
    return None


# ---------------------------------------------------------------------------
# shared pruning helpers


def _reachable(adj, start, allowed):
    """Bitmask of vertices reachable from `start` through `allowed`."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _independent_bound(adj, avail):
    """Upper bound on the order of any path inside `avail`: a greedy
    independent set I gives the bound 2*(|avail| - |I|) + 1."""
    total = avail.bit_count()
    if total == 0:
        return 0
    picked = 0
    rest = avail
    while rest:
        # min-degree-within-rest vertex keeps the independent set large
        best = -1
        best_deg = -1
        scan = rest
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            deg = (adj[v] & rest).bit_count()
            if best < 0 or deg < best_deg:
                best, best_deg = v, deg
        picked += 1
        rest &= ~(adj[best] | (1 << best))
    return min(total, 2 * (total - picked) + 1)


def _is_bipartite(n, adj):
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# exact-length cycles: backtracking with least-vertex canonical start


def find_cycle(n, adj, length):
    """A cycle with exactly `length` vertices (vertex list in cycle order),
    or None."""
    if length < 3 or length > n:
        return None
    if length % 2 == 1 and _is_bipartite(n, adj):
        return None
    path = []

    def dfs(s, v, used, depth):
        if depth == length:
            return bool(adj[v] & (1 << s))
        allowed = ~used & (~0 << (s + 1)) & ((1 << n) - 1)
        reach = _reachable(adj, v, allowed | (1 << s))
        if not reach & (1 << s):
            return False
        if (reach & allowed).bit_count() < length - depth:
            return False
        for u in _bits(adj[v] & allowed):
            path.append(u)
            if dfs(s, u, used | (1 << u), depth + 1):
                return True
            path.pop()
        return False

    for s in range(n - length + 1):
        path.append(s)
        if dfs(s, s, 1 << s, 1):
            return list(path)
        path.pop()
    return None


# ---------------------------------------------------------------------------
# exact-order paths: backtracking with component and independence bounds


def find_path(n, adj, order):
    """A path on exactly `order` vertices (vertex list in path order),
    or None."""
    if order < 1 or order > n:
        return None
    if order == 1:
        return [0]
    full = (1 << n) - 1
    # root-level bound per connected component
    feasible = False
    unseen = full
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = _reachable(adj, start, unseen)
        unseen &= ~comp
        if _independent_bound(adj, comp) >= order:
            feasible = True
    if not feasible:
        return None
    path = []

    def dfs(v, used, depth):
        if depth == order:
            return True
        avail = _reachable(adj, v, full & ~used) & ~used
        rest = order - depth
        if avail.bit_count() < rest:
            return False
        if _independent_bound(adj, avail) < rest:
            return False
        for u in _bits(adj[v] & avail):
            path.append(u)
            if dfs(u, used | (1 << u), depth + 1):
                return True
            path.pop()
        return False

    for s in range(n):
        path.append(s)
        if dfs(s, 1 << s, 1):
            return list(path)
        path.pop()
    return None
