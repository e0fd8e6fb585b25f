# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels over bitmask adjacency.

Same contract as _pykernels: functions take (n, adj) with per-vertex
neighbor bitmasks and return a witness vertex list or None, with identical
search order (so both backends produce identical witnesses). Graphs on more
than 64 vertices fall back to the pure twin.
"""

from . import _pykernels

BACKEND = "c"

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _pop(u64 m) nogil:
    return __builtin_popcountll(m)


cdef inline int _ctz(u64 m) nogil:
    return __builtin_ctzll(m)


cdef inline u64 _full(int n) nogil:
    if n >= 64:
        return <u64>0 - 1
    return ((<u64>1) << n) - 1


# ---------------------------------------------------------------------------
# cliques: branch and bound with a greedy-coloring bound (Tomita style)


cdef bint _clique_expand(u64 *adj, int k, u64 cand, int *stack, int *stack_len) nogil:
    cdef int depth = stack_len[0]
    if depth + _pop(cand) < k:
        return False
    cdef int order[64]
    cdef int colors[64]
    cdef int cnt = 0
    cdef u64 uncolored = cand
    cdef u64 avail, rest
    cdef int color = 0
    cdef int v, i
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = _ctz(avail)
            order[cnt] = v
            colors[cnt] = color
            cnt += 1
            avail &= ~(adj[v] | ((<u64>1) << v))
            uncolored &= ~((<u64>1) << v)
    rest = cand
    for i in range(cnt - 1, -1, -1):
        if depth + colors[i] < k:
            return False
        v = order[i]
        stack[stack_len[0]] = v
        stack_len[0] += 1
        if depth + 1 == k or _clique_expand(adj, k, rest & adj[v], stack, stack_len):
            return True
        stack_len[0] -= 1
        rest &= ~((<u64>1) << v)
    return False


def find_clique(n, adj, k):
    """A k-clique as a vertex list, or None."""
    if n > 64:
        return _pykernels.find_clique(n, adj, k)
    if k <= 0:
        return []
    if k == 1:
        return [0] if n >= 1 else None
    if k > n:
        return None
    cdef u64 cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef int stack[64]
    cdef int stack_len = 0
    if _clique_expand(cadj, k, _full(n), stack, &stack_len):
        return [stack[i] for i in range(stack_len)]
    return None


# ---------------------------------------------------------------------------
# K4-e: an edge whose endpoints share two common neighbors


def find_k4me(n, adj):
    if n > 64:
        return _pykernels.find_k4me(n, adj)
    cdef u64 cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef u64 row, common
    cdef int u, v, w, x
    for u in range(n):
        row = cadj[u] >> (u + 1)
        while row:
            v = u + 1 + _ctz(row)
            row &= row - 1
            common = cadj[u] & cadj[v]
            if _pop(common) >= 2:
                w = _ctz(common)
                common &= common - 1
                x = _ctz(common)
                return [u, v, w, x]
    return None


# ---------------------------------------------------------------------------
# shared pruning helpers


cdef u64 _reachable(u64 *adj, int start, u64 allowed) nogil:
    cdef u64 seen = (<u64>1) << start
    cdef u64 frontier = seen
    cdef u64 nxt, scan
    while frontier:
        nxt = 0
        scan = frontier
        while scan:
            nxt |= adj[_ctz(scan)]
            scan &= scan - 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef int _independent_bound(u64 *adj, u64 avail) nogil:
    cdef int total = _pop(avail)
    if total == 0:
        return 0
    cdef int picked = 0
    cdef u64 rest = avail
    cdef u64 scan
    cdef int best, best_deg, v, deg, bound
    while rest:
        best = -1
        best_deg = -1
        scan = rest
        while scan:
            v = _ctz(scan)
            scan &= scan - 1
            deg = _pop(adj[v] & rest)
            if best < 0 or deg < best_deg:
                best = v
                best_deg = deg
        picked += 1
        rest &= ~(adj[best] | ((<u64>1) << best))
    bound = 2 * (total - picked) + 1
    if bound > total:
        bound = total
    return bound


cdef bint _is_bipartite(int n, u64 *adj) nogil:
    cdef int color[64]
    cdef int stack[64]
    cdef int top, s, v, u
    cdef u64 scan
    for s in range(n):
        color[s] = -1
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack[0] = s
        top = 1
        while top:
            top -= 1
            v = stack[top]
            scan = adj[v]
            while scan:
                u = _ctz(scan)
                scan &= scan - 1
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack[top] = u
                    top += 1
                elif color[u] == color[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# exact-length cycles: backtracking with least-vertex canonical start


cdef bint _cycle_dfs(u64 *adj, int n, int length, int s, int v, u64 used,
                     int depth, int *path) nogil:
    if depth == length:
        return (adj[v] & ((<u64>1) << s)) != 0
    cdef u64 allowed = ~used & _full(n)
    if s + 1 >= 64:
        allowed = 0
    else:
        allowed &= (<u64>0 - 1) << (s + 1)
    cdef u64 reach = _reachable(adj, v, allowed | ((<u64>1) << s))
    if not (reach & ((<u64>1) << s)):
        return False
    if _pop(reach & allowed) < length - depth:
        return False
    cdef u64 scan = adj[v] & allowed
    cdef int u
    while scan:
        u = _ctz(scan)
        scan &= scan - 1
        path[depth] = u
        if _cycle_dfs(adj, n, length, s, u, used | ((<u64>1) << u), depth + 1, path):
            return True
    return False


def find_cycle(n, adj, length):
    """A cycle with exactly `length` vertices (vertex list in cycle order),
    or None."""
    if n > 64:
        return _pykernels.find_cycle(n, adj, length)
    if length < 3 or length > n:
        return None
    cdef u64 cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    if length % 2 == 1 and _is_bipartite(n, cadj):
        return None
    cdef int path[64]
    cdef int s
    for s in range(n - length + 1):
        path[0] = s
        if _cycle_dfs(cadj, n, length, s, s, (<u64>1) << s, 1, path):
            return [path[i] for i in range(length)]
    return None


# ---------------------------------------------------------------------------
# exact-order paths: backtracking with component and independence bounds


cdef bint _path_dfs(u64 *adj, int n, int order, int v, u64 used, int depth,
                    int *path) nogil:
    if depth == order:
        return True
    cdef u64 avail = _reachable(adj, v, _full(n) & ~used) & ~used
    cdef int rest = order - depth
    if _pop(avail) < rest:
        return False
    if _independent_bound(adj, avail) < rest:
        return False
    cdef u64 scan = adj[v] & avail
    cdef int u
    while scan:
        u = _ctz(scan)
        scan &= scan - 1
        path[depth] = u
        if _path_dfs(adj, n, order, u, used | ((<u64>1) << u), depth + 1, path):
            return True
    return False


def find_path(n, adj, order):
    """A path on exactly `order` vertices (vertex list in path order),
    or None."""
    if n > 64:
        return _pykernels.find_path(n, adj, order)
    if order < 1 or order > n:
        return None
    if order == 1:
        return [0]
    cdef u64 cadj[64]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    # root-level bound per connected component
    cdef u64 unseen = _full(n)
    cdef u64 comp
    cdef bint feasible = False
    cdef int start
    while unseen:
        start = _ctz(unseen)
        comp = _reachable(cadj, start, unseen)
        unseen &= ~comp
        if _independent_bound(cadj, comp) >= order:
            feasible = True
    if not feasible:
        return None
    cdef int path[64]
    cdef int s
    for s in range(n):
        path[0] = s
        if _path_dfs(cadj, n, order, s, (<u64>1) << s, 1, path):
            return [path[i] for i in range(order)]
    return None
