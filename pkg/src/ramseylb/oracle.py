"""Brute-force reference implementations, used in tests and for spot audits.

Deliberately naive: enumerate vertex subsets of the pattern's order, then
role assignments (hub choice, cycle/path orderings, pair partitions)
straight from the definitions. Shares no search code with the fast
detectors; only Graph accessors are used.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph
from .patterns import PatternSpec

CONTAINS_ORDER_CAP = 16
MATCHING_ORDER_CAP = 14


class OracleGuardError(ValueError):
    pass


def _pairable(g: Graph, vs: tuple[int, ...]) -> bool:
    """Can vs be partitioned into adjacent pairs?"""
    if not vs:
        return True
    a = vs[0]
    for i in range(1, len(vs)):
        if g.has_edge(a, vs[i]):
            rest = vs[1:i] + vs[i + 1 :]
            if _pairable(g, rest):
                return True
    return False


def _has_cycle_ordering(g: Graph, vs: tuple[int, ...]) -> bool:
    first = vs[0]
    for perm in permutations(vs[1:]):
        if perm[0] > perm[-1]:
            continue  # each cycle otherwise shows up in both directions
        if not g.has_edge(first, perm[0]) or not g.has_edge(perm[-1], first):
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(len(perm) - 1)):
            return True
    return False


def _has_path_ordering(g: Graph, vs: tuple[int, ...]) -> bool:
    if len(vs) == 1:
        return True
    for perm in permutations(vs):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(len(perm) - 1)):
            return True
    return False


def oracle_contains(g: Graph, spec: PatternSpec) -> bool:
    if g.n > CONTAINS_ORDER_CAP:
        raise OracleGuardError(
            f"oracle_contains limited to order {CONTAINS_ORDER_CAP}, got {g.n}"
        )
    order = spec.vertex_count
    if order > g.n:
        return False
    kind = spec.kind
    verts = range(g.n)
    if kind == "clique":
        return any(
            all(g.has_edge(a, b) for a, b in combinations(sub, 2))
            for sub in combinations(verts, order)
        )
    if kind == "k4me":
        return any(
            sum(1 for a, b in combinations(sub, 2) if g.has_edge(a, b)) >= 5
            for sub in combinations(verts, 4)
        )
    if kind == "cycle":
        return any(_has_cycle_ordering(g, sub) for sub in combinations(verts, order))
    if kind == "path":
        return any(_has_path_ordering(g, sub) for sub in combinations(verts, order))
    if kind == "matching":
        return any(_pairable(g, sub) for sub in combinations(verts, order))
    # hub patterns: fan, wheel, kipas
    for sub in combinations(verts, order):
        for hub_idx, hub in enumerate(sub):
            rest = sub[:hub_idx] + sub[hub_idx + 1 :]
            if not all(g.has_edge(hub, v) for v in rest):
                continue
            if kind == "fan" and _pairable(g, rest):
                return True
            if kind == "wheel" and _has_cycle_ordering(g, rest):
                return True
            if kind == "kipas" and _has_path_ordering(g, rest):
                return True
    return False


def oracle_matching_number(g: Graph) -> int:
    if g.n > MATCHING_ORDER_CAP:
        raise OracleGuardError(
            f"oracle_matching_number limited to order {MATCHING_ORDER_CAP}, got {g.n}"
        )
    edges = g.edges()

    def best(remaining: list[tuple[int, int]]) -> int:
        if not remaining:
            return 0
        # branch on the lowest-index covered vertex: either it stays
        # unmatched, or one of its edges is included
        v = min(min(e) for e in remaining)
        without = [e for e in remaining if v not in e]
        result = best(without)
        for a, b in remaining:
            if v == a or v == b:
                other = b if v == a else a
                rest = [e for e in remaining if v not in e and other not in e]
                result = max(result, 1 + best(rest))
        return result

    return best(edges)
