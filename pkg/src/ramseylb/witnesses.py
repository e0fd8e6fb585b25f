"""Base graphs for the blow-up constructions: bundled known Ramsey witness
graphs, graph6 file ingestion, and a budget-bounded tabu search for new
witnesses. Nothing is trusted: every witness is re-verified by the
detectors before use.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from importlib import resources

from . import patterns
from .graph import Graph, bits, circulant, complement
from .graph6 import from_graph6
from .patterns import PatternSpec

SEARCH_ORDER_CAP = 64

load_graph6 = from_graph6


class WitnessNotFoundError(KeyError):
    pass


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessRecord:
    id: str
    graph: Graph
    avoid_red: PatternSpec
    avoid_blue_in_complement: PatternSpec
    provenance: str
    verified: bool = False


def verify_record(record: WitnessRecord) -> WitnessRecord:
    """Re-check the witness with the detectors; the only way verified=True
    is ever set."""
    ok = not patterns.contains_pattern(
        record.graph, record.avoid_red
    ) and not patterns.contains_pattern(
        complement(record.graph), record.avoid_blue_in_complement
    )
    if not ok:
        raise WitnessError(f"witness {record.id} failed re-verification")
    return replace(record, verified=True)


# ---------------------------------------------------------------------------
# bundled registry
#
# Pairs are keyed "k3" (triangle vs clique) and "k4me" (diamond vs clique).
# The two classic circulants are built in code; anything else ships as a
# graph6 data file under data/witnesses/<pair>/<n>.g6 and is re-verified by
# the test suite, never trusted.

_PAIR_AVOID = {"k3": patterns.clique(3), "k4me": patterns.k4me()}


def _bundled_builtin(pair: str, n: int) -> Graph | None:
    if pair == "k3" and n == 5:
        return circulant(13, {1, 5})
    return None


def _bundled_file(pair: str, n: int) -> Graph | None:
    try:
        ref = resources.files("ramseylb").joinpath(f"data/witnesses/{pair}/{n}.g6")
        text = ref.read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return from_graph6(text)


def bundled_witness(pair: str, n: int) -> WitnessRecord:
    if pair not in _PAIR_AVOID:
        raise WitnessNotFoundError(f"unknown pattern pair {pair!r} (k3 or k4me)")
    graph = _bundled_builtin(pair, n)
    provenance = "bundled"
    if graph is None:
        graph = _bundled_file(pair, n)
    if graph is None:
        raise WitnessNotFoundError(
            f"no bundled witness for ({pair}, n={n}); supply file or run search"
        )
    return WitnessRecord(
        id=f"{pair}k{n}",
        graph=graph,
        avoid_red=_PAIR_AVOID[pair],
        avoid_blue_in_complement=patterns.clique(n),
        provenance=provenance,
    )


def parse_witness_key(key: str) -> tuple[str, int]:
    """Keys look like k3k5 or k4mek4."""
    for pair in ("k4me", "k3"):
        if key.startswith(pair) and key[len(pair):].startswith("k"):
            try:
                return pair, int(key[len(pair) + 1:])
            except ValueError:
                break
    raise WitnessNotFoundError(f"bad witness key {key!r} (expected e.g. k3k5)")


def witness_from_file(
    path: str, avoid: PatternSpec, avoid_complement: PatternSpec
) -> WitnessRecord:
    with open(path) as fh:
        graph = from_graph6(fh.read())
    return WitnessRecord(
        id=path,
        graph=graph,
        avoid_red=avoid,
        avoid_blue_in_complement=avoid_complement,
        provenance="file",
    )


# ---------------------------------------------------------------------------
# tabu search
#
# Objective: exact count of violating embeddings (k-cliques or diamonds) on
# both sides; neighborhood is single edge flips; tabu tenure on recently
# flipped pairs with aspiration on improving the incumbent.


def _count_cliques_within(adj, sub: int, k: int) -> int:
    if k == 0:
        return 1
    if k == 1:
        return sub.bit_count()
    if sub.bit_count() < k:
        return 0
    total = 0
    scan = sub
    while scan:
        v = (scan & -scan).bit_length() - 1
        scan &= scan - 1
        # cliques whose lowest vertex is v
        total += _count_cliques_within(adj, adj[v] & scan, k - 1)
    return total


def _count_k4me(n, adj) -> int:
    total = 0
    for u in range(n):
        row = adj[u] >> (u + 1)
        for d in bits(row):
            v = u + 1 + d
            c = (adj[u] & adj[v]).bit_count()
            total += c * (c - 1) // 2
    return total


def _side_count(n, adj, spec: PatternSpec) -> int:
    if spec.kind == "clique":
        return _count_cliques_within(adj, (1 << n) - 1, spec.size)
    if spec.kind == "k4me":
        return _count_k4me(n, adj)
    raise WitnessError(
        f"tabu search objective supports clique:k and k4me targets, not {spec}"
    )


def _flip_delta(n, adj, spec: PatternSpec, u: int, v: int, adding: bool) -> int:
    """Objective change on this side when the edge uv is toggled to
    `adding`. The pair uv must not be adjacent yet if adding, and adjacent
    if removing."""
    if spec.kind == "clique":
        common = adj[u] & adj[v]
        d = _count_cliques_within(adj, common, spec.size - 2)
        return d if adding else -d
    # k4me: recount locally around the flipped pair is error-prone; the
    # graphs are small, recount the whole side
    adj2 = list(adj)
    if adding:
        adj2[u] |= 1 << v
        adj2[v] |= 1 << u
    else:
        adj2[u] &= ~(1 << v)
        adj2[v] &= ~(1 << u)
    return _count_k4me(n, adj2) - _count_k4me(n, adj)


def tabu_search_witness(
    order: int,
    avoid: PatternSpec,
    avoid_complement: PatternSpec,
    budget: int,
    seed: int,
) -> Graph | None:
    """Search for a graph on `order` vertices avoiding `avoid` whose
    complement avoids `avoid_complement`. Deterministic for a given seed;
    returns None when the budget runs out."""
    if order > SEARCH_ORDER_CAP:
        raise WitnessError(f"search order capped at {SEARCH_ORDER_CAP}, got {order}")
    rng = random.Random(seed)
    n = order
    adj = [0] * n
    cadj = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for u, v in pairs:
        if rng.random() < 0.5:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        else:
            cadj[u] |= 1 << v
            cadj[v] |= 1 << u

    def full_objective():
        return _side_count(n, adj, avoid) + _side_count(n, cadj, avoid_complement)

    def finish() -> Graph | None:
        g = Graph(n, adj)
        if not patterns.contains_pattern(g, avoid) and not patterns.contains_pattern(
            complement(g), avoid_complement
        ):
            return g
        return None

    current = full_objective()
    best_seen = current
    tabu_until: dict[tuple[int, int], int] = {}
    for step in range(budget):
        if current == 0:
            found = finish()
            if found is not None:
                return found
        order_pairs = pairs[:]
        rng.shuffle(order_pairs)
        best_move = None
        best_obj = None
        for u, v in order_pairs:
            red_edge = bool(adj[u] & (1 << v))
            # toggling: red side flips to (not red_edge), complement flips
            # the other way
            delta = _flip_delta(n, adj, avoid, u, v, not red_edge)
            delta += _flip_delta(n, cadj, avoid_complement, u, v, red_edge)
            cand = current + delta
            is_tabu = tabu_until.get((u, v), -1) > step
            if is_tabu and cand >= best_seen:
                continue
            if best_obj is None or cand < best_obj:
                best_obj = cand
                best_move = (u, v, red_edge)
        if best_move is None:
            continue
        u, v, red_edge = best_move
        bit_u, bit_v = 1 << u, 1 << v
        if red_edge:
            adj[u] &= ~bit_v
            adj[v] &= ~bit_u
            cadj[u] |= bit_v
            cadj[v] |= bit_u
        else:
            adj[u] |= bit_v
            adj[v] |= bit_u
            cadj[u] &= ~bit_v
            cadj[v] &= ~bit_u
        current = best_obj
        best_seen = min(best_seen, current)
        tabu_until[(u, v)] = step + 7 + rng.randrange(8)
    if current == 0:
        return finish()
    return None
