"""Parameterized builders for the extremal colorings behind each claimed
lower bound, plus the closed-form bound formulas.

Every builder returns a Construction: the coloring, the two target
patterns it is claimed to avoid, the claimed Ramsey lower bound
(always order + 1), and block metadata for human auditing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from . import patterns
from .coloring import TwoColoring
from .graph import (
    Graph,
    blow_up,
    complete,
    complete_multipartite,
    cycle_with_chords,
    disjoint_union,
    empty,
    join,
    regular_graph,
)
from .patterns import PatternSpec, clique, fan, kipas, wheel


class ConstructionError(ValueError):
    def __init__(self, message: str, embedding: list[int] | None = None):
        super().__init__(message)
        self.embedding = embedding


@dataclass
class Construction:
    family: str
    params: dict
    coloring: TwoColoring
    red_target: PatternSpec
    blue_target: PatternSpec
    claimed_bound: int
    blocks: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        assert self.claimed_bound == self.coloring.order + 1

    def describe(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "blocks": self.blocks,
        }


# ---------------------------------------------------------------------------
# the clique-plus-four-blocks layout (shared by the fan and odd-kipas
# constructions): one red clique K, four blocks H1..H4 with prescribed red
# interiors, red between (H1 u H4) and (H2 u H3), blue everywhere else


def _four_block_layout(
    clique_size: int, h_graphs: list[Graph]
) -> tuple[Graph, dict[str, list[int]]]:
    assert len(h_graphs) == 4
    sizes = [clique_size] + [h.n for h in h_graphs]
    starts = [sum(sizes[:i]) for i in range(5)]
    n = sum(sizes)
    edges = []
    k0 = starts[0]
    for u in range(clique_size):
        for v in range(u + 1, clique_size):
            edges.append((k0 + u, k0 + v))
    for i, h in enumerate(h_graphs):
        base = starts[i + 1]
        for u, v in h.edges():
            edges.append((base + u, base + v))
    left = list(range(starts[1], starts[1] + sizes[1])) + list(
        range(starts[4], starts[4] + sizes[4])
    )
    right = list(range(starts[2], starts[2] + sizes[2])) + list(
        range(starts[3], starts[3] + sizes[3])
    )
    for u in left:
        for v in right:
            edges.append((u, v))
    blocks = {"K": list(range(starts[0], starts[0] + clique_size))}
    for i in range(4):
        blocks[f"H{i + 1}"] = list(range(starts[i + 1], starts[i + 1] + sizes[i + 1]))
    return Graph.from_edges(n, edges), blocks


# ---------------------------------------------------------------------------
# fans


def _fan_block_sizes(n: int, m: int) -> list[int]:
    small_range = 4 * n <= 5 * m - 4  # n <= 5m/4 - 1
    if small_range:
        if m % 2 == 0:
            return [m - 1, 2 * n - 3 * m // 2 + 1, m // 2, m // 2 - 1]
        return [m - 1, 2 * n - 3 * (m - 1) // 2, (m - 1) // 2, (m - 1) // 2]
    if m % 2 == 0:
        return [m - 1, m - 1, m // 2, m // 2 - 1]
    return [m - 1, m - 1, (m - 1) // 2, (m - 1) // 2]


def fan_construction(n: int, m: int) -> Construction:
    if m < 4:
        raise ConstructionError(f"fan construction needs m >= 4, got m={m}")
    if not (m <= n and 2 * n <= 3 * m - 4):
        raise ConstructionError(
            f"fan construction needs m <= n <= 3m/2 - 2, got n={n}, m={m}"
        )
    h_sizes = _fan_block_sizes(n, m)
    red, blocks = _four_block_layout(2 * n, [complete(s) for s in h_sizes])
    return Construction(
        family="fan",
        params={"n": n, "m": m},
        coloring=TwoColoring(red),
        red_target=fan(n),
        blue_target=fan(m),
        claimed_bound=red.n + 1,
        blocks=blocks,
    )


# ---------------------------------------------------------------------------
# wheels of even order


def wheel_even_construction(n: int) -> Construction:
    if n % 2 != 0:
        raise ConstructionError(f"even-wheel construction needs even n, got {n}")
    if n < 6:
        raise ConstructionError(f"even-wheel construction needs n >= 6, got {n}")
    if n < 8:
        warnings.warn(
            f"even-wheel construction used below the claimed range (n={n} < 8)",
            stacklevel=2,
        )
    part = complete(n - 1)
    red = disjoint_union(disjoint_union(part, part), part)
    blocks = {f"K{i + 1}": list(range(i * (n - 1), (i + 1) * (n - 1))) for i in range(3)}
    return Construction(
        family="wheel-even",
        params={"n": n},
        coloring=TwoColoring(red),
        red_target=wheel(n),
        blue_target=wheel(n),
        claimed_bound=red.n + 1,
        blocks=blocks,
    )


# ---------------------------------------------------------------------------
# kipases


def kipas_even_construction(m: int) -> Construction:
    if m < 2:
        raise ConstructionError(f"even-kipas construction needs m >= 2, got {m}")
    red = disjoint_union(complete(2 * m + 1), complete_multipartite([m, m, m]))
    blocks = {
        "K": list(range(2 * m + 1)),
        "multipartite": list(range(2 * m + 1, 5 * m + 1)),
    }
    return Construction(
        family="kipas-even",
        params={"m": m},
        coloring=TwoColoring(red),
        red_target=kipas(2 * m + 2),
        blue_target=kipas(2 * m + 2),
        claimed_bound=red.n + 1,
        blocks=blocks,
    )


def kipas_1mod4_construction(m: int, variant: str = "A") -> Construction:
    if m % 2 != 0 or m < 4:
        raise ConstructionError(
            f"1-mod-4 kipas construction needs even m >= 4, got {m}"
        )
    if variant not in ("A", "B"):
        raise ConstructionError(f"variant must be A or B, got {variant!r}")
    if variant == "A":
        red = disjoint_union(complete(2 * m), complete_multipartite([m, m - 1, m - 1]))
        blocks = {
            "K": list(range(2 * m)),
            "multipartite": list(range(2 * m, 5 * m - 2)),
        }
    else:
        # K_m u K_{m-1,m-1}, completely joined to 2m mutually independent
        # new vertices
        core = disjoint_union(complete(m), complete_multipartite([m - 1, m - 1]))
        red = join(core, empty(2 * m))
        blocks = {
            "core": list(range(3 * m - 2)),
            "independent": list(range(3 * m - 2, 5 * m - 2)),
        }
    return Construction(
        family="kipas-1mod4" if variant == "A" else "kipas-1mod4-b",
        params={"m": m, "variant": variant},
        coloring=TwoColoring(red),
        red_target=kipas(2 * m + 1),
        blue_target=kipas(2 * m + 1),
        claimed_bound=red.n + 1,
        blocks=blocks,
    )


def _kipas_3mod4_blocks(m: int) -> tuple[list[int], list[int]]:
    """Block sizes and red interior degrees for H1..H4, by m mod 8."""
    k, r = divmod(m, 8)
    if r == 1:
        return [6 * k + 2, 6 * k, 6 * k, 6 * k], [4 * k + 1, 4 * k - 1, 4 * k - 1, 4 * k + 1]
    if r == 3:
        return [6 * k + 2] * 4, [4 * k + 1] * 4
    if r == 5:
        return [6 * k + 4, 6 * k + 4, 6 * k + 4, 6 * k + 2], [
            4 * k + 1,
            4 * k + 3,
            4 * k + 3,
            4 * k + 1,
        ]
    assert r == 7
    return [6 * k + 6, 6 * k + 6, 6 * k + 4, 6 * k + 4], [4 * k + 3] * 4


def kipas_3mod4_construction(m: int) -> Construction:
    if m % 2 != 1 or m < 3:
        raise ConstructionError(
            f"3-mod-4 kipas construction needs odd m >= 3, got {m}"
        )
    sizes, degs = _kipas_3mod4_blocks(m)
    for s, d in zip(sizes, degs):
        assert s * d % 2 == 0, f"unrealizable regular block ({s}, {d})"
    h_graphs = [regular_graph(s, d) for s, d in zip(sizes, degs)]
    red, blocks = _four_block_layout(2 * m, h_graphs)
    assert red.n == 5 * m - 1
    assert red.is_regular(2 * m - 1), "red graph must be (2m-1)-regular"
    coloring = TwoColoring(red)
    off = [v for v in range(red.n) if v not in set(blocks["K"])]
    blue = coloring.blue
    off_set = set(off)
    for v in off:
        deg = sum(1 for u in blue.neighbors(v) if u in off_set)
        assert deg == m - 1, "blue graph off the clique must be (m-1)-regular"
    return Construction(
        family="kipas-3mod4",
        params={"m": m},
        coloring=coloring,
        red_target=kipas(2 * m + 1),
        blue_target=kipas(2 * m + 1),
        claimed_bound=red.n + 1,
        blocks=blocks,
    )


# ---------------------------------------------------------------------------
# blow-up constructions


W5W7_CHORDS = [(1, 4), (2, 5), (3, 6)]


def w5w7_base() -> Graph:
    """The 7-cycle with its three distance-3 chords (triangle-free)."""
    return cycle_with_chords(7, W5W7_CHORDS)


def w5w7_construction() -> Construction:
    red = blow_up(w5w7_base(), complete(2))
    return Construction(
        family="w5w7",
        params={},
        coloring=TwoColoring(red),
        red_target=wheel(5),
        blue_target=wheel(7),
        claimed_bound=red.n + 1,
        blocks={"pairs": [2 * i for i in range(7)]},
    )


def wheel_clique_blowup(witness: Graph, wheel_kind: int, n: int) -> Construction:
    if wheel_kind not in (5, 6, 7):
        raise ConstructionError(f"wheel_kind must be 5, 6 or 7, got {wheel_kind}")
    if wheel_kind in (5, 6):
        bad = patterns.find_pattern(witness, clique(3))
        if bad is not None:
            raise ConstructionError(
                f"witness is not triangle-free: triangle {bad}", embedding=bad
            )
    else:
        bad = patterns.find_pattern(witness, patterns.k4me())
        if bad is not None:
            raise ConstructionError(
                f"witness contains K4 minus an edge: {bad}", embedding=bad
            )
    from .graph import complement

    bad = patterns.find_pattern(complement(witness), clique(n))
    if bad is not None:
        raise ConstructionError(
            f"witness complement contains a {n}-clique: {bad}", embedding=bad
        )
    red = blow_up(witness, complete(2))
    return Construction(
        family="wc-blowup",
        params={"witness_order": witness.n, "wheel_kind": wheel_kind, "n": n},
        coloring=TwoColoring(red),
        red_target=wheel(wheel_kind),
        blue_target=clique(n),
        claimed_bound=red.n + 1,
        blocks={},
    )


# ---------------------------------------------------------------------------
# closed-form bounds


def _sgn_wheel(n: int) -> int:
    assert n % 2 == 1
    return 1 if n % 4 == 3 else -1


def _sgn_kipas(n: int) -> int:
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 3 else -1


def predicted_lower_bound(family: str, **params) -> int:
    """The closed-form lower bound each family claims (= coloring order + 1)."""
    if family == "fan":
        n, m = params["n"], params["m"]
        if m < 4 or not (m <= n and 2 * n <= 3 * m - 4):
            raise ConstructionError(f"invalid fan parameters n={n}, m={m}")
        if 4 * n <= 5 * m - 4:
            return 4 * n + math.ceil(m / 2)
        return 2 * n + 3 * m - 2
    if family == "wheel-even":
        n = params["n"]
        if n % 2 != 0:
            raise ConstructionError(f"even-wheel bound needs even n, got {n}")
        return 3 * n - 2
    if family == "wheel-odd":
        n = params["n"]
        if n % 2 != 1:
            raise ConstructionError(f"odd-wheel bound needs odd n, got {n}")
        return (5 * n - 6 + _sgn_wheel(n)) // 2
    if family == "kipas":
        n = params["n"]
        return (5 * n - 6 + _sgn_kipas(n)) // 2
    if family == "kipas-even":
        return 5 * params["m"] + 2
    if family in ("kipas-1mod4", "kipas-1mod4-b"):
        return 5 * params["m"] - 1
    if family == "kipas-3mod4":
        return 5 * params["m"]
    if family == "w5w7":
        return 15
    if family == "wc-blowup":
        return 2 * params["witness_order"] + 1
    raise ConstructionError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# family grammar: fan:n,m  wheel-even:n  kipas-even:m  kipas-1mod4:m[,variant]
# kipas-3mod4:m  w5w7  wc-blowup:<witness-ref>,<wheel_kind>,<n>


def build_from_spec(text: str, witness_resolver=None) -> Construction:
    text = text.strip()
    name, _, raw = text.partition(":")
    args = raw.split(",") if raw else []
    try:
        if name == "fan":
            n, m = int(args[0]), int(args[1])
            return fan_construction(n, m)
        if name == "wheel-even":
            return wheel_even_construction(int(args[0]))
        if name == "kipas-even":
            return kipas_even_construction(int(args[0]))
        if name == "kipas-1mod4":
            variant = args[1].strip().upper() if len(args) > 1 else "A"
            return kipas_1mod4_construction(int(args[0]), variant)
        if name == "kipas-3mod4":
            return kipas_3mod4_construction(int(args[0]))
        if name == "w5w7":
            if args:
                raise ConstructionError("w5w7 takes no parameters")
            return w5w7_construction()
        if name == "wc-blowup":
            if witness_resolver is None:
                raise ConstructionError("wc-blowup needs a witness resolver")
            witness = witness_resolver(args[0].strip())
            return wheel_clique_blowup(witness, int(args[1]), int(args[2]))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, ConstructionError):
            raise
        raise ConstructionError(f"bad family spec {text!r}: {exc}") from None
    raise ConstructionError(f"unknown construction family {name!r}")
