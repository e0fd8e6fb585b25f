"""Target patterns and exact containment detectors.

A pattern is one of fan:n, wheel:n, kipas:n, clique:k, cycle:len,
path:order, matching:n, k4me. "Contains" always means as a (not
necessarily induced) subgraph. Detectors return witness embeddings;
the boolean API is a thin wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .graph import Graph, induced_by_mask
from .matching import matching_edges
from .matching import matching_number as _matching_number

KINDS = ("fan", "wheel", "kipas", "clique", "cycle", "path", "matching", "k4me")

_MIN_SIZE = {
    "fan": 1,
    "wheel": 4,
    "kipas": 3,
    "clique": 1,
    "cycle": 3,
    "path": 1,
    "matching": 1,
}


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    size: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PatternError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "k4me":
            if self.size is not None:
                raise PatternError("k4me takes no size parameter")
        else:
            if self.size is None:
                raise PatternError(f"{self.kind} needs a size parameter")
            if self.size < _MIN_SIZE[self.kind]:
                raise PatternError(
                    f"{self.kind} size must be >= {_MIN_SIZE[self.kind]}, "
                    f"got {self.size}"
                )

    @property
    def vertex_count(self) -> int:
        if self.kind == "fan":
            return 2 * self.size + 1
        if self.kind == "matching":
            return 2 * self.size
        if self.kind == "k4me":
            return 4
        return self.size

    def __str__(self) -> str:
        if self.kind == "k4me":
            return "k4me"
        return f"{self.kind}:{self.size}"


def parse_pattern(text: str) -> PatternSpec:
    text = text.strip()
    if text == "k4me":
        return PatternSpec("k4me")
    if ":" not in text:
        raise PatternError(f"bad pattern {text!r}, expected kind:size or k4me")
    kind, _, raw = text.partition(":")
    try:
        size = int(raw)
    except ValueError:
        raise PatternError(f"bad pattern size in {text!r}") from None
    return PatternSpec(kind, size)


def fan(n: int) -> PatternSpec:
    return PatternSpec("fan", n)


def wheel(n: int) -> PatternSpec:
    return PatternSpec("wheel", n)


def kipas(n: int) -> PatternSpec:
    return PatternSpec("kipas", n)


def clique(k: int) -> PatternSpec:
    return PatternSpec("clique", k)


def k4me() -> PatternSpec:
    return PatternSpec("k4me")


# ---------------------------------------------------------------------------
# detectors


def matching_number(g: Graph) -> int:
    return _matching_number(g)


def has_clique(g: Graph, k: int) -> bool:
    return kernels.find_clique(g, k) is not None


def has_k4_minus_e(g: Graph) -> bool:
    return kernels.find_k4me(g) is not None


def has_cycle_of_length(g: Graph, length: int) -> bool:
    if length < 3:
        raise PatternError("cycle length must be >= 3")
    return kernels.find_cycle(g, length) is not None


def has_path_of_order(g: Graph, order: int) -> bool:
    if order < 1:
        raise PatternError("path order must be >= 1")
    return kernels.find_path(g, order) is not None


def _find_centered(g: Graph, inner):
    """Hub patterns: try every vertex as center, search its neighborhood."""
    for v in range(g.n):
        sub, vs = induced_by_mask(g, g.adj_mask(v))
        found = inner(sub)
        if found is not None:
            return [v] + [vs[i] for i in found]
    return None


def find_pattern(g: Graph, spec: PatternSpec):
    """Witness embedding (vertex list) of the pattern in g, or None.

    Witness layouts: fan -> [hub, a1, b1, ..., an, bn]; wheel/kipas ->
    [hub, cycle/path in order]; clique/cycle/path -> vertex list in order;
    matching -> [a1, b1, ..., an, bn]; k4me -> [u, v, w, x] with uv an edge
    and w, x common neighbors.
    """
    kind = spec.kind
    if kind == "clique":
        return kernels.find_clique(g, spec.size)
    if kind == "cycle":
        return kernels.find_cycle(g, spec.size)
    if kind == "path":
        return kernels.find_path(g, spec.size)
    if kind == "k4me":
        return kernels.find_k4me(g)
    if kind == "matching":
        pairs = matching_edges(g)
        if len(pairs) < spec.size:
            return None
        out = []
        for a, b in pairs[: spec.size]:
            out += [a, b]
        return out
    if kind == "fan":
        n = spec.size

        def inner(sub: Graph):
            pairs = matching_edges(sub)
            if len(pairs) < n:
                return None
            out = []
            for a, b in pairs[:n]:
                out += [a, b]
            return out

        return _find_centered(g, inner)
    if kind == "wheel":
        return _find_centered(g, lambda sub: kernels.find_cycle(sub, spec.size - 1))
    if kind == "kipas":
        return _find_centered(g, lambda sub: kernels.find_path(sub, spec.size - 1))
    raise PatternError(f"unknown pattern kind {kind!r}")


def contains_pattern(g: Graph, spec: PatternSpec) -> bool:
    return find_pattern(g, spec) is not None


# ---------------------------------------------------------------------------
# witness validation (used to re-check certificate counterexamples)


def check_embedding(g: Graph, spec: PatternSpec, vertices: list[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    if len(vs) != spec.vertex_count:
        return False
    kind = spec.kind
    if kind == "clique":
        return all(g.has_edge(a, b) for a, b in combinations(vs, 2))
    if kind == "cycle":
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
    if kind == "path":
        return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))
    if kind == "matching":
        return all(g.has_edge(vs[2 * i], vs[2 * i + 1]) for i in range(spec.size))
    if kind == "k4me":
        return sum(1 for a, b in combinations(vs, 2) if g.has_edge(a, b)) >= 5
    hub, rest = vs[0], vs[1:]
    if not all(g.has_edge(hub, v) for v in rest):
        return False
    if kind == "fan":
        return all(
            g.has_edge(rest[2 * i], rest[2 * i + 1]) for i in range(spec.size)
        )
    if kind == "wheel":
        return all(
            g.has_edge(rest[i], rest[(i + 1) % len(rest)]) for i in range(len(rest))
        )
    if kind == "kipas":
        return all(g.has_edge(rest[i], rest[i + 1]) for i in range(len(rest) - 1))
    raise PatternError(f"unknown pattern kind {kind!r}")
