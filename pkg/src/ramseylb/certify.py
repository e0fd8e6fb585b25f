"""Verification core: check colorings against target patterns, emit
machine-checkable certificates, and reproduce the bundled bound tables.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import __version__, kernels, patterns
from .coloring import TwoColoring, coloring_sha
from .graph import Graph, complement
from .patterns import PatternSpec, parse_pattern

DETECTOR_VERSION = f"ramseylb-{__version__}/{kernels.BACKEND}"


class CertificateError(ValueError):
    pass


@dataclass
class Certificate:
    construction: dict | None
    order: int
    red_target: PatternSpec
    blue_target: PatternSpec
    result: str  # "verified" | "refuted"
    counterexample: dict | None  # {"color": ..., "vertices": [...]}
    coloring_sha: str
    elapsed_ms: float
    detector_version: str = DETECTOR_VERSION

    @property
    def verified(self) -> bool:
        return self.result == "verified"

    def to_json(self) -> str:
        payload = {
            "construction": self.construction,
            "order": self.order,
            "red_target": str(self.red_target),
            "blue_target": str(self.blue_target),
            "result": self.result,
            "counterexample": self.counterexample,
            "coloring_sha": self.coloring_sha,
            "elapsed_ms": self.elapsed_ms,
            "detector_version": self.detector_version,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        data = json.loads(text)
        return cls(
            construction=data["construction"],
            order=data["order"],
            red_target=parse_pattern(data["red_target"]),
            blue_target=parse_pattern(data["blue_target"]),
            result=data["result"],
            counterexample=data["counterexample"],
            coloring_sha=data["coloring_sha"],
            elapsed_ms=data["elapsed_ms"],
            detector_version=data.get("detector_version", DETECTOR_VERSION),
        )


def verify(
    coloring: TwoColoring,
    red_target: PatternSpec,
    blue_target: PatternSpec,
    construction: dict | None = None,
) -> Certificate:
    """Certify that the coloring avoids a red red_target and a blue
    blue_target. Red is checked first; the first refutation short-circuits."""
    start = time.perf_counter()
    counterexample = None
    embedding = patterns.find_pattern(coloring.red, red_target)
    if embedding is not None:
        assert patterns.check_embedding(coloring.red, red_target, embedding)
        counterexample = {"color": "red", "vertices": embedding}
    else:
        embedding = patterns.find_pattern(coloring.blue, blue_target)
        if embedding is not None:
            assert patterns.check_embedding(coloring.blue, blue_target, embedding)
            counterexample = {"color": "blue", "vertices": embedding}
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return Certificate(
        construction=construction,
        order=coloring.order,
        red_target=red_target,
        blue_target=blue_target,
        result="refuted" if counterexample else "verified",
        counterexample=counterexample,
        coloring_sha=coloring_sha(coloring),
        elapsed_ms=elapsed_ms,
    )


def verify_construction(construction) -> Certificate:
    return verify(
        construction.coloring,
        construction.red_target,
        construction.blue_target,
        construction=construction.describe(),
    )


def verify_ramsey_witness(
    g: Graph, avoid: PatternSpec, avoid_complement: PatternSpec
) -> Certificate:
    """Certify a Ramsey witness graph: g avoids `avoid` and its complement
    avoids `avoid_complement`. Treats g as the red side of a coloring."""
    return verify(TwoColoring(g), avoid, avoid_complement)


# ---------------------------------------------------------------------------
# bound tables
#
# Stored rows are literal values from the published tables; derived rows are
# recomputed here from the clique tables and diffed against the stored ones.

# R(K3, Kn) lower-bound values, n = 3..15 (exact through n = 9)
K3_KN_LOWER = {
    3: 6, 4: 9, 5: 14, 6: 18, 7: 23, 8: 28, 9: 36,
    10: 40, 11: 47, 12: 53, 13: 60, 14: 67, 15: 74,
}

# R(K4-e, Kn) lower-bound values, n = 3..10 (exact through n = 6)
K4ME_KN_LOWER = {3: 7, 4: 11, 5: 16, 6: 21, 7: 28, 8: 36, 9: 41, 10: 49}

# published lower bounds of R(W5, Kn) and R(W6, Kn), n = 5..15
W5W6_KN_TABLE = {
    5: 27, 6: 35, 7: 45, 8: 55, 9: 71, 10: 79,
    11: 93, 12: 105, 13: 119, 14: 133, 15: 147,
}

# published lower bounds of R(W7, Kn), n = 5..10
W7_KN_TABLE = {5: 31, 6: 41, 7: 55, 8: 71, 9: 81, 10: 97}


def derived_w5w6_row() -> dict[int, int]:
    return {n: 2 * K3_KN_LOWER[n] - 1 for n in range(5, 16)}


def derived_w7_row() -> dict[int, int]:
    return {n: 2 * K4ME_KN_LOWER[n] - 1 for n in range(5, 11)}


def reproduce_tables() -> dict:
    """Derive the wheel-vs-clique rows from the clique tables and diff them
    against the stored published rows. Any mismatch is a hard failure."""
    w5w6 = derived_w5w6_row()
    w7 = derived_w7_row()
    mismatches = []
    for n, value in w5w6.items():
        if value != W5W6_KN_TABLE[n]:
            mismatches.append(("w5w6", n, value, W5W6_KN_TABLE[n]))
    for n, value in w7.items():
        if value != W7_KN_TABLE[n]:
            mismatches.append(("w7", n, value, W7_KN_TABLE[n]))
    if mismatches:
        raise CertificateError(f"table mismatch: {mismatches}")
    return {"w5w6": w5w6, "w7": w7}
