"""Search-kernel backend selection.

The compiled extension (_ckernels, Cython) is preferred when it imported
cleanly; the pure-Python twin (_pykernels) is the fallback and the
reference semantics. Set RAMSEYLB_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from .graph import Graph

if os.environ.get("RAMSEYLB_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND


def find_clique(g: Graph, k: int):
    return _impl.find_clique(g.n, list(g.masks()), k)


def find_cycle(g: Graph, length: int):
    return _impl.find_cycle(g.n, list(g.masks()), length)


def find_path(g: Graph, order: int):
    return _impl.find_path(g.n, list(g.masks()), order)


def find_k4me(g: Graph):
    return _impl.find_k4me(g.n, list(g.masks()))
