"""Kernel selection.

The compiled extension is used when it imports and the graph fits in one
64-bit word; everything else runs on the pure-Python kernels.  Setting
``RAMSEY_WITNESS_PURE=1`` in the environment forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

WORD = 64

try:
    if os.environ.get("RAMSEY_WITNESS_PURE"):
        raise ImportError("pure-Python kernels forced")
    from . import _kernels as _c
except ImportError:
    _c = None

COMPILED = _c is not None


def _pick(n: int):
    return _c if _c is not None and n <= WORD else _py


def reach_mask(adj, start, allowed):
    return _pick(len(adj)).reach_mask(adj, start, allowed)


def articulation_mask(adj, n, alive):
    return _pick(n).articulation_mask(adj, n, alive)


def clique_search(adj, n, k, cand):
    return _pick(n).clique_search(adj, n, k, cand)


def max_induced_matching(adj, n, alive):
    return _pick(n).max_induced_matching(adj, n, alive)


def induced_embedding(hadj, hn, padj, pn):
    return _pick(max(hn, pn)).induced_embedding(hadj, hn, padj, pn)
