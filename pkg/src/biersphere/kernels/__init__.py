"""Kernel backend selection.

The per-complex primitives that dominate exhaustive runs have two
implementations: a Cython extension (``_ckernels``) and a pure-Python twin
(``_pykernels``).  The extension is used when importable and when the
arguments fit its compiled bounds; otherwise each call falls back to the
pure version.  Set ``BIERSPHERE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_ext = None
if not os.environ.get("BIERSPHERE_PURE"):
    try:
        from . import _ckernels as _ext  # type: ignore[attr-defined]
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"

# Compiled bounds; anything larger routes to the pure implementation.
_EXT_MAX_GROUND = 20
_EXT_MAX_VERTICES = 32
_EXT_MAX_ORACLE_VERTICES = 16
_EXT_MAX_HOLE_VERTICES = 16


def face_counts(facets, m):
    if _ext is not None and m <= _EXT_MAX_GROUND:
        return _ext.face_counts(list(facets), m)
    return _pykernels.face_counts(facets, m)


def is_pure_pseudomanifold(facets, k):
    if _ext is not None and k <= _EXT_MAX_VERTICES:
        return _ext.is_pure_pseudomanifold(list(facets), k)
    return _pykernels.is_pure_pseudomanifold(facets, k)


def dsatur_chromatic(adj):
    if _ext is not None and len(adj) <= _EXT_MAX_VERTICES:
        return _ext.dsatur_chromatic(list(adj))
    return _pykernels.dsatur_chromatic(adj)


def gfp_char_search(facets, n, d, p, budget):
    if _ext is not None and n <= _EXT_MAX_ORACLE_VERTICES and d <= 18:
        return _ext.gfp_char_search([tuple(f) for f in facets], n, d, p, budget)
    return _pykernels.gfp_char_search(facets, n, d, p, budget)


def find_hole(adj):
    if _ext is not None and len(adj) <= _EXT_MAX_HOLE_VERTICES:
        return _ext.find_hole(list(adj))
    return _pykernels.find_hole(adj)
