"""Kernel dispatch: compiled extension when importable, numpy fallback otherwise.

Set ``KOSZULKIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("KOSZULKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

rref_modp = _impl.rref_modp
scan_multiples = _impl.scan_multiples
min_rank_pencil = _impl.min_rank_pencil
projective_points = _pykernels.projective_points
