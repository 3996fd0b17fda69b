"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``CHARHOPF_PURE=1`` in the environment to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("CHARHOPF_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

is_lyndon = _impl.is_lyndon
min_suffix_start = _impl.min_suffix_start
lyndon_words = _impl.lyndon_words
poly_mul = _impl.poly_mul
cyc_mul = _impl.cyc_mul

__all__ = ["BACKEND", "is_lyndon", "min_suffix_start", "lyndon_words", "poly_mul", "cyc_mul"]
