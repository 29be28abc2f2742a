"""Kernel backend selection.

The compiled Cython kernels are used when the extension was built; set
``QVERIFY_PURE_PYTHON=1`` to force the pure-Python implementations.
"""

import os

from . import _kernels_py

_force_py = os.environ.get("QVERIFY_PURE_PYTHON", "").strip() not in ("", "0")

if _force_py:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

mul_dense = _impl.mul_dense
mul_sparse = _impl.mul_sparse
div_sparse = _impl.div_sparse
reduce_mod = _impl.reduce_mod

__all__ = ["BACKEND", "mul_dense", "mul_sparse", "div_sparse", "reduce_mod"]
