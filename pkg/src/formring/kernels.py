"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``FORMRING_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("FORMRING_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

eval_poly = _impl.eval_poly
eval_poly_table = _impl.eval_poly_table
matmul_int = _impl.matmul_int
assoc_defects_int = _impl.assoc_defects_int
module_defects_int = _impl.module_defects_int
