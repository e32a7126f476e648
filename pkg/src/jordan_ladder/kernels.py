"""Select the sparse-polynomial kernel backend.

The compiled extension is used when it was built; set
``JORDAN_LADDER_PURE=1`` to force the pure-Python fallback.
"""
import os

BACKEND = "python"

if not os.environ.get("JORDAN_LADDER_PURE"):
    try:
        from ._ckernels import (poly_add, poly_addmul, poly_mul, poly_mul_term,
                                poly_scale, poly_sub)
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernels_py import (poly_add, poly_addmul, poly_mul, poly_mul_term,  # noqa: F401
                              poly_scale, poly_sub)

__all__ = ["BACKEND", "poly_add", "poly_sub", "poly_scale", "poly_mul_term",
           "poly_mul", "poly_addmul"]
