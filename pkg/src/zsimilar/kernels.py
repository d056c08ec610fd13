"""Select the compiled kernels when available, else the pure-Python twins.

Set ZSIMILAR_PURE=1 to force the pure implementation (used by the
benchmark and by tests that compare the two).
"""

import os

if os.environ.get("ZSIMILAR_PURE") == "1":
    from zsimilar._kernels_py import IMPL, dot, mat_mul_int, row_addmul, row_combine, row_mod
else:
    try:
        from zsimilar._kernels_cy import IMPL, dot, mat_mul_int, row_addmul, row_combine, row_mod
    except ImportError:
        from zsimilar._kernels_py import IMPL, dot, mat_mul_int, row_addmul, row_combine, row_mod

__all__ = ["IMPL", "row_addmul", "row_combine", "row_mod", "dot", "mat_mul_int"]
