"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``SUPERCM_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("SUPERCM_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import (  # noqa: F401
        koszul_exponent, merge_even, merge_odd, mono_mul, poly_mul, sort_odd, tensor2_mul)
else:
    try:
        from ._ckernels import (  # noqa: F401
            koszul_exponent, merge_even, merge_odd, mono_mul, poly_mul, sort_odd, tensor2_mul)
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            koszul_exponent, merge_even, merge_odd, mono_mul, poly_mul, sort_odd, tensor2_mul)
