"""Scalar hot kernels, compiled when available.

The compiled module is preferred; set ``P1STAB_KERNELS=python`` to force the
pure-Python fallback (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("P1STAB_KERNELS", "").lower() == "python":
    from ._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        BACKEND = "python"

from ._pykernels import BOUNDARY, INTERIOR, OUTSIDE  # noqa: E402,F401
