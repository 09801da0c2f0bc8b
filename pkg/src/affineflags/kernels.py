"""Kernel selection: compiled speedups when available, pure Python otherwise.

Set ``AFFINEFLAGS_PURE=1`` in the environment to force the pure kernels
(useful for benchmarking and for debugging the compiled twin).
"""

import os

from . import _purekernels

pure = _purekernels

try:
    from . import _speedups as compiled
except ImportError:
    compiled = None

if compiled is not None and os.environ.get("AFFINEFLAGS_PURE") != "1":
    active = compiled
    BACKEND = "compiled"
else:
    active = pure
    BACKEND = "pure"

mat_mul = active.mat_mul
mat_vec = active.mat_vec
is_negative_root = active.is_negative_root
lowest_descent = active.lowest_descent
