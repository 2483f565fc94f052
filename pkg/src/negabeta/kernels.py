"""Backend selection for the hot enumeration kernel.

The compiled ``_core`` extension is used when it imports and
``NEGABETA_PURE`` is not set to ``1``; otherwise ``_pycore`` runs.
"""

import os

from . import _pycore

try:
    if os.environ.get("NEGABETA_PURE") == "1":
        raise ImportError("pure Python requested")
    from . import _core
except ImportError:
    _core = None

BACKEND = "cython" if _core is not None else "python"

# keeps 64-bit cross products in the compiled kernel far from overflow
_MAX_COMPILED_CELLS = 10 ** 8


def integer_patterns(N: int, n: int, backend: str = None) -> set:
    """Rank tuples of every length-n pattern of x -> 1 - {Nx}."""
    backend = backend or BACKEND
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython":
        if _core is None:
            raise RuntimeError("compiled backend not available")
        if n <= 15 and N ** max(n - 1, 0) <= _MAX_COMPILED_CELLS:
            return _core.integer_patterns(N, n)
    return _pycore.integer_patterns(N, n)
