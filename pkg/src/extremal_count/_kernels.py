"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set EXTREMAL_COUNT_FORCE_PYTHON=1 to force the pure-Python kernels even when
the extension is built (used by the benchmark and the equivalence tests).
Both backends produce bit-identical results; the compiled one is limited to
hosts with at most 64 vertices and counts below 2**63, which the callers
check before dispatching.
"""

from __future__ import annotations

import os

from . import _pykernels as pure

if os.environ.get("EXTREMAL_COUNT_FORCE_PYTHON"):
    fast = None
else:
    try:
        from . import _fastkernels as fast
    except ImportError:
        fast = None

HAS_FAST = fast is not None
BACKEND = "compiled" if HAS_FAST else "python"

# staircase mask helpers are backend-independent
mask_from_rows = pure.mask_from_rows
rows_from_mask = pure.rows_from_mask


def falling_factorial(n: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= n - i
    return out


def count_injective(host_rows, n_host: int, parents, first_mask=None) -> int:
    m = len(parents)
    if (HAS_FAST and n_host <= 64
            and falling_factorial(n_host, m) < 2 ** 63):
        return fast.count_injective(list(host_rows), n_host, parents,
                                    -1 if first_mask is None else first_mask)
    return pure.count_injective(host_rows, n_host, parents, first_mask)


def canonical_mask(rows, n: int) -> int:
    if HAS_FAST and n <= 16:
        return fast.canonical_mask(list(rows), n)
    return pure.canonical_mask(rows, n)


def is_min_canonical(rows, n: int) -> bool:
    if HAS_FAST and n <= 16:
        return fast.is_min_canonical(list(rows), n)
    return pure.is_min_canonical(rows, n)


def triangle_free_canonical_masks(n: int, prefix_len: int = 0,
                                  prefix_val: int = 0) -> list[int]:
    if HAS_FAST:
        return fast.triangle_free_canonical_masks(n, prefix_len, prefix_val)
    return pure.triangle_free_canonical_masks(n, prefix_len, prefix_val)


def supports_prefix_partition() -> bool:
    return HAS_FAST
