"""f64 hot-loop dispatch: compiled extension when available, Python otherwise.

Set ``MACPROD_PURE=1`` before import to force the pure-Python implementation
(used by the kernel parity tests and the backend comparison benchmark).
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("MACPROD_PURE") == "1":
    from . import _kernels_py as _impl

    COMPILED = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from . import _kernels_py as _impl

        COMPILED = False


def implementation_name() -> str:
    return "compiled" if COMPILED else "python"


def convolve(a, b, impl=None) -> np.ndarray:
    """Truncated Cauchy product of two equal-length complex128 arrays."""
    a = np.ascontiguousarray(a, dtype=np.complex128)
    b = np.ascontiguousarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError("convolve operands must share one length")
    out = np.empty_like(a)
    (impl or _impl).conv_complex(a, b, out)
    return out


def recurrence_steps(rows, u, n0: int, impl=None) -> None:
    """Advance u in place: u[n+1] = sum_i rows[n - n0, i] * u[n-i]."""
    rows = np.ascontiguousarray(rows, dtype=np.complex128)
    if rows.shape[0] != len(u) - 1 - n0:
        raise ValueError("row count must cover exactly the steps n0..N-1")
    (impl or _impl).recurrence_steps(rows, u, n0)


def implementations():
    """Both implementations keyed by name (for parity tests and benchmarks)."""
    from . import _kernels_py

    table = {"python": _kernels_py}
    if COMPILED:
        table["compiled"] = _impl
    else:
        try:
            from . import _kernels  # type: ignore[attr-defined]

            table["compiled"] = _kernels
        except ImportError:
            pass
    return table
