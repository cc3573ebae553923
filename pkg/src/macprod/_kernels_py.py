"""Pure-Python fallback for the f64 hot loops.

Same accumulation order as the compiled kernels (ascending index), so the two
implementations agree bit for bit on the same inputs.
"""

from __future__ import annotations


def conv_complex(a, b, out):
    av = a.tolist()
    bv = b.tolist()
    size = len(av)
    res = [0j] * size
    for n in range(size):
        acc = 0j
        for k in range(n + 1):
            acc = acc + av[k] * bv[n - k]
        res[n] = acc
    out[:] = res


def recurrence_steps(rows, u, n0):
    rv = rows.tolist()
    uv = u.tolist()
    width = len(rv[0]) if rv else 0
    for j, row in enumerate(rv):
        n = n0 + j
        acc = 0j
        for i in range(width):
            acc = acc + row[i] * uv[n - i]
        uv[n + 1] = acc
    u[:] = uv
