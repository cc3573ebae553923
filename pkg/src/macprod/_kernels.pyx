# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops for the f64 backend.

Both kernels accumulate in ascending index order so results are
bit-compatible with the pure-Python fallback.
"""


def conv_complex(double complex[::1] a, double complex[::1] b,
                 double complex[::1] out):
    """out[n] = sum_{k<=n} a[k] * b[n-k]; all three views share one length."""
    cdef Py_ssize_t n, k, size = a.shape[0]
    cdef double complex acc
    for n in range(size):
        acc = 0
        for k in range(n + 1):
            acc = acc + a[k] * b[n - k]
        out[n] = acc


def recurrence_steps(double complex[:, ::1] rows, double complex[::1] u,
                     Py_ssize_t n0):
    """Fill u[n0+1:] via u[n+1] = sum_i rows[n-n0, i] * u[n-i]."""
    cdef Py_ssize_t n, i, width = rows.shape[1], last = n0 + rows.shape[0]
    cdef double complex acc
    for n in range(n0, last):
        acc = 0
        for i in range(width):
            acc = acc + rows[n - n0, i] * u[n - i]
        u[n + 1] = acc
