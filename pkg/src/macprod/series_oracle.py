"""Ground-truth coefficient streams built by direct series arithmetic.

Everything here is computed straight from defining series and convolution,
never from the recurrence tables in :mod:`macprod.families`, so these streams
can referee those tables.

The inverse-tangent exponential series is generated from the first-order ODE
it satisfies, (1 + z^2) f'(z) = -p f(z), which gives the two-term relation
f[n+1] = (-p*f[n] - (n-1)*f[n-1]) / (n+1); this is independent of the
five-term product recurrences it is later used to check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .numerics import (
    EXACT,
    NonFiniteError,
    ParameterDomainError,
    get_backend,
    infer_backend,
    is_nonpositive_integer,
)

ELEMENTARY_KINDS = (
    "exp",
    "sin",
    "cos",
    "sinh",
    "cosh",
    "arcsin",
    "arccos",
    "binom",
    "exp_arctan",
)

#: kinds whose only parameter is p
_P_ONLY = frozenset(k for k in ELEMENTARY_KINDS if k != "binom")


@dataclass(frozen=True)
class Elementary:
    """A parameterised elementary factor h(z)."""

    kind: str
    p: object = None
    theta: object = None

    def __post_init__(self):
        if self.kind not in ELEMENTARY_KINDS:
            raise ParameterDomainError(f"unknown elementary kind {self.kind!r}")
        if self.p is None:
            raise ParameterDomainError(f"{self.kind} requires parameter p")
        if self.kind == "binom":
            if self.theta is None:
                raise ParameterDomainError("binom requires parameter theta")
        elif self.theta is not None:
            raise ParameterDomainError(f"{self.kind} takes no theta parameter")


@dataclass(frozen=True)
class CoeffStream:
    """A finite prefix u_0..u_N of a Maclaurin coefficient sequence."""

    coeffs: tuple
    base: str  # "M" | "F" | "K" | "E" | "elementary" | "product"
    provenance: str  # "oracle" | "recurrence"
    backend: str  # "exact" | "f64"
    params: tuple = field(default=())

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a coefficient stream holds at least u_0")

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    @property
    def last_index(self) -> int:
        return len(self.coeffs) - 1


def _check_c(c):
    if is_nonpositive_integer(c):
        raise ParameterDomainError(
            "parameter c must not be zero or a negative integer"
        )


def _finite_or_raise(values, what: str):
    for n, v in enumerate(values):
        if isinstance(v, complex) and not cmath.isfinite(v):
            raise NonFiniteError(f"{what} produced a non-finite entry at n={n}", index=n)


def kummer_series(a, c, N: int, backend=None) -> CoeffStream:
    """Coefficients of the confluent series: entry n is (a)_n / ((c)_n n!)."""
    bk = get_backend(backend) if backend is not None else infer_backend(a, c)
    _check_c(c)
    a = bk.coerce(a)
    c = bk.coerce(c)
    term = bk.one()
    out = [term]
    for n in range(N):
        term = term * (a + n) / ((c + n) * (n + 1))
        out.append(term)
    if bk is not EXACT:
        _finite_or_raise(out, "kummer_series")
    return CoeffStream(tuple(out), "M", "oracle", bk.name)


def gauss_series(a, b, c, N: int, backend=None) -> CoeffStream:
    """Coefficients of the Gauss series: entry n is (a)_n (b)_n / ((c)_n n!)."""
    bk = get_backend(backend) if backend is not None else infer_backend(a, b, c)
    _check_c(c)
    a = bk.coerce(a)
    b = bk.coerce(b)
    c = bk.coerce(c)
    term = bk.one()
    out = [term]
    for n in range(N):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1))
        out.append(term)
    if bk is not EXACT:
        _finite_or_raise(out, "gauss_series")
    return CoeffStream(tuple(out), "F", "oracle", bk.name)


def elementary_series(h: Elementary, N: int, backend=None) -> CoeffStream:
    """Maclaurin coefficients of the elementary factor h(z) through z^N."""
    bk = get_backend(backend) if backend is not None else infer_backend(h.p, h.theta)
    p = bk.coerce(h.p)
    zero = bk.zero()
    kind = h.kind

    if kind == "exp":
        term = bk.one()
        out = [term]
        for n in range(1, N + 1):
            term = term * p / n
            out.append(term)
    elif kind in ("sin", "sinh"):
        sign = -1 if kind == "sin" else 1
        out = [zero] * (N + 1)
        if N >= 1:
            term = p
            out[1] = term
            for n in range(3, N + 1, 2):
                term = term * p * p * sign / ((n - 1) * n)
                out[n] = term
    elif kind in ("cos", "cosh"):
        sign = -1 if kind == "cos" else 1
        out = [zero] * (N + 1)
        term = bk.one()
        out[0] = term
        for n in range(2, N + 1, 2):
            term = term * p * p * sign / ((n - 1) * n)
            out[n] = term
    elif kind == "binom":
        theta = bk.coerce(h.theta)
        term = bk.one()
        out = [term]
        for n in range(N):
            term = term * (-theta) * (p - n) / (n + 1)
            out.append(term)
    elif kind == "arcsin":
        # entry 2k+1 is (2k)! p^(2k+1) / (4^k (k!)^2 (2k+1))
        out = [zero] * (N + 1)
        if N >= 1:
            term = p
            out[1] = term
            for n in range(3, N + 1, 2):
                k2 = n - 1  # = 2k
                term = term * p * p * (k2 - 1) * (k2 - 1) / (k2 * (k2 + 1))
                out[n] = term
    elif kind == "arccos":
        inner = elementary_series(Elementary("arcsin", p=h.p), N, bk)
        out = [-v for v in inner.coeffs]
        out[0] = bk.half_pi() + out[0]
    elif kind == "exp_arctan":
        out = [bk.one()]
        if N >= 1:
            out.append(-p)
        for n in range(1, N):
            out.append((-p * out[n] - (n - 1) * out[n - 1]) / (n + 1))
    else:  # pragma: no cover - guarded by Elementary validation
        raise ParameterDomainError(f"unknown elementary kind {kind!r}")

    if bk is not EXACT:
        _finite_or_raise(out, f"elementary_series({kind})")
    return CoeffStream(tuple(out), "elementary", "oracle", bk.name)


def cauchy_product(A: CoeffStream, B: CoeffStream) -> CoeffStream:
    """Entrywise convolution: entry n is sum_{k<=n} A_k B_{n-k}."""
    if A.backend != B.backend:
        raise ValueError(
            f"cauchy_product backends differ: {A.backend} vs {B.backend}"
        )
    if len(A) != len(B):
        raise ValueError("cauchy_product operands must share one length")
    if A.backend == "f64":
        out = kernels.convolve(A.coeffs, B.coeffs)
        coeffs = tuple(out.tolist())
        _finite_or_raise(coeffs, "cauchy_product")
    else:
        av, bv = A.coeffs, B.coeffs
        coeffs = tuple(
            sum((av[k] * bv[n - k] for k in range(1, n + 1)), av[0] * bv[n])
            for n in range(len(av))
        )
    return CoeffStream(coeffs, "product", "oracle", A.backend)


def scale_stream(A: CoeffStream, s) -> CoeffStream:
    """Multiply every entry by the scalar s (backend of the entries)."""
    coeffs = tuple(s * v for v in A.coeffs)
    if A.backend == "f64":
        _finite_or_raise(coeffs, "scale_stream")
    return CoeffStream(coeffs, A.base, A.provenance, A.backend, A.params)


def unit_stream(N: int, backend="exact") -> CoeffStream:
    """The multiplicative identity (1, 0, 0, ...) for convolution."""
    bk = get_backend(backend)
    coeffs = (bk.one(),) + (bk.zero(),) * N
    return CoeffStream(coeffs, "elementary", "oracle", bk.name)


def hyper_base_series(base: str, N: int, backend="exact", a=None, b=None, c=None) -> CoeffStream:
    """Oracle stream of the bare special-function factor.

    M and F take their parameters from the caller; the elliptic bases fix
    them, since K(sqrt z) = (pi/2) F(1/2,1/2;1;z) and
    E(sqrt z) = (pi/2) F(-1/2,1/2;1;z).
    """
    bk = get_backend(backend)
    if base == "M":
        return kummer_series(a, c, N, bk)
    if base == "F":
        return gauss_series(a, b, c, N, bk)
    if base in ("K", "E"):
        if bk is EXACT:
            half = Fraction(1, 2)
            aa = half if base == "K" else -half
            inner = gauss_series(aa, half, 1, N, bk)
        else:
            aa = 0.5 if base == "K" else -0.5
            inner = gauss_series(complex(aa), complex(0.5), complex(1.0), N, bk)
        stream = scale_stream(inner, bk.half_pi())
        return CoeffStream(stream.coeffs, base, "oracle", bk.name)
    raise ParameterDomainError(f"unknown base {base!r}")
