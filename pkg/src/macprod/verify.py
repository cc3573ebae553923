"""Referee: recurrence output vs the convolution oracle, and path timings.

Exact-backend comparisons demand equality (the identities are algebraic, so
tolerance would only hide bugs); f64 comparisons use the relative metric
|x - y| / max(1, |y|) with the oracle value as y, which degrades to an
absolute bound where the oracle entry vanishes.

Every report computation is a pure function, so distinct (family, params)
reports may be computed concurrently; sweeps emit reports in deterministic
catalogue order regardless.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .families import (
    CatalogueError,
    Params,
    build,
    elementary_factor,
    get_family,
    list_families,
)
from .numerics import EXACT, NonFiniteError, approximate, get_backend
from .recurrence_core import ComboSpec, run, run_combo
from .series_oracle import cauchy_product, elementary_series, hyper_base_series, scale_stream

DEFAULT_TOLERANCE = 1e-8

#: combo-vs-single pairs and elliptic-vs-specialized-F pairs, by left id
_COMBO_PAIRS = {
    f"{h}-{base}-combo": f"{h}-{base}"
    for h in ("sin", "cos", "sinh", "cosh")
    for base in ("M", "F")
}
_ELLIPTIC_PAIRS = {
    f"{h}-{base}": f"{h}-F"
    for h in ("exp", "binom", "arctanexp", "sin", "cos", "sinh", "cosh")
    for base in ("K", "E")
}


@dataclass(frozen=True)
class DeviationReport:
    family: str
    params: tuple
    N: int
    backend: str
    max_abs: float
    max_rel: float
    first_mismatch: int | None
    verdict: str  # "pass" | "fail"
    comparison: str = "oracle"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": {k: v for k, v in self.params},
            "N": self.N,
            "backend": self.backend,
            "max_abs": self.max_abs,
            "max_rel": self.max_rel,
            "first_mismatch": self.first_mismatch,
            "verdict": self.verdict,
            "comparison": self.comparison,
        }


@dataclass(frozen=True)
class BenchReport:
    family: str
    N: int
    repetitions: int
    recurrence_time: float
    oracle_time: float

    @property
    def ratio(self) -> float:
        return self.oracle_time / self.recurrence_time

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "N": self.N,
            "repetitions": self.repetitions,
            "recurrence_time": self.recurrence_time,
            "oracle_time": self.oracle_time,
            "ratio": self.ratio,
        }


def _compare_streams(got, want, backend, tolerance, family, params, comparison):
    """Deviation report for stream ``got`` against reference ``want``."""
    bk = get_backend(backend)
    N = len(want) - 1
    max_abs = 0.0
    max_rel = 0.0
    first = None
    for n, (x, y) in enumerate(zip(got.coeffs, want.coeffs)):
        if bk is EXACT:
            mismatch = x != y
            if mismatch and first is None:
                first = n
            if mismatch:
                try:
                    dx = abs(approximate(x) - approximate(y))
                    max_rel = max(max_rel, dx / max(1.0, abs(approximate(y))))
                except NonFiniteError:
                    dx = float("inf")
                    max_rel = float("inf")
                max_abs = max(max_abs, dx)
        else:
            dx = abs(x - y)
            rel = dx / max(1.0, abs(y))
            max_abs = max(max_abs, dx)
            max_rel = max(max_rel, rel)
            if rel > tolerance and first is None:
                first = n
    if bk is EXACT:
        verdict = "pass" if first is None else "fail"
    else:
        verdict = "pass" if max_rel <= tolerance else "fail"
    return DeviationReport(
        family=family,
        params=params,
        N=N,
        backend=bk.name,
        max_abs=max_abs,
        max_rel=max_rel,
        first_mismatch=first,
        verdict=verdict,
        comparison=comparison,
    )


def oracle_stream(family_id: str, params: Params, N: int, backend="exact"):
    """Independent product stream: h-series convolved with the base series."""
    bk = get_backend(backend)
    info = get_family(family_id)
    h = elementary_series(elementary_factor(info, params), N, bk)
    base = hyper_base_series(info.base, N, bk, a=params.a, b=params.b, c=params.c)
    return cauchy_product(h, base)


def recurrence_stream(family_id: str, params: Params, N: int, backend="exact"):
    spec = build(family_id, params, backend)
    if isinstance(spec, ComboSpec):
        return run_combo(spec, N)
    return run(spec, N)


def _snapshot(params: Params, bk):
    return tuple((k, bk.format(getattr(params, k))) for k in params.present())


def compare_oracle(
    family_id: str,
    params,
    N: int,
    backend="exact",
    tolerance: float = DEFAULT_TOLERANCE,
) -> DeviationReport:
    """Run one family and compare it entrywise against the convolution oracle."""
    bk = get_backend(backend)
    spec = build(family_id, params, bk)  # validates params
    pp = _conform_params(params, bk)
    got = run_combo(spec, N) if isinstance(spec, ComboSpec) else run(spec, N)
    want = oracle_stream(family_id, pp, N, bk)
    return _compare_streams(
        got, want, bk, tolerance, family_id, _snapshot(pp, bk), "oracle"
    )


def _conform_params(params, bk) -> Params:
    if isinstance(params, dict):
        params = Params(**params)
    return Params(
        **{
            name: (None if getattr(params, name) is None else bk.coerce(getattr(params, name)))
            for name in ("a", "b", "c", "p", "theta")
        }
    )


def compare_formulations(
    pairing: str,
    family_id: str,
    params,
    N: int,
    backend="exact",
    tolerance: float = DEFAULT_TOLERANCE,
) -> DeviationReport:
    """Compare two formulations of the same product.

    ``combo-vs-single`` pairs a combo id with its single-recurrence id;
    ``elliptic-vs-specialized-F`` pairs an elliptic id with pi/2 times the
    matching F family at the fixed elliptic parameters.
    """
    bk = get_backend(backend)
    if pairing == "combo-vs-single":
        try:
            other = _COMBO_PAIRS[family_id]
        except KeyError:
            raise CatalogueError(
                f"{family_id!r} has no combo-vs-single pairing"
            ) from None
        pp = _conform_params(params, bk)
        got = recurrence_stream(family_id, pp, N, bk)
        want = recurrence_stream(other, pp, N, bk)
    elif pairing == "elliptic-vs-specialized-F":
        try:
            other = _ELLIPTIC_PAIRS[family_id]
        except KeyError:
            raise CatalogueError(
                f"{family_id!r} has no elliptic-vs-specialized-F pairing"
            ) from None
        info = get_family(family_id)
        pp = _conform_params(params, bk)
        got = recurrence_stream(family_id, pp, N, bk)
        two = bk.coerce(2)
        half = bk.one() / two
        f_params = Params(
            a=(half if info.base == "K" else -half),
            b=half,
            c=bk.one(),
            p=pp.p,
            theta=pp.theta,
        )
        f_stream = recurrence_stream(other, f_params, N, bk)
        want = scale_stream(f_stream, bk.half_pi())
    else:
        raise CatalogueError(f"unknown pairing {pairing!r}")
    return _compare_streams(
        got, want, bk, tolerance, family_id, _snapshot(pp, bk), pairing
    )


def bench(family_id: str, params, N: int, repetitions: int = 3) -> BenchReport:
    """Wall-time the recurrence path against the O(N^2) oracle path (f64)."""
    bk = get_backend("f64")
    pp = _conform_params(params, bk)
    build(family_id, pp, bk)  # validate before timing
    rec_best = float("inf")
    ora_best = float("inf")
    for _ in range(max(1, repetitions)):
        t0 = time.perf_counter()
        recurrence_stream(family_id, pp, N, bk)
        rec_best = min(rec_best, time.perf_counter() - t0)
        t0 = time.perf_counter()
        oracle_stream(family_id, pp, N, bk)
        ora_best = min(ora_best, time.perf_counter() - t0)
    return BenchReport(
        family=family_id,
        N=N,
        repetitions=max(1, repetitions),
        recurrence_time=rec_best,
        oracle_time=ora_best,
    )


# ---------------------------------------------------------------------------
# deterministic random sweeps
# ---------------------------------------------------------------------------


def _draw_fraction(rng: Random, max_den: int = 12, max_num: int = 12) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(-max_num, max_num)
    return Fraction(num, den)


def _draw_bounded(rng: Random, bound: int = 2) -> Fraction:
    # |value| <= bound with numerator and denominator both <= 12
    den = rng.randint(1, 12)
    num = rng.randint(-min(12, bound * den), min(12, bound * den))
    return Fraction(num, den)


def draw_params(info, rng: Random) -> Params:
    """One valid exact parameter draw for a family."""
    fields = {}
    for name in info.param_names:
        if name == "c":
            while True:
                c = _draw_fraction(rng)
                if c.denominator == 1 and c <= 0:
                    continue
                if info.c_excludes_2 and c == 2:
                    continue
                fields["c"] = c
                break
        elif name in ("p", "theta"):
            fields[name] = _draw_bounded(rng, 2)
        else:
            fields[name] = _draw_fraction(rng)
    return Params(**fields)


def sweep(
    seed: int,
    trials: int,
    N: int,
    backend="exact",
    tolerance: float = DEFAULT_TOLERANCE,
    families=None,
):
    """Deterministic random verification across the catalogue.

    Returns one report per (family, trial), in catalogue order.  Failures are
    reports with verdict "fail", never exceptions.
    """
    bk = get_backend(backend)
    rng = Random(seed)
    infos = list_families() if families is None else [get_family(f) for f in families]
    reports = []
    for info in infos:
        for _ in range(trials):
            exact_params = draw_params(info, rng)
            if bk is EXACT:
                params = exact_params
            else:
                params = Params(
                    **{
                        k: (None if getattr(exact_params, k) is None
                            else approximate(getattr(exact_params, k)))
                        for k in ("a", "b", "c", "p", "theta")
                    }
                )
            reports.append(compare_oracle(info.id, params, N, bk, tolerance))
    return reports
