"""Command-line surface: coefficient tables, point evaluation, verification
sweeps, benchmarks, and the family catalogue.

Standard output carries data only (JSON, CSV, or plain scalars); every
diagnostic goes to standard error.  Exit codes: 0 success, 1 verification
finding, 2 validation or parse failure, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .families import (
    CatalogueError,
    Params,
    build,
    get_family,
    list_families,
)
from .numerics import (
    BackendMismatchError,
    GaussianRational,
    NonFiniteError,
    ParameterDomainError,
    ParseError,
    PiLinear,
    SingularIndexError,
    format_scalar,
    get_backend,
)
from .recurrence_core import ComboSpec, run, run_combo

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

_PARAM_FLAGS = ("a", "b", "c", "p", "theta")


def _add_param_flags(sub):
    for name in _PARAM_FLAGS:
        sub.add_argument(f"--{name}", default=None, metavar="SCALAR")


def _parse_params(args, bk) -> Params:
    fields = {}
    for name in _PARAM_FLAGS:
        raw = getattr(args, name)
        fields[name] = None if raw is None else bk.parse(raw)
    return Params(**fields)


def _run_family(family_id, params, bk):
    spec = build(family_id, params, bk)
    return spec


def _stream(spec, N):
    if isinstance(spec, ComboSpec):
        return run_combo(spec, N)
    return run(spec, N)


def _decompose_exact(value):
    if isinstance(value, PiLinear):
        q0, q1 = value.q0, value.q1
    elif isinstance(value, GaussianRational):
        q0, q1 = value, GaussianRational(0)
    else:
        q0, q1 = GaussianRational(Fraction(value)), GaussianRational(0)
    return str(q0.re), str(q0.im), str(q1.re), str(q1.im)


def _coeff_records(coeffs, backend_name):
    records = []
    for n, v in enumerate(coeffs):
        if backend_name == "exact":
            re_s, im_s, pre, pim = _decompose_exact(v)
            records.append({"n": n, "re": re_s, "im": im_s, "pi_re": pre, "pi_im": pim})
        else:
            z = complex(v)
            records.append({"n": n, "re": z.real, "im": z.imag})
    return records


def emit_json(doc) -> str:
    """Canonical one-line JSON (sorted keys, no spaces); byte-stable on round-trip."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_coeffs(args) -> int:
    bk = get_backend(args.backend)
    info = get_family(args.family)
    if args.normalized and info.base not in ("K", "E"):
        raise ParameterDomainError(
            "--normalized applies only to the K and E families"
        )
    if args.count < 1:
        raise ParameterDomainError("--count must be at least 1")
    params = _parse_params(args, bk)
    spec = _run_family(args.family, params, bk)
    stream = _stream(spec, args.count - 1)
    if args.normalized:
        half_pi = bk.half_pi()
        coeffs = tuple(v / half_pi for v in stream.coeffs)
    else:
        coeffs = stream.coeffs
    records = _coeff_records(coeffs, bk.name)
    if args.format == "json":
        doc = {
            "family": info.id,
            "base": info.base,
            "params": {k: v for k, v in _snapshot(params, bk)},
            "backend": bk.name,
            "normalized": bool(args.normalized),
            "coeffs": records,
        }
        sys.stdout.write(emit_json(doc))
    else:
        cols = ["n", "re", "im"] + (["pi_re", "pi_im"] if bk.name == "exact" else [])
        lines = [",".join(cols)]
        for rec in records:
            lines.append(",".join(repr(rec[c]) if isinstance(rec[c], float) else str(rec[c]) for c in cols))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _snapshot(params: Params, bk):
    return tuple((k, bk.format(getattr(params, k))) for k in params.present())


def _numeric_radius(info, params, bk) -> float:
    if info.radius == "entire":
        return float("inf")
    if info.radius == "1":
        return 1.0
    theta = params.theta
    t = abs(complex(theta)) if not isinstance(theta, (GaussianRational, PiLinear)) else abs(
        complex(float(theta.re), float(theta.im))
    )
    return float("inf") if t == 0 else 1.0 / t


def cmd_eval(args) -> int:
    bk = get_backend("f64")
    info = get_family(args.family)
    if args.count < 0:
        raise ParameterDomainError("--count must be nonnegative")
    params = _parse_params(args, bk)
    z = bk.parse(args.z)
    spec = _run_family(args.family, params, bk)
    stream = _stream(spec, args.count)
    radius = _numeric_radius(info, params, bk)
    if abs(z) >= radius:
        print(
            f"warning: |z| = {abs(z):.6g} is outside the stated disc "
            f"(radius {radius:.6g}); the truncated sum is still computed",
            file=sys.stderr,
        )
    acc = complex(0.0)
    for v in reversed(stream.coeffs):
        acc = acc * z + v
    if not cmath.isfinite(acc):
        raise NonFiniteError("evaluation overflowed")
    sys.stdout.write(format_scalar(acc) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    bk = get_backend(args.backend)
    explicit = [n for n in _PARAM_FLAGS if getattr(args, n) is not None]
    reports = []
    if args.family is not None and explicit:
        params = _parse_params(args, bk)
        reports.append(
            verify_mod.compare_oracle(
                args.family, params, args.count, bk, args.tolerance
            )
        )
    else:
        families = None if args.family is None else [args.family]
        reports = verify_mod.sweep(
            args.seed,
            args.trials,
            args.count,
            bk,
            args.tolerance,
            families=families,
        )
    failures = 0
    for rep in reports:
        sys.stdout.write(emit_json(rep.to_dict()))
        if not rep.passed:
            failures += 1
    print(
        f"{len(reports)} comparison(s), {failures} finding(s)",
        file=sys.stderr,
    )
    return EXIT_FINDING if failures else EXIT_OK


def cmd_bench(args) -> int:
    bk = get_backend("f64")
    defaults = {"a": 0.5, "b": 1 / 3, "c": 1.25, "p": 1.0, "theta": 0.5}
    info = get_family(args.family)
    fields = {}
    for name in info.param_names:
        raw = getattr(args, name)
        fields[name] = bk.parse(raw) if raw is not None else complex(defaults[name])
    report = verify_mod.bench(args.family, Params(**fields), args.count, args.reps)
    sys.stdout.write(emit_json(report.to_dict()))
    return EXIT_OK


def cmd_list(args) -> int:
    rows = []
    for info in list_families():
        rows.append(
            (
                info.id,
                info.base,
                info.h,
                info.formulation,
                f"k={info.order}",
                f"n0={info.start}",
                info.radius,
                ",".join(info.param_names),
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        sys.stdout.write(
            "  ".join(field.ljust(w) for field, w in zip(r, widths)).rstrip() + "\n"
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macprod",
        description=(
            "Maclaurin coefficients of elementary-times-hypergeometric products "
            "via linear recurrences, cross-checked against a convolution oracle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser("coeffs", help="emit a coefficient table")
    p_coeffs.add_argument("--family", required=True)
    p_coeffs.add_argument("--count", type=int, required=True, help="number of coefficients")
    p_coeffs.add_argument("--backend", choices=("exact", "f64"), default="exact")
    p_coeffs.add_argument("--format", choices=("json", "csv"), default="json")
    p_coeffs.add_argument(
        "--normalized",
        action="store_true",
        help="divide the K/E stream by pi/2 (elliptic families only)",
    )
    _add_param_flags(p_coeffs)
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_eval = sub.add_parser("eval", help="Horner-evaluate the truncated sum at z")
    p_eval.add_argument("--family", required=True)
    p_eval.add_argument("--z", required=True, metavar="SCALAR")
    p_eval.add_argument("--count", type=int, required=True, help="truncation degree N")
    _add_param_flags(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="compare recurrences against the oracle")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--trials", type=int, default=3)
    p_verify.add_argument("--count", type=int, default=40, help="highest index N")
    p_verify.add_argument("--backend", choices=("exact", "f64"), default="exact")
    p_verify.add_argument(
        "--tolerance", type=float, default=verify_mod.DEFAULT_TOLERANCE
    )
    p_verify.add_argument("--family", default=None)
    _add_param_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time the recurrence vs the oracle (f64)")
    p_bench.add_argument("--family", required=True)
    p_bench.add_argument("--count", type=int, required=True, help="highest index N")
    p_bench.add_argument("--reps", type=int, default=3)
    _add_param_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_list = sub.add_parser("list", help="print the family catalogue")
    p_list.set_defaults(func=cmd_list)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        ParseError,
        BackendMismatchError,
        ParameterDomainError,
        CatalogueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (SingularIndexError, NonFiniteError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
