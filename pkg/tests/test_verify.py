from fractions import Fraction

import pytest

from macprod.families import CatalogueError
from macprod.numerics import ParameterDomainError
from macprod.verify import (
    BenchReport,
    bench,
    compare_formulations,
    compare_oracle,
    sweep,
)


class TestCompareOracle:
    def test_exact_pass_has_zero_deviation(self):
        rep = compare_oracle("exp-M", {"a": 1, "c": 2, "p": 1}, 40, "exact")
        assert rep.verdict == "pass"
        assert rep.first_mismatch is None
        assert rep.max_abs == 0.0
        assert rep.N == 40
        assert rep.backend == "exact"

    def test_c_two_rejected_for_c2_families(self):
        with pytest.raises(ParameterDomainError, match="c-2|c = 2"):
            compare_oracle("sin-M", {"a": Fraction(1, 2), "c": 2, "p": 1}, 10, "exact")

    def test_elliptic_exact_pass_with_pi(self):
        rep = compare_oracle("exp-K", {"p": 1}, 40, "exact")
        assert rep.verdict == "pass"

    def test_f64_report_metric(self):
        rep = compare_oracle("exp-F", {"a": 0.5, "b": 0.25, "c": 1.5, "p": 1.0}, 48, "f64")
        assert rep.verdict == "pass"
        assert rep.max_rel <= 1e-10

    def test_zero_oracle_entries_use_absolute_bound(self):
        # sin stream has u_0 = 0; the metric must stay finite there
        rep = compare_oracle(
            "sin-M-combo", {"a": 0.0, "c": 1.0, "p": 1.0}, 32, "f64"
        )
        assert rep.verdict == "pass"


class TestCompareFormulations:
    def test_combo_vs_single(self):
        rep = compare_formulations(
            "combo-vs-single",
            "sin-F-combo",
            {"a": 1, "b": Fraction(1, 3), "c": Fraction(5, 4), "p": 1},
            40,
            "exact",
        )
        assert rep.verdict == "pass"
        assert rep.comparison == "combo-vs-single"

    def test_combo_vs_single_trivial_at_zero_p(self):
        rep = compare_formulations(
            "combo-vs-single", "sinh-M-combo", {"a": 1, "c": 3, "p": 0}, 24, "exact"
        )
        assert rep.verdict == "pass"

    def test_elliptic_vs_specialized(self):
        rep = compare_formulations(
            "elliptic-vs-specialized-F", "exp-K", {"p": 1}, 40, "exact"
        )
        assert rep.verdict == "pass"

    def test_illegal_pairing(self):
        with pytest.raises(CatalogueError):
            compare_formulations("combo-vs-single", "exp-M", {"a": 1, "c": 2, "p": 1}, 10)
        with pytest.raises(CatalogueError):
            compare_formulations("elliptic-vs-specialized-F", "exp-M", {"a": 1, "c": 2, "p": 1}, 10)
        with pytest.raises(CatalogueError):
            compare_formulations("something-else", "exp-K", {"p": 1}, 10)


class TestSweep:
    def test_reproducible(self):
        first = sweep(1, 1, 12, "exact", families=["exp-M", "exp-F", "binom-K"])
        second = sweep(1, 1, 12, "exact", families=["exp-M", "exp-F", "binom-K"])
        assert first == second

    def test_catalogue_order_and_counts(self):
        reports = sweep(5, 2, 8, "exact", families=["exp-M", "exp-K"])
        assert [r.family for r in reports] == ["exp-M", "exp-M", "exp-K", "exp-K"]

    def test_exact_low_order_all_pass(self):
        reports = sweep(
            2,
            3,
            24,
            "exact",
            families=["exp-M", "sin-M-combo", "binom-M", "exp-F", "arctanexp-F", "cosh-E"],
        )
        assert all(r.passed for r in reports)

    def test_failures_are_reports_not_exceptions(self):
        reports = sweep(3, 1, 16, "exact")
        assert len(reports) == 38
        for rep in reports:
            assert rep.verdict in ("pass", "fail")

    def test_draws_respect_family_domains(self):
        # excluded c values never appear, even over many trials
        reports = sweep(7, 40, 2, "exact", families=["sin-M"])
        for rep in reports:
            c = dict(rep.params)["c"]
            assert c != "2"


class TestBench:
    def test_oracle_superlinear_recurrence_linear(self):
        params = {"a": 0.5, "b": 1 / 3, "c": 1.25, "p": 1.0}
        times = {N: bench("exp-F", params, N, repetitions=3) for N in (1024, 8192)}
        # 8x the size: the O(N^2) path must grow clearly superlinearly...
        assert times[8192].oracle_time / times[1024].oracle_time > 8
        # ...while the recurrence path stays close to linear
        assert times[8192].recurrence_time / times[1024].recurrence_time < 8 * 2.5

    def test_smoke(self):
        rep = bench("exp-M", {"a": 0.5, "c": 1.5, "p": 1.0}, 16, repetitions=2)
        assert isinstance(rep, BenchReport)
        assert rep.ratio > 0
        assert rep.recurrence_time > 0
        assert rep.oracle_time > 0
        assert rep.N == 16

    def test_report_dict_round_trip(self):
        rep = bench("exp-F", {"a": 0.5, "b": 0.25, "c": 1.5, "p": 1.0}, 16, repetitions=1)
        d = rep.to_dict()
        assert set(d) == {
            "family",
            "N",
            "repetitions",
            "recurrence_time",
            "oracle_time",
            "ratio",
        }
