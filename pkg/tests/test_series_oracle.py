from fractions import Fraction
from random import Random

import pytest

from macprod.numerics import EXACT, GaussianRational, ParameterDomainError
from macprod.series_oracle import (
    CoeffStream,
    Elementary,
    cauchy_product,
    elementary_series,
    gauss_series,
    hyper_base_series,
    kummer_series,
    scale_stream,
    unit_stream,
)

G = GaussianRational


def gr(num, den=1):
    return G(Fraction(num, den))


class TestKummer:
    def test_a_equals_c_is_exponential(self):
        s = kummer_series(gr(7, 3), gr(7, 3), 4)
        assert s.coeffs == (gr(1), gr(1), gr(1, 2), gr(1, 6), gr(1, 24))

    def test_entry_two(self):
        s = kummer_series(gr(1), gr(2), 4)
        assert s[2] == gr(1, 6)

    def test_zero_a_truncates(self):
        s = kummer_series(gr(0), gr(5, 2), 3)
        assert s.coeffs == (gr(1), gr(0), gr(0), gr(0))

    def test_invalid_c(self):
        with pytest.raises(ParameterDomainError):
            kummer_series(gr(1), gr(-3), 4)
        with pytest.raises(ParameterDomainError):
            kummer_series(gr(1), gr(0), 4)


class TestGauss:
    def test_geometric(self):
        s = gauss_series(gr(1), gr(1), gr(1), 3)
        assert s.coeffs == (gr(1), gr(1), gr(1), gr(1))

    def test_entry_one_half_params(self):
        s = gauss_series(gr(1, 2), gr(1, 2), gr(1), 2)
        assert s[1] == gr(1, 4)

    def test_zero_b(self):
        s = gauss_series(gr(3), gr(0), gr(2), 2)
        assert s.coeffs == (gr(1), gr(0), gr(0))

    def test_contiguous_to_binomial(self):
        # F(a,b;b;z) = (1-z)^(-a)
        a = gr(5, 7)
        left = gauss_series(a, gr(3, 2), gr(3, 2), 12)
        right = elementary_series(Elementary("binom", p=-a, theta=gr(1)), 12)
        assert left.coeffs == right.coeffs


class TestElementary:
    def test_exp_arctan_prefix(self):
        p = gr(5, 3)
        s = elementary_series(Elementary("exp_arctan", p=p), 3)
        assert s.coeffs == (
            gr(1),
            -p,
            p * p / 2,
            (2 * p - p ** 3) / 6,
        )

    def test_exp_arctan_at_zero(self):
        s = elementary_series(Elementary("exp_arctan", p=gr(0)), 6)
        assert s.coeffs == unit_stream(6).coeffs

    def test_arcsin_entry_five(self):
        p = gr(2, 5)
        s = elementary_series(Elementary("arcsin", p=p), 5)
        assert s[5] == 3 * p ** 5 / 40

    def test_binomial_linear(self):
        s = elementary_series(Elementary("binom", p=gr(1), theta=gr(1)), 3)
        assert s.coeffs == (gr(1), gr(-1), gr(0), gr(0))

    def test_arccos_is_half_pi_minus_arcsin(self):
        p = gr(3, 4)
        arccos = elementary_series(Elementary("arccos", p=p), 9)
        arcsin = elementary_series(Elementary("arcsin", p=p), 9)
        half_pi = EXACT.half_pi()
        expect = tuple(
            half_pi * u - v
            for u, v in zip(unit_stream(9).coeffs, arcsin.coeffs)
        )
        assert arccos.coeffs == expect

    def test_pythagorean_convolution(self):
        p = gr(4, 7)
        sin = elementary_series(Elementary("sin", p=p), 24)
        cos = elementary_series(Elementary("cos", p=p), 24)
        total = tuple(
            x + y
            for x, y in zip(
                cauchy_product(sin, sin).coeffs, cauchy_product(cos, cos).coeffs
            )
        )
        assert total == unit_stream(24).coeffs

    def test_arity_validation(self):
        with pytest.raises(ParameterDomainError):
            Elementary("sin", p=gr(1), theta=gr(1))
        with pytest.raises(ParameterDomainError):
            Elementary("binom", p=gr(1))
        with pytest.raises(ParameterDomainError):
            Elementary("tan", p=gr(1))


def random_stream(rng, N):
    coeffs = tuple(
        G(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(N + 1)
    )
    return CoeffStream(coeffs, "elementary", "oracle", "exact")


class TestCauchyProduct:
    def test_exp_squared(self):
        e = elementary_series(Elementary("exp", p=gr(1)), 8)
        sq = cauchy_product(e, e)
        e2 = elementary_series(Elementary("exp", p=gr(2)), 8)
        assert sq.coeffs == e2.coeffs

    def test_exp_times_kummer_entry(self):
        e = elementary_series(Elementary("exp", p=gr(1)), 4)
        m = kummer_series(gr(1), gr(2), 4)
        assert cauchy_product(e, m)[2] == gr(7, 6)

    def test_identity(self):
        rng = Random(3)
        A = random_stream(rng, 12)
        assert cauchy_product(A, unit_stream(12)).coeffs == A.coeffs

    def test_commutative_associative(self):
        rng = Random(4)
        for _ in range(5):
            A = random_stream(rng, 16)
            B = random_stream(rng, 16)
            C = random_stream(rng, 16)
            AB = cauchy_product(A, B)
            assert AB.coeffs == cauchy_product(B, A).coeffs
            assert (
                cauchy_product(AB, C).coeffs
                == cauchy_product(A, cauchy_product(B, C)).coeffs
            )

    def test_backend_mismatch(self):
        A = unit_stream(4, "exact")
        B = unit_stream(4, "f64")
        with pytest.raises(ValueError, match="backend"):
            cauchy_product(A, B)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            cauchy_product(unit_stream(4), unit_stream(5))

    def test_provenance(self):
        prod = cauchy_product(unit_stream(3), unit_stream(3))
        assert prod.provenance == "oracle"
        assert prod.base == "product"


class TestBases:
    def test_elliptic_k_carries_half_pi(self):
        s = hyper_base_series("K", 3)
        half_pi = EXACT.half_pi()
        gauss = gauss_series(Fraction(1, 2), Fraction(1, 2), 1, 3)
        assert s.coeffs == scale_stream(gauss, half_pi).coeffs

    def test_elliptic_e_value(self):
        s = hyper_base_series("E", 2)
        half_pi = EXACT.half_pi()
        # E(sqrt z): (pi/2)(1 - z/4 - 3 z^2/64 - ...)
        assert s[1] == half_pi * gr(-1, 4)
        assert s[2] == half_pi * gr(-3, 64)

    def test_f64_backend(self):
        s = hyper_base_series("K", 2, "f64")
        assert s.backend == "f64"
        assert abs(s[0] - 1.5707963267948966) < 1e-15
