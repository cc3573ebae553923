from fractions import Fraction
from random import Random
from zlib import crc32

import pytest

from macprod.families import (
    CatalogueError,
    build,
    build_elliptic_family,
    build_F_family,
    build_M_family,
    get_family,
    list_families,
)
from macprod.numerics import EXACT, GaussianRational, ParameterDomainError, approximate
from macprod.recurrence_core import ComboSpec
from macprod.series_oracle import (
    Elementary,
    elementary_series,
    gauss_series,
    kummer_series,
    scale_stream,
)
from macprod.verify import draw_params, oracle_stream, recurrence_stream

G = GaussianRational


def gr(num, den=1):
    return G(Fraction(num, den))


class TestCatalogue:
    def test_total_count(self):
        assert len(list_families()) == 38

    def test_m_base_count(self):
        # the twelve M-base statements plus the symmetry-completing cos combo
        m = [f for f in list_families() if f.base == "M"]
        assert len(m) == 13
        assert sum(1 for f in m if f.formulation == "combo") == 4

    def test_ids_unique_and_stable(self):
        ids = [f.id for f in list_families()]
        assert len(ids) == len(set(ids))
        assert ids[:3] == ["exp-M", "sinh-M-combo", "cosh-M-combo"]

    def test_arcsin_shape(self):
        info = get_family("arcsin-M")
        assert info.order == 11
        assert info.start == 11

    def test_sin_F_shape(self):
        info = get_family("sin-F")
        assert info.order == 9
        assert info.start == 9

    def test_unknown_family(self):
        with pytest.raises(CatalogueError):
            get_family("tan-M")

    def test_builder_wrappers(self):
        spec = build_M_family("exp", "single", {"a": 1, "c": 2, "p": 1})
        assert spec.seeds == (gr(1), gr(3, 2))
        combo = build_F_family("sin", "combo", {"a": 1, "b": 1, "c": 1, "p": 1})
        assert isinstance(combo, ComboSpec)
        ell = build_elliptic_family("K", "exp", {"p": 1})
        assert ell.meta[0] == ("family", "exp-K")
        with pytest.raises(CatalogueError):
            build_M_family("exp", "combo", {"a": 1, "c": 2, "p": 1})
        with pytest.raises(CatalogueError):
            build_elliptic_family("M", "exp", {"p": 1})


class TestValidation:
    def test_c_nonpositive_integer(self):
        for c in (0, -1, -5):
            with pytest.raises(ParameterDomainError, match="c"):
                build("exp-M", {"a": 1, "c": c, "p": 1})

    def test_c_two_excluded_where_rows_carry_it(self):
        with pytest.raises(ParameterDomainError, match="c-2|c - 2|\\(c-2\\)"):
            build("sin-M", {"a": Fraction(1, 2), "c": 2, "p": 1})

    def test_c_two_allowed_elsewhere(self):
        build("exp-M", {"a": 1, "c": 2, "p": 1})
        build("binom-F", {"a": 1, "b": 1, "c": 2, "p": 1, "theta": 1})

    def test_missing_parameter(self):
        with pytest.raises(ParameterDomainError, match="requires"):
            build("exp-F", {"a": 1, "b": 1, "c": 1})

    def test_extra_parameter(self):
        with pytest.raises(ParameterDomainError, match="does not take"):
            build("exp-M", {"a": 1, "b": 1, "c": 2, "p": 1})

    def test_fractional_c_near_excluded(self):
        build("sin-M", {"a": 1, "c": Fraction(-7, 2), "p": 1})


class TestSeeds:
    def test_exp_M(self):
        spec = build("exp-M", {"a": 1, "c": 2, "p": 1})
        assert spec.seeds == (gr(1), gr(3, 2))

    def test_exp_F(self):
        spec = build("exp-F", {"a": 1, "b": 1, "c": 1, "p": 1})
        assert spec.seeds == (gr(1), gr(2), gr(5, 2))

    def test_arcsin_at_zero_a_matches_classical_series(self):
        p = gr(1)
        spec = build("arcsin-M", {"a": 0, "c": Fraction(3, 2), "p": 1})
        series = elementary_series(Elementary("arcsin", p=p), 11)
        assert spec.seeds == series.coeffs
        assert spec.seeds[5] == gr(3, 40)
        assert spec.seeds[7] == gr(5, 112)
        assert spec.seeds[9] == gr(35, 1152)
        assert spec.seeds[11] == gr(63, 2816)

    def test_exp_K_normalized_values(self):
        spec = build("exp-K", {"p": 1})
        half_pi = EXACT.half_pi()
        assert spec.seeds[0] == half_pi
        assert spec.seeds[1] == half_pi * gr(5, 4)
        assert spec.seeds[2] == half_pi * gr(57, 64)

    def test_binom_K_u1(self):
        for theta, p in ((gr(1), gr(1)), (gr(2, 3), gr(-1, 2))):
            spec = build("binom-K", {"p": p.re, "theta": theta.re})
            half_pi = EXACT.half_pi()
            assert spec.seeds[1] == half_pi * ((1 - 4 * theta * p) / 4)

    def test_exp_E_u1_at_zero_p(self):
        spec = build("exp-E", {"p": 0})
        assert spec.seeds[1] == EXACT.half_pi() * gr(-1, 4)


def _assert_oracle_equal(family_id, params, N):
    got = recurrence_stream(family_id, params, N, "exact")
    want = oracle_stream(family_id, params, N, "exact")
    mismatches = [
        (n, x, y) for n, (x, y) in enumerate(zip(got.coeffs, want.coeffs)) if x != y
    ]
    assert not mismatches, (
        f"{family_id} deviates from the oracle first at n={mismatches[0][0]}: "
        f"recurrence={mismatches[0][1]} oracle={mismatches[0][2]}"
    )


# The transcribed order-12 row table of the inverse-sine products does not
# satisfy the product it claims (its seeds do); the referee must flag it.
KNOWN_DEVIATING = ("arcsin-M", "arccos-M")


class TestOracleEquality:
    @pytest.mark.parametrize(
        "info",
        [i for i in list_families() if i.id not in KNOWN_DEVIATING],
        ids=lambda i: i.id,
    )
    def test_random_draws(self, info):
        rng = Random(crc32(info.id.encode()))
        for _ in range(2):
            params = draw_params(info, rng)
            _assert_oracle_equal(info.id, params, 28)


class TestKnownTableDeviation:
    @pytest.mark.parametrize("family_id", KNOWN_DEVIATING)
    def test_referee_reports_first_mismatch_past_seeds(self, family_id):
        from macprod.verify import compare_oracle

        info = get_family(family_id)
        rng = Random(crc32(family_id.encode()))
        seen = 0
        while seen < 2:
            params = draw_params(info, rng)
            if params.p == 0:  # every row deviation carries a p^2 factor
                continue
            seen += 1
            seeds_only = compare_oracle(family_id, params, info.start, "exact")
            assert seeds_only.passed  # the seed list certifies exactly
            rep = compare_oracle(family_id, params, 20, "exact")
            assert rep.verdict == "fail"
            assert rep.first_mismatch == 12
            assert rep.max_abs > 0


class TestFormulationAgreement:
    @pytest.mark.parametrize("h", ["sin", "cos", "sinh", "cosh"])
    @pytest.mark.parametrize("base", ["M", "F"])
    def test_combo_equals_single(self, h, base):
        rng = Random(17)
        info = get_family(f"{h}-{base}")
        params = draw_params(info, rng)
        single = recurrence_stream(f"{h}-{base}", params, 40, "exact")
        combo = recurrence_stream(f"{h}-{base}-combo", params, 40, "exact")
        assert single.coeffs == combo.coeffs


class TestDegeneracies:
    N = 32

    def test_zero_a_reduces_M_products_to_elementary(self):
        c = Fraction(7, 5)
        for fam in ("exp-M", "sin-M", "cosh-M", "arctanexp-M"):
            params = {"a": 0, "c": c, "p": Fraction(3, 2)}
            got = recurrence_stream(fam, params, self.N, "exact")
            info = get_family(fam)
            h = elementary_series(
                Elementary(info.h, p=gr(3, 2)), self.N, EXACT
            )
            assert got.coeffs == h.coeffs

    def test_zero_ab_reduces_F_products_to_elementary(self):
        params = {"a": 0, "b": Fraction(5, 3), "c": Fraction(7, 5), "p": 1}
        got = recurrence_stream("sinh-F", params, self.N, "exact")
        h = elementary_series(Elementary("sinh", p=gr(1)), self.N, EXACT)
        assert got.coeffs == h.coeffs

    def test_zero_p_reduces_even_families_to_base(self):
        a, c = Fraction(2, 3), Fraction(7, 5)
        base = kummer_series(a, c, self.N).coeffs
        for fam in ("exp-M", "cos-M", "cosh-M", "arctanexp-M"):
            got = recurrence_stream(fam, {"a": a, "c": c, "p": 0}, self.N, "exact")
            assert got.coeffs == base
        got = recurrence_stream(
            "binom-M", {"a": a, "c": c, "p": 0, "theta": Fraction(1, 2)}, self.N, "exact"
        )
        assert got.coeffs == base

    def test_zero_p_annihilates_odd_families(self):
        a, c = Fraction(2, 3), Fraction(7, 5)
        for fam in ("sin-M", "sinh-M", "arcsin-M"):
            got = recurrence_stream(fam, {"a": a, "c": c, "p": 0}, self.N, "exact")
            assert all(v == gr(0) for v in got.coeffs)

    def test_zero_p_sends_arccos_to_half_pi_base(self):
        a, c = Fraction(2, 3), Fraction(7, 5)
        got = recurrence_stream("arccos-M", {"a": a, "c": c, "p": 0}, self.N, "exact")
        half_pi = EXACT.half_pi()
        base = kummer_series(a, c, self.N).coeffs
        assert got.coeffs == tuple(half_pi * v for v in base)

    def test_zero_theta_reduces_binomials_to_base(self):
        a, b, c = Fraction(1, 3), Fraction(4, 3), Fraction(7, 5)
        got = recurrence_stream(
            "binom-M", {"a": a, "c": c, "p": 2, "theta": 0}, self.N, "exact"
        )
        assert got.coeffs == kummer_series(a, c, self.N).coeffs
        got = recurrence_stream(
            "binom-F", {"a": a, "b": b, "c": c, "p": 2, "theta": 0}, self.N, "exact"
        )
        assert got.coeffs == gauss_series(a, b, c, self.N).coeffs

    def test_kummer_collapse(self):
        # c = a turns the exponential-M product into exp((p+1) z)
        a = Fraction(5, 4)
        p = Fraction(2, 3)
        got = recurrence_stream("exp-M", {"a": a, "c": a, "p": p}, self.N, "exact")
        want = elementary_series(Elementary("exp", p=gr(5, 3)), self.N, EXACT)
        assert got.coeffs == want.coeffs

    def test_gauss_collapse(self):
        # b = c, theta = 1 turns the binomial-F product into (1-z)^(p-a)
        a, b, p = Fraction(1, 3), Fraction(9, 4), Fraction(1, 2)
        got = recurrence_stream(
            "binom-F", {"a": a, "b": b, "c": b, "p": p, "theta": 1}, self.N, "exact"
        )
        want = elementary_series(
            Elementary("binom", p=gr(1, 6), theta=gr(1)), self.N, EXACT
        )
        assert got.coeffs == want.coeffs


class TestEllipticConsistency:
    @pytest.mark.parametrize(
        "h", ["exp", "binom", "arctanexp", "sin", "cos", "sinh", "cosh"]
    )
    @pytest.mark.parametrize("kind", ["K", "E"])
    def test_half_pi_times_specialized_F(self, kind, h):
        params = {"p": Fraction(2, 3)}
        if h == "binom":
            params["theta"] = Fraction(3, 4)
        ell = recurrence_stream(f"{h}-{kind}", params, 40, "exact")
        a = Fraction(1, 2) if kind == "K" else Fraction(-1, 2)
        f_params = dict(params, a=a, b=Fraction(1, 2), c=1)
        f_id = f"{h}-F"
        f_stream = recurrence_stream(f_id, f_params, 40, "exact")
        half_pi = EXACT.half_pi()
        assert ell.coeffs == scale_stream(f_stream, half_pi).coeffs


class TestFloatFidelity:
    STABLE = (
        "exp-M",
        "sinh-M-combo",
        "cosh-M-combo",
        "sin-M-combo",
        "cos-M-combo",
        "arctanexp-M",
        "exp-F",
        "sinh-F-combo",
        "cosh-F-combo",
        "sin-F-combo",
        "cos-F-combo",
        "arctanexp-F",
        "exp-K",
        "arctanexp-K",
        "exp-E",
        "arctanexp-E",
    )

    @pytest.mark.parametrize("family_id", STABLE)
    def test_low_order_families_track_exact(self, family_id):
        info = get_family(family_id)
        rng = Random(crc32(family_id.encode()) ^ 0xF1)
        for _ in range(3):
            pe = draw_params(info, rng)
            exact = recurrence_stream(family_id, pe, 64, "exact")
            fl_params = {k: approximate(getattr(pe, k)) for k in pe.present()}
            fl = recurrence_stream(family_id, fl_params, 64, "f64")
            for x, y in zip(fl.coeffs, exact.coeffs):
                ya = approximate(y)
                assert abs(x - ya) / max(1.0, abs(ya)) <= 1e-8


class TestMeta:
    def test_radius_notes(self):
        assert get_family("exp-M").radius == "entire"
        assert get_family("exp-F").radius == "1"
        assert get_family("binom-M").radius == "1/|theta|"

    def test_params_snapshot_in_meta(self):
        spec = build("exp-M", {"a": 1, "c": 2, "p": Fraction(1, 3)})
        meta = dict(spec.meta)
        assert meta["family"] == "exp-M"
        assert dict(meta["params"]) == {"a": "1", "c": "2", "p": "1/3"}
