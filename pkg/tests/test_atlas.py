import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logcoef.atlas import (
    ParseError,
    SpecError,
    eval_at,
    exact_u,
    f0,
    f1,
    f_lambda,
    fz_series,
    g_family,
    g_lambda,
    gamma_closed_form,
    half_plane,
    k_alpha,
    koebe,
    parse_spec,
    rational,
    render,
    schwarz_superset,
    taylor_of,
)
from logcoef.series import ts_eval
from logcoef.verify import log_coefficients

ALL_SPECS = [
    koebe(0.0),
    koebe(1.2),
    g_lambda(0.5),
    f_lambda(0.5),
    f0(),
    f1(),
    g_family(3),
    k_alpha(0.25),
    k_alpha(0.5),
    half_plane(),
    rational([0, 1], [1, -2, 1]),
    schwarz_superset(0.5, [0.5, 0.25j]),
    exact_u(0.5, 0.8, [0.3, -0.4]),
]

CLOSED_FORM_SPECS = [
    koebe(0.0),
    koebe(2.0),
    g_lambda(0.3),
    g_lambda(1.0),
    f_lambda(0.7),
    f0(),
    f1(),
    half_plane(),
]


class TestParse:
    def test_koebe(self):
        assert parse_spec("koebe(theta=0)") == koebe(0.0)

    def test_f_lambda(self):
        assert parse_spec("f_lambda(lambda=0.5)") == f_lambda(0.5)

    def test_lambda_out_of_range(self):
        with pytest.raises(SpecError, match="out of range"):
            parse_spec("g_lambda(lambda=1.5)")

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse_spec("g_lambda(lambda=0.5")
        assert exc.value.position == 19

    def test_unknown_name(self):
        with pytest.raises(ParseError, match="unknown function name"):
            parse_spec("bogus(x=1)")

    def test_unknown_parameter(self):
        with pytest.raises(ParseError, match="unknown parameter"):
            parse_spec("koebe(phi=1)")

    def test_missing_parameter(self):
        with pytest.raises(ParseError, match="missing"):
            parse_spec("g_lambda()")

    def test_complex_literals(self):
        s = parse_spec("rational(num=[0, 1, 0.5-0.25i], den=[1.0, 2i])")
        assert s.num == (0.0, 1.0, 0.5 - 0.25j)
        assert s.den == (1.0, 2.0j)

    def test_rational_normalization_enforced(self):
        with pytest.raises(SpecError, match="normalization"):
            parse_spec("rational(num=[0,2], den=[1])")
        with pytest.raises(SpecError, match="vanish"):
            parse_spec("rational(num=[1,1], den=[1])")

    def test_trailing_input(self):
        with pytest.raises(ParseError, match="trailing"):
            parse_spec("f0() junk")

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=render)
    def test_render_round_trip(self, spec):
        assert parse_spec(render(spec)) == spec

    @settings(max_examples=100, deadline=None)
    @given(
        st.sampled_from(["koebe", "g_lambda", "f_lambda", "k_alpha", "g_family"]),
        st.floats(0.001, 0.999),
        st.integers(1, 9),
    )
    def test_render_round_trip_random(self, kind, x, n):
        spec = {
            "koebe": lambda: koebe(4.0 * x),
            "g_lambda": lambda: g_lambda(x),
            "f_lambda": lambda: f_lambda(x),
            "k_alpha": lambda: k_alpha(x * 0.999),
            "g_family": lambda: g_family(n),
        }[kind]()
        assert parse_spec(render(spec)) == spec


class TestTaylor:
    def test_g_lambda_partial_sums(self):
        t = taylor_of(g_lambda(0.5), 4)
        np.testing.assert_allclose(t.coeffs.real, [0, 1, 1.5, 1.75, 1.875], atol=1e-14)

    def test_koebe_integers(self):
        t = taylor_of(koebe(0.0), 5)
        np.testing.assert_allclose(t.coeffs.real, [0, 1, 2, 3, 4, 5], atol=1e-13)

    def test_f1_coefficients(self):
        t = taylor_of(f1(), 4)
        np.testing.assert_allclose(t.coeffs.real, [0, 1, 1.5, 2.25, 2.875], atol=1e-13)

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=render)
    def test_normalization(self, spec):
        t = taylor_of(spec, 16)
        assert t.coeffs[0] == 0.0
        assert abs(t.coeffs[1] - 1.0) <= 1e-12

    def test_g_family_low_order_truncation(self):
        # order below the family index: only the leading terms are visible
        t = taylor_of(g_family(5), 3)
        np.testing.assert_allclose(t.coeffs.real, [0, 1, 0, 0], atol=1e-14)

    def test_order_must_be_positive(self):
        with pytest.raises(SpecError):
            taylor_of(f0(), 0)


class TestEval:
    def test_koebe_half(self):
        assert eval_at(koebe(0.0), 0.5) == pytest.approx(2.0, abs=1e-14)

    def test_f_lambda_one(self):
        assert eval_at(f_lambda(1.0), 0.5) == pytest.approx(1.6, abs=1e-14)

    def test_zero(self):
        for spec in ALL_SPECS:
            assert eval_at(spec, 0.0) == 0.0

    def test_outside_disk(self):
        with pytest.raises(SpecError):
            eval_at(f0(), 1.0)

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=render)
    def test_matches_series_evaluation(self, spec):
        t = taylor_of(spec, 256)
        for z in (0.3, -0.5 + 0.4j, 0.62j, -0.85, 0.9):
            assert abs(eval_at(spec, z) - ts_eval(t, z)) < 1e-8


class TestGammaClosedForm:
    def test_g_lambda(self):
        assert gamma_closed_form(g_lambda(0.5), 2) == pytest.approx(0.3125)

    def test_f0(self):
        assert gamma_closed_form(f0(), 2) == pytest.approx(-0.0625)

    def test_koebe(self):
        assert gamma_closed_form(koebe(0.0), 3) == pytest.approx(1.0 / 3.0)
        g = gamma_closed_form(koebe(0.7), 5)
        assert abs(g) == pytest.approx(0.2, abs=1e-15)
        assert cmath.phase(g) == pytest.approx(5 * 0.7 - 2 * math.pi, abs=1e-12)

    def test_g_family_leading_only(self):
        assert gamma_closed_form(g_family(2), 2) == pytest.approx(-1.0 / 12.0)
        assert gamma_closed_form(g_family(2), 3) is None

    def test_unavailable(self):
        assert gamma_closed_form(k_alpha(0.3), 1) is None
        assert gamma_closed_form(rational([0, 1], [1, -1]), 1) is None

    @pytest.mark.parametrize("spec", CLOSED_FORM_SPECS, ids=render)
    def test_series_agreement_to_n100(self, spec):
        prof = log_coefficients(spec, 128)
        worst = max(
            abs(prof.gammas[n - 1] - gamma_closed_form(spec, n)) for n in range(1, 101)
        )
        assert worst <= 1e-10

    def test_g_family_leading_agreement(self):
        for n in range(1, 7):
            prof = log_coefficients(g_family(n), 64)
            assert abs(prof.gammas[n - 1] - gamma_closed_form(g_family(n), n)) < 1e-12


class TestIdentifications:
    def test_g1_equals_koebe(self):
        # the lambda=1 member of the equality family has the Koebe expansion
        a = taylor_of(g_lambda(1.0), 64).coeffs
        b = taylor_of(koebe(0.0), 64).coeffs
        assert np.max(np.abs(a - b)) < 1e-12

    def test_k_alpha_zero_is_half_plane(self):
        a = fz_series(k_alpha(0.0), 32).coeffs
        b = fz_series(half_plane(), 32).coeffs
        assert np.max(np.abs(a - b)) < 1e-13

    def test_k_alpha_branch_continuity(self):
        a = fz_series(k_alpha(0.5 - 1e-9), 32).coeffs
        b = fz_series(k_alpha(0.5), 32).coeffs
        assert np.max(np.abs(a - b)) < 1e-7

    def test_rotation_invariant_gamma_magnitudes(self):
        for theta in (0.0, 0.9, 2.5):
            prof = log_coefficients(koebe(theta), 32)
            ns = np.arange(1, 33)
            assert np.max(np.abs(np.abs(prof.gammas) - 1.0 / ns)) < 1e-12

    def test_2gamma1_equals_a2(self):
        for spec in ALL_SPECS:
            prof = log_coefficients(spec, 8)
            a2 = taylor_of(spec, 2).coeffs[2]
            assert abs(2.0 * prof.gammas[0] - a2) <= 1e-10
