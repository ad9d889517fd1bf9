import numpy as np
import pytest

from logcoef.atlas import (
    exact_u,
    f0,
    f1,
    f_lambda,
    g_family,
    g_lambda,
    half_plane,
    k_alpha,
    koebe,
    render,
    schwarz_superset,
)
from logcoef.membership import (
    MembershipError,
    g_class_sup,
    min_re_starlike,
    u_deficiency,
)

SMOOTH_SPECS = [
    koebe(0.0),
    g_lambda(0.3),
    g_lambda(1.0),
    f_lambda(0.7),
    f0(),
    f1(),
    half_plane(),
    k_alpha(0.25),
    schwarz_superset(0.5, [0.4, 0.3]),
    exact_u(0.5, 0.8, [0.3, -0.4]),
]


class TestUDeficiency:
    def test_f_lambda_cubic_deficiency(self):
        # (z/f)^2 f' - 1 = -(2 lam^2/(1+lam)) z^3 for the counterexample family
        lam = 0.5
        rep = u_deficiency(f_lambda(lam), lam, radii=[0.99])
        expected = (2 * lam**2 / (1 + lam)) * 0.99**3
        assert rep.measured == pytest.approx(expected, abs=1e-12)
        assert rep.verdict == "pass"

    def test_g_lambda_quadratic_deficiency(self):
        rep = u_deficiency(g_lambda(0.5), 0.5, radii=[0.99])
        assert rep.measured == pytest.approx(0.5 * 0.99**2, abs=1e-12)
        assert rep.verdict == "pass"

    def test_koebe(self):
        rep = u_deficiency(koebe(0.0), 1.0, radii=[0.99])
        assert rep.measured == pytest.approx(0.99**2, abs=1e-12)
        assert rep.verdict == "pass"

    @pytest.mark.parametrize("lam", [round(0.1 * k, 10) for k in range(1, 11)])
    def test_f_lambda_members(self, lam):
        assert u_deficiency(f_lambda(lam), lam).verdict == "pass"

    @pytest.mark.parametrize("lam", [round(0.1 * k, 10) for k in range(1, 11)])
    def test_g_lambda_members(self, lam):
        assert u_deficiency(g_lambda(lam), lam).verdict == "pass"

    def test_g_family_inconclusive_near_boundary(self):
        rep = u_deficiency(g_family(6), 1.0, radii=[0.999])
        assert rep.verdict == "inconclusive"
        assert rep.tail_bound > 1e-8

    def test_g_family_conclusive_inside(self):
        rep = u_deficiency(g_family(2), 1.0, radii=[0.9])
        assert rep.tail_bound < 1e-8
        assert rep.verdict == "pass"


class TestStarlike:
    def test_koebe_minimum(self):
        rep = min_re_starlike(koebe(0.0), 0.0, radii=[0.9])
        assert rep.measured == pytest.approx(0.1 / 1.9, abs=1e-12)
        assert rep.verdict == "pass"

    def test_half_plane_order_half(self):
        rep = min_re_starlike(half_plane(), 0.5, radii=[0.99])
        assert rep.measured == pytest.approx(1.0 / 1.99, abs=1e-12)
        assert rep.verdict == "pass"

    def test_f1_not_starlike(self):
        rep = min_re_starlike(f1(), 0.0, radii=[0.99])
        assert rep.measured < 0
        assert rep.verdict == "fail"

    def test_k_alpha_is_starlike_of_its_order(self):
        from logcoef.verify import starlike_order

        for alpha in (0.0, 0.25, 0.5, 0.75):
            beta = starlike_order(alpha)
            rep = min_re_starlike(k_alpha(alpha), beta - 1e-3, radii=[0.99])
            assert rep.verdict == "pass", (alpha, rep.measured, beta)


class TestGClass:
    def test_f0_approaches_boundary(self):
        rep = g_class_sup(f0(), 1.0, radii=[0.999])
        assert rep.measured == pytest.approx(1.0 + 0.999 / 1.999, abs=1e-12)
        assert rep.verdict == "pass"
        assert rep.margin < 3e-4  # boundary member: pass with a thin margin

    @pytest.mark.parametrize("n", range(1, 7))
    def test_g_family_members(self, n):
        rep = g_class_sup(g_family(n), 1.0)
        assert rep.verdict == "pass"

    def test_half_plane_not_in_class(self):
        rep = g_class_sup(half_plane(), 1.0, radii=[0.9])
        assert rep.measured == pytest.approx(19.0, abs=1e-10)
        assert rep.verdict == "fail"


class TestSamplingPolicy:
    @pytest.mark.parametrize("spec", SMOOTH_SPECS, ids=render)
    def test_radius_monotonicity(self, spec):
        radii = (0.5, 0.8, 0.9, 0.99)
        u = [u_deficiency(spec, 1.0, radii=[r]).measured for r in radii]
        g = [g_class_sup(spec, 1.0, radii=[r]).measured for r in radii]
        for a, b in zip(u, u[1:]):
            assert a <= b + 1e-9
        for a, b in zip(g, g[1:]):
            assert a <= b + 1e-9

    @pytest.mark.parametrize("spec", SMOOTH_SPECS, ids=render)
    def test_refinement_stability(self, spec):
        for fn in (u_deficiency, g_class_sup):
            a = fn(spec, 1.0, radii=[0.9, 0.99], m=4096).measured
            b = fn(spec, 1.0, radii=[0.9, 0.99], m=8192).measured
            assert abs(a - b) <= 1e-6

    def test_reports_are_reproducible(self):
        a = u_deficiency(f_lambda(0.5), 0.5)
        b = u_deficiency(f_lambda(0.5), 0.5)
        assert a == b

    def test_bad_radii(self):
        with pytest.raises(ValueError):
            u_deficiency(f0(), 1.0, radii=[1.0])
        with pytest.raises(ValueError):
            u_deficiency(f0(), 1.0, radii=[])

    def test_min_samples(self):
        with pytest.raises(ValueError):
            u_deficiency(f0(), 1.0, m=32)

    def test_threshold_ranges(self):
        with pytest.raises(ValueError):
            u_deficiency(f0(), 1.5)
        with pytest.raises(ValueError):
            g_class_sup(f0(), 0.0)

    def test_report_dict_fields(self):
        d = u_deficiency(f0(), 1.0).to_dict()
        assert set(d) == {
            "spec",
            "query",
            "threshold",
            "radii",
            "samples_per_circle",
            "measured",
            "margin",
            "verdict",
            "tail_bound",
            "note",
        }


class TestHardFailures:
    def test_sample_on_a_pole_of_f(self):
        # z/f = 1 - 1.5 z - 0.5 z^2 vanishes at a real point inside the
        # disk; sampling that circle hits the zero and must hard-fail
        from logcoef.atlas import exact_u_denominator

        q = exact_u_denominator(0.5, 1.5, [1.0])
        root = min(
            (r.real for r in np.roots(q[::-1]) if abs(r.imag) < 1e-12 and r.real > 0),
        )
        spec = exact_u(0.5, 1.5, [1.0])
        with pytest.raises(MembershipError, match="z/f vanishes"):
            u_deficiency(spec, 0.5, radii=[root])
