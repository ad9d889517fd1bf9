"""Numerical verification of the logarithmic-coefficient inequalities.

The module reproduces, on parameter grids, every bound the package tracks:

  * the sharp bound sum |gamma_n|^2 <= (pi^2/6 + 2 Li2(L) + Li2(L^2))/4 for
    the bounded-deficiency class with parameter L, its equality family, and
    the counterexample family that beats the termwise bound;
  * the univalent-class limit sum |gamma_n|^2 <= pi^2/6 with Koebe equality;
  * the sign analysis behind the sharpness proof (a dilogarithm gap that
    stays negative, written as an integral with positive integrand whose
    numerator is an explicit quadratic);
  * the bounded-convexity chain (weighted l2, per-coefficient, and l2
    bounds) with its equality member z - z^2/2 and the one-index family
    refuting the naive per-coefficient conjecture;
  * the convex-order chain: delta coefficients of the subordination kernel,
    the starlike order of convex functions of order alpha, and the l2
    consequences, with equality for the kernel primitive itself.

Every partial-sum check carries an explicit tail bound; equality checks use
closed-form geometric or dilogarithm tails.  Results are BoundCheck rows
with a stable JSON field layout (name, params, lhs, rhs, slack, status, N,
tail_bound).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import atlas
from .atlas import FunctionSpec
from .dilog import PI2_6, li2
from .series import TruncatedSeries, ts_exp, ts_log, ts_reciprocal

EQUALITY_TOL = 1e-9
VIOLATION_TOL = 1e-9
DEFAULT_ORDER = 128

DEFAULT_LAMBDA_GRID = tuple(round(0.1 * k, 10) for k in range(1, 11))
DEFAULT_ALPHA_GRID = (0.25, 0.5, 0.75, 1.0)
_SUITE_T_GRID = tuple(round(0.1 * k, 10) for k in range(11))


class VerifyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Logarithmic coefficient profiles.

@dataclass(frozen=True)
class LogCoeffProfile:
    gammas: np.ndarray  # gamma_1 .. gamma_N
    source: str  # "series" | "closed_form"
    spec: FunctionSpec


def log_coefficients(spec: FunctionSpec, order: int) -> LogCoeffProfile:
    """gamma_1..gamma_N from the series log of f/z (gamma_n = [z^n] log(f/z) / 2)."""
    if order < 1:
        raise VerifyError("order must be >= 1")
    fz = atlas.fz_series(spec, order)
    if fz.coeffs[0] != 1.0:
        raise VerifyError("f/z fails the c0 = 1 normalization")
    gammas = 0.5 * ts_log(fz).coeffs[1:]
    a2 = fz.coeffs[1]
    if abs(2.0 * gammas[0] - a2) > 1e-10:
        raise VerifyError("2 gamma_1 != a_2: inconsistent expansion")
    g = gammas.copy()
    g.flags.writeable = False
    return LogCoeffProfile(gammas=g, source="series", spec=spec)


def closed_form_profile(spec: FunctionSpec, order: int) -> LogCoeffProfile | None:
    """Profile from the closed forms, or None if the spec lacks them."""
    vals = [atlas.gamma_closed_form(spec, n) for n in range(1, order + 1)]
    if any(v is None for v in vals):
        return None
    g = np.array(vals, dtype=np.complex128)
    g.flags.writeable = False
    return LogCoeffProfile(gammas=g, source="closed_form", spec=spec)


def gamma_linf_slope(spec: FunctionSpec) -> float | None:
    """A constant c with |gamma_n| <= c/n, where one is established."""
    k = spec.kind
    if k == "koebe":
        return 1.0
    if k == "g_lambda":
        return (1.0 + spec.lam) / 2.0
    if k == "f_lambda":
        return (1.0 + spec.lam) / 2.0 + spec.lam / (2.0 * (1.0 + spec.lam))
    if k == "f0":
        return 0.25
    if k == "f1":
        return 1.25
    if k == "half_plane":
        return 0.5
    if k == "g_family":
        return 0.25
    if k == "k_alpha":
        return 1.0 - starlike_order(spec.alpha)
    return None


@dataclass(frozen=True)
class L2Sum:
    value: float  # partial sum over n <= N
    order: int
    weights: str  # "unit" | "n_squared"
    tail_bound: float | None  # None when no generic tail is available


def gamma_l2(profile: LogCoeffProfile, weights: str = "unit") -> L2Sum:
    """Partial sum of |gamma_n|^2 (optionally n^2-weighted) with a generic
    tail bound when a 1/n coefficient bound is known for the spec."""
    sq = np.abs(profile.gammas) ** 2
    n = profile.gammas.size
    if weights == "unit":
        value = float(math.fsum(sq))
        c = gamma_linf_slope(profile.spec)
        tail = (c * c / n) if c is not None else None
    elif weights == "n_squared":
        value = float(math.fsum(sq * np.arange(1, n + 1) ** 2))
        tail = None
    else:
        raise VerifyError(f"unknown weights {weights!r}")
    return L2Sum(value=value, order=n, weights=weights, tail_bound=tail)


# ---------------------------------------------------------------------------
# Dilogarithm partial sums and closed tails.

def li2_partial(x: float, order: int) -> float:
    if x == 0.0:
        return 0.0
    p = 1.0
    terms = []
    for n in range(1, order + 1):
        p *= x
        terms.append(p / (n * n))
    return math.fsum(terms)


def li2_tail(x: float, order: int) -> float:
    """sum_{n > N} x^n / n^2, via the full dilogarithm minus the partial."""
    return li2(x).value - li2_partial(x, order)


def ulambda_l2_bound(lam: float) -> float:
    """The sharp bound (pi^2/6 + 2 Li2(lam) + Li2(lam^2)) / 4."""
    if not (0.0 < lam <= 1.0):
        raise VerifyError("lambda must lie in (0, 1]")
    return 0.25 * (PI2_6 + 2.0 * li2(lam).value + li2(lam * lam).value)


def glambda_l2_closed_tail(lam: float, order: int) -> float:
    """Exact tail of sum |gamma_n(g_lambda)|^2 = sum ((1+lam^n)/(2n))^2."""
    if lam == 1.0:
        return li2_tail(1.0, order)
    return 0.25 * (
        li2_tail(1.0, order) + 2.0 * li2_tail(lam, order) + li2_tail(lam * lam, order)
    )


def flambda_l2_closed_tail(lam: float, order: int) -> float:
    """Exact tail of sum |gamma_n(f_lambda)|^2 from its closed form."""
    y1 = lam / (1.0 + lam)
    y2 = lam * lam / (1.0 + lam)
    return (
        0.25
        * (li2_tail(1.0, order) + 2 * li2_tail(lam, order) + li2_tail(lam**2, order))
        + 0.5 * (li2_tail(-y1, order) + li2_tail(-y2, order))
        + 0.25 * li2_tail(y1 * y1, order)
    )


def f0_weighted_l2_closed_tail(order: int) -> float:
    """Exact tail of sum n^2 |gamma_n(f0)|^2 = sum 4^-(n+1) (geometric)."""
    return 0.25 ** (order + 1) / 3.0


def f1_l2_alternating_route(terms: int = 80) -> float:
    """sum |gamma_n(f1)|^2 via the alternating rearrangement
    pi^2/6 - (1/2) sum_k 4^-k (4k-1) / (k^2 (2k-1)^2)."""
    s = math.fsum(
        4.0**-k * (4 * k - 1) / (k * k * (2 * k - 1) ** 2) for k in range(1, terms + 1)
    )
    return PI2_6 - 0.5 * s


# ---------------------------------------------------------------------------
# Sharpness analysis of the bounded-deficiency bound.

@dataclass(frozen=True)
class SharpnessTerms:
    """gap: the dilogarithm combination measuring how far the counterexample
    family sits below the sharp bound (scaled by 4; negative).  integrand:
    the positive integrand of its integral form.  kernel: the quadratic
    numerator of the integrand."""

    gap: float
    integrand: float
    kernel: float


def sharpness_terms(lam: float, t: float) -> SharpnessTerms:
    if not (0.0 < lam <= 1.0):
        raise VerifyError("lambda must lie in (0, 1]")
    if not (0.0 <= t <= 1.0):
        raise VerifyError("t must lie in [0, 1]")
    gap = 2.0 * (
        li2(-lam * lam / (1.0 + lam)).value + li2(-lam / (1.0 + lam)).value
    ) + li2((lam / (1.0 + lam)) ** 2).value
    integrand = (
        2.0 / (1.0 + lam + t * lam)
        - 1.0 / (1.0 + lam - t * lam)
        + lam / (1.0 + lam + t * lam * lam)
    )
    kernel = (
        (1.0 + lam) ** 3
        - (3.0 - lam) * (1.0 + lam) * lam * t
        - 4.0 * lam**3 * t * t
    )
    denom = ((1.0 + lam) ** 2 - t * t * lam * lam) * (1.0 + lam + t * lam * lam)
    if abs(integrand * denom - kernel) > 1e-12 * max(1.0, abs(kernel)):
        raise VerifyError(
            f"integrand/kernel inconsistency at lam={lam}, t={t}: "
            f"{integrand * denom} vs {kernel}"
        )
    return SharpnessTerms(gap=gap, integrand=integrand, kernel=kernel)


# ---------------------------------------------------------------------------
# Bounded-convexity (g-class) bounds.

@dataclass(frozen=True)
class GClassBounds:
    weighted_l2: float  # bound on sum n^2 |gamma_n|^2
    coeff_factor: float  # n-free factor in |gamma_n| <= coeff_factor / n
    plain_l2: float  # bound on sum |gamma_n|^2


def g_class_bounds(alpha: float) -> GClassBounds:
    if not (0.0 < alpha <= 1.0):
        raise VerifyError("alpha must lie in (0, 1]")
    return GClassBounds(
        weighted_l2=alpha / (4.0 * (alpha + 2.0)),
        coeff_factor=alpha / (2.0 * (alpha + 1.0)),
        plain_l2=0.25 * alpha * alpha * li2(1.0 / (1.0 + alpha) ** 2).value,
    )


# ---------------------------------------------------------------------------
# Convex functions of order alpha.

def starlike_order(alpha: float) -> float:
    """The order of starlikeness guaranteed for convex functions of order
    alpha: (1-2a) / (2 (2^(1-2a) - 1)), with the removable point at
    alpha = 1/2 equal to 1/(2 log 2)."""
    if not (0.0 <= alpha < 1.0):
        raise VerifyError("alpha must lie in [0, 1)")
    x = 1.0 - 2.0 * alpha
    if abs(x) < atlas.ALPHA_HALF_SWITCH:
        return 1.0 / (2.0 * math.log(2.0))
    return x / (2.0 * math.expm1(x * math.log(2.0)))


@dataclass(frozen=True)
class ConvexOrderProfile:
    alpha: float
    beta: float
    delta: np.ndarray  # delta_1 .. delta_N, real
    gamma_l2: float  # (1/4) sum delta_n^2 / n^2 over n <= N


def _g_kernel_series(alpha: float, order: int) -> TruncatedSeries:
    """Series of the subordination kernel G_alpha = z K_alpha'/K_alpha."""
    one_minus_z = np.zeros(order + 1, dtype=np.complex128)
    one_minus_z[0] = 1.0
    if order >= 1:
        one_minus_z[1] = -1.0
    x = 1.0 - 2.0 * alpha
    if abs(x) < atlas.ALPHA_HALF_SWITCH:
        v = TruncatedSeries(1.0 / (np.arange(order + 1) + 1.0))
    else:
        ln = ts_log(TruncatedSeries(np.append(one_minus_z, 0.0)))
        w = ts_exp(x * ln).coeffs.copy()
        w[0] = 0.0
        v = TruncatedSeries(w[1:] / -x)
    return ts_reciprocal(TruncatedSeries(one_minus_z) * v)


def convex_order_profile(alpha: float, order: int) -> ConvexOrderProfile:
    """delta coefficients of G_alpha - 1 and the induced l2 quantity."""
    beta = starlike_order(alpha)
    g = _g_kernel_series(alpha, order)
    delta_c = g.coeffs[1:]
    if np.max(np.abs(delta_c.imag)) > 1e-12:
        raise VerifyError("delta coefficients acquired an imaginary part")
    delta = delta_c.real.copy()
    delta.flags.writeable = False
    ns = np.arange(1, order + 1, dtype=float)
    gl2 = 0.25 * float(math.fsum(delta * delta / (ns * ns)))
    return ConvexOrderProfile(alpha=alpha, beta=beta, delta=delta, gamma_l2=gl2)


# ---------------------------------------------------------------------------
# Bound checks and the suite.

@dataclass(frozen=True)
class BoundCheck:
    name: str
    params: dict
    lhs: float
    rhs: float
    slack: float  # rhs - lhs
    status: str  # "holds" | "equality" | "violated"
    order: int
    tail_bound: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "status": self.status,
            "N": self.order,
            "tail_bound": self.tail_bound,
        }


def _check(name, params, lhs, rhs, order, tail_bound=0.0):
    slack = rhs - lhs
    if abs(slack) <= EQUALITY_TOL:
        status = "equality"
    elif slack < -VIOLATION_TOL:
        status = "violated"
    else:
        status = "holds"
    return BoundCheck(
        name=name,
        params=params,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        status=status,
        order=order,
        tail_bound=float(tail_bound),
    )


def _error_check(name, params, order, err):
    params = dict(params)
    params["error"] = str(err)
    return BoundCheck(
        name=name,
        params=params,
        lhs=0.0,
        rhs=0.0,
        slack=0.0,
        status="violated",
        order=order,
        tail_bound=0.0,
    )


def _guard(items, name, params, order, fn):
    """Append fn()'s checks; an exception becomes a violated-by-error row."""
    try:
        items.extend(fn())
    except Exception as err:  # noqa: BLE001 - any failure must surface as violated
        items.append(_error_check(name, params, order, err))


def _lambda_items(lam, order):
    def block():
        out = []
        bound = ulambda_l2_bound(lam)

        g = log_coefficients(atlas.g_lambda(lam), order)
        tail = glambda_l2_closed_tail(lam, order)
        out.append(
            _check(
                "log_l2_sharp_ulambda",
                {"lambda": lam, "spec": f"g_lambda(lambda={lam!r})"},
                gamma_l2(g).value + tail,
                bound,
                order,
                tail,
            )
        )

        f = log_coefficients(atlas.f_lambda(lam), order)
        ftail = flambda_l2_closed_tail(lam, order)
        out.append(
            _check(
                "log_l2_ulambda_counterexample",
                {"lambda": lam, "spec": f"f_lambda(lambda={lam!r})"},
                gamma_l2(f).value + ftail,
                bound,
                order,
                ftail,
            )
        )

        terms = sharpness_terms(lam, 0.0)
        out.append(
            _check("sharpness_gap_negative", {"lambda": lam}, terms.gap, 0.0, order)
        )
        for t in _SUITE_T_GRID:
            st = sharpness_terms(lam, t)
            out.append(
                _check(
                    "sharpness_integrand_positive",
                    {"lambda": lam, "t": t},
                    0.0,
                    st.integrand,
                    order,
                )
            )
            out.append(
                _check(
                    "sharpness_kernel_positive",
                    {"lambda": lam, "t": t},
                    0.0,
                    st.kernel,
                    order,
                )
            )
        return out

    items = []
    _guard(items, "lambda_block", {"lambda": lam}, order, block)
    return items


def _g_class_items(order):
    """Bounded-convexity chain at alpha = 1 plus the remark-family rows."""

    def block():
        out = []
        alpha = 1.0
        b = g_class_bounds(alpha)
        specs = [atlas.f0()] + [atlas.g_family(n) for n in range(1, 7)]
        for spec in specs:
            name = atlas.render(spec)
            prof = log_coefficients(spec, max(order, 40))
            w = gamma_l2(prof, "n_squared")
            tail = f0_weighted_l2_closed_tail(w.order) if spec.kind == "f0" else 0.0
            out.append(
                _check(
                    "gclass_weighted_l2",
                    {"alpha": alpha, "spec": name},
                    w.value + tail,
                    b.weighted_l2,
                    w.order,
                    tail,
                )
            )
            u = gamma_l2(prof, "unit")
            tail = 0.25 * li2_tail(0.25, u.order) if spec.kind == "f0" else 0.0
            out.append(
                _check(
                    "gclass_l2",
                    {"alpha": alpha, "spec": name},
                    u.value + tail,
                    b.plain_l2,
                    u.order,
                    tail,
                )
            )
            for n in range(1, 9):
                out.append(
                    _check(
                        "gclass_coeff_bound",
                        {"alpha": alpha, "spec": name, "n": n},
                        abs(prof.gammas[n - 1]),
                        b.coeff_factor / n,
                        prof.gammas.size,
                    )
                )
        for n in range(2, 7):
            prof = log_coefficients(atlas.g_family(n), order)
            lead = abs(prof.gammas[n - 1])
            out.append(
                _check(
                    "gclass_leading_coeff",
                    {"n": n},
                    lead,
                    1.0 / (2.0 * n * (n + 1)),
                    order,
                )
            )
            out.append(
                _check(
                    "gclass_naive_bound_refuted",
                    {"n": n},
                    1.0 / (n * 2.0 ** (n + 1)),
                    lead,
                    order,
                )
            )
        return out

    items = []
    _guard(items, "gclass_block", {"alpha": 1.0}, order, block)
    return items


def _convex_items(alpha, order):
    def block():
        out = []
        prof = convex_order_profile(alpha, order)
        kgam = log_coefficients(atlas.k_alpha(alpha), order)
        out.append(
            _check(
                "convex_order_l2_equality",
                {"alpha": alpha},
                gamma_l2(kgam).value,
                prof.gamma_l2,
                order,
            )
        )
        out.append(
            _check(
                "convex_order_delta_bound",
                {"alpha": alpha},
                float(np.max(np.abs(prof.delta))),
                2.0 * (1.0 - prof.beta),
                order,
            )
        )
        out.append(
            _check(
                "convex_order_l2_bound",
                {"alpha": alpha},
                prof.gamma_l2,
                (1.0 - prof.beta) ** 2 * PI2_6,
                order,
            )
        )
        if alpha == 0.0:
            out.append(
                _check("convex_starlike_order_anchor", {"alpha": 0.0}, prof.beta, 0.5, order)
            )
        if alpha == 0.5:
            out.append(
                _check(
                    "convex_starlike_order_anchor",
                    {"alpha": 0.5},
                    prof.beta,
                    1.0 / (2.0 * math.log(2.0)),
                    order,
                )
            )
        return out

    items = []
    _guard(items, "convex_block", {"alpha": alpha}, order, block)
    return items


def run_suite(
    lambda_grid=DEFAULT_LAMBDA_GRID,
    alpha_grid=DEFAULT_ALPHA_GRID,
    order: int = DEFAULT_ORDER,
) -> list[BoundCheck]:
    """All bound checks on the given grids, in a fixed canonical order."""
    items: list[BoundCheck] = []

    items.append(
        _check(
            "dilog_duplication_anchor", {"lambda": 1.0}, ulambda_l2_bound(1.0), PI2_6, order
        )
    )

    def koebe_block():
        prof = log_coefficients(atlas.koebe(0.0), order)
        tail = li2_tail(1.0, order)
        return [
            _check(
                "log_l2_univalent_koebe",
                {"spec": "koebe(theta=0.0)"},
                gamma_l2(prof).value + tail,
                PI2_6,
                order,
                tail,
            )
        ]

    _guard(items, "log_l2_univalent_koebe", {}, order, koebe_block)

    def halfplane_block():
        prof = log_coefficients(atlas.half_plane(), order)
        tail = 0.25 * li2_tail(1.0, order)
        return [
            _check(
                "halfplane_l2",
                {"spec": "half_plane()"},
                gamma_l2(prof).value + tail,
                PI2_6 / 4.0,
                order,
                tail,
            )
        ]

    _guard(items, "halfplane_l2", {}, order, halfplane_block)

    def f1_block():
        prof = log_coefficients(atlas.f1(), order)
        tail = flambda_l2_closed_tail(1.0, order)
        return [
            _check(
                "f1_l2_two_routes",
                {},
                gamma_l2(prof).value + tail,
                f1_l2_alternating_route(),
                order,
                tail,
            )
        ]

    _guard(items, "f1_l2_two_routes", {}, order, f1_block)

    def starlike_block():
        out = []
        for spec in (atlas.koebe(0.0), atlas.g_lambda(1.0)):
            prof = log_coefficients(spec, min(order, 100))
            ns = np.arange(1, prof.gammas.size + 1)
            out.append(
                _check(
                    "starlike_coeff_bound",
                    {"spec": atlas.render(spec)},
                    float(np.max(ns * np.abs(prof.gammas))),
                    1.0,
                    prof.gammas.size,
                )
            )
        return out

    _guard(items, "starlike_coeff_bound", {}, order, starlike_block)

    for lam in lambda_grid:
        items.extend(_lambda_items(float(lam), order))

    if any(abs(a - 1.0) < 1e-12 for a in alpha_grid):
        items.extend(_g_class_items(order))

    for alpha in alpha_grid:
        if 0.0 <= alpha < 1.0:
            items.extend(_convex_items(float(alpha), order))

    return items


def suite_report(checks: list[BoundCheck]) -> dict:
    violated = [c for c in checks if c.status == "violated"]
    return {
        "total": len(checks),
        "violated": len(violated),
        "checks": [c.to_dict() for c in checks],
    }
