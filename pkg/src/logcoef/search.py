"""Search for extremal Taylor coefficients over Schwarz-parametrized families.

Two families are searched for large |a_n| against the conjectured bound
sum_{k<n} lambda^k:

  * the subordination superset  f/z = 1 / ((1 - z w(z)) (1 - lambda z w(z)))
    over analytic w with |w| <= 1 on the disk (it contains the whole
    bounded-deficiency class), and
  * an exact parametrization of the class itself,
    z/f = 1 - a2 z - lambda z * integral_0^z psi(t) dt with |psi| <= 1,
    filtered for z/f nonvanishing so that f is analytic.

The exact parametrization rests on the identity

    (z/f)^2 f' - 1 = -z^2 d/dz (1/f - 1/z),

which gives (z/f)^2 f' - 1 = lambda z^2 psi(z) for the construction above;
the identity is re-verified numerically in the test suite on random
rational functions, and every accepted candidate is additionally pushed
through the class-deficiency post-check as a safety net.

Candidate Schwarz functions are polynomials.  Random candidates are drawn
in the unit polydisk (plus truncated Blaschke products, which live near the
boundary where extremals sit) and rescaled by a certified upper bound on
their boundary sup, so every candidate used is genuinely bounded by one:
the bound combines the sampled boundary maximum with a second-derivative
gap estimate from the autocorrelation of the coefficients.

Searches are deterministic: a fixed chunked generation schedule from a
seeded generator, a total order on (achieved, candidate index), and a
coordinate-wise golden-section polish with a fixed sweep plan.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import atlas, membership
from .series import TruncatedSeries, reciprocal_raw

SCHWARZ_GATE_TOL = 1e-10  # sampled boundary sup may exceed 1 by at most this
VALIDATION_SAMPLES = 2048  # boundary samples for the public validation gate
CERT_SAMPLES = 1024  # boundary samples inside the candidate generator
NONVANISHING_MIN = 1e-6 * (1.0 - 1e-3)  # keeps the boundary extremal admissible
POSTCHECK_RADIUS = 0.99
POSTCHECK_TOL = 1e-6
_NV_RADII = (0.3, 0.6, 0.9, 0.99, 0.999)
_NV_ANGLES = 128
_CHUNK = 256
_POLY_PER_CHUNK = 192  # remainder of each chunk is Blaschke-truncation draws
_MAX_POLY_DEGREE = 6
_BLASCHKE_TRUNC = 24
_BLASCHKE_MAX_ZEROS = 3
_BLASCHKE_ZERO_RADIUS = 0.95
_POLISH_SWEEPS = 3
_POLISH_ITERS = 12  # golden-section evaluations per coordinate line
_POLISH_STEPS = (0.25, 0.08, 0.02)


class SearchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Schwarz-function validation.

@dataclass(frozen=True)
class SchwarzParams:
    """Polynomial w(z) = c1 + c2 z + ... with certified |w| <= 1 + tol."""

    coeffs: tuple[complex, ...]
    validated: bool = False


@dataclass(frozen=True)
class ExactUParams:
    lam: float
    a2: complex
    psi: tuple[complex, ...]
    validated: bool = False
    nonvanishing_ok: bool = False


def _boundary_matrix(ncoeff: int, samples: int) -> np.ndarray:
    theta = 2.0 * math.pi * np.arange(samples) / samples
    return np.exp(1j * np.outer(theta, np.arange(ncoeff)))


_MATRIX_CACHE: dict = {}


def _cached_matrix(ncoeff: int, samples: int) -> np.ndarray:
    key = (ncoeff, samples)
    if key not in _MATRIX_CACHE:
        _MATRIX_CACHE[key] = _boundary_matrix(ncoeff, samples)
    return _MATRIX_CACHE[key]


def boundary_sup(coeffs, samples: int = VALIDATION_SAMPLES) -> float:
    """max |w| over `samples` equispaced boundary points."""
    c = np.asarray(coeffs, dtype=np.complex128)
    return float(np.max(np.abs(_cached_matrix(c.size, samples) @ c)))


def validate_schwarz(coeffs, samples: int = VALIDATION_SAMPLES) -> SchwarzParams:
    """Gate a polynomial as a Schwarz function candidate.

    The boundary sup over at least 1024 samples must not exceed 1 by more
    than the gate tolerance; anything larger is rejected.
    """
    if samples < 1024:
        raise SearchError("validation needs at least 1024 boundary samples")
    coeffs = tuple(complex(c) for c in coeffs)
    if not coeffs:
        raise SearchError("empty coefficient list")
    sup = boundary_sup(coeffs, samples)
    if not sup <= 1.0 + SCHWARZ_GATE_TOL:
        raise SearchError(f"boundary sup {sup:.12g} exceeds 1")
    return SchwarzParams(coeffs=coeffs, validated=True)


def certified_sup_bound(matrix_rows: np.ndarray, batch: np.ndarray) -> np.ndarray:
    """Upper bound on the true boundary sup for each row of `batch`.

    Combines the sampled max of |w|^2 with a gap term (h/2)^2/2 * sup|g''|
    where g(theta) = |w(e^{i theta})|^2 and sup|g''| <= sum mu^2 |b_mu| over
    the autocorrelation b of the coefficients.
    """
    samples = matrix_rows.shape[0]
    gmax = np.max(np.abs(matrix_rows @ batch.T) ** 2, axis=0)
    d = batch.shape[1]
    m2 = np.zeros(batch.shape[0])
    for mu in range(1, d):
        beta = np.einsum("ij,ij->i", batch[:, mu:], batch[:, : d - mu].conj())
        m2 += 2.0 * mu * mu * np.abs(beta)
    h = 2.0 * math.pi / samples
    return np.sqrt(gmax + m2 * h * h / 8.0)


# ---------------------------------------------------------------------------
# Candidate generation.

def _draw_disk(rng, shape, radius=1.0):
    r = radius * np.sqrt(rng.random(shape))
    phi = 2.0 * math.pi * rng.random(shape)
    return r * np.exp(1j * phi)


def _draw_poly_batch(rng, count: int) -> np.ndarray:
    c = _draw_disk(rng, (count, _MAX_POLY_DEGREE + 1))
    deg = rng.integers(0, _MAX_POLY_DEGREE + 1, size=count)
    mask = np.arange(_MAX_POLY_DEGREE + 1)[None, :] <= deg[:, None]
    return np.where(mask, c, 0.0)


def _draw_blaschke_batch(rng, count: int) -> np.ndarray:
    """Taylor truncations of random finite Blaschke products."""
    out = np.zeros((count, _BLASCHKE_TRUNC + 1), dtype=np.complex128)
    nz = rng.integers(1, _BLASCHKE_MAX_ZEROS + 1, size=count)
    zeros = _draw_disk(rng, (count, _BLASCHKE_MAX_ZEROS), _BLASCHKE_ZERO_RADIUS)
    phases = np.exp(2j * math.pi * rng.random(count))
    ks = np.arange(_BLASCHKE_TRUNC + 1)
    for i in range(count):
        acc = np.zeros(_BLASCHKE_TRUNC + 1, dtype=np.complex128)
        acc[0] = phases[i]
        for a in zeros[i, : nz[i]]:
            # (z - a)/(1 - conj(a) z) = -a + (1-|a|^2) sum_k conj(a)^(k-1) z^k
            fac = np.empty(_BLASCHKE_TRUNC + 1, dtype=np.complex128)
            fac[0] = -a
            fac[1:] = (1.0 - abs(a) ** 2) * np.conj(a) ** ks[:-1]
            acc = np.convolve(acc, fac)[: _BLASCHKE_TRUNC + 1]
        out[i] = acc
    return out


def _certified_batch(rng, count: int) -> np.ndarray:
    """A chunk of certified-Schwarz candidate polynomials (rows)."""
    npoly = min(_POLY_PER_CHUNK, count)
    polys = _draw_poly_batch(rng, npoly)
    parts = [polys]
    nbl = count - npoly
    if nbl > 0:
        parts.append(_draw_blaschke_batch(rng, nbl))
    width = max(p.shape[1] for p in parts)
    batch = np.zeros((count, width), dtype=np.complex128)
    row = 0
    for p in parts:
        batch[row : row + p.shape[0], : p.shape[1]] = p
        row += p.shape[0]
    sup = certified_sup_bound(_cached_matrix(width, CERT_SAMPLES), batch)
    scale = np.where(sup > 1.0, sup, 1.0)
    return batch / scale[:, None]


def _trim(coeffs: np.ndarray) -> tuple[complex, ...]:
    c = np.asarray(coeffs, dtype=np.complex128)
    last = c.size - 1
    while last > 0 and c[last] == 0:
        last -= 1
    return tuple(c[: last + 1])


# ---------------------------------------------------------------------------
# Building the families.

def geometric_partial_sums(lam: float, count: int) -> np.ndarray:
    """e_k = sum_{j<=k} lambda^j for k = 0..count-1 (equals k+1 at lambda=1)."""
    return np.cumsum(lam ** np.arange(count))


def superset_denominator(lam: float, omega) -> np.ndarray:
    """(1 - z w(z)) (1 - lambda z w(z)) as a polynomial."""
    zw = np.concatenate(([0.0], np.asarray(omega, dtype=np.complex128)))
    u = -zw
    u[0] += 1.0
    v = -lam * zw
    v[0] += 1.0
    return np.convolve(u, v)


def _fz_from_denominator(q: np.ndarray, order: int) -> np.ndarray:
    qq = np.zeros(order + 1, dtype=np.complex128)
    m = min(order + 1, q.size)
    qq[:m] = q[:m]
    return reciprocal_raw(qq)


def build_superset_function(
    lam: float, omega: SchwarzParams, order: int
) -> TruncatedSeries:
    """Taylor series of f = z / ((1 - z w)(1 - lambda z w)) to `order`."""
    if not (0.0 < lam <= 1.0):
        raise SearchError("lambda must lie in (0, 1]")
    if not omega.validated:
        raise SearchError("omega has not passed Schwarz validation")
    fz = _fz_from_denominator(superset_denominator(lam, omega.coeffs), order - 1)
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1:] = fz
    return TruncatedSeries(out)


def _exact_u_filter(lam: float, a2: complex, psi) -> tuple[np.ndarray, bool, str]:
    """Denominator polynomial of z/f plus the nonvanishing verdict.

    The grid minimum alone can miss a zero sitting between the sampled
    circles (which would silently hand back a function with a pole inside
    the disk), so the polynomial's root moduli are checked as well; for a
    polynomial denominator that check is exact.
    """
    q = atlas.exact_u_denominator(lam, a2, psi)
    zs = np.concatenate(
        [
            r * np.exp(2j * math.pi * np.arange(_NV_ANGLES) / _NV_ANGLES)
            for r in _NV_RADII
        ]
    )
    vals = np.abs(np.polynomial.polynomial.polyval(zs, q))
    if float(np.min(vals)) <= NONVANISHING_MIN:
        return q, False, f"z/f modulus {np.min(vals):.3e} at grid minimum"
    qt = np.trim_zeros(q, "b")
    if qt.size > 1:
        inner = float(np.min(np.abs(np.roots(qt[::-1]))))
        if inner <= _NV_RADII[-1]:
            return q, False, f"z/f has a zero of modulus {inner:.6f} in the disk"
    return q, True, ""


def validate_exact_u(
    lam: float, a2: complex, psi, samples: int = VALIDATION_SAMPLES
) -> ExactUParams:
    """Validate an exact-parametrization candidate: psi bounded, |a2| in
    range, and z/f nonvanishing on the disk grid."""
    if not (0.0 < lam <= 1.0):
        raise SearchError("lambda must lie in (0, 1]")
    a2 = complex(a2)
    if abs(a2) > (1.0 + lam) * (1.0 + 1e-12):
        raise SearchError(f"|a2| = {abs(a2):.6g} exceeds 1 + lambda")
    w = validate_schwarz(psi, samples)
    _, ok, note = _exact_u_filter(lam, a2, w.coeffs)
    if not ok:
        raise SearchError(f"z/f vanishes on the disk grid ({note})")
    return ExactUParams(
        lam=lam, a2=a2, psi=w.coeffs, validated=True, nonvanishing_ok=True
    )


def build_exact_u_function(p: ExactUParams, order: int) -> TruncatedSeries:
    """Taylor series of f with z/f = 1 - a2 z - lambda z int_0^z psi.

    Runs the class-deficiency post-check (max |(z/f)^2 f' - 1| at r = 0.99
    must not exceed lambda + 1e-6) and raises if it fails; the derived
    parametrization never ships a function without this safety net.
    """
    if not (p.validated and p.nonvanishing_ok):
        raise SearchError("exact-parametrization candidate is not fully validated")
    spec = atlas.exact_u(p.lam, p.a2, p.psi)
    report = membership.u_deficiency(
        spec, p.lam, radii=[POSTCHECK_RADIUS], m=256
    )
    if report.measured > p.lam + POSTCHECK_TOL:
        raise SearchError(
            f"post-check failed: deficiency {report.measured:.9g} exceeds "
            f"lambda + {POSTCHECK_TOL}"
        )
    fz = _fz_from_denominator(
        atlas.exact_u_denominator(p.lam, p.a2, p.psi), order - 1
    )
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1:] = fz
    return TruncatedSeries(out)


# ---------------------------------------------------------------------------
# Coefficient extraction (search objective).

def _coeff_from_denominator(q: np.ndarray, n: int) -> complex:
    """a_n of f = z / q(z): coefficient n-1 of 1/q."""
    return complex(_fz_from_denominator(q, n - 1)[n - 1])


def _postcheck_deficiency(q: np.ndarray, lam: float) -> bool:
    """Lean version of the membership post-check: for z/f = q polynomial,
    (z/f)^2 f' - 1 = q - z q' - 1."""
    zs = POSTCHECK_RADIUS * np.exp(2j * math.pi * np.arange(256) / 256)
    qd = np.polynomial.polynomial.polyder(q)
    pv = np.polynomial.polynomial.polyval
    u = pv(zs, q) - zs * pv(zs, qd) - 1.0
    return float(np.max(np.abs(u))) <= lam + POSTCHECK_TOL


@dataclass(frozen=True)
class SearchRecord:
    lam: float
    n: int
    family: str  # "superset" | "exact_u"
    seed: int
    achieved: float
    bound: float
    margin: float
    params: dict
    evaluations: int

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "n": self.n,
            "family": self.family,
            "seed": self.seed,
            "achieved": self.achieved,
            "bound": self.bound,
            "margin": self.margin,
            "params": self.params,
            "evaluations": self.evaluations,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def conjectured_bound(lam: float, n: int) -> float:
    """The geometric partial sum sum_{k=0}^{n-1} lambda^k, summed directly."""
    return math.fsum(lam**k for k in range(n))


def _pack_params(family, coeffs, a2=None):
    def c2pair(c):
        return [c.real, c.imag]

    if family == "superset":
        return {"omega": [c2pair(c) for c in coeffs]}
    return {"a2": c2pair(a2), "psi": [c2pair(c) for c in coeffs]}


class _Best:
    """Running maximum with the (achieved, index) total order."""

    def __init__(self):
        self.achieved = -1.0
        self.index = -1
        self.payload = None

    def offer(self, achieved, index, payload):
        if achieved > self.achieved:
            self.achieved = achieved
            self.index = index
            self.payload = payload


def _golden_max(fn, lo, hi, iters):
    """Golden-section scan for a maximum of fn on [lo, hi]; returns the
    best (x, value) among all evaluated points."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    best_x, best_v = (c, fc) if fc >= fd else (d, fd)
    for _ in range(iters - 2):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
            if fc > best_v:
                best_x, best_v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
            if fd > best_v:
                best_x, best_v = d, fd
    return best_x, best_v


def search_max_coeff(
    lam: float,
    n: int,
    family: str = "superset",
    budget: int = 1000,
    seed: int = 0,
) -> SearchRecord:
    """Best |a_n| over `budget` candidate evaluations of the family.

    Start #0 is always the known extremal candidate (w = 1, or psi = -1
    with a2 = 1 + lambda, which reproduces z/((1-z)(1-lambda z))); random
    multi-start follows, and the remaining budget drives a coordinate-wise
    golden-section polish of the best candidate found.  Deterministic for
    fixed (lambda, n, family, budget, seed).
    """
    if n < 2:
        raise SearchError("coefficient index must be >= 2")
    if budget < 1:
        raise SearchError("budget must be >= 1")
    if family not in ("superset", "exact_u"):
        raise SearchError(f"unknown family {family!r}")
    if not (0.0 < lam <= 1.0):
        raise SearchError("lambda must lie in (0, 1]")

    rng = np.random.default_rng(seed)
    best = _Best()
    evals = 0

    if family == "superset":

        def evaluate(coeffs, a2=None):
            q = superset_denominator(lam, coeffs)
            return abs(_coeff_from_denominator(q, n))

        start_coeffs = np.array([1.0 + 0.0j])
        start_a2 = None
    else:

        def evaluate(coeffs, a2=None):
            q, ok, _ = _exact_u_filter(lam, a2, coeffs)
            if not ok or not _postcheck_deficiency(q, lam):
                return None
            return abs(_coeff_from_denominator(q, n))

        start_coeffs = np.array([-1.0 + 0.0j])
        start_a2 = complex(1.0 + lam)

    # Start #0: the known extremal is never lost.
    val = evaluate(start_coeffs, start_a2)
    evals += 1
    if val is not None:
        best.offer(val, 0, (start_coeffs.copy(), start_a2))

    # Random multi-start phase; the polish reserve never starves it.
    full_polish_cost = _POLISH_SWEEPS * _POLISH_ITERS * (
        2 * (_MAX_POLY_DEGREE + 1) + (2 if family == "exact_u" else 0)
    )
    polish_budget = min(full_polish_cost, max(0, (budget - 1) // 4))
    random_budget = max(0, budget - evals - polish_budget)

    index = 0
    while random_budget > 0:
        take = min(_CHUNK, random_budget)
        batch = _certified_batch(rng, _CHUNK)[:take]
        if family == "exact_u":
            a2s = _draw_disk(rng, _CHUNK, 1.0 + lam)[:take]
        for i in range(take):
            index += 1
            a2 = complex(a2s[i]) if family == "exact_u" else None
            val = evaluate(batch[i], a2)
            evals += 1
            if val is not None:
                best.offer(val, index, (batch[i].copy(), a2))
        random_budget -= take

    # Coordinate-wise golden-section polish of the best candidate found.
    remaining = budget - evals
    if best.payload is not None and remaining > 0 and polish_budget > 0:
        coeffs, a2 = best.payload
        width = _MAX_POLY_DEGREE + 1
        base = np.zeros(width, dtype=np.complex128)
        base[: min(width, coeffs.size)] = coeffs[:width]
        x = base.view(np.float64).copy()
        if family == "exact_u":
            x = np.concatenate([x, [a2.real, a2.imag]])

        def project_eval(xvec):
            nonlocal evals
            if evals >= budget:
                return None
            evals += 1
            c = xvec[: 2 * width].copy().view(np.complex128)
            sup = certified_sup_bound(
                _cached_matrix(width, CERT_SAMPLES), c[None, :]
            )[0]
            if sup > 1.0:
                c = c / sup
            if family == "exact_u":
                a2v = complex(xvec[-2], xvec[-1])
                if abs(a2v) > 1.0 + lam:
                    a2v = a2v * (1.0 + lam) / abs(a2v)
                return evaluate(c, a2v), (c, a2v)
            return evaluate(c, None), (c, None)

        for sweep in range(_POLISH_SWEEPS):
            step = _POLISH_STEPS[sweep]
            for coord in range(x.size):
                if evals + _POLISH_ITERS > budget:
                    break

                def line(t, coord=coord):
                    trial = x.copy()
                    trial[coord] = t
                    out = project_eval(trial)
                    if out is None or out[0] is None:
                        return -1.0
                    val, payload = out
                    index_now = index + evals
                    best.offer(val, index_now, payload)
                    return val

                t_best, _ = _golden_max(
                    line, x[coord] - step, x[coord] + step, _POLISH_ITERS
                )
                x[coord] = t_best

    if best.payload is None:
        raise SearchError("no valid candidate found within budget")
    coeffs, a2 = best.payload
    bound = conjectured_bound(lam, n)
    achieved = float(best.achieved)
    return SearchRecord(
        lam=lam,
        n=n,
        family=family,
        seed=seed,
        achieved=achieved,
        bound=bound,
        margin=bound - achieved,
        params=_pack_params(family, _trim(coeffs), a2),
        evaluations=evals,
    )


# ---------------------------------------------------------------------------
# Coefficient recursion identities and the cubic Schwarz-coefficient bound.

def mu_nu(lam: float) -> tuple[float, float]:
    """The cubic-functional parameters 2(1-lam^3)/(1-lam^2), (1-lam^4)/(1-lam^2)."""
    if not (0.0 < lam < 1.0):
        raise SearchError("lambda must lie in (0, 1) for the recursion relations")
    return (
        2.0 * (1.0 - lam**3) / (1.0 - lam**2),
        (1.0 - lam**4) / (1.0 - lam**2),
    )


def coefficient_recursion_residuals(lam: float, omega: SchwarzParams) -> np.ndarray:
    """Residuals of the three coefficient identities linking a_2, a_3, a_4
    of the superset family to the Schwarz coefficients c_1, c_2, c_3:

        (1-L) a2 = (1-L^2) c1
        (1-L) a3 = (1-L^2) c2 + (1-L^3) c1^2
        (1-L) a4 = (1-L^2) (c3 + mu c1 c2 + nu c1^3)
    """
    if not omega.validated:
        raise SearchError("omega has not passed Schwarz validation")
    mu, nu = mu_nu(lam)
    f = build_superset_function(lam, omega, 4).coeffs
    c = np.zeros(3, dtype=np.complex128)
    cs = omega.coeffs[:3]
    c[: len(cs)] = cs
    c1, c2, c3 = c
    r = np.array(
        [
            (1 - lam) * f[2] - (1 - lam**2) * c1,
            (1 - lam) * f[3] - ((1 - lam**2) * c2 + (1 - lam**3) * c1**2),
            (1 - lam) * f[4] - (1 - lam**2) * (c3 + mu * c1 * c2 + nu * c1**3),
        ]
    )
    return np.abs(r)


def check_prokhorov_szynal(
    samples: int, seed: int, mu: float, nu: float
) -> tuple[float, SchwarzParams]:
    """Worst ratio |c3 + mu c1 c2 + nu c1^3| / |nu| over random validated
    Schwarz functions; the bound claims ratio <= 1 inside the region
    2 <= |mu| <= 4, nu >= (mu^2 + 8)/12."""
    if not (2.0 <= abs(mu) <= 4.0 and nu >= (mu * mu + 8.0) / 12.0):
        raise SearchError(f"(mu, nu) = ({mu}, {nu}) outside the claimed region")
    rng = np.random.default_rng(seed)
    worst = -1.0
    worst_coeffs = None
    remaining = samples
    while remaining > 0:
        take = min(4096, remaining)
        batch = _certified_batch(rng, take)
        c = np.zeros((take, 3), dtype=np.complex128)
        c[:, : min(3, batch.shape[1])] = batch[:, :3]
        vals = np.abs(c[:, 2] + mu * c[:, 0] * c[:, 1] + nu * c[:, 0] ** 3) / abs(nu)
        i = int(np.argmax(vals))
        if vals[i] > worst:
            worst = float(vals[i])
            worst_coeffs = batch[i]
        remaining -= take
    return worst, SchwarzParams(coeffs=_trim(worst_coeffs), validated=True)
