"""Catalog of normalized analytic functions on the unit disk.

Each entry is a ``FunctionSpec`` naming one member of the families the
package works with: the Koebe function and its rotations, the extremal
family z/((1-z)(1-lambda z)), the counterexample family
z/((1-z)(1-lambda z)(1+(lambda/(1+lambda))z)), the boundary members of the
bounded-convexity class (f with f'(z) = (1-z^n)^(1/n)), the convex-order
kernels K_alpha, the half-plane map z/(1-z), explicit rationals, and the
two Schwarz-function parametrizations used by the conjecture search.

Specs are immutable values.  A small text DSL ("name(key=value, ...)")
parses to and renders from specs; it is the input format of the CLI.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as P

from .series import (
    TruncatedSeries,
    eval_raw,
    shift_down,
    ts_exp,
    ts_integrate,
    ts_log,
    ts_reciprocal,
)

NORMALIZATION_TOL = 1e-12

KINDS = (
    "koebe",
    "g_lambda",
    "f_lambda",
    "f0",
    "f1",
    "g_family",
    "k_alpha",
    "half_plane",
    "rational",
    "schwarz_superset",
    "exact_u",
)

# Below this distance from alpha = 1/2 the logarithmic branch of K_alpha
# and G_alpha is used (the generic closed form has a removable singularity).
ALPHA_HALF_SWITCH = 1e-8


class SpecError(ValueError):
    """Invalid function specification."""


class ParseError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class FunctionSpec:
    kind: str
    theta: float = 0.0
    lam: float | None = None
    alpha: float | None = None
    n: int | None = None
    a2: complex | None = None
    num: tuple[complex, ...] | None = None
    den: tuple[complex, ...] | None = None
    omega: tuple[complex, ...] | None = None
    psi: tuple[complex, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown function kind {self.kind!r}")
        if self.lam is not None and not (0.0 < self.lam <= 1.0):
            raise SpecError(f"lambda = {self.lam} out of range (0, 1]")
        if self.alpha is not None and not (0.0 <= self.alpha < 1.0):
            raise SpecError(f"alpha = {self.alpha} out of range [0, 1)")
        if self.n is not None and self.n < 1:
            raise SpecError(f"n = {self.n} must be a positive integer")
        if self.kind == "rational":
            _validate_rational(self.num, self.den)

    def __str__(self):
        return render(self)


def _validate_rational(num, den):
    if not num or not den:
        raise SpecError("rational spec needs num and den coefficient lists")
    if den[0] == 0:
        raise SpecError("rational denominator has zero constant term")
    if abs(num[0]) > NORMALIZATION_TOL:
        raise SpecError("rational numerator must vanish at 0 (f(0) = 0)")
    if len(num) < 2 or abs(num[1] / den[0] - 1.0) > NORMALIZATION_TOL:
        raise SpecError("rational fails f'(0) = 1 normalization")


# Constructors.

def koebe(theta: float = 0.0) -> FunctionSpec:
    return FunctionSpec(kind="koebe", theta=float(theta))


def g_lambda(lam: float) -> FunctionSpec:
    return FunctionSpec(kind="g_lambda", lam=float(lam))


def f_lambda(lam: float) -> FunctionSpec:
    return FunctionSpec(kind="f_lambda", lam=float(lam))


def f0() -> FunctionSpec:
    return FunctionSpec(kind="f0")


def f1() -> FunctionSpec:
    return FunctionSpec(kind="f1")


def g_family(n: int) -> FunctionSpec:
    return FunctionSpec(kind="g_family", n=int(n))


def k_alpha(alpha: float) -> FunctionSpec:
    return FunctionSpec(kind="k_alpha", alpha=float(alpha))


def half_plane() -> FunctionSpec:
    return FunctionSpec(kind="half_plane")


def rational(num, den) -> FunctionSpec:
    return FunctionSpec(
        kind="rational",
        num=tuple(complex(c) for c in num),
        den=tuple(complex(c) for c in den),
    )


def schwarz_superset(lam: float, omega) -> FunctionSpec:
    return FunctionSpec(
        kind="schwarz_superset",
        lam=float(lam),
        omega=tuple(complex(c) for c in omega),
    )


def exact_u(lam: float, a2: complex, psi) -> FunctionSpec:
    return FunctionSpec(
        kind="exact_u",
        lam=float(lam),
        a2=complex(a2),
        psi=tuple(complex(c) for c in psi),
    )


# ---------------------------------------------------------------------------
# Text DSL.

_NUM_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")

_SPEC_PARAMS = {
    "koebe": {"theta"},
    "g_lambda": {"lambda"},
    "f_lambda": {"lambda"},
    "f0": set(),
    "f1": set(),
    "g_family": {"n"},
    "k_alpha": {"alpha"},
    "half_plane": set(),
    "rational": {"num", "den"},
    "schwarz_superset": {"lambda", "omega"},
    "exact_u": {"lambda", "a2", "psi"},
}
_REQUIRED = {
    "g_lambda": {"lambda"},
    "f_lambda": {"lambda"},
    "g_family": {"n"},
    "k_alpha": {"alpha"},
    "rational": {"num", "den"},
    "schwarz_superset": {"lambda", "omega"},
    "exact_u": {"lambda", "a2", "psi"},
}
_LIST_KEYS = {"num", "den", "omega", "psi"}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        m = _IDENT_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an identifier", self.pos)
        self.pos = m.end()
        return m.group()

    def number(self) -> float:
        self.skip_ws()
        m = _NUM_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a number", self.pos)
        self.pos = m.end()
        return float(m.group())

    def complex_value(self) -> complex:
        """One literal: `a`, `bi`, or `a+bi` / `a-bi` (decimal parts only)."""
        first = self.number()
        if self.pos < len(self.text) and self.text[self.pos] == "i":
            self.pos += 1
            return complex(0.0, first)
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            save = self.pos
            m = _NUM_RE.match(self.text, self.pos)
            if m and m.end() < len(self.text) and self.text[m.end()] == "i":
                self.pos = m.end() + 1
                return complex(first, float(m.group()))
            self.pos = save
        return complex(first, 0.0)

    def value(self, key: str):
        self.skip_ws()
        if key in _LIST_KEYS:
            self.expect("[")
            items = []
            if self.peek() != "]":
                while True:
                    items.append(self.complex_value())
                    if self.peek() == ",":
                        self.expect(",")
                    else:
                        break
            self.expect("]")
            return tuple(items)
        if key == "n":
            v = self.number()
            if v != int(v):
                raise ParseError("n must be an integer", self.pos)
            return int(v)
        if key == "a2":
            return self.complex_value()
        v = self.complex_value()
        if v.imag != 0.0:
            raise ParseError(f"{key} must be real", self.pos)
        return v.real


def parse_spec(text: str) -> FunctionSpec:
    """Parse `name(key=value, ...)` into a validated spec."""
    sc = _Scanner(text)
    name_pos = sc.pos
    name = sc.ident()
    if name not in _SPEC_PARAMS:
        raise ParseError(f"unknown function name {name!r}", name_pos)
    sc.expect("(")
    args = {}
    if sc.peek() != ")":
        while True:
            key_pos = sc.pos
            key = sc.ident()
            if key not in _SPEC_PARAMS[name]:
                raise ParseError(f"unknown parameter {key!r} for {name}", key_pos)
            if key in args:
                raise ParseError(f"duplicate parameter {key!r}", key_pos)
            sc.expect("=")
            args[key] = sc.value(key)
            if sc.peek() == ",":
                sc.expect(",")
            else:
                break
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input after spec", sc.pos)
    missing = _REQUIRED.get(name, set()) - set(args)
    if missing:
        raise ParseError(f"missing parameter(s) {sorted(missing)} for {name}", sc.pos)

    if name == "koebe":
        return koebe(args.get("theta", 0.0))
    if name == "g_lambda":
        return g_lambda(args["lambda"])
    if name == "f_lambda":
        return f_lambda(args["lambda"])
    if name == "f0":
        return f0()
    if name == "f1":
        return f1()
    if name == "g_family":
        return g_family(args["n"])
    if name == "k_alpha":
        return k_alpha(args["alpha"])
    if name == "half_plane":
        return half_plane()
    if name == "rational":
        return rational(args["num"], args["den"])
    if name == "schwarz_superset":
        return schwarz_superset(args["lambda"], args["omega"])
    return exact_u(args["lambda"], args["a2"], args["psi"])


def _fmt_complex(c: complex) -> str:
    if c.imag == 0.0:
        return repr(c.real)
    if c.real == 0.0:
        return f"{c.imag!r}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"{c.real!r}{sign}{abs(c.imag)!r}i"


def _fmt_list(values) -> str:
    return "[" + ",".join(_fmt_complex(v) for v in values) + "]"


def render(spec: FunctionSpec) -> str:
    """Canonical text form; parse_spec(render(s)) == s."""
    k = spec.kind
    if k == "koebe":
        return f"koebe(theta={spec.theta!r})"
    if k == "g_lambda":
        return f"g_lambda(lambda={spec.lam!r})"
    if k == "f_lambda":
        return f"f_lambda(lambda={spec.lam!r})"
    if k in ("f0", "f1", "half_plane"):
        return f"{k}()"
    if k == "g_family":
        return f"g_family(n={spec.n})"
    if k == "k_alpha":
        return f"k_alpha(alpha={spec.alpha!r})"
    if k == "rational":
        return f"rational(num={_fmt_list(spec.num)}, den={_fmt_list(spec.den)})"
    if k == "schwarz_superset":
        return f"schwarz_superset(lambda={spec.lam!r}, omega={_fmt_list(spec.omega)})"
    return (
        f"exact_u(lambda={spec.lam!r}, a2={_fmt_complex(spec.a2)}, "
        f"psi={_fmt_list(spec.psi)})"
    )


# ---------------------------------------------------------------------------
# Rational representation f = z * A(z) / B(z).

def exact_u_denominator(lam: float, a2: complex, psi) -> np.ndarray:
    """z/f = 1 - a2 z - lam * z * integral_0^z psi(t) dt as a polynomial."""
    psi = np.asarray(psi, dtype=np.complex128)
    q = np.zeros(psi.size + 2, dtype=np.complex128)
    q[0] = 1.0
    q[1] = -a2
    q[2:] -= lam * psi / np.arange(1, psi.size + 1)
    return q


def rational_parts(spec: FunctionSpec):
    """Polynomials (A, B) with f = z A / B, or None if the spec is not
    rational (k_alpha and g_family)."""
    k = spec.kind
    if k == "koebe":
        w = cmath.exp(1j * spec.theta)
        return np.array([1.0 + 0j]), np.array([1.0, -2 * w, w * w])
    if k == "g_lambda":
        lam = spec.lam
        return np.array([1.0 + 0j]), np.array([1.0, -(1 + lam), lam], dtype=complex)
    if k == "f_lambda":
        lam = spec.lam
        b = P.polymul(
            P.polymul([1.0, -1.0], [1.0, -lam]), [1.0, lam / (1 + lam)]
        ).astype(complex)
        return np.array([1.0 + 0j]), b
    if k == "f0":
        return np.array([1.0, -0.5], dtype=complex), np.array([1.0 + 0j])
    if k == "f1":
        return np.array([1.0 + 0j]), np.array([1.0, -1.5, 0.0, 0.5], dtype=complex)
    if k == "half_plane":
        return np.array([1.0 + 0j]), np.array([1.0, -1.0], dtype=complex)
    if k == "rational":
        return (
            np.asarray(spec.num[1:], dtype=np.complex128),
            np.asarray(spec.den, dtype=np.complex128),
        )
    if k == "schwarz_superset":
        lam = spec.lam
        zw = np.concatenate(([0.0], spec.omega)).astype(np.complex128)
        u = -zw
        u[0] += 1.0  # 1 - z*omega
        v = -lam * zw
        v[0] += 1.0  # 1 - lam*z*omega
        return np.array([1.0 + 0j]), P.polymul(u, v)
    if k == "exact_u":
        return np.array([1.0 + 0j]), exact_u_denominator(spec.lam, spec.a2, spec.psi)
    return None


# ---------------------------------------------------------------------------
# Series expansion.

def _series_poly(coeffs, order: int) -> TruncatedSeries:
    out = np.zeros(order + 1, dtype=np.complex128)
    m = min(order + 1, len(coeffs))
    out[:m] = coeffs[:m]
    return TruncatedSeries(out)


@lru_cache(maxsize=512)
def fz_series(spec: FunctionSpec, order: int) -> TruncatedSeries:
    """Taylor series of f/z to the given order (constant term 1)."""
    if order < 0:
        raise SpecError("order must be nonnegative")
    k = spec.kind
    ns = np.arange(order + 1)
    if k == "koebe":
        w = cmath.exp(1j * spec.theta)
        return TruncatedSeries((ns + 1) * w**ns)
    if k == "g_lambda":
        return TruncatedSeries(np.cumsum(spec.lam**ns).astype(np.complex128))
    if k == "half_plane":
        return TruncatedSeries(np.ones(order + 1, dtype=np.complex128))
    if k == "f0":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        if order >= 1:
            c[1] = -0.5
        return TruncatedSeries(c)
    if k in ("f_lambda", "f1", "schwarz_superset", "exact_u"):
        _, b = rational_parts(spec)
        return ts_reciprocal(_series_poly(b, order))
    if k == "rational":
        a, b = rational_parts(spec)
        fz = _series_poly(a, order) * ts_reciprocal(_series_poly(b, order))
        c0 = fz.coeffs[0]
        if abs(c0 - 1.0) > NORMALIZATION_TOL:
            raise SpecError(f"f/z constant term {c0} fails normalization")
        return (1.0 / c0) * fz if c0 != 1.0 else fz
    if k == "g_family":
        n = spec.n
        base = np.zeros(order + 2, dtype=np.complex128)
        base[0] = 1.0
        if n <= order + 1:
            base[n] = -1.0
        fprime = ts_exp((1.0 / n) * ts_log(TruncatedSeries(base)))
        return shift_down(ts_integrate(fprime))
    if k == "k_alpha":
        alpha = spec.alpha
        if abs(1.0 - 2.0 * alpha) < ALPHA_HALF_SWITCH:
            # K/z = -log(1-z)/z
            return TruncatedSeries(1.0 / (ns + 1.0))
        ln = ts_log(_series_poly([1.0, -1.0], order + 1))
        u = ts_exp((2.0 * alpha - 1.0) * ln).coeffs.copy()
        u[0] = 0.0
        return TruncatedSeries(u[1:] / (1.0 - 2.0 * alpha))
    raise SpecError(f"unknown kind {k!r}")


def taylor_of(spec: FunctionSpec, order: int) -> TruncatedSeries:
    """Taylor series of f itself (c0 = 0, c1 = 1) to the given order."""
    if order < 1:
        raise SpecError("order must be >= 1")
    fz = fz_series(spec, order - 1)
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1:] = fz.coeffs
    if abs(out[1] - 1.0) > NORMALIZATION_TOL:
        raise SpecError(f"expansion fails f'(0) = 1: got {out[1]}")
    return TruncatedSeries(out)


# Evaluation order used for the variants without closed forms.
SERIES_EVAL_ORDER = 256


def eval_at(spec: FunctionSpec, z: complex) -> complex:
    """Value f(z) for |z| < 1: closed form where available, high-order
    series for the g_family variant."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise SpecError(f"|z| = {abs(z):.6g} not inside the open unit disk")
    if z == 0:
        return 0.0 + 0.0j
    k = spec.kind
    if k == "k_alpha":
        alpha = spec.alpha
        if abs(1.0 - 2.0 * alpha) < ALPHA_HALF_SWITCH:
            val = -cmath.log(1.0 - z)
        else:
            val = (cmath.exp((2 * alpha - 1) * cmath.log(1.0 - z)) - 1.0) / (
                1.0 - 2.0 * alpha
            )
    elif k == "g_family":
        val = z * complex(eval_raw(fz_series(spec, SERIES_EVAL_ORDER).coeffs, z))
    else:
        a, b = rational_parts(spec)
        val = z * complex(eval_raw(a, z)) / complex(eval_raw(b, z))
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise SpecError(f"non-finite value of {render(spec)} at {z}")
    return val


# ---------------------------------------------------------------------------
# Closed-form logarithmic coefficients.

def gamma_closed_form(spec: FunctionSpec, n: int):
    """The known closed form for gamma_n, or None when unavailable.

    For the g_family variant only the leading index n (of f_n) has a
    simple closed form, -1/(2n(n+1)); other indices return None.
    """
    if n < 1:
        raise SpecError("index n must be >= 1")
    k = spec.kind
    if k == "koebe":
        return cmath.exp(1j * n * spec.theta) / n
    if k == "g_lambda":
        return complex((1.0 + spec.lam**n) / (2.0 * n))
    if k == "f_lambda":
        lam = spec.lam
        return complex(
            0.5 * ((1.0 + lam**n) / n + (-1.0) ** n * lam**n / (n * (1.0 + lam) ** n))
        )
    if k == "f0":
        return complex(-1.0 / (n * 2.0 ** (n + 1)))
    if k == "f1":
        return complex(1.0 / n + (-1.0) ** n / (n * 2.0 ** (n + 1)))
    if k == "half_plane":
        return complex(1.0 / (2.0 * n))
    if k == "g_family" and n == spec.n:
        return complex(-1.0 / (2.0 * n * (n + 1)))
    return None
