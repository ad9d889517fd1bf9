"""Truncated complex power-series arithmetic.

A series is a vector of complex Taylor coefficients c[0..N] at a fixed
truncation order N.  Every operation takes and returns series of the same
order; all values are plain double-precision complex.  All functions are
pure and the coefficient arrays are frozen, so series can be shared freely
between threads.
"""

from __future__ import annotations

import numpy as np

# |c0| below this in ts_reciprocal triggers an ill-conditioning warning.
RECIPROCAL_CONDITION_THRESHOLD = 1e-8


class SeriesError(ValueError):
    """Structural or domain error in a series operation."""


class TruncatedSeries:
    """Immutable truncated power series sum_{k=0}^{N} c_k z^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.complex128).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise SeriesError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise SeriesError("non-finite coefficient")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        return cls(c)

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs.tobytes()))

    # Convenience arithmetic (thin wrappers; the ts_* functions are the API).
    def __add__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__


def _check_orders(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} != {b.order}")


def _wrap(raw: np.ndarray) -> TruncatedSeries:
    if not np.all(np.isfinite(raw.view(np.float64))):
        raise SeriesError("non-finite coefficient in result")
    return TruncatedSeries(raw)


# Raw-array versions.  These back the public ops and are reused by the
# search hot loops, which work on bare numpy arrays to avoid wrapper cost.

def mul_raw(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.convolve(a, b)[: a.size]


def reciprocal_raw(a: np.ndarray) -> np.ndarray:
    b = np.empty_like(a)
    b[0] = 1.0 / a[0]
    for k in range(1, a.size):
        b[k] = -np.dot(a[1 : k + 1], b[k - 1 :: -1]) / a[0]
    return b


def log_raw(a: np.ndarray) -> np.ndarray:
    # (log a)' = a'/a solved coefficient by coefficient, c0 = 1 assumed.
    b = np.zeros_like(a)
    for k in range(1, a.size):
        b[k] = a[k] - np.dot(a[1:k], (np.arange(k - 1, 0, -1) * b[k - 1 : 0 : -1])) / k
    return b


def exp_raw(a: np.ndarray) -> np.ndarray:
    # b' = a' b, c0 = 0 assumed.
    b = np.zeros_like(a)
    b[0] = 1.0
    ja = np.arange(a.size) * a
    for k in range(1, a.size):
        b[k] = np.dot(ja[1 : k + 1], b[k - 1 :: -1]) / k
    return b


def eval_raw(coeffs: np.ndarray, z):
    """Horner evaluation; scalar or array z."""
    acc = np.zeros_like(np.asarray(z), dtype=np.complex128) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


# Public operations.

def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the shared order."""
    _check_orders(a, b)
    return _wrap(mul_raw(a.coeffs, b.coeffs))


def ts_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise SeriesError("constant term is zero: series not invertible")
    if abs(c0) < RECIPROCAL_CONDITION_THRESHOLD:
        import warnings

        warnings.warn(
            f"reciprocal of series with |c0| = {abs(c0):.3g} is ill-conditioned",
            stacklevel=2,
        )
    return _wrap(reciprocal_raw(a.coeffs))


def ts_log(a: TruncatedSeries) -> TruncatedSeries:
    """log on the normalized branch: requires c0 = 1, returns c0 = 0."""
    if a.coeffs[0] != 1.0:
        raise SeriesError(f"ts_log requires c0 = 1, got {a.coeffs[0]}")
    return _wrap(log_raw(a.coeffs))


def ts_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp; requires c0 = 0, returns c0 = 1."""
    if a.coeffs[0] != 0.0:
        raise SeriesError(f"ts_exp requires c0 = 0, got {a.coeffs[0]}")
    return _wrap(exp_raw(a.coeffs))


def ts_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative.  Order is kept; the top coefficient is zeroed
    (the degree-N information is lost at this truncation)."""
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    out[:n] = a.coeffs[1:] * np.arange(1, n + 1)
    return _wrap(out)


def ts_integrate(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative with zero constant term."""
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    out[1:] = a.coeffs[:n] / np.arange(1, n + 1)
    return _wrap(out)


def ts_eval(a: TruncatedSeries, z: complex) -> complex:
    """Evaluate the truncated polynomial at a point of the closed unit disk."""
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise SeriesError("non-finite evaluation point")
    if abs(z) > 1.0 + 1e-12:
        raise SeriesError(f"|z| = {abs(z):.6g} outside the closed unit disk")
    val = complex(eval_raw(a.coeffs, z))
    if not (np.isfinite(val.real) and np.isfinite(val.imag)):
        raise SeriesError("non-finite evaluation result")
    return val


def shift_down(a: TruncatedSeries) -> TruncatedSeries:
    """Divide by z: drop c0 (which must be 0), order decreases by one."""
    if a.coeffs[0] != 0.0:
        raise SeriesError("shift_down requires c0 = 0")
    return TruncatedSeries(a.coeffs[1:])


def shift_up(a: TruncatedSeries) -> TruncatedSeries:
    """Multiply by z: order increases by one."""
    out = np.zeros(a.order + 2, dtype=np.complex128)
    out[1:] = a.coeffs
    return TruncatedSeries(out)
