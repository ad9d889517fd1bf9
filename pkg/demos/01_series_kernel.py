"""Tour of the truncated power-series kernel.

Everything else in the package computes with these arrays of Taylor
coefficients, so this demo builds a few classical series by hand and
round-trips them through the kernel operations.
"""

import numpy as np

from logcoef import (
    TruncatedSeries,
    ts_derivative,
    ts_eval,
    ts_exp,
    ts_integrate,
    ts_log,
    ts_mul,
    ts_reciprocal,
)

N = 10

# The geometric series 1/(1-z) is the reciprocal of 1 - z.
one_minus_z = TruncatedSeries([1.0, -1.0] + [0.0] * (N - 1))
geo = ts_reciprocal(one_minus_z)
print("1/(1-z)      :", geo.coeffs.real)

# Squaring it gives the Koebe function's f/z = 1/(1-z)^2 with coefficients
# 1, 2, 3, ...
koebe_fz = ts_mul(geo, geo)
print("1/(1-z)^2    :", koebe_fz.coeffs.real)

# Its logarithm is -2 log(1-z) = 2z + z^2 + (2/3)z^3 + ...; halving the
# n-th coefficient yields the logarithmic coefficients 1/n of the Koebe
# function.
lg = ts_log(koebe_fz)
print("log f/z      :", lg.coeffs.real)
print("gamma_n      :", (lg.coeffs.real / 2)[1:])

# exp inverts log exactly up to rounding.
print("exp(log) err :", np.max(np.abs(ts_exp(lg).coeffs - koebe_fz.coeffs)))

# Termwise calculus: (1 - z^2)^(1/2) integrates to z - z^3/6 - z^5/40 - ...
sqrt_series = ts_exp(0.5 * ts_log(TruncatedSeries([1.0, 0.0, -1.0] + [0.0] * (N - 2))))
antideriv = ts_integrate(sqrt_series)
print("int sqrt     :", antideriv.coeffs.real[:6])
print("d/dz back    :", ts_derivative(antideriv).coeffs.real[:6])

# Horner evaluation inside the closed unit disk.
print("sum at 0.5   :", ts_eval(geo, 0.5), "(partial geometric sum)")
