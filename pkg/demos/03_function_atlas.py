"""The function catalog and its text DSL.

Each spec names a normalized analytic function on the unit disk.  Specs
parse from and render to a small text grammar, expand to Taylor series,
evaluate pointwise, and (where known) report their logarithmic
coefficients in closed form.
"""

import numpy as np

from logcoef import (
    eval_at,
    gamma_closed_form,
    log_coefficients,
    parse_spec,
    render,
    taylor_of,
)

SPECS = [
    "koebe(theta=0)",
    "g_lambda(lambda=0.5)",
    "f_lambda(lambda=0.5)",
    "f0()",
    "f1()",
    "g_family(n=3)",
    "k_alpha(alpha=0.25)",
    "half_plane()",
    "rational(num=[0,1], den=[1,-2,1])",
]

for text in SPECS:
    spec = parse_spec(text)
    t = taylor_of(spec, 5)
    print(f"{render(spec):38s} a2..a5 = {np.round(t.coeffs.real[2:], 6)}")

print()
print("pointwise values at z = 0.5:")
for text in ("koebe(theta=0)", "f_lambda(lambda=1.0)", "half_plane()"):
    print(f"  {text: <28} f(0.5) = {eval_at(parse_spec(text), 0.5)}")

print()
print("logarithmic coefficients: series route vs closed form, g_lambda(0.5):")
spec = parse_spec("g_lambda(lambda=0.5)")
prof = log_coefficients(spec, 6)
for n, g in enumerate(prof.gammas.real, start=1):
    closed = gamma_closed_form(spec, n).real
    print(f"  gamma_{n} = {g:.12f}   closed form {closed:.12f}   diff {abs(g - closed):.1e}")

print()
print("the lambda=1 member of the equality family IS the Koebe function:")
a = taylor_of(parse_spec("g_lambda(lambda=1.0)"), 8).coeffs
b = taylor_of(parse_spec("koebe(theta=0)"), 8).coeffs
print("  max coefficient difference:", np.max(np.abs(a - b)))
