"""Probing the open coefficient bound.

For the deficiency class with parameter L the conjecture says
|a_n| <= 1 + L + ... + L^(n-1).  Proofs exist for n = 2, 3, 4; for n >= 5
the question is open.  The search maximizes |a_n| over two families:

  superset  f/z = 1/((1 - z w)(1 - L z w)) over Schwarz polynomials w
            (contains the whole class; the n <= 4 proofs run through it)
  exact_u   z/f = 1 - a2 z - L z int_0^z psi, |psi| <= 1, z/f nonvanishing
            (an exact parametrization of the class itself)

A positive finding would be a candidate with achieved > bound.  Every run
here recovers the known extremal and nothing more: the reported margins
are zero up to double-precision rounding.
"""

from logcoef import search_max_coeff

print("reproducing the proven range (superset family, n = 2, 3, 4):")
for n in (2, 3, 4):
    rec = search_max_coeff(0.6, n, "superset", budget=2000, seed=0)
    print(
        f"  n={n}: achieved={rec.achieved:.12f} bound={rec.bound:.12f} "
        f"margin={rec.margin:+.1e} ({rec.evaluations} evaluations)"
    )

print()
print("the open territory (n = 5), both families:")
for family in ("superset", "exact_u"):
    for lam in (0.3, 0.7):
        rec = search_max_coeff(lam, 5, family, budget=2000, seed=42)
        print(
            f"  {family:9s} lambda={lam}: achieved={rec.achieved:.12f} "
            f"bound={rec.bound:.12f} margin={rec.margin:+.1e}"
        )

print()
rec = search_max_coeff(0.7, 5, "exact_u", budget=500, seed=7)
print("a search record serializes to one JSON line:")
print(" ", rec.to_json_line()[:110], "...")
