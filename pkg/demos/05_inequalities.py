"""The inequality suite in one run.

The central result: members of the deficiency class with parameter L have

    sum |gamma_n|^2  <=  (pi^2/6 + 2 Li2(L) + Li2(L^2)) / 4,

sharp for z/((1-z)(1-Lz)).  The suite re-verifies this with series-computed
coefficients plus closed-form tails, alongside the univalent-class limit,
the bounded-convexity chain, and the convex-order chain.
"""

from collections import Counter

from logcoef import run_suite, sharpness_terms, ulambda_l2_bound

checks = run_suite(lambda_grid=(0.25, 0.5, 0.75, 1.0), alpha_grid=(0.25, 0.5, 0.75, 1.0))

print(f"{len(checks)} checks:", dict(Counter(c.status for c in checks)))
print()

print("the sharp bound and who attains it:")
for c in checks:
    if c.name == "log_l2_sharp_ulambda":
        print(
            f"  lambda={c.params['lambda']:<5} lhs={c.lhs:.12f} rhs={c.rhs:.12f} "
            f"slack={c.slack:+.1e} [{c.status}]"
        )

print()
print("the counterexample family sits strictly below the same bound:")
for c in checks:
    if c.name == "log_l2_ulambda_counterexample":
        print(f"  lambda={c.params['lambda']:<5} slack={c.slack:+.6f} [{c.status}]")

print()
print("why: the deficit equals gap/4 with gap < 0 (a dilogarithm identity):")
for lam in (0.25, 0.5, 0.75, 1.0):
    print(f"  gap({lam}) = {sharpness_terms(lam, 0.0).gap:+.6f}")

print()
print("bound values for reference:")
for lam in (0.25, 0.5, 0.75, 1.0):
    print(f"  bound({lam}) = {ulambda_l2_bound(lam):.12f}")

violated = [c for c in checks if c.status == "violated"]
print()
print("violated checks:", len(violated))
