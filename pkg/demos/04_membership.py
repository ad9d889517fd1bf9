"""Class-membership verdicts by circle sampling.

Three functionals decide membership numerically, each sampled on circles
|z| = r with an explicit tolerance band:

    deficiency   max |(z/f)^2 f' - 1|   <  lambda
    starlike     min Re(z f'/f)         >  beta
    convexity    max Re(1 + z f''/f')   <  1 + alpha/2
"""

from logcoef import (
    f0,
    f1,
    f_lambda,
    g_class_sup,
    g_family,
    g_lambda,
    half_plane,
    koebe,
    min_re_starlike,
    u_deficiency,
)

print("deficiency class, threshold lambda:")
for spec, lam in [
    (f_lambda(0.5), 0.5),
    (g_lambda(0.5), 0.5),
    (koebe(0.0), 1.0),
    (f1(), 1.0),
]:
    rep = u_deficiency(spec, lam)
    print(
        f"  {str(spec):26s} lam={lam:.2f} measured={rep.measured:10.6f} "
        f"margin={rep.margin:+.2e} -> {rep.verdict}"
    )

print()
print("starlikeness (the counterexample f1 is univalent but NOT starlike):")
for spec, beta in [(koebe(0.0), 0.0), (half_plane(), 0.5), (f1(), 0.0)]:
    rep = min_re_starlike(spec, beta)
    print(
        f"  {str(spec):26s} beta={beta:.2f} measured={rep.measured:10.6f} -> {rep.verdict}"
    )

print()
print("bounded convexity at alpha = 1 (f0 sits exactly on the boundary):")
for spec in [f0(), g_family(2), g_family(5), half_plane()]:
    rep = g_class_sup(spec, 1.0)
    print(
        f"  {str(spec):26s} measured={rep.measured:10.6f} margin={rep.margin:+.2e} "
        f"-> {rep.verdict}"
    )
