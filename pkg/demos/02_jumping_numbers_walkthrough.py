#!/usr/bin/env python3
"""Full jumping-number computation for x^4 + y^3 + x^2*y^2 over F_5.

The same computation is available from the command line:

    fptkit jn --char 5 --vars x,y "x^4 + y^3 + x^2*y^2"
"""

from fractions import Fraction

from fptkit import (
    PolyRing,
    jacobian,
    jumping_numbers_unit_interval,
    parse_polynomial,
    singularity_profile,
    test_ideal,
    test_ideal_left_limit,
)

ring = PolyRing(5, ["x", "y"])
f = parse_polynomial("x^4 + y^3 + x^2*y^2", ring)

# The Jacobian ideal is primary to the origin, so the quotient length
# bounds how many jumping numbers can appear in [0, 1).
profile = singularity_profile(f)
print(f"f = {f}  over F_5")
print(f"Jac(f) = {jacobian(f)}")
print(f"length of R/Jac(f) = {profile.ell}  ->  walk candidates with bound B = {profile.ell}")

# Walk every candidate in [0,1) in ascending order; a jumping number is a
# parameter where the test ideal drops.
report = jumping_numbers_unit_interval(f, profile.ell)
print(f"\nwalked {report.candidate_count} candidates in {report.elapsed:.1f}s")
print("parameter  ->  test ideal")
for lam, ideal in zip(report.jumping_numbers, report.test_ideals):
    print(f"  {str(lam):>6}  ->  {ideal}")
print(f"F-pure threshold: {report.fpt}")

# At a jumping number, the left limit of the family differs from the value.
for lam in (Fraction(7, 12), Fraction(4, 5)):
    left = test_ideal_left_limit(f, lam, profile.ell)
    at = test_ideal(f, lam, profile.ell).ideal
    print(f"\nat {lam}: left limit {left}  vs  value {at}")

# The huge Frobenius powers behind these answers are never expanded: the
# evaluation at 7/12 works with f^142415365 through 12 digit steps.
res = test_ideal(f, Fraction(7, 12), profile.ell)
n = -((-(5**res.stabilization_exponent) * 7) // 12)
print(f"\nstabilization exponent s = {res.stabilization_exponent}, so tau comes from f^{n}")
