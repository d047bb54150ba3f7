"""
Bands, destabilization, and multiplicity classification
=======================================================

Multiplying a form by (x1*...*xr)^N translates its support and makes
every form unstable once N is large.  For N past an explicit threshold
the instability data lands in one of d+1 disjoint bands, and the band
number recovers the multiplicity at the coordinate point without ever
dehomogenizing.
"""

from fractions import Fraction

from hypermult import (
    HomogeneousForm,
    band_contains,
    classify_at_origin,
    destabilize,
    l_squared,
    pair_minima,
    separation_threshold,
    torus_index,
    verify_theorem_main,
)

# the threshold comes from a linear-in-N separation condition per pair
print("threshold(1,2):", separation_threshold(1, 2))
print("threshold(2,3):", separation_threshold(2, 3))
for m, m_prime, least in pair_minima(2, 3):
    print(f"  pair ({m},{m_prime}) separates from N = {least}")

# destabilize the cubic with the double point and read off its band
cubic = HomogeneousForm(2, 3, {(1, 1, 1): Fraction(1), (0, 3, 0): Fraction(1)})
big_n = separation_threshold(2, 3)
moved = destabilize(cubic, big_n)
print("destabilized degree:", moved.d)

cert = torus_index(moved)
print("delta_sq:", cert.delta_sq)
hits = [
    m
    for m in range(cubic.d + 1)
    if band_contains(cert.q, cubic.r, cubic.d, big_n, m)
]
print("band radii:", [l_squared(cubic.r, cubic.d, big_n, m) for m in range(4)])
print("bands containing q:", hits)

# classify_at_origin does the above and cross-checks the direct count
report = classify_at_origin(cubic, "auto")
print("m_band:", report.m_band, " m_direct:", report.m_direct)
assert report.agreed and report.m_band == 2

# a corpus run measures agreement across every multiplicity at once
summary = verify_theorem_main(2, 3, "auto", count=10, seed=42)
print(f"verify: {summary.passed}/{summary.total} agreements")
assert summary.ok
