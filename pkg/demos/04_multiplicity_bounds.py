"""
Sandwiching the maximal multiplicity
====================================

A stratum label, the conjugacy class of the optimal subgroup together
with its index, bounds the maximal multiplicity of points on the
hypersurface from both sides.  With the right frame family the sandwich
can pin the multiplicity exactly.
"""

import random
from fractions import Fraction

from hypermult import (
    Frame,
    HomogeneousForm,
    ProjPoint,
    StratumLabel,
    act,
    bound_check,
    default_frames,
    multiplicity_at,
    point_image,
    torus_index,
    worst_frame_search,
)

# for the d-fold line x1^d the bounds collapse: lower = upper = d
for d in range(2, 6):
    power = HomogeneousForm(1, d, {(0, d): Fraction(1)})
    label = StratumLabel.from_certificate(torus_index(power))
    result = bound_check(power, label, [ProjPoint.parse("1,0")])
    print(
        f"x1^{d}: lower {result.lower}, upper {result.upper},"
        f" max mult {result.max_mult}"
    )
    assert result.lower == result.upper == d

# a binary quintic with a triple point: x1^3 * (x0 - x1) * (x0 - 2*x1)
# moved by a random change of coordinates, singular only at the image
# of [1:0]
rng = random.Random(7)
base = HomogeneousForm(
    1,
    5,
    {
        (2, 3): Fraction(1),
        (1, 4): Fraction(-3),
        (0, 5): Fraction(2),
    },
)
g = Frame(((1, 0), (rng.randint(-3, 3), 1)))
f = act(g, base)
p = point_image(g, ProjPoint.parse("1,0"))
print("singular point moved to:", p.primitive())
print("multiplicity there:", multiplicity_at(f, p))

# the frame family always includes the mover that sends p back to the
# coordinate point, so the search sees the full triple point
frames = default_frames(1, p, budget=1)
worst, cert = worst_frame_search(f, frames)
label = StratumLabel.from_certificate(cert)
print("label:", label.lambda_rep.weights, " delta_sq:", label.delta_sq)

result = bound_check(f, label, [p])
print("lower:", result.lower)
print("upper:", result.upper)
print("max mult over candidates:", result.max_mult)
print("within:", result.within)
assert result.within
