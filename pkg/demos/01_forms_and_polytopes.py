"""
Forms, group action, and state polytopes
========================================

A homogeneous form in r+1 variables is stored as a sparse map from
exponent vectors to rational coefficients.  Its state polytope is the
convex hull of those exponent vectors, living on the hyperplane where
the coordinates sum to the degree.
"""

from fractions import Fraction

from hypermult import (
    Frame,
    HomogeneousForm,
    ProjPoint,
    act,
    barycenter,
    multiplicity_at,
    nearest_point,
    parse_form,
    point_image,
)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


# the plane cubic x0*x1*x2 + x1^3, written in the form file format
cubic = parse_form(
    """
    r=2 d=3
    1  1 1 1
    1  0 3 0
    """
)
print("cubic:", cubic)
print("support:", cubic.support())

# multiplicity at a point is the order of vanishing there; the cubic is
# the line x1 = 0 plus the conic x0*x2 + x1^2 = 0, so it has a double
# point at [1:0:0] and is smooth at a general point of the line
print("mult at [1:0:0]:", multiplicity_at(cubic, ProjPoint.parse("1,0,0")))
print("mult at [1:0:1]:", multiplicity_at(cubic, ProjPoint.parse("1,0,1")))

# the group acts by linear substitution; a shear drags the double point
# along with the coordinates
shear = Frame(((1, 1, 0), (0, 1, 0), (0, 0, 1)))
moved = act(shear, cubic)
where = point_image(shear, ProjPoint.parse("1,0,0"))
print("sheared cubic:", moved)
print("double point lands at:", fmt(where.primitive()))
print("mult there:", multiplicity_at(moved, where))

# the barycenter of the weight simplex is where a semistable support
# centers; the exact distance from it to the hull is the basic
# instability measure
xi = barycenter(2, 3)
print("barycenter:", fmt(xi))

# a form all of whose terms are divisible by x1 keeps its hull away
# from the barycenter
lopsided = HomogeneousForm(
    2,
    3,
    {
        (0, 3, 0): Fraction(1),
        (1, 2, 0): Fraction(-2),
        (0, 1, 2): Fraction(1),
    },
)
projection = nearest_point(lopsided.support(), xi)
print("nearest hull point:", fmt(projection.q))
print("squared distance:", projection.dist_sq)
print("as hull combination:")
for exponent, weight in projection.hull_weights:
    print(f"  {weight} * {fmt(exponent)}")

# everything is a Fraction end to end, so distances compare with ==
assert projection.dist_sq == Fraction(1, 2)
