"""
Instability certificates and worst frames
=========================================

For a diagonal one-parameter subgroup with integer weights a, the weight
of a form is the minimum of <a, e> over its support.  A form is unstable
when some subgroup gives it positive weight, and the certificate below
packages the optimal data: the nearest hull point q, the direction w,
the squared distance delta_sq, and the integer subgroup lambda.
"""

from fractions import Fraction

from hypermult import (
    Frame,
    HomogeneousForm,
    act,
    class_rep,
    default_frames,
    mu_weight,
    torus_index,
    worst_frame_search,
    ProjPoint,
)

def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


# x1^3 as a plane cubic is as unstable as it gets
triple_line = HomogeneousForm(2, 3, {(0, 3, 0): Fraction(1)})
cert = torus_index(triple_line)
print("q:", fmt(cert.q))
print("w:", fmt(cert.w))
print("delta_sq:", cert.delta_sq)
print("lambda:", cert.lam.weights)
print("scale:", cert.scale)

# the Kempf relation ties the optimizer to the geometry: the subgroup's
# weight equals scale * delta_sq, and scaling lambda scales the weight
mu = mu_weight(triple_line, cert.lam)
print("mu:", mu)
assert mu == cert.scale * cert.delta_sq
assert mu_weight(triple_line, [3 * a for a in cert.lam.weights]) == 3 * mu

# conjugacy classes of subgroups are named by their sorted weights
print("class:", class_rep(cert.lam).weights)

# a semistable form has delta_sq = 0 and no subgroup at all
fermat = HomogeneousForm(2, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
print("fermat delta_sq:", torus_index(fermat).delta_sq)

# torus data is frame dependent: a hidden double point contributes
# nothing until a frame change exposes it
hidden = act(Frame(((1, 1), (0, 1))), HomogeneousForm(1, 2, {(0, 2): Fraction(1)}))
print("hidden form:", hidden)
print("identity frame delta_sq:", torus_index(hidden).delta_sq)

frames = default_frames(1, ProjPoint.parse("1,-1"), budget=1)
worst, worst_cert = worst_frame_search(hidden, frames)
print("frames searched:", len(frames))
print("worst frame delta_sq:", worst_cert.delta_sq)
assert worst_cert.delta_sq == Fraction(2)
