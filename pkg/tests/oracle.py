"""Independent reference implementations used only by the tests.

These deliberately avoid the code paths they check: multiplicity comes from
an affine dehomogenization instead of frames, and projections come from
either subset enumeration or random convex combinations instead of the
active-set search.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from hypermult import Frame, HomogeneousForm, ProjPoint
from hypermult._linalg import dot, norm_sq, sub, vec
from hypermult.statepoly import _affine_minimizer


def mult_oracle(f: HomogeneousForm, p: ProjPoint) -> int:
    """Multiplicity via expansion in an affine chart around p.

    Pick a chart x_i = 1 with p_i != 0, substitute x_j = u_j + p_j/p_i for
    j != i, and read off the least total degree in u with a surviving
    coefficient.  No frames, no projections.
    """
    coords = p.coords
    i = max(idx for idx, c in enumerate(coords) if c != 0)
    shifts = [coords[j] / coords[i] for j in range(len(coords))]
    # local[e_local] accumulates the expanded coefficient
    local: Dict[Tuple[int, ...], Fraction] = {}
    for e, coeff in f.terms.items():
        # expand prod_{j != i} (u_j + shift_j)^{e_j}
        partial: Dict[Tuple[int, ...], Fraction] = {(0,) * len(coords): coeff}
        for j, ej in enumerate(e):
            if j == i or ej == 0:
                continue
            expanded: Dict[Tuple[int, ...], Fraction] = {}
            for k in range(ej + 1):
                c = math.comb(ej, k) * shifts[j] ** (ej - k)
                if c == 0:
                    continue
                for mono, value in partial.items():
                    lifted = list(mono)
                    lifted[j] += k
                    key = tuple(lifted)
                    expanded[key] = expanded.get(key, Fraction(0)) + value * c
            partial = expanded
        for mono, value in partial.items():
            local[mono] = local.get(mono, Fraction(0)) + value
    degrees = [sum(mono) for mono, value in local.items() if value != 0]
    if not degrees:
        raise AssertionError("a nonzero form cannot expand to zero")
    return min(degrees)


def enum_nearest(points: Sequence[Sequence], t: Sequence) -> Fraction:
    """Exact nearest squared distance by enumerating affine subsets.

    Correct because the true nearest point lies in some affinely
    independent subset with nonnegative affine weights, and every candidate
    combination stays inside the hull, so the minimum over valid candidates
    equals the true squared distance.
    """
    pts = sorted({vec(p) for p in points})
    target = vec(t)
    dim = len(target)
    shifted = [sub(p, target) for p in pts]
    best: Optional[Fraction] = None
    for size in range(1, min(len(pts), dim + 1) + 1):
        for subset in itertools.combinations(range(len(pts)), size):
            chosen = [shifted[j] for j in subset]
            alpha = _affine_minimizer(chosen)
            if any(a < 0 for a in alpha):
                continue
            combo = [Fraction(0)] * dim
            for a, s in zip(alpha, chosen):
                for k, x in enumerate(s):
                    combo[k] += a * x
            value = norm_sq(tuple(combo))
            if best is None or value < best:
                best = value
    assert best is not None
    return best


def random_convex_combination(
    points: Sequence[Sequence], rng: random.Random
) -> Tuple[Fraction, ...]:
    pts = [vec(p) for p in points]
    raw = [rng.randint(0, 6) for _ in pts]
    if sum(raw) == 0:
        raw[rng.randrange(len(raw))] = 1
    total = sum(raw)
    combo = [Fraction(0)] * len(pts[0])
    for weight, p in zip(raw, pts):
        for k, x in enumerate(p):
            combo[k] += Fraction(weight, total) * x
    return tuple(combo)


def random_exponent(rng: random.Random, r: int, d: int) -> Tuple[int, ...]:
    cuts = sorted(rng.sample(range(d + r), r))
    prev = -1
    out = []
    for c in cuts + [d + r]:
        out.append(c - prev - 1)
        prev = c
    return tuple(out)


def random_form(rng: random.Random, r: int, d: int, max_terms: int = 4) -> HomogeneousForm:
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        coeff = Fraction(rng.choice([c for c in range(-3, 4) if c != 0]))
        terms[random_exponent(rng, r, d)] = coeff
    return HomogeneousForm(r, d, terms)


def random_point(rng: random.Random, r: int) -> ProjPoint:
    while True:
        coords = [Fraction(rng.randint(-3, 3)) for _ in range(r + 1)]
        if any(coords):
            return ProjPoint(tuple(coords))


def random_unimodular_frame(rng: random.Random, n: int, ops: int = 5) -> Frame:
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if kind == 0:
            k = rng.choice([-2, -1, 1, 2])
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-x for x in rows[i]]
    return Frame(tuple(tuple(row) for row in rows))
