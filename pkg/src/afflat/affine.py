"""Rational affine spaces and their complete orbit invariant (dim, d, c).

d is the least denominator of a rational point of the space; c the least
denominator of an apex completing a regular frame of the space to a regular
simplex one dimension up (1 except possibly in codimension one).  Equality of
the triple decides orbit equivalence, and matched witness simplexes produce
the witness map.
"""

import math
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from . import budget
from .convexity import AffineHull
from .core import den, is_regular, lift, simplex, simplex_map, unlift
from .errors import InputError, InternalCheckError
from .intlinalg import (complete_basis, invert_unimodular, is_part_of_basis,
                        minor_gcd, solve_integer, xgcd)
from .rationals import point


class AffineInvariant(NamedTuple):
    dim: int
    d: int
    c: int


class AffineSpace:
    """Affine span of rational points, with integer equations and a
    saturated integer direction-lattice basis."""

    def __init__(self, points):
        pts = sorted({point(p) for p in points})
        if not pts:
            raise InputError("affine space needs at least one point")
        self.points = pts
        hull = AffineHull(pts)
        self.n = hull.ambient
        self.dim = hull.dim
        self.anchor = hull.anchor
        self._hull = hull
        # integer rows (a, c) with the space equal to {x : a.x = c}
        self.equations = [(a, c) for (a, c) in hull.equations()]
        if self.dim > 0:
            from .core import saturated_span_basis
            from .rationals import primitive
            dirs = [primitive(b) for b in hull.basis]
            self.dirs = list(saturated_span_basis(dirs))
        else:
            self.dirs = []

    def contains(self, x):
        return self._hull.contains(x)

    def __repr__(self):
        return "AffineSpace(dim=%d, n=%d)" % (self.dim, self.n)


def affine_span(points):
    return AffineSpace(points)


def map_space(g, F):
    """Image of an affine space under a unimodular affine map."""
    return AffineSpace([g(p) for p in F.points])


def same_space(F, G):
    return (F.n == G.n and F.dim == G.dim
            and all(G.contains(p) for p in F.points)
            and all(F.contains(p) for p in G.points))


def _size_reduce(F, p):
    """Shift p by integer direction-lattice vectors of F to shrink its
    coordinates (denominator is unchanged, membership preserved)."""
    for _ in range(4):
        moved = False
        for b in F.dirs:
            bb = sum(t * t for t in b)
            m = round(Fraction(sum(pc * bc for pc, bc in zip(p, b)), bb))
            if m:
                p = tuple(pc - m * bc for pc, bc in zip(p, b))
                moved = True
        if not moved:
            break
    return p


def min_den_point(F):
    """A point of F of least denominator d_F.

    For k = 1, 2, ... decide whether F meets (1/k)Z^n by solving the integer
    linear system k x in Z^n, a.x = c; terminates at the latest at the
    anchor's denominator.  The result is size-reduced along the direction
    lattice to keep its coordinates small.
    """
    if not F.equations:
        return tuple(Fraction(0) for _ in range(F.n))
    k = 0
    while True:
        k += 1
        budget.check(k, "minimal denominator search")
        rows, rhs = [], []
        ok = True
        for a, c in F.equations:
            kc = k * c
            if kc.denominator != 1:
                ok = False
                break
            rows.append(list(a))
            rhs.append(kc.numerator)
        if not ok:
            continue
        y = solve_integer(rows, rhs)
        if y is not None:
            p = _size_reduce(F, tuple(Fraction(t, k) for t in y))
            if not F.contains(p):
                raise InternalCheckError("solver left the space")
            return p


def regular_frame(F, v0):
    """A regular dim(F)-simplex inside F with v0 as a vertex and every
    vertex denominator equal to den(v0) = d_F.

    Complete lift(v0) to a basis of the saturated homogeneous lattice of F;
    every basis vector shifted by multiples of lift(v0) into last coordinate
    (0, d] lands exactly at d (anything smaller would lift a point of F of
    denominator below d_F), and the shifted basis stays part of a basis of
    Z^{n+1}, so its affine correspondents are the frame.
    """
    from .core import saturated_span_basis
    v0 = point(v0)
    if not F.contains(v0):
        raise InputError("v0 does not lie in the space")
    d = den(v0)
    if den(min_den_point(F)) != d:
        raise InputError("v0 does not have the minimal denominator of the space")
    e = F.dim
    if e == 0:
        return (v0,)
    l0 = lift(v0)
    dir0 = [tuple(b) + (0,) for b in F.dirs]
    lam = saturated_span_basis([l0] + dir0)
    from .core import coords_in_lattice_basis
    c0 = coords_in_lattice_basis(lam, l0)
    full = complete_basis([c0], e + 1)

    def embed(z):
        return tuple(sum(z[i] * lam[i][j] for i in range(e + 1))
                     for j in range(len(l0)))

    lifts = []
    for cz in full[1:]:
        w = embed(cz)
        k = -((w[-1] - 1) // d)  # bring last coordinate into (0, d]
        w = tuple(wc + k * lc for wc, lc in zip(w, l0))
        if w[-1] != d:
            raise InternalCheckError("frame vector landed off the minimal denominator")
        lifts.append(w)
    frame = (v0,) + tuple(unlift(l) for l in lifts)
    if not is_regular(frame):
        raise InternalCheckError("frame lost regularity")
    for w in frame:
        if not F.contains(w) or den(w) != d:
            raise InternalCheckError("frame vertex left the space")
    return frame


def _cube_candidates(center, radius, max_den, skip_radius):
    """Yield rational points of denominator <= max_den in the cube of the
    given radius around center, in (denominator, coords)-lexicographic
    order; points inside the skip_radius cube were yielded in an earlier
    round and are suppressed."""
    n = len(center)
    for k in range(1, max_den + 1):
        ranges = [range(math.ceil((center[i] - radius) * k),
                        math.floor((center[i] + radius) * k) + 1)
                  for i in range(n)]
        for combo in product(*ranges):
            p = tuple(Fraction(t, k) for t in combo)
            if den(p) != k:
                continue  # yielded at its true denominator
            if skip_radius is not None and \
                    all(abs(a - b) <= skip_radius for a, b in zip(p, center)):
                continue
            yield p


def _search_completion(current, max_den):
    """A point whose lift extends the current vertex lifts to part of a
    basis, with denominator <= max_den.

    Once some vertex has denominator 1 an integer completion is available in
    closed form (complete the lattice basis, then shift the new vector's
    last coordinate to 1 by that vertex).  Otherwise scan expanding cubes
    around the first vertex in (denominator, coords)-lexicographic order;
    a candidate extends iff its image in the quotient by the current span
    is primitive, which is a single gcd per candidate."""
    lifts = [lift(p) for p in current]
    m = len(lifts[0])
    unit = next((l for l in lifts if l[-1] == 1), None)
    if unit is not None:
        b = complete_basis(lifts, m)[len(lifts)]
        t = 1 - b[-1]
        p = unlift(tuple(bc + t * uc for bc, uc in zip(b, unit)))
        if minor_gcd(lifts + [lift(p)], m) != 1:
            raise InternalCheckError("constructed completion is not unimodular")
        return p
    full = complete_basis(lifts, m)
    inv = invert_unimodular(list(zip(*full)))
    quot = inv[len(lifts):]
    center = current[0]
    radius = Fraction(1)
    skip = None
    rounds = 0
    while True:
        rounds += 1
        budget.check(rounds, "expanding cube search")
        for s in _cube_candidates(center, radius, max_den, skip):
            l = lift(s)
            g = 0
            for row in quot:
                g = math.gcd(g, sum(r * t for r, t in zip(row, l)))
                if g == 1:
                    break
            if g == 1:
                return s
        skip = radius
        radius *= 2


def _bezout_combination(values, target):
    """Integer coefficients k with sum k_i * values_i = target (the gcd of
    the values must divide target)."""
    g = values[0]
    coeffs = [1] + [0] * (len(values) - 1)
    for i in range(1, len(values)):
        g2, x, y = xgcd(g, values[i])
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
        g = g2
    q, r = divmod(target, g)
    if r:
        raise InternalCheckError("Bezout target not divisible by the gcd")
    return [c * q for c in coeffs]


def extend_frame(frame):
    """Extend a regular e-frame to a regular n-simplex by n-e points, all of
    denominator c of the frame's affine span.  Returns (c, extension).

    Codimension one is closed-form: completions are +-u + integer
    combinations of the frame lifts for any lattice-basis completion u, so
    the least achievable last coordinate is a modular expression.
    """
    pts = simplex(frame)
    lifts = [lift(p) for p in pts]
    n = len(pts[0])
    e = len(pts) - 1
    if not is_part_of_basis(lifts, n + 1):
        raise InputError("frame is not regular")
    if e == n:
        return 1, ()
    if e == n - 1:
        u = complete_basis(lifts, n + 1)[e + 1]
        dens = [l[-1] for l in lifts]
        g = 0
        for d in dens:
            g = math.gcd(g, d)
        options = []
        for eps in (1, -1):
            c = ((eps * u[-1] - 1) % g) + 1
            options.append((c, -eps))
        c, neg_eps = min(options)
        eps = -neg_eps
        ks = _bezout_combination(dens, c - eps * u[-1])
        stilde = tuple(eps * uc + sum(k * l[i] for k, l in zip(ks, lifts))
                       for i, uc in enumerate(u))
        s = unlift(stilde)
        if den(s) != c or minor_gcd(lifts + [stilde], n + 1) != 1:
            raise InternalCheckError("closed-form completion failed")
        return c, (s,)
    # codimension >= 2: c = 1, integer apexes found greedily
    cur = list(pts)
    ext = []
    while len(cur) < n + 1:
        s = _search_completion(cur, 1)
        cur.append(s)
        ext.append(s)
    return 1, tuple(ext)


def _invariant_with_witness(F):
    if getattr(F, "_inv_cache", None) is None:
        v0 = min_den_point(F)
        frame = regular_frame(F, v0)
        c, ext = extend_frame(frame)
        witness = frame + ext
        inv = AffineInvariant(F.dim, den(v0), c)
        if inv.dim != F.n - 1 and inv.c != 1:
            raise InternalCheckError("c must be 1 away from codimension one")
        if inv.dim == F.n - 1:
            if not (1 <= inv.c <= max(1, inv.d // 2)) or math.gcd(inv.c, inv.d) != 1:
                raise InternalCheckError("codimension-one c out of range")
        F._inv_cache = (inv, witness)
    return F._inv_cache


def c_invariant(F):
    """(c, witness): the completion denominator of F together with a regular
    n-simplex whose first dim(F)+1 vertices span F at denominator d and
    whose remaining vertices have denominator c."""
    inv, witness = _invariant_with_witness(F)
    return inv.c, witness


def affine_invariant(F):
    """The complete orbit invariant (dim, d, c) of a rational affine space."""
    return _invariant_with_witness(F)[0]


def affine_equivalence(F, G):
    """A unimodular affine map of F onto G, or None when the invariants
    differ.  The returned map is verified on the defining points."""
    if F.n != G.n:
        raise InputError("ambient dimensions differ")
    inv_f, wit_f = _invariant_with_witness(F)
    inv_g, wit_g = _invariant_with_witness(G)
    if inv_f != inv_g:
        return None
    g = simplex_map(wit_f, wit_g)
    ginv = g.inverse()
    for p in F.points:
        if not G.contains(g(p)):
            raise InternalCheckError("witness map missed the target space")
    for p in G.points:
        if not F.contains(ginv(p)):
            raise InternalCheckError("witness map inverse missed the source")
    return g
