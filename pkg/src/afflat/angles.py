"""Rational oriented angles and triangles: the farthest regular point of a
half-line, the minimal-denominator completion point of an angle, the complete
sextuple invariant, the side-angle-side triangle invariant, and their orbit
decisions with witness maps.
"""

import math
from fractions import Fraction
from typing import NamedTuple

from .affine import AffineSpace, affine_invariant, extend_frame
from .convexity import simplex_barycentric
from .core import (coords_in_lattice_basis, den, lift, saturated_span_basis,
                   simplex, simplex_map, unlift)
from .errors import InputError, InternalCheckError, NotInClass
from .intlinalg import rational_rank, rational_solve, xgcd
from .rationals import point, primitive, vadd, vscale, vsub
from .segments import SideInvariant, hj_chain, side_invariant


class HalfLine:
    """Rational half-line: origin plus a primitive integer direction."""

    def __init__(self, origin, direction=None, through=None):
        self.origin = point(origin)
        if (direction is None) == (through is None):
            raise InputError("give exactly one of direction or through")
        if through is not None:
            d = vsub(point(through), self.origin)
        else:
            d = point(direction)
        self.direction = primitive(d)
        if len(self.direction) != len(self.origin):
            raise InputError("direction dimension mismatch")

    @property
    def dim(self):
        return len(self.origin)

    def parameter(self, x):
        """t >= 0 with x = origin + t*direction, or None off the half-line."""
        t = None
        for xc, oc, dc in zip(point(x), self.origin, self.direction):
            if dc == 0:
                if xc != oc:
                    return None
            else:
                s = Fraction(xc - oc, dc)
                if t is None:
                    t = s
                elif s != t:
                    return None
        return t if t is not None and t >= 0 else None

    def contains(self, x):
        return self.parameter(x) is not None

    def __eq__(self, other):
        return (isinstance(other, HalfLine) and self.origin == other.origin
                and self.direction == other.direction)

    def __hash__(self):
        return hash((self.origin, self.direction))


class Angle(NamedTuple):
    h: HalfLine
    k: HalfLine


class AngleInvariant(NamedTuple):
    den_v: int
    den_q: int
    den_p: int
    bary: tuple
    c: int


class TriangleInvariant(NamedTuple):
    side_vu: SideInvariant
    angle: AngleInvariant
    side_vw: SideInvariant


def angle(h, k):
    """A nontrivial rational oriented angle (common origin, distinct spans)."""
    if not isinstance(h, HalfLine):
        h = HalfLine(*h)
    if not isinstance(k, HalfLine):
        k = HalfLine(*k)
    if h.dim != k.dim:
        raise InputError("half-line dimensions differ")
    if h.dim < 2:
        raise NotInClass("angles need ambient dimension >= 2")
    if h.origin != k.origin:
        raise InputError("half-lines have different origins")
    if rational_rank([h.direction, k.direction]) != 2:
        raise NotInClass("trivial angle: the half-lines span the same line")
    return Angle(h, k)


def max_regular_point(h):
    """The farthest point of the half-line forming a regular segment with
    its origin; equivalently the one of minimal denominator."""
    v = h.origin
    lv = lift(v)
    w0 = tuple(h.direction) + (0,)
    basis = saturated_span_basis([lv, w0])
    cv = coords_in_lattice_basis(basis, lv)
    g, x, y = xgcd(cv[0], cv[1])
    u = (-y, x)
    cw = _span_coords(basis, w0)
    det = cv[0] * cw[1] - cv[1] * cw[0]
    beta_u = Fraction(cv[0] * u[1] - cv[1] * u[0], det)
    alpha_u = Fraction(u[0] * cw[1] - u[1] * cw[0], det)
    eps = 1 if beta_u > 0 else -1
    alpha = eps * alpha_u
    k = math.floor(-alpha) + 1
    z = (eps * u[0] + k * cv[0], eps * u[1] + k * cv[1])
    amb = vadd(vscale(z[0], basis[0]), vscale(z[1], basis[1]))
    q = unlift(amb)
    if h.parameter(q) is None:
        raise InternalCheckError("computed point left the half-line")
    return q


def _span_coords(basis, v):
    sol = rational_solve(list(zip(*basis)), v)
    if sol is None:
        raise InternalCheckError("vector outside the sublattice span")
    return sol


def min_den_completion(ang):
    """The minimal-denominator rational point of the angle's convex region
    that completes (v, q_H) to a regular triangle, nearest to the second arm.

    Candidate lifts are +-s + alpha*lift(v) + beta*lift(q_H) for a basis
    completion s of the rank-3 sublattice of the angle's plane; the region
    pins the sign, the minimal achievable last coordinate pins the
    denominator, and distance to K is monotone along the candidate line, so
    the nearest candidate is the first admissible one.
    """
    h, k = ang
    v = h.origin
    q = max_regular_point(h)
    lv, lq = lift(v), lift(q)
    wh = tuple(h.direction) + (0,)
    wk = tuple(k.direction) + (0,)
    basis = saturated_span_basis([lv, wh, wk])
    if len(basis) != 3:
        raise InternalCheckError("angle plane has the wrong homogeneous rank")
    cv = coords_in_lattice_basis(basis, lv)
    cq = coords_in_lattice_basis(basis, lq)
    from .intlinalg import complete_basis
    s = complete_basis([cv, cq], 3)[2]

    cwh = _span_coords(basis, wh)
    cwk = _span_coords(basis, wk)

    def frame_coords(z3):
        rows = list(zip(cv, cwh, cwk))
        sol = rational_solve(rows, z3)
        if sol is None:
            raise InternalCheckError("frame decomposition failed")
        return sol  # (a, b, c) over (lift(v), dir H, dir K)

    a_s, b_s, c_s = frame_coords(s)
    if c_s == 0:
        raise InternalCheckError("completion vector lies in the half-line plane")
    eps = 1 if c_s > 0 else -1
    dv, dq = den(v), den(q)
    s_amb = vadd(vadd(vscale(s[0], basis[0]), vscale(s[1], basis[1])),
                 vscale(s[2], basis[2]))
    sl = s_amb[-1]
    _, b_q, _ = frame_coords(cq)
    if b_q <= 0:
        raise InternalCheckError("q_H decomposes with a nonpositive H-coefficient")
    beta_min = math.ceil(Fraction(-eps * b_s, b_q))
    g = math.gcd(dv, dq)
    r = (eps * sl) % g
    D = r if r >= 1 else g
    # beta solves dq*beta = D - eps*sl (mod dv)
    target = D - eps * sl
    step = dv // g
    _, inv, _ = xgcd(dq // g, step)
    beta0 = ((target // g) * inv) % step if step > 1 else 0
    beta = beta0 + step * math.ceil(Fraction(beta_min - beta0, step))
    alpha_num = D - eps * sl - beta * dq
    if alpha_num % dv:
        raise InternalCheckError("congruence bookkeeping failed")
    alpha = alpha_num // dv
    z = tuple(eps * s[i] + alpha * cv[i] + beta * cq[i] for i in range(3))
    amb = vadd(vadd(vscale(z[0], basis[0]), vscale(z[1], basis[1])),
               vscale(z[2], basis[2]))
    p = unlift(amb)
    if den(p) != D:
        raise InternalCheckError("completion point has the wrong denominator")
    return p


def angle_invariant(ang):
    """The complete sextuple: denominators of the origin, of q_H and of
    p_HK, the first two barycentric coordinates of q_K w.r.t. the ordered
    triangle (v, q_H, p_HK), and c of the angle's plane."""
    h, k = ang
    v = h.origin
    q_h = max_regular_point(h)
    q_k = max_regular_point(k)
    p = min_den_completion(ang)
    lam = simplex_barycentric((v, q_h, p), q_k)
    if lam is None:
        raise InternalCheckError("q_K left the angle plane")
    plane = AffineSpace([v, vadd(v, h.direction), vadd(v, k.direction)])
    c = affine_invariant(plane).c
    return AngleInvariant(den(v), den(q_h), den(p), (lam[0], lam[1]), c)


def angle_equivalence(a1, a2):
    """A map theta with theta(H) = H' and theta(K) = K', or None when the
    angle invariants differ."""
    if a1.h.dim != a2.h.dim:
        raise InputError("ambient dimensions differ")
    if angle_invariant(a1) != angle_invariant(a2):
        return None
    r1 = simplex((a1.h.origin, max_regular_point(a1.h), min_den_completion(a1)))
    r2 = simplex((a2.h.origin, max_regular_point(a2.h), min_den_completion(a2)))
    c1, ext1 = extend_frame(r1)
    c2, ext2 = extend_frame(r2)
    if c1 != c2:
        raise InternalCheckError("matched angles disagree on the extension denominator")
    g = simplex_map(r1 + ext1, r2 + ext2)
    if g(max_regular_point(a1.k)) != max_regular_point(a2.k):
        raise InternalCheckError("witness map does not carry the second arm")
    return g


def triangle(u, v, w):
    """Oriented rational triangle u -> v -> w; the angle vertex is v."""
    pu, pv, pw = point(u), point(v), point(w)
    if len({len(pu), len(pv), len(pw)}) != 1:
        raise InputError("vertex dimensions differ")
    if rational_rank([vsub(pu, pv), vsub(pw, pv)]) != 2:
        raise NotInClass("degenerate triangle: vertices are collinear")
    return (pu, pv, pw)


def triangle_invariant(tri):
    """Side-angle-side invariant (side v->u, angle at v, side v->w)."""
    u, v, w = triangle(*tri)
    ang = angle(HalfLine(v, through=u), HalfLine(v, through=w))
    return TriangleInvariant(side_invariant(v, u), angle_invariant(ang),
                             side_invariant(v, w))


def triangle_equivalence(t1, t2):
    """A map carrying (u, v, w) onto (u', v', w'), or None when the triangle
    invariants differ."""
    u1, v1, w1 = triangle(*t1)
    u2, v2, w2 = triangle(*t2)
    if len(u1) != len(u2):
        raise InputError("ambient dimensions differ")
    if triangle_invariant((u1, v1, w1)) != triangle_invariant((u2, v2, w2)):
        return None
    g = angle_equivalence(angle(HalfLine(v1, through=u1), HalfLine(v1, through=w1)),
                          angle(HalfLine(v2, through=u2), HalfLine(v2, through=w2)))
    if g is None:
        raise InternalCheckError("equal triangle invariants but unequal angles")
    for x, y in zip(hj_chain(v1, u1), hj_chain(v2, u2)):
        if g(x) != y:
            raise InternalCheckError("witness map does not carry the first side")
    for x, y in zip(hj_chain(v1, w1), hj_chain(v2, w2)):
        if g(x) != y:
            raise InternalCheckError("witness map does not carry the second side")
    if g(u1) != u2 or g(v1) != v2 or g(w1) != w2:
        raise InternalCheckError("witness map does not carry the vertices")
    return g
