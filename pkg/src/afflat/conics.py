"""Rational conics and ellipses: classification, rational points via the
Legendre equation, conjugate diameters, the minimal-index semi-diameter
pairs, the complete ellipse invariant, and orbit decision.

Ambient dimension is 2 throughout.
"""

import math
from fractions import Fraction
from typing import NamedTuple

from . import budget
from .angles import triangle_equivalence, triangle_invariant
from .core import den
from .errors import InputError, InternalCheckError, NotInClass
from .rationals import lcm, point, rat, vdot, vsub


class Conic(NamedTuple):
    """Coefficients of a x^2 + b xy + c y^2 + d x + e y + f."""
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    def __call__(self, p):
        x, y = point(p)
        return (self.a * x * x + self.b * x * y + self.c * y * y
                + self.d * x + self.e * y + self.f)

    def scaled(self, s):
        s = rat(s)
        return Conic(*(s * t for t in self))


def conic(a, b, c, d, e, f):
    co = Conic(rat(a), rat(b), rat(c), rat(d), rat(e), rat(f))
    if co.a == co.b == co.c == 0:
        raise InputError("quadratic part is zero")
    return co


ELLIPSE = "ellipse-in-E"
ELLIPSE_NO_POINT = "ellipse-no-rational-point"
NOT_ELLIPSE = "not-an-ellipse"


def _squarefree(n):
    """(s, m) with n = s * m^2 and s squarefree (sign kept on s)."""
    m = 1
    k = 2
    a = abs(n)
    while k * k <= a:
        while a % (k * k) == 0:
            a //= k * k
            m *= k
        k += 1
    return (a if n > 0 else -a), m


def legendre_solve(p, q, r):
    """A primitive integer solution of p x^2 + q y^2 + r z^2 = 0, or None.

    Decision is exact: after squarefree/pairwise-coprime reduction, a
    solution exists iff one exists within the Holzer bounds
    |x| <= sqrt|qr|, |y| <= sqrt|pr|, |z| <= sqrt|pq|.
    """
    if p == 0 or q == 0 or r == 0:
        raise InputError("all three coefficients must be nonzero")
    sol = _legendre_rational(p, q, r)
    if sol is None:
        return None
    den_lcm = 1
    for c in sol:
        den_lcm = lcm(den_lcm, rat(c).denominator)
    ints = [int(rat(c) * den_lcm) for c in sol]
    g = math.gcd(math.gcd(ints[0], ints[1]), ints[2])
    ints = tuple(t // g for t in ints)
    x, y, z = ints
    if p * x * x + q * y * y + r * z * z != 0 or (x, y, z) == (0, 0, 0):
        raise InternalCheckError("Legendre solution failed verification")
    return ints


def _legendre_rational(p, q, r):
    g = math.gcd(math.gcd(abs(p), abs(q)), abs(r))
    p, q, r = p // g, q // g, r // g
    if p > 0 and q > 0 and r > 0 or p < 0 and q < 0 and r < 0:
        return None
    # squarefree reduction: p = p0 m^2 absorbs m into x
    for i, coeff in enumerate((p, q, r)):
        s, m = _squarefree(coeff)
        if m != 1:
            reduced = [p, q, r]
            reduced[i] = s
            sub = _legendre_rational(*reduced)
            if sub is None:
                return None
            sub = list(sub)
            sub[i] = rat(sub[i]) / m
            return tuple(sub)
    # pairwise coprimality: g | p, q moves g onto r (z picks up the factor)
    for (i, j, k) in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        coeffs = [p, q, r]
        g = math.gcd(abs(coeffs[i]), abs(coeffs[j]))
        if g > 1:
            coeffs[i] //= g
            coeffs[j] //= g
            coeffs[k] *= g
            sub = _legendre_rational(*coeffs)
            if sub is None:
                return None
            sub = list(sub)
            sub[k] = rat(sub[k]) * g
            return tuple(sub)
    return _holzer_search(p, q, r)


def _holzer_search(p, q, r):
    """Exhaustive search within the Holzer bounds for squarefree, pairwise
    coprime, mixed-sign coefficients; None certifies nonexistence."""
    bx = math.isqrt(abs(q * r))
    by = math.isqrt(abs(p * r))
    for y in range(0, by + 1):
        for x in range(0, bx + 1):
            if x == 0 and y == 0:
                continue
            t = -(p * x * x + q * y * y)
            if t % r:
                continue
            w = t // r
            if w < 0:
                continue
            z = math.isqrt(w)
            if z * z == w:
                return (x, y, z)
    return None


def _center_and_form(co):
    """(O, Q, m): center, quadratic-part matrix, and the positive level m
    with the conic equal to (p-O)^T Q (p-O) = m; sign-normalized so Q is
    positive definite.  Raises NotInClass when the zeroset is not an ellipse."""
    disc = co.b * co.b - 4 * co.a * co.c
    if disc >= 0:
        raise NotInClass(NOT_ELLIPSE)
    if co.a < 0:
        co = co.scaled(-1)
    ox_oy = _solve2(((2 * co.a, co.b), (co.b, 2 * co.c)), (-co.d, -co.e))
    o = tuple(ox_oy)
    m = -co(o)
    if m <= 0:
        raise NotInClass(NOT_ELLIPSE)
    qmat = ((co.a, co.b / 2), (co.b / 2, co.c))
    return o, qmat, m, co


def _solve2(rows, rhs):
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    x = (rhs[0] * rows[1][1] - rows[0][1] * rhs[1]) / det
    y = (rows[0][0] * rhs[1] - rhs[0] * rows[1][0]) / det
    return (x, y)


def classify(co):
    """One of ellipse-in-E / ellipse-no-rational-point / not-an-ellipse."""
    try:
        return _classify_with_witness(co)[0]
    except NotInClass:
        return NOT_ELLIPSE


def _classify_with_witness(co):
    o, qmat, m, co = _center_and_form(co)
    # rational point iff alpha u^2 + beta v^2 = m has one, u = X + bY/2a
    alpha = co.a
    beta = (4 * co.a * co.c - co.b * co.b) / (4 * co.a)
    scale = lcm(lcm(alpha.denominator, beta.denominator), m.denominator)
    A = int(alpha * scale)
    B = int(beta * scale)
    C = int(m * scale)
    sol = legendre_solve(A, B, -C)
    if sol is None:
        return ELLIPSE_NO_POINT, None
    x0, y0, z0 = sol
    if z0 == 0:
        raise InternalCheckError("homogeneous solution with z = 0 on a definite form")
    u = Fraction(x0, z0)
    v = Fraction(y0, z0)
    X = u - co.b * v / (2 * co.a)
    w = (o[0] + X, o[1] + v)
    if co(w) != 0:
        raise InternalCheckError("Legendre witness does not lie on the conic")
    return ELLIPSE, w


class RationalEllipse:
    """An ellipse with rational coefficients and a rational witness point."""

    def __init__(self, co):
        cls, witness = _classify_with_witness(co)
        if cls != ELLIPSE:
            raise NotInClass(cls)
        o, qmat, m, normalized = _center_and_form(co)
        self.conic = normalized
        self.center = o
        self.qmat = qmat
        self.level = m
        self.witness = witness

    def has_conjugate_pairs(self):
        """Whether any rational conjugate semi-diameter pair exists.

        The conjugate diameter of the one through a rational point x has
        endpoints +-t rot90(Q x) with t^2 = 1/det(Q), independently of x,
        so rational pairs exist iff det(Q) is the square of a rational.
        """
        detq = self.qmat[0][0] * self.qmat[1][1] - self.qmat[0][1] * self.qmat[1][0]
        return _rational_sqrt(detq) is not None

    def on_curve(self, p):
        return self.conic(p) == 0

    def conjugacy_product(self, x, y):
        dx = vsub(point(x), self.center)
        dy = vsub(point(y), self.center)
        qdy = (self.qmat[0][0] * dy[0] + self.qmat[0][1] * dy[1],
               self.qmat[1][0] * dy[0] + self.qmat[1][1] * dy[1])
        return vdot(dx, qdy)


def ellipse(co):
    return RationalEllipse(co)


def center(ell):
    return ell.center


def rational_points(ell, max_den):
    """All rational points of the ellipse of denominator <= max_den,
    sorted by (denominator, x, y)."""
    if max_den < 0:
        raise InputError("max_den must be nonnegative")
    o, qmat, m = ell.center, ell.qmat, ell.level
    detq = qmat[0][0] * qmat[1][1] - qmat[0][1] * qmat[1][0]
    xspread2 = m * qmat[1][1] / detq  # max (x - Ox)^2 on the ellipse
    co = ell.conic
    found = set()
    for k in range(1, max_den + 1):
        bound = k * k * xspread2
        s = math.isqrt(math.floor(bound)) + 1
        base = o[0] * k
        lo = math.ceil(base - s)
        hi = math.floor(base + s)
        for i in range(lo, hi + 1):
            x = Fraction(i, k)
            # c y^2 + (b x + e) y + (a x^2 + d x + f) = 0
            B = co.b * x + co.e
            C = co.a * x * x + co.d * x + co.f
            disc = B * B - 4 * co.c * C
            if disc < 0:
                continue
            root = _rational_sqrt(disc)
            if root is None:
                continue
            for sign in ((1,) if root == 0 else (1, -1)):
                y = (-B + sign * root) / (2 * co.c)
                p = (x, y)
                if den(p) <= max_den and co(p) == 0:
                    found.add(p)
    return sorted(found, key=lambda p: (den(p), p))


def _rational_sqrt(f):
    f = rat(f)
    if f < 0:
        return None
    n = math.isqrt(f.numerator)
    d = math.isqrt(f.denominator)
    if n * n == f.numerator and d * d == f.denominator:
        return Fraction(n, d)
    return None


def conjugate_diameter(ell, diameter):
    """The conjugate of a rational diameter (pair of opposite curve points
    through the center); its endpoints are rational again."""
    p1, p2 = (point(p) for p in diameter)
    o = ell.center
    if vsub(p1, o) != vsub(o, p2):
        raise InputError("diameter is not centered")
    if not (ell.on_curve(p1) and ell.on_curve(p2)):
        raise InputError("diameter endpoints are not on the ellipse")
    u = vsub(p1, o)
    qmat = ell.qmat
    qu = (qmat[0][0] * u[0] + qmat[0][1] * u[1],
          qmat[1][0] * u[0] + qmat[1][1] * u[1])
    v = (-qu[1], qu[0])  # v with u^T Q v = 0
    vqv = (qmat[0][0] * v[0] + qmat[0][1] * v[1]) * v[0] \
        + (qmat[1][0] * v[0] + qmat[1][1] * v[1]) * v[1]
    t2 = ell.level / vqv
    t = _rational_sqrt(t2)
    if t is None:
        # happens exactly when det(Q) is not a rational square
        raise NotInClass("the conjugate diameter has irrational endpoints")
    end1 = (o[0] + t * v[0], o[1] + t * v[1])
    end2 = (o[0] - t * v[0], o[1] - t * v[1])
    first, second = sorted((end1, end2))
    return (first, second)


def ellipse_from_semidiameters(o, x, y):
    """The unique ellipse for which conv(O,x) and conv(O,y) are conjugate
    semi-diameters: (p-O)^T (M M^T)^-1 (p-O) = 1 with M = [x-O | y-O]."""
    o, x, y = point(o), point(x), point(y)
    u = vsub(x, o)
    v = vsub(y, o)
    det = u[0] * v[1] - u[1] * v[0]
    if det == 0:
        raise InputError("semi-diameter endpoints are collinear with the center")
    mmt = ((u[0] * u[0] + v[0] * v[0], u[0] * u[1] + v[0] * v[1]),
           (u[0] * u[1] + v[0] * v[1], u[1] * u[1] + v[1] * v[1]))
    d2 = mmt[0][0] * mmt[1][1] - mmt[0][1] * mmt[1][0]
    n = ((mmt[1][1] / d2, -mmt[0][1] / d2), (-mmt[0][1] / d2, mmt[0][0] / d2))
    a = n[0][0]
    b = 2 * n[0][1]
    c = n[1][1]
    d = -2 * a * o[0] - b * o[1]
    e = -b * o[0] - 2 * c * o[1]
    f = a * o[0] ** 2 + b * o[0] * o[1] + c * o[1] ** 2 - 1
    co = conic(a, b, c, d, e, f)
    if co(x) != 0 or co(y) != 0:
        raise InternalCheckError("constructed conic misses its semi-diameters")
    return co


def min_index_pairs(ell):
    """(d, pairs): the least index d = den(x) + den(y) over conjugate
    semi-diameter pairs, and all ordered pairs attaining it.

    Raises NotInClass when the ellipse has no rational conjugate pairs at
    all (non-square det(Q)); the published termination argument silently
    assumes that case away."""
    if not ell.has_conjugate_pairs():
        raise NotInClass("ellipse has no rational conjugate semi-diameter pairs")
    j = 0
    best = None
    while True:
        j += 1
        budget.check(j, "semi-diameter index search")
        pts = rational_points(ell, j)
        pairs = []
        for x in pts:
            for y in pts:
                if ell.conjugacy_product(x, y) == 0:
                    pairs.append((x, y))
        if pairs:
            d = min(den(x) + den(y) for x, y in pairs)
            if best is None or d < best:
                best = d
        if best is not None and j >= best - 1:
            final = [(x, y) for x, y in pairs if den(x) + den(y) == best]
            return best, sorted(final)


def ellipse_invariant(ell):
    """Sorted duplicate-free tuple of triangle invariants of the oriented
    triangles (O, x, y) over all minimal-index ordered conjugate pairs."""
    _, pairs = min_index_pairs(ell)
    invs = {triangle_invariant((ell.center, x, y)) for x, y in pairs}
    return tuple(sorted(invs))


def ellipse_equivalence(e1, e2):
    """A unimodular affine map of the first ellipse onto the second, or
    None when the invariants differ; verified by conic pullback."""
    inv1 = ellipse_invariant(e1)
    inv2 = ellipse_invariant(e2)
    if inv1 != inv2:
        return None
    target = inv1[0]
    t1 = _pair_with_invariant(e1, target)
    t2 = _pair_with_invariant(e2, target)
    g = triangle_equivalence(t1, t2)
    if g is None:
        raise InternalCheckError("matched triangle invariants but no map")
    if not conics_match_up_to_scalar(pullback(e2.conic, g), e1.conic):
        raise InternalCheckError("witness map does not carry the ellipse")
    return g


def _pair_with_invariant(ell, target):
    _, pairs = min_index_pairs(ell)
    for x, y in pairs:
        t = (ell.center, x, y)
        if triangle_invariant(t) == target:
            return t
    raise InternalCheckError("recorded invariant without a witness pair")


def pullback(co, g):
    """Coefficients of x -> co(g(x))."""
    (a11, a12), (a21, a22) = g.matrix
    t1, t2 = g.translation
    # substitute X = a11 x + a12 y + t1, Y = a21 x + a22 y + t2
    a = co.a * a11 * a11 + co.b * a11 * a21 + co.c * a21 * a21
    c = co.a * a12 * a12 + co.b * a12 * a22 + co.c * a22 * a22
    b = 2 * co.a * a11 * a12 + co.b * (a11 * a22 + a12 * a21) + 2 * co.c * a21 * a22
    d = (2 * co.a * a11 * t1 + co.b * (a11 * t2 + a21 * t1)
         + 2 * co.c * a21 * t2 + co.d * a11 + co.e * a21)
    e = (2 * co.a * a12 * t1 + co.b * (a12 * t2 + a22 * t1)
         + 2 * co.c * a22 * t2 + co.d * a12 + co.e * a22)
    f = co.a * t1 * t1 + co.b * t1 * t2 + co.c * t2 * t2 \
        + co.d * t1 + co.e * t2 + co.f
    return Conic(a, b, c, d, e, f)


def conics_match_up_to_scalar(c1, c2):
    ratio = None
    for u, v in zip(c1, c2):
        if (u == 0) != (v == 0):
            return False
        if u != 0:
            r = v / u
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None
