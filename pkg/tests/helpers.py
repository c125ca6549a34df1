"""Shared test utilities: random object generators and independent oracles.

The oracles deliberately avoid the package's decision routines: regularity
is checked by half-open parallelepiped enumeration, hulls by a monotone
chain, Legendre solvability by a plain triple loop.
"""

import math
from fractions import Fraction
from itertools import product

from afflat.core import UniAffMap, den, lift


def rand_unimodular(rng, n, steps=6, tmax=3):
    """Random element of the integer affine group via elementary row ops."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    if n > 1 and rng.random() < 0.5:
        m[0], m[1] = m[1], m[0]
    t = tuple(rng.randint(-tmax, tmax) for _ in range(n))
    return UniAffMap(tuple(tuple(r) for r in m), t)


def rand_point(rng, n, dmax=6, span=3):
    return tuple(Fraction(rng.randint(-span * dmax, span * dmax),
                          rng.randint(1, dmax)) for _ in range(n))


def rand_segment(rng, n, dmax=6, span=3):
    a = rand_point(rng, n, dmax, span)
    b = rand_point(rng, n, dmax, span)
    while b == a:
        b = rand_point(rng, n, dmax, span)
    return a, b


# --- parallelepiped oracle (Minkowski criterion) -------------------------

def _tiny_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _tiny_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def parallelepiped_extends(vectors):
    """Minkowski criterion: the set extends to a basis iff the half-open
    parallelepiped contains no nonzero integer point.

    Coefficients come from an integer adjugate of k independent coordinate
    rows, with exact reconstruction of the remaining rows; no fractions.
    """
    from itertools import combinations
    k = len(vectors)
    m = len(vectors[0])
    corners = []
    for mask in product((0, 1), repeat=k):
        corners.append(tuple(sum(mask[i] * vectors[i][j] for i in range(k))
                             for j in range(m)))
    lo = [min(c[j] for c in corners) for j in range(m)]
    hi = [max(c[j] for c in corners) for j in range(m)]
    mat = [[vectors[j][i] for j in range(k)] for i in range(m)]  # m x k
    sel = None
    for rows in combinations(range(m), k):
        sub = [mat[i] for i in rows]
        d = _tiny_det(sub)
        if d != 0:
            sel = (rows, sub, d)
            break
    assert sel is not None, "oracle needs independent vectors"
    rows, sub, d = sel
    adj = []
    for i in range(k):
        row = []
        for j in range(k):
            minor = [r[:i] + r[i + 1:] for t, r in enumerate(sub) if t != j]
            c = _tiny_det(minor)
            row.append(c if (i + j) % 2 == 0 else -c)
        adj.append(row)
    sign = 1 if d > 0 else -1
    dd = abs(d)
    others = [i for i in range(m) if i not in rows]
    for x in product(*[range(lo[j], hi[j] + 1) for j in range(m)]):
        if all(t == 0 for t in x):
            continue
        xsel = [x[i] for i in rows]
        y = [sign * sum(adj[i][j] * xsel[j] for j in range(k))
             for i in range(k)]
        if not all(0 <= yi < dd for yi in y):
            continue
        # x must actually lie in the span: remaining rows reconstruct
        if all(dd * x[j] == sum(mat[j][i] * y[i] for i in range(k))
               for j in others):
            return False
    return True


def regular_by_parallelepiped(simplex):
    return parallelepiped_extends([lift(v) for v in simplex])


# --- chain step oracle ----------------------------------------------------

def hj_step_oracle(x, b):
    """Smallest-denominator rational point z in conv(x, b] with conv(x, z)
    regular (regularity by the parallelepiped oracle); loops denominators
    upward until found."""
    n = len(x)
    d = tuple(bc - xc for xc, bc in zip(x, b))
    k = 0
    while True:
        k += 1
        lo = [math.ceil(min(x[i], b[i]) * k) for i in range(n)]
        hi = [math.floor(max(x[i], b[i]) * k) for i in range(n)]
        hits = []
        for combo in product(*[range(lo[i], hi[i] + 1) for i in range(n)]):
            z = tuple(Fraction(c, k) for c in combo)
            t = None
            ok = True
            for zi, xi, di in zip(z, x, d):
                if di == 0:
                    if zi != xi:
                        ok = False
                        break
                else:
                    s = (zi - xi) / di
                    if t is None:
                        t = s
                    elif s != t:
                        ok = False
                        break
            if not ok or t is None or not (0 < t <= 1):
                continue
            if den(z) != k:
                continue
            if regular_by_parallelepiped((x, z)):
                hits.append(z)
        if hits:
            assert len(hits) == 1, "minimal-denominator successor not unique"
            return hits[0]


# --- boundary-hull oracle for 1-dimensional segments ----------------------

def _hull2d(points):
    """Monotone-chain convex hull of integer 2-d points, counterclockwise."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hj_chain_by_hull(a, b):
    """Chain of conv(a, b) in R^1 read off the boundary of the hull of the
    nonzero integer points of the cone over the endpoint lifts."""
    la, lb = lift(a), lift(b)
    tri = (0, 0), la, lb

    def inside(p):
        # barycentric in conv(0, la, lb), exact
        det = la[0] * lb[1] - la[1] * lb[0]
        s = Fraction(p[0] * lb[1] - p[1] * lb[0], det)
        t = Fraction(la[0] * p[1] - la[1] * p[0], det)
        return s >= 0 and t >= 0 and s + t <= 1

    lo = [min(c[j] for c in tri) for j in range(2)]
    hi = [max(c[j] for c in tri) for j in range(2)]
    pts = []
    for x in product(range(lo[0], hi[0] + 1), range(lo[1], hi[1] + 1)):
        if x != (0, 0) and inside(x):
            pts.append(x)
    hull = _hull2d(pts)
    if len(hull) <= 2:
        path = [la, lb]
    else:
        ia, ib = hull.index(la), hull.index(lb)
        path1 = [hull[(ia + t) % len(hull)]
                 for t in range((ib - ia) % len(hull) + 1)]
        path2 = [hull[(ia - t) % len(hull)]
                 for t in range((ia - ib) % len(hull) + 1)]
        # the far side is the single direct edge; the chain is the other walk
        path = path1 if len(path1) > len(path2) else path2
    # lattice points interior to path edges belong to the chain as well
    full = [path[0]]
    for u, w in zip(path, path[1:]):
        g = math.gcd(abs(w[0] - u[0]), abs(w[1] - u[1]))
        step = ((w[0] - u[0]) // g, (w[1] - u[1]) // g)
        for t in range(1, g + 1):
            full.append((u[0] + t * step[0], u[1] + t * step[1]))
    return tuple(Fraction(p[0], p[1]) for p in full)


# --- Legendre brute force --------------------------------------------------

def legendre_brute(p, q, r):
    """Plain triple loop over the Holzer box; returns solvability."""
    bx = math.isqrt(abs(q * r))
    by = math.isqrt(abs(p * r))
    bz = math.isqrt(abs(p * q))
    for x in range(0, bx + 1):
        for y in range(0, by + 1):
            for z in range(0, bz + 1):
                if (x, y, z) == (0, 0, 0):
                    continue
                if p * x * x + q * y * y + r * z * z == 0:
                    return True
    return False
