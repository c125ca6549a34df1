"""Exact convex geometry: affine hulls, polytopes, cells, triangulations.

Everything works over Fractions.  Facets are enumerated by brute force over
vertex subsets, which is fine at the scale this package targets and keeps
every predicate exact.
"""

from fractions import Fraction
from itertools import combinations

from .errors import InputError
from .intlinalg import rational_nullspace, rational_rank, rational_solve
from .rationals import canon_primitive, point, primitive, rat, vadd, vdot, vsub


class AffineHull:
    """Affine span of rational points: an anchor plus a rational direction
    basis, with derived coordinates and integer equations."""

    def __init__(self, points):
        pts = sorted({point(p) for p in points})
        if not pts:
            raise InputError("affine hull of an empty set")
        self.ambient = len(pts[0])
        if any(len(p) != self.ambient for p in pts):
            raise InputError("mixed ambient dimensions")
        self.anchor = pts[0]
        basis = []
        rows = []
        for p in pts[1:]:
            d = vsub(p, self.anchor)
            if rational_rank(rows + [d]) > len(basis):
                basis.append(d)
                rows.append(d)
        self.basis = basis
        self.dim = len(basis)
        self._equations = None

    def coords(self, p):
        """Coordinates of p in the direction basis, or None if p is off-hull."""
        d = vsub(point(p), self.anchor)
        if not self.basis:
            return () if all(c == 0 for c in d) else None
        cols = list(zip(*self.basis))
        sol = rational_solve(cols, d)
        if sol is None:
            return None
        # rational_solve ignores inconsistent over-determination only when
        # there is none; verify exactly.
        for j in range(self.ambient):
            if sum(sol[i] * self.basis[i][j] for i in range(self.dim)) != d[j]:
                return None
        return sol

    def embed(self, coords):
        p = self.anchor
        for c, b in zip(coords, self.basis):
            p = vadd(p, tuple(c * x for x in b))
        return p

    def contains(self, p):
        # integer equations reject off-hull points without a solve
        for (a, c) in self.equations():
            if vdot(a, p) != c:
                return False
        return self.coords(p) is not None

    def equations(self):
        """Integer equations (a, c) with the hull equal to {x : a.x = c}."""
        if self._equations is None:
            if self.dim == self.ambient:
                self._equations = []
            else:
                normals = rational_nullspace(self.basis, cols=self.ambient)
                eqs = []
                for nrm in normals:
                    a = canon_primitive(nrm)
                    eqs.append((a, vdot(a, self.anchor)))
                self._equations = sorted(eqs)
        return self._equations

    def restrict_functional(self, a, c):
        """Rewrite a.x <=/=? c in hull coordinates: returns (g, h) with
        g.l <=/=? h for x = anchor + basis.l."""
        g = tuple(vdot(a, b) for b in self.basis)
        h = rat(c) - vdot(a, self.anchor)
        return g, h

    def intersect(self, other):
        """Intersection with another hull: a new AffineHull, or None if empty."""
        eqs = self.equations() + other.equations()
        if not eqs:
            return self  # both are the full space
        rows = [e[0] for e in eqs]
        rhs = [e[1] for e in eqs]
        sol = rational_solve(rows, rhs)
        if sol is None:
            return None
        for (a, c) in eqs:
            if vdot(a, sol) != c:
                return None
        null = rational_nullspace(rows, cols=self.ambient)
        pts = [point(sol)] + [vadd(sol, d) for d in null]
        return AffineHull(pts)

    def key(self):
        """Canonical hashable identity (equations plus a solved anchor)."""
        eqs = tuple(self.equations())
        if self.dim == self.ambient:
            return ("full", self.ambient)
        return eqs


def affine_rank(points):
    """Affine rank (dimension of the affine span) of a point set."""
    pts = [point(p) for p in points]
    if not pts:
        return -1
    rows = [vsub(p, pts[0]) for p in pts[1:]]
    return rational_rank(rows) if rows else 0


def _facets_in_coords(pts, e):
    """Facet inequalities (g, h), g.x <= h, of conv(pts) in R^e, full-dim.

    Candidate hyperplanes come from e-subsets via the generalized integer
    cross product (fraction-free) after clearing denominators once.
    """
    from math import lcm as _lcm
    from .intlinalg import det_int
    from .rationals import content
    scale = 1
    for p in pts:
        for c in p:
            scale = _lcm(scale, c.denominator)
    ipts = [tuple(int(c * scale) for c in p) for p in pts]
    facets = {}
    for sub in combinations(range(len(pts)), e):
        base = ipts[sub[0]]
        diffs = [tuple(a - b for a, b in zip(ipts[i], base)) for i in sub[1:]]
        n = []
        for j in range(e):
            cols = [d[:j] + d[j + 1:] for d in diffs]
            n.append(det_int(cols) if j % 2 == 0 else -det_int(cols))
        g0 = content(n)
        if g0 == 0:
            continue
        n = tuple(t // g0 for t in n)
        h = sum(a * b for a, b in zip(n, base))
        lo = hi = False
        for q in ipts:
            s = sum(a * b for a, b in zip(n, q)) - h
            if s > 0:
                hi = True
            elif s < 0:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if hi:
            n = tuple(-a for a in n)
            h = -h
        facets[(n, Fraction(h, scale))] = True
    return sorted(facets)


class Polytope:
    """Convex hull of finitely many rational points with exact V- and H-data.

    Handles lower-dimensional hulls by working in affine-hull coordinates.
    """

    def __init__(self, points):
        pts = sorted({point(p) for p in points})
        if not pts:
            raise InputError("polytope of an empty set")
        self.hull = AffineHull(pts)
        self.dim = self.hull.dim
        self._pts = pts
        self._coords = [self.hull.coords(p) for p in pts]
        if self.dim == 0:
            self.facets = []
            self.vertices = [pts[0]]
            return
        self.facets = _facets_in_coords(self._coords, self.dim)
        verts = []
        for p, c in zip(pts, self._coords):
            tight = [g for (g, h) in self.facets if vdot(g, c) == h]
            if tight and rational_rank(tight) == self.dim:
                verts.append(p)
        self.vertices = verts

    def contains(self, p):
        for (a, c) in self.hull.equations():
            if vdot(a, p) != c:
                return False
        c = self.hull.coords(p)
        if c is None:
            return False
        return all(vdot(g, c) <= h for (g, h) in self.facets)

    def ambient_facets(self):
        """Facet inequalities (a, c) in ambient coordinates (a integer,
        meaningful within the affine hull)."""
        out = []
        basis = self.hull.basis
        anchor = self.hull.anchor
        gram = [[vdot(b1, b2) for b2 in basis] for b1 in basis]
        for (g, h) in self.facets:
            # want amb with amb . (x - anchor) = g . coords(x) on the hull;
            # amb = sum a_i basis_i with Gram . a = g does it.
            a = rational_solve(gram, g)
            amb = tuple(sum(a[i] * basis[i][j] for i in range(len(basis)))
                        for j in range(self.hull.ambient))
            off = h + vdot(amb, anchor)
            scaled = primitive(amb)  # orientation-preserving
            factor = None
            for x, y in zip(scaled, amb):
                if y != 0:
                    factor = rat(x) / y
                    break
            out.append((scaled, off * factor))
        return sorted(out)

    def barycenter(self):
        n = len(self.vertices)
        acc = self.vertices[0]
        for v in self.vertices[1:]:
            acc = vadd(acc, v)
        return tuple(c / n for c in acc)


def simplex_barycentric(vertices, x):
    """Barycentric coordinates of x w.r.t. affinely independent vertices,
    or None when x is outside the affine span."""
    rows = [list(col) for col in zip(*vertices)]
    rows.append([Fraction(1)] * len(vertices))
    rhs = list(point(x)) + [Fraction(1)]
    lam = rational_solve(rows, rhs)
    if lam is None:
        return None
    for i, r in enumerate(rows):
        if sum(a * b for a, b in zip(r, lam)) != rhs[i]:
            return None
    return lam


def simplex_contains(vertices, x):
    lam = simplex_barycentric(vertices, x)
    return lam is not None and all(l >= 0 for l in lam)


def simplex_tester(vertices):
    """Membership predicate for one simplex with the barycentric functionals
    precomputed; much cheaper than solving per query point."""
    verts = [point(v) for v in vertices]
    n = len(verts[0])
    d = len(verts) - 1
    rows = [list(col) for col in zip(*verts)] + [[Fraction(1)] * (d + 1)]
    chosen, idx = [], []
    for i, r in enumerate(rows):
        if rational_rank(chosen + [r]) > len(chosen):
            chosen.append(r)
            idx.append(i)
        if len(chosen) == d + 1:
            break
    funcs = []
    for i in range(d + 1):
        e = [1 if t == i else 0 for t in range(d + 1)]
        coeff = rational_solve(list(zip(*chosen)), e)
        w = [Fraction(0)] * n
        beta = Fraction(0)
        for c, j in zip(coeff, idx):
            if j < n:
                w[j] += c
            else:
                beta += c
        funcs.append((tuple(w), beta))

    def contains(x):
        lam = [vdot(w, x) + beta for (w, beta) in funcs]
        if any(l < 0 for l in lam):
            return False
        # the functionals only solve a row subset; verify x is on the hull
        if sum(lam) != 1:
            return False
        for j in range(n):
            if sum(lam[i] * verts[i][j] for i in range(d + 1)) != x[j]:
                return False
        return True

    return contains


def clip_simplex(simp, g, h, side):
    """Simplexes covering simp /\\ {side*(g.x - h) >= 0} (closed half).

    Recursive cone construction: pick the least strictly-positive vertex w,
    cone it over the triangulated hyperplane slice and over the clipped
    facets not containing w.  Every output is a simplex of the input's
    dimension with vertices among the input vertices and edge crossings.
    """
    vals = [side * (vdot(g, v) - h) for v in simp]
    if all(v >= 0 for v in vals):
        return [tuple(simp)]
    if all(v <= 0 for v in vals):
        return []
    w = min(v for v, val in zip(simp, vals) if val > 0)
    wi = simp.index(w)
    pieces = set()
    slice_pts = _slice_points(simp, g, h)
    if slice_pts:
        for t in placing_triangulation(slice_pts):
            if len(t) == len(simp) - 1:
                pieces.add(tuple(sorted((w,) + t)))
    for j in range(len(simp)):
        if j == wi:
            continue
        facet = simp[:j] + simp[j + 1:]
        for t in clip_simplex(facet, g, h, side):
            pieces.add(tuple(sorted((w,) + t)))
    return sorted(pieces)


def _slice_points(simp, g, h):
    """Vertices of simp /\\ {g.x = h}: zero vertices plus edge crossings."""
    vals = [vdot(g, v) - h for v in simp]
    pts = [v for v, s in zip(simp, vals) if s == 0]
    for i in range(len(simp)):
        for j in range(i + 1, len(simp)):
            si, sj = vals[i], vals[j]
            if (si > 0 > sj) or (si < 0 < sj):
                t = si / (si - sj)
                pts.append(tuple(a + t * (b - a)
                                 for a, b in zip(simp[i], simp[j])))
    return sorted(set(pts))


def split_spanning(pts, g, h):
    """Split a convex spanning set by the hyperplane g.x = h.

    Returns (below, above): spanning sets of the two closed halves (either
    may be None when empty).  Crossing points are added so each returned
    set's hull is exactly the corresponding half; sets that grow too large
    are pruned back to their hull vertices.
    """
    neg, pos, on = [], [], []
    for p in pts:
        s = vdot(g, p) - h
        (neg if s < 0 else pos if s > 0 else on).append(p)
    if not neg:
        return None, pts
    if not pos:
        return pts, None
    cross = []
    for p in pos:
        sp = vdot(g, p) - h
        for q in neg:
            sq = vdot(g, q) - h
            t = sp / (sp - sq)
            cross.append(tuple(a + t * (b - a) for a, b in zip(p, q)))
    cross = sorted(set(cross))
    below = sorted(set(neg + on + cross))
    above = sorted(set(pos + on + cross))
    cap = 4 * (len(pts[0]) + 1)
    if len(below) > cap:
        below = sorted(Polytope(below).vertices)
    if len(above) > cap:
        above = sorted(Polytope(above).vertices)
    return below, above


def placing_triangulation(pts):
    """Triangulate conv(pts) by coning from the lexicographically least
    vertex onto recursively triangulated facets.

    pts live in R^e with full-dimensional hull (dim == affine rank).  Returns
    a list of simplexes, each a tuple of points.  Facet triangulations depend
    only on the facet's vertex set, so adjacent cells glue compatibly.
    """
    poly = Polytope(pts)
    verts = sorted(poly.vertices)
    d = poly.dim
    if d == 0:
        return [tuple(verts)]
    if len(verts) == d + 1:
        return [tuple(verts)]
    v0 = verts[0]
    c0 = poly.hull.coords(v0)
    out = []
    for (g, h) in poly.facets:
        if vdot(g, c0) == h:
            continue
        fverts = [v for v in verts if vdot(g, poly.hull.coords(v)) == h]
        for cell in placing_triangulation(fverts):
            out.append(tuple(sorted((v0,) + cell)))
    return sorted(set(out))
