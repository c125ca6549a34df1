"""Rational simplicial cones and their desingularization.

A cone is a tuple of linearly independent primitive integer generators; a fan
is a tuple of cones of equal dimension subdividing the original cone.
Desingularization subdivides stellarly at a lattice point of the half-open
fundamental parallelepiped until every cone's generators extend to a basis.
"""

from itertools import product

from .errors import InputError
from .intlinalg import is_part_of_basis, rational_rank, rational_solve
from .rationals import content, intvec


def cone(generators):
    """Normalize generators: primitive, linearly independent, sorted."""
    gens = []
    for g in generators:
        v = intvec(g)
        c = content(v)
        if c == 0:
            raise InputError("zero generator")
        gens.append(tuple(a // c for a in v))
    if rational_rank(gens) != len(gens):
        raise InputError("cone generators are linearly dependent")
    return tuple(sorted(gens))


def cone_coords(gens, v):
    """Rational coefficients of v over the generators, or None off-span."""
    cols = list(zip(*gens))
    sol = rational_solve(cols, v)
    if sol is None:
        return None
    for j in range(len(v)):
        if sum(sol[i] * gens[i][j] for i in range(len(gens))) != v[j]:
            return None
    return sol


def cone_contains(gens, v):
    sol = cone_coords(gens, v)
    return sol is not None and all(c >= 0 for c in sol)


def is_regular_cone(gens):
    return is_part_of_basis(list(gens), len(gens[0]))


def parallelepiped_points(gens):
    """Nonzero integer points of the half-open fundamental parallelepiped
    of the generators, with exact coefficient filtering."""
    m = len(gens[0])
    t = len(gens)
    corners = []
    for mask in product((0, 1), repeat=t):
        corners.append(tuple(sum(mask[i] * gens[i][j] for i in range(t))
                             for j in range(m)))
    lo = [min(c[j] for c in corners) for j in range(m)]
    hi = [max(c[j] for c in corners) for j in range(m)]
    out = []
    for combo in product(*[range(lo[j], hi[j] + 1) for j in range(m)]):
        if all(c == 0 for c in combo):
            continue
        sol = cone_coords(gens, combo)
        if sol is None:
            continue
        if all(0 <= c < 1 for c in sol):
            out.append((sol, combo))
    return out


def _subdivision_point(gens):
    """Lattice point of the parallelepiped minimizing the coefficient sum,
    ties broken lexicographically; None when the cone is regular."""
    pts = parallelepiped_points(gens)
    if not pts:
        return None
    best = min(pts, key=lambda sc: (sum(sc[0]), sc[1]))
    return best[1]


def stellar_subdivide(fan, p):
    """Replace every cone containing p by its joins with p."""
    new = []
    for c in fan:
        sol = cone_coords(c, p)
        if sol is None or any(x < 0 for x in sol):
            new.append(c)
            continue
        for i, coef in enumerate(sol):
            if coef > 0:
                rest = c[:i] + c[i + 1:]
                new.append(cone(rest + (p,)))
    return tuple(sorted(set(new)))


def desingularize(generators):
    """Regular fan subdividing the simplicial cone pos[generators].

    Stellar-subdivides at the parallelepiped point with minimal coefficient
    sum (lex ties) until every cone is regular; terminates because the
    subdivided cone's multiplicity strictly decreases.
    """
    start = cone(generators)
    fan = (start,)
    while True:
        target = None
        for c in fan:
            if not is_regular_cone(c):
                target = c
                break
        if target is None:
            return fan
        p = _subdivision_point(target)
        g = content(p)
        p = tuple(a // g for a in p)
        fan = stellar_subdivide(fan, p)


def fan_rays(fan):
    """Sorted primitive rays of a fan."""
    rays = set()
    for c in fan:
        rays.update(c)
    return tuple(sorted(rays))
