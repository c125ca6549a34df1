"""Exact integer and rational linear algebra.

Column echelon form with a tracked unimodular transform does all the lattice
work: integer kernels, integer linear solves, basis completion, saturation.
Rational elimination (over Fraction) covers rank, nullspace and dense solves.
"""

import math
from fractions import Fraction
from itertools import combinations

from .errors import InputError
from .rationals import rat


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det_int(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def rational_rank(rows):
    """Rank over Q of a matrix given as a list of row sequences."""
    m = [[rat(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][j]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j] / pr[j]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rational_solve(rows, rhs):
    """Solve rows . x = rhs over Q. Returns one solution or None.

    The system may be over- or under-determined; free variables are set to 0.
    """
    m = [[rat(x) for x in r] + [rat(b)] for r, b in zip(rows, rhs)]
    cols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for j in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][j]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        m[rank] = [a / pr[j] for a in pr]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(j)
        rank += 1
    for i in range(rank, len(m)):
        if m[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(pivots):
        x[j] = m[i][cols]
    return tuple(x)


def rational_nullspace(rows, cols=None):
    """Basis of {x : rows . x = 0} over Q (list of Fraction tuples)."""
    if cols is None:
        cols = len(rows[0]) if rows else 0
    m = [[rat(x) for x in r] for r in rows]
    pivots = []
    rank = 0
    for j in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][j]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        m[rank] = [a / pr[j] for a in pr]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(j)
        rank += 1
    basis = []
    free = [j for j in range(cols) if j not in pivots]
    for j in free:
        v = [Fraction(0)] * cols
        v[j] = Fraction(1)
        for i, pj in enumerate(pivots):
            v[pj] = -m[i][j]
        basis.append(tuple(v))
    return basis


def column_echelon(rows):
    """Column echelon form of an integer matrix by unimodular column ops.

    rows: m x k integer matrix (list of row sequences).
    Returns (cols, ucols, pivots): cols are the k echelon columns (length m),
    ucols the k columns of the unimodular transform U with  A U = H, and
    pivots a list of (row, col) positions ordered top to bottom.
    """
    m = len(rows)
    k = len(rows[0]) if m else 0
    cols = [[rows[i][j] for i in range(m)] for j in range(k)]
    ucols = [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    pivots = []
    r = 0
    for i in range(m):
        if r == k:
            break
        nz = [j for j in range(r, k) if cols[j][i] != 0]
        if not nz:
            continue
        j0 = nz[0]
        for j in nz[1:]:
            a, b = cols[j0][i], cols[j][i]
            g, x, y = xgcd(a, b)
            c0, cj = cols[j0], cols[j]
            u0, uj = ucols[j0], ucols[j]
            cols[j0] = [x * p + y * q for p, q in zip(c0, cj)]
            cols[j] = [(a // g) * q - (b // g) * p for p, q in zip(c0, cj)]
            ucols[j0] = [x * p + y * q for p, q in zip(u0, uj)]
            ucols[j] = [(a // g) * q - (b // g) * p for p, q in zip(u0, uj)]
        cols[r], cols[j0] = cols[j0], cols[r]
        ucols[r], ucols[j0] = ucols[j0], ucols[r]
        if cols[r][i] < 0:
            cols[r] = [-a for a in cols[r]]
            ucols[r] = [-a for a in ucols[r]]
        pivots.append((i, r))
        r += 1
    return cols, ucols, pivots


def integer_kernel(rows, cols=None):
    """Basis of the integer kernel {x in Z^k : rows . x = 0}.

    The returned basis spans a saturated sublattice (it extends to a basis
    of Z^k), as the transform columns of an echelon form always do.
    """
    if cols is not None and not rows:
        return [tuple(1 if i == j else 0 for i in range(cols))
                for j in range(cols)]
    hcols, ucols, pivots = column_echelon(rows)
    r = len(pivots)
    return [tuple(u) for u in ucols[r:]]


def solve_integer(rows, rhs):
    """One integer solution of rows . x = rhs, or None if there is none."""
    m = len(rows)
    k = len(rows[0]) if m else 0
    if m == 0:
        return tuple([0] * k)
    hcols, ucols, pivots = column_echelon(rows)
    resid = list(rhs)
    y = [0] * k
    for i, c in enumerate(pivots):
        ri, ci = c
        piv = hcols[ci][ri]
        if resid[ri] % piv:
            return None
        q = resid[ri] // piv
        y[ci] = q
        for t in range(m):
            resid[t] -= q * hcols[ci][t]
    if any(resid):
        return None
    x = [0] * k
    for c in range(k):
        if y[c]:
            for t in range(k):
                x[t] += y[c] * ucols[c][t]
    return tuple(x)


def complete_basis(vectors, m):
    """Complete part of a basis of Z^m to a full basis.

    vectors: k linearly independent integer vectors in Z^m that extend to a
    basis (raises InputError otherwise).  Returns m vectors: the inputs
    followed by m - k completion vectors; the m x m matrix they form as
    columns has determinant +-1.
    """
    vecs = [tuple(v) for v in vectors]
    k = len(vecs)
    if k > m:
        raise InputError("more vectors than the ambient rank")
    # Row-reduce the m x k matrix A (columns = vectors) by unimodular row
    # ops, tracking V = U^-1 by columns: completion = last m-k columns of V.
    a = [[vecs[j][i] for j in range(k)] for i in range(m)]
    vcols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    for j in range(k):
        nz = [i for i in range(j, m) if a[i][j] != 0]
        if not nz:
            raise InputError("vectors are linearly dependent")
        i0 = nz[0]
        for i in nz[1:]:
            p, q = a[i0][j], a[i][j]
            g, x, y = xgcd(p, q)
            r0, ri = a[i0], a[i]
            a[i0] = [x * s + y * t for s, t in zip(r0, ri)]
            a[i] = [(p // g) * t - (q // g) * s for s, t in zip(r0, ri)]
            # V <- V E^-1 for E = [[x, y], [-q/g, p/g]] on rows (i0, i):
            # inverse is [[p/g, -y], [q/g, x]], acting on columns (i0, i).
            v0, vi = vcols[i0], vcols[i]
            vcols[i0] = [(p // g) * s + (q // g) * t for s, t in zip(v0, vi)]
            vcols[i] = [-y * s + x * t for s, t in zip(v0, vi)]
        if i0 != j:
            a[j], a[i0] = a[i0], a[j]
            vcols[j], vcols[i0] = vcols[i0], vcols[j]
        if a[j][j] < 0:
            a[j] = [-t for t in a[j]]
            vcols[j] = [-t for t in vcols[j]]
        if a[j][j] != 1:
            raise InputError("vectors do not extend to a basis of Z^%d" % m)
    return vecs + [tuple(vcols[j]) for j in range(k, m)]


def minor_gcd(vectors, m):
    """gcd of all maximal minors of the matrix with the given columns;
    0 exactly when the vectors are linearly dependent."""
    vecs = [tuple(v) for v in vectors]
    k = len(vecs)
    g = 0
    for rows in combinations(range(m), k):
        sub = [[vecs[j][i] for j in range(k)] for i in rows]
        g = math.gcd(g, det_int(sub))
        if g == 1:
            return 1
    return g


def is_part_of_basis(vectors, m):
    """True iff the vectors extend to a basis of Z^m.

    Decided by the gcd of all maximal minors (Smith-criterion); raises
    InputError on linearly dependent input.
    """
    vecs = [tuple(v) for v in vectors]
    k = len(vecs)
    if k == 0:
        return True
    if k > m:
        raise InputError("vectors are linearly dependent")
    g = minor_gcd(vecs, m)
    if g == 0:
        raise InputError("vectors are linearly dependent")
    return g == 1


def invert_unimodular(rows):
    """Inverse of an integer matrix with determinant +-1 (integer result)."""
    n = len(rows)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        sol = rational_solve(rows, e)
        if sol is None:
            raise InputError("matrix is singular")
        cols.append(sol)
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            f = cols[j][i]
            if f.denominator != 1:
                raise InputError("matrix is not unimodular")
            row.append(f.numerator)
        inv.append(tuple(row))
    return tuple(inv)


def mat_vec(rows, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in rows)


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a)
