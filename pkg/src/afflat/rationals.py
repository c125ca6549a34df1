"""Exact scalar and vector helpers shared by every module.

Points are plain tuples of Fraction; integer vectors are tuples of int.
No floating point anywhere.
"""

import math
from fractions import Fraction

from .errors import InputError


def rat(x):
    """Coerce an int, a string like '-3/7', or a Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InputError("floating point is not accepted: %r" % (x,))
    return Fraction(x)


def point(coords):
    """Normalize a coordinate sequence to a tuple of Fractions."""
    return tuple(rat(c) for c in coords)


def intvec(v):
    """Normalize to a tuple of ints; rejects non-integer entries."""
    out = []
    for c in v:
        f = rat(c)
        if f.denominator != 1:
            raise InputError("expected integer entries, got %s" % (c,))
        out.append(f.numerator)
    return tuple(out)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, v):
    return tuple(s * a for a in v)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lcm(a, b):
    return a * b // math.gcd(a, b)


def content(v):
    """gcd of the entries of an integer vector (0 for the zero vector)."""
    g = 0
    for a in v:
        g = math.gcd(g, a)
    return g


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector with
    the same direction (orientation preserved)."""
    den = 1
    for c in v:
        den = lcm(den, rat(c).denominator)
    w = [int(rat(c) * den) for c in v]
    g = content(w)
    if g == 0:
        raise InputError("zero vector has no primitive form")
    return tuple(a // g for a in w)


def canon_primitive(v):
    """Primitive integer vector with the first nonzero entry positive."""
    w = primitive(v)
    for a in w:
        if a:
            return w if a > 0 else tuple(-b for b in w)
    raise InputError("zero vector has no primitive form")


def is_zero(v):
    return all(a == 0 for a in v)
