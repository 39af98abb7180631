"""Compensated double-word ("double-double") arithmetic.

Values are unevaluated sums hi + lo with |lo| <= 0.5 ulp(hi), giving roughly
106 bits of significand.  Everything here is branch-free so the same
functions work elementwise on numpy arrays and on plain floats.  Only the
handful of operations the orbit and root-polishing code needs is provided.
"""

from __future__ import annotations

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1, exact in binary64


def two_sum(a, b):
    """Return (s, e) with s = fl(a+b) and s + e == a + b exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    """Return (p, e) with p = fl(a*b) and p + e == a * b exactly."""
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def renorm(hi, lo):
    """Fast renormalisation; assumes |hi| dominates |lo|."""
    s = hi + lo
    e = lo - (s - hi)
    return s, e


def dd_from(x):
    return x, np.zeros_like(x) if isinstance(x, np.ndarray) else 0.0


def dd_add_dd(xhi, xlo, yhi, ylo):
    s, e = two_sum(xhi, yhi)
    t, f = two_sum(xlo, ylo)
    e = e + t
    s, e = renorm(s, e)
    e = e + f
    return renorm(s, e)


def dd_neg(hi, lo):
    return -hi, -lo


def dd_sub_dd(xhi, xlo, yhi, ylo):
    return dd_add_dd(xhi, xlo, -yhi, -ylo)


def dd_add_float(xhi, xlo, f):
    s, e = two_sum(xhi, f)
    e = e + xlo
    return renorm(s, e)


def dd_mul_float(xhi, xlo, f):
    p, e = two_prod(xhi, f)
    e = e + xlo * f
    return renorm(p, e)


def dd_mul_dd(xhi, xlo, yhi, ylo):
    p, e = two_prod(xhi, yhi)
    e = e + (xhi * ylo + xlo * yhi)
    return renorm(p, e)


def dd_div_dd(xhi, xlo, yhi, ylo):
    q1 = xhi / yhi
    rhi, rlo = dd_add_dd(xhi, xlo, *dd_mul_float(yhi, ylo, -q1))
    q2 = rhi / yhi
    rhi, rlo = dd_add_dd(rhi, rlo, *dd_mul_float(yhi, ylo, -q2))
    q3 = rhi / yhi
    s, e = two_sum(q1, q2)
    e = e + q3
    return renorm(s, e)


def dd_abs(hi, lo):
    """Magnitude; the sign of a nonzero dd is carried by hi (or lo if hi==0)."""
    s = np.where(hi < 0.0, -1.0, np.where(hi > 0.0, 1.0, np.where(lo < 0.0, -1.0, 1.0)))
    return hi * s, lo * s


def dd_to_float(hi, lo):
    return hi + lo


def dd_pow_int(hi, lo, n: int):
    """x**n for small non-negative integer n by binary powering."""
    rhi, rlo = np.ones_like(hi) if isinstance(hi, np.ndarray) else 1.0, (
        np.zeros_like(hi) if isinstance(hi, np.ndarray) else 0.0
    )
    bhi, blo = hi, lo
    k = n
    while k > 0:
        if k & 1:
            rhi, rlo = dd_mul_dd(rhi, rlo, bhi, blo)
        k >>= 1
        if k:
            bhi, blo = dd_mul_dd(bhi, blo, bhi, blo)
    return rhi, rlo


def dd_tent_step(a: float, xhi, xlo):
    """One tent-map step y = 1 - a*|x| in double-word arithmetic.

    `a` is an exact binary64 input.  Works on scalars and arrays alike.
    """
    hhi, hlo = dd_abs(xhi, xlo)
    phi, plo = dd_mul_float(hhi, hlo, a)
    return dd_add_float(-phi, -plo, 1.0)
