"""Rigorous rational enclosures for real cyclotomic numbers.

Everything here is integer/Fraction arithmetic.  A real element of Q(zeta_n)
equals ``sum c_j cos(2 pi j / n)``; each cosine is enclosed in a dyadic
interval from a Machin enclosure of pi and a Taylor polynomial with an
explicit remainder bound, and the precision doubles until the sign is
resolved.  Exact zero is detected symbolically beforehand, so refinement
terminates for every nonzero input.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .field import Cyclotomic, _coerce, is_real, units

START_BITS = 48
MAX_BITS = 1 << 14


def _atan_inv_scaled(x: int, bits: int) -> tuple[int, int]:
    """(v, err) with |v - 2^bits * atan(1/x)| <= err."""
    one = 1 << bits
    x2 = x * x
    power = one // x  # floor(2^bits / x^(2k+1)), exact floor at every step
    total = 0
    k = 0
    while power:
        t = power // (2 * k + 1)
        total += -t if k % 2 else t
        k += 1
        power //= x2
    return total, 2 * k + 2


@lru_cache(maxsize=None)
def pi_bounds(bits: int) -> tuple[Fraction, Fraction]:
    a, ea = _atan_inv_scaled(5, bits)
    b, eb = _atan_inv_scaled(239, bits)
    v = 16 * a - 4 * b
    err = 16 * ea + 4 * eb
    scale = 1 << bits
    return Fraction(v - err, scale), Fraction(v + err, scale)


def _down(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def _up(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


def _cos_point(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of cos(x) for 0 <= x <= 4."""
    tol = Fraction(1, 1 << (bits + 4))
    x2 = x * x
    term = Fraction(1)
    total = Fraction(0)
    k = 0
    while True:
        total += term
        k += 1
        term = -term * x2 / ((2 * k - 1) * (2 * k))
        # Lagrange remainder after the k-th partial sum is at most |term|
        if abs(term) < tol:
            rem = abs(term)
            return _down(total - rem, bits + 8), _up(total + rem, bits + 8)


@lru_cache(maxsize=None)
def cos2pi_bounds(r: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational interval containing cos(2 pi r)."""
    r = Fraction(r) % 1
    if r > Fraction(1, 2):
        r = 1 - r
    if r == 0:
        return Fraction(1), Fraction(1)
    if r == Fraction(1, 2):
        return Fraction(-1), Fraction(-1)
    if r == Fraction(1, 4):
        return Fraction(0), Fraction(0)
    flip = r > Fraction(1, 4)
    if flip:
        # cos(2 pi r) = -cos(2 pi (1/2 - r)), keeps the argument in [0, pi/2]
        r = Fraction(1, 2) - r
    plo, phi = pi_bounds(bits)
    xlo, xhi = _down(2 * r * plo, bits), _up(2 * r * phi, bits)
    # cos is decreasing on [0, pi/2]
    lo = _cos_point(xhi, bits)[0]
    hi = _cos_point(xlo, bits)[1]
    if flip:
        lo, hi = -hi, -lo
    return lo, hi


def real_enclosure(a: Cyclotomic, bits: int, k: int = 1) -> tuple[Fraction, Fraction]:
    """Interval for the real part of sigma_k(a)."""
    a = _coerce(a)
    lo = hi = Fraction(0)
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        clo, chi = cos2pi_bounds(Fraction(j * k % a.n, a.n), bits)
        if c > 0:
            lo += c * clo
            hi += c * chi
        else:
            lo += c * chi
            hi += c * clo
    return lo, hi


def real_sign(a: Cyclotomic, k: int = 1) -> int:
    """Sign of the real number sigma_k(a); ``a`` must be real."""
    a = _coerce(a)
    if a.n == 1:
        c = a.coeffs[0]
        return (c > 0) - (c < 0)
    if not is_real(a):
        raise ValueError("sign requested for a non-real element")
    if a.is_zero():
        return 0
    bits = START_BITS
    while bits <= MAX_BITS:
        lo, hi = real_enclosure(a, bits, k)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise ArithmeticError("sign refinement did not terminate")  # unreachable for a != 0


def is_totally_positive(a: Cyclotomic) -> bool:
    """Every Galois conjugate is real and > 0."""
    a = _coerce(a)
    if a.n == 1:
        return a.coeffs[0] > 0
    # complex conjugation commutes with the Galois group, so a real a has
    # only real conjugates
    if not is_real(a):
        return False
    return all(real_sign(a, k) > 0 for k in units(a.n))


def is_totally_nonnegative(a: Cyclotomic) -> bool:
    a = _coerce(a)
    return a.is_zero() or is_totally_positive(a)


def abs_enclosure(a: Cyclotomic, bits: int = START_BITS) -> tuple[Fraction, Fraction]:
    """Interval for |a|; exact when |a|^2 is the square of a rational."""
    from .field import norm_abs_squared

    r = norm_abs_squared(_coerce(a))
    if r.n == 1:
        q = Fraction(r.coeffs[0])
        s = _rational_sqrt(q)
        if s is not None:
            return s, s
        lo, hi = q, q
    else:
        lo, hi = real_enclosure(r, bits)
        lo = max(lo, Fraction(0))
    scale = 1 << bits
    slo = Fraction(isqrt(int(lo * scale * scale)), scale)
    shi = Fraction(isqrt(int(hi * scale * scale) + 1) + 1, scale)
    return slo, shi


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None
