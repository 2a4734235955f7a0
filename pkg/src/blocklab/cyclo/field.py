"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored at its minimal conductor ``n`` (never ``n = 2 mod 4``)
as rational coordinates over the power basis ``1, z, ..., z^(phi(n)-1)``
modulo the n-th cyclotomic polynomial.  Coordinates that are integral are
kept as ``int``; the rest as ``Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Union

MAX_CONDUCTOR = 10_080

Rational = Union[int, Fraction]


def _q(x) -> Rational:
    if type(x) is int:
        return x
    if type(x) is Fraction:
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


# -- elementary number theory -------------------------------------------------


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def units(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if gcd(k, n) == 1] if n > 1 else [1]


def normalize_conductor(n: int) -> int:
    return n // 2 if n % 4 == 2 else n


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_exact_div(a: list[int], b: tuple[int, ...]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]  # b is monic
        q[i - db] = c
        if c:
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    assert not any(a[:db]), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row t holds the power-basis coordinates of zeta_n^t, 0 <= t < n."""
    phi = totient(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


def _reduce_dense(n: int, dense: dict[int, Rational] | list) -> list:
    """Coordinates of sum(c * zeta_n^t) from exponent -> coefficient data."""
    phi = totient(n)
    rows = _power_rows(n)
    out = [0] * phi
    items = dense.items() if isinstance(dense, dict) else enumerate(dense)
    for t, c in items:
        if not c:
            continue
        t %= n
        if t < phi:
            out[t] += c
        else:
            for j, r in enumerate(rows[t]):
                if r:
                    out[j] += c * r
    return out


# -- subfield descent ---------------------------------------------------------


@lru_cache(maxsize=None)
def _descent_data(n: int, m: int):
    """Pivot rows and inverse for expressing Q(zeta_m)-elements of Q(zeta_n)."""
    s = n // m
    phi_m = totient(m)
    rows = _power_rows(n)
    E = [[Fraction(rows[(j * s) % n][i]) for j in range(phi_m)] for i in range(totient(n))]
    # choose phi_m independent rows of E and invert that block
    pivots = []
    basis = []  # reduced copies of chosen rows
    for i, row in enumerate(E):
        v = list(row)
        for (pc, b) in basis:
            if v[pc]:
                f = v[pc]
                v = [a - f * c for a, c in zip(v, b)]
        pc = next((k for k, a in enumerate(v) if a), None)
        if pc is None:
            continue
        inv = 1 / v[pc]
        v = [a * inv for a in v]
        basis.append((pc, v))
        pivots.append(i)
        if len(pivots) == phi_m:
            break
    block = [E[i] for i in pivots]
    inv = _mat_inverse(block)
    inv = [[_q(x) for x in row] for row in inv]
    E = [[_q(x) for x in row] for row in E]
    return tuple(pivots), inv, E


def _mat_inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(M)]
    for c in range(k):
        r = next(r for r in range(c, k) if A[r][c])
        A[c], A[r] = A[r], A[c]
        f = 1 / A[c][c]
        A[c] = [a * f for a in A[c]]
        for r in range(k):
            if r != c and A[r][c]:
                g = A[r][c]
                A[r] = [a - g * b for a, b in zip(A[r], A[c])]
    return [row[k:] for row in A]


def _descend(n: int, m: int, coeffs: tuple) -> tuple | None:
    """Coordinates in Q(zeta_m) if the element lies there, else None."""
    s = n // m
    rad = 1
    for p, _ in factorize(s):
        rad *= p
    if m % rad == 0:
        # Phi_n(x) = Phi_m(x^s): the subfield is spanned by powers of x^s
        if any(c for i, c in enumerate(coeffs) if i % s):
            return None
        return tuple(coeffs[::s])
    pivots, inv, E = _descent_data(n, m)
    sub = [_q(sum(a * coeffs[p] for a, p in zip(row, pivots) if a)) for row in inv]
    piv = set(pivots)
    for i, row in enumerate(E):
        if i in piv:
            continue
        if sum(a * x for a, x in zip(row, sub) if a) != coeffs[i]:
            return None
    return tuple(sub)


def _minimize(n: int, coeffs: tuple) -> tuple[int, tuple]:
    while n > 1:
        if not any(coeffs[1:]):
            return 1, (coeffs[0],)
        for p, _ in factorize(n):
            m = normalize_conductor(n // p)
            sub = _descend(n, m, coeffs)
            if sub is not None:
                n, coeffs = m, sub
                break
        else:
            return n, coeffs
    return n, coeffs


def _lift(a: Cyclotomic, N: int) -> list:
    if a.n == N:
        return list(a.coeffs)
    s = N // a.n
    if a.n == 1:
        out = [0] * totient(N)
        out[0] = a.coeffs[0]
        return out
    return _reduce_dense(N, {j * s: c for j, c in enumerate(a.coeffs) if c})


# -- the element type ----------------------------------------------------------


class DivisionByZero(ZeroDivisionError):
    pass



class Cyclotomic:
    """An exact element of a cyclotomic field."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Iterable, *, _reduced: bool = False):
        coeffs = tuple(_q(c) for c in coeffs)
        if not _reduced:
            if n % 4 == 2:
                # zeta_n = -zeta_m^((m+1)/2) with m = n/2
                m = n // 2
                h = (m + 1) // 2
                dense = {}
                for j, c in enumerate(coeffs):
                    if c:
                        sign = -1 if j % 2 else 1
                        t = (j * h) % m
                        dense[t] = dense.get(t, 0) + sign * c
                coeffs = tuple(_q(c) for c in _reduce_dense(m, dense))
                n = m
            if len(coeffs) != totient(n):
                raise ValueError(f"need {totient(n)} coordinates for conductor {n}, got {len(coeffs)}")
            n, coeffs = _minimize(n, coeffs)
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    # construction helpers
    @classmethod
    def rational(cls, q) -> Cyclotomic:
        return cls(1, (_q(q),), _reduced=True)

    @classmethod
    def from_exponents(cls, n: int, dense) -> Cyclotomic:
        """sum(c * zeta_n^t) for t -> c in ``dense`` (dict or sequence)."""
        if normalize_conductor(n) > MAX_CONDUCTOR:
            raise ValueError(f"conductor {n} exceeds the cap of {MAX_CONDUCTOR}")
        if n % 4 == 2:
            # reduce via the doubled-odd identity at conductor 2n (= 0 mod 4)
            items = dense.items() if isinstance(dense, dict) else enumerate(dense)
            dense = {2 * t: c for t, c in items}
            n = 2 * n
        return cls(n, _reduce_dense(n, dense))

    @property
    def degree(self) -> int:
        return totient(self.n)

    def is_rational(self) -> bool:
        return self.n == 1

    def to_rational(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def is_zero(self) -> bool:
        return self.n == 1 and self.coeffs[0] == 0

    def __bool__(self):
        return not self.is_zero()

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs)) if self.n > 1 else hash(self.coeffs[0])
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({serialize(self)})"

    def __str__(self):
        return serialize(self)

    # arithmetic
    def __neg__(self):
        return Cyclotomic(self.n, tuple(-c for c in self.coeffs), _reduced=True)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.n == other.n:
            return Cyclotomic(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        N = lcm(self.n, other.n)
        a, b = _lift(self, N), _lift(other, N)
        return Cyclotomic(N, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.n == 1:
            return self.scale(other.coeffs[0])
        if self.n == 1:
            return other.scale(self.coeffs[0])
        N = lcm(self.n, other.n)
        a, b = _lift(self, N), _lift(other, N)
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(N, _reduce_dense(N, prod))

    __rmul__ = __mul__

    def scale(self, q) -> Cyclotomic:
        q = _q(q)
        if q == 0:
            return ZERO
        return Cyclotomic(self.n, tuple(_q(c * q) for c in self.coeffs), _reduced=True)

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise DivisionByZero("division by zero in cyclotomic field")
        if self.n == 1:
            return Cyclotomic.rational(1 / Fraction(self.coeffs[0]))
        others = ONE
        for k in units(self.n)[1:]:
            others = others * galois(self, k)
        norm = (self * others).to_rational()
        return others.scale(1 / norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _coerce(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    return NotImplemented


ZERO = Cyclotomic(1, (0,), _reduced=True)
ONE = Cyclotomic(1, (1,), _reduced=True)


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k with zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise ValueError("n must be positive")
    k %= n
    return Cyclotomic.from_exponents(n, {k: 1})


def cyc_sum(terms: Iterable) -> Cyclotomic:
    """Sum many elements, minimizing the conductor once at the end."""
    terms = [_coerce(t) for t in terms]
    if not terms:
        return ZERO
    N = lcm(*(t.n for t in terms))
    acc = [0] * totient(N)
    for t in terms:
        for i, c in enumerate(_lift(t, N)):
            if c:
                acc[i] += c
    return Cyclotomic(N, acc)


def conj(a: Cyclotomic) -> Cyclotomic:
    return galois(a, -1)


def galois(a: Cyclotomic, k: int) -> Cyclotomic:
    """Image under the automorphism zeta_n -> zeta_n^k (k coprime to n)."""
    a = _coerce(a)
    if a.n == 1:
        return a
    k %= a.n
    if gcd(k, a.n) != 1:
        raise ValueError(f"{k} is not a unit modulo {a.n}")
    dense = {}
    for j, c in enumerate(a.coeffs):
        if c:
            t = (j * k) % a.n
            dense[t] = dense.get(t, 0) + c
    # automorphisms preserve the minimal conductor
    return Cyclotomic(a.n, tuple(_q(c) for c in _reduce_dense(a.n, dense)), _reduced=True)


def galois_conjugates(a: Cyclotomic, n: int | None = None) -> list[Cyclotomic]:
    """All images under Gal(Q(zeta_n)/Q), n defaulting to the conductor of ``a``."""
    a = _coerce(a)
    if n is None:
        n = a.n
    if n % a.n:
        raise ValueError(f"conductor {a.n} does not divide {n}")
    return [galois(a, k) for k in units(n)]


def _ramanujan(j: int, n: int) -> int:
    d = gcd(j, n)
    m = n // d
    return mobius(m) * totient(n) // totient(m)


def trace_to_rationals(a: Cyclotomic) -> Fraction:
    a = _coerce(a)
    return Fraction(sum(c * _ramanujan(j, a.n) for j, c in enumerate(a.coeffs) if c))


def average_of_conjugates(a: Cyclotomic) -> Fraction:
    a = _coerce(a)
    return trace_to_rationals(a) / totient(a.n)


def norm_abs_squared(a: Cyclotomic) -> Cyclotomic:
    """a * conj(a)"""
    return a * conj(a)


def is_real(a: Cyclotomic) -> bool:
    return conj(a) == a


def is_algebraic_integer(a: Cyclotomic) -> bool:
    return all(type(c) is int for c in _coerce(a).coeffs)


def is_rational_integer(a: Cyclotomic) -> bool:
    a = _coerce(a)
    return a.n == 1 and type(a.coeffs[0]) is int


@lru_cache(maxsize=None)
def _roots_in_field(n: int) -> dict:
    """coordinates -> (order, exponent mod N) for every root of unity in Q(zeta_n).

    These are +-zeta_n^t; rows for roots of smaller conductor are never
    looked up, since elements are stored at their minimal conductor.
    """
    N = n if n % 2 == 0 else 2 * n
    rows = _power_rows(n)
    out = {}
    for t in range(N):
        if N == n:
            key = rows[t]
        else:
            # zeta_N^t = (-1)^t zeta_n^(t (n+1)/2)
            r = rows[t * ((n + 1) // 2) % n]
            key = tuple(-c for c in r) if t % 2 else r
        out[key] = (N // gcd(t, N), t)
    return out


def root_of_unity_order(a: Cyclotomic) -> int | None:
    """Multiplicative order if ``a`` is a root of unity, else None."""
    a = _coerce(a)
    if a.n == 1:
        return {1: 1, -1: 2}.get(a.coeffs[0])
    hit = _roots_in_field(a.n).get(a.coeffs)
    return None if hit is None else hit[0]


def is_root_of_unity(a: Cyclotomic) -> bool:
    return root_of_unity_order(a) is not None


# -- serialization -------------------------------------------------------------


def _fmt(c: Rational) -> str:
    if type(c) is int:
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def serialize(a: Cyclotomic) -> str:
    return f"cyc({a.n}; {', '.join(_fmt(c) for c in a.coeffs)})"


_CYC_RE = re.compile(r"^\s*cyc\(\s*(\d+)\s*;\s*([^)]*)\)\s*$")


def parse_cyclotomic(text: str) -> Cyclotomic:
    m = _CYC_RE.match(text)
    if not m:
        raise ValueError(f"not a cyc(...) literal: {text!r}")
    n = int(m.group(1))
    coeffs = [Fraction(tok.strip()) for tok in m.group(2).split(",")]
    return Cyclotomic(n, coeffs)
