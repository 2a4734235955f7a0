"""Reduction of Z[zeta_n] modulo a maximal ideal over p.

The image field is F_p[x]/(g) with g an irreducible factor of the
cyclotomic polynomial of the p'-part of n.  Under this map every p-power
root of unity goes to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import NotIntegral
from .field import Cyclotomic, _coerce, is_algebraic_integer

Fpf = tuple  # element of F_p[x]/(g): coefficient tuple of length f, low degree first


def _split_p(n: int, p: int) -> tuple[int, int]:
    pa = 1
    while n % p == 0:
        n //= p
        pa *= p
    return pa, n


@lru_cache(maxsize=None)
def factors_mod_p(m: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Monic irreducible factors of Phi_m over F_p (p not dividing m), sorted.

    Each factor is a coefficient tuple from the leading term down; the list
    is in lexicographic order of those tuples.
    """
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    _, facs = Poly(cyclotomic_poly(m, x), x, modulus=p).factor_list()
    out = []
    for f, mult in facs:
        assert mult == 1
        out.append(tuple(int(c) % p for c in f.all_coeffs()))
    return tuple(sorted(out))


def _mulmod(a: Fpf, b: Fpf, g: tuple[int, ...], p: int) -> Fpf:
    f = len(g) - 1
    prod = [0] * (2 * f - 1) if f else [0]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    # g given high -> low and monic
    for d in range(len(prod) - 1, f - 1, -1):
        c = prod[d] % p
        if c:
            for k in range(1, f + 1):
                prod[d - k] -= c * g[k]
        prod[d] = 0
    return tuple(c % p for c in prod[:f]) if f else ()


def _powmod(a: Fpf, k: int, g, p) -> Fpf:
    f = len(g) - 1
    result = tuple([1] + [0] * (f - 1))
    while k:
        if k & 1:
            result = _mulmod(result, a, g, p)
        a = _mulmod(a, a, g, p)
        k >>= 1
    return result


@dataclass(frozen=True)
class IdealEmbedding:
    p: int
    n: int
    f: int
    modulus: tuple[int, ...]  # irreducible factor, leading coefficient first
    image_of_zeta: Fpf  # image of zeta_n

    @classmethod
    def build(cls, p: int, n: int, choice: int = 0) -> IdealEmbedding:
        """Use the ``choice``-th factor in lexicographic order (0 = least)."""
        pa, m = _split_p(n, p)
        facs = factors_mod_p(m, p)
        g = facs[choice]
        f = len(g) - 1
        x = tuple([0, 1] + [0] * (f - 2)) if f > 1 else (_root_linear(g, p),)
        # zeta_n = zeta_{p^a}^s * zeta_m^t with t = (p^a)^-1 mod m; the first factor maps to 1
        t = pow(pa, -1, m) if m > 1 else 0
        return cls(p, n, f, g, _powmod(x, t, g, p))

    @staticmethod
    def factor_count(p: int, n: int) -> int:
        return len(factors_mod_p(_split_p(n, p)[1], p))

    def one(self) -> Fpf:
        return tuple([1] + [0] * (self.f - 1))

    def zero(self) -> Fpf:
        return tuple([0] * self.f)


def _root_linear(g: tuple[int, ...], p: int) -> int:
    # g = x + c
    return (-g[1]) % p


def ideal_embed(a: Cyclotomic, emb: IdealEmbedding) -> Fpf:
    """Image of an algebraic integer ``a`` in F_{p^f}."""
    a = _coerce(a)
    if not is_algebraic_integer(a):
        raise NotIntegral(f"{a} is not integral")
    if emb.n % a.n:
        raise ValueError(f"conductor {a.n} does not divide {emb.n}")
    p, g = emb.p, emb.modulus
    theta = _powmod(emb.image_of_zeta, emb.n // a.n, g, p)
    acc = emb.zero()
    for c in reversed(a.coeffs):  # Horner in theta
        acc = _mulmod(acc, theta, g, p)
        if c:
            acc = (acc[0] + c,) + acc[1:] if emb.f else acc
            acc = tuple(v % p for v in acc)
    return acc
