"""Number-theoretic statements checked on concrete cyclotomic integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import NotAlgebraicInteger, NotPPowerRoot, TheoremViolation
from .field import ONE, Cyclotomic, _coerce, average_of_conjugates, cyc_sum, is_algebraic_integer, root_of_unity_order
from .intervals import is_totally_positive

THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class SiegelResult:
    kind: str  # "is-one" | "at-least-three-halves" | "not-totally-positive"
    average: Fraction | None = None


def siegel_bound_check(a: Cyclotomic) -> SiegelResult:
    """Conjugate average of a totally positive cyclotomic integer other than 1.

    Raises TheoremViolation if that average is below 3/2.
    """
    a = _coerce(a)
    if not is_algebraic_integer(a):
        raise NotAlgebraicInteger(f"{a} is not an algebraic integer")
    if a == ONE:
        return SiegelResult("is-one", Fraction(1))
    if not is_totally_positive(a):
        return SiegelResult("not-totally-positive")
    avg = average_of_conjugates(a)
    if avg < THREE_HALVES:
        raise TheoremViolation(f"totally positive {a} has conjugate average {avg} < 3/2")
    return SiegelResult("at-least-three-halves", avg)


@dataclass(frozen=True)
class RootSumResult:
    vanishes: bool
    terms: int
    p: int
    total: Cyclotomic

    @property
    def divisible(self) -> bool:
        return self.terms % self.p == 0 if self.vanishes else False


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def p_power_root_sum_check(eps: Sequence[Cyclotomic], p: int) -> RootSumResult:
    """Sum p-power roots of unity; a vanishing sum must have p | len(eps)."""
    for e in eps:
        o = root_of_unity_order(e)
        if o is None or not _is_p_power(o, p):
            raise NotPPowerRoot(f"{e} is not a root of unity of {p}-power order")
    total = cyc_sum(eps)
    vanishes = total.is_zero()
    if vanishes and len(eps) % p:
        raise TheoremViolation(f"{len(eps)} {p}-power roots of unity sum to zero")
    return RootSumResult(vanishes, len(eps), p, total)
