"""Exponent calculus for the chain-word root, and fractional-twist ledgers.

The root identity only uses two facts: the chain word ``W`` commutes with the
twist ``T`` about the boundary curve, and ``W^(2g-1) = T^2``.  The group
``<w, t | wt = tw, w^(2g-1) = t^2>`` is infinite cyclic and ``w -> 2,
t -> 2g-1`` is an isomorphism onto Z, which :func:`presentation_invariants`
certifies.

Twist amounts are exact rationals in units of one full twist about the
reduction curve: left twists positive, right twists negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

import sympy
from sympy.matrices.normalforms import invariant_factors

from .errors import ConstructionError


class ExponentPair(NamedTuple):
    w_exp: int
    t_exp: int


def _check_genus(g: int) -> None:
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")


def exponent_image(p: ExponentPair, g: int) -> int:
    _check_genus(g)
    return 2 * p.w_exp + (2 * g - 1) * p.t_exp


def root_exponents(g: int) -> ExponentPair:
    """Exponents of the root W^(1-g) T."""
    _check_genus(g)
    return ExponentPair(1 - g, 1)


def root_order(g: int) -> int:
    _check_genus(g)
    return 2 * g - 1


def verify_root_identity(g: int) -> bool:
    """Check (W^(1-g) T)^(2g-1) = T in the abelian quotient, with injectivity certified."""
    root = root_exponents(g)
    order = root_order(g)
    power = ExponentPair(order * root.w_exp, order * root.t_exp)
    factors, free_rank = presentation_invariants(g)
    injective = free_rank == 1 and all(f == 1 for f in factors)
    return injective and exponent_image(power, g) == exponent_image(ExponentPair(0, 1), g)


def relation_invariants(relations: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Invariant factors and free rank of the abelian group presented by ``relations``.

    Each row is one relation in the generators; zero invariant factors are
    folded into the free rank.
    """
    m = sympy.Matrix(relations)
    factors = tuple(int(abs(f)) for f in invariant_factors(m, domain=sympy.ZZ))
    nonzero = tuple(f for f in factors if f != 0)
    return nonzero, m.cols - len(nonzero)


def presentation_invariants(g: int) -> tuple[tuple[int, ...], int]:
    """Invariants of <w, t | [w,t], w^(2g-1) t^-2>; the commutator is free in the abelianization."""
    _check_genus(g)
    return relation_invariants([[2 * g - 1, -2]])


@dataclass(frozen=True)
class TwistLedger:
    contributions: tuple[Fraction, ...]
    applications: int
    target: Fraction = Fraction(1)
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "contributions", tuple(Fraction(c) for c in self.contributions))
        object.__setattr__(self, "target", Fraction(self.target))
        if self.applications < 1:
            raise ValueError("a ledger needs at least one application")

    @property
    def per_application(self) -> Fraction:
        return sum(self.contributions, Fraction(0))

    @property
    def net(self) -> Fraction:
        return self.applications * self.per_application


def ledger_check(ledger: TwistLedger) -> bool:
    return ledger.net == ledger.target


def separating_ledger() -> TwistLedger:
    """Half-turn of the subsurface on one side of a separating curve, applied twice."""
    return TwistLedger((Fraction(1, 2),), 2, Fraction(1), label="separating")


def geometric_ledger(g: int) -> TwistLedger:
    """Fractional twists g/(2g-1) left on A and (g-1)/(2g-1) right on B."""
    _check_genus(g)
    n = 2 * g - 1
    return TwistLedger((Fraction(g, n), -Fraction(g - 1, n)), n, Fraction(1), label="geometric")


def half_twist_ledger(g: int) -> TwistLedger:
    """Left half-twist on the 2-puncture side, (g-1)/(2g-1) right twist on the other."""
    _check_genus(g)
    n = 2 * g - 1
    return TwistLedger((Fraction(1, 2), -Fraction(g - 1, n)), n, Fraction(1, 2), label="half-twist")


class HalfTwistWitness(NamedTuple):
    q: int
    p: int
    central: int

    def ledger(self) -> TwistLedger:
        return TwistLedger((Fraction(1, 2), -Fraction(self.p, self.q)), self.q, Fraction(1, 2))


def half_twist_witness(n: int) -> HalfTwistWitness:
    """Smallest rotation order q > 1 giving a root of a half-twist on the n-punctured sphere.

    The curve cuts off two punctures.  On the other side ``q`` punctures
    rotate by ``p/q`` of a turn, optionally around one central puncture, and
    ``q + central == n - 2``.
    """
    if n < 5:
        raise ValueError(f"need at least 5 punctures, got {n}")
    candidates = []
    for central in (0, 1):
        q = n - 2 - central
        if q <= 1 or q % 2 == 0:
            continue
        # q/2 - p = 1/2 forces p = (q-1)/2
        for p in range(1, q):
            w = HalfTwistWitness(q, p, central)
            if gcd(p, q) == 1 and ledger_check(w.ledger()):
                candidates.append(w)
    if not candidates:
        raise ConstructionError(f"no half-twist root witness for n={n}")
    return min(candidates)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
