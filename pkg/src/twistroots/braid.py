"""Braid words and their Artin action on free groups.

The generator ``s_i`` acts by ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``
and fixes the other generators.  The action is faithful, so braid identities
are decided by comparing the induced automorphisms.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import autos
from .autos import Automorphism, Endomorphism, compose
from .errors import BudgetExceeded, ParseError, RankError

DEFAULT_WORD_BUDGET = 10**7
BUDGET_ENV = "TWISTROOTS_WORD_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_WORD_BUDGET


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise RankError(f"braids need at least 2 strands, got {self.strands}")
        for i, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"braid letter sign must be +1 or -1, got {sign}")
            if not 1 <= i < self.strands:
                raise RankError(f"generator s{i} outside B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise RankError("braid strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, m: int) -> "BraidWord":
        base = self if m >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(m))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid(self)


def braid(strands: int, letters: Iterable[int | tuple[int, int]]) -> BraidWord:
    """Build from signed integers (``-2`` is ``s2^-1``) or ``(index, sign)`` pairs."""
    out = []
    for item in letters:
        if isinstance(item, int):
            out.append((abs(item), 1 if item > 0 else -1))
        else:
            out.append(tuple(item))
    return BraidWord(strands, tuple(out))


_TOKEN = re.compile(r"s(\d+)(?:\^([+-]?\d+))?$")


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``s1 s1 s2 s3^-1``; ``1`` or an empty string is the identity."""
    letters = []
    for tok in text.replace("*", " ").split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad braid token {tok!r}")
        exp = int(m.group(2)) if m.group(2) else 1
        letters.extend([(int(m.group(1)), 1 if exp > 0 else -1)] * abs(exp))
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return "1"
    return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in b.letters)


class LetterBudget:
    """Counts letters produced by intermediate automorphisms; raises past the limit."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def charge(self, f: Endomorphism) -> Endomorphism:
        self.used += f.total_length()
        if self.used > self.limit:
            raise BudgetExceeded(
                f"word computation used {self.used} letters, budget is {self.limit}"
            )
        return f


@lru_cache(maxsize=None)
def generator_automorphism(strands: int, i: int, sign: int = 1) -> Automorphism:
    n = strands
    names = [f"x{k}" for k in range(1, n + 1)]
    fwd = list(names)
    inv = list(names)
    a, b = f"x{i}", f"x{i + 1}"
    fwd[i - 1], fwd[i] = f"{a}*{b}*{a}^-1", a
    inv[i - 1], inv[i] = b, f"{b}^-1*{a}*{b}"
    auto = Automorphism(autos.endomorphism(n, fwd), autos.endomorphism(n, inv))
    return auto if sign > 0 else auto.inverted()


def artin_automorphism(b: BraidWord, budget: LetterBudget | None = None) -> Automorphism:
    """The automorphism of F_n induced by ``b``; concatenation maps to composition."""
    forward = autos.identity(b.strands)
    inverse = autos.identity(b.strands)
    for i, sign in b.letters:
        gen = generator_automorphism(b.strands, i, sign)
        forward = compose(forward, gen.forward)
        inverse = compose(gen.inverse, inverse)
        if budget is not None:
            budget.charge(forward)
            budget.charge(inverse)
    return autos._trusted_auto(forward, inverse)


def chain_word(k: int) -> BraidWord:
    """s1 s1 s2 ... sk on k+1 strands."""
    if k < 1:
        raise ValueError(f"chain length must be at least 1, got {k}")
    return braid(k + 1, [1, *range(1, k + 1)])


def full_twist(n: int) -> BraidWord:
    """(s1 s2 ... s_{n-1})^n, the generator of the center of B_n."""
    if n < 2:
        raise ValueError(f"full twist needs at least 2 strands, got {n}")
    return braid(n, list(range(1, n)) * n)


def _forward_power(f: Endomorphism, m: int, budget: LetterBudget) -> Endomorphism:
    result = autos.identity(f.rank)
    for _ in range(m):
        result = budget.charge(compose(result, f))
    return result


def verify_chain_relation(k: int, budget: LetterBudget | int | None = None) -> bool:
    """Check (s1^2 s2 ... sk)^k == full twist in B_{k+1} through the Artin action."""
    if not isinstance(budget, LetterBudget):
        budget = LetterBudget(budget)
    chain = artin_automorphism(chain_word(k), budget).forward
    lhs = _forward_power(chain, k, budget)
    rhs = artin_automorphism(full_twist(k + 1), budget).forward
    return lhs == rhs


def verify_centrality(k: int, budget: LetterBudget | int | None = None) -> bool:
    """Check that the full twist on k+1 strands commutes with every s_i."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not isinstance(budget, LetterBudget):
        budget = LetterBudget(budget)
    delta2 = artin_automorphism(full_twist(k + 1), budget).forward
    for i in range(1, k + 1):
        s = generator_automorphism(k + 1, i).forward
        left = budget.charge(compose(delta2, s))
        right = budget.charge(compose(s, delta2))
        if left != right:
            return False
    return True
