"""Endomorphisms and automorphisms of free groups.

Composition follows the matrix convention: ``compose(f, g)`` is *f after g*,
so ``abelianize(compose(f, g)) == abelianize(f) @ abelianize(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConstructionError, ParseError, RankError, UnsupportedRankError
from .matrix import IntegerMatrix
from .words import Letter, Word, _stack_reduce, _trusted, format_word, generator, invert, parse_word


@dataclass(frozen=True)
class Endomorphism:
    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise RankError(f"need {self.rank} generator images, got {len(self.images)}")
        for w in self.images:
            if w.rank != self.rank:
                raise RankError(f"image of rank {w.rank} in rank-{self.rank} endomorphism")

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {format_word(w)}" for i, w in enumerate(self.images))

    def total_length(self) -> int:
        return sum(len(w) for w in self.images)


@dataclass(frozen=True)
class Automorphism:
    """An endomorphism together with a two-sided inverse, checked on construction."""

    forward: Endomorphism
    inverse: Endomorphism

    def __post_init__(self):
        if self.forward.rank != self.inverse.rank:
            raise RankError("forward and inverse ranks differ")
        ident = identity(self.forward.rank)
        if compose(self.forward, self.inverse) != ident or compose(self.inverse, self.forward) != ident:
            raise ConstructionError("supplied inverse is not a two-sided inverse")

    @property
    def rank(self) -> int:
        return self.forward.rank

    @property
    def images(self) -> tuple[Word, ...]:
        return self.forward.images

    def inverted(self) -> "Automorphism":
        return _trusted_auto(self.inverse, self.forward)

    def __call__(self, w: Word) -> Word:
        return apply(self.forward, w)


def _trusted_auto(forward: Endomorphism, inverse: Endomorphism) -> Automorphism:
    # For automorphisms built from already-verified pieces.
    auto = object.__new__(Automorphism)
    object.__setattr__(auto, "forward", forward)
    object.__setattr__(auto, "inverse", inverse)
    return auto


def endomorphism(rank: int, images: Sequence[Word | str]) -> Endomorphism:
    return Endomorphism(
        rank, tuple(parse_word(w, rank) if isinstance(w, str) else w for w in images)
    )


def identity(rank: int) -> Endomorphism:
    return Endomorphism(rank, tuple(generator(rank, i) for i in range(1, rank + 1)))


def identity_automorphism(rank: int) -> Automorphism:
    ident = identity(rank)
    return _trusted_auto(ident, ident)


def apply(f: Endomorphism, w: Word) -> Word:
    if f.rank != w.rank:
        raise RankError(f"rank mismatch: endomorphism {f.rank}, word {w.rank}")
    inverses: dict[int, tuple[Letter, ...]] = {}
    stack: list[Letter] = []
    for letter in w.letters:
        image = f.images[letter.index - 1]
        if letter.sign > 0:
            _stack_reduce(image.letters, stack)
        else:
            inv = inverses.get(letter.index)
            if inv is None:
                inv = inverses[letter.index] = invert(image).letters
            _stack_reduce(inv, stack)
    return _trusted(f.rank, stack)


def compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """Return ``f`` after ``g``."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    return Endomorphism(f.rank, tuple(apply(f, w) for w in g.images))


def compose_auto(f: Automorphism, g: Automorphism) -> Automorphism:
    return _trusted_auto(compose(f.forward, g.forward), compose(g.inverse, f.inverse))


def power(f: Automorphism, m: int) -> Endomorphism:
    base = f.forward if m >= 0 else f.inverse
    result = identity(f.rank)
    for _ in range(abs(m)):
        result = compose(result, base)
    return result


def abelianize(f: Endomorphism) -> IntegerMatrix:
    """Induced map on Z^n; column i is the exponent-sum vector of the image of x_i."""
    columns = [w.exponent_sums() for w in f.images]
    return IntegerMatrix.from_rows(zip(*columns))


def nielsen_transformation(n: int) -> Automorphism:
    """x1 -> x1*x2, other generators fixed."""
    if n < 2:
        raise UnsupportedRankError("Nielsen transformations need rank at least 2")
    rest = [f"x{k}" for k in range(3, n + 1)]
    return Automorphism(
        endomorphism(n, ["x1*x2", "x2", *rest]),
        endomorphism(n, ["x1*x2^-1", "x2", *rest]),
    )


def nielsen_root(n: int) -> Automorphism:
    """Square root of :func:`nielsen_transformation` on x1, x2, x3; identity on the rest."""
    if n < 3:
        raise UnsupportedRankError(f"the square root needs three generators, got rank {n}")
    rest = [f"x{k}" for k in range(4, n + 1)]
    forward = endomorphism(n, ["x1*x3", "x3^-1*x2*x3", "x3^-1*x2", *rest])
    # phi(x3^-1*x2) = x3, phi(x3^-1*x2*x3) = x2, phi(x1*x2^-1*x3) = x1
    inverse = endomorphism(n, ["x1*x2^-1*x3", "x3^-1*x2*x3", "x3^-1*x2", *rest])
    return Automorphism(forward, inverse)


def parse_endomorphism(text: str) -> Endomorphism:
    """One generator image per line; the rank is the number of non-blank lines."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("endomorphism fixture has no images")
    cleaned = []
    for i, ln in enumerate(lines, start=1):
        # tolerate an optional "x3 -> ..." prefix
        if "->" in ln:
            head, ln = (s.strip() for s in ln.split("->", 1))
            if head != f"x{i}":
                raise ParseError(f"line {i} defines {head}, expected x{i}")
        cleaned.append(ln)
    return endomorphism(len(cleaned), cleaned)


def format_endomorphism(f: Endomorphism) -> str:
    return "\n".join(format_word(w) for w in f.images)
