"""Freely reduced words in a free group of finite rank.

A word is a tuple of letters ``(index, sign)`` with ``1 <= index <= rank``
and ``sign`` in ``{+1, -1}``.  Every :class:`Word` value is freely reduced,
so equality of group elements is plain tuple equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError, RankError


class Letter(NamedTuple):
    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def _check_letter(rank: int, letter: Letter) -> None:
    if letter.sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {letter.sign}")
    if not 1 <= letter.index <= rank:
        raise RankError(f"generator x{letter.index} outside rank {rank}")


def is_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not (a.index == b.index and a.sign == -b.sign)
        for a, b in zip(letters, letters[1:])
    )


@dataclass(frozen=True)
class Word:
    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")
        for letter in self.letters:
            _check_letter(self.rank, letter)
        if not is_reduced(self.letters):
            raise ValueError("Word letters must be freely reduced; use reduce()")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self) -> list[int]:
        sums = [0] * self.rank
        for letter in self.letters:
            sums[letter.index - 1] += letter.sign
        return sums


def _stack_reduce(letters: Iterable[Letter], stack: list[Letter] | None = None) -> list[Letter]:
    out = [] if stack is None else stack
    for letter in letters:
        if out and out[-1].index == letter.index and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return out


def _trusted(rank: int, letters: list[Letter]) -> Word:
    # Callers guarantee range and reducedness; skip the O(len) revalidation.
    word = object.__new__(Word)
    object.__setattr__(word, "rank", rank)
    object.__setattr__(word, "letters", tuple(letters))
    return word


def reduce(rank: int, raw: Iterable[Letter | tuple[int, int]]) -> Word:
    """Freely reduce ``raw`` in F_rank with a single left-to-right stack pass."""
    letters = []
    for item in raw:
        letter = Letter(*item)
        _check_letter(rank, letter)
        letters.append(letter)
    return _trusted(rank, _stack_reduce(letters))


def identity(rank: int) -> Word:
    return Word(rank)


def generator(rank: int, index: int, sign: int = 1) -> Word:
    return reduce(rank, [(index, sign)])


def concat(a: Word, b: Word) -> Word:
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")
    return _trusted(a.rank, _stack_reduce(b.letters, list(a.letters)))


def concat_all(rank: int, words: Iterable[Word]) -> Word:
    stack: list[Letter] = []
    for w in words:
        if w.rank != rank:
            raise RankError(f"rank mismatch: {rank} vs {w.rank}")
        _stack_reduce(w.letters, stack)
    return _trusted(rank, stack)


def invert(a: Word) -> Word:
    return _trusted(a.rank, [Letter(l.index, -l.sign) for l in reversed(a.letters)])


def power(a: Word, m: int) -> Word:
    base = a if m >= 0 else invert(a)
    return concat_all(a.rank, [base] * abs(m))


# -- text format ---------------------------------------------------------

_TOKEN = re.compile(r"x(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``x1*x2^-1*x3``; ``1`` or the empty string is the identity.

    Whitespace is ignored and ``*`` separators are optional.
    """
    s = re.sub(r"\s+", "", text)
    if s in ("", "1"):
        return identity(rank)
    letters: list[Letter] = []
    pos = 0
    while pos < len(s):
        if s[pos] == "*" and letters:
            pos += 1
        m = _TOKEN.match(s, pos)
        if m is None:
            raise ParseError(f"cannot parse word {text!r} at position {pos}")
        index = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if exp > 0 else -1
        letters.extend([Letter(index, sign)] * abs(exp))
        pos = m.end()
    return reduce(rank, letters)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        exp = (j - i) * letters[i].sign
        parts.append(f"x{letters[i].index}" if exp == 1 else f"x{letters[i].index}^{exp}")
        i = j
    return "*".join(parts)
