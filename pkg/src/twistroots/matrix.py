"""Immutable arbitrary-precision integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy

from .errors import DimensionError, ParseError


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entry grid does not match declared dimensions")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntegerMatrix":
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        if not grid:
            raise DimensionError("matrix must have at least one row")
        return cls(len(grid), len(grid[0]), grid)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntegerMatrix.from_rows(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        )

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        return self + (-other)

    def __neg__(self) -> "IntegerMatrix":
        return self.scale(-1)

    def scale(self, c: int) -> "IntegerMatrix":
        return IntegerMatrix.from_rows([c * x for x in row] for row in self.entries)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col) if a and b) for col in cols)
                for row in self.entries
            ),
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def __pow__(self, m: int) -> "IntegerMatrix":
        """Non-negative powers by repeated squaring; negative powers need :meth:`inverse`."""
        if not self.is_square:
            raise DimensionError("only square matrices have powers")
        if m < 0:
            return self.inverse() ** (-m)
        result = IntegerMatrix.identity(self.rows)
        base = self
        while m:
            if m & 1:
                result = result @ base
            base = base @ base
            m >>= 1
        return result

    def determinant(self) -> int:
        if not self.is_square:
            raise DimensionError("determinant needs a square matrix")
        return int(sympy.Matrix(self.entries).det(method="bareiss"))

    def inverse(self) -> "IntegerMatrix":
        """Inverse over the integers; raises ValueError unless unimodular."""
        det = self.determinant()
        if det not in (1, -1):
            raise ValueError(f"matrix with determinant {det} has no integral inverse")
        inv = sympy.Matrix(self.entries).adjugate() * det
        return IntegerMatrix.from_rows(inv.tolist())

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return format_matrix(self)


def elementary_matrix(n: int, i: int = 0, j: int = 1, value: int = 1) -> IntegerMatrix:
    """Identity plus ``value`` at zero-based position ``(i, j)``, ``i != j``."""
    if i == j:
        raise ValueError("elementary matrix needs an off-diagonal position")
    rows = IntegerMatrix.identity(n).tolist()
    rows[i][j] = value
    return IntegerMatrix.from_rows(rows)


def block_diagonal(*blocks: IntegerMatrix) -> IntegerMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[0] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.entries):
            rows[r0 + i][c0 : c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return IntegerMatrix.from_rows(rows)


def parse_matrix(text: str) -> IntegerMatrix:
    """One row per line, whitespace-separated integers; blank lines and ``#`` comments skipped."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"bad matrix row {line!r}") from exc
    if not rows:
        raise ParseError("matrix text has no rows")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have unequal lengths")
    return IntegerMatrix.from_rows(rows)


def format_matrix(m: IntegerMatrix) -> str:
    width = max(len(str(x)) for row in m.entries for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m.entries)
