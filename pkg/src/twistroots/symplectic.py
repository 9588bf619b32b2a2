"""Integer symplectic matrices, transvections and the homology shadow of the root.

Coordinates are taken in the ordered basis a_1, b_1, ..., a_g, b_g with
pairing ``<x, y> = x^T J y`` where J has blocks ((0, 1), (-1, 0)).  A Dehn
twist about a curve of class v acts as the transvection
``x -> x + <x, v> v``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce as _fold
from math import gcd, isqrt
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConstructionError, DimensionError, UnsupportedRankError
from .matrix import IntegerMatrix, block_diagonal, elementary_matrix

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyClass:
    coordinates: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(int(c) for c in self.coordinates))
        if len(self.coordinates) % 2:
            raise DimensionError("homology class needs an even number of coordinates")

    @property
    def genus(self) -> int:
        return len(self.coordinates) // 2

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        return HomologyClass(tuple(a + b for a, b in zip(self.coordinates, other.coordinates, strict=True)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-c for c in self.coordinates))

    def is_primitive(self) -> bool:
        return _fold(gcd, self.coordinates, 0) == 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coordinates):
            if c:
                name = f"{'ab'[k % 2]}{k // 2 + 1}"
                terms.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def basis_class(g: int, kind: str, i: int) -> HomologyClass:
    """``a_i`` or ``b_i`` (1-based handle index) in genus g."""
    coords = [0] * (2 * g)
    coords[2 * (i - 1) + (kind == "b")] = 1
    return HomologyClass(tuple(coords))


@dataclass(frozen=True)
class SymplecticForm:
    g: int

    @property
    def dim(self) -> int:
        return 2 * self.g

    @property
    def matrix(self) -> IntegerMatrix:
        return block_diagonal(*[IntegerMatrix.from_rows([[0, 1], [-1, 0]])] * self.g)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError(f"vectors must have length {self.dim}")
        return sum(x[2 * h] * y[2 * h + 1] - x[2 * h + 1] * y[2 * h] for h in range(self.g))


def form_for(dim: int) -> SymplecticForm:
    if dim % 2:
        raise DimensionError(f"symplectic forms need even dimension, got {dim}")
    return SymplecticForm(dim // 2)


def transvection(v: HomologyClass, form: SymplecticForm | None = None, multiplier: int = 1) -> IntegerMatrix:
    """Matrix of ``x -> x + multiplier * <x, v> v``."""
    form = form or SymplecticForm(v.genus)
    if len(v.coordinates) != form.dim:
        raise DimensionError(f"class of length {len(v.coordinates)} for a form of dimension {form.dim}")
    # <x, v> = (J v) . x
    jv = form.matrix.apply(v.coordinates)
    n = form.dim
    return IntegerMatrix.from_rows(
        [int(i == j) + multiplier * v.coordinates[i] * jv[j] for j in range(n)] for i in range(n)
    )


def is_symplectic(m: IntegerMatrix, form: SymplecticForm | None = None) -> bool:
    if not m.is_square or m.rows % 2:
        raise DimensionError(f"need a square even-dimensional matrix, got {m.shape}")
    form = form or form_for(m.rows)
    if form.dim != m.rows:
        raise DimensionError("form and matrix dimensions differ")
    j = form.matrix
    return m.T @ j @ m == j


def symplectic_inverse(m: IntegerMatrix, form: SymplecticForm | None = None) -> IntegerMatrix:
    """Inverse of a symplectic matrix via M^-1 = -J M^T J."""
    form = form or form_for(m.rows)
    j = form.matrix
    return -(j @ m.T @ j)


def pairing_matrix(classes: Sequence[HomologyClass], form: SymplecticForm | None = None) -> IntegerMatrix:
    form = form or SymplecticForm(classes[0].genus)
    return IntegerMatrix.from_rows(
        [form.pair(u.coordinates, v.coordinates) for v in classes] for u in classes
    )


def chain_classes(g: int) -> list[HomologyClass]:
    """b_1, a_1 + a_2, b_2, a_2 + a_3, ..., b_g: consecutive classes pair to +-1, others to 0."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    out = []
    for i in range(1, g + 1):
        out.append(basis_class(g, "b", i))
        if i < g:
            out.append(basis_class(g, "a", i) + basis_class(g, "a", i + 1))
    return out


def extract_twist_class(m: IntegerMatrix, form: SymplecticForm | None = None) -> HomologyClass | None:
    """Recover v from the matrix of ``x -> x + 2<x, v> v``, or None if m has another shape.

    The sign of v is normalized so the first nonzero coordinate is positive.
    """
    if not m.is_square or m.rows % 2:
        raise DimensionError(f"need a square even-dimensional matrix, got {m.shape}")
    form = form or form_for(m.rows)
    n = m.rows
    # (M - I) J = 2 v v^T
    outer = (m - IntegerMatrix.identity(n)) @ form.matrix
    if any(x % 2 for row in outer.entries for x in row):
        return None
    vvt = IntegerMatrix.from_rows([x // 2 for x in row] for row in outer.entries)
    diag = [vvt[i, i] for i in range(n)]
    if any(d < 0 or isqrt(d) ** 2 != d for d in diag):
        return None
    pivot = next((i for i, d in enumerate(diag) if d), None)
    if pivot is None:
        return HomologyClass((0,) * n) if vvt == IntegerMatrix.zeros(n, n) else None
    root = isqrt(diag[pivot])
    row = vvt.entries[pivot]
    if any(x % root for x in row):
        return None
    v = tuple(x // root for x in row)
    candidate = HomologyClass(v)
    if transvection(candidate, form, multiplier=2) != m:
        return None
    return candidate


def chain_word_matrix(g: int) -> IntegerMatrix:
    """Homology image of T_{c1}^2 T_{c2} ... T_{c_{2g-1}}."""
    form = SymplecticForm(g)
    classes = chain_classes(g)
    mats = [transvection(classes[0], form)] + [transvection(c, form) for c in classes]
    return _fold(lambda a, b: a @ b, mats)


@dataclass(frozen=True)
class HomologicalChain:
    g: int
    chain_matrix: IntegerMatrix
    boundary_class: HomologyClass


def homological_chain(g: int) -> HomologicalChain:
    w = chain_word_matrix(g)
    total = w ** (2 * g - 1)
    d = extract_twist_class(total)
    if d is None:
        raise ConstructionError(f"W^(2g-1) is not a squared transvection for g={g}")
    return HomologicalChain(g, w, d)


def verify_homological_chain(g: int) -> HomologyClass:
    """Return [d] with W^(2g-1) = T_d^2 on H_1; raises ConstructionError otherwise."""
    chain = homological_chain(g)
    d = chain.boundary_class
    if not d.is_primitive():
        raise ConstructionError(f"boundary class {d} is not primitive")
    if chain.chain_matrix ** (2 * g - 1) != transvection(d) ** 2:
        raise ConstructionError("extracted class does not reproduce W^(2g-1)")
    return d


def homological_root(g: int) -> tuple[IntegerMatrix, IntegerMatrix]:
    """The root W^(1-g) T_d and the twist T_d, as integer matrices."""
    chain = homological_chain(g)
    t_d = transvection(chain.boundary_class)
    w_inv = symplectic_inverse(chain.chain_matrix)
    return (w_inv ** (g - 1)) @ t_d, t_d


def verify_homological_root(g: int) -> bool:
    root, t_d = homological_root(g)
    return root ** (2 * g - 1) == t_d and root != t_d and is_symplectic(root)


PAPER_CUBE_ROOT = IntegerMatrix.from_rows(
    [
        [1, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 1, -1, 1],
        [0, 1, -1, 0],
    ]
)
PAPER_CUBE_TARGET = IntegerMatrix.from_rows(
    [
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
)


def paper_cube_example(root: IntegerMatrix = PAPER_CUBE_ROOT, target: IntegerMatrix = PAPER_CUBE_TARGET) -> bool:
    return root ** 3 == target


def stabilize(m: IntegerMatrix, target_dim: int) -> IntegerMatrix:
    if not m.is_square:
        raise DimensionError("only square matrices can be stabilized")
    if target_dim < m.rows:
        raise DimensionError(f"cannot stabilize a {m.rows}x{m.rows} matrix to {target_dim}")
    if target_dim == m.rows:
        return m
    return block_diagonal(m, IntegerMatrix.identity(target_dim - m.rows))


def nielsen_elementary(n: int) -> IntegerMatrix:
    """Abelianization of x1 -> x1 x2: identity plus a unit in row 2, column 1."""
    return elementary_matrix(n, 1, 0)


def nielsen_sl_root(n: int) -> IntegerMatrix:
    """A matrix R in SL(n, Z) with R^2 equal to :func:`nielsen_elementary`.

    R is minus the abelianized free-group root padded by the identity.  The
    abelianized root has determinant -1, so this is already in SL(n, Z) for
    odd n; for even n the x4 diagonal entry is reset to +1.
    """
    from .autos import abelianize, nielsen_root

    if n < 3:
        raise UnsupportedRankError(f"the square root needs n >= 3, got {n}")
    rows = (-abelianize(nielsen_root(n).forward)).tolist()
    if n % 2 == 0:
        rows[3][3] = 1
    return IntegerMatrix.from_rows(rows)


class SL2Finding(NamedTuple):
    root: IntegerMatrix
    power: int


_UNIPOTENT = np.array([[1, 1], [0, 1]])


def _sl2_candidates(bound: int) -> np.ndarray:
    """All (a, b, c, d) with ad - bc = 1 and entries in [-bound, bound], lexicographic."""
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    b, c = np.meshgrid(r, r, indexing="ij")
    b, c = b.ravel(), c.ravel()
    chunks = []
    for a in r:
        if a == 0:
            keep = b * c == -1
            bb, cc = b[keep], c[keep]
            for d in r:
                chunks.append(np.stack([np.zeros_like(bb), bb, cc, np.full_like(bb, d)], axis=1))
            continue
        num = 1 + b * c
        keep = (num % a == 0) & (np.abs(num // a) <= bound)
        d = num[keep] // a
        chunks.append(np.stack([np.full_like(d, a), b[keep], c[keep], d], axis=1))
    cand = np.concatenate(chunks)
    order = np.lexsort(cand.T[::-1])
    return cand[order]


def sl2_root_search(entry_bound: int, max_power: int) -> list[SL2Finding]:
    """Exhaustive search for R in SL(2, Z) with R^m = ((1, 1), (0, 1)), 2 <= m <= max_power.

    A bounded corroboration that the twist on the torus has no roots; the
    expected result is an empty list.
    """
    if entry_bound < 1 or max_power < 2:
        raise ValueError("need entry_bound >= 1 and max_power >= 2")
    cand = _sl2_candidates(entry_bound)
    # entries of R^m are bounded by (2 * bound)^(m - 1) * bound
    dtype = np.int64 if (2 * entry_bound) ** max_power < 2**62 else object
    mats = cand.astype(dtype).reshape(-1, 2, 2)
    log.debug("sl2 search over %d candidates", len(mats))
    findings = []
    power = mats.copy()
    for m in range(2, max_power + 1):
        power = np.matmul(power, mats)
        hit = np.all(power.reshape(-1, 4) == _UNIPOTENT.ravel(), axis=1)
        for idx in np.flatnonzero(hit):
            findings.append(SL2Finding(IntegerMatrix.from_rows(mats[idx].tolist()), m))
    findings.sort(key=lambda f: (f.root.entries, f.power))
    return findings
