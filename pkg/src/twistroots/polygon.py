"""Combinatorial model of a polygon with glued sides and its rotations.

Sides of a ``2m``-gon are numbered counterclockwise; side ``i`` runs from
corner ``P_i`` to ``P_{i+1}``.  Every gluing here identifies side ``i`` with
``partner[i]`` reversing the boundary direction, which is what keeps the
surface orientable.

Each side doubles as a dart starting at its initial corner.  Turning
counterclockwise around a vertex takes the dart ``i`` to ``partner[i - 1]``;
the cycles of that permutation are the vertices of the surface, listed in
their counterclockwise order.  A rotation by ``shift`` side positions moves
dart ``i`` to dart ``i + shift``.  If it fixes a vertex, it advances that
vertex's dart cycle by some ``r`` steps, and ``r / cycle_length`` is the
counterclockwise rotation number there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import UnsupportedGluing
from .rootcalc import TwistLedger, geometric_ledger, ledger_check


@dataclass(frozen=True)
class PolygonGluing:
    sides: int
    partner: tuple[int, ...]
    reverses: tuple[bool, ...] | None = None

    def __post_init__(self):
        if self.sides < 2 or self.sides % 2:
            raise UnsupportedGluing(f"need an even number of sides, got {self.sides}")
        if len(self.partner) != self.sides:
            raise UnsupportedGluing("pairing must list a partner for every side")
        for i, j in enumerate(self.partner):
            if not 0 <= j < self.sides or j == i or self.partner[j] != i:
                raise UnsupportedGluing("pairing must be a fixed-point-free involution")
        if self.reverses is not None and not all(self.reverses):
            raise UnsupportedGluing("only orientation-reversing side gluings give orientable surfaces")


def opposite_gluing(sides: int) -> PolygonGluing:
    half = sides // 2
    return PolygonGluing(sides, tuple((i + half) % sides for i in range(sides)))


def build_polygon(g: int) -> PolygonGluing:
    """Regular (4g-2)-gon with side i glued to side i + 2g - 1."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return opposite_gluing(4 * g - 2)


def vertex_step(p: PolygonGluing, dart: int) -> int:
    return p.partner[(dart - 1) % p.sides]


def vertex_cycles(p: PolygonGluing) -> list[tuple[int, ...]]:
    """Dart cycles around each vertex, counterclockwise, each starting at its smallest dart."""
    seen: set[int] = set()
    cycles = []
    for start in range(p.sides):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        d = vertex_step(p, start)
        while d != start:
            cycle.append(d)
            seen.add(d)
            d = vertex_step(p, d)
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class SurfaceInvariants:
    vertex_orbits: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: int


def surface_invariants(p: PolygonGluing) -> SurfaceInvariants:
    v = len(vertex_cycles(p))
    e = p.sides // 2
    chi = v - e + 1
    if chi > 2 or chi % 2:
        raise UnsupportedGluing(f"Euler characteristic {chi} is not that of a closed orientable surface")
    return SurfaceInvariants(v, e, 1, chi, (2 - chi) // 2)


@dataclass(frozen=True)
class RotationMap:
    shift: int
    order_on_surface: int
    fixed_point_rotation_numbers: tuple[Fraction, Fraction]
    ccw_rotation_numbers: tuple[Fraction, ...]
    center_rotation_number: Fraction


def rotation_numbers(p: PolygonGluing, shift: int) -> tuple[Fraction, ...]:
    """Counterclockwise rotation number at each vertex, in :func:`vertex_cycles` order.

    Raises UnsupportedGluing if the rotation does not respect the gluing or
    moves a vertex.
    """
    s = p.sides
    for i in range(s):
        if p.partner[(i + shift) % s] != (p.partner[i] + shift) % s:
            raise UnsupportedGluing(f"rotation by {shift} does not respect the gluing")
    out = []
    for cycle in vertex_cycles(p):
        image = (cycle[0] + shift) % s
        if image not in cycle:
            raise UnsupportedGluing(f"rotation by {shift} does not fix vertex {cycle[0]}")
        out.append(Fraction(cycle.index(image), len(cycle)))
    return tuple(out)


def rotation_map(g: int, shift: int | None = None) -> RotationMap:
    """Rotation of the (4g-2)-gon by ``shift`` sides; defaults to 2g, an angle of 2 pi g/(2g-1).

    ``fixed_point_rotation_numbers`` reports x counterclockwise and y
    clockwise, so that the pair reads as a twist on each side of the curve
    obtained by gluing the two boundary circles.
    """
    p = build_polygon(g)
    s = p.sides
    shift = 2 * g if shift is None else shift % s
    if not 0 < shift < s:
        raise ValueError("shift must be a nontrivial rotation")
    ccw = rotation_numbers(p, shift)
    if len(ccw) != 2:
        raise UnsupportedGluing(f"expected two vertices, found {len(ccw)}")
    rot_x, rot_y = ccw
    reported = (rot_x, (1 - rot_y) % 1)
    return RotationMap(
        shift=shift,
        order_on_surface=s // gcd(shift, s),
        fixed_point_rotation_numbers=reported,
        ccw_rotation_numbers=ccw,
        center_rotation_number=Fraction(shift, s),
    )


def lefschetz_residue(rotations: Sequence[Fraction], order: int) -> int:
    """Sum of the inverses mod order of the rotation numerators at the fixed points.

    For a cyclic action with rational quotient this sum vanishes; the check
    is independent of the dart walk used to compute the rotation numbers.
    """
    total = 0
    for rho in rotations:
        numer = (rho * order)
        if numer.denominator != 1:
            raise ValueError(f"rotation number {rho} does not have denominator dividing {order}")
        total += pow(int(numer), -1, order)
    return total % order


def realizing_shifts(g: int) -> list[int]:
    """Shifts whose rotation fixes x and y with rotation numbers (g/(2g-1), (g-1)/(2g-1))."""
    target = expected_rotation_numbers(g)
    out = []
    for shift in range(2, 4 * g - 2, 2):
        rot = rotation_map(g, shift)
        if rot.order_on_surface == 2 * g - 1 and rot.fixed_point_rotation_numbers == target:
            out.append(shift)
    return out


def expected_rotation_numbers(g: int) -> tuple[Fraction, Fraction]:
    n = 2 * g - 1
    return Fraction(g, n), Fraction(g - 1, n)


def rotation_ledger(rot: RotationMap) -> TwistLedger:
    """Twist contributions read off the actual fixed-point rotation numbers."""
    x, y = rot.fixed_point_rotation_numbers
    return TwistLedger((x, -y), rot.order_on_surface, 1, label="rotation")


@dataclass(frozen=True)
class GeometricCheck:
    g: int
    invariants: SurfaceInvariants
    rotation: RotationMap
    genus_ok: bool
    orbits_ok: bool
    order_ok: bool
    rotation_numbers_ok: bool
    ledger_ok: bool

    @property
    def passed(self) -> bool:
        return self.genus_ok and self.orbits_ok and self.order_ok and self.rotation_numbers_ok and self.ledger_ok


def check_geometric_root(g: int, shift: int | None = None) -> GeometricCheck:
    invariants = surface_invariants(build_polygon(g))
    rot = rotation_map(g, shift)
    return GeometricCheck(
        g=g,
        invariants=invariants,
        rotation=rot,
        genus_ok=invariants.genus == g - 1,
        orbits_ok=invariants.vertex_orbits == 2,
        order_ok=rot.order_on_surface == 2 * g - 1,
        rotation_numbers_ok=rot.fixed_point_rotation_numbers == expected_rotation_numbers(g),
        ledger_ok=ledger_check(geometric_ledger(g)),
    )


def verify_geometric_root(g: int, shift: int | None = None) -> bool:
    return check_geometric_root(g, shift).passed


def verify_gluing(p: PolygonGluing, shift: int, genus: int) -> bool:
    """Discrete checks for an arbitrary gluing: genus, two vertices, both fixed by the rotation."""
    inv = surface_invariants(p)
    if inv.genus != genus or inv.vertex_orbits != 2:
        return False
    try:
        rotation_numbers(p, shift)
    except UnsupportedGluing:
        return False
    return True
