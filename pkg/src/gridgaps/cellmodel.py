"""Cells of the cubical grid model, in doubled integer coordinates.

A cell of the n-dimensional grid is the Cartesian product, per axis, of
either a closed unit interval [x - 1/2, x + 1/2] or a half-integer
singleton {x - 1/2} / {x + 1/2}.  We encode each axis as a single
integer: the even value 2x stands for the interval around x, the odd
values 2x - 1 and 2x + 1 stand for the singletons.  Two cells are equal
iff their coordinate vectors are equal, so identity is plain tuple
equality and sets of cells need no further normalization.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

Point = tuple[int, ...]

# Voxel coordinates are kept within |x| <= 2**61 so that doubling and the
# +/-1 facet offsets stay inside signed 64-bit range (the compiled kernel
# works on int64).  Doubled entries therefore satisfy |c| <= 2**62 + 1.
MAX_POINT_COORD = 2**61
_MAX_DOUBLED = 2 * MAX_POINT_COORD + 1


class CoordinateRangeError(ValueError):
    """A coordinate lies outside the documented safe range."""


def _check_doubled(coords: tuple[int, ...]) -> None:
    for c in coords:
        if abs(c) > _MAX_DOUBLED:
            raise CoordinateRangeError(
                f"doubled coordinate {c} exceeds the safe range |c| <= 2^62+1"
            )


@dataclass(frozen=True, slots=True)
class Cell:
    """An i-cell in doubled coordinates; even entries are interval axes."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_doubled(self.coords)

    @property
    def ambient_n(self) -> int:
        return len(self.coords)

    @property
    def dimension(self) -> int:
        return sum(1 for c in self.coords if c % 2 == 0)

    @property
    def is_voxel(self) -> bool:
        return all(c % 2 == 0 for c in self.coords)

    def voxel_point(self) -> Point:
        """Integer center of an n-voxel cell."""
        if not self.is_voxel:
            raise ValueError(f"{self} is not a voxel")
        return tuple(c // 2 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(half_str(c) for c in self.coords) + ")"


def half_str(doubled: int) -> str:
    """Exact rendering of a doubled coordinate: 4 -> '2', 3 -> '3/2'."""
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


def check_direction(theta: Sequence[int]) -> tuple[int, ...]:
    """Validate a direction word over {-1, 0, 1} and return it as a tuple."""
    word = tuple(theta)
    if any(t not in (-1, 0, 1) for t in word):
        raise ValueError(f"direction entries must be in {{-1, 0, 1}}, got {word}")
    return word


def cell_from(x: Sequence[int], theta: Sequence[int]) -> Cell:
    """Build the cell selected by a center point and a direction word.

    Axis j carries the interval around x[j] when theta[j] == 0 and the
    half-integer singleton x[j] + theta[j]/2 otherwise; the dimension of
    the result is the number of zero entries of theta.
    """
    word = check_direction(theta)
    if len(x) != len(word):
        raise ValueError(f"point has length {len(x)}, direction has length {len(word)}")
    if len(word) == 0:
        raise ValueError("ambient dimension must be positive")
    for xi in x:
        if abs(xi) > MAX_POINT_COORD:
            raise CoordinateRangeError(f"coordinate {xi} exceeds |x| <= 2^61")
    return Cell(tuple(2 * xi + t for xi, t in zip(x, word)))


def voxel_cell(x: Sequence[int]) -> Cell:
    """The n-voxel centered at an integer point."""
    return cell_from(x, (0,) * len(x))


def dimension(e: Cell) -> int:
    return e.dimension


def _same_ambient(e1: Cell, e2: Cell) -> None:
    if e1.ambient_n != e2.ambient_n:
        raise ValueError(
            f"ambient dimensions differ: {e1.ambient_n} vs {e2.ambient_n}"
        )


def contains(outer: Cell, inner: Cell) -> bool:
    """Point-set containment inner ⊆ outer, tested axis by axis."""
    _same_ambient(outer, inner)
    for a, b in zip(inner.coords, outer.coords):
        if b % 2 != 0:
            if a != b:
                return False
        elif abs(a - b) > 1:
            return False
    return True


def incident(e1: Cell, e2: Cell) -> bool:
    """True iff one cell contains the other as point sets."""
    return contains(e1, e2) or contains(e2, e1)


def bounds(e1: Cell, e2: Cell) -> bool:
    """The bounding relation: e1 < e2 iff incident with strictly smaller dim."""
    return e1.dimension < e2.dimension and contains(e2, e1)


def faces_of(e: Cell, i: int) -> tuple[Cell, ...]:
    """All i-cells contained in e (e itself when i == dim(e)).

    Each even axis independently keeps its interval or collapses to one
    of the two bounding singletons; exactly i axes stay even.  Returned
    in lexicographic coordinate order so output is reproducible.
    """
    k = e.dimension
    if not 0 <= i <= k:
        raise ValueError(f"face dimension {i} out of range [0, {k}]")
    even_pos = [j for j, c in enumerate(e.coords) if c % 2 == 0]
    out = []
    for keep in combinations(even_pos, i):
        collapse = [j for j in even_pos if j not in keep]
        for signs in product((-1, 1), repeat=len(collapse)):
            coords = list(e.coords)
            for j, s in zip(collapse, signs):
                coords[j] += s
            out.append(Cell(tuple(coords)))
    out.sort(key=lambda c: c.coords)
    return tuple(out)


def cofaces_of(e: Cell, j: int) -> tuple[Cell, ...]:
    """All j-cells containing e (e itself when j == dim(e)).

    Each odd axis independently stays a singleton or widens to one of the
    two adjacent intervals; exactly j - dim(e) axes widen.
    """
    i = e.dimension
    if not i <= j <= e.ambient_n:
        raise ValueError(f"coface dimension {j} out of range [{i}, {e.ambient_n}]")
    odd_pos = [p for p, c in enumerate(e.coords) if c % 2 != 0]
    out = []
    for widen in combinations(odd_pos, j - i):
        for signs in product((-1, 1), repeat=len(widen)):
            coords = list(e.coords)
            for p, s in zip(widen, signs):
                coords[p] += s
            out.append(Cell(tuple(coords)))
    out.sort(key=lambda c: c.coords)
    return tuple(out)


def cofaces_voxels(e: Cell) -> tuple[Cell, ...]:
    """The n-voxels bounded by e: the block of e, 2^(n-i) voxels."""
    if e.is_voxel:
        raise ValueError("cell is already an n-voxel")
    return cofaces_of(e, e.ambient_n)


def const_i_to_j(i: int, j: int) -> int:
    """Number of i-cells bounding a j-cell: 2^(j-i) * C(j, i)."""
    if not 0 <= i < j:
        raise ValueError(f"need 0 <= i < j, got i={i}, j={j}")
    return 2 ** (j - i) * comb(j, i)


def const_i_from_j(i: int, j: int, n: int) -> int:
    """Number of j-cells bounded by an i-cell in ambient n: 2^(j-i) * C(n-i, j-i)."""
    if not 0 <= i < j <= n:
        raise ValueError(f"need 0 <= i < j <= n, got i={i}, j={j}, n={n}")
    return 2 ** (j - i) * comb(n - i, j - i)


def cells_sorted(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    return tuple(sorted(cells, key=lambda c: c.coords))
