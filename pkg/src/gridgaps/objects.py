"""Digital objects and their cell censuses.

A digital n-object is a finite set of n-voxels given by integer center
points.  The census enumerates every cell of every voxel (an O(|D|*3^n)
sweep with deduplication) and partitions each dimension's cells into
free and non-free ones, where a cell is free when its block of
2^(n-i) voxels is not fully contained in the object.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .backend import kernels
from .cellmodel import (
    MAX_POINT_COORD,
    Cell,
    CoordinateRangeError,
    Point,
    cofaces_of,
    cofaces_voxels,
)


class DuplicateVoxelError(ValueError):
    """Duplicate voxels were supplied in strict mode."""


@dataclass(frozen=True, slots=True)
class DigitalObject:
    ambient_n: int
    voxels: frozenset[Point]
    duplicates_dropped: int = field(default=0, compare=False)

    @classmethod
    def from_points(
        cls,
        points: Iterable[Sequence[int]],
        ambient_n: int | None = None,
        *,
        strict: bool = False,
    ) -> "DigitalObject":
        """Build an object from integer center points.

        Duplicate points raise in strict mode; otherwise they are dropped
        and counted in ``duplicates_dropped``.  The empty object is legal
        when ``ambient_n`` is given explicitly.
        """
        seen: set[Point] = set()
        dupes = 0
        n = ambient_n
        for p in points:
            v = tuple(int(c) for c in p)
            if n is None:
                n = len(v)
            elif len(v) != n:
                raise ValueError(f"voxel {v} has length {len(v)}, expected {n}")
            if any(abs(c) > MAX_POINT_COORD for c in v):
                raise CoordinateRangeError(f"voxel {v} outside |x| <= 2^61")
            if v in seen:
                if strict:
                    raise DuplicateVoxelError(f"duplicate voxel {v}")
                dupes += 1
            else:
                seen.add(v)
        if n is None:
            raise ValueError("cannot infer ambient dimension of an empty object")
        if n < 1:
            raise ValueError("ambient dimension must be positive")
        return cls(n, frozenset(seen), dupes)

    def __len__(self) -> int:
        return len(self.voxels)

    def __contains__(self, v: object) -> bool:
        return v in self.voxels

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.voxels))

    def doubled_array(self) -> np.ndarray:
        """Unique voxel coords, doubled, lexicographically sorted int64."""
        if not self.voxels:
            return np.empty((0, self.ambient_n), dtype=np.int64)
        arr = np.array(sorted(self.voxels), dtype=np.int64) * 2
        return np.ascontiguousarray(arr)


class CellCensus:
    """Per-dimension cell inventory of an object with free/non-free split."""

    def __init__(
        self,
        ambient_n: int,
        cells_by_dim: Sequence[tuple[Cell, ...]],
        free_by_dim: Sequence[tuple[bool, ...]],
    ):
        self.ambient_n = ambient_n
        self._cells = tuple(cells_by_dim)
        self._free = tuple(free_by_dim)
        self._sets = tuple(frozenset(cs) for cs in self._cells)

    def cells(self, i: int) -> tuple[Cell, ...]:
        return self._cells[i]

    def free_cells(self, i: int) -> tuple[Cell, ...]:
        self._check_proper(i)
        return tuple(c for c, f in zip(self._cells[i], self._free[i]) if f)

    def nonfree_cells(self, i: int) -> tuple[Cell, ...]:
        self._check_proper(i)
        return tuple(c for c, f in zip(self._cells[i], self._free[i]) if not f)

    def count(self, i: int) -> int:
        return len(self._cells[i])

    def free_count(self, i: int) -> int:
        return sum(self._free[i])

    def nonfree_count(self, i: int) -> int:
        self._check_proper(i)
        return len(self._cells[i]) - sum(self._free[i])

    def counts(self) -> tuple[int, ...]:
        """The vector (c_0, ..., c_n)."""
        return tuple(len(cs) for cs in self._cells)

    def __contains__(self, e: Cell) -> bool:
        return e in self._sets[e.dimension]

    def _check_proper(self, i: int) -> None:
        if not 0 <= i < self.ambient_n:
            raise ValueError(f"free/non-free split is defined for 0 <= i < n, got {i}")


def census(obj: DigitalObject) -> CellCensus:
    n = obj.ambient_n
    vox2 = obj.doubled_array()
    if len(vox2) == 0:
        return CellCensus(n, [()] * (n + 1), [()] * (n + 1))
    all_cells = np.unique(kernels.enumerate_candidate_cells(vox2), axis=0)
    dims = n - np.count_nonzero(all_cells % 2 != 0, axis=1)
    cells_by_dim: list[tuple[Cell, ...]] = []
    free_by_dim: list[tuple[bool, ...]] = []
    for i in range(n + 1):
        arr = np.ascontiguousarray(all_cells[dims == i])
        cells_by_dim.append(tuple(Cell(tuple(row)) for row in arr.tolist()))
        if i < n:
            free_by_dim.append(tuple(bool(f) for f in kernels.free_mask(arr, vox2)))
        else:
            free_by_dim.append(())
    return CellCensus(n, cells_by_dim, free_by_dim)


def adjacent_voxels(obj: DigitalObject, v: Sequence[int], k: int) -> set[Point]:
    """Voxels of the object sharing at least a k-cell with v."""
    vt = tuple(int(c) for c in v)
    if vt not in obj.voxels:
        raise ValueError(f"voxel {vt} is not in the object")
    n = obj.ambient_n
    if not 0 <= k < n:
        raise ValueError(f"adjacency index {k} out of range [0, {n})")
    out: set[Point] = set()
    for off in product((-1, 0, 1), repeat=n):
        if all(d == 0 for d in off):
            continue
        # equal axes >= k means the shared cell has dimension >= k
        if sum(1 for d in off if d == 0) < k:
            continue
        w = tuple(a + d for a, d in zip(vt, off))
        if w in obj.voxels:
            out.add(w)
    return out


def strictly_adjacent(v1: Sequence[int], v2: Sequence[int], i: int) -> bool:
    """True iff the voxels intersect in exactly an i-cell."""
    a, b = tuple(v1), tuple(v2)
    if a == b:
        raise ValueError("strict adjacency needs two distinct voxels")
    if len(a) != len(b):
        raise ValueError("voxels have different ambient dimensions")
    diffs = [abs(x - y) for x, y in zip(a, b)]
    if any(d > 1 for d in diffs):
        return False
    return diffs.count(0) == i


def intersection_cell(v1: Sequence[int], v2: Sequence[int]) -> Cell | None:
    """The shared cell of two voxels, or None when they do not touch."""
    a, b = tuple(int(c) for c in v1), tuple(int(c) for c in v2)
    if len(a) != len(b):
        raise ValueError("voxels have different ambient dimensions")
    if a == b:
        return None
    coords = []
    for x, y in zip(a, b):
        if x == y:
            coords.append(2 * x)
        elif abs(x - y) == 1:
            coords.append(x + y)
        else:
            return None
    return Cell(tuple(coords))


def block(e: Cell) -> tuple[Point, ...]:
    """The voxel centers of the block B_i(e)."""
    return tuple(v.voxel_point() for v in cofaces_voxels(e))


@dataclass(frozen=True, slots=True)
class Tandem:
    """Two strictly i-adjacent voxels meeting exactly in the hub cell."""

    hub: Cell
    pair: tuple[Point, Point]

    def __post_init__(self) -> None:
        v1, v2 = self.pair
        if not strictly_adjacent(v1, v2, self.hub.dimension):
            raise ValueError("tandem voxels are not strictly adjacent at hub dimension")
        if intersection_cell(v1, v2) != self.hub:
            raise ValueError("tandem voxels do not intersect in the hub")


def find_tandem(obj: DigitalObject, e: Cell) -> Tandem | None:
    """The tandem of the object over e, if its block holds exactly the
    antipodal voxel pair through e."""
    if e.ambient_n != obj.ambient_n:
        raise ValueError("ambient dimensions differ")
    occupied = [v for v in block(e) if v in obj.voxels]
    if len(occupied) != 2:
        return None
    v1, v2 = occupied
    if intersection_cell(v1, v2) != e:
        return None
    return Tandem(e, (v1, v2))


def b_count(e: Cell, obj: DigitalObject, j: int, cen: CellCensus | None = None) -> int:
    """Number of j-cells of the object bounded by e."""
    if not e.dimension < j <= obj.ambient_n:
        raise ValueError(
            f"need dim(e) < j <= n, got dim={e.dimension}, j={j}, n={obj.ambient_n}"
        )
    if cen is None:
        cen = census(obj)
    return sum(1 for f in cofaces_of(e, j) if f in cen)
