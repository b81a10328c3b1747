"""Digital k-curve validation and a seeded random 0-curve generator.

A digital k-curve is an object where every voxel has one or two
k-adjacent neighbors and the two neighbors of any voxel are never
k-adjacent to each other.  Voxels with exactly one neighbor are the
extreme points.  The generator grows open 0-curves by a backtracking
random walk driven by a self-contained SplitMix64 stream, so a given
(length, seed) pair always yields the same voxel set on any platform.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cellmodel import Point
from .objects import DigitalObject, adjacent_voxels

DEGREE_ZERO = "degree_zero"
DEGREE_OVER_TWO = "degree_over_two"
NEIGHBORS_MUTUALLY_ADJACENT = "neighbors_mutually_adjacent"


class GenerationError(RuntimeError):
    """The random-walk generator exhausted its attempt cap."""


@dataclass(frozen=True, slots=True)
class Violation:
    voxel: Point
    reason: str


@dataclass(frozen=True, slots=True)
class CurveCheck:
    is_valid: bool
    violations: tuple[Violation, ...]
    extremes: tuple[Point, ...]
    component_count: int


def validate_curve(obj: DigitalObject, k: int = 0) -> CurveCheck:
    """Check both curve conditions voxel by voxel.

    Violations are data, not errors.  Multiple connected components are
    allowed (reported informatively); closed curves have no extremes.
    """
    n = obj.ambient_n
    if not 0 <= k < n:
        raise ValueError(f"adjacency index {k} out of range [0, {n})")
    violations: list[Violation] = []
    extremes: list[Point] = []
    neighbor_map: dict[Point, set[Point]] = {}
    for v in obj:
        nb = adjacent_voxels(obj, v, k)
        neighbor_map[v] = nb
        if len(nb) == 0:
            violations.append(Violation(v, DEGREE_ZERO))
        elif len(nb) == 1:
            extremes.append(v)
        elif len(nb) == 2:
            v1, v2 = sorted(nb)
            if v1 in adjacent_voxels(obj, v2, k):
                violations.append(Violation(v, NEIGHBORS_MUTUALLY_ADJACENT))
        else:
            violations.append(Violation(v, DEGREE_OVER_TWO))
    return CurveCheck(
        is_valid=not violations,
        violations=tuple(violations),
        extremes=tuple(sorted(extremes)),
        component_count=_component_count(obj),
    )


def _component_count(obj: DigitalObject) -> int:
    """Connected components under 0-adjacency."""
    todo = set(obj.voxels)
    count = 0
    while todo:
        count += 1
        stack = [todo.pop()]
        while stack:
            v = stack.pop()
            for w in adjacent_voxels(obj, v, 0):
                if w in todo:
                    todo.remove(w)
                    stack.append(w)
    return count


class SplitMix64:
    """Deterministic 64-bit stream; fixed algorithm, platform-independent."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        # rejection sampling keeps the draw unbiased
        limit = self._MASK - (self._MASK + 1) % n
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


_STEPS_3D: tuple[Point, ...] = tuple(
    off for off in product((-1, 0, 1), repeat=3) if any(off)
)

# Walks restart from scratch after too many dead ends; the cap bounds total
# work so generation always terminates (with an error in the worst case).
MAX_WALK_ATTEMPTS = 200


def generate_curve(length: int, seed: int, k: int = 0) -> DigitalObject:
    """Grow a random open digital 0-curve with ``length`` voxels.

    Each step appends a voxel 0-adjacent to the current endpoint and
    touching no other voxel of the walk; dead ends backtrack, and a walk
    that backtracks past its start is abandoned for a fresh one.
    """
    if length < 2:
        raise ValueError(f"curve length must be >= 2, got {length}")
    if k != 0:
        raise ValueError("only 0-adjacency generation is supported")
    rng = SplitMix64((seed << 8) ^ length)
    for _ in range(MAX_WALK_ATTEMPTS):
        walk = _try_walk(length, rng)
        if walk is not None:
            obj = DigitalObject.from_points(walk, 3)
            # the growth rule should make this unconditional; verify anyway
            if validate_curve(obj, 0).is_valid:
                return obj
    raise GenerationError(
        f"no valid curve of length {length} found in {MAX_WALK_ATTEMPTS} walks"
    )


def _try_walk(length: int, rng: SplitMix64) -> list[Point] | None:
    walk: list[Point] = [(0, 0, 0)]
    occupied: set[Point] = {walk[0]}
    # per-depth candidate queues enable backtracking without repetition
    pending: list[list[Point]] = [_shuffled_steps(rng)]
    while len(walk) < length:
        tip = walk[-1]
        candidates = pending[-1]
        placed = False
        while candidates:
            step = candidates.pop()
            w = (tip[0] + step[0], tip[1] + step[1], tip[2] + step[2])
            if w in occupied or _touches_interior(w, occupied, tip):
                continue
            walk.append(w)
            occupied.add(w)
            pending.append(_shuffled_steps(rng))
            placed = True
            break
        if not placed:
            if len(walk) == 1:
                return None
            occupied.remove(walk.pop())
            pending.pop()
    return walk


def _shuffled_steps(rng: SplitMix64) -> list[Point]:
    steps = list(_STEPS_3D)
    rng.shuffle(steps)
    return steps


def _touches_interior(w: Point, occupied: set[Point], tip: Point) -> bool:
    """True if w is 0-adjacent to any walk voxel other than the tip."""
    for step in _STEPS_3D:
        u = (w[0] + step[0], w[1] + step[1], w[2] + step[2])
        if u != tip and u in occupied:
            return True
    return False
