"""Hub detection and the closed-form gap counts.

An i-gap (i <= n-2) occurs where the block of an i-cell meets the object
in exactly the two antipodal voxels through that cell; the cell is the
hub of the gap.  Brute-force detection scans every i-cell of the object.
The closed forms are specific to 3D: g1 = 2*c2_free - c1_free holds for
arbitrary objects, while g0 = -c0 + 2*c1 - 4*c2 + 8*c3 needs the curve
hypothesis (see the curves module).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .cellmodel import Cell, cells_sorted, faces_of
from .objects import CellCensus, DigitalObject, census


class ClassificationOverlapError(RuntimeError):
    """Vertex classes expected to be disjoint overlap on this object."""


def detect_hubs(
    obj: DigitalObject, i: int, cen: CellCensus | None = None
) -> tuple[Cell, ...]:
    """All i-hubs of the object, in lexicographic coordinate order.

    Hubs are scanned over the object's own i-cells only; a hub bounds
    both voxels of its gap, so no other lattice cell can qualify.
    """
    n = obj.ambient_n
    if not 0 <= i <= n - 2:
        raise ValueError(f"gap dimension {i} out of range [0, {n - 2}]")
    if cen is None:
        cen = census(obj)
    cells = cen.cells(i)
    if not cells:
        return ()
    arr = np.ascontiguousarray(np.array([c.coords for c in cells], dtype=np.int64))
    mask = kernels.hub_mask(arr, obj.doubled_array())
    return tuple(c for c, m in zip(cells, mask) if m)


def g1_closed_form(cen: CellCensus) -> int:
    """1-gap count from free-cell counts: 2*c2_free - c1_free (3D only)."""
    _require_3d(cen.ambient_n)
    return 2 * cen.free_count(2) - cen.free_count(1)


def g0_closed_form(cen: CellCensus) -> int:
    """0-gap count of a 3D digital 0-curve: -c0 + 2*c1 - 4*c2 + 8*c3.

    The caller is responsible for the curve hypothesis; on non-curves the
    value need not match the brute-force count.
    """
    _require_3d(cen.ambient_n)
    c0, c1, c2, c3 = cen.counts()
    return -c0 + 2 * c1 - 4 * c2 + 8 * c3


def csi_sides(
    obj: DigitalObject, cen: CellCensus | None = None
) -> tuple[int, int]:
    """Both sides of 3*c0 + 4*c2' + 4*g1 + 3*g0 = 2*c1 (brute-force gaps)."""
    _require_3d(obj.ambient_n)
    if cen is None:
        cen = census(obj)
    g0 = len(detect_hubs(obj, 0, cen))
    g1 = len(detect_hubs(obj, 1, cen))
    left = 3 * cen.count(0) + 4 * cen.nonfree_count(2) + 4 * g1 + 3 * g0
    right = 2 * cen.count(1)
    return left, right


def csi_identity_check(obj: DigitalObject, cen: CellCensus | None = None) -> bool:
    left, right = csi_sides(obj, cen)
    return left == right


@dataclass(frozen=True, slots=True)
class GapReport:
    """Hubs and gap counts of one object, with 3D closed-form comparison."""

    ambient_n: int
    hubs: tuple[tuple[Cell, ...], ...]  # index i in [0, n-2]
    g1_formula: int | None
    g0_formula: int | None

    def gap_count(self, i: int) -> int:
        return len(self.hubs[i])

    @property
    def g1_agrees(self) -> bool | None:
        if self.g1_formula is None:
            return None
        return self.g1_formula == self.gap_count(1)

    @property
    def g0_agrees(self) -> bool | None:
        if self.g0_formula is None:
            return None
        return self.g0_formula == self.gap_count(0)


def gap_report(obj: DigitalObject, cen: CellCensus | None = None) -> GapReport:
    if cen is None:
        cen = census(obj)
    n = obj.ambient_n
    hubs = tuple(detect_hubs(obj, i, cen) for i in range(max(n - 1, 0)))
    g1f = g1_closed_form(cen) if n == 3 else None
    g0f = g0_closed_form(cen) if n == 3 else None
    return GapReport(n, hubs, g1f, g0f)


@dataclass(frozen=True, slots=True)
class VertexClassification:
    """Partition of the vertices of a 3D curve by local configuration.

    hub_vertices: 0-hubs themselves; edge degree 6.
    tandem_vertices: vertices bounding some 1-hub; edge degree 5.
    face_vertices: vertices bounding some non-free 2-cell; edge degree 4.
    rest: all remaining vertices; edge degree 3.
    """

    hub_vertices: tuple[Cell, ...]
    tandem_vertices: tuple[Cell, ...]
    face_vertices: tuple[Cell, ...]
    rest: tuple[Cell, ...]
    edge_degree: dict[Cell, int]

    def degrees(self, which: tuple[Cell, ...]) -> tuple[int, ...]:
        return tuple(self.edge_degree[c] for c in which)


def edge_degree_map(cen: CellCensus) -> dict[Cell, int]:
    """For each vertex, the number of 1-cells of the object it bounds."""
    deg: dict[Cell, int] = {c: 0 for c in cen.cells(0)}
    for edge in cen.cells(1):
        for v in faces_of(edge, 0):
            deg[v] += 1
    return deg


def vertex_classification(
    obj: DigitalObject, cen: CellCensus | None = None
) -> VertexClassification:
    """Classify curve vertices into the four disjoint local-configuration
    classes; raises ClassificationOverlapError if they fail to be disjoint
    (which would break the additive degree count the classes exist for)."""
    _require_3d(obj.ambient_n)
    if cen is None:
        cen = census(obj)
    hub0 = set(detect_hubs(obj, 0, cen))
    hub1 = detect_hubs(obj, 1, cen)
    near_hub1 = {v for e in hub1 for v in faces_of(e, 0)}
    near_block = {v for f in cen.nonfree_cells(2) for v in faces_of(f, 0)}
    for (na, a), (nb, b) in (
        (("hub_vertices", hub0), ("tandem_vertices", near_hub1)),
        (("hub_vertices", hub0), ("face_vertices", near_block)),
        (("tandem_vertices", near_hub1), ("face_vertices", near_block)),
    ):
        common = a & b
        if common:
            raise ClassificationOverlapError(
                f"classes {na} and {nb} share vertices {sorted(c.coords for c in common)}"
            )
    assigned = hub0 | near_hub1 | near_block
    rest = [c for c in cen.cells(0) if c not in assigned]
    return VertexClassification(
        hub_vertices=cells_sorted(hub0),
        tandem_vertices=cells_sorted(near_hub1),
        face_vertices=cells_sorted(near_block),
        rest=cells_sorted(rest),
        edge_degree=edge_degree_map(cen),
    )


def _require_3d(n: int) -> None:
    if n != 3:
        raise ValueError(f"closed forms are specific to ambient dimension 3, got {n}")
