"""Incidence structures and the one-shot identity suite.

The suite re-derives every counting identity on a concrete object and
returns a verdict table of exact integer comparisons.  Curve-specific
rows are emitted only when the object passes curve validation; on a 3D
non-curve the 0-gap formula is still shown, but as an informational row
since its hypothesis does not hold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .cellmodel import Cell, const_i_to_j, faces_of
from .curves import validate_curve
from .gaps import (
    ClassificationOverlapError,
    csi_sides,
    detect_hubs,
    g0_closed_form,
    g1_closed_form,
    vertex_classification,
)
from .objects import CellCensus, DigitalObject, b_count, census

PASS = "pass"
FAIL = "fail"
INFO = "info"

# canonical two-voxel sub-objects used by the fixture identities
FACE_PAIR = DigitalObject.from_points([(0, 0, 0), (1, 0, 0)])
TANDEM_PAIR = DigitalObject.from_points([(0, 0, 0), (1, 1, 0)])
DIAGONAL_PAIR = DigitalObject.from_points([(0, 0, 0), (1, 1, 1)])
SINGLE_VOXEL = DigitalObject.from_points([(0, 0, 0)])


@dataclass(frozen=True, slots=True)
class IncidenceStructure:
    points: frozenset[Hashable]
    blocks: frozenset[Hashable]
    relation: frozenset[tuple[Hashable, Hashable]]

    def __post_init__(self) -> None:
        for p, b in self.relation:
            if p not in self.points or b not in self.blocks:
                raise ValueError(f"relation pair ({p}, {b}) outside points x blocks")


def degree_sum_check(s: IncidenceStructure) -> tuple[int, int, bool]:
    """Sum of point degrees vs sum of block degrees; equal by double counting."""
    point_deg = {p: 0 for p in s.points}
    block_deg = {b: 0 for b in s.blocks}
    for p, b in s.relation:
        point_deg[p] += 1
        block_deg[b] += 1
    left = sum(point_deg.values())
    right = sum(block_deg.values())
    return left, right, left == right


def incidence_between(cen: CellCensus, i: int, j: int) -> IncidenceStructure:
    """The structure (C_i(D), C_j(D), <) of an object's census."""
    if not 0 <= i < j <= cen.ambient_n:
        raise ValueError(f"need 0 <= i < j <= n, got i={i}, j={j}")
    points = frozenset(cen.cells(i))
    blocks = frozenset(cen.cells(j))
    relation = frozenset((f, e) for e in cen.cells(j) for f in faces_of(e, i))
    return IncidenceStructure(points, blocks, relation)


@dataclass(frozen=True, slots=True)
class VerdictRow:
    claim_id: str
    description: str
    expected: int
    observed: int
    status: str  # pass / fail / info


@dataclass(frozen=True, slots=True)
class VerdictTable:
    rows: tuple[VerdictRow, ...]

    @property
    def failures(self) -> tuple[VerdictRow, ...]:
        return tuple(r for r in self.rows if r.status == FAIL)

    @property
    def passed(self) -> bool:
        return not self.failures


def exact_div(num: int, den: int) -> int:
    if num % den != 0:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return num // den


def _row(claim_id: str, description: str, expected: int, observed: int) -> VerdictRow:
    status = PASS if expected == observed else FAIL
    return VerdictRow(claim_id, description, expected, observed, status)


def _fixture_rows() -> list[VerdictRow]:
    rows = []
    fb = census(FACE_PAIR)
    for i in range(3):
        rows.append(
            _row(
                f"face-block-census/i={i}",
                f"face-adjacent pair has (9+{i})/6 * c_{i}to3 cells of dim {i}",
                exact_div((9 + i) * const_i_to_j(i, 3), 6),
                fb.count(i),
            )
        )
    td = census(TANDEM_PAIR)
    for i in range(2):
        rows.append(
            _row(
                f"tandem-census/i={i}",
                f"edge-tandem pair has (42+5*{i}-{i}^2)/24 * c_{i}to3 cells of dim {i}",
                exact_div((42 + 5 * i - i * i) * const_i_to_j(i, 3), 24),
                td.count(i),
            )
        )
    sv = census(SINGLE_VOXEL)
    from math import comb

    for i in range(3):
        for j in range(i + 1, 4):
            expected = comb(3 - i, j - i)
            e = _sample_cell_of_dim(sv, i)
            rows.append(
                _row(
                    f"voxel-bcount/i={i},j={j}",
                    f"single voxel: a {i}-cell bounds C(3-{i},{j}-{i}) {j}-cells",
                    expected,
                    b_count(e, SINGLE_VOXEL, j, sv),
                )
            )
            # quotient form with the empty-product convention c_{n->n} = 1
            cj_n = const_i_to_j(j, 3) if j < 3 else 1
            rows.append(
                _row(
                    f"voxel-bcount-quotient/i={i},j={j}",
                    f"single voxel: quotient form of the {i}->{j} bound count",
                    exact_div(const_i_to_j(i, j) * cj_n, const_i_to_j(i, 3)),
                    b_count(e, SINGLE_VOXEL, j, sv),
                )
            )
    return rows


def _sample_cell_of_dim(cen: CellCensus, i: int) -> Cell:
    return cen.cells(i)[0]


def run_identity_suite(obj: DigitalObject) -> VerdictTable:
    """Every applicable identity on one object, as exact integer rows."""
    n = obj.ambient_n
    cen = census(obj)
    rows: list[VerdictRow] = []

    for i in range(n):
        rows.append(
            _row(
                f"partition/i={i}",
                f"free and non-free {i}-cells partition all {i}-cells",
                cen.count(i),
                cen.free_count(i) + cen.nonfree_count(i),
            )
        )
    rows.append(
        _row(
            "facet-identity",
            f"c_{n-1} = 2*{n}*c_{n} - nonfree c_{n-1}",
            2 * n * cen.count(n) - cen.nonfree_count(n - 1),
            cen.count(n - 1),
        )
    )
    rows.append(
        _row(
            "degree-sum/0-1",
            "vertex-edge incidence: degree sums on both sides agree",
            *degree_sum_check(incidence_between(cen, 0, 1))[:2],
        )
    )

    if n == 3:
        rows.extend(_fixture_rows())
        g1_brute = len(detect_hubs(obj, 1, cen))
        rows.append(
            _row(
                "g1-closed-form",
                "1-gap count equals 2*free c_2 - free c_1",
                g1_brute,
                g1_closed_form(cen),
            )
        )
        check = validate_curve(obj, 0)
        g0_brute = len(detect_hubs(obj, 0, cen))
        if check.is_valid:
            rows.extend(_curve_rows(obj, cen, g0_brute, g1_brute))
        elif len(obj) > 0:
            rows.append(
                VerdictRow(
                    "g0-closed-form",
                    "object is not a 0-curve; formula shown out of hypothesis",
                    g0_brute,
                    g0_closed_form(cen),
                    INFO,
                )
            )
    return VerdictTable(tuple(rows))


def _curve_rows(
    obj: DigitalObject, cen: CellCensus, g0_brute: int, g1_brute: int
) -> list[VerdictRow]:
    rows: list[VerdictRow] = []
    try:
        cls = vertex_classification(obj, cen)
    except ClassificationOverlapError:
        return [
            VerdictRow(
                "vertex-classes",
                "vertex classes overlap; curve assumption violated",
                0,
                1,
                FAIL,
            )
        ]
    c2n = cen.nonfree_count(2)
    sizes = [
        ("hub-vertices", cls.hub_vertices, g0_brute, 6),
        ("tandem-vertices", cls.tandem_vertices, 2 * g1_brute, 5),
        ("face-vertices", cls.face_vertices, 4 * c2n, 4),
        ("rest-vertices", cls.rest, cen.count(0) - g0_brute - 2 * g1_brute - 4 * c2n, 3),
    ]
    for name, members, size, degree in sizes:
        rows.append(
            _row(
                f"class-size/{name}",
                f"number of {name} on the curve",
                size,
                len(members),
            )
        )
        rows.append(
            _row(
                f"class-degree/{name}",
                f"every {name.split('-')[0]} vertex bounds {degree} edges",
                degree * len(members),
                sum(cls.degrees(members)),
            )
        )
    left, right = csi_sides(obj, cen)
    rows.append(
        _row(
            "csi",
            "3*c_0 + 4*nonfree c_2 + 4*g_1 + 3*g_0 = 2*c_1",
            right,
            left,
        )
    )
    rows.append(
        _row(
            "g0-closed-form",
            "0-gap count equals -c_0 + 2c_1 - 4c_2 + 8c_3",
            g0_brute,
            g0_closed_form(cen),
        )
    )
    return rows
