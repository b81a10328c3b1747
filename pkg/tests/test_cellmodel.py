import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridgaps import cellmodel as cm
from gridgaps.cellmodel import (
    Cell,
    CoordinateRangeError,
    bounds,
    cell_from,
    cofaces_of,
    cofaces_voxels,
    const_i_from_j,
    const_i_to_j,
    faces_of,
    incident,
    voxel_cell,
)


class TestCellFrom:
    def test_identity_voxel(self):
        e = cell_from((0, 0, 0), (0, 0, 0))
        assert e.coords == (0, 0, 0)
        assert e.dimension == 3

    def test_vertex(self):
        e = cell_from((0, 0, 0), (1, 1, 1))
        assert e.coords == (1, 1, 1)
        assert e.dimension == 0

    def test_mixed(self):
        # expanding the per-axis product by hand: intervals on axes 0 and 2
        e = cell_from((2, 0, -1), (0, -1, 0))
        assert e.coords == (4, -1, -2)
        assert e.dimension == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cell_from((0, 0), (0, 0, 0))

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            cell_from((0, 0), (0, 2))

    def test_range_check(self):
        with pytest.raises(CoordinateRangeError):
            cell_from((2**61 + 1, 0, 0), (0, 0, 0))
        cell_from((2**61, 0, 0), (1, 0, 0))  # boundary is fine

    @given(
        st.lists(st.integers(-50, 50), min_size=1, max_size=4),
        st.data(),
    )
    def test_dimension_matches_direction(self, x, data):
        theta = data.draw(
            st.lists(st.sampled_from([-1, 0, 1]), min_size=len(x), max_size=len(x))
        )
        e = cell_from(x, theta)
        assert e.dimension == len(x) - sum(t * t for t in theta)


class TestDimension:
    @pytest.mark.parametrize(
        "coords,dim",
        [((0, 0, 0), 3), ((1, 1, 1), 0), ((1, 0, 2), 2), ((-3, 4), 1)],
    )
    def test_examples(self, coords, dim):
        assert Cell(coords).dimension == dim


class TestIncidence:
    def test_reflexive(self):
        e = Cell((1, 0, 2))
        assert incident(e, e)

    def test_corner_of_cube(self):
        assert incident(Cell((1, 1, 1)), Cell((0, 0, 0)))

    def test_far_vertex(self):
        assert not incident(Cell((3, 1, 1)), Cell((0, 0, 0)))

    def test_symmetric_on_samples(self):
        rng = random.Random(1)
        cells = [Cell(tuple(rng.randint(-2, 2) for _ in range(3))) for _ in range(60)]
        for e1 in cells:
            for e2 in cells:
                assert incident(e1, e2) == incident(e2, e1)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            incident(Cell((0, 0)), Cell((0, 0, 0)))


class TestBounds:
    def test_vertex_bounds_voxel(self):
        assert bounds(Cell((1, 1, 1)), Cell((0, 0, 0)))

    def test_irreflexive(self):
        e = Cell((0, 0, 0))
        assert not bounds(e, e)

    def test_edge_bounds_face(self):
        assert bounds(Cell((1, 1, 0)), Cell((1, 0, 0)))

    def test_transitive_on_samples(self):
        rng = random.Random(2)
        cells = [Cell(tuple(rng.randint(-2, 2) for _ in range(3))) for _ in range(40)]
        for e1 in cells:
            for e2 in cells:
                if not bounds(e1, e2):
                    continue
                for e3 in cells:
                    if bounds(e2, e3):
                        assert bounds(e1, e3)


class TestFacesAndCofaces:
    def test_voxel_top_face_is_itself(self):
        v = voxel_cell((0, 0, 0))
        assert faces_of(v, 3) == (v,)

    def test_voxel_vertex_count(self):
        assert len(faces_of(voxel_cell((0, 0, 0)), 0)) == 8

    def test_voxel_edge_count(self):
        assert len(faces_of(voxel_cell((0, 0, 0)), 1)) == 12

    def test_faces_sorted_and_bounded(self):
        v = voxel_cell((1, -2, 0))
        fs = faces_of(v, 1)
        assert list(fs) == sorted(fs, key=lambda c: c.coords)
        assert all(bounds(f, v) for f in fs)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            faces_of(voxel_cell((0, 0, 0)), 4)
        with pytest.raises(ValueError):
            faces_of(Cell((1, 1, 1)), 1)

    @pytest.mark.parametrize("coords,count", [((1, 1, 1), 8), ((1, 1, 0), 4), ((1, 0, 0), 2)])
    def test_block_sizes(self, coords, count):
        e = Cell(coords)
        vs = cofaces_voxels(e)
        assert len(vs) == count == 2 ** (3 - e.dimension)
        assert all(bounds(e, v) for v in vs)

    def test_cofaces_of_voxel_errors(self):
        with pytest.raises(ValueError):
            cofaces_voxels(voxel_cell((0, 0, 0)))


class TestConstants:
    def test_prop_values(self):
        assert const_i_to_j(0, 1) == 2
        assert const_i_from_j(0, 1, 3) == 6
        assert const_i_to_j(2, 3) == 6
        assert const_i_from_j(2, 3, 3) == 2

    def test_order_violation(self):
        with pytest.raises(ValueError):
            const_i_to_j(2, 2)
        with pytest.raises(ValueError):
            const_i_from_j(3, 2, 3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_against_enumeration(self, n):
        for j in range(1, n + 1):
            for i in range(j):
                j_cell = cell_from((0,) * n, (0,) * j + (1,) * (n - j))
                i_cell = cell_from((0,) * n, (1,) * (n - i) + (0,) * i)
                assert len(faces_of(j_cell, i)) == const_i_to_j(i, j)
                assert len(cofaces_of(i_cell, j)) == const_i_from_j(i, j, n)

    def test_enumeration_position_independent(self):
        # the constants cannot depend on which cell of that dimension we pick
        n = 3
        for theta in product((-1, 0, 1), repeat=n):
            e = cell_from((1, -1, 2), theta)
            i = e.dimension
            for j in range(i + 1, n + 1):
                assert len(cofaces_of(e, j)) == const_i_from_j(i, j, n)


def test_half_str():
    assert cm.half_str(4) == "2"
    assert cm.half_str(3) == "3/2"
    assert cm.half_str(-1) == "-1/2"
    assert str(Cell((1, 0, -3))) == "(1/2, 0, -3/2)"


def test_voxel_point_roundtrip():
    assert voxel_cell((4, -2, 0)).voxel_point() == (4, -2, 0)
    with pytest.raises(ValueError):
        Cell((1, 0, 0)).voxel_point()
