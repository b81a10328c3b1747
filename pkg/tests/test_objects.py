import random

import pytest

from conftest import random_object
from gridgaps import (
    Cell,
    DigitalObject,
    DuplicateVoxelError,
    Tandem,
    adjacent_voxels,
    b_count,
    block,
    census,
    find_tandem,
    intersection_cell,
    strictly_adjacent,
)


class TestDigitalObject:
    def test_strict_duplicates(self):
        with pytest.raises(DuplicateVoxelError):
            DigitalObject.from_points([(0, 0, 0), (0, 0, 0)], strict=True)

    def test_lenient_duplicates(self):
        obj = DigitalObject.from_points([(0, 0, 0), (0, 0, 0), (1, 0, 0)])
        assert len(obj) == 2
        assert obj.duplicates_dropped == 1

    def test_empty_object(self):
        obj = DigitalObject.from_points([], 3)
        assert len(obj) == 0
        assert census(obj).counts() == (0, 0, 0, 0)

    def test_empty_needs_dimension(self):
        with pytest.raises(ValueError):
            DigitalObject.from_points([])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            DigitalObject.from_points([(0, 0, 0), (1, 1)])


class TestCensus:
    def test_single_voxel(self, single_voxel):
        cen = census(single_voxel)
        assert cen.counts() == (8, 12, 6, 1)
        for i in range(3):
            assert cen.free_count(i) == cen.count(i)
            assert cen.nonfree_count(i) == 0

    def test_tandem_pair(self, tandem_pair):
        cen = census(tandem_pair)
        assert cen.counts() == (14, 23, 12, 2)

    def test_face_pair(self, face_pair):
        cen = census(face_pair)
        assert cen.counts()[:3] == (12, 20, 11)
        assert cen.nonfree_count(2) == 1
        (shared,) = cen.nonfree_cells(2)
        assert shared == Cell((1, 0, 0))

    def test_partition_on_random_objects(self):
        rng = random.Random(7)
        for _ in range(30):
            obj = random_object(rng)
            cen = census(obj)
            for i in range(3):
                assert cen.count(i) == cen.free_count(i) + cen.nonfree_count(i)

    @pytest.mark.parametrize("n,box", [(2, 5), (3, 4), (4, 3)])
    def test_facet_identity_general_n(self, n, box):
        rng = random.Random(n)
        for _ in range(15):
            obj = random_object(rng, max_voxels=20, box=box, n=n)
            cen = census(obj)
            assert cen.count(n - 1) == 2 * n * cen.count(n) - cen.nonfree_count(n - 1)

    def test_order_independence(self):
        rng = random.Random(11)
        pts = sorted(random_object(rng).voxels)
        shuffled = pts[:]
        rng.shuffle(shuffled)
        c1 = census(DigitalObject.from_points(pts, 3))
        c2 = census(DigitalObject.from_points(shuffled, 3))
        for i in range(4):
            assert c1.cells(i) == c2.cells(i)
            if i < 3:
                assert c1.free_cells(i) == c2.free_cells(i)


class TestAdjacency:
    def test_corner_contact(self):
        obj = DigitalObject.from_points([(0, 0, 0), (1, 1, 1)])
        assert adjacent_voxels(obj, (0, 0, 0), 0) == {(1, 1, 1)}
        assert adjacent_voxels(obj, (0, 0, 0), 1) == set()

    def test_face_contact(self):
        obj = DigitalObject.from_points([(0, 0, 0), (1, 0, 0)])
        assert adjacent_voxels(obj, (0, 0, 0), 2) == {(1, 0, 0)}

    def test_missing_voxel(self):
        obj = DigitalObject.from_points([(0, 0, 0)])
        with pytest.raises(ValueError):
            adjacent_voxels(obj, (5, 5, 5), 0)

    def test_strictly_adjacent(self):
        assert strictly_adjacent((0, 0, 0), (1, 1, 1), 0)
        assert strictly_adjacent((0, 0, 0), (1, 1, 0), 1)
        assert not strictly_adjacent((0, 0, 0), (1, 1, 0), 0)
        for i in range(3):
            assert not strictly_adjacent((0, 0, 0), (2, 0, 0), i)

    def test_strictly_adjacent_needs_distinct(self):
        with pytest.raises(ValueError):
            strictly_adjacent((0, 0, 0), (0, 0, 0), 0)


class TestIntersection:
    def test_shared_vertex(self):
        assert intersection_cell((0, 0, 0), (1, 1, 1)) == Cell((1, 1, 1))

    def test_shared_face(self):
        assert intersection_cell((0, 0, 0), (1, 0, 0)) == Cell((1, 0, 0))

    def test_no_contact(self):
        assert intersection_cell((0, 0, 0), (3, 0, 0)) is None
        assert intersection_cell((0, 0, 0), (0, 0, 0)) is None

    def test_dimension_is_equal_axis_count(self):
        rng = random.Random(3)
        for _ in range(200):
            v1 = tuple(rng.randint(-2, 2) for _ in range(3))
            v2 = tuple(rng.randint(-2, 2) for _ in range(3))
            e = intersection_cell(v1, v2)
            touching = v1 != v2 and all(abs(a - b) <= 1 for a, b in zip(v1, v2))
            assert (e is not None) == touching
            if e is not None:
                assert e.dimension == sum(a == b for a, b in zip(v1, v2))


class TestBlocksAndTandems:
    def test_block_alias(self):
        assert set(block(Cell((1, 0, 0)))) == {(0, 0, 0), (1, 0, 0)}
        assert len(block(Cell((1, 1, 1)))) == 8

    def test_tandem_invariants(self):
        with pytest.raises(ValueError):
            Tandem(Cell((1, 1, 1)), ((0, 0, 0), (1, 0, 0)))

    def test_find_tandem(self, tandem_pair, face_pair):
        hub = Cell((1, 1, 0))
        t = find_tandem(tandem_pair, hub)
        assert t is not None and set(t.pair) == {(0, 0, 0), (1, 1, 0)}
        assert find_tandem(face_pair, Cell((1, 1, 0))) is None


class TestBCount:
    def test_single_voxel_binomial(self, single_voxel):
        cen = census(single_voxel)
        vertex = cen.cells(0)[0]
        assert b_count(vertex, single_voxel, 1, cen) == 3

    def test_diagonal_pair_shared_vertex(self, diagonal_pair):
        cen = census(diagonal_pair)
        assert b_count(Cell((1, 1, 1)), diagonal_pair, 1, cen) == 6

    def test_tandem_vertex_on_hub(self, tandem_pair):
        cen = census(tandem_pair)
        # vertices bounding the shared edge (1, 1, 0)
        for v in (Cell((1, 1, -1)), Cell((1, 1, 1))):
            assert b_count(v, tandem_pair, 1, cen) == 5

    def test_range_error(self, single_voxel):
        with pytest.raises(ValueError):
            b_count(Cell((1, 1, 1)), single_voxel, 0)
