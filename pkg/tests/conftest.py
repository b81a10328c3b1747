import random

import pytest

from gridgaps import DigitalObject, generate_curve


def random_object(rng: random.Random, max_voxels: int = 40, box: int = 6, n: int = 3):
    """Uniform random object: distinct voxels in a box^n grid."""
    m = rng.randint(1, max_voxels)
    pts = set()
    while len(pts) < m:
        pts.add(tuple(rng.randrange(box) for _ in range(n)))
    return DigitalObject.from_points(pts, n)


@pytest.fixture(scope="session")
def curve_corpus():
    """The 500 seeded curves used by the acceptance criteria."""
    return [generate_curve(2 + (seed % 39), seed) for seed in range(500)]


@pytest.fixture
def diagonal_pair():
    return DigitalObject.from_points([(0, 0, 0), (1, 1, 1)])


@pytest.fixture
def tandem_pair():
    return DigitalObject.from_points([(0, 0, 0), (1, 1, 0)])


@pytest.fixture
def face_pair():
    return DigitalObject.from_points([(0, 0, 0), (1, 0, 0)])


@pytest.fixture
def single_voxel():
    return DigitalObject.from_points([(0, 0, 0)])


@pytest.fixture
def full_block():
    pts = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    return DigitalObject.from_points(pts)
