"""Pure-Python enumeration kernels.

Fallback for the compiled extension in ``_kernels.pyx``; both expose the
same three functions over int64 arrays of doubled cell coordinates.  The
voxel array passed to ``free_mask`` / ``hub_mask`` must hold unique rows
sorted lexicographically (``np.unique(arr, axis=0)`` ordering).
"""
from __future__ import annotations

from itertools import product

import numpy as np

BACKEND_NAME = "python"


def enumerate_candidate_cells(vox2: np.ndarray) -> np.ndarray:
    """All 3^n face candidates of every voxel, duplicates included."""
    m, n = vox2.shape
    offsets = np.array(list(product((-1, 0, 1), repeat=n)), dtype=np.int64)
    return (vox2[:, None, :] + offsets[None, :, :]).reshape(m * 3**n, n)


def free_mask(cells2: np.ndarray, vox2: np.ndarray) -> np.ndarray:
    """For each cell, whether some voxel of its block is missing."""
    vox = {tuple(row) for row in vox2.tolist()}
    out = np.zeros(len(cells2), dtype=bool)
    for r, row in enumerate(cells2.tolist()):
        odd = [j for j, c in enumerate(row) if c % 2 != 0]
        for signs in product((-1, 1), repeat=len(odd)):
            w = list(row)
            for j, s in zip(odd, signs):
                w[j] += s
            if tuple(w) not in vox:
                out[r] = True
                break
    return out


def hub_mask(cells2: np.ndarray, vox2: np.ndarray) -> np.ndarray:
    """For each cell, whether its block meets the object in exactly the
    antipodal voxel pair through the cell (the gap configuration)."""
    vox = {tuple(row) for row in vox2.tolist()}
    out = np.zeros(len(cells2), dtype=bool)
    for r, row in enumerate(cells2.tolist()):
        odd = [j for j, c in enumerate(row) if c % 2 != 0]
        occupied = []
        for signs in product((-1, 1), repeat=len(odd)):
            w = list(row)
            for j, s in zip(odd, signs):
                w[j] += s
            if tuple(w) in vox:
                occupied.append(signs)
                if len(occupied) > 2:
                    break
        # antipodal pair: opposite sign on every non-interval axis
        out[r] = (
            len(occupied) == 2
            and all(a == -b for a, b in zip(occupied[0], occupied[1]))
        )
    return out
