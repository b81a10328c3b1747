# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contract as ``_kernels_py``: int64 arrays of doubled cell
coordinates in, numpy arrays out.  Voxel arrays must hold unique rows in
lexicographic order; block-membership tests use binary search on that
order instead of hashing, so coordinates anywhere in int64 range work.
"""
import numpy as np

from libc.stdint cimport int64_t

BACKEND_NAME = "compiled"


cdef bint _contains_row(int64_t[:, ::1] arr, int64_t[::1] key) nogil:
    cdef Py_ssize_t lo = 0, hi = arr.shape[0], mid, j
    cdef int cmp
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = 0
        for j in range(arr.shape[1]):
            if arr[mid, j] < key[j]:
                cmp = -1
                break
            elif arr[mid, j] > key[j]:
                cmp = 1
                break
        if cmp < 0:
            lo = mid + 1
        elif cmp > 0:
            hi = mid
        else:
            return True
    return False


def enumerate_candidate_cells(int64_t[:, ::1] vox2):
    """All 3^n face candidates of every voxel, duplicates included."""
    cdef Py_ssize_t m = vox2.shape[0], n = vox2.shape[1]
    cdef Py_ssize_t total = 1, v, t, j, r = 0
    for j in range(n):
        total *= 3
    out_arr = np.empty((m * total, n), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t rem
    with nogil:
        for v in range(m):
            for t in range(total):
                # digits of t in base 3 give the per-axis offset -1/0/1
                r = v * total + t
                rem = t
                for j in range(n):
                    out[r, j] = vox2[v, j] + (rem % 3) - 1
                    rem //= 3
    return out_arr


def free_mask(int64_t[:, ::1] cells2, int64_t[:, ::1] vox2):
    """For each cell, whether some voxel of its block is missing."""
    cdef Py_ssize_t rows = cells2.shape[0], n = cells2.shape[1]
    cdef Py_ssize_t r, j, t, kk, mask
    out_arr = np.zeros(rows, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    key_arr = np.empty(n, dtype=np.int64)
    odd_arr = np.empty(n, dtype=np.intp)
    cdef int64_t[::1] key = key_arr
    cdef Py_ssize_t[::1] odd = odd_arr
    with nogil:
        for r in range(rows):
            kk = 0
            for j in range(n):
                if cells2[r, j] & 1:
                    odd[kk] = j
                    kk += 1
            for mask in range(1 << kk):
                for j in range(n):
                    key[j] = cells2[r, j]
                for t in range(kk):
                    if (mask >> t) & 1:
                        key[odd[t]] += 1
                    else:
                        key[odd[t]] -= 1
                if not _contains_row(vox2, key):
                    out[r] = 1
                    break
    return out_arr.view(bool)


def hub_mask(int64_t[:, ::1] cells2, int64_t[:, ::1] vox2):
    """For each cell, whether its block meets the object in exactly the
    antipodal voxel pair through the cell (the gap configuration)."""
    cdef Py_ssize_t rows = cells2.shape[0], n = cells2.shape[1]
    cdef Py_ssize_t r, j, t, kk, mask, count, first, second
    out_arr = np.zeros(rows, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    key_arr = np.empty(n, dtype=np.int64)
    odd_arr = np.empty(n, dtype=np.intp)
    cdef int64_t[::1] key = key_arr
    cdef Py_ssize_t[::1] odd = odd_arr
    with nogil:
        for r in range(rows):
            kk = 0
            for j in range(n):
                if cells2[r, j] & 1:
                    odd[kk] = j
                    kk += 1
            count = 0
            first = -1
            second = -1
            for mask in range(1 << kk):
                for j in range(n):
                    key[j] = cells2[r, j]
                for t in range(kk):
                    if (mask >> t) & 1:
                        key[odd[t]] += 1
                    else:
                        key[odd[t]] -= 1
                if _contains_row(vox2, key):
                    count += 1
                    if count > 2:
                        break
                    if first < 0:
                        first = mask
                    else:
                        second = mask
            # antipodal pair: complementary sign masks
            if count == 2 and (first ^ second) == (1 << kk) - 1:
                out[r] = 1
    return out_arr.view(bool)
