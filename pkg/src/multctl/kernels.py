"""Lattice kernels.

Every hot loop has two implementations with identical results: a numba
``@njit`` version and a pure-numpy version.  The numba path is used when
numba imports and ``MULTCTL_DISABLE_NUMBA`` is unset (or ``0``); the public
names at the bottom of this module dispatch accordingly.

All arithmetic is int64.  Callers guard magnitudes with :func:`fits_int64`
before handing data in; nothing here rounds.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

INT64_LIMIT = 2**62


def numba_enabled() -> bool:
    flag = os.environ.get("MULTCTL_DISABLE_NUMBA", "").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def fits_int64(*bounds: int) -> bool:
    prod = 1
    for b in bounds:
        prod *= max(int(b), 1)
    return prod < INT64_LIMIT


# --------------------------------------------------------------------------
# numpy implementations


def antichain_mask_numpy(points: np.ndarray) -> np.ndarray:
    """Mask of the componentwise-minimal rows of a lexicographically sorted,
    duplicate-free int array."""
    n = points.shape[0]
    keep = np.ones(n, dtype=np.bool_)
    chunk = max(1, 2_000_000 // max(n, 1))
    for start in range(0, n, chunk):
        block = points[start:start + chunk]
        # le[i, j]: points[j] <= block[i] componentwise
        le = np.all(points[None, :, :] <= block[:, None, :], axis=2)
        idx = np.arange(start, start + block.shape[0])
        le[np.arange(block.shape[0]), idx] = False
        keep[idx] = ~le.any(axis=1)
    return keep


def _grid_points(bounds: np.ndarray) -> np.ndarray:
    shape = tuple(int(b) + 1 for b in bounds)
    return np.indices(shape, dtype=np.int64).reshape(len(shape), -1).T


def mu_grid_numpy(bounds: np.ndarray, fnum: np.ndarray, fden: np.ndarray):
    """min_k fnum[k].(w+1) / fden[k] over the box prod [0, bounds[j]].

    Returns unreduced (numerator, denominator) arrays in C order.
    """
    pts = _grid_points(bounds) + 1
    vals = pts @ fnum.T  # (P, K)
    lcm = int(np.lcm.reduce(fden))
    scaled = vals * (lcm // fden)[None, :]
    k = np.argmin(scaled, axis=1)
    rows = np.arange(pts.shape[0])
    return vals[rows, k], fden[k]


def frontier_numpy(bounds: np.ndarray, fnum: np.ndarray, fden: np.ndarray, cnum: int, cden: int) -> np.ndarray:
    """Minimal w in the box with mu(w+1) > c.

    Vectorised, a whole-box membership mask followed by :func:`grid_minimal`
    beats a layer-by-layer sweep: the sweep's dominance test scales with the
    number of generators found, the mask does not.
    """
    pts = _grid_points(bounds) + 1
    inside = np.empty(pts.shape[0], dtype=np.bool_)
    step = max(1, 4_000_000 // max(fnum.shape[0], 1))
    for s in range(0, pts.shape[0], step):
        vals = pts[s:s + step] @ fnum.T
        # mu > c  iff  every facet value exceeds c
        inside[s:s + step] = np.all(vals * cden > cnum * fden[None, :], axis=1)
    return grid_minimal(inside.reshape(tuple(int(b) + 1 for b in bounds)))


# --------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @njit(cache=True)
    def antichain_mask_numba(points):
        n, d = points.shape
        keep = np.ones(n, dtype=np.bool_)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                le = True
                for t in range(d):
                    if points[j, t] > points[i, t]:
                        le = False
                        break
                if le:
                    keep[i] = False
                    break
        return keep

    @njit(cache=True)
    def mu_grid_numba(bounds, fnum, fden):
        n = bounds.shape[0]
        total = 1
        for j in range(n):
            total *= bounds[j] + 1
        out_num = np.empty(total, dtype=np.int64)
        out_den = np.empty(total, dtype=np.int64)
        w = np.zeros(n, dtype=np.int64)
        K = fnum.shape[0]
        for idx in range(total):
            bn = -1
            bd = 1
            for k in range(K):
                s = 0
                for j in range(n):
                    s += fnum[k, j] * (w[j] + 1)
                if bn < 0 or s * bd < bn * fden[k]:
                    bn = s
                    bd = fden[k]
            out_num[idx] = bn
            out_den[idx] = bd
            # C-order increment (last index fastest)
            j = n - 1
            while j >= 0:
                w[j] += 1
                if w[j] <= bounds[j]:
                    break
                w[j] = 0
                j -= 1
        return out_num, out_den

    @njit(cache=True)
    def inside_mask_numba(bounds, fnum, fden, cnum, cden):
        # inside[idx] is True iff mu(w+1) > c, i.e. every facet value exceeds c
        n = bounds.shape[0]
        total = 1
        for j in range(n):
            total *= bounds[j] + 1
        inside = np.empty(total, dtype=np.bool_)
        w = np.zeros(n, dtype=np.int64)
        K = fnum.shape[0]
        for idx in range(total):
            ok = True
            for k in range(K):
                s = 0
                for j in range(n):
                    s += fnum[k, j] * (w[j] + 1)
                if s * cden <= cnum * fden[k]:
                    ok = False
                    break
            inside[idx] = ok
            j = n - 1
            while j >= 0:
                w[j] += 1
                if w[j] <= bounds[j]:
                    break
                w[j] = 0
                j -= 1
        return inside

    def frontier_numba(bounds, fnum, fden, cnum, cden):
        inside = inside_mask_numba(bounds, fnum, fden, cnum, cden)
        return grid_minimal(inside.reshape(tuple(int(b) + 1 for b in bounds)))

else:  # pragma: no cover
    antichain_mask_numba = antichain_mask_numpy
    mu_grid_numba = mu_grid_numpy
    frontier_numba = frontier_numpy


# --------------------------------------------------------------------------
# dispatch


def antichain_mask(points: np.ndarray) -> np.ndarray:
    if points.shape[0] <= 1:
        return np.ones(points.shape[0], dtype=np.bool_)
    if numba_enabled():
        return antichain_mask_numba(points)
    return antichain_mask_numpy(points)


def mu_grid(bounds: np.ndarray, fnum: np.ndarray, fden: np.ndarray):
    if numba_enabled():
        return mu_grid_numba(bounds, fnum, fden)
    return mu_grid_numpy(bounds, fnum, fden)


def frontier(bounds: np.ndarray, fnum: np.ndarray, fden: np.ndarray, cnum: int, cden: int) -> np.ndarray:
    if numba_enabled():
        out = frontier_numba(bounds, fnum, fden, np.int64(cnum), np.int64(cden))
    else:
        out = frontier_numpy(bounds, fnum, fden, cnum, cden)
    if out.shape[0] > 1:
        out = out[np.lexsort(out.T[::-1])]
    return out


def grid_minimal(inside: np.ndarray) -> np.ndarray:
    """Minimal points of a boolean up-set stored on a box grid."""
    minimal = inside.copy()
    for axis in range(inside.ndim):
        shifted = np.zeros_like(inside)
        src = [slice(None)] * inside.ndim
        dst = [slice(None)] * inside.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        shifted[tuple(dst)] = inside[tuple(src)]
        minimal &= ~shifted
    return np.argwhere(minimal).astype(np.int64)
