"""Exhaustive subset-enumeration kernels.

Both brute-force oracles reduce to one problem: given ``k`` items, each with an
``occupy`` bitmask and a ``forbid`` bitmask, find the largest subset ``S`` such
that no item's ``occupy`` meets another item's ``forbid``. For independent sets
an item is a vertex (occupy = its own bit, forbid = its neighborhood); for
matchings an item is an edge (occupy = forbid = its two endpoints).

Both backends tabulate every subset of a low half and a high half of the items
by repeated doubling, then scan all (high, low) pairs for compatibility.

* ``numba`` -- the tabulation and scan as compiled loops.
* ``numpy`` -- the same, vectorized over the low half.

``_packing_max_py`` is a plain per-mask reference scan used in tests.

Set ``ALPHALINE_NUMBA=0`` to force the numpy path. Both return the numerically
smallest optimal mask, so results are identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("ALPHALINE_NUMBA", "1") != "0"
BACKEND = "numba" if USE_NUMBA else "numpy"

# items in the low half; its tables hold 2**_LOW_BITS entries
_LOW_BITS = 16


def _packing_max_py(occupy: np.ndarray, forbid: np.ndarray) -> tuple[int, int]:
    k = occupy.shape[0]
    best, best_mask = 0, 0
    for mask in range(1 << k):
        size = 0
        occ = 0
        forb = 0
        ok = True
        for i in range(k):
            if (mask >> i) & 1:
                if (occ & forbid[i]) != 0 or (forb & occupy[i]) != 0:
                    ok = False
                    break
                occ |= occupy[i]
                forb |= forbid[i]
                size += 1
        if ok and size > best:
            best = size
            best_mask = mask
    return best, best_mask


def _expand_loops(occupy, forbid):
    k = occupy.shape[0]
    total = 1 << k
    valid = np.ones(total, dtype=np.bool_)
    size = np.zeros(total, dtype=np.int64)
    occ = np.zeros(total, dtype=np.int64)
    forb = np.zeros(total, dtype=np.int64)
    for i in range(k):
        lo = 1 << i
        for s in range(lo):
            t = lo + s
            valid[t] = valid[s] and (occ[s] & forbid[i]) == 0 and (forb[s] & occupy[i]) == 0
            size[t] = size[s] + 1
            occ[t] = occ[s] | occupy[i]
            forb[t] = forb[s] | forbid[i]
    return valid, size, occ, forb


def _split_search_loops(occupy, forbid, n_low):
    lo_valid, lo_size, lo_occ, lo_forb = _expand_loops(occupy[:n_low], forbid[:n_low])
    hi_valid, hi_size, hi_occ, hi_forb = _expand_loops(occupy[n_low:], forbid[n_low:])
    best = -1
    best_mask = 0
    for h in range(hi_valid.shape[0]):
        if not hi_valid[h] or hi_size[h] + n_low <= best:
            continue
        ho = hi_occ[h]
        hf = hi_forb[h]
        for j in range(lo_valid.shape[0]):
            if lo_valid[j] and (lo_occ[j] & hf) == 0 and (lo_forb[j] & ho) == 0:
                total = lo_size[j] + hi_size[h]
                if total > best:
                    best = total
                    best_mask = (h << n_low) | j
    return best, best_mask


if numba is not None:
    _expand_loops = numba.njit(cache=True, nogil=True)(_expand_loops)
    _split_search_numba = numba.njit(cache=True, nogil=True)(_split_search_loops)
else:  # pragma: no cover
    _split_search_numba = None


def packing_max_numba(occupy: np.ndarray, forbid: np.ndarray) -> tuple[int, int]:
    if _split_search_numba is None:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    occupy = np.ascontiguousarray(occupy, dtype=np.int64)
    forbid = np.ascontiguousarray(forbid, dtype=np.int64)
    best, mask = _split_search_numba(occupy, forbid, min(occupy.shape[0], _LOW_BITS))
    return int(best), int(mask)


def _expand(occupy: np.ndarray, forbid: np.ndarray):
    """Tabulate every subset of the given items by repeated doubling.

    Returns ``(valid, size, occ, forb)`` arrays indexed by subset mask.
    """
    k = occupy.shape[0]
    total = 1 << k
    valid = np.ones(total, dtype=bool)
    size = np.zeros(total, dtype=np.int8)
    occ = np.zeros(total, dtype=np.int64)
    forb = np.zeros(total, dtype=np.int64)
    for i in range(k):
        lo, hi = 1 << i, 1 << (i + 1)
        valid[lo:hi] = (
            valid[:lo] & ((occ[:lo] & forbid[i]) == 0) & ((forb[:lo] & occupy[i]) == 0)
        )
        size[lo:hi] = size[:lo] + 1
        occ[lo:hi] = occ[:lo] | occupy[i]
        forb[lo:hi] = forb[:lo] | forbid[i]
    return valid, size, occ, forb


def packing_max_numpy(occupy: np.ndarray, forbid: np.ndarray) -> tuple[int, int]:
    occupy = np.asarray(occupy, dtype=np.int64)
    forbid = np.asarray(forbid, dtype=np.int64)
    k = occupy.shape[0]
    n_low = min(k, _LOW_BITS)
    lo_valid, lo_size, lo_occ, lo_forb = _expand(occupy[:n_low], forbid[:n_low])
    hi_valid, hi_size, hi_occ, hi_forb = _expand(occupy[n_low:], forbid[n_low:])
    best, best_mask = -1, 0
    for h in np.flatnonzero(hi_valid):
        ok = lo_valid & ((lo_occ & hi_forb[h]) == 0) & ((lo_forb & hi_occ[h]) == 0)
        sizes = np.where(ok, lo_size, -1)
        j = int(np.argmax(sizes))
        total = int(sizes[j]) + int(hi_size[h])
        if sizes[j] >= 0 and total > best:
            best, best_mask = total, (int(h) << n_low) | j
    return best, best_mask


def packing_max(occupy, forbid) -> tuple[int, int]:
    """Largest compatible subset as ``(size, mask)`` using the active backend."""
    occupy = np.asarray(occupy, dtype=np.int64).reshape(-1)
    forbid = np.asarray(forbid, dtype=np.int64).reshape(-1)
    if occupy.shape != forbid.shape:
        raise ValueError("occupy and forbid must have the same length")
    if USE_NUMBA:
        return packing_max_numba(occupy, forbid)
    return packing_max_numpy(occupy, forbid)
