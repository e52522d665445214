"""Integer kernels behind gluing, surgery products and modular rank.

Each kernel has a numba version and a plain numpy version with identical
results. Set ``ARCALG_JIT=0`` in the environment to force the numpy path
(also used automatically when numba cannot be imported).
"""
from __future__ import annotations

import os

import numpy as np

MERGE = 0
SPLIT = 1

#: default prime for modular rank checks (2**31 - 1 keeps products inside int64)
PRIME = 2147483647

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False


def _flag_enabled() -> bool:
    value = os.environ.get("ARCALG_JIT", "1").strip().lower()
    return value not in ("0", "false", "no", "off")


JIT_ENABLED = HAVE_NUMBA and _flag_enabled()


# ---------------------------------------------------------------------------
# circle labelling of two stacked matchings


def circle_labels_numpy(top: np.ndarray, bottom: np.ndarray) -> np.ndarray:
    """Label points of each row by circle index, circles ordered by min point.

    ``top`` and ``bottom`` have shape (rows, points) and hold the partner of
    every point under the two matchings.  Uses min-label propagation.
    """
    top = np.asarray(top, dtype=np.int64)
    bottom = np.asarray(bottom, dtype=np.int64)
    rows, npts = top.shape
    lab = np.broadcast_to(np.arange(npts, dtype=np.int64), (rows, npts)).copy()
    while True:
        new = np.minimum(lab, np.take_along_axis(lab, top, axis=1))
        new = np.minimum(new, np.take_along_axis(new, bottom, axis=1))
        if np.array_equal(new, lab):
            break
        lab = new
    roots = lab == np.arange(npts, dtype=np.int64)
    rank = np.cumsum(roots, axis=1) - 1
    return np.take_along_axis(rank, lab, axis=1)


def _circle_labels_loop(top, bottom):
    rows, npts = top.shape
    out = np.full((rows, npts), -1, dtype=np.int64)
    for r in range(rows):
        c = 0
        for s in range(npts):
            if out[r, s] >= 0:
                continue
            cur = s
            while True:
                out[r, cur] = c
                nxt = top[r, cur]
                out[r, nxt] = c
                cur = bottom[r, nxt]
                if cur == s:
                    break
            c += 1
    return out


# ---------------------------------------------------------------------------
# surgery sequences acting on labelings stored as bitmasks (bit set = X)


def apply_surgeries_numpy(masks, coeffs, src, kinds, in0, in1, out0, out1, remap, n_old):
    """Push labelings through a surgery plan.

    Returns new (masks, coeffs, src) arrays; terms are not combined.
    """
    masks = np.asarray(masks, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    src = np.asarray(src, dtype=np.int64)
    one = np.int64(1)
    for s in range(len(kinds)):
        new = np.zeros_like(masks)
        for c in range(n_old[s]):
            r = remap[s, c]
            if r >= 0:
                new |= ((masks >> c) & one) << r
        if kinds[s] == MERGE:
            li = (masks >> in0[s]) & one
            lj = (masks >> in1[s]) & one
            keep = (li & lj) == 0
            new |= (li | lj) << out0[s]
            masks, coeffs, src = new[keep], coeffs[keep], src[keep]
        else:
            lab = (masks >> in0[s]) & one
            first = new | (one << out0[s]) | (lab << out1[s])
            ones = lab == 0
            second = new[ones] | (one << out1[s])
            masks = np.concatenate([first, second])
            coeffs = np.concatenate([coeffs, coeffs[ones]])
            src = np.concatenate([src, src[ones]])
    return masks, coeffs, src


def _apply_surgeries_loop(masks, coeffs, src, kinds, in0, in1, out0, out1, remap, n_old):
    for s in range(kinds.shape[0]):
        t = masks.shape[0]
        nm = np.empty(2 * t, dtype=np.int64)
        nc = np.empty(2 * t, dtype=np.int64)
        ns = np.empty(2 * t, dtype=np.int64)
        k = 0
        for i in range(t):
            m = masks[i]
            base = np.int64(0)
            for c in range(n_old[s]):
                r = remap[s, c]
                if r >= 0:
                    base |= ((m >> c) & 1) << r
            if kinds[s] == 0:
                li = (m >> in0[s]) & 1
                lj = (m >> in1[s]) & 1
                if li == 1 and lj == 1:
                    continue
                nm[k] = base | ((li | lj) << out0[s])
                nc[k] = coeffs[i]
                ns[k] = src[i]
                k += 1
            else:
                lab = (m >> in0[s]) & 1
                nm[k] = base | (np.int64(1) << out0[s]) | (lab << out1[s])
                nc[k] = coeffs[i]
                ns[k] = src[i]
                k += 1
                if lab == 0:
                    nm[k] = base | (np.int64(1) << out1[s])
                    nc[k] = coeffs[i]
                    ns[k] = src[i]
                    k += 1
        masks = nm[:k]
        coeffs = nc[:k]
        src = ns[:k]
    return masks, coeffs, src


# ---------------------------------------------------------------------------
# rank over a prime field


def rank_mod_p_numpy(mat, p: int = PRIME) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        hit = np.nonzero(below)[0] + rank + 1
        if hit.size:
            a[hit] = (a[hit] - (a[hit, col][:, None] * a[rank][None, :]) % p) % p
        rank += 1
    return rank


def _powmod(b, e, p):
    result = 1
    b %= p
    while e > 0:
        if e & 1:
            result = (result * b) % p
        b = (b * b) % p
        e >>= 1
    return result


def _rank_mod_p_loop(a, p):
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(cols):
                tmp = a[rank, c]
                a[rank, c] = a[piv, c]
                a[piv, c] = tmp
        inv = _powmod(a[rank, col], p - 2, p)
        for c in range(cols):
            a[rank, c] = (a[rank, c] * inv) % p
        for r in range(rank + 1, rows):
            f = a[r, col]
            if f != 0:
                for c in range(col, cols):
                    a[r, c] = (a[r, c] - f * a[rank, c]) % p
        rank += 1
    return rank


if HAVE_NUMBA:
    _circle_labels_jit = numba.njit(cache=True)(_circle_labels_loop)
    _apply_surgeries_jit = numba.njit(cache=True)(_apply_surgeries_loop)
    _powmod = numba.njit(cache=True)(_powmod)
    _rank_mod_p_jit = numba.njit(cache=True)(_rank_mod_p_loop)

    def circle_labels_numba(top, bottom):
        return _circle_labels_jit(np.ascontiguousarray(top, dtype=np.int64),
                                  np.ascontiguousarray(bottom, dtype=np.int64))

    def apply_surgeries_numba(masks, coeffs, src, kinds, in0, in1, out0, out1, remap, n_old):
        return _apply_surgeries_jit(
            np.ascontiguousarray(masks, dtype=np.int64),
            np.ascontiguousarray(coeffs, dtype=np.int64),
            np.ascontiguousarray(src, dtype=np.int64),
            kinds, in0, in1, out0, out1, remap, n_old,
        )

    def rank_mod_p_numba(mat, p: int = PRIME) -> int:
        a = np.array(mat, dtype=np.int64) % p
        return int(_rank_mod_p_jit(a, np.int64(p)))


def set_backend(use_jit: bool) -> None:
    """Switch kernels at runtime (benchmarks and tests compare both)."""
    global circle_labels, apply_surgeries, rank_mod_p, JIT_ENABLED
    JIT_ENABLED = bool(use_jit) and HAVE_NUMBA
    if JIT_ENABLED:
        circle_labels = circle_labels_numba
        apply_surgeries = apply_surgeries_numba
        rank_mod_p = rank_mod_p_numba
    else:
        circle_labels = circle_labels_numpy
        apply_surgeries = apply_surgeries_numpy
        rank_mod_p = rank_mod_p_numpy


circle_labels = circle_labels_numpy
apply_surgeries = apply_surgeries_numpy
rank_mod_p = rank_mod_p_numpy
set_backend(JIT_ENABLED)


def backend_name() -> str:
    return "numba" if JIT_ENABLED else "numpy"
