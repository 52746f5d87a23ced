"""Hot kernels for the exhaustive 2 x 2 pair scan over Z.

Both backends fill the same realized-triple flag table: a parallel
numba-compiled kernel and a vectorized pure-numpy fallback.  The backend is
selected by the DETDIV_SCAN_BACKEND environment variable ("numba" or
"numpy"; default is numba when importable).  DETDIV_THREADS caps the numba
thread count.  Flag writes are idempotent, so partitioning the outer loop
across threads merges associatively and the result is schedule-independent.

Everything here is plain int64 arithmetic: a 2 x 2 integer matrix with
entries bounded by b has |entry gcd| <= b, |det| <= 2 b^2, and the product
of two such matrices has entries bounded by 2 b^2, which keeps every chain
statistic of a scanned pair inside a small dense key space.
"""

from __future__ import annotations

import os

import numpy as np

MAX_KEY_SPACE = 1 << 28

_numba_kernel = None


def backend_name() -> str:
    env = os.environ.get("DETDIV_SCAN_BACKEND", "").strip().lower()
    if env in ("numba", "numpy"):
        return env
    if env:
        raise ValueError(f"DETDIV_SCAN_BACKEND must be 'numba' or 'numpy', got {env!r}")
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def key_space(bound: int) -> int:
    dmax = 2 * bound * bound
    return bound * dmax * bound * dmax * dmax


def enumerate_2x2(bound: int, det_bound: int | None = None):
    """All 2 x 2 integer matrices with entries in [-bound, bound] and
    nonzero determinant, as (mats, entry_gcds, abs_dets) int64 arrays."""
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    mats = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), axis=-1).reshape(-1, 4)
    dets = mats[:, 0] * mats[:, 3] - mats[:, 1] * mats[:, 2]
    keep = dets != 0
    if det_bound is not None:
        keep &= np.abs(dets) <= det_bound
    mats = np.ascontiguousarray(mats[keep])
    dets = np.abs(dets[keep])
    gs = np.gcd.reduce(np.abs(mats), axis=1)
    return mats, gs, dets


def scan_pairs_numpy(mats, gs, dets, bound: int) -> np.ndarray:
    """Pure-numpy scan: one vectorized sweep over all B for each A."""
    dmax = 2 * bound * bound
    flags = np.zeros(key_space(bound), dtype=np.uint8)
    b00, b01, b10, b11 = mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3]
    jpart = ((gs - 1) * dmax + (dets - 1)) * dmax
    for i in range(mats.shape[0]):
        a00, a01, a10, a11 = mats[i]
        p00 = a00 * b00 + a01 * b10
        p01 = a00 * b01 + a01 * b11
        p10 = a10 * b00 + a11 * b10
        p11 = a10 * b01 + a11 * b11
        g = np.gcd(np.gcd(np.abs(p00), np.abs(p01)), np.gcd(np.abs(p10), np.abs(p11)))
        ipart = ((gs[i] - 1) * dmax + (dets[i] - 1)) * bound * dmax * dmax
        flags[ipart + jpart + (g - 1)] = 1
    return flags


def _build_numba_kernel():
    from numba import njit, prange

    @njit(cache=True, parallel=True)
    def kernel(mats, gs, dets, bound, flags):
        m = mats.shape[0]
        dmax = 2 * bound * bound
        for i in prange(m):
            a00 = mats[i, 0]
            a01 = mats[i, 1]
            a10 = mats[i, 2]
            a11 = mats[i, 3]
            ipart = ((gs[i] - 1) * dmax + (dets[i] - 1)) * bound * dmax * dmax
            for j in range(m):
                p00 = a00 * mats[j, 0] + a01 * mats[j, 2]
                p01 = a00 * mats[j, 1] + a01 * mats[j, 3]
                p10 = a10 * mats[j, 0] + a11 * mats[j, 2]
                p11 = a10 * mats[j, 1] + a11 * mats[j, 3]
                g = p00 if p00 >= 0 else -p00
                x = p01 if p01 >= 0 else -p01
                while x:
                    g, x = x, g % x
                x = p10 if p10 >= 0 else -p10
                while x:
                    g, x = x, g % x
                x = p11 if p11 >= 0 else -p11
                while x:
                    g, x = x, g % x
                flags[ipart + ((gs[j] - 1) * dmax + (dets[j] - 1)) * dmax + (g - 1)] = 1

    return kernel


def scan_pairs_numba(mats, gs, dets, bound: int) -> np.ndarray:
    global _numba_kernel
    import numba

    threads = os.environ.get("DETDIV_THREADS")
    if threads:
        numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))
    if _numba_kernel is None:
        _numba_kernel = _build_numba_kernel()
    flags = np.zeros(key_space(bound), dtype=np.uint8)
    _numba_kernel(mats, gs, dets, np.int64(bound), flags)
    return flags


def decode_flags(flags: np.ndarray, bound: int) -> list[tuple]:
    """Sorted ((g_a, det_a), (g_b, det_b), (g_ab, det_ab)) triples."""
    dmax = 2 * bound * bound
    out = []
    for key in np.nonzero(flags)[0]:
        key = int(key)
        key, gc = divmod(key, dmax)
        key, db = divmod(key, dmax)
        key, gb = divmod(key, bound)
        ga, da = divmod(key, dmax)
        out.append(((ga + 1, da + 1), (gb + 1, db + 1), (gc + 1, (da + 1) * (db + 1))))
    return sorted(out)


def scan_realized(bound: int, det_bound: int | None = None,
                  backend: str | None = None) -> tuple[list[tuple], dict]:
    """Realized-triple table for the exhaustive 2 x 2 scan at the given
    entry bound, plus run statistics."""
    if key_space(bound) > MAX_KEY_SPACE:
        raise ValueError(
            f"entry bound {bound} needs a key table of {key_space(bound)} cells "
            f"(cap {MAX_KEY_SPACE})"
        )
    backend = backend or backend_name()
    mats, gs, dets = enumerate_2x2(bound, det_bound)
    if backend == "numba":
        flags = scan_pairs_numba(mats, gs, dets, bound)
    else:
        flags = scan_pairs_numpy(mats, gs, dets, bound)
    triples = decode_flags(flags, bound)
    stats = {
        "backend": backend,
        "matrices": int(mats.shape[0]),
        "pairs_checked": int(mats.shape[0]) ** 2,
        "triples": len(triples),
    }
    return triples, stats
