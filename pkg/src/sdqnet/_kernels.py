"""Hot kernels for the binary stabilizer tableau.

Two interchangeable backends operate in place on the raw tableau arrays
(``x``, ``z``: 2n x n uint8 matrices, ``r``: 2n uint8 phase bits):

* ``numba`` — ``@njit``-compiled row loops (default when numba imports),
* ``numpy`` — vectorized column/row operations, no compilation step.

Set ``SDQNET_PURE_NUMPY=1`` to force the numpy path. Both backends are
bit-for-bit identical: measurement randomness enters only through the
``coin`` argument, which the caller draws.

Phase bookkeeping follows the generator-product rule of the standard
tableau algorithm (Aaronson & Gottesman, arXiv:quant-ph/0406196): when
row ``j`` is multiplied into row ``h``, each qubit column contributes an
exponent of i in {-1, 0, +1} and the total must come out 0 or 2 (mod 4),
i.e. an overall sign.

``benchmarks/bench_kernels.py`` times the two backends against each other.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

ENV_FLAG = "SDQNET_PURE_NUMPY"


# ---------------------------------------------------------------------------
# pure-numpy backend
# ---------------------------------------------------------------------------

def _np_h(x, z, r, q):
    xq = x[:, q].copy()
    zq = z[:, q]
    r ^= xq & zq
    x[:, q] = zq
    z[:, q] = xq


def _np_s(x, z, r, q):
    r ^= x[:, q] & z[:, q]
    z[:, q] ^= x[:, q]


def _np_x(x, z, r, q):
    r ^= z[:, q]


def _np_z(x, z, r, q):
    r ^= x[:, q]


def _np_y(x, z, r, q):
    # Z then X; column bits are untouched by either, so the phase flips fold.
    r ^= x[:, q] ^ z[:, q]


def _np_cnot(x, z, r, c, t):
    xc = x[:, c]
    zt = z[:, t]
    r ^= xc & zt & (x[:, t] ^ z[:, c] ^ 1)
    x[:, t] ^= xc
    z[:, c] ^= zt


def _np_phase_exponents(x1, z1, x2, z2):
    """Per-column exponent of i when the Pauli (x1, z1) multiplies (x2, z2)."""
    x1 = x1.astype(np.int64)
    z1 = z1.astype(np.int64)
    x2 = x2.astype(np.int64)
    z2 = z2.astype(np.int64)
    return (
        (x1 & z1) * (z2 - x2)
        + (x1 & (1 - z1)) * (z2 * (2 * x2 - 1))
        + ((1 - x1) & z1) * (x2 * (1 - 2 * z2))
    )


def _np_first_anticommuting(x, q):
    """Index of the first stabilizer row whose generator anticommutes with Z_q, else -1."""
    n = x.shape[1]
    hits = np.nonzero(x[n:, q])[0]
    return int(n + hits[0]) if hits.size else -1


def _np_measure_random(x, z, r, q, p, coin):
    """Collapse after a 50/50 measurement of qubit ``q``; row ``p`` anticommutes."""
    n = x.shape[1]
    rows = np.nonzero(x[:, q])[0]
    for i in rows:
        if i == p:
            continue
        total = 2 * int(r[i]) + 2 * int(r[p]) + int(_np_phase_exponents(x[p], z[p], x[i], z[i]).sum())
        r[i] = (total % 4) >> 1
        x[i] ^= x[p]
        z[i] ^= z[p]
    d = p - n
    x[d] = x[p]
    z[d] = z[p]
    r[d] = r[p]
    x[p] = 0
    z[p] = 0
    z[p, q] = 1
    r[p] = coin
    return int(coin)


def _np_measure_deterministic(x, z, r, q):
    """Outcome of a determined measurement of qubit ``q``; state is unchanged."""
    n = x.shape[1]
    xs = np.zeros(n, dtype=np.uint8)
    zs = np.zeros(n, dtype=np.uint8)
    m = 0
    for j in np.nonzero(x[:n, q])[0]:
        sj = n + j
        m = (m + 2 * int(r[sj]) + int(_np_phase_exponents(x[sj], z[sj], xs, zs).sum())) % 4
        xs ^= x[sj]
        zs ^= z[sj]
    return m >> 1


NUMPY_KERNELS = SimpleNamespace(
    name="numpy",
    h=_np_h,
    s=_np_s,
    x=_np_x,
    y=_np_y,
    z=_np_z,
    cnot=_np_cnot,
    first_anticommuting=_np_first_anticommuting,
    measure_random=_np_measure_random,
    measure_deterministic=_np_measure_deterministic,
)


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

def _build_numba_kernels():
    from numba import njit

    @njit(cache=True)
    def nb_h(x, z, r, q):
        for i in range(x.shape[0]):
            xi = x[i, q]
            zi = z[i, q]
            r[i] ^= xi & zi
            x[i, q] = zi
            z[i, q] = xi

    @njit(cache=True)
    def nb_s(x, z, r, q):
        for i in range(x.shape[0]):
            r[i] ^= x[i, q] & z[i, q]
            z[i, q] ^= x[i, q]

    @njit(cache=True)
    def nb_x(x, z, r, q):
        for i in range(x.shape[0]):
            r[i] ^= z[i, q]

    @njit(cache=True)
    def nb_z(x, z, r, q):
        for i in range(x.shape[0]):
            r[i] ^= x[i, q]

    @njit(cache=True)
    def nb_y(x, z, r, q):
        for i in range(x.shape[0]):
            r[i] ^= x[i, q] ^ z[i, q]

    @njit(cache=True)
    def nb_cnot(x, z, r, c, t):
        for i in range(x.shape[0]):
            r[i] ^= x[i, c] & z[i, t] & (x[i, t] ^ z[i, c] ^ np.uint8(1))
            x[i, t] ^= x[i, c]
            z[i, c] ^= z[i, t]

    @njit(cache=True)
    def nb_phase_sum(x, z, j, xs, zs):
        total = 0
        for k in range(x.shape[1]):
            x1 = np.int64(x[j, k])
            z1 = np.int64(z[j, k])
            x2 = np.int64(xs[k])
            z2 = np.int64(zs[k])
            if x1 == 1 and z1 == 1:
                total += z2 - x2
            elif x1 == 1:
                total += z2 * (2 * x2 - 1)
            elif z1 == 1:
                total += x2 * (1 - 2 * z2)
        return total

    @njit(cache=True)
    def nb_first_anticommuting(x, q):
        n = x.shape[1]
        for i in range(n, 2 * n):
            if x[i, q] == 1:
                return i
        return -1

    @njit(cache=True)
    def nb_measure_random(x, z, r, q, p, coin):
        n = x.shape[1]
        for i in range(2 * n):
            if i == p or x[i, q] == 0:
                continue
            total = 2 * np.int64(r[i]) + 2 * np.int64(r[p]) + nb_phase_sum(x, z, p, x[i], z[i])
            r[i] = np.uint8((total % 4) >> 1)
            for k in range(n):
                x[i, k] ^= x[p, k]
                z[i, k] ^= z[p, k]
        d = p - n
        for k in range(n):
            x[d, k] = x[p, k]
            z[d, k] = z[p, k]
            x[p, k] = 0
            z[p, k] = 0
        r[d] = r[p]
        z[p, q] = 1
        r[p] = np.uint8(coin)
        return coin

    @njit(cache=True)
    def nb_measure_deterministic(x, z, r, q):
        n = x.shape[1]
        xs = np.zeros(n, dtype=np.uint8)
        zs = np.zeros(n, dtype=np.uint8)
        m = np.int64(0)
        for j in range(n):
            if x[j, q] == 0:
                continue
            sj = n + j
            m = (m + 2 * np.int64(r[sj]) + nb_phase_sum(x, z, sj, xs, zs)) % 4
            for k in range(n):
                xs[k] ^= x[sj, k]
                zs[k] ^= z[sj, k]
        return int(m >> 1)

    return SimpleNamespace(
        name="numba",
        h=nb_h,
        s=nb_s,
        x=nb_x,
        y=nb_y,
        z=nb_z,
        cnot=nb_cnot,
        first_anticommuting=nb_first_anticommuting,
        measure_random=nb_measure_random,
        measure_deterministic=nb_measure_deterministic,
    )


_NUMBA_KERNELS = None
_NUMBA_FAILED = False


def numba_kernels():
    """Build (once) and return the numba backend, or None if numba is unusable."""
    global _NUMBA_KERNELS, _NUMBA_FAILED
    if _NUMBA_KERNELS is None and not _NUMBA_FAILED:
        try:
            _NUMBA_KERNELS = _build_numba_kernels()
        except ImportError:
            _NUMBA_FAILED = True
    return _NUMBA_KERNELS


def available_backends() -> list[str]:
    names = ["numpy"]
    if numba_kernels() is not None:
        names.insert(0, "numba")
    return names


def get_backend(name: str | None = None):
    """Resolve a kernel backend by name, or pick the default.

    Default order: the ``SDQNET_PURE_NUMPY`` env flag forces numpy;
    otherwise numba when importable, numpy as fallback.
    """
    if name is None:
        if os.environ.get(ENV_FLAG, "0") not in ("", "0"):
            return NUMPY_KERNELS
        nb = numba_kernels()
        return nb if nb is not None else NUMPY_KERNELS
    if name == "numpy":
        return NUMPY_KERNELS
    if name == "numba":
        nb = numba_kernels()
        if nb is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return nb
    raise ValueError(f"unknown kernel backend {name!r}")
