"""Low-level tridiagonal eigen-kernels (numba).

The folded radial operator is a symmetric tridiagonal matrix whose
entries span many orders of magnitude (the diagonal grows like r^-2
toward the inner cutoff).  LAPACK's bisection and inverse-iteration
drivers set their tolerances relative to the matrix norm, which makes
them useless on such graded matrices; these kernels instead bracket
eigenvalues inside a caller-supplied window, so accuracy is absolute
in the window regardless of grading.
"""

import numba
import numpy as np
from numba import njit

__all__ = [
    "sturm_count",
    "bisect_eigenvalues",
    "inverse_iteration",
]


@njit(cache=True)
def sturm_count(dg, e2, sigma):
    """Number of eigenvalues strictly below sigma (LDL^T pivot signs)."""
    cnt = 0
    q = dg[0] - sigma
    if q < 0.0:
        cnt += 1
    for i in range(1, dg.shape[0]):
        if q == 0.0:
            q = -1e-300
        q = dg[i] - sigma - e2[i - 1] / q
        if q < 0.0:
            cnt += 1
    return cnt


@njit(cache=True, fastmath=True)
def bisect_eigenvalues(dg, e2, il, iu, lo0, hi0, npass):
    """Eigenvalues with 0-based indices il..iu-1, all inside (lo0, hi0].

    Runs a fixed number of simultaneous bisection passes; each pass is a
    single Sturm sweep vectorized over the eigenvalue targets.  With
    npass = 54 the absolute bracket width is (hi0-lo0) * 2^-54.
    """
    k = iu - il
    lo = np.full(k, lo0)
    hi = np.full(k, hi0)
    mid = np.empty(k)
    q = np.empty(k)
    cnt = np.empty(k, numba.int64)
    n = dg.shape[0]
    for _ in range(npass):
        for j in range(k):
            mid[j] = 0.5 * (lo[j] + hi[j])
            cnt[j] = 0
            q[j] = dg[0] - mid[j]
            if q[j] < 0.0:
                cnt[j] += 1
        for i in range(1, n):
            di = dg[i]
            e2i = e2[i - 1]
            for j in range(k):
                qq = q[j]
                if qq == 0.0:
                    qq = -1e-300
                qq = di - mid[j] - e2i / qq
                q[j] = qq
                if qq < 0.0:
                    cnt[j] += 1
        for j in range(k):
            if cnt[j] >= il + j + 1:
                hi[j] = mid[j]
            else:
                lo[j] = mid[j]
    for j in range(k):
        mid[j] = 0.5 * (lo[j] + hi[j])
    return mid


@njit(cache=True)
def _factor_pivot(dg, off, lam, dl, d0, du, du2, ipiv):
    # LU of (T - lam I) with partial pivoting; du2 holds the fill-in.
    n = dg.shape[0]
    for i in range(n):
        d0[i] = dg[i] - lam
    for i in range(n - 1):
        dl[i] = off[i]
        du[i] = off[i]
    for i in range(max(n - 2, 1)):
        du2[i] = 0.0
    for i in range(n - 1):
        if abs(d0[i]) >= abs(dl[i]):
            ipiv[i] = 0
            if d0[i] == 0.0:
                d0[i] = 1e-300
            m = dl[i] / d0[i]
            d0[i + 1] -= m * du[i]
            dl[i] = m
        else:
            ipiv[i] = 1
            m = d0[i] / dl[i]
            t = d0[i + 1]
            d0[i] = dl[i]
            d0[i + 1] = du[i] - m * t
            du[i] = t
            if i < n - 2:
                du2[i] = du[i + 1]
                du[i + 1] = -m * du2[i]
            dl[i] = m
    if d0[n - 1] == 0.0:
        d0[n - 1] = 1e-300


@njit(cache=True)
def _solve_pivot(dl, d0, du, du2, ipiv, b):
    n = d0.shape[0]
    for i in range(n - 1):
        if ipiv[i] == 0:
            b[i + 1] -= dl[i] * b[i]
        else:
            t = b[i]
            b[i] = b[i + 1]
            b[i + 1] = t - dl[i] * b[i]
    b[n - 1] /= d0[n - 1]
    if n > 1:
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d0[n - 2]
    for i in range(n - 3, -1, -1):
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d0[i]


@njit(cache=True)
def inverse_iteration(dg, off, lam, prev, nprev, niter):
    """One normalized eigenvector of the tridiagonal (dg, off) at lam.

    prev[:nprev] are already-computed vectors of a near-degenerate
    cluster; the iterate is reorthogonalized against them.  Returns
    (z, residual) with residual = ||T z - lam z||.
    """
    n = dg.shape[0]
    dl = np.empty(n - 1)
    d0 = np.empty(n)
    du = np.empty(n - 1)
    du2 = np.empty(max(n - 2, 1))
    ipiv = np.empty(n - 1, numba.int32)
    _factor_pivot(dg, off, lam, dl, d0, du, du2, ipiv)
    z = np.empty(n)
    for i in range(n):
        # deterministic quasi-random start, no RNG state
        z[i] = 0.5 + 0.2113248654051871 * ((i * 2654435761) % 1024) / 1024.0
    for _ in range(niter):
        _solve_pivot(dl, d0, du, du2, ipiv, z)
        for p in range(nprev):
            dot = 0.0
            for i in range(n):
                dot += z[i] * prev[p, i]
            for i in range(n):
                z[i] -= dot * prev[p, i]
        nrm = 0.0
        for i in range(n):
            nrm += z[i] * z[i]
        nrm = np.sqrt(nrm)
        if nrm == 0.0:
            nrm = 1e-300
        for i in range(n):
            z[i] /= nrm
    res = 0.0
    for i in range(n):
        acc = (dg[i] - lam) * z[i]
        if i > 0:
            acc += off[i - 1] * z[i - 1]
        if i < n - 1:
            acc += off[i] * z[i + 1]
        res += acc * acc
    return z, np.sqrt(res)
