"""Pure-Python (numpy-vectorized) cyclic Jacobi sweeps.

Fallback for the compiled kernel; same contract as ``_jacobi_c.jacobi_sweeps``.
"""

import math

import numpy as np


def jacobi_sweeps(a, v, tol, max_sweeps):
    """Diagonalize symmetric ``a`` in place, accumulating rotations into ``v``.

    ``a`` is reduced until its off-diagonal Frobenius norm is <= ``tol``;
    ``v`` must come in as the identity and leaves as the eigenvector matrix
    (columns). Returns the number of sweeps performed.
    """
    n = a.shape[0]
    if n == 1:
        return 0
    idx = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps):
        off = math.sqrt(float(np.sum(a[idx] ** 2)))
        if off <= tol:
            return sweep
        # rotations below this threshold cannot change the off-norm materially
        thresh = tol / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return max_sweeps
