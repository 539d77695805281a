"""Pure-Python cyclic Jacobi sweep kernel.

Fallback for environments where the compiled extension is unavailable.
Identical algorithm and contract as gwspectra._jacobi, with the row/column
rotations done through numpy slices.  Fine for small matrices; an order of
magnitude slower than the compiled kernel on orders in the hundreds.
"""

import math

import numpy as np


def _off_norm(a):
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def cyclic_jacobi(a, v, threshold, max_sweeps):
    """Rotate symmetric `a` toward diagonal form in place, row-sweep order.

    Accumulates the rotations into `v` (pass the identity).  Returns
    ``(sweeps_done, off_norm)``; convergence means ``off_norm <= threshold``.
    """
    n = a.shape[0]
    off = _off_norm(a)
    for sweep in range(max_sweeps):
        if off <= threshold:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        off = _off_norm(a)
    return max_sweeps, off
