# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi sweep kernel (compiled).

Same contract as gwspectra._jacobi_py.cyclic_jacobi; the package picks
whichever is importable at load time.
"""
from libc.math cimport sqrt


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n - 1):
        for j in range(i + 1, n):
            acc += 2.0 * a[i, j] * a[i, j]
    return sqrt(acc)


def cyclic_jacobi(double[:, ::1] a, double[:, ::1] v, double threshold, int max_sweeps):
    """Rotate symmetric `a` toward diagonal form in place, row-sweep order.

    Accumulates the rotations into `v` (pass the identity), so on return the
    columns of `v` are eigenvectors of the original matrix.  Returns
    ``(sweeps_done, off_norm)`` where ``off_norm`` is the final off-diagonal
    Frobenius norm; convergence means ``off_norm <= threshold``.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double off, apq, theta, t, c, s, xp, xq

    off = _off_norm(a, n)
    for sweep in range(max_sweeps):
        if off <= threshold:
            return sweep, off
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                    else:
                        t = -1.0 / (-theta + sqrt(1.0 + theta * theta))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for i in range(n):
                        xp = a[i, p]
                        xq = a[i, q]
                        a[i, p] = c * xp - s * xq
                        a[i, q] = s * xp + c * xq
                    for i in range(n):
                        xp = a[p, i]
                        xq = a[q, i]
                        a[p, i] = c * xp - s * xq
                        a[q, i] = s * xp + c * xq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for i in range(n):
                        xp = v[i, p]
                        xq = v[i, q]
                        v[i, p] = c * xp - s * xq
                        v[i, q] = s * xp + c * xq
        off = _off_norm(a, n)
    return max_sweeps, off
