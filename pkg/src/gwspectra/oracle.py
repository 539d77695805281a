"""Floating-point eigensolver used to cross-check every closed form.

Cyclic Jacobi with row-sweep ordering, iterated until the off-diagonal
Frobenius norm drops below tol times the initial Frobenius norm (default
tol 1e-12, sweep cap 100).  The sweep kernel is the compiled extension when
available, otherwise the pure-Python fallback; pass kernel="python" or
"cython" to force one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _jacobi_py
from .eigenvalues import Spectrum

try:
    from . import _jacobi
except ImportError:  # extension not built; fall back to numpy loops
    _jacobi = None

__all__ = [
    "ConvergenceError",
    "NumericSpectrum",
    "MatchReport",
    "available_kernels",
    "default_kernel",
    "eigenvalues_symmetric",
    "compare_spectra",
    "numeric_is_integral",
]

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """The sweep cap was hit before the off-diagonal norm dropped enough."""


def available_kernels() -> tuple[str, ...]:
    return ("cython", "python") if _jacobi is not None else ("python",)


def default_kernel() -> str:
    return available_kernels()[0]


def _kernel_fn(kernel: str | None):
    if kernel is None:
        kernel = default_kernel()
    if kernel == "python":
        return _jacobi_py.cyclic_jacobi
    if kernel == "cython":
        if _jacobi is None:
            raise ValueError("compiled kernel is not available in this install")
        return _jacobi.cyclic_jacobi
    raise ValueError(f"unknown kernel {kernel!r}")


@dataclass(frozen=True)
class NumericSpectrum:
    """Eigenvalues sorted descending, plus solver diagnostics."""

    values: tuple[float, ...]
    order: int
    residual: float
    sweeps: int


def eigenvalues_symmetric(
    mat,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
    kernel: str | None = None,
) -> NumericSpectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    The residual reported is max_k |A v_k - lambda_k v_k| over the computed
    eigenpairs; it stays below the convergence threshold tol * ||A||_F.
    """
    a0 = np.asarray(mat)
    if a0.ndim != 2 or a0.shape[0] != a0.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a0.shape}")
    if a0.shape[0] < 1:
        raise ValueError("matrix must have order >= 1")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if not np.array_equal(a0, a0.T):
        raise ValueError("matrix is not symmetric")

    n = a0.shape[0]
    work = np.ascontiguousarray(a0, dtype=np.float64).copy()
    vectors = np.eye(n, dtype=np.float64)
    threshold = tol * float(np.linalg.norm(work, "fro"))
    sweeps, off = _kernel_fn(kernel)(work, vectors, threshold, max_sweeps)
    if off > threshold:
        raise ConvergenceError(
            f"off-diagonal norm {off:.3e} above threshold {threshold:.3e} "
            f"after {max_sweeps} sweeps"
        )

    eigvals = np.diagonal(np.asarray(work)).copy()
    a_float = a0.astype(np.float64)
    mismatch = a_float @ vectors - vectors * eigvals[np.newaxis, :]
    residual = float(np.linalg.norm(mismatch, axis=0).max())
    values = tuple(sorted((float(v) for v in eigvals), reverse=True))
    return NumericSpectrum(values=values, order=n, residual=residual, sweeps=int(sweeps))


@dataclass(frozen=True)
class MatchReport:
    order: int
    max_deviation: float
    tol: float
    passed: bool


def compare_spectra(exact: Spectrum, numeric: NumericSpectrum, tol: float) -> MatchReport:
    """Pair sorted exact values against sorted solver values."""
    if exact.order != numeric.order:
        raise ValueError(
            f"order mismatch: exact has {exact.order}, numeric has {numeric.order}"
        )
    exact_sorted = exact.numeric_values()
    deviation = max(
        abs(e - v) for e, v in zip(exact_sorted, numeric.values)
    )
    return MatchReport(
        order=exact.order, max_deviation=deviation, tol=tol, passed=deviation <= tol
    )


def numeric_is_integral(mat, tol: float = 1e-6, kernel: str | None = None) -> bool:
    """True if every eigenvalue sits within tol of an integer."""
    spectrum = eigenvalues_symmetric(mat, kernel=kernel)
    return all(abs(v - round(v)) <= tol for v in spectrum.values)
