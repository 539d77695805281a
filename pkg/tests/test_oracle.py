"""The Jacobi eigensolver against known spectra, numpy, and its own invariants."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gwspectra import (
    ConvergenceError,
    WheelParams,
    adjacency_matrix,
    available_kernels,
    compare_spectra,
    complete,
    cycle,
    default_kernel,
    dl_matrix,
    dq_matrix,
    eigenvalues_symmetric,
    generalized_wheel,
    gw_dq_spectrum,
    numeric_is_integral,
    spectrum_of,
)
from gwspectra.eigenvalues import IntegerValue

KERNELS = available_kernels()


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


class TestEigenvaluesSymmetric:
    def test_exchange_matrix(self, kernel):
        spec = eigenvalues_symmetric(np.array([[0, 1], [1, 0]]), kernel=kernel)
        assert spec.values == pytest.approx((1.0, -1.0))

    def test_dq_k4(self, kernel):
        spec = eigenvalues_symmetric(dq_matrix(complete(4)), kernel=kernel)
        assert spec.values == pytest.approx((6.0, 2.0, 2.0, 2.0))

    def test_adjacency_c4(self, kernel):
        spec = eigenvalues_symmetric(adjacency_matrix(cycle(4)), kernel=kernel)
        assert spec.values == pytest.approx((2.0, 0.0, 0.0, -2.0), abs=1e-12)

    def test_order_one(self, kernel):
        spec = eigenvalues_symmetric(np.array([[5]]), kernel=kernel)
        assert spec.values == (5.0,) and spec.sweeps == 0

    def test_known_exact_spectra(self, kernel):
        n = 9
        ones = np.ones((n, n), dtype=np.int64)
        spec = eigenvalues_symmetric(ones, kernel=kernel)
        expected = [float(n)] + [0.0] * (n - 1)
        assert np.allclose(spec.values, expected, atol=1e-9)
        spec = eigenvalues_symmetric(np.eye(n, dtype=np.int64), kernel=kernel)
        assert spec.values == tuple([1.0] * n)
        spec = eigenvalues_symmetric(adjacency_matrix(complete(6)), kernel=kernel)
        assert np.allclose(spec.values, [5.0] + [-1.0] * 5, atol=1e-9)
        for n in (3, 4, 6):
            spec = eigenvalues_symmetric(adjacency_matrix(cycle(n)), kernel=kernel)
            exact = sorted(
                (2 * math.cos(2 * math.pi * j / n) for j in range(n)), reverse=True
            )
            assert np.allclose(spec.values, exact, atol=1e-9)

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            eigenvalues_symmetric(np.array([[0, 1], [2, 0]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            eigenvalues_symmetric(np.ones((2, 3)))

    def test_bad_tolerance_rejected(self):
        with pytest.raises(ValueError):
            eigenvalues_symmetric(np.eye(2), tol=0.0)

    def test_sweep_cap_triggers(self):
        mat = dq_matrix(generalized_wheel(WheelParams(2, 2, 8)))
        with pytest.raises(ConvergenceError):
            eigenvalues_symmetric(mat, max_sweeps=1)

    def test_unknown_kernel_rejected(self):
        with pytest.raises(ValueError):
            eigenvalues_symmetric(np.eye(2), kernel="fortran")

    def test_kernels_agree(self):
        if len(KERNELS) < 2:
            pytest.skip("compiled kernel not built")
        mat = dq_matrix(generalized_wheel(WheelParams(3, 2, 9)))
        values = [
            eigenvalues_symmetric(mat, kernel=k).values for k in KERNELS
        ]
        assert np.allclose(values[0], values[1], atol=1e-10)

    def test_default_kernel_prefers_compiled(self):
        assert default_kernel() == KERNELS[0]


class TestSolverInvariants:
    CASES = [
        dq_matrix(generalized_wheel(WheelParams(2, 3, 7))),
        dl_matrix(generalized_wheel(WheelParams(3, 2, 10))),
        adjacency_matrix(cycle(12)),
    ]

    @pytest.mark.parametrize("mat", CASES, ids=["dq-gw237", "dl-gw3210", "adj-c12"])
    def test_trace_consistency(self, mat, kernel):
        spec = eigenvalues_symmetric(mat, kernel=kernel)
        trace = float(mat.trace())
        assert abs(sum(spec.values) - trace) <= 1e-8 * (abs(trace) + 1)

    @pytest.mark.parametrize("mat", CASES, ids=["dq-gw237", "dl-gw3210", "adj-c12"])
    def test_frobenius_preserved(self, mat, kernel):
        # rotations are orthogonal: sum of squared eigenvalues = ||A||_F^2
        spec = eigenvalues_symmetric(mat, kernel=kernel)
        fro = float(np.linalg.norm(mat.astype(float), "fro"))
        assert abs(math.sqrt(sum(v * v for v in spec.values)) - fro) <= 1e-10 * fro

    @pytest.mark.parametrize("mat", CASES, ids=["dq-gw237", "dl-gw3210", "adj-c12"])
    def test_residual_below_threshold(self, mat, kernel):
        tol = 1e-12
        spec = eigenvalues_symmetric(mat, tol=tol, kernel=kernel)
        threshold = tol * float(np.linalg.norm(mat.astype(float), "fro"))
        assert spec.residual <= max(threshold, 1e-12)

    @settings(max_examples=30, deadline=None)
    @given(
        arrays(
            np.int64,
            st.integers(1, 12).map(lambda n: (n, n)),
            elements=st.integers(-30, 30),
        )
    )
    def test_matches_numpy_eigvalsh(self, raw):
        mat = raw + raw.T  # symmetric integer matrix
        spec = eigenvalues_symmetric(mat)
        expected = np.sort(np.linalg.eigvalsh(mat.astype(float)))[::-1]
        assert np.allclose(spec.values, expected, atol=1e-7)


class TestCompareSpectra:
    def test_pass_case(self):
        params = WheelParams(1, 2, 3)
        report = compare_spectra(
            gw_dq_spectrum(params),
            eigenvalues_symmetric(dq_matrix(generalized_wheel(params))),
            1e-9,
        )
        assert report.passed and report.max_deviation < 1e-9

    def test_injected_fault_detected(self):
        params = WheelParams(1, 2, 3)
        numeric = eigenvalues_symmetric(dq_matrix(generalized_wheel(params)))
        exact = gw_dq_spectrum(params)
        bumped = spectrum_of(
            [(IntegerValue(e.value + (1 if i == 0 else 0)), m)
             for i, (e, m) in enumerate(exact.items)]
        )
        report = compare_spectra(bumped, numeric, 1e-9)
        assert not report.passed
        assert report.max_deviation == pytest.approx(1.0, abs=1e-6)

    def test_order_mismatch_rejected(self):
        numeric = eigenvalues_symmetric(np.eye(3))
        with pytest.raises(ValueError, match="order"):
            compare_spectra(gw_dq_spectrum(WheelParams(1, 1, 3)), numeric, 1e-9)


class TestNumericIsIntegral:
    def test_examples(self):
        assert numeric_is_integral(dq_matrix(generalized_wheel(WheelParams(1, 5, 4))))
        assert not numeric_is_integral(dq_matrix(generalized_wheel(WheelParams(1, 6, 4))))
        assert not numeric_is_integral(dl_matrix(generalized_wheel(WheelParams(2, 2, 5))))

    def test_dl_examples(self):
        assert numeric_is_integral(dl_matrix(generalized_wheel(WheelParams(3, 2, 6))))
        assert numeric_is_integral(dl_matrix(generalized_wheel(WheelParams(2, 1, 4))))
