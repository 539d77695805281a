"""Number-theoretic classification: witnesses, bounds, divisor parametrization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwspectra import (
    FAMILY_LABEL,
    WheelParams,
    classify_all_dq,
    classify_gw1_dq,
    complete_part,
    cycle_part,
    dq_discriminant,
    dq_matrix,
    enumerate_alpha_solutions,
    gcd,
    generalized_wheel,
    gw_dl_spectrum,
    gw_dq_spectrum,
    is_dq_integral,
    is_gw_dl_integral,
    is_join_dl_integral,
    is_perfect_square,
    isqrt,
    m_upper_bound,
    numeric_is_integral,
    parity_check,
)
from gwspectra.verify import SPORADIC_A1, SPORADIC_A_GE_2, all_sporadics


class TestArithmetic:
    def test_isqrt(self):
        assert isqrt(625) == 25
        assert isqrt(0) == 0
        assert isqrt(99) == 9
        with pytest.raises(ValueError):
            isqrt(-1)

    def test_is_perfect_square(self):
        assert is_perfect_square(400)
        assert is_perfect_square(169)
        assert not is_perfect_square(113)
        assert not is_perfect_square(-4)

    def test_gcd(self):
        assert gcd(12, 18) == 6
        assert gcd(7, 0) == 7
        assert gcd(36, 25) == 1
        assert gcd(0, 0) == 0

    @given(st.integers(0, 10**40))
    def test_isqrt_contract(self, v):
        r = isqrt(v)
        assert r * r <= v < (r + 1) * (r + 1)


class TestDiscriminant:
    def test_examples(self):
        assert dq_discriminant(WheelParams(1, 5, 4)) == 81
        assert dq_discriminant(WheelParams(2, 3, 6)) == 144
        assert dq_discriminant(WheelParams(11, 1, 6)) == 625
        assert dq_discriminant(WheelParams(2, 8, 6)) == 784

    def test_huge_inputs_stay_exact(self):
        big = WheelParams(10**6, 10**6, 10**6)
        t = dq_discriminant(big)
        assert t == ((3 * 10**6 - 2) * 10**6 - 3 * 10**6 + 6) ** 2 + 4 * 10**18
        assert t > 2**64  # would overflow fixed-width arithmetic

    @given(
        a=st.integers(1, 1000), m=st.integers(1, 1000), n=st.integers(1, 1000)
    )
    def test_parity_always_holds(self, a, m, n):
        assert parity_check(a, m, n)

    def test_parity_examples(self):
        assert parity_check(1, 1, 3)
        assert parity_check(2, 3, 6)


class TestDqWitness:
    def test_family_row(self):
        for m in (1, 2, 17, 300):
            w = is_dq_integral(WheelParams(1, m, 3))
            assert w.verdict and w.c == m + 3 and w.t == (m + 3) ** 2

    def test_sporadic_and_negative(self):
        w = is_dq_integral(WheelParams(2, 1, 3))
        assert w.verdict and w.t == 25 and w.c == 5
        w = is_dq_integral(WheelParams(1, 7, 4))
        assert not w.verdict and w.t == 113 and w.c is None and w.n_ok

    def test_n_outside_346_never_integral(self):
        w = is_dq_integral(WheelParams(1, 2, 5))
        assert not w.verdict and not w.n_ok

    def test_witness_matches_surd_normalization(self):
        # when c exists the surd pair collapses to ((5a-2)m + 5n - 10 +/- c)/2
        for a, m, n in [(1, 5, 4), (2, 8, 6), (4, 2, 4), (6, 1, 4)]:
            params = WheelParams(a, m, n)
            w = is_dq_integral(params)
            assert w.verdict and w.c * w.c == w.t
            u = (5 * a - 2) * m + 5 * n - 10
            values = gw_dq_spectrum(params).numeric_values()
            assert (u + w.c) / 2 in values and (u - w.c) / 2 in values


class TestDlVerdicts:
    def test_gw_dl(self):
        assert is_gw_dl_integral(WheelParams(7, 3, 6))
        assert is_gw_dl_integral(WheelParams(3, 2, 4))
        assert not is_gw_dl_integral(WheelParams(1, 1, 5))

    def test_gw_dl_agrees_with_exact_spectrum(self):
        for a, m, n in [(1, 1, 3), (2, 2, 4), (3, 1, 5), (1, 4, 6), (2, 3, 7), (1, 2, 12)]:
            params = WheelParams(a, m, n)
            assert is_gw_dl_integral(params) == gw_dl_spectrum(params).is_integral()

    def test_join_dl(self):
        assert is_join_dl_integral(complete_part(5), cycle_part(6))
        assert not is_join_dl_integral(complete_part(3), cycle_part(5))
        assert is_join_dl_integral(complete_part(1), complete_part(1))


class TestClassifyGw1:
    def test_sporadics(self):
        r = classify_gw1_dq(35, 6)
        assert r.dq.verdict and r.dq.t == 1369 and r.dq.c == 37
        assert r.matched_case == "sporadic (1,35,6)"
        assert not classify_gw1_dq(10, 4).dq.verdict  # t = 176, not square

    def test_family(self):
        r = classify_gw1_dq(2, 3)
        assert r.dq.verdict and r.matched_case == FAMILY_LABEL

    def test_full_small_scan(self):
        integral = {
            (m, n)
            for m in range(1, 41)
            for n in range(3, 13)
            if classify_gw1_dq(m, n).dq.verdict
        }
        expected = {(m, 3) for m in range(1, 41)} | {(5, 4), (5, 6), (9, 6), (16, 6), (35, 6)}
        assert integral == expected


class TestBoundsAndAlpha:
    def test_m_upper_bound(self):
        assert m_upper_bound(3) == 2
        assert m_upper_bound(4) == 8
        assert m_upper_bound(6) == 31
        with pytest.raises(ValueError):
            m_upper_bound(5)

    def test_alpha_a2_n3(self):
        solutions = enumerate_alpha_solutions(2, 3)
        assert {s.m for s in solutions} == {1}
        assert any(s.alpha == 36 and s.family == "plus" for s in solutions)

    def test_alpha_a4_n6(self):
        assert {s.m for s in enumerate_alpha_solutions(4, 6)} >= {1, 2}

    def test_alpha_a3_n3_empty(self):
        assert enumerate_alpha_solutions(3, 3) == []

    def test_alpha_rejects_a1(self):
        with pytest.raises(ValueError):
            enumerate_alpha_solutions(1, 3)
        with pytest.raises(ValueError):
            enumerate_alpha_solutions(2, 5)

    def test_alpha_solution_consistency(self):
        for a in (2, 3, 4, 5, 6, 11):
            for n in (3, 4, 6):
                for s in enumerate_alpha_solutions(a, n):
                    assert s.p >= 0
                    assert s.alpha == (3 * a - 2) * s.c + s.p
                    assert s.c**2 == dq_discriminant(WheelParams(a, s.m, n))
                    assert is_dq_integral(WheelParams(a, s.m, n)).verdict

    @settings(deadline=None)
    @given(a=st.integers(2, 80), n=st.sampled_from([3, 4, 6]))
    def test_alpha_equals_brute_force(self, a, n):
        brute = {
            m
            for m in range(1, m_upper_bound(n) + 1)
            if is_dq_integral(WheelParams(a, m, n)).verdict
        }
        assert {s.m for s in enumerate_alpha_solutions(a, n)} == brute


class TestClassifyAll:
    def test_grid_matches_complete_list(self):
        scan = classify_all_dq(11, 35, (3, 4, 6))
        assert scan.has_infinite_family
        triples = tuple((r.params.a, r.params.m, r.params.n) for r in scan.sporadics)
        assert triples == all_sporadics()
        for r in scan.sporadics:
            assert r.matched_case.startswith("sporadic")
            assert r.dl_verdict  # all sporadics have n in {3, 4, 6}

    def test_small_family_grid(self):
        scan = classify_all_dq(1, 3, (3,))
        assert scan.has_infinite_family and scan.sporadics == ()

    def test_a_ge_2_n3_only_211(self):
        scan = classify_all_dq(50, 2, (3,))
        triples = [(r.params.a, r.params.m, r.params.n) for r in scan.sporadics]
        assert triples == [(2, 1, 3)]

    def test_sporadics_confirmed_by_numeric_oracle(self):
        for a, m, n in SPORADIC_A1 + SPORADIC_A_GE_2:
            mat = dq_matrix(generalized_wheel(WheelParams(a, m, n)))
            assert numeric_is_integral(mat, 1e-6)

    def test_sporadic_constants_are_sorted_and_disjoint(self):
        assert set(SPORADIC_A1).isdisjoint(SPORADIC_A_GE_2)
        assert all(t[0] == 1 for t in SPORADIC_A1)
        assert all(t[0] >= 2 for t in SPORADIC_A_GE_2)
