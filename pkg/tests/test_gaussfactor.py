"""Tests for the truncated-Gauss-sum divisor scan."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohstates.gaussfactor import DEFAULT_THRESHOLD, default_m_terms, factor_scan, gauss_sum


def test_divisor_gives_unit_sum_exactly():
    for n, ell in [(15, 3), (15, 5), (100, 10), (4, 2), (999, 37)]:
        for m in (1, 4, 9, 31):
            s = gauss_sum(n, ell, m)
            assert abs(s - 1.0) <= 1e-12


def test_hand_phase_table_n15_ell2():
    # m^2 * 15 is odd for odd m: phases alternate 1, -1, 1, -1
    s = gauss_sum(15, 2, 4)
    assert abs(s) <= 1e-15


def test_hand_phase_table_n15_ell4():
    # independent phase-table oracle with exact residues
    expected = sum(cmath.exp(-2j * math.pi * ((m * m * 15) % 4) / 4) for m in range(4)) / 4
    s = gauss_sum(15, 4, 4)
    assert s == pytest.approx(expected, abs=1e-15)
    assert abs(s) < 1.0


@given(
    st.integers(min_value=1, max_value=10_000),
    st.integers(min_value=1, max_value=64),
    st.integers(min_value=1, max_value=64),
)
@settings(max_examples=300)
def test_magnitude_never_exceeds_one(n, ell, m):
    assert abs(gauss_sum(n, ell, m)) <= 1.0 + 1e-12


def test_default_m_terms():
    assert default_m_terms(15) == 4
    assert default_m_terms(16) == 4
    assert default_m_terms(17) == 5


def test_factor_scan_composite():
    report = factor_scan(15, m_terms=4, threshold=0.7)
    assert report.factors == [3, 5]


def test_factor_scan_prime():
    assert factor_scan(13).factors == []


def test_factor_scan_square():
    report = factor_scan(4)
    (row,) = report.rows
    assert row.ell == 2 and row.is_factor
    assert row.magnitude == pytest.approx(1.0, abs=1e-12)
    assert row.cofactor == 2


def test_ell4_saturation_rejected():
    # complete l=4 sums of odd n have modulus exactly 1/sqrt(2), right on the
    # conventional threshold; the cosine verdict must keep rejecting them
    report = factor_scan(17)
    row4 = next(r for r in report.rows if r.ell == 4)
    assert row4.magnitude == pytest.approx(math.sqrt(13.0) / 5.0, abs=1e-12)  # above 1/sqrt(2)
    assert row4.signal == pytest.approx(0.6, abs=1e-12)
    assert not row4.is_factor


def test_agreement_with_trial_division_up_to_300():
    for n in range(2, 301):
        accepted = {row.ell for row in factor_scan(n).rows if row.is_factor}
        true_divisors = {d for d in range(2, math.isqrt(n) + 1) if n % d == 0}
        assert accepted == true_divisors, f"mismatch at n={n}"


def test_report_serialization_shape():
    d = factor_scan(21).to_dict()
    assert d["n"] == 21 and d["m_terms"] == 5
    assert d["threshold"] == pytest.approx(DEFAULT_THRESHOLD)
    assert d["factors"] == [3, 7]
    assert {"ell", "magnitude", "signal", "is_factor", "cofactor"} <= set(d["rows"][0])


def test_parameter_validation():
    with pytest.raises(ValueError):
        gauss_sum(0, 2, 2)
    with pytest.raises(ValueError):
        gauss_sum(5, 0, 2)
    with pytest.raises(ValueError):
        factor_scan(1)
    with pytest.raises(ValueError):
        factor_scan(20, threshold=1.0)
    with pytest.raises(ValueError):
        factor_scan(20, m_terms=0)
