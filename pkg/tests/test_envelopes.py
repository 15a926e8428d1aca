from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sobwidth.envelopes import (
    Regime,
    asymptotic_envelope,
    classify,
    counting_sandwich,
    piecewise_envelope,
    preasymptotic_value,
    sandwich_holds,
    strong_equiv_bracket,
)
from sobwidth.profile import make_profile
from sobwidth.spectrum import approx_number, spectrum_values
from sobwidth.volumetrics import strong_equiv_constant

from strategies import half_integer_R, profiles


def test_preasymptotic_examples():
    for d in (1, 5, 20):
        assert preasymptotic_value(d, 2**d) == pytest.approx(d**-0.5, rel=1e-14)
    assert preasymptotic_value(4, 4) == pytest.approx(math.sqrt(math.log2(3) / 2), rel=1e-14)
    # (log2(3)/2)**0.5 = 0.89021...
    assert preasymptotic_value(4, 4) == pytest.approx(0.89021, abs=1e-5)
    vals = [preasymptotic_value(7, n) for n in range(2, 3000)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        preasymptotic_value(3, 1)


def test_classify_boundaries():
    assert classify(5, 1) is Regime.SMALL
    assert classify(5, 5) is Regime.SMALL
    assert classify(5, 6) is Regime.PREASYMPTOTIC
    assert classify(5, 3**5) is Regime.PREASYMPTOTIC
    assert classify(5, 3**5 + 1) is Regime.ASYMPTOTIC
    assert classify(1000, 3**1000) is Regime.PREASYMPTOTIC


def test_piecewise_examples():
    p = make_profile([1] * 8)
    env = piecewise_envelope(p, 1)
    assert env.regime is Regime.SMALL and env.comparison == 1.0 and not env.guaranteed
    env = piecewise_envelope(p, 100)
    assert env.regime is Regime.PREASYMPTOTIC
    assert env.comparison == pytest.approx(math.sqrt(math.log2(1 + 8 / math.log2(100)) / math.log2(100)))
    assert env.lower is None and env.upper is None


@pytest.mark.parametrize("d", range(1, 13))
def test_boundary_reports_both_branches(d):
    p = make_profile([1] * d)
    top = piecewise_envelope(p, 3**d)
    assert top.alt_comparison is not None
    # the two comparison values agree up to a d-independent factor
    assert 0.1 < top.comparison / top.alt_comparison < 10
    if d >= 2:
        assert piecewise_envelope(p, d).alt_comparison is not None


def test_envelope_ratio_is_n_independent():
    p = make_profile([0.7, 1.4, 2.0])
    r = [asymptotic_envelope(p, n).upper / asymptotic_envelope(p, n).lower for n in (10, 10**5, 10**30)]
    assert r == pytest.approx([r[0]] * 3, rel=1e-12)


def test_statement_factor_dominates():
    p = make_profile([1, 2])
    env = asymptotic_envelope(p, 10**6)
    assert env.upper_tight < env.upper
    assert env.upper / env.upper_tight == pytest.approx(((1 + 3 / 2) / (3 / 2)) ** 1.0, rel=1e-13)


def test_guarantee_needs_threshold():
    p = make_profile([1, 2])
    assert not asymptotic_envelope(p, 10**5).guaranteed
    assert asymptotic_envelope(p, 2 * 10**5).guaranteed


def test_end_to_end_containment_at_million():
    p = make_profile([1, 1])
    env = asymptotic_envelope(p, 10**6)
    a = approx_number(p, 10**6).value
    assert env.guaranteed and env.lower <= a <= env.upper


@pytest.mark.parametrize("R", [[1], [0.5, 1], [1, 1], [1, 2], [2, 2], [0.5, 1, 1.5]])
def test_envelope_containment_after_threshold(R):
    p = make_profile(R)
    n_max = 10**5
    start = math.floor(p.E**p.d) + 1 if p.d * p.log_E < math.log(n_max) else None
    if start is None:
        pytest.skip("guarantee window starts beyond the tested range")
    vals = spectrum_values(p, n_max)
    env = asymptotic_envelope(p, 1)
    n = np.arange(start, n_max + 1, dtype=np.float64)
    decay = n ** (-p.g)
    a = vals[start - 1:]
    assert np.all(env.lower * decay <= a) and np.all(a <= env.upper * decay)


def test_sandwich_example():
    B, C, A = counting_sandwich(make_profile([1, 1]), 1)
    assert B == pytest.approx((1 - 2**-0.5) ** 2 * math.pi, rel=1e-12)
    assert B == pytest.approx(0.2694, abs=1e-3)
    assert C == 5
    assert A == pytest.approx((1 + 2**-0.5) ** 2 * math.pi, rel=1e-12)


def test_sandwich_positive_part():
    p = make_profile([0.4, 0.4])
    assert p.bR > 1
    B, C, _ = counting_sandwich(p, 1)
    assert B == 0.0 and C >= 1


def test_sandwich_upper_equality_in_one_dimension():
    # C(m) = 2m + 1 = A(m) when d = 1; the float end may round below
    p = make_profile([0.7606010150495925])
    B, C, A = counting_sandwich(p, 18)
    assert C == 37 and A == pytest.approx(37, rel=1e-14)
    assert sandwich_holds(B, C, A)


@given(profiles(d_max=2, elements=st.floats(0.5, 2.0)), st.integers(1, 30))
def test_sandwich_property(p, m):
    assert sandwich_holds(*counting_sandwich(p, m))


def test_strong_equivalence_bracket_two_scale():
    p = make_profile([1, 2])
    limit = strong_equiv_constant(p)
    widths = []
    for n in (10**2, 10**3, 10**4, 10**5):
        lo, hi = strong_equiv_bracket(p, n)
        scaled = float(n) ** p.g * approx_number(p, n).value
        assert lo <= scaled <= hi
        widths.append(hi - lo)
    assert widths[1] > widths[3]
    assert abs((10**5) ** p.g * approx_number(p, 10**5).value / limit - 1) < 0.08


def test_strong_equivalence_bracket_one_dimension():
    p = make_profile([1])
    lo, hi = strong_equiv_bracket(p, 10**6)
    assert lo == pytest.approx(2.0, rel=1e-3) and hi == pytest.approx(2.0, rel=1e-3)


@given(st.lists(half_integer_R, min_size=1, max_size=3).map(make_profile), st.integers(2, 20000))
def test_strong_equivalence_bracket_contains(p, n):
    lo, hi = strong_equiv_bracket(p, n)
    scaled = math.exp(p.g * math.log(n)) * approx_number(p, n).value
    assert lo * (1 - 1e-12) <= scaled <= hi * (1 + 1e-12)
