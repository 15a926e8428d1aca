from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sobwidth.profile import make_profile, parse_profile, power, quasi_norm

from strategies import profiles


def test_equal_entries():
    p = make_profile([1, 1])
    assert (p.g, p.u, p.v, p.p) == (0.5, 1.0, 1.0, 1.0)
    assert p.isotropic


def test_two_scale_profile():
    p = make_profile([1, 2])
    assert p.g == pytest.approx(2 / 3, rel=1e-15)
    assert (p.u, p.v, p.p) == (2.0, 1.0, 2.0)
    assert p.bR == pytest.approx((0.25 + 0.0625) ** 0.25, rel=1e-14)
    assert p.bR == pytest.approx(0.74767, abs=1e-5)


def test_crossover_constant():
    # E for (1, 2): ln E = 2 ln 4 + 2 ln 2 + ln(3/2) + (1/2) ln(4e)
    p = make_profile([1, 2])
    assert p.E == pytest.approx(316.55, rel=1e-4)
    assert p.E**2 == pytest.approx(1.0021e5, rel=1e-3)
    # (1, 1): ln 4 + ln 2 + (1/2) ln(3/2) + (1/2) ln(2e)
    assert make_profile([1, 1]).E == pytest.approx(22.845, rel=1e-4)


def test_guarantee_threshold_is_strict():
    p = make_profile([1, 1])
    n = math.floor(p.E**2)
    assert not p.guarantee_holds(n)
    assert p.guarantee_holds(n + 1)


@pytest.mark.parametrize("R, idx", [([], None), ([1, 0], 1), ([1, -2], 1), ([math.inf], 0), ([math.nan, 1], 0)])
def test_invalid_profiles_name_index(R, idx):
    with pytest.raises(ValueError) as exc:
        make_profile(R)
    if idx is not None:
        assert f"[{idx}]" in str(exc.value)


def test_parse_list_and_shorthand():
    assert parse_profile("1,2,0.5").R == (1.0, 2.0, 0.5)
    p = parse_profile("1.5^8")
    assert p.d == 8 and p.isotropic
    assert p.g == pytest.approx(1.5 / 8, rel=1e-15)
    with pytest.raises(ValueError):
        parse_profile("1,,2")
    with pytest.raises(ValueError):
        parse_profile("2^0")


def test_quasi_norm_examples():
    assert quasi_norm([0.0, 0.0], make_profile([1, 2])) == 0.0
    assert quasi_norm([2.0], make_profile([1])) == pytest.approx(2.0, rel=1e-15)
    assert quasi_norm([1.0, 1.0], make_profile([1, 2])) == pytest.approx(2**0.25, rel=1e-15)
    assert quasi_norm([1.0, 1.0], make_profile([1, 2])) == pytest.approx(1.18921, abs=1e-5)
    with pytest.raises(ValueError):
        quasi_norm([1.0], make_profile([1, 1]))


def test_power_zero_convention():
    assert power(0.0, 0.6) == 0.0
    assert power(-2.0, 2.0) == pytest.approx(4.0)


@given(profiles(d_max=12))
def test_scalar_invariants(p):
    assert p.v <= p.d * p.g * (1 + 1e-12) and p.d * p.g <= p.u * (1 + 1e-12)
    assert p.p >= 0.5
    assert 0 < p.bR <= p.d ** (1 / (2 * p.p)) * (1 + 1e-12)


@given(st.floats(0.3, 3.0), st.integers(1, 50))
def test_isotropic_g(s, d):
    assert make_profile([s] * d).g == pytest.approx(s / d, rel=1e-13)


@given(profiles(d_max=6), st.randoms(use_true_random=False))
def test_permutation_invariance(p, rnd):
    R = list(p.R)
    rnd.shuffle(R)
    q = make_profile(R)
    for name in ("u", "v", "p", "g", "bR", "log_E"):
        assert getattr(q, name) == pytest.approx(getattr(p, name), rel=1e-13)


@given(profiles(d_max=8), st.integers(0, 2**32 - 1))
def test_quasi_triangle(p, seed):
    rng = np.random.default_rng(seed)
    scale = 10.0 ** rng.uniform(-3, 3, size=p.d)
    x = rng.standard_normal(p.d) * scale
    y = rng.standard_normal(p.d) * scale
    rhs = quasi_norm(x, p) + quasi_norm(y, p)
    assert quasi_norm(x + y, p) <= rhs + 1e-12 * max(1.0, rhs)
