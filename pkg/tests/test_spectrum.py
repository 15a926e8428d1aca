from __future__ import annotations

import math
import time

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sobwidth.oracle import brute_budgets, isotropic_shell_counts
from sobwidth.profile import make_profile
from sobwidth.spectrum import (
    approx_number,
    bracket_for_rank,
    count_C,
    spectrum_prefix,
    spectrum_values,
    step_index,
)

from strategies import half_integer_R, mixed_profiles, profiles, threshold_for


def test_first_number_is_one():
    for R in ([1], [0.4, 2.7], [1.5] * 5):
        e = approx_number(make_profile(R), 1)
        assert (e.value, e.shell, e.shell_rank_lo, e.shell_rank_hi) == (1.0, 0, 1, 1)


def test_approx_number_examples():
    e = approx_number(make_profile([1]), 2)
    assert e.value == pytest.approx(2**-0.5, rel=1e-15) and e.shell == 1
    assert (e.shell_rank_lo, e.shell_rank_hi) == (2, 3)
    e = approx_number(make_profile([1, 1]), 6)
    assert e.value == pytest.approx(3**-0.5, rel=1e-15) and e.shell == 2
    assert (e.shell_rank_lo, e.shell_rank_hi) == (6, 9)
    with pytest.raises(ValueError):
        approx_number(make_profile([1]), 0)


def test_prefix_examples():
    shells = spectrum_prefix(make_profile([1]), 5)
    assert [(e.shell, e.shell_rank_lo, e.shell_rank_hi) for e in shells] == [(0, 1, 1), (1, 2, 3), (4, 4, 5)]
    assert [e.value for e in shells] == pytest.approx([1, 2**-0.5, 5**-0.5], rel=1e-15)
    assert [(e.n, e.value) for e in spectrum_prefix(make_profile([1]), 1)] == [(1, 1.0)]
    shells = spectrum_prefix(make_profile([1, 1]), 9)
    assert [(e.shell, e.multiplicity) for e in shells] == [(0, 1), (1, 4), (2, 4)]


def test_count_C_examples():
    assert count_C(make_profile([0.8, 1.7]), 0) == 1
    assert count_C(make_profile([1, 1]), 1) == 5
    assert count_C(make_profile([1, 2]), 1) == 5


@given(p=mixed_profiles(4), n=st.integers(1, 400))
def test_approx_number_matches_oracle(p, n):
    ref = brute_budgets(p, n)[-1]
    e = approx_number(p, n)
    assert e.exact and e.shell_rank_lo <= n <= e.shell_rank_hi
    if p.int_exponents is not None:
        assert e.shell == ref
    else:
        assert e.shell == pytest.approx(float(ref), rel=1e-9)
    assert e.value == pytest.approx((1 + float(e.shell)) ** -0.5, rel=1e-15)


@given(p=mixed_profiles(3), n=st.integers(1, 600))
def test_prefix_matches_oracle(p, n):
    got = spectrum_values(p, n, budgets=True)
    ref = brute_budgets(p, n)
    if p.int_exponents is not None:
        assert list(got) == list(ref)
    else:
        np.testing.assert_allclose(got, ref.astype(float), rtol=1e-9, atol=0)


@given(p=profiles(3), n=st.integers(1, 500))
def test_prefix_shells_contiguous_and_decreasing(p, n):
    shells = spectrum_prefix(p, n)
    assert shells[0].shell_rank_lo == 1
    for a, b in zip(shells, shells[1:]):
        assert b.shell_rank_lo == a.shell_rank_hi + 1
        assert b.value < a.value
    assert shells[-1].shell_rank_lo <= n <= shells[-1].shell_rank_hi


@given(p=mixed_profiles(3), n=st.integers(2, 3000))
def test_step_bracket(p, n):
    m, c_prev, c_m = step_index(p, n)
    assert c_prev < n <= c_m
    lo, hi = bracket_for_rank(p, n)
    a = approx_number(p, n).value
    assert lo * (1 - 1e-12) <= a <= hi * (1 + 1e-12)


@given(p=mixed_profiles(3), n=st.integers(1, 2000))
def test_nonincreasing(p, n):
    v = spectrum_values(p, n)
    assert v[0] == 1.0
    assert np.all(np.diff(v) <= 0)


@given(s=half_integer_R, d=st.integers(1, 3), n=st.integers(1, 2000))
def test_isotropic_reduction(s, d, n):
    # the n-th budget of (s,...,s) from polynomial shell counts
    p = make_profile([s] * d)
    assume(threshold_for(p, 2 * n) <= 1000)
    e = int(2 * s)
    T = 1
    while sum(isotropic_shell_counts(e, d, T)) < n:
        T *= 2
    shells = isotropic_shell_counts(e, d, T)
    cum = 0
    for t, c in enumerate(shells):
        cum += c
        if cum >= n:
            break
    assert approx_number(p, n).shell == t


def test_million_in_two_dimensions_is_fast():
    t0 = time.perf_counter()
    e = approx_number(make_profile([1, 2]), 10**6)
    assert time.perf_counter() - t0 < 5.0
    assert e.exact and e.shell_rank_lo <= 10**6 <= e.shell_rank_hi


def test_large_rank_shell_populations_are_exact_integers():
    p = make_profile([0.5] * 30)
    n = 10**6
    e = approx_number(p, n)
    assert isinstance(e.shell_rank_hi, int)
    # l1 ball counts: sum_j 2^j C(30,j) C(T,j)
    count = lambda T: sum((1 << j) * math.comb(30, j) * math.comb(T, j) for j in range(31))
    assert count(e.shell - 1) < n <= count(e.shell) == e.shell_rank_hi
