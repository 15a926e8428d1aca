from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sobwidth.limitspace import (
    limit_approx_number,
    limit_count,
    limit_preasymptotic_bracket,
    limit_shell_index,
)
from sobwidth.oracle import brute_limit_spectrum


def test_count_examples():
    for d in (1, 5, 40):
        assert limit_count(d, 0).C == 1 and limit_count(d, 0).D == 1
        assert limit_count(d, d).C == 3**d
    for d in (2, 10, 1000):
        assert limit_count(d, 2).C == 2 * d * d + 1
    with pytest.raises(ValueError):
        limit_count(3, 4)


def test_approx_examples():
    assert limit_approx_number(4, 1) == 1.0
    assert limit_approx_number(2, 6) == 1 / math.sqrt(3)
    for d in range(1, 13):
        assert limit_approx_number(d, 3**d) == 1 / math.sqrt(1 + d)
        assert limit_approx_number(d, 3**d + 1) == 0.0


@pytest.mark.parametrize("d", range(1, 8))
def test_matches_brute_force(d):
    ref = brute_limit_spectrum(d)
    assert [limit_approx_number(d, n) for n in range(1, 3**d + 1)] == ref


def test_telescoping():
    for d in (1, 7, 50, 200):
        assert sum(limit_count(d, m).D for m in range(d + 1)) == 3**d


@given(st.integers(1, 300), st.data())
def test_shell_index_inverts_counts(d, data):
    n = data.draw(st.integers(1, 3**d))
    m = limit_shell_index(d, n)
    prev = limit_count(d, m - 1).C if m > 0 else 0
    assert prev < n <= limit_count(d, m).C


@pytest.mark.parametrize("d", range(1, 13))
def test_bracket_exhaustive(d):
    for n in range(2 * d * d + 2, 3**d + 1):
        lo, hi = limit_preasymptotic_bracket(d, n)
        m = limit_shell_index(d, n)
        assert lo <= m <= hi


def test_bracket_examples():
    lo, hi = limit_preasymptotic_bracket(10, 1000)
    assert lo <= limit_shell_index(10, 1000) <= hi
    lo, hi = limit_preasymptotic_bracket(12, 3**12)
    assert lo <= 12 <= hi
    with pytest.raises(ValueError):
        limit_preasymptotic_bracket(10, 2 * 100 + 1)


def test_bracket_nontrivial_branch():
    # d = 12, m = 3..5 is where the proof's bounds are in force
    d = 12
    n = limit_count(d, 3).C
    lo, hi = limit_preasymptotic_bracket(d, n)
    log_n = math.log2(n)
    assert lo == pytest.approx(log_n / (2 * math.log2(4 * math.e * d / log_n)))
    assert hi == pytest.approx(log_n / math.log2(2 * d / log_n) + 1)
