"""Approximation numbers of ``I_d : W_2^R(T^d) -> L_2(T^d)``.

The embedding is diagonal in the Fourier basis, so ``a_n`` is the ``n``-th
largest weight ``(1 + S(k))**(-1/2)``.  Rather than sorting weights we locate
the ``n``-th smallest budget with the monotone step function
``t -> #{k : S(k) <= t}`` and read off the whole shell's rank range.
"""

from __future__ import annotations

import functools
import math
import sys

from dataclasses import dataclass

import numpy as np

from .lattice import (
    DEFAULT_CAP,
    ResourceGuardError,
    count_lattice,
    group_shells,
    walk,
)
from .profile import SmoothnessProfile
from .volumetrics import log_volume_ball

__all__ = [
    "SpectrumEntry",
    "approx_number",
    "spectrum_prefix",
    "spectrum_values",
    "count_C",
    "step_index",
    "weight",
    "step_budget",
    "bracket_for_rank",
]

# budgets closer than this (relative) are one shell; only matters for
# permutation ties between equal R_j whose float sums round differently
BRACKET_RTOL = 1e-12
_WIDEN = 1e-11
WINDOW_POPULATION = 1 << 8


def shell_rtol(profile: SmoothnessProfile) -> float:
    """Relative gap below which two float budgets count as one shell.

    Permuting equal exponents changes the summation order and so the
    budget by up to about ``2 (d-1)`` ulps; distinct budgets closer than
    this cannot be told apart from the floats anyway.
    """
    return 4.0 * profile.d * sys.float_info.epsilon


def weight(shell) -> float:
    """``(1 + s)**(-1/2)``."""
    return (1 + shell) ** -0.5


@dataclass(frozen=True)
class SpectrumEntry:
    """One approximation number together with the shell it belongs to."""

    n: int
    value: float
    shell: float
    shell_rank_lo: int
    shell_rank_hi: int
    exact: bool = True

    @property
    def multiplicity(self) -> int:
        return self.shell_rank_hi - self.shell_rank_lo + 1


def _count(profile, t, **kw) -> int:
    return count_lattice(profile, t, **kw).count


def _growth(profile) -> float:
    """Budget factor that roughly doubles the count: ``count(t) ~ t**(1/(2g))``."""
    return 2.0 ** (2.0 * profile.g)


@functools.lru_cache(maxsize=256)
def _log_vol(exponents) -> float:
    return log_volume_ball(exponents).log_value


def _seed(profile, n) -> float:
    """Budget where the ball volume reaches ``n``; only a starting point."""
    x = 2.0 * profile.g * (math.log(n) - _log_vol(profile.exponents))
    return math.exp(min(max(x, 0.0), 700.0))


def _bracket_int(profile, n, max_nodes):
    """Smallest integer budget ``s`` with ``count(s) >= n``, with counts at ``s-1`` and ``s``."""
    ratio = _growth(profile)
    hi = max(1, math.ceil(_seed(profile, n)))
    chi = _count(profile, hi, max_nodes=max_nodes)
    if chi >= n:
        lo = hi
        while True:
            lo = math.floor(lo / ratio) if lo > 1 else 0
            clo = _count(profile, lo, max_nodes=max_nodes)
            if clo < n:
                break
            hi, chi = lo, clo
    else:
        lo, clo = hi, chi
        while chi < n:
            lo, clo = hi, chi
            hi = max(hi + 1, math.ceil(hi * ratio))
            chi = _count(profile, hi, max_nodes=max_nodes)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = _count(profile, mid, max_nodes=max_nodes)
        if c >= n:
            hi, chi = mid, c
        else:
            lo, clo = mid, c
    return hi, clo, chi


def approx_number(
    profile: SmoothnessProfile,
    n: int,
    *,
    cap: int = DEFAULT_CAP,
    max_nodes: int = 0,
) -> SpectrumEntry:
    """The ``n``-th approximation number ``a_n`` with its shell.

    With integer ``2 R_j`` the search runs over integer budgets and is exact.
    Otherwise the real bracket is bisected until its population is small,
    then the window is enumerated and the ``n``-th budget read off directly.
    ``exact`` is ``False`` only when that enumeration would exceed ``cap``
    points; the bracket midpoint is reported instead.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return SpectrumEntry(1, 1.0, 0 if profile.int_exponents else 0.0, 1, 1, True)

    if profile.int_exponents is not None:
        s, clo, chi = _bracket_int(profile, n, max_nodes)
        return SpectrumEntry(n, weight(s), s, clo + 1, chi, True)

    ratio = _growth(profile)
    hi = max(1.0, _seed(profile, n))
    chi = _count(profile, hi, max_nodes=max_nodes)
    if chi >= n:
        lo = hi
        while True:
            # count(t) = 1 for t < 1, so this stops by then
            lo = lo / ratio if lo >= 1.0 else 0.0
            clo = _count(profile, lo, max_nodes=max_nodes)
            if clo < n:
                break
            hi, chi = lo, clo
    else:
        lo, clo = hi, chi
        while chi < n:
            lo, clo = hi, chi
            hi *= ratio
            chi = _count(profile, hi, max_nodes=max_nodes)
    while chi - clo > WINDOW_POPULATION and hi - lo > BRACKET_RTOL * hi:
        mid = 0.5 * (lo + hi)
        c = _count(profile, mid, max_nodes=max_nodes)
        if c >= n:
            hi, chi = mid, c
        else:
            lo, clo = mid, c

    wlo = lo * (1.0 - _WIDEN)
    whi = hi * (1.0 + _WIDEN)
    base = _count(profile, wlo, max_nodes=max_nodes) if wlo > 0 else 1
    budgets, nz, truncated = walk(profile, wlo, whi, cap)
    if truncated:
        mid = 0.5 * (lo + hi)
        return SpectrumEntry(n, weight(mid), mid, clo + 1, chi, False)
    cum = base
    for b, m in group_shells(budgets, nz, profile.d, shell_rtol(profile)):
        if cum + m >= n:
            return SpectrumEntry(n, weight(b), b, cum + 1, cum + m, True)
        cum += m
    raise AssertionError("bracket does not contain rank n")  # pragma: no cover


def spectrum_prefix(
    profile: SmoothnessProfile,
    n_max: int,
    *,
    cap: int = 10**8,
) -> list[SpectrumEntry]:
    """All shells covering ranks ``1..n_max`` in decreasing weight order.

    Each entry carries the shell's full rank range; the last shell may extend
    past ``n_max``.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    last = approx_number(profile, n_max)
    if not last.exact:
        raise ResourceGuardError("final shell could not be resolved within the enumeration cap")
    if profile.int_exponents is not None:
        top = last.shell
        tol = 0.0
    else:
        top = last.shell * (1.0 + _WIDEN)
        tol = shell_rtol(profile)
    budgets, nz, truncated = walk(profile, -1, top, min(cap, last.shell_rank_hi + 1))
    if truncated:
        raise ResourceGuardError(f"more than {cap} orthant points below the final shell")
    out = []
    cum = 0
    for b, m in group_shells(budgets, nz, profile.d, tol):
        out.append(SpectrumEntry(cum + 1, weight(b), b, cum + 1, cum + m, True))
        cum += m
        if cum >= n_max:
            break
    return out


def spectrum_values(profile: SmoothnessProfile, n_max: int, *, budgets: bool = False) -> np.ndarray:
    """``a_1, ..., a_{n_max}`` as an array (or the budgets when ``budgets``)."""
    shells = spectrum_prefix(profile, n_max)
    vals = [e.shell if budgets else e.value for e in shells]
    reps = [min(e.shell_rank_hi, n_max) - e.shell_rank_lo + 1 for e in shells]
    dtype = np.float64
    if budgets and profile.int_exponents is not None:
        dtype = np.int64 if not vals or max(vals) < 2**63 else object
    return np.repeat(np.asarray(vals, dtype=dtype), reps)


def step_budget(profile: SmoothnessProfile, m: int):
    two_p = 2.0 * profile.p
    if profile.int_exponents is not None and two_p.is_integer():
        return m ** int(two_p)
    return float(m) ** two_p


def count_C(profile: SmoothnessProfile, m: int, **kw) -> int:
    """``#{k : S(k) <= m**(2p)}`` with ``p = max(1/2, max R_j)``."""
    m = int(m)
    if m < 0:
        raise ValueError("m must be nonnegative")
    return count_lattice(profile, step_budget(profile, m), **kw).count


def step_index(profile: SmoothnessProfile, n: int) -> tuple[int, int, int]:
    """The ``m`` with ``C(m-1) < n <= C(m)`` as ``(m, C(m-1), C(m))``.

    Requires ``n >= 2`` so that ``m >= 1``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    hi = 1
    chi = count_C(profile, hi)
    while chi < n:
        hi *= 2
        chi = count_C(profile, hi)
    lo = hi // 2
    clo = count_C(profile, lo)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = count_C(profile, mid)
        if c >= n:
            hi, chi = mid, c
        else:
            lo, clo = mid, c
    return hi, clo, chi


def bracket_for_rank(profile: SmoothnessProfile, n: int) -> tuple[float, float]:
    """The step bracket ``(1+m^{2p})^{-1/2} <= a_n <= (1+(m-1)^{2p})^{-1/2}``."""
    if n == 1:
        return 1.0, 1.0
    m, _, _ = step_index(profile, n)
    return weight(step_budget(profile, m)), weight(step_budget(profile, m - 1))
