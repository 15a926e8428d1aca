"""Information complexity and weak-tractability diagnostics.

``n(eps, d)`` is the number of Fourier weights strictly above ``eps``: the
minimal ``n`` with ``a_{n+1} <= eps``.  It is obtained from one count below
``eps**-2 - 1``, never by searching over ``n``.  Weights within rounding of
``eps`` are compared one by one, so the result agrees with the values that
the spectrum routines report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import ResourceGuardError, count_lattice, group_shells, walk
from .limitspace import _C, _value
from .profile import SmoothnessProfile
from .spectrum import weight

_EDGE = 1e-12

__all__ = [
    "TractabilityReport",
    "info_complexity",
    "limit_info_complexity",
    "witness_eps",
    "ln_int",
    "wt_ratio",
    "curse_witness",
    "limit_tractability_report",
]


@dataclass(frozen=True)
class TractabilityReport:
    eps: float
    d: int
    n_eps: int
    alpha: float
    beta: float
    ratio: float
    space: str


def _check_eps(eps: float) -> None:
    if not 0.0 < eps <= 1.0:
        raise ValueError(f"eps={eps!r} must lie in (0, 1]")


def _last_above(eps: float, guess: int) -> int:
    """Largest integer ``s >= -1`` with ``weight(s) > eps`` (``weight(-1)`` taken as inf).

    The float weight is flat over long runs of large ``s``, so the search
    probes outward from ``guess`` with doubling steps and then bisects.
    """
    def above(s):
        return s < 0 or weight(s) > eps

    lo, hi = guess, guess + 1  # want above(lo) and not above(hi)
    step = 1
    while not above(lo):
        hi, lo = lo, lo - step
        step *= 2
    lo = max(lo, -1)
    step = 1
    while above(hi):
        lo, hi = hi, hi + step
        step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if above(mid):
            lo = mid
        else:
            hi = mid
    return lo


def info_complexity(profile: SmoothnessProfile, eps: float, *, max_nodes: int = 0) -> int:
    """``#{k : (1 + S(k))**(-1/2) > eps}`` from one count below ``eps**-2 - 1``."""
    _check_eps(eps)
    if eps == 1.0:
        return 0
    t = eps**-2 - 1.0
    if profile.int_exponents is not None:
        s = _last_above(eps, max(math.ceil(t) - 1, 0))
        return count_lattice(profile, s, max_nodes=max_nodes).count if s >= 0 else 0
    lo, hi = t * (1 - _EDGE), t * (1 + _EDGE)
    n = count_lattice(profile, lo, max_nodes=max_nodes).count
    budgets, nz, truncated = walk(profile, lo, hi, cap=1 << 22)
    if truncated:
        raise ResourceGuardError("too many lattice points within rounding of the threshold")
    for b, mult in group_shells(budgets, nz, profile.d):
        if weight(b) > eps:
            n += mult
    return n


def limit_info_complexity(d: int, eps: float) -> int:
    """``n(eps, d)`` for the limit space; at most ``3**d``."""
    _check_eps(eps)
    if eps == 1.0:
        return 0
    # weight (1+m)^(-1/2) > eps  <=>  m < eps^-2 - 1, settled on the weights
    m = min(max(math.ceil(eps**-2 - 1.0) - 1, -1), d)
    while m >= 0 and not _value(m) > eps:
        m -= 1
    while m < d and _value(m + 1) > eps:
        m += 1
    return _C(d, m) if m >= 0 else 0


def witness_eps(d: int) -> float:
    """``(2 + d)**(-1/2)``, at which the limit-space complexity is ``3**d``."""
    return (2.0 + d) ** -0.5


def ln_int(n: int) -> float:
    """Natural log of a positive integer of any size."""
    n = int(n)
    bits = n.bit_length()
    if bits <= 1000:
        return math.log(n)
    shift = bits - 64
    return math.log(n >> shift) + shift * math.log(2.0)


def wt_ratio(n_eps: int, eps: float, d: int, alpha: float, beta: float) -> float:
    """``ln max(n_eps, 1) / (eps**(-alpha) + d**beta)``."""
    if n_eps < 0:
        raise ValueError("n_eps must be nonnegative")
    num = ln_int(max(int(n_eps), 1))
    return num / (eps**-alpha + float(d) ** beta)


def curse_witness(d: int, gamma: float) -> bool:
    """Whether ``n(eps_d, d) >= (1 + gamma)**d`` along the witness ``eps_d``."""
    if d < 1 or not gamma > 0:
        raise ValueError("need d >= 1 and gamma > 0")
    n = limit_info_complexity(d, witness_eps(d))
    return ln_int(n) >= d * math.log1p(gamma) - 1e-12 * d


def limit_tractability_report(d: int, alpha: float, beta: float, eps: float | None = None) -> TractabilityReport:
    eps = witness_eps(d) if eps is None else eps
    n = limit_info_complexity(d, eps)
    return TractabilityReport(eps, d, n, alpha, beta, wt_ratio(n, eps, d, alpha, beta), "limit")
