"""Brute-force reference implementations for cross-validation.

Nothing here shares a code path with the fast lattice walk: budgets are
materialized as numpy sums of per-axis powers over a rectangle (exact
integers when every ``2 R_j`` is an integer), sorted directly, and each
routine checks that its rectangle was big enough before returning.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from .profile import SmoothnessProfile

__all__ = [
    "OracleBoxError",
    "brute_count",
    "brute_budgets",
    "brute_spectrum",
    "brute_limit_spectrum",
    "isotropic_shell_counts",
]

MAX_BOX_POINTS = 10**8


class OracleBoxError(ValueError):
    """The enumeration rectangle cannot certify the result."""


def _box_vector(box, d: int) -> list[int]:
    if isinstance(box, (int, np.integer)):
        vec = [int(box)] * d
    else:
        vec = [int(b) for b in box]
        if len(vec) != d:
            raise ValueError(f"box has length {len(vec)}, expected {d}")
    if any(b < 0 for b in vec):
        raise ValueError("box half-widths must be nonnegative")
    return vec


def _axis(b: int, r: float, exact: bool) -> np.ndarray:
    """Sorted ``|k|**(2r)`` for ``|k| <= b`` (with multiplicity)."""
    if exact:
        e = int(2 * r)
        vals = [abs(k) ** e for k in range(-b, b + 1)]
        dtype = np.int64 if max(vals) < 2**62 else object
        return np.sort(np.array(vals, dtype=dtype))
    k = np.abs(np.arange(-b, b + 1, dtype=np.float64))
    return np.sort(np.power(k, 2.0 * r))


def _exact(profile: SmoothnessProfile) -> bool:
    return all(float(2 * r).is_integer() for r in profile.R)


def _rectangle_budgets(profile: SmoothnessProfile, box: Sequence[int]) -> np.ndarray:
    size = math.prod(2 * b + 1 for b in box)
    if size > MAX_BOX_POINTS:
        raise OracleBoxError(f"rectangle has {size} points, above the {MAX_BOX_POINTS} guard")
    exact = _exact(profile)
    total = np.zeros(1, dtype=np.int64 if exact else np.float64)
    for b, r in zip(box, profile.R):
        axis = _axis(b, r, exact)
        if axis.dtype == object:
            total = total.astype(object)
        total = (total[:, None] + axis[None, :]).ravel()
    return total


def _layered(profile: SmoothnessProfile, box: Sequence[int], keep) -> np.ndarray:
    """Sums over the rectangle built one axis at a time.

    ``keep(values)`` returns the sorted sub-array that can still contribute
    and a bound above which no further sum is needed; since every later term
    is nonnegative, discarding the rest is exact.
    """
    exact = _exact(profile)
    cur, limit = keep(np.zeros(1, dtype=np.int64 if exact else np.float64))
    for b, r in zip(box, profile.R):
        axis = _axis(b, r, exact)
        if axis.dtype == object and cur.dtype != object:
            cur = cur.astype(object)
        axis = axis[axis <= limit] if axis.dtype != object else np.array([a for a in axis if a <= limit], dtype=object)
        cur = cur[cur <= limit] if cur.dtype != object else np.array([c for c in cur if c <= limit], dtype=object)
        size = cur.size * axis.size
        if size > MAX_BOX_POINTS:
            raise OracleBoxError(f"{size} partial sums exceed the {MAX_BOX_POINTS} guard")
        cur, limit = keep((cur[:, None] + axis[None, :]).ravel())
    return cur


def _need(profile: SmoothnessProfile, t) -> list[int]:
    """Per-axis ``max{b : b**(2R_j) <= t}``, corrected against direct powers."""
    out = []
    exact = _exact(profile)
    for r in profile.R:
        b = int(math.floor(float(t) ** (1.0 / (2.0 * r))))
        if exact:
            e = int(2 * r)
            while b > 0 and b**e > t:
                b -= 1
            while (b + 1) ** e <= t:
                b += 1
        else:
            while b > 0 and b ** (2.0 * r) > t:
                b -= 1
            while (b + 1) ** (2.0 * r) <= t:
                b += 1
        out.append(b)
    return out


def brute_count(profile: SmoothnessProfile, T: float, box=None) -> int:
    """``#{k : S(k) <= T}`` by materializing sums over the rectangle ``|k_j| <= box_j``.

    ``box`` may be an int or a per-coordinate sequence (the full rectangle is
    scanned), or ``None`` for the smallest sufficient rectangle, whose sums are
    built axis by axis keeping only partial sums ``<= T``.
    """
    if T < 0:
        raise ValueError("T must be nonnegative")
    need = _need(profile, T)
    if box is None:
        def keep(v):
            v = np.sort(v)
            return v[: int(np.searchsorted(v, T, side="right"))], T

        return int(_layered(profile, need, keep).size)
    vec = _box_vector(box, profile.d)
    if any(b < m for b, m in zip(vec, need)):
        raise OracleBoxError(f"box too small for T={T}; minimal sufficient box is {max(need)}")
    return int(np.count_nonzero(_rectangle_budgets(profile, vec) <= T))


def brute_budgets(profile: SmoothnessProfile, n_max: int, box=None) -> np.ndarray:
    """The ``n_max`` smallest budgets (with multiplicity), ascending.

    Without ``box`` the rectangle ``|k_j| <= n_max // 2`` is used, which
    always holds the answer; partial sums outside the ``n_max`` smallest are
    dropped after each axis.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if box is None:
        vec = [n_max // 2] * profile.d
        exact = _exact(profile)
        # points on the coordinate axes are lattice points, so the n_max-th
        # smallest of them bounds the answer from above
        cross = np.sort(np.concatenate([_axis(b, r, exact)[1:] for b, r in zip(vec, profile.R)]))
        cap = cross[n_max - 2] if n_max >= 2 else 0

        def keep(v):
            v = np.sort(v)
            v = v[v <= cap] if v.dtype != object else np.array([x for x in v if x <= cap], dtype=object)
            v = v[:n_max]
            return v, (v[-1] if v.size == n_max else cap)

        s = _layered(profile, vec, keep)
    else:
        vec = _box_vector(box, profile.d)
        s = np.sort(_rectangle_budgets(profile, vec))
    if s.size < n_max:
        minimal = max(_need(profile, brute_budgets(profile, n_max)[-1]))
        raise OracleBoxError(
            f"box holds only {s.size} points, need {n_max}; minimal sufficient box is {minimal}"
        )
    s = s[:n_max]
    # a point outside the box has some |k_j| >= b_j + 1
    outside = min((b + 1) ** (int(2 * r) if _exact(profile) else 2.0 * r) for b, r in zip(vec, profile.R))
    if not s[-1] <= outside:
        minimal = max(_need(profile, s[-1]))
        raise OracleBoxError(f"box insufficient for n_max={n_max}; minimal sufficient box is {minimal}")
    return s


def brute_spectrum(profile: SmoothnessProfile, n_max: int, box=None) -> list[float]:
    """The first ``n_max`` approximation numbers by sorting all weights."""
    return [(1.0 + float(b)) ** -0.5 for b in brute_budgets(profile, n_max, box)]


def brute_limit_spectrum(d: int) -> list[float]:
    """All ``3**d`` weights of the limit space, sorted descending."""
    if d < 1:
        raise ValueError("d must be positive")
    if d > 7:
        raise OracleBoxError("brute limit spectrum is restricted to d <= 7")
    sums = sorted(sum(abs(x) for x in k) for k in itertools.product((-1, 0, 1), repeat=d))
    return [1.0 / math.sqrt(1 + m) for m in sums]


def isotropic_shell_counts(e: int, d: int, T: int) -> list[int]:
    """``c[t] = #{k in Z^d : sum |k_j|**e = t}`` for ``t = 0..T``.

    Computed as the coefficients of ``(1 + 2 sum_{k>=1} x**(k**e))**d``
    truncated at degree ``T``; independent of any lattice walk.
    """
    if e < 1 or d < 1 or T < 0:
        raise ValueError("need e >= 1, d >= 1, T >= 0")
    # nonzero terms of 1 + 2 sum_k x**(k**e)
    terms = [(0, 1)]
    k = 1
    while k**e <= T:
        terms.append((k**e, 2))
        k += 1
    out = [1] + [0] * T
    for _ in range(d):
        nxt = [0] * (T + 1)
        for i, a in enumerate(out):
            if a:
                for j, c in terms:
                    if i + j > T:
                        break
                    nxt[i + j] += a * c
        out = nxt
    return out
