"""The limit space ``W_2^inf(T^d)``: frequencies in ``{-1,0,1}^d``.

Its weights ``(1 + |k|_1)**(-1/2)`` depend only on the number ``m`` of
nonzero coordinates, so the spectrum is a staircase with ``d + 1`` steps of
sizes ``D(m, d) = 2**m * binom(d, m)``.  Logarithms are base 2 here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "LimitShell",
    "limit_count",
    "limit_shell_index",
    "limit_approx_number",
    "limit_preasymptotic_bracket",
]


@dataclass(frozen=True)
class LimitShell:
    m: int
    D: int
    C: int
    value: float


def _value(m: int) -> float:
    return 1.0 / math.sqrt(1 + m)


def _check_d(d: int) -> None:
    if int(d) != d or d < 1:
        raise ValueError("d must be a positive integer")


def _C(d: int, m: int) -> int:
    return sum((1 << j) * math.comb(d, j) for j in range(m + 1))


def limit_count(d: int, m: int) -> LimitShell:
    """Shell size ``D(m,d)`` and cumulative count ``C(m,d)``."""
    _check_d(d)
    if not 0 <= m <= d:
        raise ValueError(f"m={m} outside [0, {d}]")
    return LimitShell(m, (1 << m) * math.comb(d, m), _C(d, m), _value(m))


def limit_shell_index(d: int, n: int) -> int | None:
    """Smallest ``m`` with ``C(m, d) >= n``; ``None`` when ``n > 3**d``."""
    _check_d(d)
    if n < 1:
        raise ValueError("n must be positive")
    if n > 3**d:
        return None
    lo, hi = -1, d  # C(-1) := 0 < n <= C(d)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _C(d, mid) >= n:
            hi = mid
        else:
            lo = mid
    return hi


def limit_approx_number(d: int, n: int) -> float:
    """``a_n`` for the limit space; exactly ``0.0`` beyond ``3**d``."""
    m = limit_shell_index(d, n)
    if m is None:
        return 0.0
    return _value(m)


def limit_preasymptotic_bracket(d: int, n: int) -> tuple[float, float]:
    """Lower and upper bounds on the shell index of rank ``n``.

    For ``3 <= m < d/2`` these are ``log n / (2 log(4ed / log n))`` and
    ``log n / log(2d / log n) + 1``; outside that window the trivial bracket
    ``(0, d)`` is returned.
    """
    _check_d(d)
    if not 2 * d * d + 1 < n <= 3**d:
        raise ValueError(f"n={n} outside the window (2d^2+1, 3^d] for d={d}")
    m = limit_shell_index(d, n)
    if not (3 <= m < d / 2):
        return 0.0, float(d)
    log_n = _log2_int(n)
    lower = log_n / (2.0 * math.log2(4.0 * math.e * d / log_n))
    upper = log_n / math.log2(2.0 * d / log_n) + 1.0
    return lower, upper


def _log2_int(n: int) -> float:
    bits = n.bit_length()
    if bits <= 1000:
        return math.log2(n)
    shift = bits - 64
    return math.log2(n >> shift) + shift
