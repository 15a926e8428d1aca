"""Explicit theoretical bounds and comparison values for ``a_n``.

Three regimes: ``n <= d`` where ``a_n`` is of order one, ``d < n <= 3**d``
where it follows ``(log(1 + d/log n) / log n)**(1/2)`` (base-2 logs), and
``n > 3**d`` where it decays like ``d**(-1/2) n**(-g)``.  Only the last
regime has explicit constants, and only once ``n > E**d``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .profile import SmoothnessProfile
from .spectrum import step_budget, count_C, step_index
from .volumetrics import log_volume_ball

__all__ = [
    "Regime",
    "Envelope",
    "classify",
    "preasymptotic_value",
    "asymptotic_envelope",
    "piecewise_envelope",
    "counting_sandwich",
    "sandwich_holds",
    "strong_equiv_bracket",
]

_LN2 = math.log(2.0)
_LN3 = math.log(3.0)
SANDWICH_RTOL = 1e-12


class Regime(str, enum.Enum):
    SMALL = "small"
    PREASYMPTOTIC = "preasymptotic"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class Envelope:
    """Bounds and comparison value for ``a_n`` at one ``(profile, n)``.

    ``upper`` uses the larger factor ``(1 + (2v+1)/(2v))**(u/(2v))`` and is
    the one asserted; ``upper_tight`` uses ``((2v+1)/(2v))**(u/(2v))``.
    ``alt_comparison`` holds the neighbouring branch's value at ``n = d``
    and ``n = 3**d`` where two branches meet.
    """

    regime: Regime
    comparison: float
    lower: float | None = None
    upper: float | None = None
    upper_tight: float | None = None
    guaranteed: bool = False
    alt_comparison: float | None = None


def _ln_int(n: int) -> float:
    bits = n.bit_length()
    if bits <= 1000:
        return math.log(n)
    shift = bits - 64
    return math.log(n >> shift) + shift * _LN2


def classify(d: int, n: int) -> Regime:
    if n <= d:
        return Regime.SMALL
    if _ln_int(n) <= d * _LN3 and n <= 3**d:
        return Regime.PREASYMPTOTIC
    return Regime.ASYMPTOTIC


def preasymptotic_value(d: int, n: int) -> float:
    """``(log(1 + d/log n) / log n)**(1/2)`` with base-2 logarithms."""
    if n < 2:
        raise ValueError("n must be at least 2")
    log_n = _ln_int(n) / _LN2
    return math.sqrt(math.log2(1.0 + d / log_n) / log_n)


def _asymptotic_comparison(profile: SmoothnessProfile, n: int) -> float:
    return math.exp(-0.5 * math.log(profile.d) - profile.g * _ln_int(n))


def asymptotic_envelope(profile: SmoothnessProfile, n: int) -> Envelope:
    """Explicit two-sided bounds ``c n**(-g) <= a_n <= C n**(-g)``.

    ``guaranteed`` is set only when ``ln n > d ln E``; below that the same
    formulas are returned for reference.
    """
    if n < 1:
        raise ValueError("n must be positive")
    d, u, v, p, g = profile.d, profile.u, profile.v, profile.p, profile.g
    ln_decay = -g * _ln_int(n)
    ln_lower = (v - p) * _LN2 - 0.5 * math.log(math.e * (d + 2.0 * u))
    ln_common = (p + u) * _LN2 + 0.5 * math.log(2.0 * math.e * u / d)
    ln_upper = ln_common + (u / (2.0 * v)) * math.log(1.0 + (2.0 * v + 1.0) / (2.0 * v))
    ln_tight = ln_common + (u / (2.0 * v)) * math.log((2.0 * v + 1.0) / (2.0 * v))
    return Envelope(
        regime=classify(d, n),
        comparison=_asymptotic_comparison(profile, n),
        lower=math.exp(ln_lower + ln_decay),
        upper=math.exp(ln_upper + ln_decay),
        upper_tight=math.exp(ln_tight + ln_decay),
        guaranteed=profile.guarantee_holds(n),
    )


def piecewise_envelope(profile: SmoothnessProfile, n: int) -> Envelope:
    """Regime-dependent comparison value for ``a_n``.

    The order-of-magnitude statements behind the first two regimes have no
    explicit constants, so they carry no bounds and ``guaranteed`` is false.
    """
    if n < 1:
        raise ValueError("n must be positive")
    d = profile.d
    regime = classify(d, n)
    if regime is Regime.SMALL:
        alt = preasymptotic_value(d, n) if n == d and n >= 2 else None
        return Envelope(Regime.SMALL, 1.0, alt_comparison=alt)
    if regime is Regime.PREASYMPTOTIC:
        alt = _asymptotic_comparison(profile, n) if n == 3**d else None
        return Envelope(Regime.PREASYMPTOTIC, preasymptotic_value(d, n), alt_comparison=alt)
    return asymptotic_envelope(profile, n)


def counting_sandwich(profile: SmoothnessProfile, m: int) -> tuple[float, int, float]:
    """``(B, C, A)`` with ``B <= C(m) <= A`` from covering unit cubes by balls.

    ``B = (m - bR)_+**(p/g) vol(B_{2R})`` and ``A = (m + bR)**(p/g) vol(B_{2R})``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    vol = log_volume_ball(profile.exponents).value
    expo = profile.p / profile.g
    lo = m - profile.bR
    B = lo**expo * vol if lo > 0 else 0.0
    A = (m + profile.bR) ** expo * vol
    return B, count_C(profile, m), A


def sandwich_holds(B: float, C: int, A: float, rel: float = SANDWICH_RTOL) -> bool:
    """``B <= C <= A`` up to a relative rounding slack on the real ends.

    Equality ``C = A`` does occur (``d = 1``), so the float ends are
    compared with slack ``rel``.
    """
    return B <= C * (1.0 + rel) and C <= A * (1.0 + rel)


def strong_equiv_bracket(profile: SmoothnessProfile, n: int) -> tuple[float, float]:
    """Bracket on ``n**g * a_n`` from the step containing rank ``n``.

    With ``C(m-1) < n <= C(m)``:
    ``C(m-1)**g (1+m^{2p})**(-1/2) < n**g a_n <= C(m)**g (1+(m-1)^{2p})**(-1/2)``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    g = profile.g
    m, c_prev, c_m = step_index(profile, n)
    ln_lower = g * _ln_int(c_prev) - 0.5 * math.log1p(float(step_budget(profile, m)))
    ln_upper = g * _ln_int(c_m) - 0.5 * math.log1p(float(step_budget(profile, m - 1)))
    return math.exp(ln_lower), math.exp(ln_upper)
