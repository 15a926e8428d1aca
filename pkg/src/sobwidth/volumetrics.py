"""Volumes of generalized balls ``{x : sum |x_j|**r_j <= t}`` and related constants.

Everything is carried as natural logarithms; ``Gamma(1 + d/r)`` overflows a
double long before the quantities of interest do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .profile import SmoothnessProfile

__all__ = [
    "LogVolume",
    "log_gamma",
    "log_volume_ball",
    "log_volume_isotropic",
    "log_scaled_volume",
    "strong_equiv_constant",
    "log_strong_equiv_constant",
    "gamma_bracket",
    "volume_constant_bracket",
]

log_gamma = math.lgamma


@dataclass(frozen=True)
class LogVolume:
    log_value: float
    d: int
    exponents: tuple[float, ...]

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _exponents(exponents: Sequence[float]) -> tuple[float, ...]:
    out = tuple(float(r) for r in exponents)
    if not out:
        raise ValueError("need at least one exponent")
    for i, r in enumerate(out):
        if not (r > 0.0 and math.isfinite(r)):
            raise ValueError(f"exponent[{i}] = {r!r} must be positive and finite")
    return out


def log_volume_ball(exponents: Sequence[float]) -> LogVolume:
    """``ln vol{x : sum |x_j|**r_j <= 1} = d ln 2 + sum lnG(1+1/r_j) - lnG(1 + sum 1/r_j)``."""
    r = _exponents(exponents)
    inv = math.fsum(1.0 / x for x in r)
    lv = len(r) * math.log(2.0) + math.fsum(log_gamma(1.0 + 1.0 / x) for x in r) - log_gamma(1.0 + inv)
    return LogVolume(lv, len(r), r)


def log_volume_isotropic(r: float, d: int) -> float:
    """``ln(2**d Gamma(1+1/r)**d / Gamma(1+d/r))`` for the unit ``l_r`` ball."""
    return d * math.log(2.0) + d * log_gamma(1.0 + 1.0 / r) - log_gamma(1.0 + d / r)


def log_scaled_volume(exponents: Sequence[float], t: float) -> LogVolume:
    """Volume of the ball of level ``t``: scales as ``t**(sum 1/r_j)``."""
    if not t > 0.0:
        raise ValueError("scale t must be positive")
    base = log_volume_ball(exponents)
    inv = math.fsum(1.0 / x for x in base.exponents)
    return LogVolume(base.log_value + inv * math.log(t), base.d, base.exponents)


def log_strong_equiv_constant(profile: SmoothnessProfile) -> float:
    return profile.g * log_volume_ball(profile.exponents).log_value


def strong_equiv_constant(profile: SmoothnessProfile) -> float:
    """``vol(B_{2R})**g``, the limit of ``n**g * a_n``."""
    return math.exp(log_strong_equiv_constant(profile))


def gamma_bracket(x: float) -> tuple[float, float]:
    """``((x/e)**x, (1+x)**x)``, which bracket ``Gamma(1+x)``; ``0**0 = 1``."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0:
        return 1.0, 1.0
    return math.exp(x * (math.log(x) - 1.0)), math.exp(x * math.log1p(x))


def volume_constant_bracket(profile: SmoothnessProfile) -> tuple[float, float]:
    """Explicit bounds on ``vol(B_{2R})**g`` depending only on ``d, u, v``."""
    d, u, v = profile.d, profile.u, profile.v
    lower = 2.0**v / math.sqrt(math.e * (d + 2.0 * u))
    upper = 2.0**u * ((2.0 * v + 1.0) / (2.0 * v)) ** (u / (2.0 * v)) * math.sqrt(2.0 * math.e * u / d)
    return lower, upper
