"""Smoothness profiles and the anisotropic quasi-norm.

A profile is the vector ``R = (R_1, ..., R_d)`` of per-coordinate smoothness
exponents together with the scalars every other module derives from it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence

__all__ = ["SmoothnessProfile", "make_profile", "parse_profile", "quasi_norm", "power"]

_ISO_RE = re.compile(r"^\s*([^\^\s]+)\s*\^\s*(\d+)\s*$")


def power(x: float, t: float) -> float:
    """``|x|**t`` with the convention ``0**t == 0`` for ``t > 0``."""
    ax = abs(x)
    if ax == 0.0:
        return 0.0
    return math.exp(t * math.log(ax))


@dataclass(frozen=True)
class SmoothnessProfile:
    """Immutable smoothness vector with cached derived scalars.

    Attributes
    ----------
    R : tuple of float
        Per-coordinate smoothness, all strictly positive.
    d : int
        Dimension (``len(R)``).
    u, v : float
        Largest and smallest entry of ``R``.
    g : float
        Harmonic exponent ``1 / sum(1/R_j)``; the asymptotic decay rate.
    p : float
        ``max(1/2, u)``.
    bR : float
        Shell offset ``(sum 2**(-2 R_j))**(1/(2p))``.
    log_E : float
        Natural log of the crossover constant ``E`` after which explicit
        two-sided bounds on ``a_n`` hold (for ``n > E**d``).
    isotropic : bool
        All entries given as the same literal value.
    """

    R: tuple[float, ...]
    d: int
    u: float
    v: float
    g: float
    p: float
    bR: float
    log_E: float
    isotropic: bool
    int_exponents: tuple[int, ...] | None = field(repr=False)
    order: tuple[int, ...] = field(repr=False)

    @property
    def E(self) -> float:
        """``E`` itself; may be ``inf`` when it overflows."""
        try:
            return math.exp(self.log_E)
        except OverflowError:
            return math.inf

    @property
    def exponents(self) -> tuple[float, ...]:
        """The budget exponents ``2 R_j`` in input order."""
        return tuple(2.0 * r for r in self.R)

    @property
    def sum_inv_exponents(self) -> float:
        """``sum 1/(2 R_j)`` which equals ``1/(2g)``."""
        return math.fsum(1.0 / (2.0 * r) for r in self.R)

    def guarantee_holds(self, n: int) -> bool:
        """Whether ``n > E**d``, evaluated as ``ln n > d ln E``."""
        return _log_int(n) > self.d * self.log_E


def _log_int(n: int) -> float:
    n = int(n)
    if n <= 0:
        raise ValueError("logarithm of a nonpositive integer")
    bits = n.bit_length()
    if bits <= 1000:
        return math.log(n)
    shift = bits - 64
    return math.log(n >> shift) + shift * math.log(2.0)


def make_profile(R: Sequence[float]) -> SmoothnessProfile:
    """Validate ``R`` and compute all derived scalars.

    Raises
    ------
    ValueError
        If ``R`` is empty or any entry is nonpositive or non-finite; the
        message names the offending index.
    """
    values = list(R)
    if not values:
        raise ValueError("smoothness vector R must be nonempty")
    out = []
    for i, r in enumerate(values):
        try:
            x = float(r)
        except (TypeError, ValueError):
            raise ValueError(f"R[{i}] = {r!r} is not a real number") from None
        if not math.isfinite(x) or x <= 0.0:
            raise ValueError(f"R[{i}] = {r!r} must be positive and finite")
        out.append(x)

    d = len(out)
    u = max(out)
    v = min(out)
    isotropic = all(x == out[0] for x in out)
    if isotropic:
        g = out[0] / d
    else:
        g = 1.0 / math.fsum(1.0 / x for x in out)
    p = max(0.5, u)
    bR = math.fsum(2.0 ** (-2.0 * x) for x in out) ** (1.0 / (2.0 * p))
    log_E = (
        (p / v) * math.log(4.0)
        + (u / v) * math.log(2.0)
        + (u / (2.0 * v * v)) * math.log1p(1.0 / (2.0 * v))
        + (1.0 / (2.0 * v)) * math.log(2.0 * math.e * p)
    )
    int_exps = None
    if all((2.0 * x).is_integer() and 2.0 * x <= 62 for x in out):
        int_exps = tuple(int(2.0 * x) for x in out)
    # descending R; stable on ties so the walk order is reproducible
    order = tuple(sorted(range(d), key=lambda j: -out[j]))
    return SmoothnessProfile(
        R=tuple(out),
        d=d,
        u=u,
        v=v,
        g=g,
        p=p,
        bR=bR,
        log_E=log_E,
        isotropic=isotropic,
        int_exponents=int_exps,
        order=order,
    )


def parse_profile(text: str) -> SmoothnessProfile:
    """Parse ``"1,2,0.5"`` or the isotropic shorthand ``"1.5^8"``."""
    m = _ISO_RE.match(text)
    if m:
        s, d = m.group(1), int(m.group(2))
        if d < 1:
            raise ValueError(f"dimension in {text!r} must be at least 1")
        return make_profile([float(s)] * d)
    parts = [t.strip() for t in text.split(",")]
    if any(t == "" for t in parts):
        raise ValueError(f"empty entry in smoothness list {text!r}")
    return make_profile([float(t) for t in parts])


def quasi_norm(x: Sequence[float], profile: SmoothnessProfile) -> float:
    """``(sum |x_j|**(2 R_j))**(1/(2p))``.

    This satisfies the triangle inequality even though it is not a norm
    when the ``R_j`` differ.
    """
    if len(x) != profile.d:
        raise ValueError(f"vector has length {len(x)}, profile has d={profile.d}")
    s = math.fsum(power(xj, 2.0 * r) for xj, r in zip(x, profile.R))
    if s == 0.0:
        return 0.0
    return s ** (1.0 / (2.0 * profile.p))
