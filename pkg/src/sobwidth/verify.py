"""Seeded cross-validation suites used by ``sobwidth verify`` and the tests.

Each suite draws its cases from ``numpy.random.default_rng(seed)`` and
checks one independent route against another.  A suite returns a
:class:`SuiteResult`; nothing is printed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .envelopes import counting_sandwich, sandwich_holds
from .lattice import count_lattice
from .limitspace import limit_approx_number
from .oracle import brute_budgets, brute_count, brute_limit_spectrum
from .profile import make_profile, quasi_norm
from .spectrum import spectrum_values
from .volumetrics import gamma_bracket, log_volume_ball, log_gamma, strong_equiv_constant, volume_constant_bracket

__all__ = ["SuiteResult", "SUITES", "run_suite", "random_profile", "sandwich_profile"]

QUASI_SLACK = 1e-12
SANDWICH_MAX_COUNT = 2e7


@dataclass
class SuiteResult:
    suite: str
    seed: int
    cases: int
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.cases - self.passed

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    def summary(self) -> str:
        return f"{self.passed}/{self.cases} pass"

    def record(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail)


def random_profile(rng: np.random.Generator, d_max: int, lo: float = 0.3, hi: float = 3.0, half_integer: float = 0.0):
    """A profile with ``d`` uniform in ``1..d_max`` and ``R_j`` in ``[lo, hi]``.

    With probability ``half_integer`` every ``R_j`` is rounded to a multiple
    of 1/2, which puts the lattice routines in exact integer mode.
    """
    d = int(rng.integers(1, d_max + 1))
    R = rng.uniform(lo, hi, size=d)
    if rng.random() < half_integer:
        R = np.maximum(np.round(2.0 * R) / 2.0, 0.5)
    return make_profile([float(r) for r in R])


def sandwich_profile(rng: np.random.Generator, d_max: int = 3, m_max: int = 30, max_count: float = SANDWICH_MAX_COUNT):
    """A random profile whose ``C(m_max)`` is small enough to count exactly.

    Profiles are redrawn until the upper end ``A(m_max)`` of the sandwich,
    which bounds ``C(m_max)``, is at most ``max_count``.
    """
    while True:
        prof = random_profile(rng, d_max)
        vol = log_volume_ball(prof.exponents).value
        if (m_max + prof.bR) ** (prof.p / prof.g) * vol <= max_count:
            return prof


def _oracle(rng, res):
    for i in range(res.cases):
        prof = random_profile(rng, 3, half_integer=0.5)
        if i % 2 == 0:
            T = float(rng.uniform(0.0, 50.0))
            fast = count_lattice(prof, T).count
            slow = brute_count(prof, T)
            res.record(fast == slow, f"R={prof.R} T={T!r}: count {fast} vs brute {slow}")
        else:
            n_max = int(rng.integers(1, 300))
            fast = spectrum_values(prof, n_max, budgets=True).astype(np.float64)
            slow = brute_budgets(prof, n_max)
            if prof.int_exponents is not None:
                ok = bool(np.array_equal(fast, slow))
            else:
                ok = bool(np.allclose(fast, slow, rtol=1e-9, atol=0.0))
            res.record(ok, f"R={prof.R} n_max={n_max}: shell budgets differ")


def _sandwich(rng, res):
    for _ in range(res.cases):
        prof = sandwich_profile(rng)
        m = int(rng.integers(1, 31))
        B, C, A = counting_sandwich(prof, m)
        res.record(sandwich_holds(B, C, A), f"R={prof.R} m={m}: {B!r} <= {C} <= {A!r} fails")


def _bracket(rng, res):
    for _ in range(res.cases):
        prof = random_profile(rng, 200)
        lo, hi = volume_constant_bracket(prof)
        c = strong_equiv_constant(prof)
        res.record(lo <= c <= hi, f"R of length {prof.d}: {c!r} outside [{lo!r}, {hi!r}]")


def _gamma(rng, res):
    for _ in range(res.cases):
        x = float(rng.uniform(0.0, 50.0))
        lo, hi = gamma_bracket(x)
        lg = log_gamma(1.0 + x)
        # compare in log space; the bracket ends can be within rounding at x=0
        ok = math.log(lo) <= lg + 1e-12 and lg <= math.log(hi) + 1e-12
        res.record(ok, f"x={x!r}: lnG(1+x)={lg!r} outside bracket")


def _quasi(rng, res):
    for _ in range(res.cases):
        prof = random_profile(rng, 8)
        scale = 10.0 ** rng.uniform(-3, 3, size=prof.d)
        x = rng.standard_normal(prof.d) * scale
        y = rng.standard_normal(prof.d) * scale
        lhs = quasi_norm(x + y, prof)
        rhs = quasi_norm(x, prof) + quasi_norm(y, prof)
        ok = lhs <= rhs + QUASI_SLACK * max(1.0, rhs)
        res.record(ok, f"R={prof.R}: |x+y|={lhs!r} > {rhs!r}")


def _limit(rng, res):
    for _ in range(res.cases):
        d = int(rng.integers(1, 8))
        ref = brute_limit_spectrum(d)
        got = [limit_approx_number(d, n) for n in range(1, len(ref) + 1)]
        ok = got == ref and limit_approx_number(d, len(ref) + 1) == 0.0
        res.record(ok, f"d={d}: limit spectrum differs from brute sort")


SUITES = {
    "oracle": _oracle,
    "sandwich": _sandwich,
    "bracket": _bracket,
    "gamma": _gamma,
    "quasi-triangle": _quasi,
    "limit": _limit,
}


def run_suite(name: str, seed: int = 0, cases: int = 100) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if cases < 1:
        raise ValueError("cases must be positive")
    res = SuiteResult(name, seed, cases)
    SUITES[name](np.random.default_rng(seed), res)
    return res
