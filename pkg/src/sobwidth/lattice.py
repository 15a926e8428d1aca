"""Exact counting and enumeration of lattice points under an anisotropic budget.

The budget of ``k`` in ``Z^d`` is ``S(k) = sum |k_j|**(2 R_j)``.  Counting
never materializes ``Z^d``: the walk recurses over coordinates in descending
``R_j`` order, visits only the nonnegative orthant and resolves the last
coordinate in closed form.  When every ``2 R_j`` is an integer the budgets are
tracked as exact integers.

The hot loops live in a compiled extension (``_ckernel``) with a pure-Python
fallback (``_pykernel``) selected at import; :func:`use_backend` switches
between them.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from numbers import Real
from typing import Iterator, Sequence

import numpy as np

from . import _pykernel
from .profile import SmoothnessProfile

try:
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

__all__ = [
    "CountResult",
    "ResourceGuardError",
    "budget",
    "count_lattice",
    "enumerate_shell",
    "achieved_budgets",
    "available_backends",
    "get_backend",
    "use_backend",
]

DEFAULT_CAP = 10**6
# exact-integer mode stays inside signed 64-bit arithmetic in the compiled kernel
_INT_LIMIT = 1 << 62

_backend = _ckernel if _ckernel is not None else _pykernel


class ResourceGuardError(RuntimeError):
    """A configured enumeration or node limit was hit."""


def available_backends() -> list[str]:
    names = ["python"]
    if _ckernel is not None:
        names.insert(0, "compiled")
    return names


def get_backend() -> str:
    return "compiled" if _backend is _ckernel else "python"


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily select the ``"compiled"`` or ``"python"`` kernel."""
    global _backend
    if name == "compiled":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        new = _ckernel
    elif name == "python":
        new = _pykernel
    else:
        raise ValueError(f"unknown backend {name!r}")
    old, _backend = _backend, new
    try:
        yield
    finally:
        _backend = old


@dataclass(frozen=True)
class CountResult:
    """Exact number of lattice points with ``S(k) <= budget`` (``<`` if strict)."""

    count: int
    budget: float
    strict: bool


def _ordered_float_exps(profile: SmoothnessProfile) -> list[float]:
    return [2.0 * profile.R[j] for j in profile.order]


def _ordered_int_exps(profile: SmoothnessProfile) -> list[int]:
    assert profile.int_exponents is not None
    return [profile.int_exponents[j] for j in profile.order]


def _fpow(k: int, e: float) -> float:
    if k == 0:
        return 0.0
    return float(k) ** e


def budget(k: Sequence[int], profile: SmoothnessProfile):
    """``S(k) = sum |k_j|**(2 R_j)``.

    Accumulated in the same order as the counting walk, so a point is counted
    under ``T`` exactly when ``budget(k) <= T``.  Exact ``int`` in integer
    mode, ``float`` otherwise.
    """
    if len(k) != profile.d:
        raise ValueError(f"point has length {len(k)}, profile has d={profile.d}")
    if profile.int_exponents is not None:
        return sum(abs(int(k[j])) ** profile.int_exponents[j] for j in profile.order)
    P = 0.0
    for j in profile.order:
        P = P + _fpow(abs(int(k[j])), 2.0 * profile.R[j])
    return P


def _check_budget(T, name="T"):
    if not isinstance(T, Real):
        raise TypeError(f"{name} must be a real number")
    if not math.isfinite(float(T)) or T < 0:
        raise ValueError(f"{name} = {T!r} must be finite and nonnegative")


def _total(hist: Sequence[int]) -> int:
    return sum(int(c) << z for z, c in enumerate(hist))


def _raise_status(status: int, nodes: int) -> None:
    if status == _pykernel.NODE_LIMIT:
        raise ResourceGuardError(f"lattice walk exceeded its node limit after {nodes} nodes")
    if status == _pykernel.OVERFLOW:
        raise ResourceGuardError("per-coordinate range exceeds 2**62; budget too large")


def _int_threshold(T, strict: bool) -> int:
    if strict:
        return math.ceil(T) - 1
    return math.floor(T)


def count_lattice(
    profile: SmoothnessProfile,
    T,
    strict: bool = False,
    *,
    workers: int | None = None,
    max_nodes: int = 0,
) -> CountResult:
    """Count ``{k in Z^d : S(k) <= T}`` exactly (``S(k) < T`` when ``strict``).

    Parameters
    ----------
    workers : int, optional
        Split the first coordinate's range into this many partitions and
        count them on a thread pool.  The integer partial counts are summed,
        so the result does not depend on ``workers``.
    max_nodes : int
        Abort with :class:`ResourceGuardError` after visiting this many walk
        nodes (per partition); 0 disables the guard.
    """
    _check_budget(T)
    if profile.int_exponents is not None:
        Ti = _int_threshold(T, strict)
        exps = _ordered_int_exps(profile)
        kern = _backend if Ti < _INT_LIMIT else _pykernel

        def run(lo, hi):
            return kern.count_int(exps, Ti, lo, hi, max_nodes)

        first_range = math.floor(Ti ** (1.0 / exps[0])) + 2 if Ti >= 0 else 0
    else:
        Tf = float(T)
        exps = _ordered_float_exps(profile)

        def run(lo, hi):
            return _backend.count_float(exps, Tf, strict, lo, hi, max_nodes)

        first_range = math.floor(Tf ** (1.0 / exps[0])) + 2

    if workers is None or workers <= 1 or profile.d == 1 or first_range < 2:
        hist, nodes, status = run(0, -1)
        _raise_status(status, nodes)
        return CountResult(_total(hist), T, strict)

    bounds = np.linspace(0, first_range, min(workers, first_range) + 1).astype(int)
    parts = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    parts[-1] = (parts[-1][0], -1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda ab: run(*ab), parts))
    total = 0
    for hist, nodes, status in results:
        _raise_status(status, nodes)
        total += _total(hist)
    return CountResult(total, T, strict)


def walk(profile: SmoothnessProfile, lo, hi, cap: int = DEFAULT_CAP):
    """Orthant points with ``lo < S(k) <= hi``.

    Returns ``(budgets, nz, truncated)``; each orthant point stands for
    ``2**nz`` lattice points.  ``lo`` may be negative to include the origin.
    """
    if profile.int_exponents is not None:
        loi = math.floor(lo)
        hii = math.floor(hi)
        kern = _backend if max(abs(loi), hii) < _INT_LIMIT else _pykernel
        return kern.walk_int(_ordered_int_exps(profile), loi, hii, cap)
    return _backend.walk_float(_ordered_float_exps(profile), float(lo), float(hi), cap)


def group_shells(budgets: np.ndarray, nz: np.ndarray, d: int, rel_tol: float = 0.0):
    """Collapse walked points into ``[(budget, multiplicity), ...]`` sorted by budget.

    Budgets closer than ``rel_tol`` (relative gap to the previous distinct
    value) are merged; the smallest value represents the shell.
    Multiplicities are exact Python integers.
    """
    if budgets.size == 0:
        return []
    idx = np.argsort(budgets, kind="stable")
    b = budgets[idx]
    z = nz[idx]
    if rel_tol > 0.0 and b.dtype.kind == "f":
        gap = np.diff(b) > rel_tol * np.abs(b[1:])
    else:
        gap = np.diff(b) != 0
    starts = np.concatenate(([0], np.nonzero(gap)[0] + 1))
    if d <= 40:
        mult = np.left_shift(np.int64(1), z.astype(np.int64))
        sums = np.add.reduceat(mult, starts)
        mults = [int(m) for m in sums]
    else:
        ends = list(starts[1:]) + [b.size]
        mults = []
        for s, e in zip(starts, ends):
            zs, cnt = np.unique(z[s:e], return_counts=True)
            mults.append(sum(int(c) << int(k) for k, c in zip(zs, cnt)))
    reps = b[starts]
    if b.dtype.kind == "f":
        values = [float(x) for x in reps]
    else:
        values = [int(x) for x in reps]
    return list(zip(values, mults))


def enumerate_shell(profile: SmoothnessProfile, lo, hi) -> Iterator[tuple[tuple[int, ...], float]]:
    """Yield every ``(k, S(k))`` with ``lo < S(k) <= hi`` exactly once.

    Points are materialized individually; meant for small windows.
    """
    _check_budget(lo, "lo")
    _check_budget(hi, "hi")
    if lo > hi:
        raise ValueError(f"empty window: lo={lo!r} > hi={hi!r}")
    d = profile.d
    order = profile.order
    int_mode = profile.int_exponents is not None
    if int_mode:
        exps = _ordered_int_exps(profile)
        lo_, hi_ = math.floor(lo), math.floor(hi)
    else:
        exps = _ordered_float_exps(profile)
        lo_, hi_ = float(lo), float(hi)
    zero = 0 if int_mode else 0.0
    stack: list[int] = [0] * d

    def rec(j, P):
        e = exps[j]
        k = 0
        while True:
            val = P + (k**e if int_mode else _fpow(k, e))
            if not (val <= hi_):
                return
            stack[j] = k
            if j == d - 1:
                if val > lo_:
                    yield from _signed(tuple(stack), val)
            else:
                yield from rec(j + 1, val)
            k += 1

    def _signed(ks, val):
        nonzero = [i for i in range(d) if ks[i] != 0]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            point = [0] * d
            for i in range(d):
                point[order[i]] = ks[i]
            for s, i in zip(signs, nonzero):
                point[order[i]] = s * ks[i]
            yield tuple(point), val

    if hi_ >= zero:
        yield from rec(0, zero)


def achieved_budgets(profile: SmoothnessProfile, lo, hi, cap: int = DEFAULT_CAP):
    """Sorted distinct budgets attained in ``(lo, hi]``.

    Returns ``(values, truncated)``; ``truncated`` is set when the window
    holds more than ``cap`` orthant points and the list is incomplete.
    """
    _check_budget(lo, "lo")
    _check_budget(hi, "hi")
    if lo > hi:
        raise ValueError(f"empty window: lo={lo!r} > hi={hi!r}")
    budgets, _, truncated = walk(profile, lo, hi, cap)
    values = np.unique(budgets)
    if values.dtype.kind == "f":
        out = [float(x) for x in values]
    else:
        out = [int(x) for x in values]
    if len(out) > cap:
        out, truncated = out[:cap], True
    return out, truncated
