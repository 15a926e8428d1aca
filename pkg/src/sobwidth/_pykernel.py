"""Pure-Python lattice kernels.

Reference implementation of the four hot loops; ``_ckernel.pyx`` mirrors it
statement for statement so both backends produce bit-identical results.

All kernels walk only the nonnegative orthant ``k_j >= 0`` in the given
coordinate order and report points grouped by their number of nonzero
coordinates ``nz``; a point stands for ``2**nz`` lattice points.  Budgets are
accumulated left to right as ``P + k**e``, the last coordinate is resolved in
closed form.

Status codes: 0 ok, 1 node limit exceeded, 2 coordinate range overflow.
"""

from __future__ import annotations

import math

import numpy as np

OK, NODE_LIMIT, OVERFLOW = 0, 1, 2
_KMAX = 1 << 62


class _Abort(Exception):
    def __init__(self, status):
        self.status = status


def _fpow(k, e):
    if k == 0:
        return 0.0
    return float(k) ** e


def _last_kmax_float(P, e, T, strict):
    r = T - P
    if r <= 0.0:
        return 0
    root = r ** (1.0 / e)
    if root > _KMAX:
        raise _Abort(OVERFLOW)
    g = int(math.floor(root))
    if strict:
        while P + _fpow(g + 1, e) < T:
            g += 1
        while g > 0 and not (P + _fpow(g, e) < T):
            g -= 1
    else:
        while P + _fpow(g + 1, e) <= T:
            g += 1
        while g > 0 and not (P + _fpow(g, e) <= T):
            g -= 1
    return g


def count_float(exps, T, strict, k0_lo=0, k0_hi=-1, max_nodes=0):
    """Histogram by ``nz`` of orthant points with ``S(k) <= T`` (``< T`` if strict)."""
    d = len(exps)
    hist = [0] * (d + 1)
    nodes = 0
    if not ((0.0 < T) if strict else (0.0 <= T)):
        return hist, nodes, OK

    def rec(j, P, nz):
        nonlocal nodes
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            raise _Abort(NODE_LIMIT)
        e = exps[j]
        if j == d - 1:
            kmax = _last_kmax_float(P, e, T, strict)
            hist[nz] += 1
            hist[nz + 1] += kmax
            return
        k = k0_lo if j == 0 else 0
        while True:
            if j == 0 and k0_hi >= 0 and k >= k0_hi:
                break
            val = P + _fpow(k, e)
            if not ((val < T) if strict else (val <= T)):
                break
            rec(j + 1, val, nz + (1 if k > 0 else 0))
            k += 1

    try:
        rec(0, 0.0, 0)
    except _Abort as ab:
        return hist, nodes, ab.status
    return hist, nodes, OK


def _ipow_cap(k, e, cap):
    if k == 0:
        return 0
    r = 1
    for _ in range(e):
        if r > cap // k:
            return cap + 1
        r *= k
    return r


def _last_kmax_int(P, e, T):
    r = T - P
    if r <= 0:
        return 0
    root = float(r) ** (1.0 / e)
    if root > _KMAX:
        raise _Abort(OVERFLOW)
    g = int(math.floor(root))
    while _ipow_cap(g + 1, e, r) <= r:
        g += 1
    while g > 0 and _ipow_cap(g, e, r) > r:
        g -= 1
    return g


def count_int(exps, T, k0_lo=0, k0_hi=-1, max_nodes=0):
    """Exact-integer variant of :func:`count_float` (non-strict, integer ``T``)."""
    d = len(exps)
    hist = [0] * (d + 1)
    nodes = 0
    if T < 0:
        return hist, nodes, OK

    def rec(j, P, nz):
        nonlocal nodes
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            raise _Abort(NODE_LIMIT)
        e = exps[j]
        if j == d - 1:
            kmax = _last_kmax_int(P, e, T)
            hist[nz] += 1
            hist[nz + 1] += kmax
            return
        k = k0_lo if j == 0 else 0
        rem = T - P
        while True:
            if j == 0 and k0_hi >= 0 and k >= k0_hi:
                break
            t = _ipow_cap(k, e, rem)
            if t > rem:
                break
            rec(j + 1, P + t, nz + (1 if k > 0 else 0))
            k += 1

    try:
        rec(0, 0, 0)
    except _Abort as ab:
        return hist, nodes, ab.status
    return hist, nodes, OK


def walk_float(exps, lo, hi, cap):
    """Orthant points with ``lo < S(k) <= hi`` as ``(budgets, nz, truncated)``."""
    d = len(exps)
    budgets = []
    nzs = []
    if hi < 0.0:
        return np.empty(0), np.empty(0, dtype=np.int32), False

    def emit(val, nz):
        if len(budgets) >= cap:
            raise _Abort(NODE_LIMIT)
        budgets.append(val)
        nzs.append(nz)

    def rec(j, P, nz):
        e = exps[j]
        if j == d - 1:
            k = 0
            r = lo - P
            if r > 0.0:
                k = int(math.floor(r ** (1.0 / e))) - 1
                if k < 0:
                    k = 0
            while True:
                val = P + _fpow(k, e)
                if not (val <= hi):
                    break
                if val > lo:
                    emit(val, nz + (1 if k > 0 else 0))
                k += 1
            return
        k = 0
        while True:
            val = P + _fpow(k, e)
            if not (val <= hi):
                break
            rec(j + 1, val, nz + (1 if k > 0 else 0))
            k += 1

    truncated = False
    try:
        rec(0, 0.0, 0)
    except _Abort:
        truncated = True
    return np.asarray(budgets, dtype=np.float64), np.asarray(nzs, dtype=np.int32), truncated


def walk_int(exps, lo, hi, cap):
    """Exact-integer variant of :func:`walk_float`."""
    d = len(exps)
    budgets = []
    nzs = []
    if hi < 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int32), False

    def emit(val, nz):
        if len(budgets) >= cap:
            raise _Abort(NODE_LIMIT)
        budgets.append(val)
        nzs.append(nz)

    def rec(j, P, nz):
        e = exps[j]
        rem = hi - P
        if j == d - 1:
            k = 0
            r = lo - P
            if r > 0:
                k = int(math.floor(float(r) ** (1.0 / e))) - 1
                if k < 0:
                    k = 0
            while True:
                t = _ipow_cap(k, e, rem)
                if t > rem:
                    break
                if P + t > lo:
                    emit(P + t, nz + (1 if k > 0 else 0))
                k += 1
            return
        k = 0
        while True:
            t = _ipow_cap(k, e, rem)
            if t > rem:
                break
            rec(j + 1, P + t, nz + (1 if k > 0 else 0))
            k += 1

    truncated = False
    try:
        rec(0, 0, 0)
    except _Abort:
        truncated = True
    # budgets past int64 stay exact as Python ints
    dtype = np.int64 if hi < 2**63 else object
    return np.asarray(budgets, dtype=dtype), np.asarray(nzs, dtype=np.int32), truncated
