# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice kernels; mirrors ``_pykernel`` statement for statement."""

from libc.math cimport pow, floor
from libc.stdlib cimport malloc, realloc, free

import numpy as np

ctypedef long long i64

cdef enum:
    OK = 0
    NODE_LIMIT = 1
    OVERFLOW = 2

cdef double KMAX = 4611686018427387904.0  # 2**62


cdef struct CState:
    int d
    double* fe
    i64* ie
    double T
    i64 Ti
    bint strict
    i64 k0_lo
    i64 k0_hi
    i64* hist
    i64 nodes
    i64 max_nodes
    int status


cdef inline double _fpow(i64 k, double e) noexcept nogil:
    if k == 0:
        return 0.0
    return pow(<double>k, e)


cdef inline bint _adm(double val, double T, bint strict) noexcept nogil:
    if strict:
        return val < T
    return val <= T


cdef i64 _last_kmax_float(CState* st, double P, double e) noexcept nogil:
    cdef double r = st.T - P
    cdef double root
    cdef i64 g
    if r <= 0.0:
        return 0
    root = pow(r, 1.0 / e)
    if root > KMAX:
        st.status = OVERFLOW
        return 0
    g = <i64>floor(root)
    while _adm(P + _fpow(g + 1, e), st.T, st.strict):
        g += 1
    while g > 0 and not _adm(P + _fpow(g, e), st.T, st.strict):
        g -= 1
    return g


cdef void _rec_float(CState* st, int j, double P, int nz) noexcept nogil:
    cdef double e, val
    cdef i64 k, kmax
    if st.status != OK:
        return
    st.nodes += 1
    if st.max_nodes > 0 and st.nodes > st.max_nodes:
        st.status = NODE_LIMIT
        return
    e = st.fe[j]
    if j == st.d - 1:
        kmax = _last_kmax_float(st, P, e)
        if st.status != OK:
            return
        st.hist[nz] += 1
        st.hist[nz + 1] += kmax
        return
    k = st.k0_lo if j == 0 else 0
    while True:
        if j == 0 and st.k0_hi >= 0 and k >= st.k0_hi:
            break
        val = P + _fpow(k, e)
        if not _adm(val, st.T, st.strict):
            break
        _rec_float(st, j + 1, val, nz + (1 if k > 0 else 0))
        if st.status != OK:
            return
        k += 1


cdef inline i64 _ipow_cap(i64 k, i64 e, i64 cap) noexcept nogil:
    cdef i64 r = 1
    cdef i64 i
    if k == 0:
        return 0
    for i in range(e):
        if r > cap // k:
            return cap + 1
        r *= k
    return r


cdef i64 _last_kmax_int(CState* st, i64 P, i64 e) noexcept nogil:
    cdef i64 r = st.Ti - P
    cdef double root
    cdef i64 g
    if r <= 0:
        return 0
    root = pow(<double>r, 1.0 / <double>e)
    if root > KMAX:
        st.status = OVERFLOW
        return 0
    g = <i64>floor(root)
    while _ipow_cap(g + 1, e, r) <= r:
        g += 1
    while g > 0 and _ipow_cap(g, e, r) > r:
        g -= 1
    return g


cdef void _rec_int(CState* st, int j, i64 P, int nz) noexcept nogil:
    cdef i64 e, k, kmax, rem, t
    if st.status != OK:
        return
    st.nodes += 1
    if st.max_nodes > 0 and st.nodes > st.max_nodes:
        st.status = NODE_LIMIT
        return
    e = st.ie[j]
    if j == st.d - 1:
        kmax = _last_kmax_int(st, P, e)
        if st.status != OK:
            return
        st.hist[nz] += 1
        st.hist[nz + 1] += kmax
        return
    k = st.k0_lo if j == 0 else 0
    rem = st.Ti - P
    while True:
        if j == 0 and st.k0_hi >= 0 and k >= st.k0_hi:
            break
        t = _ipow_cap(k, e, rem)
        if t > rem:
            break
        _rec_int(st, j + 1, P + t, nz + (1 if k > 0 else 0))
        if st.status != OK:
            return
        k += 1


def count_float(exps, double T, bint strict, i64 k0_lo=0, i64 k0_hi=-1, i64 max_nodes=0):
    cdef int d = len(exps)
    cdef CState st
    cdef int i
    st.d = d
    st.T = T
    st.strict = strict
    st.k0_lo = k0_lo
    st.k0_hi = k0_hi
    st.nodes = 0
    st.max_nodes = max_nodes
    st.status = OK
    st.fe = <double*>malloc(d * sizeof(double))
    st.hist = <i64*>malloc((d + 1) * sizeof(i64))
    st.ie = NULL
    try:
        for i in range(d):
            st.fe[i] = exps[i]
        for i in range(d + 1):
            st.hist[i] = 0
        if _adm(0.0, T, strict):
            with nogil:
                _rec_float(&st, 0, 0.0, 0)
        hist = [st.hist[i] for i in range(d + 1)]
        return hist, st.nodes, st.status
    finally:
        free(st.fe)
        free(st.hist)


def count_int(exps, i64 T, i64 k0_lo=0, i64 k0_hi=-1, i64 max_nodes=0):
    cdef int d = len(exps)
    cdef CState st
    cdef int i
    st.d = d
    st.Ti = T
    st.strict = False
    st.k0_lo = k0_lo
    st.k0_hi = k0_hi
    st.nodes = 0
    st.max_nodes = max_nodes
    st.status = OK
    st.ie = <i64*>malloc(d * sizeof(i64))
    st.hist = <i64*>malloc((d + 1) * sizeof(i64))
    st.fe = NULL
    try:
        for i in range(d):
            st.ie[i] = exps[i]
        for i in range(d + 1):
            st.hist[i] = 0
        if T >= 0:
            with nogil:
                _rec_int(&st, 0, 0, 0)
        hist = [st.hist[i] for i in range(d + 1)]
        return hist, st.nodes, st.status
    finally:
        free(st.ie)
        free(st.hist)


cdef struct WState:
    int d
    double* fe
    i64* ie
    double lo
    double hi
    i64 loi
    i64 hii
    double* fbuf
    i64* ibuf
    int* nzbuf
    i64 n
    i64 size
    i64 cap
    int status


cdef bint _grow(WState* st, bint integer) noexcept nogil:
    cdef i64 new = st.size * 2 if st.size > 0 else 1024
    cdef void* p
    if new > st.cap:
        new = st.cap
    if integer:
        p = realloc(st.ibuf, new * sizeof(i64))
        if p == NULL:
            return False
        st.ibuf = <i64*>p
    else:
        p = realloc(st.fbuf, new * sizeof(double))
        if p == NULL:
            return False
        st.fbuf = <double*>p
    p = realloc(st.nzbuf, new * sizeof(int))
    if p == NULL:
        return False
    st.nzbuf = <int*>p
    st.size = new
    return True


cdef inline void _emit_f(WState* st, double val, int nz) noexcept nogil:
    if st.n >= st.cap:
        st.status = NODE_LIMIT
        return
    if st.n >= st.size and not _grow(st, False):
        st.status = OVERFLOW
        return
    st.fbuf[st.n] = val
    st.nzbuf[st.n] = nz
    st.n += 1


cdef inline void _emit_i(WState* st, i64 val, int nz) noexcept nogil:
    if st.n >= st.cap:
        st.status = NODE_LIMIT
        return
    if st.n >= st.size and not _grow(st, True):
        st.status = OVERFLOW
        return
    st.ibuf[st.n] = val
    st.nzbuf[st.n] = nz
    st.n += 1


cdef void _walk_f(WState* st, int j, double P, int nz) noexcept nogil:
    cdef double e = st.fe[j]
    cdef double val, r
    cdef i64 k
    if st.status != OK:
        return
    if j == st.d - 1:
        k = 0
        r = st.lo - P
        if r > 0.0:
            k = <i64>floor(pow(r, 1.0 / e)) - 1
            if k < 0:
                k = 0
        while True:
            val = P + _fpow(k, e)
            if not (val <= st.hi):
                break
            if val > st.lo:
                _emit_f(st, val, nz + (1 if k > 0 else 0))
                if st.status != OK:
                    return
            k += 1
        return
    k = 0
    while True:
        val = P + _fpow(k, e)
        if not (val <= st.hi):
            break
        _walk_f(st, j + 1, val, nz + (1 if k > 0 else 0))
        if st.status != OK:
            return
        k += 1


cdef void _walk_i(WState* st, int j, i64 P, int nz) noexcept nogil:
    cdef i64 e = st.ie[j]
    cdef i64 rem = st.hii - P
    cdef i64 k, t, r
    if st.status != OK:
        return
    if j == st.d - 1:
        k = 0
        r = st.loi - P
        if r > 0:
            k = <i64>floor(pow(<double>r, 1.0 / <double>e)) - 1
            if k < 0:
                k = 0
        while True:
            t = _ipow_cap(k, e, rem)
            if t > rem:
                break
            if P + t > st.loi:
                _emit_i(st, P + t, nz + (1 if k > 0 else 0))
                if st.status != OK:
                    return
            k += 1
        return
    k = 0
    while True:
        t = _ipow_cap(k, e, rem)
        if t > rem:
            break
        _walk_i(st, j + 1, P + t, nz + (1 if k > 0 else 0))
        if st.status != OK:
            return
        k += 1


cdef _finish(WState* st, bint integer):
    cdef i64 i
    nz = np.empty(st.n, dtype=np.int32)
    cdef int[:] nzv = nz
    for i in range(st.n):
        nzv[i] = st.nzbuf[i]
    if integer:
        b = np.empty(st.n, dtype=np.int64)
        _copy_i(b, st.ibuf, st.n)
    else:
        b = np.empty(st.n, dtype=np.float64)
        _copy_f(b, st.fbuf, st.n)
    return b, nz


cdef void _copy_i(i64[:] out, i64* src, i64 n) noexcept:
    cdef i64 i
    for i in range(n):
        out[i] = src[i]


cdef void _copy_f(double[:] out, double* src, i64 n) noexcept:
    cdef i64 i
    for i in range(n):
        out[i] = src[i]


def walk_float(exps, double lo, double hi, i64 cap):
    cdef WState st
    cdef int i
    st.d = len(exps)
    st.lo = lo
    st.hi = hi
    st.n = 0
    st.size = 0
    st.cap = cap
    st.status = OK
    st.fbuf = NULL
    st.ibuf = NULL
    st.nzbuf = NULL
    st.ie = NULL
    st.fe = <double*>malloc(st.d * sizeof(double))
    try:
        for i in range(st.d):
            st.fe[i] = exps[i]
        if hi >= 0.0:
            with nogil:
                _walk_f(&st, 0, 0.0, 0)
        if st.status == OVERFLOW:
            raise MemoryError("walk buffer allocation failed")
        b, nz = _finish(&st, False)
        return b, nz, st.status == NODE_LIMIT
    finally:
        free(st.fe)
        free(st.fbuf)
        free(st.nzbuf)


def walk_int(exps, i64 lo, i64 hi, i64 cap):
    cdef WState st
    cdef int i
    st.d = len(exps)
    st.loi = lo
    st.hii = hi
    st.n = 0
    st.size = 0
    st.cap = cap
    st.status = OK
    st.fbuf = NULL
    st.ibuf = NULL
    st.nzbuf = NULL
    st.fe = NULL
    st.ie = <i64*>malloc(st.d * sizeof(i64))
    try:
        for i in range(st.d):
            st.ie[i] = exps[i]
        if hi >= 0:
            with nogil:
                _walk_i(&st, 0, 0, 0)
        if st.status == OVERFLOW:
            raise MemoryError("walk buffer allocation failed")
        b, nz = _finish(&st, True)
        return b, nz, st.status == NODE_LIMIT
    finally:
        free(st.ie)
        free(st.ibuf)
        free(st.nzbuf)
