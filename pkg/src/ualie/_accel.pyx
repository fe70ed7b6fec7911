# cython: language_level=3
"""Compiled integer elimination kernels (int64 fast paths).

rank_mod_p_i64 requires p < 2^31 so products stay inside int64.
int_rank_i64 runs fraction-free Bareiss with an overflow guard; it returns
-1 when intermediate minors could leave the safe range, in which case the
caller falls back to the big-integer implementation in ``ualie._pure``.
"""

from libc.stdlib cimport free, malloc

# Entries whose magnitude stays below this bound keep |a*d - b*c| < 2^62.
cdef long long _GUARD = (<long long> 1) << 30


def rank_mod_p_i64(entries, int rows, int cols, long long p):
    cdef long long *m
    cdef int r, c, j, rank, piv
    cdef long long f, inv, pv
    cdef Py_ssize_t idx, n = rows * cols
    m = <long long *> malloc(n * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for idx in range(n):
            m[idx] = entries[idx] % p
        rank = 0
        for c in range(cols):
            piv = -1
            for r in range(rank, rows):
                if m[r * cols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(cols):
                    m[rank * cols + j], m[piv * cols + j] = m[piv * cols + j], m[rank * cols + j]
            pv = m[rank * cols + c]
            inv = _mod_inverse(pv, p)
            for r in range(rank + 1, rows):
                f = m[r * cols + c]
                if f != 0:
                    f = (f * inv) % p
                    for j in range(c, cols):
                        m[r * cols + j] = (m[r * cols + j] - f * m[rank * cols + j]) % p
                        if m[r * cols + j] < 0:
                            m[r * cols + j] += p
            rank += 1
            if rank == rows:
                break
        return rank
    finally:
        free(m)


cdef long long _mod_inverse(long long a, long long p):
    # extended Euclid; p prime, a nonzero mod p
    cdef long long old_r = a % p, r = p
    cdef long long old_s = 1, s = 0
    cdef long long q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r
        old_r = r
        r = tmp
        tmp = old_s - q * s
        old_s = s
        s = tmp
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


def int_rank_i64(entries, int rows, int cols):
    cdef long long *m
    cdef int r, c, j, rank, piv
    cdef long long f, pv, prev, v, mx
    cdef Py_ssize_t idx, n = rows * cols
    cdef object e
    m = <long long *> malloc(n * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        mx = 0
        for idx in range(n):
            e = entries[idx]
            if e > _GUARD or e < -_GUARD:
                return -1
            m[idx] = e
            v = m[idx] if m[idx] >= 0 else -m[idx]
            if v > mx:
                mx = v
        rank = 0
        prev = 1
        for c in range(cols):
            piv = -1
            for r in range(rank, rows):
                if m[r * cols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(cols):
                    m[rank * cols + j], m[piv * cols + j] = m[piv * cols + j], m[rank * cols + j]
            pv = m[rank * cols + c]
            if mx > _GUARD:
                return -1
            mx = 0
            for r in range(rank + 1, rows):
                f = m[r * cols + c]
                for j in range(c + 1, cols):
                    v = (pv * m[r * cols + j] - f * m[rank * cols + j]) / prev
                    m[r * cols + j] = v
                    if v < 0:
                        v = -v
                    if v > mx:
                        mx = v
                m[r * cols + c] = 0
            prev = pv
            rank += 1
            if rank == rows:
                break
        return rank
    finally:
        free(m)
