# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`affineflags._purekernels`.

Same four functions, same signatures, fixed-size int64 scratch buffers.
Entries of affine Weyl matrices grow linearly with word length, so int64
is far beyond anything reachable at the supported enumeration scales
(rank <= 8, lengths in the dozens).
"""

from libc.stdint cimport int64_t

DEF MAXN = 16  # rank+1 <= 9 for the supported types; leave headroom


def mat_mul(a, b, int n):
    """Product of two flat n-by-n integer matrices."""
    cdef int64_t[MAXN * MAXN] ca, cb, out
    cdef int i, j, k
    cdef int64_t aik
    for i in range(n * n):
        ca[i] = a[i]
        cb[i] = b[i]
        out[i] = 0
    for i in range(n):
        for k in range(n):
            aik = ca[i * n + k]
            if aik != 0:
                for j in range(n):
                    out[i * n + j] += aik * cb[k * n + j]
    return tuple([out[i] for i in range(n * n)])


def mat_vec(m, v, int n):
    """Apply a flat n-by-n matrix to a length-n vector."""
    cdef int64_t[MAXN * MAXN] cm
    cdef int64_t[MAXN] cv, out
    cdef int i, j
    cdef int64_t acc
    for i in range(n * n):
        cm[i] = m[i]
    for i in range(n):
        cv[i] = v[i]
    for i in range(n):
        acc = 0
        for j in range(n):
            acc += cm[i * n + j] * cv[j]
        out[i] = acc
    return tuple([out[i] for i in range(n)])


def is_negative_root(v):
    """Sign test for a real affine root vector under the level convention."""
    cdef int64_t level = v[0]
    cdef int i
    if level < 0:
        return True
    if level > 0:
        return False
    for i in range(1, len(v)):
        if v[i] > 0:
            return True
    return False


def lowest_descent(m, simples, int n, unsigned int mask):
    """Index of the lowest masked right descent, or -1."""
    cdef int64_t[MAXN * MAXN] cm, cs
    cdef int i, j, row
    cdef int64_t acc
    for i in range(n * n):
        cm[i] = m[i]
        cs[i] = simples[i]
    for i in range(n):
        if not (mask >> i) & 1:
            continue
        acc = 0
        for j in range(n):
            acc += cm[j] * cs[i * n + j]
        if acc < 0:
            return i
        if acc > 0:
            continue
        for row in range(1, n):
            acc = 0
            for j in range(n):
                acc += cm[row * n + j] * cs[i * n + j]
            if acc != 0:
                if acc > 0:
                    return i
                break
    return -1
