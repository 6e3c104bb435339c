# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled counting kernels: same entry points as the pure fallback.

Everything operates on the flat int32/int8 field tables; the inner loops are
plain C.  Addition of field elements walks the m base-p digits; products and
the quadratic character go through the discrete-log tables.
"""

import numpy as np

COMPILED = True


def intersection_pair_count(digits, pows, sq, cb, na, logt, int p, int q, int x0, int x1):
    cdef int[:, :] dig = digits
    cdef long long[:] pw = pows
    cdef int[:] sqv = sq
    cdef int[:] cbv = cb
    cdef int[:] nav = na
    cdef int[:] logv = logt
    cdef int m = dig.shape[1]
    cdef long long qm1 = q - 1
    cdef long long total = 0
    cdef int x, y, i
    cdef int sx, cx, ai, bi
    cdef long long acc, la, lb, r
    for x in range(x0, x1):
        sx = sqv[x]
        cx = cbv[x]
        for y in range(q):
            acc = 0
            for i in range(m - 1, -1, -1):
                acc = acc * p + (dig[sx, i] + dig[sqv[y], i]) % p
            ai = nav[acc]
            acc = 0
            for i in range(m - 1, -1, -1):
                acc = acc * p + (dig[cx, i] + dig[cbv[y], i]) % p
            bi = nav[acc]
            if ai == 0:
                if bi == 0:
                    total += 1
            elif bi != 0:
                la = logv[ai]
                lb = logv[bi]
                r = (2 * lb - 3 * la) % qm1
                if r < 0:
                    r += qm1
                if r == 0:
                    total += 1
    return int(total)


def intersection_line_count(sq, cb, na, logt, int q):
    cdef int[:] sqv = sq
    cdef int[:] cbv = cb
    cdef int[:] nav = na
    cdef int[:] logv = logt
    cdef long long qm1 = q - 1
    cdef long long total = 0
    cdef int x, ai, bi
    cdef long long r
    for x in range(q):
        ai = nav[sqv[x]]
        bi = nav[cbv[x]]
        if ai == 0:
            if bi == 0:
                total += 1
        elif bi != 0:
            r = (2 * <long long> logv[bi] - 3 * <long long> logv[ai]) % qm1
            if r < 0:
                r += qm1
            if r == 0:
                total += 1
    return int(total)


def chi_poly_sum(coeff_idx, digits, pows, logt, expt, chi, int p, int q):
    cdef int[:] cf = coeff_idx
    cdef int[:, :] dig = digits
    cdef int[:] logv = logt
    cdef int[:] expv = expt
    cdef signed char[:] chiv = chi
    cdef int m = dig.shape[1]
    cdef long long qm1 = q - 1
    cdef int ncoef = cf.shape[0]
    cdef long long total = 0
    cdef int x, k, i, c
    cdef long long acc, prod, t
    for x in range(q):
        acc = cf[ncoef - 1]
        for k in range(ncoef - 2, -1, -1):
            if acc == 0 or x == 0:
                prod = 0
            else:
                t = (logv[acc] + logv[x]) % qm1
                prod = expv[t]
            c = cf[k]
            if c:
                acc = 0
                for i in range(m - 1, -1, -1):
                    acc = acc * p + (dig[prod, i] + dig[c, i]) % p
            else:
                acc = prod
        total += chiv[acc]
    return int(total)
