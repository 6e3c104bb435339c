"""Pure-Python (numpy) counting kernels; fallback when the compiled core is absent.

Same entry points and semantics as the compiled module: all arguments are the
flat field tables, all results are exact integers.  The affine intersection
kernel is vectorized one row block at a time, so memory stays O(block * q).
"""

from __future__ import annotations

import numpy as np

COMPILED = False

_BLOCK = 128


def intersection_pair_count(digits, pows, sq, cb, na, logt, p, q, x0, x1) -> int:
    """Count pairs (x, y) in [x0,x1) x [0,q) passing the chart-z acceptance.

    With A = -(x^2+y^2+1), B = -(x^3+y^3+1): accept when A=B=0 (z=0) or when
    A != 0 and B^2 = A^3, which pins z = B/A with z^2 = A.
    """
    qm1 = q - 1
    sq_d = digits[sq]  # (q, m)
    cb_d = digits[cb]
    logt64 = logt.astype(np.int64)
    total = 0
    for start in range(x0, x1, _BLOCK):
        stop = min(start + _BLOCK, x1)
        a_idx = na[((sq_d[start:stop, None, :] + sq_d[None, :, :]) % p) @ pows]
        b_idx = na[((cb_d[start:stop, None, :] + cb_d[None, :, :]) % p) @ pows]
        both_zero = (a_idx == 0) & (b_idx == 0)
        nz = (a_idx != 0) & (b_idx != 0)
        la = logt64[a_idx]
        lb = logt64[b_idx]
        cond = nz & ((2 * lb - 3 * la) % qm1 == 0)
        total += int(both_zero.sum()) + int(cond.sum())
    return total


def intersection_line_count(sq, cb, na, logt, q) -> int:
    """The w=0 plane section, one free coordinate: same acceptance, O(q)."""
    qm1 = q - 1
    a_idx = na[sq]
    b_idx = na[cb]
    logt64 = logt.astype(np.int64)
    both_zero = (a_idx == 0) & (b_idx == 0)
    nz = (a_idx != 0) & (b_idx != 0)
    cond = nz & ((2 * logt64[b_idx] - 3 * logt64[a_idx]) % qm1 == 0)
    return int(both_zero.sum()) + int(cond.sum())


def chi_poly_sum(coeff_idx, digits, pows, logt, expt, chi, p, q) -> int:
    """Sum over x in F_q of chi(P(x)) for P given by coefficient indices."""
    qm1 = q - 1
    x = np.arange(q, dtype=np.int64)
    logt64 = logt.astype(np.int64)
    acc = np.full(q, int(coeff_idx[-1]), dtype=np.int64)
    for k in range(len(coeff_idx) - 2, -1, -1):
        # acc = acc * x  (discrete logs; zero absorbs)
        nz = (acc != 0) & (x != 0)
        prod = np.zeros(q, dtype=np.int64)
        prod[nz] = expt[(logt64[acc[nz]] + logt64[x[nz]]) % qm1]
        # acc = prod + c_k (digit addition)
        c = int(coeff_idx[k])
        if c:
            acc = ((digits[prod] + digits[c][None, :]) % p) @ pows
        else:
            acc = prod
    return int(chi[acc].sum())
