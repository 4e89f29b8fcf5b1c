"""Compiled backend: same contracts as numpy_impl, scalar inner loops.

All kernels are nopython, nogil and disk-cached, so repeated runs skip
compilation and threaded searches can execute them in parallel.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_U0 = np.uint64(0)
_U1 = np.uint64(1)
# SWAR popcount constants
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, nogil=True, inline="always")
def _popcnt(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, nogil=True)
def lee_weights(arr_a, arr_b):
    out = np.empty(arr_a.shape[0], np.int64)
    for i in range(arr_a.shape[0]):
        out[i] = _popcnt(arr_a[i]) + 2 * _popcnt(arr_b[i] & ~arr_a[i])
    return out


@njit(cache=True, nogil=True)
def span_codewords(rows_a, rows_b):
    k = rows_a.shape[0]
    out_a = np.zeros(1 << k, np.uint64)
    out_b = np.zeros(1 << k, np.uint64)
    size = 1
    for i in range(k):
        ra = rows_a[i]
        rb = rows_b[i]
        for j in range(size):
            out_a[size + j] = out_a[j] ^ ra
            out_b[size + j] = out_b[j] ^ rb
        size <<= 1
    return out_a, out_b


@njit(cache=True, nogil=True)
def span_min_lee(rows_a, rows_b):
    # Gray-code walk: one row toggled per step covers every subset once
    k = rows_a.shape[0]
    if k == 0:
        return np.int64(-1)
    total = np.int64(1) << k
    acc_a = _U0
    acc_b = _U0
    best = np.int64(1) << 40
    for j in range(1, total):
        t = j
        i = 0
        while t & 1 == 0:
            t >>= 1
            i += 1
        acc_a ^= rows_a[i]
        acc_b ^= rows_b[i]
        if acc_a | acc_b:
            w = _popcnt(acc_a) + 2 * _popcnt(acc_b & ~acc_a)
            if w < best:
                best = w
    if best == np.int64(1) << 40:
        return np.int64(-1)
    return best


@njit(cache=True, nogil=True)
def oracle_codewords(comp_a, comp_b, n, l):
    total = np.int64(1) << (2 * n)
    mask = (_U1 << np.uint64(n)) - _U1
    un = np.uint64(n)
    out_a = np.empty(total, np.uint64)
    out_b = np.empty(total, np.uint64)
    for m in range(total):
        fa = np.uint64(m) & mask
        fb = np.uint64(m) >> un
        va = _U0
        vb = _U0
        for j in range(l):
            ga = comp_a[j]
            gb = comp_b[j]
            wide_a = _U0
            wide_b = _U0
            for i in range(n):
                sh = np.uint64(i)
                if (fa >> sh) & _U1:
                    wide_a ^= ga << sh
                    wide_b ^= gb << sh
                if (fb >> sh) & _U1:
                    wide_b ^= ga << sh
            hi = wide_a >> un
            pa = (wide_a & mask) ^ hi
            pb = hi ^ (wide_b & mask) ^ (wide_b >> un)
            for i in range(n):
                pos = np.uint64(i * l + j)
                va |= ((pa >> np.uint64(i)) & _U1) << pos
                vb |= ((pb >> np.uint64(i)) & _U1) << pos
        out_a[m] = va
        out_b[m] = vb
    return out_a, out_b
