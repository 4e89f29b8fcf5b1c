"""Vectorized reference backend for the enumeration loops.

Codewords are pairs of uint64 masks (a part, b part) with position p of
the vector at bit p.  Everything here works on whole arrays so the
Python interpreter only sees O(2^(k-c)) or O(bits) steps, never one
step per codeword.
"""

from __future__ import annotations

import numpy as np

_U1 = np.uint64(1)
_CHUNK = 1 << 20
_LOW_TABLE = 18  # low-row table size for the min-weight scan


def _popcount(x):
    return np.bitwise_count(x).astype(np.int64)


def lee_weights(arr_a, arr_b):
    """Lee weight of each packed word: wt(a) + 2*wt(b & ~a)."""
    return _popcount(arr_a) + 2 * _popcount(arr_b & ~arr_a)


def span_codewords(rows_a, rows_b):
    """All 2^k subset-XORs of the rows, index j using rows in bin(j)."""
    k = len(rows_a)
    out_a = np.zeros(1 << k, np.uint64)
    out_b = np.zeros(1 << k, np.uint64)
    size = 1
    for i in range(k):
        out_a[size : 2 * size] = out_a[:size] ^ rows_a[i]
        out_b[size : 2 * size] = out_b[:size] ^ rows_b[i]
        size *= 2
    return out_a, out_b


def span_min_lee(rows_a, rows_b):
    """Minimum Lee weight over the nonzero span of the rows, -1 if {0}.

    The low rows are expanded into a table once; the high rows are
    folded in one subset at a time so memory stays bounded while each
    pass is a flat vector operation.
    """
    k = len(rows_a)
    if k == 0:
        return -1
    c = min(k, _LOW_TABLE)
    ta, tb = span_codewords(rows_a[:c], rows_b[:c])
    best = -1
    for h in range(1 << (k - c)):
        ha = np.uint64(0)
        hb = np.uint64(0)
        bits = h
        while bits:
            i = (bits & -bits).bit_length() - 1
            ha ^= rows_a[c + i]
            hb ^= rows_b[c + i]
            bits &= bits - 1
        xa = ta ^ ha
        xb = tb ^ hb
        w = lee_weights(xa, xb)
        w[(xa | xb) == 0] = np.iinfo(np.int64).max
        m = int(w.min())
        if m != np.iinfo(np.int64).max and (best == -1 or m < best):
            best = m
    return best


def _clmul_vec(v, scalar):
    """Carry-less product of a uint64 array by a Python-int polynomial."""
    out = np.zeros_like(v)
    bits = scalar
    while bits:
        i = (bits & -bits).bit_length() - 1
        out ^= v << np.uint64(i)
        bits &= bits - 1
    return out


def oracle_codewords(comp_a, comp_b, n, l):
    """Packed codewords f*(g_0,...,g_{l-1}) for every f in S_n.

    Multiplier index m encodes f: the low n bits are the F2 part, the
    high n bits the u part.  Component j of the product lands at
    positions i*l + j of the output word.
    """
    total = 1 << (2 * n)
    mask = np.uint64((1 << n) - 1)
    out_a = np.empty(total, np.uint64)
    out_b = np.empty(total, np.uint64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        m = np.arange(start, stop, dtype=np.uint64)
        fa = m & mask
        fb = m >> np.uint64(n)
        va = np.zeros(stop - start, np.uint64)
        vb = np.zeros(stop - start, np.uint64)
        for j in range(l):
            ga = int(comp_a[j])
            gb = int(comp_b[j])
            wide_a = _clmul_vec(fa, ga)
            wide_b = _clmul_vec(fa, gb) ^ _clmul_vec(fb, ga)
            hi = wide_a >> np.uint64(n)
            pa = (wide_a & mask) ^ hi
            pb = hi ^ (wide_b & mask) ^ (wide_b >> np.uint64(n))
            for i in range(n):
                pos = np.uint64(i * l + j)
                va |= ((pa >> np.uint64(i)) & _U1) << pos
                vb |= ((pb >> np.uint64(i)) & _U1) << pos
        out_a[start:stop] = va
        out_b[start:stop] = vb
    return out_a, out_b
