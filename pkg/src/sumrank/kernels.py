"""Hot loops for exhaustive codeword enumeration.

The minimum-distance oracle enumerates all |F|^k codewords of a code with a
table-driven odometer: field arithmetic is lookup in dense add/mul tables,
and block ranks are computed by Gaussian elimination on subfield coordinate
rows.  The kernel is compiled with numba when available; setting
SUMRANK_NO_NUMBA=1 selects the uncompiled pure-Python/NumPy path (same code,
no JIT), which `python -m sumrank.bench` compares against the compiled one.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SUMRANK_NO_NUMBA", "") == "1"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def _min_weight_impl(G, mulF, addF, coord, mulS, subS, invS, parts):
    """Minimum sum-rank weight over all nonzero F-linear combinations of G.

    G: (k, n) generator rows, entries are F encodings.
    coord: (|F|, mS) subfield coordinates of every F element.
    parts: block sizes (sum = n).  Returns the minimum weight.
    """
    k, n = G.shape
    q = mulF.shape[0]
    mS = coord.shape[1]
    nblocks = parts.shape[0]
    maxnb = 0
    for b in range(nblocks):
        if parts[b] > maxnb:
            maxnb = parts[b]
    digits = np.zeros(k, np.int64)
    prefix = np.zeros((k + 1, n), np.int64)
    basis = np.zeros((maxnb, mS), np.int64)
    pivcol = np.zeros(maxnb, np.int64)
    work = np.zeros(mS, np.int64)
    best = np.int64(1 << 62)
    while True:
        pos = k - 1
        while pos >= 0 and digits[pos] == q - 1:
            digits[pos] = 0
            pos -= 1
        if pos < 0:
            break
        digits[pos] += 1
        for i in range(pos, k):
            d = digits[i]
            for j in range(n):
                if d == 0:
                    prefix[i + 1, j] = prefix[i, j]
                else:
                    prefix[i + 1, j] = addF[prefix[i, j], mulF[d, G[i, j]]]
        # sum-rank weight of prefix[k], with early exit at the current best
        w = np.int64(0)
        off = 0
        for b in range(nblocks):
            nb = parts[b]
            r = 0
            for tcol in range(nb):
                e = prefix[k, off + tcol]
                if e == 0:
                    continue
                for j in range(mS):
                    work[j] = coord[e, j]
                # eliminate against the existing pivot rows
                for row in range(r):
                    f = work[pivcol[row]]
                    if f != 0:
                        for j in range(mS):
                            work[j] = subS[work[j], mulS[f, basis[row, j]]]
                lead = -1
                for j in range(mS):
                    if work[j] != 0:
                        lead = j
                        break
                if lead >= 0:
                    s = invS[work[lead]]
                    for j in range(mS):
                        basis[r, j] = mulS[s, work[j]]
                    pivcol[r] = lead
                    r += 1
            w += r
            off += nb
            if w >= best:
                break
        if w < best:
            best = w
            if best <= 1:
                break
    return best


if USE_NUMBA:
    min_weight_kernel = njit(cache=True)(_min_weight_impl)
else:
    min_weight_kernel = _min_weight_impl

min_weight_pure = _min_weight_impl


class FieldTables:
    """Dense lookup tables for one (field, subfield) pair."""

    def __init__(self, tower, level="F", sub="E"):
        big = tower.gf(level)
        small = tower.gf(sub)
        if big.order > 4096:
            raise ValueError(f"enumeration tables capped at order 4096, got {big.order}")
        q, qs = big.order, small.order
        self.mulF = np.zeros((q, q), np.int64)
        self.addF = np.zeros((q, q), np.int64)
        for a in range(q):
            for b in range(q):
                self.mulF[a, b] = big.mul(a, b)
                self.addF[a, b] = big.add(a, b)
        mS = big.deg // small.deg
        self.coord = np.zeros((q, mS), np.int64)
        for a in range(q):
            self.coord[a] = tower.coords(level, sub, a)
        self.mulS = np.zeros((qs, qs), np.int64)
        self.subS = np.zeros((qs, qs), np.int64)
        self.invS = np.zeros(qs, np.int64)
        for a in range(qs):
            for b in range(qs):
                self.mulS[a, b] = small.mul(a, b)
                self.subS[a, b] = small.sub(a, b)
            if a:
                self.invS[a] = small.inv(a)


def min_weight(G, tables: FieldTables, parts, pure=False):
    Ga = np.asarray(G, np.int64)
    pa = np.asarray(parts, np.int64)
    kern = min_weight_pure if pure else min_weight_kernel
    return int(
        kern(
            Ga,
            tables.mulF,
            tables.addF,
            tables.coord,
            tables.mulS,
            tables.subS,
            tables.invS,
            pa,
        )
    )
