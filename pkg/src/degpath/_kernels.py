"""Numba kernels for enumeration-scale work (orders <= 11).

A graph on n <= 11 vertices is packed into one uint64 "code": the upper
triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... in column-major order,
first bit most significant.  The canonical representative of an isomorphism
class is the labeling minimizing this code, so codes double as canonical
forms and generation is orderly: deleting the last vertex of a minimal code
always yields a minimal code, which makes extend-by-one-vertex complete and
duplicate-free.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

MAX_N = 11


@njit(cache=True, inline="always")
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def decode_rows(code, n, rows):
    """Unpack a code into adjacency bit rows (rows must hold n entries)."""
    t = n * (n - 1) // 2
    for i in range(n):
        rows[i] = 0
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> np.uint64(t - 1 - pos)) & np.uint64(1):
                rows[i] |= np.uint16(1 << j)
                rows[j] |= np.uint16(1 << i)
            pos += 1


@njit(cache=True)
def encode_rows(rows, n):
    """Pack adjacency bit rows into a code."""
    code = np.uint64(0)
    for j in range(1, n):
        for i in range(j):
            code = (code << np.uint64(1)) | np.uint64((rows[i] >> j) & 1)
    return code


@njit(cache=True)
def _twin_matrix(rows, n, twin):
    # Vertices with identical adjacency outside the pair are interchangeable
    # by an automorphism; exploring one of them per search node suffices.
    for a in range(n):
        for b in range(n):
            twin[a, b] = 0
    for a in range(n):
        for b in range(a + 1, n):
            if (rows[a] & ~np.uint16(1 << b)) == (rows[b] & ~np.uint16(1 << a)):
                twin[a, b] = 1


@njit(cache=True)
def is_min_canonical(rows, n):
    """True iff the given labeling attains the minimal code.

    Backtracking over labelings, column by column: a branch is cut as soon
    as its partial column exceeds the reference column, and any branch whose
    column drops below the reference proves a smaller code exists.
    """
    refcol = np.empty(n, np.int64)
    for p in range(n):
        c = 0
        for i in range(p):
            c = (c << 1) | ((rows[p] >> i) & 1)
        refcol[p] = c
    twin = np.empty((n, n), np.uint8)
    _twin_matrix(rows, n, twin)

    chosen = np.empty(n, np.int64)
    nxt = np.zeros(n, np.int64)
    used = 0
    pos = 0
    while pos >= 0:
        w = nxt[pos]
        found = -1
        while w < n:
            if not (used >> w) & 1:
                skip = False
                for w2 in range(w):
                    if not (used >> w2) & 1 and twin[w2, w]:
                        skip = True
                        break
                if not skip:
                    c = 0
                    for i in range(pos):
                        c = (c << 1) | ((rows[chosen[i]] >> w) & 1)
                    if c < refcol[pos]:
                        return False
                    if c == refcol[pos]:
                        found = w
                        break
            w += 1
        if found == -1:
            pos -= 1
            if pos >= 0:
                used &= ~(1 << chosen[pos])
            continue
        nxt[pos] = found + 1
        chosen[pos] = found
        if pos == n - 1:
            continue  # complete automorphism; resume siblings at this level
        used |= 1 << found
        pos += 1
        nxt[pos] = 0
    return True


@njit(cache=True)
def min_code(rows, n):
    """Minimal code over all labelings (the canonical form)."""
    t = n * (n - 1) // 2
    best = encode_rows(rows, n)
    twin = np.empty((n, n), np.uint8)
    _twin_matrix(rows, n, twin)

    chosen = np.empty(n, np.int64)
    acc = np.zeros(n, np.uint64)
    nxt = np.zeros(n, np.int64)
    used = 0
    pos = 0
    while pos >= 0:
        w = nxt[pos]
        found = -1
        part = np.uint64(0)
        while w < n:
            if not (used >> w) & 1:
                skip = False
                for w2 in range(w):
                    if not (used >> w2) & 1 and twin[w2, w]:
                        skip = True
                        break
                if not skip:
                    c = 0
                    for i in range(pos):
                        c = (c << 1) | ((rows[chosen[i]] >> w) & 1)
                    prev = acc[pos - 1] if pos > 0 else np.uint64(0)
                    cand = (prev << np.uint64(pos)) | np.uint64(c)
                    done = pos * (pos + 1) // 2
                    if cand <= (best >> np.uint64(t - done)):
                        found = w
                        part = cand
                        break
            w += 1
        if found == -1:
            pos -= 1
            if pos >= 0:
                used &= ~(1 << chosen[pos])
            continue
        nxt[pos] = found + 1
        chosen[pos] = found
        acc[pos] = part
        if pos == n - 1:
            if part < best:
                best = part
            continue
        used |= 1 << found
        pos += 1
        nxt[pos] = 0
    return best


@njit(cache=True, parallel=True)
def extend_block(codes, start, stop, k, buf, counts):
    """Children of parents codes[start:stop] (order k -> k+1).

    For each parent, all 2^k last columns are tried and only canonical
    children are kept, written in ascending column order to the parent's
    private buffer row; counts[i] is the number kept.  Compaction in parent
    order afterwards makes the output independent of thread count.
    """
    t = k * (k - 1) // 2
    for idx in prange(stop - start):
        pcode = codes[start + idx]
        rows = np.zeros(MAX_N + 1, np.uint16)
        decode_rows(pcode, k, rows)
        crows = np.empty(MAX_N + 1, np.uint16)
        cnt = 0
        for colval in range(1 << k):
            for i in range(k):
                crows[i] = rows[i]
            crows[k] = 0
            for i in range(k):
                if (colval >> (k - 1 - i)) & 1:
                    crows[i] |= np.uint16(1 << k)
                    crows[k] |= np.uint16(1 << i)
            if is_min_canonical(crows, k + 1):
                buf[idx, cnt] = (pcode << np.uint64(k)) | np.uint64(colval)
                cnt += 1
        counts[idx] = cnt


@njit(cache=True, inline="always")
def _has_path3(rows, n):
    # Middle-edge scan: a path u-a-b-v exists iff for some edge (a, b) the
    # degree buckets of N(a)\{b} and N(b)\{a} share a degree without being
    # the same single vertex.
    degmask = np.zeros(n, np.int64)
    for i in range(n):
        d = _popcount(rows[i])
        degmask[d] |= 1 << i
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            if (ra >> b) & 1:
                na = ra & ~np.uint16(1 << b)
                nb = rows[b] & ~np.uint16(1 << a)
                for d in range(n):
                    m = degmask[d]
                    if m:
                        ua = na & m
                        vb = nb & m
                        if ua and vb and not (ua == vb and _popcount(ua) == 1):
                            return True
    return False


@njit(cache=True, parallel=True)
def detect3_codes(codes, n, flags, nedges):
    """Per-code path-3 forbidden-configuration flag and edge count."""
    for idx in prange(codes.shape[0]):
        rows = np.zeros(MAX_N + 1, np.uint16)
        decode_rows(codes[idx], n, rows)
        e = 0
        for i in range(n):
            e += _popcount(rows[i])
        nedges[idx] = e // 2
        flags[idx] = _has_path3(rows, n)


@njit(cache=True)
def code_edge_counts(codes, out):
    for idx in range(codes.shape[0]):
        x = codes[idx]
        c = 0
        while x:
            x &= x - np.uint64(1)
            c += 1
        out[idx] = c


@njit(cache=True)
def all_labeled_min_codes(n):
    """Canonical codes of all 2^C(n,2) labeled graphs (brute-force oracle)."""
    t = n * (n - 1) // 2
    out = np.empty(1 << t, np.uint64)
    rows = np.zeros(MAX_N + 1, np.uint16)
    for code in range(1 << t):
        decode_rows(np.uint64(code), n, rows)
        out[code] = min_code(rows, n)
    return out
