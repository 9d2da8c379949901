"""Compiled minimum-weight enumeration kernels.

Both kernels split a generator matrix into a low block of ``s`` rows, whose
``q^s`` combinations are tabulated once, and a high block walked in Gray-code
order so each step adds a single (scaled) row to a running prefix.  Every
codeword is ``prefix + table[j]``; the inner scan over the table is the hot loop.

The high block is further split into shards by its leading rows.  Shards are
independent and their minima are reduced with ``min``, so the result does not
depend on the number of worker threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _popcount(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@njit(cache=True)
def _ctz(t):
    c = 0
    while (t & 1) == 0:
        t >>= 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def _gf2_table(rows):
    s, words = rows.shape
    table = np.zeros((1 << s, words), dtype=np.uint64)
    for i in range(1, 1 << s):
        low = _ctz(i)
        prev = i & (i - 1)
        for w in range(words):
            table[i, w] = table[prev, w] ^ rows[low, w]
    return table


@njit(cache=True, nogil=True)
def _gf2_shard(high, table, shard, shard_bits, stop, check):
    """Min weight over codewords whose top ``shard_bits`` high-block bits equal ``shard``.

    Returns -2 if the running prefix ever disagrees with a direct recomputation
    (only checked when ``check`` is set).
    """
    r, words = high.shape
    free = r - shard_bits
    prefix = np.zeros(words, dtype=np.uint64)
    for b in range(shard_bits):
        if (shard >> b) & 1:
            for w in range(words):
                prefix[w] ^= high[free + b, w]
    best = 1 << 30
    n_table = table.shape[0]
    gray = 0
    for t in range(1 << free):
        if t > 0:
            bit = _ctz(t)
            gray ^= 1 << bit
            for w in range(words):
                prefix[w] ^= high[bit, w]
            if check and (t & 0xFFFF) == 0:
                for w in range(words):
                    direct = np.uint64(0)
                    for b in range(free):
                        if (gray >> b) & 1:
                            direct ^= high[b, w]
                    for b in range(shard_bits):
                        if (shard >> b) & 1:
                            direct ^= high[free + b, w]
                    if direct != prefix[w]:
                        return -2
        start = 1 if (t == 0 and shard == 0) else 0
        for j in range(start, n_table):
            wt = 0
            for w in range(words):
                wt += _popcount(prefix[w] ^ table[j, w])
            if wt < best:
                best = wt
                if best <= stop:
                    return best
    return best


def _run_shards(fn, shards, threads):
    if threads <= 1 or len(shards) == 1:
        return [fn(s) for s in shards]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, shards))


def min_weight_gf2(packed, stop=-1, threads=1, check=False, table_bits=16, shard_bits=None):
    packed = np.ascontiguousarray(packed, dtype=np.uint64)
    k = packed.shape[0]
    s = min(k, table_bits)
    table = _gf2_table(packed[:s])
    high = np.ascontiguousarray(packed[s:])
    r = high.shape[0]
    if shard_bits is None:
        shard_bits = min(r, 4)
    shard_bits = min(shard_bits, r)
    results = _run_shards(
        lambda sh: _gf2_shard(high, table, sh, shard_bits, stop, check),
        list(range(1 << shard_bits)),
        threads,
    )
    if any(v == -2 for v in results):
        raise AssertionError("Gray-code prefix diverged from direct recomputation")
    return int(min(results))


@njit(cache=True, nogil=True)
def _qary_table(rows, q, add, mul):
    s, n = rows.shape
    size = q ** s
    table = np.zeros((size, n), dtype=np.uint8)
    for idx in range(1, size):
        d = 0
        v = idx
        p = 1
        while v % q == 0:
            v //= q
            d += 1
            p *= q
        digit = v % q
        prev = idx - digit * p
        for x in range(n):
            table[idx, x] = add[table[prev, x], mul[digit, rows[d, x]]]
    return table


@njit(cache=True, nogil=True)
def _qary_shard(high, lead, table, q, add, mul, neg, cycle, stop):
    """Min weight over codewords whose high block is zero above ``lead`` and 1 at ``lead``.

    ``lead == -1`` is the shard where the whole high block is zero.
    """
    n = high.shape[1]
    prefix = np.zeros(n, dtype=np.uint8)
    negp = np.zeros(n, dtype=np.uint8)
    best = 1 << 30
    n_table = table.shape[0]
    if lead < 0:
        for j in range(1, n_table):
            wt = 0
            for x in range(n):
                wt += table[j, x] != 0
            if wt < best:
                best = wt
                if best <= stop:
                    return best
        return best
    for x in range(n):
        prefix[x] = high[lead, x]
    state = np.zeros(max(lead, 1), dtype=np.int64)
    # increments along the element cycle: cycle[c] -> cycle[c+1]
    steps = np.zeros(q, dtype=np.int64)
    for c in range(q):
        a = cycle[c]
        b = cycle[(c + 1) % q]
        steps[c] = add[b, neg[a]]
    total = q ** lead
    for t in range(total):
        if t > 0:
            d = 0
            v = t
            while v % q == 0:
                v //= q
                d += 1
            c = state[d]
            delta = steps[c]
            state[d] = (c + 1) % q
            for x in range(n):
                prefix[x] = add[prefix[x], mul[delta, high[d, x]]]
        for x in range(n):
            negp[x] = neg[prefix[x]]
        for j in range(n_table):
            wt = 0
            for x in range(n):
                wt += table[j, x] != negp[x]
            if wt < best:
                best = wt
                if best <= stop:
                    return best
    return best


def min_weight_qary(rows, q, add, mul, neg, stop=-1, threads=1, table_bytes=1 << 23):
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    k, n = rows.shape
    s = 0
    while s < k and q ** (s + 1) * n <= table_bytes:
        s += 1
    table = _qary_table(rows[:s], q, add, mul)
    high = np.ascontiguousarray(rows[s:])
    # additive cycle through all field elements, one basis step at a time
    cycle = np.array([0, 1, 3, 2] if q == 4 else list(range(q)), dtype=np.int64)
    shards = [-1] + list(range(high.shape[0]))
    results = _run_shards(
        lambda lead: _qary_shard(high, lead, table, q, add, mul, neg, cycle, stop),
        shards,
        threads,
    )
    return int(min(results))
