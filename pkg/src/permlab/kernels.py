"""Hot enumeration loops, compiled with numba when available.

Every kernel is a self-contained function over numpy arrays: no big ints,
no Python objects, no calls into other kernels (numba resolves globals at
compile time, so cross-calls would pin us to a single dispatch mode).  The
price is some repetition of the lexicographic DFS skeleton and of the
4-letter pattern test; the benefit is that each function compiles in
isolation and the pure-Python twin is byte-for-byte the same code.

Selection: by default each public name is the numba-compiled version.  Set
``PERMLAB_PURE=1`` in the environment (before import) to force the plain
Python path; the ``*_pure`` aliases always point at the uncompiled
implementation so the benchmark can time both in one process.

Permutations are int64 arrays of 1-based values; patterns are int64 arrays
of length 4 holding a permutation of 1..4.
"""

from __future__ import annotations

import os

import numpy as np


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


PURE_PYTHON_REQUESTED = _env_flag("PERMLAB_PURE")

NUMBA_ENABLED = False
if not PURE_PYTHON_REQUESTED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        njit = None
    else:
        NUMBA_ENABLED = True


def _select(impl):
    if NUMBA_ENABLED:
        return njit(cache=True)(impl)
    return impl


# ---------------------------------------------------------------------------
# census of avoiders by (first letter, second letter)
# ---------------------------------------------------------------------------

def _census_pair_impl(n, pa, pb):
    # Lexicographic DFS over permutations of 1..n avoiding both 4-patterns.
    # A prefix that avoids both can only gain an occurrence ending at the
    # newly placed letter, so the incremental test scans triples i<j<k
    # before the last position.  Returns (first-letter counts, first x
    # second counts with 1-based rows/columns).
    first = np.zeros(n, np.int64)
    pair = np.zeros((n + 1, n + 1), np.int64)
    a01 = pa[0] < pa[1]
    a02 = pa[0] < pa[2]
    a03 = pa[0] < pa[3]
    a12 = pa[1] < pa[2]
    a13 = pa[1] < pa[3]
    a23 = pa[2] < pa[3]
    b01 = pb[0] < pb[1]
    b02 = pb[0] < pb[2]
    b03 = pb[0] < pb[3]
    b12 = pb[1] < pb[2]
    b13 = pb[1] < pb[3]
    b23 = pb[2] < pb[3]
    perm = np.zeros(n, np.int64)
    used = np.zeros(n + 1, np.uint8)
    nxt = np.zeros(n, np.int64)
    d = 0
    nxt[0] = 1
    while d >= 0:
        v = nxt[d]
        while v <= n and used[v] == 1:
            v += 1
        if v > n:
            d -= 1
            if d >= 0:
                used[perm[d]] = 0
                nxt[d] = perm[d] + 1
            continue
        nxt[d] = v + 1
        perm[d] = v
        bad = False
        if d >= 3:
            for i in range(d - 2):
                w0 = perm[i]
                if ((w0 < v) == a03) or ((w0 < v) == b03):
                    for j in range(i + 1, d - 1):
                        w1 = perm[j]
                        hit_a = (w0 < w1) == a01 and (w1 < v) == a13 and (w0 < v) == a03
                        hit_b = (w0 < w1) == b01 and (w1 < v) == b13 and (w0 < v) == b03
                        if hit_a or hit_b:
                            for k in range(j + 1, d):
                                w2 = perm[k]
                                if hit_a and (w0 < w2) == a02 and (w1 < w2) == a12 and (w2 < v) == a23:
                                    bad = True
                                    break
                                if hit_b and (w0 < w2) == b02 and (w1 < w2) == b12 and (w2 < v) == b23:
                                    bad = True
                                    break
                            if bad:
                                break
                    if bad:
                        break
        if bad:
            continue
        if d == n - 1:
            first[perm[0] - 1] += 1
            if n >= 2:
                pair[perm[0], perm[1]] += 1
            continue
        used[v] = 1
        d += 1
        nxt[d] = 1
    return first, pair


census_pair_pure = _census_pair_impl
census_pair = _select(_census_pair_impl)


# ---------------------------------------------------------------------------
# materialised list of avoiders, lexicographic order
# ---------------------------------------------------------------------------

def _fill_avoiders_impl(n, pa, pb, out):
    # Same DFS as the census; writes each avoider into a row of `out`
    # (int8, so n must stay below 128) and returns the row count.
    a01 = pa[0] < pa[1]
    a02 = pa[0] < pa[2]
    a03 = pa[0] < pa[3]
    a12 = pa[1] < pa[2]
    a13 = pa[1] < pa[3]
    a23 = pa[2] < pa[3]
    b01 = pb[0] < pb[1]
    b02 = pb[0] < pb[2]
    b03 = pb[0] < pb[3]
    b12 = pb[1] < pb[2]
    b13 = pb[1] < pb[3]
    b23 = pb[2] < pb[3]
    perm = np.zeros(n, np.int64)
    used = np.zeros(n + 1, np.uint8)
    nxt = np.zeros(n, np.int64)
    count = 0
    d = 0
    nxt[0] = 1
    while d >= 0:
        v = nxt[d]
        while v <= n and used[v] == 1:
            v += 1
        if v > n:
            d -= 1
            if d >= 0:
                used[perm[d]] = 0
                nxt[d] = perm[d] + 1
            continue
        nxt[d] = v + 1
        perm[d] = v
        bad = False
        if d >= 3:
            for i in range(d - 2):
                w0 = perm[i]
                if ((w0 < v) == a03) or ((w0 < v) == b03):
                    for j in range(i + 1, d - 1):
                        w1 = perm[j]
                        hit_a = (w0 < w1) == a01 and (w1 < v) == a13 and (w0 < v) == a03
                        hit_b = (w0 < w1) == b01 and (w1 < v) == b13 and (w0 < v) == b03
                        if hit_a or hit_b:
                            for k in range(j + 1, d):
                                w2 = perm[k]
                                if hit_a and (w0 < w2) == a02 and (w1 < w2) == a12 and (w2 < v) == a23:
                                    bad = True
                                    break
                                if hit_b and (w0 < w2) == b02 and (w1 < w2) == b12 and (w2 < v) == b23:
                                    bad = True
                                    break
                            if bad:
                                break
                    if bad:
                        break
        if bad:
            continue
        if d == n - 1:
            for t in range(n):
                out[count, t] = np.int8(perm[t])
            count += 1
            continue
        used[v] = 1
        d += 1
        nxt[d] = 1
    return count


fill_avoiders_pure = _fill_avoiders_impl
fill_avoiders = _select(_fill_avoiders_impl)


# ---------------------------------------------------------------------------
# census of avoiders by (first letter, number of active sites)
# ---------------------------------------------------------------------------

def _active_census_impl(n, pa, pb):
    # For each avoider pi of 1..n, count the gaps g in 0..n where lifting
    # every letter by one and inserting a new 1 at g still avoids both
    # patterns.  Output u has u[i, j] = number of avoiders with first
    # letter i and exactly j active sites (i in 1..n, j in 0..n+1).
    u = np.zeros((n + 1, n + 2), np.int64)
    a01 = pa[0] < pa[1]
    a02 = pa[0] < pa[2]
    a03 = pa[0] < pa[3]
    a12 = pa[1] < pa[2]
    a13 = pa[1] < pa[3]
    a23 = pa[2] < pa[3]
    b01 = pb[0] < pb[1]
    b02 = pb[0] < pb[2]
    b03 = pb[0] < pb[3]
    b12 = pb[1] < pb[2]
    b13 = pb[1] < pb[3]
    b23 = pb[2] < pb[3]
    perm = np.zeros(n, np.int64)
    used = np.zeros(n + 1, np.uint8)
    nxt = np.zeros(n, np.int64)
    buf = np.zeros(n + 1, np.int64)
    d = 0
    nxt[0] = 1
    while d >= 0:
        v = nxt[d]
        while v <= n and used[v] == 1:
            v += 1
        if v > n:
            d -= 1
            if d >= 0:
                used[perm[d]] = 0
                nxt[d] = perm[d] + 1
            continue
        nxt[d] = v + 1
        perm[d] = v
        bad = False
        if d >= 3:
            for i in range(d - 2):
                w0 = perm[i]
                if ((w0 < v) == a03) or ((w0 < v) == b03):
                    for j in range(i + 1, d - 1):
                        w1 = perm[j]
                        hit_a = (w0 < w1) == a01 and (w1 < v) == a13 and (w0 < v) == a03
                        hit_b = (w0 < w1) == b01 and (w1 < v) == b13 and (w0 < v) == b03
                        if hit_a or hit_b:
                            for k in range(j + 1, d):
                                w2 = perm[k]
                                if hit_a and (w0 < w2) == a02 and (w1 < w2) == a12 and (w2 < v) == a23:
                                    bad = True
                                    break
                                if hit_b and (w0 < w2) == b02 and (w1 < w2) == b12 and (w2 < v) == b23:
                                    bad = True
                                    break
                            if bad:
                                break
                    if bad:
                        break
        if bad:
            continue
        if d == n - 1:
            m = n + 1
            sites = 0
            for g in range(n + 1):
                for t in range(g):
                    buf[t] = perm[t] + 1
                buf[g] = 1
                for t in range(g, n):
                    buf[t + 1] = perm[t] + 1
                # full containment test of each pattern in the lifted word
                found = False
                for pat in range(2):
                    if pat == 0:
                        r01, r02, r03 = a01, a02, a03
                        r12, r13, r23 = a12, a13, a23
                    else:
                        r01, r02, r03 = b01, b02, b03
                        r12, r13, r23 = b12, b13, b23
                    for i in range(m - 3):
                        w0 = buf[i]
                        for j in range(i + 1, m - 2):
                            w1 = buf[j]
                            if (w0 < w1) != r01:
                                continue
                            for k in range(j + 1, m - 1):
                                w2 = buf[k]
                                if (w0 < w2) != r02 or (w1 < w2) != r12:
                                    continue
                                for l in range(k + 1, m):
                                    w3 = buf[l]
                                    if (w0 < w3) == r03 and (w1 < w3) == r13 and (w2 < w3) == r23:
                                        found = True
                                        break
                                if found:
                                    break
                            if found:
                                break
                        if found:
                            break
                    if found:
                        break
                if not found:
                    sites += 1
            u[perm[0], sites] += 1
            continue
        used[v] = 1
        d += 1
        nxt[d] = 1
    return u


active_census_pure = _active_census_impl
active_census = _select(_active_census_impl)


# ---------------------------------------------------------------------------
# inversion sequences avoiding the pattern 021
# ---------------------------------------------------------------------------

def _inv021_census_impl(n):
    # DFS over sequences e_1..e_n with 0 <= e_t <= t-1 containing no
    # i < j < k with e_i < e_k < e_j.  Appending x at position m creates
    # such a triple iff some earlier j has e_j > x and min(e_1..e_{j-1}) < x,
    # so a running prefix-minimum array gives an O(m) test.  Counts the
    # survivors by the class of the last entry: k = e_n when e_n > 0,
    # k = n when e_n = 0.
    res = np.zeros(n, np.int64)
    e = np.zeros(n, np.int64)
    premin = np.zeros(n + 1, np.int64)
    premin[0] = n + 1
    nxt = np.zeros(n, np.int64)
    d = 0
    nxt[0] = 0
    while d >= 0:
        x = nxt[d]
        if x > d:
            d -= 1
            continue
        nxt[d] = x + 1
        bad = False
        for j in range(1, d):
            if e[j] > x and premin[j] < x:
                bad = True
                break
        if bad:
            continue
        e[d] = x
        if d == n - 1:
            k = x if x > 0 else n
            res[k - 1] += 1
            continue
        premin[d + 1] = premin[d] if premin[d] < x else x
        d += 1
        nxt[d] = 0
    return res


inv021_census_pure = _inv021_census_impl
inv021_census = _select(_inv021_census_impl)
