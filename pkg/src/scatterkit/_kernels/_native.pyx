# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mirror of scatterkit._kernels.pure.search for up to 64 points.

Same backtracking order and forward-checking rules as the pure version,
so both backends return identical result lists.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int _search(int n, uint64_t full, uint64_t* ma, uint64_t* mb, uint64_t* memb_b,
                 uint64_t* cand, uint64_t assigned, int* assignment,
                 list results, Py_ssize_t limit):
    cdef uint64_t remaining = full & ~assigned
    cdef int i, k, j, cnt, best, best_count
    cdef uint64_t m, options, mm, c
    cdef uint64_t new_cand[64]
    cdef bint ok

    if remaining == 0:
        results.append(tuple([assignment[i] for i in range(n)]))
        if len(results) == limit:
            return 0
        return 1

    best = -1
    best_count = 1 << 30
    m = remaining
    while m:
        i = __builtin_ctzll(m)
        m &= m - 1
        cnt = __builtin_popcountll(cand[i])
        if cnt == 0:
            return 1
        if cnt < best_count:
            best = i
            best_count = cnt
            if cnt == 1:
                break
    i = best

    options = cand[i]
    while options:
        j = __builtin_ctzll(options)
        options &= options - 1
        for k in range(n):
            new_cand[k] = cand[k]
        new_cand[i] = (<uint64_t>1) << j
        ok = True
        mm = remaining & ~((<uint64_t>1) << i)
        while mm:
            k = __builtin_ctzll(mm)
            mm &= mm - 1
            c = new_cand[k] & ~((<uint64_t>1) << j)
            if (ma[i] >> k) & 1:
                c &= mb[j]
            else:
                c &= ~mb[j]
            if (ma[k] >> i) & 1:
                c &= memb_b[j]
            else:
                c &= ~memb_b[j]
            if c == 0:
                ok = False
                break
            new_cand[k] = c
        if ok:
            assignment[i] = j
            if not _search(n, full, ma, mb, memb_b, new_cand,
                           assigned | ((<uint64_t>1) << i), assignment, results, limit):
                return 0
            assignment[i] = -1
    return 1


def search(masks_a, masks_b, cand, limit=0):
    cdef int n = len(masks_a)
    if n == 0:
        return [()]
    if n > 64:
        raise ValueError("native kernel handles at most 64 points")
    cdef uint64_t ma[64]
    cdef uint64_t mb[64]
    cdef uint64_t memb_b[64]
    cdef uint64_t cand0[64]
    cdef int assignment[64]
    cdef int i, j
    for i in range(n):
        ma[i] = masks_a[i]
        mb[i] = masks_b[i]
        cand0[i] = cand[i]
        memb_b[i] = 0
        assignment[i] = -1
    for j in range(n):
        for i in range(n):
            if (mb[j] >> i) & 1:
                memb_b[i] |= (<uint64_t>1) << j
    cdef uint64_t full
    if n == 64:
        full = <uint64_t>0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t>1) << n) - 1
    results: list = []
    _search(n, full, ma, mb, memb_b, cand0, 0, assignment, results, limit)
    return results
