# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_kernels_py``."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil

cdef enum:
    MAXN = 64

BACKEND = "cython"


cdef int _load(object adj, uint64_t* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAXN:
        raise ValueError("order exceeds 64")
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return n


cdef bint _extend(const uint64_t* adj, int k, int* path, int depth,
                  uint64_t blocked) noexcept nogil:
    cdef int last = path[depth - 1]
    cdef uint64_t cand = adj[last] & ~blocked
    cdef uint64_t nxt
    if depth == k - 1:
        if cand:
            path[depth] = ctz64(cand)
            return True
        return False
    nxt = blocked | adj[last] | ((<uint64_t>1) << last)
    while cand:
        path[depth] = ctz64(cand)
        cand &= cand - 1
        if _extend(adj, k, path, depth + 1, nxt):
            return True
    return False


cdef bint _find(const uint64_t* adj, int n, int k, int* path) noexcept nogil:
    cdef int s
    if k < 1 or k > n:
        return False
    for s in range(n):
        path[0] = s
        if k == 1 or _extend(adj, k, path, 1, (<uint64_t>1) << s):
            return True
    return False


def find_induced_path(adj, int k):
    cdef uint64_t rows[MAXN]
    cdef int path[MAXN]
    cdef int n = _load(adj, rows)
    cdef bint found
    with nogil:
        found = _find(rows, n, k, path)
    if not found:
        return None
    return tuple([path[i] for i in range(k)])


cdef struct Longest:
    int n
    uint64_t full
    int best
    int path[MAXN]
    int best_path[MAXN]


cdef bint _walk(const uint64_t* adj, Longest* st, int depth,
                uint64_t blocked) noexcept nogil:
    cdef int i
    cdef int last
    cdef uint64_t cand, nxt
    if depth > st.best:
        st.best = depth
        for i in range(depth):
            st.best_path[i] = st.path[i]
        if depth == st.n:
            return True
    last = st.path[depth - 1]
    cand = adj[last] & ~blocked
    if not cand:
        return False
    nxt = blocked | adj[last] | ((<uint64_t>1) << last)
    if depth + 1 + popcount64(st.full & ~nxt) <= st.best:
        return False
    while cand:
        st.path[depth] = ctz64(cand)
        cand &= cand - 1
        if _walk(adj, st, depth + 1, nxt):
            return True
    return False


def longest_induced_path(adj):
    cdef uint64_t rows[MAXN]
    cdef Longest st
    cdef int n = _load(adj, rows)
    cdef int s
    if n == 0:
        return 0, ()
    st.n = n
    st.full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    st.best = 1
    st.best_path[0] = 0
    with nogil:
        for s in range(n):
            st.path[0] = s
            if _walk(rows, &st, 1, (<uint64_t>1) << s):
                break
    return st.best, tuple([st.best_path[i] for i in range(st.best)])


cdef bint _saturated(uint64_t* rows, int n, int k) noexcept nogil:
    cdef int path[MAXN]
    cdef int u, v
    cdef uint64_t bu, bv
    cdef bint hit
    if _find(rows, n, k, path):
        return False
    for u in range(n):
        for v in range(u + 1, n):
            bu = (<uint64_t>1) << u
            bv = (<uint64_t>1) << v
            if not (rows[u] & bv):
                rows[u] |= bv
                rows[v] |= bu
                hit = _find(rows, n, k, path)
                rows[u] ^= bv
                rows[v] ^= bu
                if not hit:
                    return False
    for u in range(n):
        for v in range(u + 1, n):
            bu = (<uint64_t>1) << u
            bv = (<uint64_t>1) << v
            if rows[u] & bv:
                rows[u] ^= bv
                rows[v] ^= bu
                hit = _find(rows, n, k, path)
                rows[u] |= bv
                rows[v] |= bu
                if not hit:
                    return False
    return True


def is_path_saturated(adj, int k):
    cdef uint64_t rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef bint ok
    with nogil:
        ok = _saturated(rows, n, k)
    return bool(ok)


cdef void _from_mask(int order, uint64_t mask, uint64_t* rows) noexcept nogil:
    cdef int i, j
    cdef int b = 0
    for i in range(order):
        rows[i] = 0
    for j in range(1, order):
        for i in range(j):
            if (mask >> b) & 1:
                rows[i] |= (<uint64_t>1) << j
                rows[j] |= (<uint64_t>1) << i
            b += 1


def adjacency_from_mask(int order, unsigned long long mask):
    cdef uint64_t rows[MAXN]
    if order > 11:
        raise ValueError("edge masks are limited to order 11")
    _from_mask(order, mask, rows)
    return [int(rows[i]) for i in range(order)]


def exhaust_path_target(int order, int k, unsigned long long lo, unsigned long long hi):
    cdef uint64_t rows[MAXN]
    cdef unsigned long long mask
    cdef bint ok
    hits = []
    if order > 11:
        raise ValueError("edge masks are limited to order 11")
    with nogil:
        mask = lo
        while mask < hi:
            _from_mask(order, mask, rows)
            ok = _saturated(rows, order, k)
            if ok:
                with gil:
                    hits.append(mask)
            mask += 1
    return hits
