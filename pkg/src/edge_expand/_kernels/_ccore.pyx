# cython: boundscheck=False, wraparound=False
"""Compiled bitmask kernels for the hot enumeration loops.

Same contract as ``_pure``; selection happens in the package __init__.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

IMPLEMENTATION = "c"

DEF MAXN = 64


cdef int _load(object adj, unsigned long long *buf) except -1:
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("kernel supports at most 64 vertices")
    cdef int i
    for i in range(n):
        buf[i] = adj[i]
    return n


cdef inline long long _cut_size(unsigned long long *adj, int n,
                                unsigned long long s_mask) nogil:
    cdef long long total = 0
    cdef int v
    for v in range(n):
        if s_mask >> v & 1:
            total += __builtin_popcountll(adj[v] & ~s_mask)
    return total


def cut_size(adj, s_mask):
    """Number of edges with exactly one endpoint in the S bitmask."""
    cdef unsigned long long buf[MAXN]
    cdef int n = _load(adj, buf)
    return _cut_size(buf, n, s_mask)


def min_cut(adj, n):
    """Brute-force global min cut over all S containing vertex 0.

    Returns ``(size, s_mask)``; among minimum cuts the smallest S in
    bitmask order wins, so the result is deterministic.
    """
    cdef unsigned long long buf[MAXN]
    _load(adj, buf)
    cdef int nn = n
    cdef unsigned long long rest, mask, best_mask = 0
    cdef unsigned long long limit = (1ULL << (nn - 1)) - 1
    cdef long long size, best_size = -1
    with nogil:
        for rest in range(limit):
            mask = 1ULL | (rest << 1)
            size = _cut_size(buf, nn, mask)
            if best_size < 0 or size < best_size:
                best_size = size
                best_mask = mask
    return best_size, best_mask


def cuts_below(adj, n, forced_mask, bound):
    """All S bitmasks with forced_mask <= S, nonempty complement, cut < bound.

    Masks are returned in increasing order.
    """
    cdef unsigned long long buf[MAXN]
    _load(adj, buf)
    cdef int nn = n
    cdef unsigned long long full = (1ULL << nn) - 1
    cdef unsigned long long forced = forced_mask
    cdef unsigned long long free = full & ~forced
    cdef unsigned long long sub = 0, mask
    cdef long long b = bound
    out = []
    while True:
        mask = forced | sub
        if mask != full and _cut_size(buf, nn, mask) < b:
            out.append(mask)
        if sub == free:
            break
        sub = (sub - free) & free
    return out
