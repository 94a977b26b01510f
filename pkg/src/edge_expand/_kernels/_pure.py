"""Pure-Python bitmask kernels; same contract as the compiled module."""

IMPLEMENTATION = "python"


def cut_size(adj: list[int], s_mask: int) -> int:
    """Number of edges with exactly one endpoint in the S bitmask."""
    total = 0
    comp = ~s_mask
    m = s_mask
    v = 0
    while m:
        if m & 1:
            total += (adj[v] & comp).bit_count()
        m >>= 1
        v += 1
    return total


def min_cut(adj: list[int], n: int) -> tuple[int, int]:
    """Brute-force global min cut over all S containing vertex 0.

    Returns ``(size, s_mask)``; among minimum cuts the smallest S in
    bitmask order wins, so the result is deterministic.
    """
    best_size = -1
    best_mask = 0
    for rest in range((1 << (n - 1)) - 1):
        mask = 1 | (rest << 1)
        size = cut_size(adj, mask)
        if best_size < 0 or size < best_size:
            best_size = size
            best_mask = mask
    return best_size, best_mask


def cuts_below(adj: list[int], n: int, forced_mask: int, bound: int) -> list[int]:
    """All S bitmasks with forced_mask <= S, nonempty complement, cut < bound.

    Masks are returned in increasing order.
    """
    full = (1 << n) - 1
    free = full & ~forced_mask
    out = []
    sub = 0
    while True:
        mask = forced_mask | sub
        if mask != full and cut_size(adj, mask) < bound:
            out.append(mask)
        if sub == free:
            break
        sub = (sub - free) & free  # next submask of free in increasing order
    return out
