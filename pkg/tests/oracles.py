"""Independent brute-force oracles for the test suite.

Every oracle works straight from a definition (scans over all elements or
all subsets) and never touches the meet/join tables or the backend kernels,
so it stays independent of the code paths it checks.
"""

from itertools import combinations



def brute_lower_bounds(L, elements):
    return [x for x in range(L.n) if all(L.leq[x, e] for e in elements)]


def brute_upper_bounds(L, elements):
    return [x for x in range(L.n) if all(L.leq[e, x] for e in elements)]


def brute_meet(L, elements):
    """Greatest lower bound by direct scan; None when it does not exist."""
    lbs = brute_lower_bounds(L, elements)
    greatest = [x for x in lbs if all(L.leq[y, x] for y in lbs)]
    return greatest[0] if len(greatest) == 1 else None


def brute_join(L, elements):
    ubs = brute_upper_bounds(L, elements)
    least = [x for x in ubs if all(L.leq[x, y] for y in ubs)]
    return least[0] if len(least) == 1 else None


def brute_atoms(L):
    """Elements whose strict downset is exactly the bottom."""
    out = []
    for p in range(L.n):
        if p == L.bottom:
            continue
        below = [x for x in range(L.n) if L.leq[x, p] and x != p]
        if below == [L.bottom]:
            out.append(p)
    return out


def oracle_covering_violations(L):
    """All covering-law violations (a, p, x) by the raw definition."""
    out = []
    for a in range(L.n):
        for p in brute_atoms(L):
            j = brute_join(L, [a, p])
            for x in range(L.n):
                if x != a and x != j and L.leq[a, x] and L.leq[x, j]:
                    out.append((a, p, x))
    return out


def oracle_weak_modularity_violations(L, omap):
    out = []
    for a in range(L.n):
        for b in range(L.n):
            if L.leq[a, b]:
                t = brute_meet(L, [b, omap[a]])
                if brute_join(L, [t, a]) != b:
                    out.append((a, b))
    return out


def oracle_atomistic_violations(L):
    atoms = brute_atoms(L)
    out = []
    for x in range(L.n):
        below = [p for p in atoms if L.leq[p, x]]
        j = brute_join(L, below) if below else L.bottom
        if j != x:
            out.append(x)
    return out


def oracle_orthogonal_states(sps, p, q):
    """Directly scan for a property a with s(p) <= a and s(q) <= a'."""
    L = sps.lattice
    sp, sq = sps.property_states[p], sps.property_states[q]
    return any(L.leq[sp, a] and L.leq[sq, sps.ortho(a)] for a in range(L.n))


def oracle_closed_subsets(space):
    """All biorthogonally closed subsets by scanning the full power set.

    Only feasible for small spaces (2^points subsets).
    """
    n = len(space.points)
    closed = []
    for mask in range(1 << n):
        if space.closure_mask(mask) == mask:
            closed.append(mask)
    return closed


def subsets_upto(n, max_size=None):
    sizes = range(n + 1) if max_size is None else range(max_size + 1)
    for k in sizes:
        yield from combinations(range(n), k)
