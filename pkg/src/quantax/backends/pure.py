"""Pure-Python (numpy) fallback kernels for the hot lattice loops.

These mirror the compiled kernels in ``_core.pyx`` exactly: same scan order,
same witness selection, same failure reporting. Any divergence between the
two backends is a bug; ``tests/test_backends.py`` asserts parity.
"""

from __future__ import annotations

import numpy as np


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation matrix, in place."""
    n = leq.shape[0]
    np.fill_diagonal(leq, True)
    for k in range(n):
        # add every path i -> k -> j
        leq |= np.outer(leq[:, k], leq[k, :])
    return leq


def meet_join_tables(leq: np.ndarray):
    """Compute meet and join tables for a finite poset given as a leq matrix.

    Returns (meet, join, bad) where bad is None when every pair has a unique
    infimum and supremum, else the first failing (a, b, kind) in row-major
    order, all meets scanned before all joins.
    """
    n = leq.shape[0]
    meet = np.full((n, n), -1, dtype=np.int32)
    join = np.full((n, n), -1, dtype=np.int32)
    down_sizes = leq.sum(axis=0)  # |{x : x <= e}| per element e
    up_sizes = leq.sum(axis=1)

    for a in range(n):
        # common lower bounds of (a, b), one column per b
        clb = leq[:, a][:, None] & leq
        csize = clb.sum(axis=0)
        # the infimum is the common lower bound whose own downset fills clb
        cand = clb & (down_sizes[:, None] == csize[None, :])
        ok = cand.any(axis=0)
        if not ok.all():
            return meet, join, (a, int(np.argmin(ok)), "meet")
        meet[a, :] = cand.argmax(axis=0)

    for a in range(n):
        ub = leq[a, :][:, None] & leq.T
        usize = ub.sum(axis=0)
        cand = ub & (up_sizes[:, None] == usize[None, :])
        ok = cand.any(axis=0)
        if not ok.all():
            return meet, join, (a, int(np.argmin(ok)), "join")
        join[a, :] = cand.argmax(axis=0)

    return meet, join, None


def covering_scan(leq: np.ndarray, join: np.ndarray, atoms: np.ndarray):
    """First covering-law violation (a, p, x) with a < x < a v p, or None.

    Scan order: a ascending, then p in the given atom order, then x ascending.
    """
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    # between[a, j] > 0 iff some x has a < x < j
    f = strict.astype(np.float32)
    between = (f @ f) > 0.5
    for a in range(n):
        for p in atoms:
            j = join[a, p]
            if between[a, j]:
                vec = strict[a, :] & strict[:, j]
                return a, int(p), int(np.argmax(vec))
    return None


def weak_modularity_scan(
    leq: np.ndarray, meet: np.ndarray, join: np.ndarray, ortho: np.ndarray
):
    """First pair (a, b) with a <= b but (b ^ a') v a != b, or None."""
    n = leq.shape[0]
    idx = np.arange(n, dtype=np.int32)
    t = meet[ortho, :]  # t[a, b] = b ^ a'  (meet table is symmetric)
    r = join[t, idx[:, None]]  # r[a, b] = (b ^ a') v a
    viol = leq & (r != idx[None, :])
    if viol.any():
        flat = int(np.argmax(viol))
        return flat // n, flat % n
    return None
