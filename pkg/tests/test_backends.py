"""Parity between the compiled kernels and the numpy fallback.

Both backends must agree bit for bit: same tables, same failure pairs, same
witness selection. Random posets are generated acyclically by index order so
closure always yields a partial order.
"""

import numpy as np
import pytest

from quantax.backends import active_backend, pure
from quantax.zoo import mo_lattice, o6_lattice, powerset_lattice

try:
    from quantax.backends import _core
except ImportError:
    _core = None

needs_compiled = pytest.mark.skipif(_core is None, reason="compiled backend not built")


def random_closed_posets(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 10))
        leq = np.eye(n, dtype=bool)
        for _ in range(int(rng.integers(0, 3 * n))):
            i, j = sorted(rng.integers(0, n, 2))
            leq[i, j] = True
        yield pure.transitive_closure(leq)


@needs_compiled
def test_transitive_closure_parity():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 12))
        rel = rng.random((n, n)) < 0.25
        assert (
            pure.transitive_closure(rel.copy()) == _core.transitive_closure(rel.copy())
        ).all()


@needs_compiled
def test_meet_join_tables_parity_on_random_posets():
    for leq in random_closed_posets(300, seed=13):
        mp, jp, bp = pure.meet_join_tables(leq)
        mc, jc, bc = _core.meet_join_tables(leq)
        assert bp == bc
        if bp is None:
            assert (mp == mc).all()
            assert (jp == jc).all()


@needs_compiled
@pytest.mark.parametrize("builder", [lambda: powerset_lattice(3), lambda: powerset_lattice(4), o6_lattice, lambda: mo_lattice(2), lambda: mo_lattice(3)])
def test_scan_parity_on_zoo_lattices(builder):
    L, o = builder()
    atoms = np.asarray(L.atoms, dtype=np.int32)
    assert pure.covering_scan(L.leq, L.join, atoms) == _core.covering_scan(
        L.leq, L.join, atoms
    )
    if o is not None:
        omap = o.as_array()
        assert pure.weak_modularity_scan(
            L.leq, L.meet, L.join, omap
        ) == _core.weak_modularity_scan(L.leq, L.meet, L.join, omap)


@needs_compiled
def test_scan_parity_includes_failing_case():
    # O6 violates weak modularity; both backends must pick the same witness
    L, o = o6_lattice()
    omap = o.as_array()
    wp = pure.weak_modularity_scan(L.leq, L.meet, L.join, omap)
    wc = _core.weak_modularity_scan(L.leq, L.meet, L.join, omap)
    assert wp == wc
    assert wp is not None


def test_active_backend_is_reported():
    assert active_backend() in ("compiled", "pure")
