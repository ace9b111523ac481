"""Separated products, biorthogonal closure, the no-go behaviour."""

import random

import pytest

from quantax.decomposition import nonclassical_components
from quantax.lattice import check_covering_law, check_weak_modularity
from quantax.sps import axiom1_state_determination, axiom2_atomisticity
from quantax.sepprod import (
    TooLarge,
    biorthogonal_closure,
    enumerate_closed_masks,
    polar,
    product_orthogonality,
    separated_product,
    superselection_witnesses,
    verify_no_go,
)
from quantax.zoo import classical_sps, mo_sps, trivial_sps

from oracles import oracle_closed_subsets, oracle_covering_violations, oracle_weak_modularity_violations


def test_product_orthogonality_mo2_mo2():
    space = product_orthogonality(mo_sps(2), mo_sps(2))
    assert len(space.points) == 16
    i = space.points.index("(p,q)")
    j = space.points.index("(p',q)")
    assert space.perp[i, j]  # p perp p' in the first factor
    k = space.points.index("(q,p)")
    assert not space.perp[i, k]  # p vs q and q vs p: neither orthogonal
    assert not space.perp.diagonal().any()


def test_product_orthogonality_classical_factor():
    space = product_orthogonality(classical_sps(2), mo_sps(2))
    # distinct classical states are orthogonal, so first-coordinate
    # difference forces orthogonality
    for i, pi in enumerate(space.points):
        for j, pj in enumerate(space.points):
            if pi.split(",")[0] != pj.split(",")[0]:
                assert space.perp[i, j]


def test_closure_of_empty_and_full():
    space = product_orthogonality(mo_sps(2), mo_sps(2))
    assert biorthogonal_closure(space, []) == frozenset()
    everything = range(len(space.points))
    assert biorthogonal_closure(space, everything) == frozenset(everything)


def test_closure_of_singleton_is_singleton():
    space = product_orthogonality(mo_sps(2), mo_sps(2))
    assert biorthogonal_closure(space, [5]) == frozenset([5])


def test_closed_sets_match_powerset_oracle_on_trivial_product():
    space = product_orthogonality(trivial_sps(), mo_sps(2))
    assert sorted(enumerate_closed_masks(space)) == sorted(oracle_closed_subsets(space))


def test_closed_sets_match_powerset_oracle_on_mo2_product():
    space = product_orthogonality(mo_sps(2), mo_sps(2))
    assert sorted(enumerate_closed_masks(space)) == sorted(oracle_closed_subsets(space))


def test_closure_operator_laws_on_random_subsets():
    rng = random.Random(2024)
    spaces = [
        product_orthogonality(mo_sps(2), mo_sps(2)),
        product_orthogonality(classical_sps(2), mo_sps(2)),
        product_orthogonality(classical_sps(2), classical_sps(2)),
    ]
    for space in spaces:
        n = len(space.points)
        for _ in range(300):
            s = rng.getrandbits(n)
            t = s | rng.getrandbits(n)  # s subseteq t
            cs, ct = space.closure_mask(s), space.closure_mask(t)
            assert s & ~cs == 0  # extensive
            assert cs & ~ct == 0  # monotone
            assert space.closure_mask(cs) == cs  # idempotent
            ps = space.polar_mask(s)
            assert space.polar_mask(cs) == ps  # triple polar
            assert pt_order_reversed(space, s, t)


def pt_order_reversed(space, s, t):
    # s subseteq t implies polar(t) subseteq polar(s)
    return space.polar_mask(t) & ~space.polar_mask(s) == 0


def test_separated_product_with_trivial_factor_is_the_other_factor():
    mo2 = mo_sps(2)
    product = separated_product(trivial_sps(), mo2)
    assert product.lattice.n == mo2.lattice.n == 6
    assert len(product.lattice.atoms) == 4
    assert check_covering_law(product.lattice).holds
    assert check_weak_modularity(product.lattice, product.ortho).holds


def test_separated_product_mo2_mo2():
    product = separated_product(mo_sps(2), mo_sps(2))
    assert len(product.states) == 16
    assert product.lattice.n == 114
    assert axiom1_state_determination(product).holds
    assert axiom2_atomisticity(product).holds


def test_separated_product_classical_pair_is_full_powerset():
    product = separated_product(classical_sps(2), classical_sps(2))
    assert product.lattice.n == 16  # all subsets of the 4 points are closed
    assert len(product.lattice.atoms) == 4


def test_separated_product_respects_point_bound():
    with pytest.raises(TooLarge):
        separated_product(classical_sps(4), classical_sps(4), max_points=10)


def test_factor_rectangles_are_closed():
    mo2, c2 = mo_sps(2), classical_sps(2)
    space = product_orthogonality(mo2, c2)
    closed = set(enumerate_closed_masks(space))
    n1, n2 = len(mo2.states), len(c2.states)
    for a1 in range(mo2.lattice.n):
        for a2 in range(c2.lattice.n):
            rect = 0
            for p1 in range(n1):
                if mo2.kappa[a1] >> p1 & 1:
                    for p2 in range(n2):
                        if c2.kappa[a2] >> p2 & 1:
                            rect |= 1 << (p1 * n2 + p2)
            assert rect in closed


def test_no_go_mo2_mo2_fails_both_axioms_with_verified_witnesses():
    report = verify_no_go(mo_sps(2), mo_sps(2))
    assert report.factor_classical == (False, False)
    assert not report.covering.holds
    assert not report.weak_modularity.holds
    L = report.product.lattice
    assert report.covering.witnesses[0] in oracle_covering_violations(L)
    assert (
        report.weak_modularity.witnesses[0]
        in oracle_weak_modularity_violations(L, report.product.ortho.map)
    )


def test_no_go_classical_quantum_passes():
    report = verify_no_go(classical_sps(3), mo_sps(3))
    assert report.factor_classical == (True, False)
    assert report.covering.holds
    assert report.weak_modularity.holds


def test_no_go_classical_classical_passes():
    report = verify_no_go(classical_sps(2), classical_sps(2))
    assert report.covering.holds
    assert report.weak_modularity.holds


def test_superselection_pairs_on_mo2_product():
    product = separated_product(mo_sps(2), mo_sps(2))
    pairs = superselection_witnesses(product)
    assert pairs
    L = product.lattice
    state_of = {sp: p for p, sp in enumerate(product.property_states)}
    for p, q in pairs:
        # re-verify against the lattice tables: non-orthogonal, and the join
        # covers exactly these two atoms
        assert not product.state_orthogonality[state_of[p], state_of[q]]
        j = L.join[p, q]
        assert L.atoms_below(j) == (p, q)


def test_superselection_absent_for_mo2_alone():
    assert superselection_witnesses(mo_sps(2)) == []


def test_superselection_absent_for_boolean_product():
    product = separated_product(classical_sps(2), classical_sps(2))
    assert superselection_witnesses(product) == []


def test_product_with_classical_factor_decomposes_into_sectors():
    product = separated_product(classical_sps(2), mo_sps(2))
    comps = nonclassical_components(product)
    assert len(comps) == 2
    assert all(c.sps.lattice.n == 6 for c in comps)
