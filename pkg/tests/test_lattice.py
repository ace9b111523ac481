"""Lattice construction, meet/join semantics, and the axiom checkers."""

import numpy as np
import pytest

from quantax import (
    Orthocomplementation,
    build_lattice,
    check_atomistic,
    check_covering_law,
    check_orthocomplementation,
    check_weak_modularity,
    join_set,
    meet_set,
)
from quantax.lattice import NoBounds, NotALattice, NotAPartialOrder
from quantax.zoo import chain_lattice, mo_lattice, o6_lattice, powerset_lattice

from oracles import (
    brute_atoms,
    brute_join,
    brute_meet,
    oracle_atomistic_violations,
    oracle_covering_violations,
    oracle_weak_modularity_violations,
    subsets_upto,
)

SMALL_ORTHOLATTICES = ["powerset2", "powerset3", "o6", "mo2", "mo3"]


def small_lattices():
    out = {
        "chain3": (chain_lattice(3), None),
        "chain4": (chain_lattice(4), None),
        "powerset2": powerset_lattice(2),
        "powerset3": powerset_lattice(3),
        "o6": o6_lattice(),
        "mo2": mo_lattice(2),
        "mo3": mo_lattice(3),
        "mo4": mo_lattice(4),
    }
    return out


def test_build_chain_total_order():
    L = build_lattice(["0", "a", "1"], cover_pairs=[("0", "a"), ("a", "1")])
    assert [L.names[p] for p in L.atoms] == ["a"]
    # meet/join of a total order are min/max
    for a in range(3):
        for b in range(3):
            assert L.meet[a, b] == min(a, b)
            assert L.join[a, b] == max(a, b)


def test_build_powerset3_boolean():
    L, _ = powerset_lattice(3)
    assert L.n == 8
    assert len(L.atoms) == 3
    assert L.names[L.bottom] == "{}"
    assert L.names[L.top] == "{1,2,3}"


def test_bowtie_has_no_bounds():
    with pytest.raises(NoBounds):
        build_lattice(
            ["a", "b", "c", "d"],
            cover_pairs=[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )


def test_cycle_is_not_a_partial_order():
    with pytest.raises(NotAPartialOrder) as exc:
        build_lattice(["x", "y", "z"], leq_pairs=[("x", "y"), ("y", "z"), ("z", "x")])
    cycle = exc.value.cycle
    assert cycle[0] == cycle[-1]
    assert set(cycle) == {"x", "y", "z"}


def test_missing_infimum_cites_the_pair():
    # x and y are both maximal common lower bounds of a and b
    with pytest.raises(NotALattice) as exc:
        build_lattice(
            ["0", "x", "y", "a", "b", "1"],
            cover_pairs=[
                ("0", "x"), ("0", "y"),
                ("x", "a"), ("x", "b"), ("y", "a"), ("y", "b"),
                ("a", "1"), ("b", "1"),
            ],
        )
    assert exc.value.pair == ("a", "b")
    assert exc.value.kind == "meet"


def test_duplicate_names_rejected():
    with pytest.raises(ValueError):
        build_lattice(["a", "a"], cover_pairs=[("a", "a")])


@pytest.mark.parametrize("name", ["chain3", "chain4", "powerset2", "powerset3", "o6", "mo2", "mo3"])
def test_tables_match_brute_force(name):
    L = small_lattices()[name][0]
    for a in range(L.n):
        for b in range(L.n):
            assert L.meet[a, b] == brute_meet(L, [a, b])
            assert L.join[a, b] == brute_join(L, [a, b])
    assert list(L.atoms) == brute_atoms(L)


@pytest.mark.parametrize("name", ["chain4", "powerset3", "o6", "mo2", "mo3", "mo4"])
def test_meet_set_join_set_all_subsets(name):
    L = small_lattices()[name][0]
    assert L.n <= 12
    for subset in subsets_upto(L.n):
        assert meet_set(L, subset) == (brute_meet(L, subset) if subset else L.top)
        assert join_set(L, subset) == (brute_join(L, subset) if subset else L.bottom)


def test_meet_set_powerset_is_intersection():
    L, _ = powerset_lattice(3)
    got = meet_set(L, [L.index("{1,2}"), L.index("{2,3}")])
    assert L.names[got] == "{2}"


def test_join_set_mo2_two_atoms_is_top():
    L, _ = mo_lattice(2)
    p, q = L.index("p"), L.index("q")
    expected = brute_join(L, [p, q])  # oracle: exhaustive check of the join
    assert expected == L.top
    assert join_set(L, [p, q]) == L.top


def test_empty_meet_and_join_conventions():
    L, _ = powerset_lattice(3)
    assert meet_set(L, []) == L.top
    assert join_set(L, []) == L.bottom


@pytest.mark.parametrize("name", ["chain3", "chain4", "powerset2", "powerset3", "o6", "mo2", "mo3"])
def test_structural_laws(name):
    L = small_lattices()[name][0]
    leq = L.leq
    n = L.n
    assert leq.diagonal().all()  # reflexive
    assert not (leq & leq.T & ~np.eye(n, dtype=bool)).any()  # antisymmetric
    reach = leq.astype(np.int32)
    assert ((reach @ reach > 0) <= leq).all()  # transitive
    for a in range(n):
        assert L.meet[a, a] == a and L.join[a, a] == a  # idempotent
        for b in range(n):
            assert L.meet[a, b] == L.meet[b, a] and L.join[a, b] == L.join[b, a]
            assert L.meet[a, L.join[a, b]] == a  # absorption
            assert L.join[a, L.meet[a, b]] == a
    if n <= 16:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert L.meet[L.meet[a, b], c] == L.meet[a, L.meet[b, c]]
                    assert L.join[L.join[a, b], c] == L.join[a, L.join[b, c]]


def test_atomistic_powerset2():
    L, _ = powerset_lattice(2)
    assert check_atomistic(L).holds


def test_atomistic_chain4_fails_at_midpoint():
    L = chain_lattice(4)
    report = check_atomistic(L)
    assert not report.holds
    assert report.witnesses == ((2,),)  # the element above the single atom
    assert oracle_atomistic_violations(L)[0] == 2


def test_atomistic_mo3():
    L, _ = mo_lattice(3)
    assert check_atomistic(L).holds
    assert oracle_atomistic_violations(L) == []


def test_ortho_powerset_complement_holds():
    L, o = powerset_lattice(3)
    assert check_orthocomplementation(L, o).holds


def test_ortho_identity_fails_complement_law():
    L, _ = powerset_lattice(2)
    report = check_orthocomplementation(L, Orthocomplementation(tuple(range(4))))
    assert not report.holds
    # first witness: the meet complement law at the first atom, a ^ a = a != 0
    a = report.witnesses[0][0]
    assert L.names[a] == "{1}"
    assert L.meet[a, a] == a != L.bottom


def test_ortho_mo2_holds():
    L, o = mo_lattice(2)
    assert check_orthocomplementation(L, o).holds


@pytest.mark.parametrize("name,holds", [("powerset3", True), ("mo2", True), ("mo3", True), ("o6", False)])
def test_covering_law(name, holds):
    L = small_lattices()[name][0]
    report = check_covering_law(L)
    assert report.holds is holds
    violations = oracle_covering_violations(L)
    assert (not violations) is holds
    if not holds:
        assert report.witnesses[0] in violations


def test_covering_o6_witness_frozen():
    L, _ = o6_lattice()
    report = check_covering_law(L)
    # a < b' < a v b = 1, with names [0, a, b, a', b', 1]
    assert report.witnesses == ((1, 2, 4),)


@pytest.mark.parametrize("name,holds", [("powerset3", True), ("mo2", True), ("o6", False)])
def test_weak_modularity(name, holds):
    L, o = small_lattices()[name]
    report = check_weak_modularity(L, o)
    assert report.holds is holds
    violations = oracle_weak_modularity_violations(L, o.map)
    assert (not violations) is holds
    if not holds:
        assert report.witnesses[0] in violations


def test_weak_modularity_o6_witness_frozen():
    L, o = o6_lattice()
    report = check_weak_modularity(L, o)
    assert report.witnesses == ((1, 4),)  # (a, b')


def test_weak_modularity_requires_valid_ortho():
    L, _ = powerset_lattice(2)
    with pytest.raises(ValueError):
        check_weak_modularity(L, Orthocomplementation(tuple(range(4))))


@pytest.mark.parametrize("name", SMALL_ORTHOLATTICES)
def test_duality_of_covering_and_weak_modularity(name):
    L, o = small_lattices()[name]
    D = L.dual()
    # verdicts agree between a lattice and its order dual under the same '
    cov, cov_d = check_covering_law(L), check_covering_law(D)
    assert cov.holds == cov_d.holds
    wm, wm_d = check_weak_modularity(L, o), check_weak_modularity(D, o)
    assert wm.holds == wm_d.holds
    # dual witnesses map across through the orthocomplementation
    if not cov_d.holds:
        a, p, x = cov_d.witnesses[0]
        a2, p2, x2 = o(a), o(p), o(x)
        assert (a2, p2, x2) in oracle_covering_violations(L)
    if not wm_d.holds:
        a, b = wm_d.witnesses[0]
        assert (o(a), o(b)) in oracle_weak_modularity_violations(L, o.map)


@pytest.mark.parametrize("name", SMALL_ORTHOLATTICES)
def test_de_morgan_from_orthocomplementation(name):
    L, o = small_lattices()[name]
    for a in range(L.n):
        for b in range(L.n):
            assert o(L.join[a, b]) == L.meet[o(a), o(b)]


def test_dual_atoms_are_coatoms():
    L, _ = mo_lattice(2)
    coatoms = {
        a
        for a in range(L.n)
        if a != L.top and [x for x in range(L.n) if L.leq[a, x] and x != a] == [L.top]
    }
    assert set(L.dual().atoms) == coatoms
