"""State-property systems: Cartan conditions, Axioms 1-2, orthogonality."""

import pytest

from quantax import Orthocomplementation
from quantax.errors import AxiomsNotSatisfied
from quantax.sps import (
    CartanBoundsViolation,
    CartanMeetViolation,
    KappaNotInjective,
    axiom1_state_determination,
    axiom2_atomisticity,
    count_pairwise_orthogonal,
    make_sps,
    orthogonal_states,
    property_state_form,
)
from quantax.zoo import classical_sps, mo_sps, o6_sps, powerset_lattice, trivial_sps

from oracles import oracle_orthogonal_states


def test_classical_model_is_valid():
    # identity Cartan map on the power set
    sps = classical_sps(3)
    assert sps.state_count == 3
    assert sps.kappa[sps.lattice.top] == 0b111


def test_mo2_toy_is_valid():
    sps = mo_sps(2)
    assert sps.state_count == 4
    # kappa of an atom is exactly that atom's state
    p = sps.lattice.index("p")
    assert sps.kappa_states(p) == (0,)


def test_constant_kappa_is_not_injective():
    L, o = powerset_lattice(2)
    full = [0, 1]
    with pytest.raises(KappaNotInjective):
        make_sps(["1", "2"], L, o, [full, full, full, full])


def test_kappa_bounds_enforced():
    L, o = powerset_lattice(2)
    with pytest.raises(CartanBoundsViolation):
        make_sps(["1", "2"], L, o, [[0], [], [1], [0, 1]])


def test_kappa_meet_condition_enforced():
    L, o = powerset_lattice(2)
    # kappa({1}) and kappa({2}) intersect but kappa({}) is empty
    with pytest.raises(CartanMeetViolation):
        make_sps(["1", "2", "3"], L, o, [[], [0, 1], [1, 2], [0, 1, 2]])


def test_invalid_ortho_rejected():
    L, _ = powerset_lattice(2)
    with pytest.raises(AxiomsNotSatisfied):
        make_sps(["1", "2"], L, Orthocomplementation((0, 1, 2, 3)), [[], [0], [1], [0, 1]])


def test_axiom1_holds_for_toys():
    assert axiom1_state_determination(mo_sps(2)).holds
    assert axiom1_state_determination(classical_sps(3)).holds


def test_axiom1_fails_for_duplicated_state():
    # two states living in exactly the same kappa sets
    L, o = powerset_lattice(2)
    sps = make_sps(
        ["1a", "1b", "2"], L, o, [[], [0, 1], [2], [0, 1, 2]]
    )
    report = axiom1_state_determination(sps)
    assert not report.holds
    assert report.witnesses == ((0, 1),)


def test_axiom2_holds_for_toys():
    assert axiom2_atomisticity(classical_sps(3)).holds
    assert axiom2_atomisticity(mo_sps(2)).holds


def test_axiom2_fails_on_midchain_state():
    # a chain itself admits no orthocomplementation, so the mid-chain failure
    # lives on O6, which contains the 4-chain 0 < a < b' < 1: the state z is
    # actual exactly for properties above b', so its property state is b'
    sps = o6_sps()
    assert axiom1_state_determination(sps).holds
    report = axiom2_atomisticity(sps)
    assert not report.holds
    assert report.witnesses == ((2,),)
    assert sps.states[2] == "z"
    assert sps.lattice.names[sps.property_states[2]] == "b'"


def test_property_state_form_relabels_by_atoms():
    sps = mo_sps(2)
    psf = property_state_form(sps)
    assert set(psf.states) == {"p", "p'", "q", "q'"}
    assert psf.lattice is sps.lattice
    # kappa commutes with the relabelling
    for a in range(sps.lattice.n):
        got = {psf.states[i] for i in psf.kappa_states(a)}
        expected = {
            sps.lattice.names[sps.property_states[p]] for p in sps.kappa_states(a)
        }
        assert got == expected


def test_property_state_form_idempotent():
    sps = mo_sps(3)
    once = property_state_form(sps)
    twice = property_state_form(once)
    assert once.states == twice.states
    assert once.kappa == twice.kappa


def test_property_state_form_classical():
    psf = property_state_form(classical_sps(2))
    assert set(psf.states) == {"{1}", "{2}"}


def test_property_state_form_requires_axioms():
    with pytest.raises(AxiomsNotSatisfied):
        property_state_form(o6_sps())


def test_orthogonal_states_mo2():
    sps = mo_sps(2)
    p, p_prime, q = 0, 1, 2  # states in atom order p, p', q, q'
    assert orthogonal_states(sps, p, p_prime)
    assert not orthogonal_states(sps, p, q)
    assert not orthogonal_states(sps, p, p)
    for a in range(sps.state_count):
        for b in range(sps.state_count):
            assert sps.state_orthogonality[a, b] == sps.state_orthogonality[b, a]
            if a != b:
                assert orthogonal_states(sps, a, b) == oracle_orthogonal_states(sps, a, b)


def test_kappa_monotone():
    for sps in (mo_sps(2), classical_sps(3), mo_sps(3)):
        L = sps.lattice
        for a in range(L.n):
            for b in range(L.n):
                if L.leq[a, b]:
                    assert sps.kappa[a] & ~sps.kappa[b] == 0


def test_membership_iff_property_state_below():
    for sps in (mo_sps(2), classical_sps(3)):
        L = sps.lattice
        for p in range(sps.state_count):
            assert sps.property_state(p).element == sps.property_states[p]
            for a in range(L.n):
                assert (sps.kappa[a] >> p & 1 == 1) == bool(
                    L.leq[sps.property_states[p], a]
                )


def test_count_pairwise_orthogonal():
    assert count_pairwise_orthogonal(mo_sps(2)) == 2
    assert count_pairwise_orthogonal(classical_sps(4)) == 4
    assert count_pairwise_orthogonal(trivial_sps()) == 1
