"""Classical part extraction, nonclassical components, and direct unions.

A property is classical when every state makes it or its orthocomplement
actual. The classical states omega(p) index the nonclassical components
(the sublattices below each omega with the states in kappa(omega)), and the
whole system is reconstructed, up to verified isomorphism, as the direct
union of those components.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import AxiomsNotSatisfied, QuantaxError
from .lattice import (
    FiniteLattice,
    Orthocomplementation,
    check_covering_law,
    check_weak_modularity,
    lattice_from_leq,
    meet_set,
)
from .sps import StatePropertySystem, make_sps, property_state_form, require_axioms_1_2


class ComponentInvalid(QuantaxError):
    pass


class IsomorphismNotFound(QuantaxError):
    """The representation isomorphism failed to verify; this indicates an
    implementation bug or an input outside the theorem's scope."""


@dataclass(frozen=True, eq=False)
class ClassicalPart:
    """Classical properties C, classical states Omega, and the classical Cartan map."""

    classical_properties: tuple[int, ...]
    classical_states: tuple[int, ...]  # Omega, as lattice elements, ascending
    omega_map: tuple[int, ...]  # state index -> its classical state element
    kappa_c: dict[int, int]  # classical property -> bitmask over Omega indices


@dataclass(frozen=True, eq=False)
class NonclassicalComponent:
    """One sector of the system: everything below one classical state."""

    omega: int
    element_map: tuple[int, ...]  # component element -> parent element
    state_map: tuple[int, ...]  # component state -> parent state
    sps: StatePropertySystem


def classical_properties(sps: StatePropertySystem) -> tuple[int, ...]:
    """Elements a with every state in kappa(a) or kappa(a')."""
    full = sps.full_mask
    return tuple(
        a
        for a in range(sps.lattice.n)
        if sps.kappa[a] | sps.kappa[sps.ortho(a)] == full
    )


def is_classical_system(sps: StatePropertySystem) -> bool:
    """True iff every property of the system is classical."""
    return len(classical_properties(sps)) == sps.lattice.n


def classical_part(sps: StatePropertySystem) -> ClassicalPart:
    """Extract (C, Omega, omega, kappa_c) and verify kappa_c is an isomorphism
    onto the power set of Omega."""
    require_axioms_1_2(sps, "classical_part")
    L = sps.lattice
    C = classical_properties(sps)
    c_set = set(C)

    omega_map = tuple(
        meet_set(L, [a for a in C if sps.kappa[a] >> p & 1])
        for p in range(len(sps.states))
    )
    omega = tuple(sorted(set(omega_map)))
    omega_pos = {w: i for i, w in enumerate(omega)}

    kappa_c = {}
    for a in C:
        mask = 0
        for p in range(len(sps.states)):
            if sps.kappa[a] >> p & 1:
                mask |= 1 << omega_pos[omega_map[p]]
        kappa_c[a] = mask

    _verify_classical_isomorphism(sps, C, c_set, omega, kappa_c)
    return ClassicalPart(C, omega, omega_map, kappa_c)


def _verify_classical_isomorphism(sps, C, c_set, omega, kappa_c):
    L = sps.lattice
    if len(C) != 2 ** len(omega):
        raise IsomorphismNotFound(
            f"|C| = {len(C)} does not match 2^|Omega| = {2 ** len(omega)}"
        )
    if len(set(kappa_c.values())) != len(C):
        raise IsomorphismNotFound("classical Cartan map is not injective")
    for a in C:
        if sps.ortho(a) not in c_set:
            raise IsomorphismNotFound("C is not closed under orthocomplement")
        if kappa_c[sps.ortho(a)] != kappa_c[a] ^ ((1 << len(omega)) - 1):
            raise IsomorphismNotFound("kappa_c does not send ' to set complement")
        for b in C:
            m = L.meet[a, b]
            if m not in c_set:
                raise IsomorphismNotFound("C is not closed under meets")
            if kappa_c[m] != kappa_c[a] & kappa_c[b]:
                raise IsomorphismNotFound("kappa_c does not send meets to intersections")
            if bool(L.leq[a, b]) != (kappa_c[a] & ~kappa_c[b] == 0):
                raise IsomorphismNotFound("kappa_c is not an order isomorphism")


def nonclassical_components(sps: StatePropertySystem) -> list[NonclassicalComponent]:
    """One component per classical state, repackaged as a state-property system."""
    cp = classical_part(sps)
    L = sps.lattice
    out = []
    for w in cp.classical_states:
        elements = tuple(int(a) for a in np.flatnonzero(L.leq[:, w]))
        pos = {a: i for i, a in enumerate(elements)}
        sub_leq = L.leq[np.ix_(elements, elements)]
        sub_lattice = lattice_from_leq([L.names[a] for a in elements], sub_leq)
        # sectional complement b -> b' ^ omega
        sub_ortho = Orthocomplementation(
            tuple(pos[int(L.meet[sps.ortho(a), w])] for a in elements)
        )
        state_map = tuple(
            p for p in range(len(sps.states)) if sps.kappa[w] >> p & 1
        )
        spos = {p: i for i, p in enumerate(state_map)}
        sub_kappa = []
        for a in elements:
            mask = 0
            for p in state_map:
                if sps.kappa[a] >> p & 1:
                    mask |= 1 << spos[p]
            sub_kappa.append(mask)
        comp_sps = make_sps(
            [sps.states[p] for p in state_map], sub_lattice, sub_ortho, sub_kappa
        )
        trivial = {comp_sps.lattice.bottom, comp_sps.lattice.top}
        if set(classical_properties(comp_sps)) != trivial:
            raise IsomorphismNotFound(
                f"component below {L.names[w]} has nontrivial classical properties"
            )
        out.append(
            NonclassicalComponent(
                omega=w, element_map=elements, state_map=state_map, sps=comp_sps
            )
        )
    return out


def _mixed_radix(digits, sizes) -> int:
    idx = 0
    for d, s in zip(digits, sizes):
        idx = idx * s + d
    return idx


def _digits(idx, sizes):
    out = [0] * len(sizes)
    for k in range(len(sizes) - 1, -1, -1):
        out[k] = idx % sizes[k]
        idx //= sizes[k]
    return out


def direct_union(components: list[StatePropertySystem]) -> StatePropertySystem:
    """Index-wise product of the component systems.

    Properties are sequences (a_w)_w with componentwise order, meet, join and
    orthocomplement; states are the disjoint union of component states,
    tagged with the component index; kappa of a sequence is the union of the
    component kappas.
    """
    if not components:
        raise ComponentInvalid("direct union needs at least one component")
    for i, c in enumerate(components):
        try:
            require_axioms_1_2(c, f"direct_union component {i}")
        except AxiomsNotSatisfied as e:
            raise ComponentInvalid(str(e)) from e

    sizes = [c.lattice.n for c in components]
    total = prod(sizes)
    leq = np.ones((1, 1), dtype=bool)
    for c in components:
        leq = np.kron(leq, c.lattice.leq)
    names = []
    for idx in range(total):
        ds = _digits(idx, sizes)
        names.append("(" + " | ".join(c.lattice.names[d] for c, d in zip(components, ds)) + ")")
    lattice = lattice_from_leq(names, leq)

    ortho = Orthocomplementation(
        tuple(
            _mixed_radix(
                [c.ortho(d) for c, d in zip(components, _digits(idx, sizes))], sizes
            )
            for idx in range(total)
        )
    )

    states = []
    offsets = []
    for i, c in enumerate(components):
        offsets.append(len(states))
        states.extend(f"{i}:{s}" for s in c.states)

    kappa = []
    for idx in range(total):
        mask = 0
        for (c, off), d in zip(zip(components, offsets), _digits(idx, sizes)):
            mask |= c.kappa[d] << off
        kappa.append(mask)

    return make_sps(states, lattice, ortho, kappa)


@dataclass(frozen=True, eq=False)
class RepresentationWitness:
    """Explicit isomorphism data returned by verify_representation_part1."""

    classical: ClassicalPart
    components: tuple[NonclassicalComponent, ...]
    union: StatePropertySystem
    lhs: StatePropertySystem  # property-state form of the input
    state_bijection: tuple[int, ...]  # lhs state index -> union state index
    property_bijection: tuple[int, ...]  # lhs element -> union element


def _psf_order(sps: StatePropertySystem) -> list[int]:
    # state ordering used by property_state_form: ascending property state
    return sorted(range(len(sps.states)), key=lambda p: sps.property_states[p])


def verify_representation_part1(sps: StatePropertySystem) -> RepresentationWitness:
    """Decompose, rebuild the direct union, and verify the isomorphism.

    The canonical map sends a state to (its component, its property state)
    and a property a to the sequence (a ^ omega)_omega. Both maps are checked
    bit-for-bit against order, orthocomplement and kappa tables. If the input
    also satisfies the covering law and weak modularity, every component must
    too; a violation of that transport raises IsomorphismNotFound.
    """
    require_axioms_1_2(sps, "verify_representation_part1")
    cp = classical_part(sps)
    comps = nonclassical_components(sps)
    psf_comps = [property_state_form(c.sps) for c in comps]
    union = direct_union(psf_comps)
    lhs = property_state_form(sps)

    L = sps.lattice
    sizes = [c.sps.lattice.n for c in comps]
    comp_of_omega = {c.omega: k for k, c in enumerate(comps)}
    offsets = []
    acc = 0
    for c in comps:
        offsets.append(acc)
        acc += len(c.sps.states)

    lhs_order = _psf_order(sps)
    state_bij = []
    for i, p in enumerate(lhs_order):
        k = comp_of_omega[cp.omega_map[p]]
        comp = comps[k]
        m_idx = comp.state_map.index(p)
        psf_idx = _psf_order(comp.sps).index(m_idx)
        state_bij.append(offsets[k] + psf_idx)
    if len(set(state_bij)) != union.state_count or union.state_count != len(state_bij):
        raise IsomorphismNotFound("state map is not a bijection")

    elem_pos = [
        {a: i for i, a in enumerate(c.element_map)} for c in comps
    ]
    prop_bij = []
    for a in range(L.n):
        digits = [
            elem_pos[k][int(L.meet[a, c.omega])] for k, c in enumerate(comps)
        ]
        prop_bij.append(_mixed_radix(digits, sizes))
    if len(set(prop_bij)) != L.n or union.lattice.n != L.n:
        raise IsomorphismNotFound(
            f"property map is not a bijection ({L.n} properties vs "
            f"{union.lattice.n} in the union)"
        )

    f = np.asarray(prop_bij)
    if not (union.lattice.leq[np.ix_(f, f)] == L.leq).all():
        raise IsomorphismNotFound("property map does not preserve the order")
    for a in range(L.n):
        if prop_bij[sps.ortho(a)] != union.ortho(prop_bij[a]):
            raise IsomorphismNotFound("property map does not commute with '")
    for a in range(L.n):
        mapped = 0
        for i in range(len(lhs.states)):
            p = lhs_order[i]
            if sps.kappa[a] >> p & 1:
                mapped |= 1 << state_bij[i]
        if mapped != union.kappa[prop_bij[a]]:
            raise IsomorphismNotFound("property map does not commute with kappa")

    if check_covering_law(L).holds:
        for c in comps:
            if not check_covering_law(c.sps.lattice).holds:
                raise IsomorphismNotFound(
                    "covering law does not transport to a component"
                )
    if check_weak_modularity(L, sps.ortho).holds:
        for c in comps:
            if not check_weak_modularity(c.sps.lattice, c.sps.ortho).holds:
                raise IsomorphismNotFound(
                    "weak modularity does not transport to a component"
                )

    return RepresentationWitness(
        classical=cp,
        components=tuple(comps),
        union=union,
        lhs=lhs,
        state_bijection=tuple(state_bij),
        property_bijection=tuple(prop_bij),
    )
