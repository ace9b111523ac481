"""State-property systems: states, a property lattice, and a Cartan map.

The Cartan map kappa sends each property to the set of states in which it is
actual; it is stored as one bitmask per property over state indices, so the
meet condition kappa(a ^ b) = kappa(a) & kappa(b) is a bitwise AND. States
and properties are index-based; labels are carried only for reporting.

A system that fails an axiom is still a valid object: the axiom checkers
diagnose, they never reject, because the no-go workflow deliberately builds
axiom-violating systems.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import AxiomsNotSatisfied, QuantaxError
from .lattice import FiniteLattice, Orthocomplementation, check_orthocomplementation, meet_set
from .report import AxiomReport, failed, passed


class CartanMeetViolation(QuantaxError):
    pass


class CartanBoundsViolation(QuantaxError):
    pass


class KappaNotInjective(QuantaxError):
    pass


@dataclass(frozen=True)
class PropertyState:
    """A state identified with the meet of all properties actual in it.

    Under Axioms 1-2 the map state -> element is one-to-one onto the atoms,
    and membership p in kappa(a) is equivalent to element <= a.
    """

    state: int
    element: int


@dataclass(frozen=True, eq=False)
class StatePropertySystem:
    """Validated triple (states, property lattice with ', Cartan map)."""

    states: tuple[str, ...]
    lattice: FiniteLattice
    ortho: Orthocomplementation
    kappa: tuple[int, ...]  # bitmask over state indices, one per property
    property_states: tuple[int, ...]  # s(p) per state: meet of its actual properties
    state_orthogonality: np.ndarray  # symmetric boolean matrix over states

    @property
    def state_count(self) -> int:
        return len(self.states)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.states)) - 1

    def kappa_states(self, a: int) -> tuple[int, ...]:
        """State indices in which property a is actual."""
        mask = self.kappa[a]
        return tuple(p for p in range(len(self.states)) if mask >> p & 1)

    def property_state(self, p: int) -> PropertyState:
        return PropertyState(p, self.property_states[p])

    def __repr__(self):
        return (
            f"StatePropertySystem(states={len(self.states)}, "
            f"properties={self.lattice.n})"
        )


def _as_mask(entry, n_states) -> int:
    if isinstance(entry, int):
        mask = entry
    else:
        mask = 0
        for p in entry:
            mask |= 1 << p
    if mask >> n_states:
        raise ValueError("kappa references a state index out of range")
    return mask


def make_sps(states, lattice: FiniteLattice, ortho: Orthocomplementation, kappa) -> StatePropertySystem:
    """Validate and assemble a state-property system.

    kappa maps each property to a state set, given per property either as an
    iterable of state indices or directly as a bitmask. All three Cartan
    conditions are verified: meets over all pairs, over every element's
    upper set, and over every element's atom decomposition; bounds; and
    injectivity.
    """
    states = tuple(states)
    n_states = len(states)
    ortho_report = check_orthocomplementation(lattice, ortho)
    if not ortho_report.holds:
        raise AxiomsNotSatisfied(
            "orthocomplementation fails Axiom 3: " + ortho_report.detail,
            [ortho_report],
        )
    kappa = tuple(_as_mask(entry, n_states) for entry in kappa)
    if len(kappa) != lattice.n:
        raise ValueError("kappa must assign a state set to every property")

    full = (1 << n_states) - 1
    seen: dict[int, int] = {}
    for a, mask in enumerate(kappa):
        if mask in seen:
            raise KappaNotInjective(
                f"properties {lattice.names[seen[mask]]} and {lattice.names[a]} "
                "have identical state sets"
            )
        seen[mask] = a

    if kappa[lattice.bottom] != 0:
        raise CartanBoundsViolation("kappa(0) must be empty")
    if kappa[lattice.top] != full:
        raise CartanBoundsViolation("kappa(I) must be the full state set")

    for a in range(lattice.n):
        for b in range(a, lattice.n):
            m = lattice.meet[a, b]
            if kappa[m] != kappa[a] & kappa[b]:
                raise CartanMeetViolation(
                    f"kappa({lattice.names[a]} ^ {lattice.names[b]}) != "
                    f"kappa({lattice.names[a]}) & kappa({lattice.names[b]})"
                )

    for a in range(lattice.n):
        upper = [b for b in range(lattice.n) if lattice.leq[a, b]]
        acc = full
        for b in upper:
            acc &= kappa[b]
        if acc != kappa[a]:
            raise CartanMeetViolation(
                f"kappa over the upper set of {lattice.names[a]} does not "
                "intersect to kappa of the element"
            )

    for a in range(lattice.n):
        atoms = lattice.atoms_below(a)
        m = meet_set(lattice, atoms)
        acc = full
        for p in atoms:
            acc &= kappa[p]
        if kappa[m] != acc:
            raise CartanMeetViolation(
                f"kappa over the atom decomposition of {lattice.names[a]} "
                "does not intersect to kappa of their meet"
            )

    prop_states = tuple(
        meet_set(lattice, [a for a in range(lattice.n) if kappa[a] >> p & 1])
        for p in range(n_states)
    )

    omap = ortho.as_array()
    orth = np.zeros((n_states, n_states), dtype=bool)
    leq = lattice.leq
    for p in range(n_states):
        sp = prop_states[p]
        for q in range(p + 1, n_states):
            sq = prop_states[q]
            if bool(np.any(leq[sp, :] & leq[sq, omap])):
                orth[p, q] = orth[q, p] = True
    orth.setflags(write=False)

    return StatePropertySystem(
        states=states,
        lattice=lattice,
        ortho=ortho,
        kappa=kappa,
        property_states=prop_states,
        state_orthogonality=orth,
    )


def axiom1_state_determination(sps: StatePropertySystem) -> AxiomReport:
    """Distinct states are distinguished by their sets of actual properties."""
    seen: dict[int, int] = {}
    for p, sp in enumerate(sps.property_states):
        if sp in seen:
            return failed(
                "state_determination",
                [(seen[sp], p)],
                f"states {sps.states[seen[sp]]} and {sps.states[p]} share the "
                f"property state {sps.lattice.names[sp]}",
            )
        seen[sp] = p
    return passed("state_determination")


def axiom2_atomisticity(sps: StatePropertySystem) -> AxiomReport:
    """The property state of every state is an atom of the lattice."""
    atom_set = set(sps.lattice.atoms)
    for p, sp in enumerate(sps.property_states):
        if sp not in atom_set:
            return failed(
                "state_atomisticity",
                [(p,)],
                f"property state of {sps.states[p]} is {sps.lattice.names[sp]}, "
                "not an atom",
            )
    return passed("state_atomisticity")


def check_axioms_1_2(sps: StatePropertySystem) -> tuple[AxiomReport, AxiomReport]:
    return axiom1_state_determination(sps), axiom2_atomisticity(sps)


def require_axioms_1_2(sps: StatePropertySystem, context: str):
    reports = check_axioms_1_2(sps)
    bad = [r for r in reports if not r.holds]
    if bad:
        raise AxiomsNotSatisfied(
            f"{context} requires Axioms 1-2; failing: "
            + ", ".join(r.label for r in bad),
            bad,
        )


def property_state_form(sps: StatePropertySystem) -> StatePropertySystem:
    """Rewrite the system over its property states (the atoms s(p)).

    Requires Axioms 1-2. The result has the same lattice and Cartan data with
    states relabelled by the atoms they determine; the relabelling bijection
    is verified to commute with kappa.
    """
    require_axioms_1_2(sps, "property_state_form")
    order = sorted(range(len(sps.states)), key=lambda p: sps.property_states[p])
    new_labels = tuple(sps.lattice.names[sps.property_states[p]] for p in order)
    # position of old state p in the new ordering
    pos = {p: i for i, p in enumerate(order)}
    new_kappa = []
    for a in range(sps.lattice.n):
        mask = 0
        for p in range(len(sps.states)):
            if sps.kappa[a] >> p & 1:
                mask |= 1 << pos[p]
        new_kappa.append(mask)
    new = make_sps(new_labels, sps.lattice, sps.ortho, new_kappa)
    for a in range(sps.lattice.n):
        expected = {pos[p] for p in range(len(sps.states)) if sps.kappa[a] >> p & 1}
        if set(new.kappa_states(a)) != expected:
            raise AssertionError("state bijection does not commute with kappa")
    return new


def orthogonal_states(sps: StatePropertySystem, p: int, q: int) -> bool:
    """True iff some property a has s(p) <= a and s(q) <= a'."""
    return bool(sps.state_orthogonality[p, q])


def count_pairwise_orthogonal(sps: StatePropertySystem) -> int:
    """Maximum size of a pairwise-orthogonal state set (exact, exhaustive)."""
    n = len(sps.states)
    if n == 0:
        return 0
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for p in range(n):
        for q in range(p + 1, n):
            if sps.state_orthogonality[p, q]:
                g.add_edge(p, q)
    return max(len(c) for c in nx.find_cliques(g))
