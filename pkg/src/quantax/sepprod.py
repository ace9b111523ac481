"""Separated product of two state-property systems via biorthogonal closure.

The joint state space is the Cartesian product of the factor state spaces,
with two product states orthogonal when they are orthogonal in either
factor. The joint property lattice is realized as the biorthogonally closed
subsets of that orthogonality space: closed sets are exactly the
intersections of point polars, so enumeration never scans the full power
set. The resulting lattice is where the no-go behaviour lives: with both
factors nonclassical it violates the covering law and weak modularity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decomposition import is_classical_system
from .errors import QuantaxError
from .lattice import Orthocomplementation, check_covering_law, check_weak_modularity, lattice_from_leq
from .report import AxiomReport
from .sps import StatePropertySystem, make_sps, require_axioms_1_2


class TooLarge(QuantaxError):
    pass


@dataclass(frozen=True, eq=False)
class OrthoSpace:
    """A finite point set with a symmetric, anti-reflexive orthogonality."""

    points: tuple[str, ...]
    perp: np.ndarray
    polars: tuple[int, ...]  # per point x, bitmask of {y : y perp x}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def polar_mask(self, mask: int) -> int:
        """Bitmask of points orthogonal to every point in mask."""
        acc = self.full_mask
        x = 0
        while mask:
            if mask & 1:
                acc &= self.polars[x]
            mask >>= 1
            x += 1
        return acc

    def closure_mask(self, mask: int) -> int:
        return self.polar_mask(self.polar_mask(mask))


def ortho_space(points, perp) -> OrthoSpace:
    perp = np.asarray(perp, dtype=bool)
    n = len(points)
    if perp.shape != (n, n):
        raise ValueError("perp matrix shape does not match point count")
    if perp.diagonal().any():
        raise ValueError("orthogonality must be anti-reflexive")
    if not (perp == perp.T).all():
        raise ValueError("orthogonality must be symmetric")
    polars = tuple(int(sum(1 << y for y in np.flatnonzero(perp[:, x]))) for x in range(n))
    perp = perp.copy()
    perp.setflags(write=False)
    return OrthoSpace(tuple(points), perp, polars)


def product_orthogonality(sps1: StatePropertySystem, sps2: StatePropertySystem) -> OrthoSpace:
    """Product state space with coordinatewise-or orthogonality.

    (p1, p2) perp (q1, q2) iff p1 perp q1 in the first factor or p2 perp q2
    in the second. Point order is row-major in the first factor.
    """
    require_axioms_1_2(sps1, "product_orthogonality factor 1")
    require_axioms_1_2(sps2, "product_orthogonality factor 2")
    n1, n2 = len(sps1.states), len(sps2.states)
    points = [f"({s1},{s2})" for s1 in sps1.states for s2 in sps2.states]
    ones1 = np.ones((n1, n1), dtype=bool)
    ones2 = np.ones((n2, n2), dtype=bool)
    perp = np.kron(sps1.state_orthogonality, ones2) | np.kron(ones1, sps2.state_orthogonality)
    return ortho_space(points, perp)


def biorthogonal_closure(space: OrthoSpace, subset) -> frozenset:
    """S -> S-perp-perp; extensive, monotone and idempotent."""
    mask = 0
    for x in subset:
        mask |= 1 << x
    closed = space.closure_mask(mask)
    return frozenset(x for x in range(len(space.points)) if closed >> x & 1)


def polar(space: OrthoSpace, subset) -> frozenset:
    mask = 0
    for x in subset:
        mask |= 1 << x
    pol = space.polar_mask(mask)
    return frozenset(x for x in range(len(space.points)) if pol >> x & 1)


def enumerate_closed_masks(space: OrthoSpace) -> list[int]:
    """All biorthogonally closed subsets, as bitmasks.

    Closed sets are exactly the intersections of point polars (plus the full
    set, the empty intersection), ordered by (size, mask) ascending.
    """
    closed = {space.full_mask}
    for pm in space.polars:
        closed |= {s & pm for s in closed}
    return sorted(closed, key=lambda m: (bin(m).count("1"), m))


def _set_label(mask: int, points) -> str:
    return "{" + ",".join(points[x] for x in range(len(points)) if mask >> x & 1) + "}"


def separated_product(
    sps1: StatePropertySystem, sps2: StatePropertySystem, max_points: int = 64
) -> StatePropertySystem:
    """Joint system of two separated entities.

    States are the product points; properties are the biorthogonally closed
    point sets ordered by inclusion, with meet = intersection, join =
    closure of union, orthocomplement = polar, and kappa the identity
    embedding. Verified to satisfy Axioms 1-3 and to contain every factor
    rectangle kappa1(a1) x kappa2(a2) as a closed set.
    """
    n_points = len(sps1.states) * len(sps2.states)
    if n_points > max_points:
        raise TooLarge(
            f"product state space has {n_points} points, above the bound {max_points}"
        )
    space = product_orthogonality(sps1, sps2)
    masks = enumerate_closed_masks(space)
    index = {m: i for i, m in enumerate(masks)}

    arr = np.array(masks, dtype=np.uint64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    lattice = lattice_from_leq([_set_label(m, space.points) for m in masks], leq)
    ortho = Orthocomplementation(tuple(index[space.polar_mask(m)] for m in masks))
    product = make_sps(space.points, lattice, ortho, masks)
    require_axioms_1_2(product, "separated_product result")

    n2 = len(sps2.states)
    for a1 in range(sps1.lattice.n):
        for a2 in range(sps2.lattice.n):
            rect = 0
            m1, m2 = sps1.kappa[a1], sps2.kappa[a2]
            for p1 in range(len(sps1.states)):
                if m1 >> p1 & 1:
                    for p2 in range(len(sps2.states)):
                        if m2 >> p2 & 1:
                            rect |= 1 << (p1 * n2 + p2)
            if rect not in index:
                raise AssertionError(
                    "factor rectangle is not biorthogonally closed: "
                    f"{sps1.lattice.names[a1]} x {sps2.lattice.names[a2]}"
                )
    return product


@dataclass(frozen=True, eq=False)
class NoGoReport:
    """Covering-law and weak-modularity verdicts on a separated product."""

    covering: AxiomReport
    weak_modularity: AxiomReport
    factor_classical: tuple[bool, bool]
    product: StatePropertySystem


def verify_no_go(
    sps1: StatePropertySystem, sps2: StatePropertySystem, max_points: int = 64
) -> NoGoReport:
    """Check both no-go axioms on the separated product of the factors.

    When neither factor is classical, the covering law and weak modularity
    must both fail; that contrapositive is re-asserted here because its
    violation would mean the product construction is broken.
    """
    product = separated_product(sps1, sps2, max_points=max_points)
    covering = check_covering_law(product.lattice)
    wm = check_weak_modularity(product.lattice, product.ortho)
    factor_classical = (is_classical_system(sps1), is_classical_system(sps2))
    if not factor_classical[0] and not factor_classical[1]:
        if covering.holds or wm.holds:
            raise AssertionError(
                "no-go violated: both factors nonclassical but an axiom holds"
            )
    return NoGoReport(covering, wm, factor_classical, product)


def superselection_witnesses(product_sps: StatePropertySystem) -> list[tuple[int, int]]:
    """Non-orthogonal atom pairs whose join dominates no third atom.

    Each returned pair is superselected: there is no superposition atom under
    the join of the two. Element indices are returned, ascending.
    """
    require_axioms_1_2(product_sps, "superselection_witnesses")
    L = product_sps.lattice
    state_of = {sp: p for p, sp in enumerate(product_sps.property_states)}
    out = []
    for i, p in enumerate(L.atoms):
        for q in L.atoms[i + 1 :]:
            sp, sq = state_of.get(p), state_of.get(q)
            if sp is None or sq is None:
                continue
            if product_sps.state_orthogonality[sp, sq]:
                continue
            j = L.join[p, q]
            if L.atoms_below(j) == (p, q):
                out.append((p, q))
    return out
