"""Finite bounded lattices with explicit order matrices and meet/join tables.

Elements are integer indices into a ``names`` tuple. The order relation is a
dense boolean matrix (models stay small, at most a few thousand elements);
meet and join tables are computed once at construction and all later checks
are table lookups. Everything is immutable after construction, so lattices
can be shared freely between threads.

Checkers return :class:`~quantax.report.AxiomReport` and never mutate: a
lattice that fails an axiom remains usable for diagnosis. Witness selection
is deterministic (lexicographically first violation in element-index order).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import backends
from .errors import QuantaxError
from .report import AxiomReport, failed, passed


class NotAPartialOrder(QuantaxError):
    """Antisymmetry violation; ``cycle`` holds the offending label cycle."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("relation is not antisymmetric, cycle: " + " < ".join(self.cycle))


class NotALattice(QuantaxError):
    """Some pair has no unique infimum or supremum."""

    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        which = "infimum" if kind == "meet" else "supremum"
        super().__init__(f"pair ({pair[0]}, {pair[1]}) has no unique {which}")


class NoBounds(QuantaxError):
    """The poset lacks a global minimum or maximum."""

    def __init__(self, which):
        self.which = which
        super().__init__(f"poset has no global {which}")


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """Finite bounded lattice: order matrix, tables, bounds and atoms."""

    n: int
    names: tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int
    atoms: tuple[int, ...]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def meet_of(self, a: int, b: int) -> int:
        return int(self.meet[a, b])

    def join_of(self, a: int, b: int) -> int:
        return int(self.join[a, b])

    def atoms_below(self, a: int) -> tuple[int, ...]:
        return tuple(p for p in self.atoms if self.leq[p, a])

    def dual(self) -> "FiniteLattice":
        """Order-dual lattice: reversed order, meet and join swapped."""
        leq_t = np.ascontiguousarray(self.leq.T)
        leq_t.setflags(write=False)
        return FiniteLattice(
            n=self.n,
            names=self.names,
            leq=leq_t,
            meet=self.join,
            join=self.meet,
            bottom=self.top,
            top=self.bottom,
            atoms=_atoms_of(leq_t, self.top),
        )

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, atoms={len(self.atoms)})"


@dataclass(frozen=True)
class Orthocomplementation:
    """A total map element -> element, candidate orthocomplementation."""

    map: tuple[int, ...]

    def __post_init__(self):
        n = len(self.map)
        if any(not (0 <= v < n) for v in self.map):
            raise ValueError("orthocomplementation values out of range")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int32)


def _atoms_of(leq: np.ndarray, bottom: int) -> tuple[int, ...]:
    n = leq.shape[0]
    down_sizes = leq.sum(axis=0)
    # an atom's strict downset is exactly {bottom}
    return tuple(
        p for p in range(n) if p != bottom and down_sizes[p] == 2 and leq[bottom, p]
    )


def _find_cycle(pairs, names):
    """Shortest label cycle i -> ... -> j -> ... -> i exhibiting antisymmetry failure."""
    adj = {}
    for i, j in pairs:
        adj.setdefault(i, set()).add(j)

    def path(src, dst):
        prev = {src: None}
        q = deque([src])
        while q:
            u = q.popleft()
            if u == dst:
                out = []
                while u is not None:
                    out.append(u)
                    u = prev[u]
                return out[::-1]
            for v in adj.get(u, ()):
                if v not in prev:
                    prev[v] = u
                    q.append(v)
        return None

    for i, j in pairs:
        if i != j:
            back = path(j, i)
            if back is not None:
                return [names[k] for k in [i] + back]
    return None


def _finalize(names, leq, idx_pairs=None):
    n = len(names)
    leq = backends.transitive_closure(leq)

    conflict = leq & leq.T & ~np.eye(n, dtype=bool)
    if conflict.any():
        cycle = _find_cycle(idx_pairs, names) if idx_pairs is not None else None
        if cycle is None:
            a, b = np.argwhere(conflict)[0]
            cycle = [names[a], names[b], names[a]]
        raise NotAPartialOrder(cycle)

    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) == 0:
        raise NoBounds("minimum")
    if len(tops) == 0:
        raise NoBounds("maximum")

    meet, join, bad = backends.meet_join_tables(leq)
    if bad is not None:
        a, b, kind = bad
        raise NotALattice((names[a], names[b]), kind)

    leq.setflags(write=False)
    meet.setflags(write=False)
    join.setflags(write=False)
    bottom, top = int(bottoms[0]), int(tops[0])
    return FiniteLattice(
        n=n,
        names=tuple(names),
        leq=leq,
        meet=meet,
        join=join,
        bottom=bottom,
        top=top,
        atoms=_atoms_of(leq, bottom),
    )


def build_lattice(names, leq_pairs=None, cover_pairs=None) -> FiniteLattice:
    """Build a FiniteLattice from labelled order pairs.

    Exactly one of ``leq_pairs`` / ``cover_pairs`` must be given; both are
    label pairs (a, b) meaning a <= b and both get reflexively-transitively
    closed (cover pairs are just the sparse form). Raises NotAPartialOrder,
    NoBounds or NotALattice when the input is not a bounded lattice.
    """
    if (leq_pairs is None) == (cover_pairs is None):
        raise ValueError("give exactly one of leq_pairs or cover_pairs")
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError("names must be unique")
    pos = {name: i for i, name in enumerate(names)}
    pairs = leq_pairs if leq_pairs is not None else cover_pairs
    idx_pairs = []
    for a, b in pairs:
        if a not in pos or b not in pos:
            raise ValueError(f"unknown label in pair ({a!r}, {b!r})")
        idx_pairs.append((pos[a], pos[b]))
    leq = np.zeros((len(names), len(names)), dtype=bool)
    for i, j in idx_pairs:
        leq[i, j] = True
    return _finalize(names, leq, idx_pairs)


def lattice_from_leq(names, leq: np.ndarray) -> FiniteLattice:
    """Build a FiniteLattice from a full boolean order matrix (internal use)."""
    names = list(names)
    leq = np.ascontiguousarray(np.asarray(leq, dtype=bool).copy())
    return _finalize(names, leq)


def meet_set(L: FiniteLattice, elements) -> int:
    """Infimum of a set of elements; empty set gives top."""
    acc = L.top
    for e in elements:
        acc = int(L.meet[acc, e])
    return acc


def join_set(L: FiniteLattice, elements) -> int:
    """Supremum of a set of elements; empty set gives bottom."""
    acc = L.bottom
    for e in elements:
        acc = int(L.join[acc, e])
    return acc


def check_atomistic(L: FiniteLattice) -> AxiomReport:
    """Every element is the join of the atoms below it."""
    for x in range(L.n):
        j = join_set(L, L.atoms_below(x))
        if j != x:
            return failed(
                "atomistic",
                [(x,)],
                f"join of atoms below {L.names[x]} is {L.names[j]}",
            )
    return passed("atomistic")


def check_orthocomplementation(L: FiniteLattice, o: Orthocomplementation) -> AxiomReport:
    """Involution, order reversal and the complement laws, exhaustively."""
    if len(o.map) != L.n:
        raise ValueError("orthocomplementation size does not match lattice")
    witnesses = []
    details = []

    for a in range(L.n):
        if L.meet[a, o(a)] != L.bottom:
            witnesses.append((a,))
            details.append(f"complement law a ^ a' = 0 fails at {L.names[a]}")
            break

    for a in range(L.n):
        if L.join[a, o(a)] != L.top:
            witnesses.append((a,))
            details.append(f"complement law a v a' = I fails at {L.names[a]}")
            break

    for a in range(L.n):
        if o(o(a)) != a:
            witnesses.append((a,))
            details.append(f"involution fails at {L.names[a]}")
            break

    rev = None
    for a in range(L.n):
        for b in range(L.n):
            if L.leq[a, b] and not L.leq[o(b), o(a)]:
                rev = (a, b)
                break
        if rev:
            break
    if rev:
        witnesses.append(rev)
        details.append(
            f"order reversal fails at ({L.names[rev[0]]}, {L.names[rev[1]]})"
        )

    if witnesses:
        return failed("ortho", witnesses, "; ".join(details))
    return passed("ortho")


def check_covering_law(L: FiniteLattice) -> AxiomReport:
    """No element lies strictly between a and a v p for an atom p."""
    atoms = np.asarray(L.atoms, dtype=np.int32)
    hit = backends.covering_scan(L.leq, L.join, atoms)
    if hit is None:
        return passed("covering")
    a, p, x = hit
    return failed(
        "covering",
        [(a, p, x)],
        f"{L.names[x]} lies strictly between {L.names[a]} and "
        f"{L.names[a]} v {L.names[p]}",
    )


def check_weak_modularity(L: FiniteLattice, o: Orthocomplementation) -> AxiomReport:
    """a <= b implies (b ^ a') v a = b, for all comparable pairs."""
    ortho_report = check_orthocomplementation(L, o)
    if not ortho_report.holds:
        raise ValueError("invalid orthocomplementation: " + ortho_report.detail)
    hit = backends.weak_modularity_scan(L.leq, L.meet, L.join, o.as_array())
    if hit is None:
        return passed("weak_modular")
    a, b = hit
    return failed(
        "weak_modular",
        [(a, b)],
        f"(b ^ a') v a != b for a={L.names[a]}, b={L.names[b]}",
    )
