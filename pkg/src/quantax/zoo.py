"""Bundled model zoo: every example and counterexample gets a named artifact.

Models are built programmatically and serialized on demand, so the JSON
payloads and the in-memory objects can never drift apart. Expected verdicts
are recorded per model and enforced by the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .decomposition import direct_union
from .jsonio import (
    serialize_lattice,
    serialize_outcome_model,
    serialize_sps,
)
from .lattice import FiniteLattice, Orthocomplementation, build_lattice
from .outcomes import make_joint, make_outcome_model
from .sps import StatePropertySystem, make_sps

_ATOM_LETTERS = "pqrstuvw"


@lru_cache(maxsize=None)
def powerset_lattice(n: int) -> tuple[FiniteLattice, Orthocomplementation]:
    """Power set of an n-element set under inclusion, with set complement."""
    size = 1 << n
    names = [
        "{" + ",".join(str(i + 1) for i in range(n) if m >> i & 1) + "}"
        for m in range(size)
    ]
    pairs = [(names[a], names[b]) for a in range(size) for b in range(size) if a & b == a]
    lattice = build_lattice(names, leq_pairs=pairs)
    return lattice, Orthocomplementation(tuple(m ^ (size - 1) for m in range(size)))


@lru_cache(maxsize=None)
def chain_lattice(length: int) -> FiniteLattice:
    """Total order 0 < c1 < ... < 1 with the given element count."""
    names = ["0"] + [f"c{i}" for i in range(1, length - 1)] + ["1"]
    return build_lattice(names, cover_pairs=list(zip(names, names[1:])))


@lru_cache(maxsize=None)
def o6_lattice() -> tuple[FiniteLattice, Orthocomplementation]:
    """The benzene ring: 0 < a < b' < 1 and 0 < b < a' < 1."""
    names = ["0", "a", "b", "a'", "b'", "1"]
    lattice = build_lattice(
        names,
        cover_pairs=[("0", "a"), ("0", "b"), ("a", "b'"), ("b", "a'"), ("b'", "1"), ("a'", "1")],
    )
    return lattice, Orthocomplementation((5, 3, 4, 1, 2, 0))


@lru_cache(maxsize=None)
def mo_lattice(n: int) -> tuple[FiniteLattice, Orthocomplementation]:
    """MOn: 2n incomparable atoms in complementary pairs, plus bounds."""
    if not 1 <= n <= len(_ATOM_LETTERS):
        raise ValueError("mo_lattice supports 1 to 8 atom pairs")
    names = ["0"]
    for i in range(n):
        letter = _ATOM_LETTERS[i]
        names += [letter, letter + "'"]
    names.append("1")
    cover = [("0", x) for x in names[1:-1]] + [(x, "1") for x in names[1:-1]]
    lattice = build_lattice(names, cover_pairs=cover)
    omap = [lattice.index("1")]
    for i in range(n):
        letter = _ATOM_LETTERS[i]
        omap += [lattice.index(letter + "'"), lattice.index(letter)]
    omap.append(lattice.index("0"))
    return lattice, Orthocomplementation(tuple(omap))


def atoms_sps(lattice: FiniteLattice, ortho: Orthocomplementation) -> StatePropertySystem:
    """State-property system whose states are the atoms: kappa(a) = atoms below a."""
    states = [lattice.names[p] for p in lattice.atoms]
    kappa = [
        [i for i, p in enumerate(lattice.atoms) if lattice.leq[p, a]]
        for a in range(lattice.n)
    ]
    return make_sps(states, lattice, ortho, kappa)


@lru_cache(maxsize=None)
def classical_sps(n: int) -> StatePropertySystem:
    """Classical model on n states: power-set lattice, identity Cartan map."""
    lattice, ortho = powerset_lattice(n)
    states = [str(i + 1) for i in range(n)]
    return make_sps(states, lattice, ortho, list(range(1 << n)))


@lru_cache(maxsize=None)
def trivial_sps(label: str = "s") -> StatePropertySystem:
    """Single state, two-element lattice."""
    lattice = build_lattice(["0", "1"], cover_pairs=[("0", "1")])
    return make_sps([label], lattice, Orthocomplementation((1, 0)), [0b0, 0b1])


@lru_cache(maxsize=None)
def mo_sps(n: int) -> StatePropertySystem:
    return atoms_sps(*mo_lattice(n))


@lru_cache(maxsize=None)
def classical_bit() -> StatePropertySystem:
    """Direct union of two trivial systems: the 4-element Boolean lattice."""
    return direct_union([trivial_sps("u"), trivial_sps("v")])


@lru_cache(maxsize=None)
def o6_sps() -> StatePropertySystem:
    """A valid Cartan map on O6 that satisfies Axiom 1 but fails Axiom 2."""
    lattice, ortho = o6_lattice()
    kappa = {
        "0": [],
        "a": [0],
        "b": [1],
        "a'": [1, 3],
        "b'": [0, 2],
        "1": [0, 1, 2, 3],
    }
    return make_sps(
        ["x", "y", "z", "w"], lattice, ortho, [kappa[name] for name in lattice.names]
    )


@lru_cache(maxsize=None)
def mo2_plus_bit() -> StatePropertySystem:
    return direct_union([mo_sps(2), classical_bit()])


@lru_cache(maxsize=None)
def mo2_plus_mo3() -> StatePropertySystem:
    return direct_union([mo_sps(2), mo_sps(3)])


@lru_cache(maxsize=None)
def vessels_model():
    """Two connected vessels of water: certain marginals, anticorrelated joint."""
    model = make_outcome_model(
        ["s"],
        [("e1", [">10", "≤10"]), ("e2", [">10", "≤10"])],
        {
            ("e1", "s"): [">10"],
            ("e2", "s"): [">10"],
        },
    )
    joint = make_joint(model, "e1", "e2", {"s": [[">10", "≤10"], ["≤10", ">10"]]})
    return model, [joint]


@lru_cache(maxsize=None)
def earthmoon_model():
    """Earth and moon: every product pair of outcomes stays possible."""
    model = make_outcome_model(
        ["s"],
        [("position", ["x1", "y1"]), ("velocity", ["x2", "y2"])],
        {
            ("position", "s"): ["x1", "y1"],
            ("velocity", "s"): ["x2", "y2"],
        },
    )
    j1 = make_joint(
        model,
        "position",
        "velocity",
        {"s": [["x1", "x2"], ["x1", "y2"], ["y1", "x2"], ["y1", "y2"]]},
    )
    j2 = make_joint(
        model,
        "velocity",
        "position",
        {"s": [["x2", "x1"], ["x2", "y1"], ["y2", "x1"], ["y2", "y1"]]},
    )
    return model, [j1, j2]


_LATTICE_ALL_PASS = {
    "partial_order": True,
    "lattice_laws": True,
    "completeness": True,
    "atomistic": True,
    "ortho": True,
    "covering": True,
    "weak_modular": True,
}

_SPS_ALL_PASS = dict(
    _LATTICE_ALL_PASS,
    cartan=True,
    state_determination=True,
    state_atomisticity=True,
)


@dataclass(frozen=True)
class ModelZooEntry:
    id: str
    kind: str  # lattice | sps | outcome_model
    description: str
    expected: dict
    classical_properties: int | None = None
    components: int | None = None
    separated: bool | None = None

    def build(self):
        return _BUILDERS[self.id]()

    def payload(self) -> dict:
        built = self.build()
        if self.kind == "lattice":
            lattice, ortho = built
            return serialize_lattice(lattice, ortho)
        if self.kind == "sps":
            return serialize_sps(built)
        model, joints = built
        return serialize_outcome_model(model, joints)


_BUILDERS = {
    "powerset1": lambda: powerset_lattice(1),
    "powerset2": lambda: powerset_lattice(2),
    "powerset3": lambda: powerset_lattice(3),
    "powerset4": lambda: powerset_lattice(4),
    "chain3": lambda: (chain_lattice(3), None),
    "chain4": lambda: (chain_lattice(4), None),
    "o6": o6_lattice,
    "mo2": lambda: mo_lattice(2),
    "mo3": lambda: mo_lattice(3),
    "classical2": lambda: classical_sps(2),
    "classical3": lambda: classical_sps(3),
    "classical4": lambda: classical_sps(4),
    "classical_bit": classical_bit,
    "trivial": trivial_sps,
    "mo2_sps": lambda: mo_sps(2),
    "mo3_sps": lambda: mo_sps(3),
    "o6_sps": o6_sps,
    "mo2_plus_bit": mo2_plus_bit,
    "mo2_plus_mo3": mo2_plus_mo3,
    "vessels": vessels_model,
    "earthmoon": earthmoon_model,
}


def _lattice_expected(**overrides):
    out = dict(_LATTICE_ALL_PASS)
    out.update(overrides)
    return out


def _sps_expected(**overrides):
    out = dict(_SPS_ALL_PASS)
    out.update(overrides)
    return out


_CHAIN_EXPECTED = {
    "partial_order": True,
    "lattice_laws": True,
    "completeness": True,
    "atomistic": False,
    "covering": True,
}

ZOO: tuple[ModelZooEntry, ...] = (
    ModelZooEntry("powerset1", "lattice", "power set of one point", _lattice_expected()),
    ModelZooEntry("powerset2", "lattice", "power set of two points", _lattice_expected()),
    ModelZooEntry("powerset3", "lattice", "power set of three points", _lattice_expected()),
    ModelZooEntry("powerset4", "lattice", "power set of four points", _lattice_expected()),
    ModelZooEntry("chain3", "lattice", "three-element chain", dict(_CHAIN_EXPECTED)),
    ModelZooEntry("chain4", "lattice", "four-element chain", dict(_CHAIN_EXPECTED)),
    ModelZooEntry(
        "o6",
        "lattice",
        "benzene ring, the classic non-orthomodular ortholattice",
        _lattice_expected(atomistic=False, covering=False, weak_modular=False),
    ),
    ModelZooEntry("mo2", "lattice", "MO2: two complementary atom pairs", _lattice_expected()),
    ModelZooEntry("mo3", "lattice", "MO3: three complementary atom pairs", _lattice_expected()),
    ModelZooEntry(
        "classical2", "sps", "classical model on 2 states", _sps_expected(),
        classical_properties=4, components=2,
    ),
    ModelZooEntry(
        "classical3", "sps", "classical model on 3 states", _sps_expected(),
        classical_properties=8, components=3,
    ),
    ModelZooEntry(
        "classical4", "sps", "classical model on 4 states", _sps_expected(),
        classical_properties=16, components=4,
    ),
    ModelZooEntry(
        "classical_bit", "sps", "direct union of two trivial systems", _sps_expected(),
        classical_properties=4, components=2,
    ),
    ModelZooEntry(
        "trivial", "sps", "single-state system", _sps_expected(),
        classical_properties=2, components=1,
    ),
    ModelZooEntry(
        "mo2_sps", "sps", "MO2 with its atoms as states", _sps_expected(),
        classical_properties=2, components=1,
    ),
    ModelZooEntry(
        "mo3_sps", "sps", "MO3 with its atoms as states", _sps_expected(),
        classical_properties=2, components=1,
    ),
    ModelZooEntry(
        "o6_sps",
        "sps",
        "O6 with a four-state Cartan map; fails Axiom 2",
        _sps_expected(
            atomistic=False, covering=False, weak_modular=False,
            state_atomisticity=False,
        ),
    ),
    ModelZooEntry(
        "mo2_plus_bit", "sps", "direct union of MO2 and a classical bit",
        _sps_expected(), classical_properties=8, components=3,
    ),
    ModelZooEntry(
        "mo2_plus_mo3", "sps", "direct union of MO2 and MO3",
        _sps_expected(), classical_properties=4, components=2,
    ),
    ModelZooEntry(
        "vessels", "outcome_model", "connected vessels of water", {"separated": False},
        separated=False,
    ),
    ModelZooEntry(
        "earthmoon", "outcome_model", "earth and moon", {"separated": True},
        separated=True,
    ),
)

_BY_ID = {e.id: e for e in ZOO}


def zoo_ids() -> list[str]:
    return [e.id for e in ZOO]


def zoo_entry(model_id: str) -> ModelZooEntry:
    if model_id not in _BY_ID:
        raise KeyError(f"unknown zoo model {model_id!r}")
    return _BY_ID[model_id]
