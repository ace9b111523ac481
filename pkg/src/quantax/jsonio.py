"""JSON schemas for lattices, state-property systems and outcome models.

Serialization is canonical: cover pairs sorted, state sets sorted, stable
key order. parse(serialize(m)) reproduces m exactly and
serialize(parse(doc)) is a fixed point.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import QuantaxError
from .lattice import FiniteLattice, Orthocomplementation, lattice_from_leq
from .outcomes import JointExperiment, OutcomeModel, make_joint, make_outcome_model
from .sps import StatePropertySystem, make_sps


class ParseError(QuantaxError):
    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _expect(cond, message, path):
    if not cond:
        raise ParseError(message, path)


def parse_lattice(obj, path=None):
    """Lattice object -> (FiniteLattice, Orthocomplementation or None)."""
    _expect(isinstance(obj, dict), "lattice object must be a JSON object", path)
    names = obj.get("names")
    _expect(
        isinstance(names, list) and names and all(isinstance(x, str) for x in names),
        "names must be a nonempty list of strings",
        path,
    )
    n = len(names)
    has_cover = "cover_pairs" in obj
    has_leq = "leq_pairs" in obj
    _expect(
        has_cover != has_leq,
        "exactly one of cover_pairs / leq_pairs is required",
        path,
    )
    pairs = obj["cover_pairs"] if has_cover else obj["leq_pairs"]
    _expect(isinstance(pairs, list), "order pairs must be a list", path)
    leq = np.zeros((n, n), dtype=bool)
    for pair in pairs:
        _expect(
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(i, int) and 0 <= i < n for i in pair),
            f"order pair {pair!r} must be two indices into names",
            path,
        )
        leq[pair[0], pair[1]] = True
    lattice = lattice_from_leq(names, leq)

    ortho = None
    if obj.get("ortho") is not None:
        perm = obj["ortho"]
        _expect(
            isinstance(perm, list)
            and len(perm) == n
            and all(isinstance(i, int) and 0 <= i < n for i in perm),
            "ortho must be a permutation array over the elements",
            path,
        )
        ortho = Orthocomplementation(tuple(perm))
    return lattice, ortho


def cover_pairs(lattice: FiniteLattice) -> list[list[int]]:
    """The covering relation of the lattice, sorted."""
    strict = lattice.leq & ~np.eye(lattice.n, dtype=bool)
    via = (strict.astype(np.float32) @ strict.astype(np.float32)) > 0.5
    cover = strict & ~via
    return sorted([int(i), int(j)] for i, j in np.argwhere(cover))


def serialize_lattice(lattice: FiniteLattice, ortho=None) -> dict:
    out = {"names": list(lattice.names), "cover_pairs": cover_pairs(lattice)}
    if ortho is not None:
        out["ortho"] = list(ortho.map)
    return out


def parse_sps(obj, path=None) -> StatePropertySystem:
    _expect(isinstance(obj, dict), "sps object must be a JSON object", path)
    _expect("lattice" in obj, "sps object requires a lattice", path)
    lattice, ortho = parse_lattice(obj["lattice"], path)
    _expect(ortho is not None, "sps lattice requires an ortho permutation", path)
    states = obj.get("states")
    _expect(
        isinstance(states, list) and all(isinstance(s, str) for s in states),
        "states must be a list of labels",
        path,
    )
    kappa = obj.get("kappa")
    _expect(
        isinstance(kappa, list) and len(kappa) == lattice.n,
        "kappa must list one state set per property",
        path,
    )
    for entry in kappa:
        _expect(
            isinstance(entry, list)
            and all(isinstance(i, int) and 0 <= i < len(states) for i in entry),
            f"kappa entry {entry!r} must be a list of state indices",
            path,
        )
    return make_sps(states, lattice, ortho, kappa)


def serialize_sps(sps: StatePropertySystem) -> dict:
    return {
        "lattice": serialize_lattice(sps.lattice, sps.ortho),
        "states": list(sps.states),
        "kappa": [sorted(sps.kappa_states(a)) for a in range(sps.lattice.n)],
    }


def parse_outcome_model(obj, path=None) -> tuple[OutcomeModel, list[JointExperiment]]:
    _expect(isinstance(obj, dict), "outcome model must be a JSON object", path)
    states = obj.get("states")
    _expect(isinstance(states, list) and states, "states must be a nonempty list", path)
    exps = obj.get("experiments")
    _expect(isinstance(exps, list) and exps, "experiments must be a nonempty list", path)
    experiments = []
    for e in exps:
        _expect(
            isinstance(e, dict) and isinstance(e.get("id"), str) and isinstance(e.get("outcomes"), list),
            "each experiment needs an id and an outcome list",
            path,
        )
        experiments.append((e["id"], e["outcomes"]))
    possible_obj = obj.get("possible")
    _expect(isinstance(possible_obj, dict), "possible must map experiment ids", path)
    possible = {}
    for exp_id, per_state in possible_obj.items():
        _expect(isinstance(per_state, dict), f"possible[{exp_id!r}] must map states", path)
        for state, outs in per_state.items():
            possible[(exp_id, state)] = outs
    try:
        model = make_outcome_model(states, experiments, possible)
    except (ValueError, QuantaxError) as e:
        raise ParseError(str(e), path) from e

    joints = []
    for j in obj.get("joints", []):
        _expect(
            isinstance(j, dict) and "left" in j and "right" in j and "possible_joint" in j,
            "each joint needs left, right and possible_joint",
            path,
        )
        try:
            joints.append(make_joint(model, j["left"], j["right"], j["possible_joint"]))
        except (ValueError, QuantaxError) as e:
            raise ParseError(str(e), path) from e
    return model, joints


def serialize_outcome_model(model: OutcomeModel, joints=()) -> dict:
    return {
        "states": list(model.states),
        "experiments": [
            {"id": e.id, "outcomes": list(e.outcomes)} for e in model.experiments
        ],
        "possible": {
            e.id: {
                s: sorted(model.possible_outcomes(e.id, s)) for s in model.states
            }
            for e in model.experiments
        },
        "joints": [
            {
                "left": j.left,
                "right": j.right,
                "possible_joint": {
                    s: sorted([list(p) for p in j.possible_joint[s]])
                    for s in model.states
                },
            }
            for j in joints
        ],
    }


def detect_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    if "kappa" in obj:
        return "sps"
    if "experiments" in obj:
        return "outcome_model"
    if "names" in obj:
        return "lattice"
    raise ParseError("cannot determine document kind (lattice, sps, outcome model)")


def load_document(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(str(e), path) from e
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}", path) from e


def dump_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
