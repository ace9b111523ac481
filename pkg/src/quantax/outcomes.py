"""Possibilistic outcome semantics for experiments on a joint entity.

Two experiments are separated when, in every state, the possible outcomes of
the joint experiment are exactly the Cartesian product of the individually
possible outcomes. Everything here is set-valued; the marginals are supplied
as primitive data rather than derived from the joint map, since projecting
the joint map would silently force the coherence we are testing for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import QuantaxError


class UnknownExperiment(QuantaxError):
    pass


@dataclass(frozen=True)
class Experiment:
    id: str
    outcomes: tuple[str, ...]


@dataclass(frozen=True, eq=False)
class OutcomeModel:
    """States, experiments, and possible-outcome maps."""

    states: tuple[str, ...]
    experiments: tuple[Experiment, ...]
    possible: dict  # (experiment id, state) -> frozenset of outcome labels

    def experiment(self, exp_id: str) -> Experiment:
        for e in self.experiments:
            if e.id == exp_id:
                return e
        raise UnknownExperiment(f"experiment {exp_id!r} is not part of the model")

    def possible_outcomes(self, exp_id: str, state: str) -> frozenset:
        return self.possible[(exp_id, state)]


@dataclass(frozen=True, eq=False)
class JointExperiment:
    """A pair of factor experiments with their joint possible-outcome map."""

    left: str
    right: str
    possible_joint: dict  # state -> frozenset of (left outcome, right outcome)


def make_outcome_model(states, experiments, possible) -> OutcomeModel:
    """Validate and assemble an outcome model.

    ``possible`` maps (experiment id, state) to an iterable of outcomes; the
    set must be nonempty and within the experiment's declared outcomes, for
    every experiment/state pair.
    """
    states = tuple(states)
    experiments = tuple(
        e if isinstance(e, Experiment) else Experiment(e[0], tuple(e[1]))
        for e in experiments
    )
    table = {}
    for e in experiments:
        for s in states:
            if (e.id, s) not in possible:
                raise ValueError(f"possible outcomes missing for ({e.id!r}, {s!r})")
            outs = frozenset(possible[(e.id, s)])
            if not outs:
                raise ValueError(f"possible outcome set empty for ({e.id!r}, {s!r})")
            if not outs <= set(e.outcomes):
                raise ValueError(f"undeclared outcome for ({e.id!r}, {s!r})")
            table[(e.id, s)] = outs
    return OutcomeModel(states, experiments, table)


def make_joint(model: OutcomeModel, left, right, possible_joint) -> JointExperiment:
    el, er = model.experiment(left), model.experiment(right)
    table = {}
    for s in model.states:
        if s not in possible_joint:
            raise ValueError(f"joint outcomes missing for state {s!r}")
        pairs = frozenset(tuple(p) for p in possible_joint[s])
        if not pairs:
            raise ValueError(f"joint outcome set empty for state {s!r}")
        allowed = {(a, b) for a in el.outcomes for b in er.outcomes}
        if not pairs <= allowed:
            raise ValueError(f"undeclared joint outcome for state {s!r}")
        table[s] = pairs
    return JointExperiment(left, right, table)


@dataclass(frozen=True, eq=False)
class SeparationReport:
    """Per-state comparison of the joint map against the marginal product."""

    left: str
    right: str
    separated: bool
    violations: tuple  # (state, missing pairs, extra pairs), sorted

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "separated": self.separated,
            "violations": [
                {
                    "state": state,
                    "missing": [list(p) for p in missing],
                    "extra": [list(p) for p in extra],
                }
                for state, missing, extra in self.violations
            ],
        }


def is_separated(model: OutcomeModel, joint: JointExperiment) -> SeparationReport:
    """Check, state by state, that the joint outcomes equal the product of
    the marginals; violations carry the missing and extra outcome pairs."""
    model.experiment(joint.left)
    model.experiment(joint.right)
    violations = []
    for s in model.states:
        prod = {
            (a, b)
            for a in model.possible_outcomes(joint.left, s)
            for b in model.possible_outcomes(joint.right, s)
        }
        got = joint.possible_joint[s]
        if got != prod:
            missing = tuple(sorted(prod - got))
            extra = tuple(sorted(got - prod))
            violations.append((s, missing, extra))
    return SeparationReport(
        joint.left, joint.right, not violations, tuple(violations)
    )


def all_pairs_separated(model: OutcomeModel, joints) -> tuple[bool, list[SeparationReport]]:
    """The entity-level notion: every listed joint experiment is separated.

    An empty list is vacuously separated.
    """
    reports = [is_separated(model, j) for j in joints]
    return all(r.separated for r in reports), reports


def transpose_joint(joint: JointExperiment) -> JointExperiment:
    """Swap the factors, transposing every outcome pair."""
    return JointExperiment(
        joint.right,
        joint.left,
        {s: frozenset((b, a) for a, b in pairs) for s, pairs in joint.possible_joint.items()},
    )
