"""Verdict reporting for axiom and structural checks.

Every checker returns an :class:`AxiomReport`. A failed check always carries
at least one witness tuple; witnesses are element indices into the lattice
(or state indices, for the state-level axioms) and re-verify against the
definition they violate.
"""

from __future__ import annotations

from dataclasses import dataclass

AXIOM_LABELS = {
    "partial_order": "Partial Order",
    "lattice_laws": "Lattice Laws (infimum/supremum)",
    "completeness": "Completeness (finite bounded lattice)",
    "atomistic": "Atomistic Lattice",
    "ortho": "Axiom 3 — Orthocomplementation",
    "covering": "Axiom 4 — Covering Law",
    "weak_modular": "Axiom 5 — Weak Modularity",
    "state_determination": "Axiom 1 — State Determination",
    "state_atomisticity": "Axiom 2 — Atomisticity",
    "cartan": "Cartan Map Conditions",
    "separated": "Separated Experiments",
}


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check.

    witnesses is empty iff holds; each tuple is the lexicographically first
    violation found for one family of the axiom's conditions.
    """

    axiom_id: str
    holds: bool
    witnesses: tuple[tuple[int, ...], ...] = ()
    detail: str = ""

    def __post_init__(self):
        if not self.holds and not self.witnesses:
            raise ValueError("failed report requires a witness")

    @property
    def label(self) -> str:
        return AXIOM_LABELS.get(self.axiom_id, self.axiom_id)

    def to_dict(self, names=None) -> dict:
        out = {
            "axiom": self.axiom_id,
            "label": self.label,
            "holds": self.holds,
            "witnesses": [list(w) for w in self.witnesses],
        }
        if names is not None:
            out["witness_labels"] = [[names[i] for i in w] for w in self.witnesses]
        if self.detail:
            out["detail"] = self.detail
        return out

    def format_line(self, names=None) -> str:
        mark = "PASS" if self.holds else "FAIL"
        line = f"{mark}  {self.label}"
        if not self.holds:
            if names is not None:
                shown = "; ".join(
                    "(" + ", ".join(names[i] for i in w) + ")" for w in self.witnesses
                )
            else:
                shown = "; ".join(str(w) for w in self.witnesses)
            line += f"  [witness: {shown}]"
            if self.detail:
                line += f"  {self.detail}"
        return line


def passed(axiom_id: str, detail: str = "") -> AxiomReport:
    return AxiomReport(axiom_id, True, (), detail)


def failed(axiom_id: str, witnesses, detail: str = "") -> AxiomReport:
    return AxiomReport(axiom_id, False, tuple(tuple(w) for w in witnesses), detail)
