"""Command-line front end: check, decompose, sepprod, separation, coupling, zoo.

Exit codes: 0 when every expected verdict is met, 1 when a check fails (or
an axiom precondition is not satisfied), 2 for usage, parse and size errors.
Inputs resolve against the filesystem first and then against the bundled
model zoo, so ``quantax check zoo/mo2_sps.json`` works without writing the
zoo to disk.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .decomposition import IsomorphismNotFound, verify_representation_part1
from .errors import AxiomsNotSatisfied, QuantaxError
from .exact import (
    DimensionTooLarge,
    DimensionTooSmall,
    check_coupling_conditions,
    sample_coupling_inputs,
    tensor_embedding_pair,
)
from .jsonio import (
    ParseError,
    detect_kind,
    dump_canonical,
    load_document,
    parse_lattice,
    parse_outcome_model,
    parse_sps,
    serialize_sps,
)
from .lattice import (
    check_atomistic,
    check_covering_law,
    check_orthocomplementation,
    check_weak_modularity,
)
from .report import AxiomReport, passed
from .sps import axiom1_state_determination, axiom2_atomisticity
from .sepprod import TooLarge, superselection_witnesses, verify_no_go
from .outcomes import all_pairs_separated
from .zoo import ZOO, zoo_entry

USAGE_ERROR, CHECK_FAILED, OK = 2, 1, 0


@dataclass
class RunReport:
    """Everything one command run produced, for both output modes."""

    command: str
    inputs: list[str]
    checks: list = field(default_factory=list)  # (AxiomReport, names or None)
    extra: dict = field(default_factory=dict)
    seed: int | None = None
    elapsed_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [r.to_dict(names) for r, names in self.checks],
            **self.extra,
            "seed": self.seed,
            "elapsed_s": round(self.elapsed_s, 6),
            "version": __version__,
        }

    def print_human(self):
        print(f"quantax {self.command} {' '.join(self.inputs)}")
        for r, names in self.checks:
            print("  " + r.format_line(names))
        for key, value in self.extra.items():
            print(f"  {key}: {json.dumps(value, ensure_ascii=False)}")
        print(f"  elapsed: {self.elapsed_s:.3f}s")


def _resolve(path: str) -> dict:
    if os.path.exists(path):
        return load_document(path)
    stem = os.path.splitext(os.path.basename(path))[0]
    try:
        entry = zoo_entry(stem)
    except KeyError:
        raise ParseError("no such file and no matching zoo model", path) from None
    return entry.payload()


def _parse_expect(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise ParseError(f"--expect needs id=true/false, got {item!r}")
        key, _, value = item.partition("=")
        if value.lower() not in ("true", "false", "0", "1"):
            raise ParseError(f"--expect value must be boolean, got {item!r}")
        out[key] = value.lower() in ("true", "1")
    return out


def _axiom_suite(lattice, ortho) -> list[tuple[AxiomReport, tuple]]:
    checks = [
        (passed("partial_order", "verified at load"), lattice.names),
        (passed("lattice_laws", "meet/join tables verified at load"), lattice.names),
        (passed("completeness", "finite bounded lattice"), lattice.names),
        (check_atomistic(lattice), lattice.names),
    ]
    if ortho is not None:
        ortho_report = check_orthocomplementation(lattice, ortho)
        checks.append((ortho_report, lattice.names))
        checks.append((check_covering_law(lattice), lattice.names))
        if ortho_report.holds:
            checks.append((check_weak_modularity(lattice, ortho), lattice.names))
    else:
        checks.append((check_covering_law(lattice), lattice.names))
    return checks


def cmd_check(args) -> int:
    t0 = time.monotonic()
    doc = _resolve(args.path)
    kind = detect_kind(doc)
    report = RunReport("check", [args.path])
    if kind == "lattice":
        lattice, ortho = parse_lattice(doc, args.path)
        report.checks = _axiom_suite(lattice, ortho)
    elif kind == "sps":
        sps = parse_sps(doc, args.path)
        report.checks = _axiom_suite(sps.lattice, sps.ortho)
        report.checks.append((passed("cartan", "verified at load"), sps.lattice.names))
        report.checks.append((axiom1_state_determination(sps), sps.states))
        report.checks.append((axiom2_atomisticity(sps), sps.states))
    else:
        raise ParseError("check expects a lattice or sps document", args.path)

    expect = _parse_expect(args.expect)
    mismatches = [
        r.axiom_id
        for r, _ in report.checks
        if r.holds != expect.get(r.axiom_id, True)
    ]
    report.extra["expected_verdicts_met"] = not mismatches
    if mismatches:
        report.extra["mismatches"] = mismatches
    report.elapsed_s = time.monotonic() - t0
    _emit(report, args.json)
    return OK if not mismatches else CHECK_FAILED


def cmd_decompose(args) -> int:
    t0 = time.monotonic()
    doc = _resolve(args.path)
    if detect_kind(doc) != "sps":
        raise ParseError("decompose expects an sps document", args.path)
    sps = parse_sps(doc, args.path)
    witness = verify_representation_part1(sps)
    report = RunReport("decompose", [args.path])
    report.extra = {
        "classical_property_count": len(witness.classical.classical_properties),
        "classical_state_count": len(witness.classical.classical_states),
        "component_sizes": [c.sps.lattice.n for c in witness.components],
        "component_state_counts": [len(c.sps.states) for c in witness.components],
        "isomorphism": "verified",
    }
    report.elapsed_s = time.monotonic() - t0
    _emit(report, args.json)
    return OK


def cmd_sepprod(args) -> int:
    t0 = time.monotonic()
    doc1, doc2 = _resolve(args.path1), _resolve(args.path2)
    sps1 = parse_sps(doc1, args.path1)
    sps2 = parse_sps(doc2, args.path2)
    nogo = verify_no_go(sps1, sps2, max_points=args.max_points)
    product = nogo.product
    names = product.lattice.names
    pairs = superselection_witnesses(product)

    report = RunReport("sepprod", [args.path1, args.path2])
    report.checks = [(nogo.covering, names), (nogo.weak_modularity, names)]
    witnesses = [
        {"axiom": r.axiom_id, "witness": [names[i] for i in w]}
        for r, _ in report.checks
        if not r.holds
        for w in r.witnesses
    ]
    report.extra = {
        "factor_classical": list(nogo.factor_classical),
        "witnesses": witnesses,
        "superselection": [[names[a], names[b]] for a, b in pairs],
        "product_states": len(product.states),
        "product_properties": product.lattice.n,
    }
    expect = _parse_expect(args.expect)
    mismatches = [
        r.axiom_id for r, _ in report.checks if r.axiom_id in expect and r.holds != expect[r.axiom_id]
    ]
    if expect:
        report.extra["expected_verdicts_met"] = not mismatches
    report.elapsed_s = time.monotonic() - t0

    if args.json:
        out = report.to_dict()
        out["no_go"] = {
            "covering": nogo.covering.to_dict(names),
            "weak_modularity": nogo.weak_modularity.to_dict(names),
            "witnesses": witnesses,
            "factor_classical": list(nogo.factor_classical),
            "superselection": report.extra["superselection"],
        }
        out["product"] = serialize_sps(product)
        print(dump_canonical(out), end="")
    else:
        report.print_human()
    return OK if not mismatches else CHECK_FAILED


def cmd_separation(args) -> int:
    t0 = time.monotonic()
    doc = _resolve(args.path)
    if detect_kind(doc) != "outcome_model":
        raise ParseError("separation expects an outcome-model document", args.path)
    model, joints = parse_outcome_model(doc, args.path)
    separated, reports = all_pairs_separated(model, joints)

    report = RunReport("separation", [args.path])
    report.extra = {
        "separated": separated,
        "joints": [r.to_dict() for r in reports],
    }
    expect = _parse_expect(args.expect)
    expected = expect.get("separated", True)
    report.extra["expected_verdicts_met"] = separated == expected
    report.elapsed_s = time.monotonic() - t0

    if args.json:
        print(dump_canonical(report.to_dict()), end="")
    else:
        print(f"quantax separation {args.path}")
        for r in reports:
            mark = "separated" if r.separated else "NOT separated"
            print(f"  {r.left} x {r.right}: {mark}")
            for state, missing, extra in r.violations:
                for pair in missing:
                    print(f"    state {state}: missing pair {pair!r}")
                for pair in extra:
                    print(f"    state {state}: extra pair {pair!r}")
        print(f"  elapsed: {report.elapsed_s:.3f}s")
    return OK if separated == expected else CHECK_FAILED


def cmd_coupling(args) -> int:
    t0 = time.monotonic()
    h1, h2 = tensor_embedding_pair(args.dim1, args.dim2)
    sample = sample_coupling_inputs(
        args.dim1, args.dim2, trials=args.trials, ray_pairs=args.ray_pairs, seed=args.seed
    )
    coupling = check_coupling_conditions(h1, h2, sample)

    report = RunReport(
        "coupling",
        [f"dim1={args.dim1}", f"dim2={args.dim2}", f"trials={args.trials}"],
        seed=args.seed,
    )
    report.extra = {
        "all_pass": coupling.all_pass,
        "conditions": [c.to_dict() for c in coupling.conditions],
        "passed": sum(c.holds for c in coupling.conditions),
        "total": len(coupling.conditions),
    }
    report.elapsed_s = time.monotonic() - t0
    if args.json:
        print(dump_canonical(report.to_dict()), end="")
    else:
        print(f"quantax coupling dim {args.dim1}x{args.dim2}, seed {args.seed}")
        for c in coupling.conditions:
            mark = "PASS" if c.holds else "FAIL"
            print(f"  {mark}  ({c.condition}) {c.description} [{c.checked} instances]")
        print(f"  {report.extra['passed']}/{report.extra['total']} conditions pass")
        print(f"  elapsed: {report.elapsed_s:.3f}s")
    return OK if coupling.all_pass else CHECK_FAILED


def cmd_zoo(args) -> int:
    if args.write:
        os.makedirs(args.write, exist_ok=True)
        for entry in ZOO:
            path = os.path.join(args.write, f"{entry.id}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(dump_canonical(entry.payload()))
        print(f"wrote {len(ZOO)} models to {args.write}")
        return OK
    if args.json:
        print(
            dump_canonical(
                [
                    {
                        "id": e.id,
                        "kind": e.kind,
                        "description": e.description,
                        "expected": e.expected,
                    }
                    for e in ZOO
                ]
            ),
            end="",
        )
        return OK
    for e in ZOO:
        print(f"{e.id:14s} {e.kind:14s} {e.description}")
    return OK


def _emit(report: RunReport, as_json: bool):
    if as_json:
        print(dump_canonical(report.to_dict()), end="")
    else:
        report.print_human()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantax",
        description="finite-model workbench for quantum-axiomatic structures",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom suite on a lattice or sps file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", action="append", metavar="ID=BOOL")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="classical part, components, representation")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sepprod", help="separated product of two sps files plus no-go report")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-points", type=int, default=64)
    p.add_argument("--expect", action="append", metavar="ID=BOOL")
    p.set_defaults(func=cmd_sepprod)

    p = sub.add_parser("separation", help="check separation of joint experiments")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", action="append", metavar="ID=BOOL")
    p.set_defaults(func=cmd_separation)

    p = sub.add_parser("coupling", help="verify tensor coupling conditions by sampling")
    p.add_argument("--dim1", type=int, default=3)
    p.add_argument("--dim2", type=int, default=3)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--ray-pairs", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coupling)

    p = sub.add_parser("zoo", help="list bundled models or write them to a directory")
    p.add_argument("--write", metavar="DIR")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zoo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TooLarge, DimensionTooSmall, DimensionTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except (AxiomsNotSatisfied, IsomorphismNotFound) as e:
        print(f"error: {e}", file=sys.stderr)
        return CHECK_FAILED
    except QuantaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
