"""Outcome semantics: separation of joint experiments."""

import pytest

from quantax.outcomes import (
    UnknownExperiment,
    all_pairs_separated,
    is_separated,
    make_joint,
    make_outcome_model,
    transpose_joint,
)
from quantax.zoo import earthmoon_model, vessels_model


def test_earthmoon_is_separated():
    model, joints = earthmoon_model()
    ok, reports = all_pairs_separated(model, joints)
    assert ok
    assert len(reports) == 2
    assert all(r.separated for r in reports)


def test_vessels_not_separated_with_exact_missing_pair():
    model, joints = vessels_model()
    report = is_separated(model, joints[0])
    assert not report.separated
    state, missing, extra = report.violations[0]
    assert state == "s"
    assert missing == ((">10", ">10"),)
    assert set(extra) == {(">10", "≤10"), ("≤10", ">10")}


def test_joint_defined_as_product_is_separated():
    model = make_outcome_model(
        ["s1", "s2"],
        [("e1", ["a", "b"]), ("e2", ["c", "d"])],
        {
            ("e1", "s1"): ["a"],
            ("e1", "s2"): ["a", "b"],
            ("e2", "s1"): ["c", "d"],
            ("e2", "s2"): ["d"],
        },
    )
    joint = make_joint(
        model,
        "e1",
        "e2",
        {
            "s1": [["a", "c"], ["a", "d"]],
            "s2": [["a", "d"], ["b", "d"]],
        },
    )
    assert is_separated(model, joint).separated


def test_empty_joint_list_is_vacuously_separated():
    model, _ = earthmoon_model()
    ok, reports = all_pairs_separated(model, [])
    assert ok and reports == []


def test_unknown_experiment_raises():
    model, _ = vessels_model()
    with pytest.raises(UnknownExperiment):
        make_joint(model, "e1", "nope", {"s": [[">10", ">10"]]})


def test_separation_symmetric_under_factor_swap():
    for model, joints in (vessels_model(), earthmoon_model()):
        for joint in joints:
            report = is_separated(model, joint)
            swapped = is_separated(model, transpose_joint(joint))
            assert report.separated == swapped.separated
            for (s1, m1, e1), (s2, m2, e2) in zip(report.violations, swapped.violations):
                assert s1 == s2
                assert {(b, a) for a, b in m1} == set(m2)
                assert {(b, a) for a, b in e1} == set(e2)


def test_full_marginal_product_separated_regardless_of_structure():
    # whenever the joint map equals the product of the marginals in every
    # state, the pair is separated, whatever those marginals are
    model = make_outcome_model(
        ["s"],
        [("e1", ["a", "b", "c"]), ("e2", ["x", "y"])],
        {("e1", "s"): ["a", "c"], ("e2", "s"): ["y"]},
    )
    joint = make_joint(model, "e1", "e2", {"s": [["a", "y"], ["c", "y"]]})
    assert is_separated(model, joint).separated


def test_nonempty_possible_sets_enforced():
    with pytest.raises(ValueError):
        make_outcome_model(
            ["s"], [("e1", ["a"])], {("e1", "s"): []}
        )
