import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from italcheck.formula import (
    Agent, Always, And, Assume, Believe, D, Next, Not, Prop, SortAtom, Sometime, UA, UB, desugar,
    parse,
)
from italcheck.labeling import truth_set
from italcheck.model import UnknownWorldError, validate
from italcheck.semantics import assumed_set, assumes, believes, diag_slice, evaluate
from tests.gen import core_formulas, formulas, models, random_core, random_model

a, b = Agent.A, Agent.B


def test_m0_diag(m0):
    assert evaluate(m0, 0, "x1", D)
    assert diag_slice(m0, 0) == {"x1", "x2", "y1", "y2"}


def test_contradiction_is_false(m0):
    f = Prop("p")
    for w in m0.worlds:
        assert not evaluate(m0, 3, w, And(f, Not(f)))
        assert not evaluate(m0, 0, w, And(D, Not(D)))


def test_m1_always_and_sometime(m1):
    assert evaluate(m1, 0, "x1", D)
    assert not evaluate(m1, 1, "x1", D)
    assert not evaluate(m1, 0, "x1", Always(D))
    assert evaluate(m1, 0, "x1", Sometime(D))
    assert "x1" not in diag_slice(m1, 1)
    assert diag_slice(m1, 0) == {"x1", "x2", "y1", "y2"}


def test_believe_own_sort_atom(m0):
    assert evaluate(m0, 0, "x1", Believe(a, b, SortAtom(b)))


def test_diag_slice_mutual_pair():
    m = validate({"worlds_a": ["x1", "x2"], "worlds_b": ["y1", "y2"], "prefix_len": 0,
                  "loop_len": 1, "slices": [{"rel_ab": [["x1", "y1"], ["x2", "y1"]],
                                             "rel_ba": [["y1", "x1"], ["y2", "x1"]]}]})
    assert "x1" not in diag_slice(m, 0)
    assert diag_slice(m, 0) == {"x2", "y2"}


def test_assumed_set(m0):
    assert assumed_set(m0, 0, "x1") == {"y1"}
    assert assumed_set(m0, 0, "y2") == {"x1"}
    assert assumed_set(m0, 9, "y2") == {"x1"}


def test_believes_assumes(m0):
    assert believes(m0, 0, "x1", {"y1", "y2"})
    assert not assumes(m0, 0, "x1", {"y1", "y2"})
    assert believes(m0, 0, "x1", {"y1"}) and assumes(m0, 0, "x1", {"y1"})
    assert not believes(m0, 0, "x1", set())


def test_set_query_errors(m0):
    with pytest.raises(UnknownWorldError):
        assumed_set(m0, 0, "zz")
    with pytest.raises(ValueError, match="opposite"):
        believes(m0, 0, "x1", {"x2"})
    with pytest.raises(ValueError):
        assumes(m0, 0, "x1", {"y9"})


def test_unknown_world_raises(m0):
    with pytest.raises(UnknownWorldError):
        evaluate(m0, 0, "nowhere", D)


def test_unknown_proposition_is_false(m0):
    assert not any(evaluate(m0, 0, w, Prop("nothing")) for w in m0.worlds)


def test_valuation_lookup(m1):
    m = validate({**m1.to_dict(), "valuation": {"p": [[1, "x1"]]}})
    assert evaluate(m, 1, "x1", Prop("p"))
    assert evaluate(m, 3, "x1", Prop("p"))
    assert not evaluate(m, 2, "x1", Prop("p"))
    assert evaluate(m, 0, "x1", Next(Prop("p")))
    assert evaluate(m, 0, "x1", parse("F p & !G p"))


def test_assume_requires_exact_match(m2):
    # x1 considers both b-worlds possible
    assert evaluate(m2, 0, "x1", Assume(a, b, UB))
    assert not evaluate(m2, 0, "x2", Assume(a, b, UB))
    assert evaluate(m2, 0, "x2", Believe(a, b, UB))


def test_diag_slice_agrees_with_eval(m1, m2):
    for m in (m1, m2):
        for n in range(4):
            assert diag_slice(m, n) == {w for w in m.worlds if evaluate(m, n, w, D)}


# invariants over random models

point_n = st.integers(0, 12)


@given(models(), formulas, point_n)
def test_desugar_soundness(m, f, n):
    for w in m.worlds:
        assert evaluate(m, n, w, f) == evaluate(m, n, w, desugar(f))


@given(models(max_prefix=2, max_loop=3), formulas, point_n)
def test_loop_invariance(m, f, k):
    n = m.prefix_len + k
    for w in m.worlds:
        assert evaluate(m, n, w, f) == evaluate(m, n + m.loop_len, w, f)


@given(models(), formulas, point_n)
def test_duality_and_unfolding(m, f, n):
    for w in m.worlds:
        assert evaluate(m, n, w, Sometime(f)) == (not evaluate(m, n, w, Always(Not(f))))
        assert evaluate(m, n, w, Always(f)) == (
            evaluate(m, n, w, f) and evaluate(m, n + 1, w, Always(f)))


@given(models(), formulas, st.sampled_from([a, b]), st.sampled_from([a, b]), point_n)
def test_assumption_is_strongest_belief_and_sort_gated(m, f, i, j, n):
    for w in m.worlds:
        if evaluate(m, n, w, Assume(i, j, f)):
            assert evaluate(m, n, w, Believe(i, j, f))
        for op in (Believe, Assume):
            if evaluate(m, n, w, op(i, j, f)):
                assert m.sort_of(w) is i


@given(models(), formulas, st.sampled_from([a, b]), point_n)
def test_same_sort_operators(m, f, i, n):
    # no relation links worlds of one sort, so B[i,i] is vacuous and A[i,i]
    # demands that f fail everywhere (the biconditional ranges over all worlds)
    nobody = not any(evaluate(m, n, z, f) for z in m.worlds)
    for w in m.sort_worlds(i):
        assert evaluate(m, n, w, Believe(i, i, f))
        assert evaluate(m, n, w, Assume(i, i, f)) == nobody


@given(models(), core_formulas)
@settings(max_examples=300)
def test_labeling_oracle_agrees(m, f):
    truth = truth_set(m, f)
    for t in range(m.horizon):
        for w in m.worlds:
            assert evaluate(m, t, w, f) == ((t, w) in truth)


def test_labeling_oracle_on_sugar(m1):
    f = parse("F D <-> !(G !D)")
    assert truth_set(m1, f) == {(t, w) for t in range(2) for w in m1.worlds}


def test_evaluator_handles_larger_models():
    rng = random.Random(5)
    m = random_model(rng, 3, 3, 2, 3)
    for _ in range(50):
        f = random_core(rng, 10)
        truth = truth_set(m, f)
        assert all(evaluate(m, t, w, f) == ((t, w) in truth)
                   for t in range(m.horizon) for w in m.worlds)


def test_sort_atoms(m0):
    assert [evaluate(m0, 0, w, UA) for w in m0.worlds] == [True, True, False, False]
    assert [evaluate(m0, 0, w, UB) for w in m0.worlds] == [False, False, True, True]
