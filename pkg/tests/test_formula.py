import pytest
from hypothesis import given, settings

from italcheck.formula import (
    CORE_FALSE, CORE_TRUE, Agent, Always, And, Assume, Believe, D, DiagAtom, Falsity, Iff,
    Implies, Next, Not, Or, ParseError, Prop, Sometime, SortAtom, Truth, desugar, is_core, parse,
    render,
)
from tests.gen import core_formulas, formulas

a, b = Agent.A, Agent.B


def test_parse_theorem1():
    f = parse("G (B[a,b] A[b,a] (X G D)) -> G D")
    assert f == Implies(Always(Believe(a, b, Assume(b, a, Next(Always(DiagAtom()))))),
                        Always(DiagAtom()))


def test_parse_theorem2():
    f = parse("!G(B[a,b] A[b,a] (Ua & X G D))")
    assert f == Not(Always(Believe(a, b, Assume(b, a, And(SortAtom(a), Next(Always(D)))))))


@pytest.mark.parametrize("text, expected", [
    ("p", Prop("p")),
    ("Ua", SortAtom(a)),
    ("true", Truth()),
    ("false", Falsity()),
    ("F p", Sometime(Prop("p"))),
    ("p -> q -> r", Implies(Prop("p"), Implies(Prop("q"), Prop("r")))),
    ("p <-> q <-> r", Iff(Iff(Prop("p"), Prop("q")), Prop("r"))),
    ("p | q & r", Or(Prop("p"), And(Prop("q"), Prop("r")))),
    ("p & q | r -> s", Implies(Or(And(Prop("p"), Prop("q")), Prop("r")), Prop("s"))),
    ("!p & q", And(Not(Prop("p")), Prop("q"))),
    ("X G F p", Next(Always(Sometime(Prop("p"))))),
    ("B[ a , b ]p", Believe(a, b, Prop("p"))),
    ("  p\n  &\tq ", And(Prop("p"), Prop("q"))),
    ("Xp", Prop("Xp")),
])
def test_parse_cases(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, message", [
    ("G(B[a,b] A[b,a] (X G D)) ->", "unexpected end of input"),
    ("(p & q", "unbalanced parenthesis"),
    ("p & q)", "unbalanced parenthesis"),
    ("B[a,c] p", "bad agent tag"),
    ("A[x,b] p", "bad agent tag"),
    ("G", "unexpected end of input"),
    ("X & p", "unexpected token"),
    ("p q", "unexpected token"),
    ("p $ q", "unexpected character"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse(text)


def test_parse_error_position_and_expected():
    with pytest.raises(ParseError) as info:
        parse("p &\n  -> q")
    err = info.value
    assert (err.line, err.column) == (2, 3)
    assert "identifier" in err.expected and "(" in err.expected


def test_reserved_keyword_as_proposition():
    with pytest.raises(ParseError, match="reserved word 'B'"):
        parse("p & B")


def test_render_examples():
    assert render(Prop("p")) == "p"
    assert render(Always(DiagAtom())) == "G D"
    assert render(And(Prop("p"), Or(Prop("q"), Prop("r")))) == "p & (q | r)"
    assert render(Implies(Implies(Prop("p"), Prop("q")), Prop("r"))) == "(p -> q) -> r"
    assert render(And(Prop("p"), And(Prop("q"), Prop("r")))) == "p & (q & r)"
    assert render(Not(And(Prop("p"), Prop("q")))) == "!(p & q)"
    assert render(Believe(a, b, Not(D))) == "B[a,b] !D"


@given(formulas)
@settings(max_examples=500)
def test_round_trip(f):
    assert parse(render(f)) == f


def test_desugar_examples():
    assert desugar(Sometime(D)) == Not(Always(Not(D)))
    assert desugar(Prop("p")) == Prop("p")
    assert desugar(Implies(Prop("p"), Prop("q"))) == Not(And(Prop("p"), Not(Prop("q"))))
    assert desugar(Or(Prop("p"), Prop("q"))) == Not(And(Not(Prop("p")), Not(Prop("q"))))
    assert desugar(Truth()) == CORE_TRUE == Not(And(D, Not(D)))
    assert desugar(Falsity()) == CORE_FALSE
    p, q = Prop("p"), Prop("q")
    assert desugar(Iff(p, q)) == And(Not(And(p, Not(q))), Not(And(q, Not(p))))


@given(formulas)
def test_desugar_yields_core(f):
    assert is_core(desugar(f))


@given(core_formulas)
def test_desugar_idempotent_on_core(f):
    assert desugar(f) == f
    assert desugar(desugar(f)) == desugar(f)
