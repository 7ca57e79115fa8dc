"""AST, parser, printer and desugaring for interactive temporal assumption formulas.

Concrete syntax (loosest to tightest binding)::

    <->    left-associative
    ->     right-associative
    |      left-associative
    &      left-associative
    !  X  G  F  B[i,j]  A[i,j]     prefix unaries

Atoms are identifiers, the sort atoms ``Ua`` / ``Ub``, the diagonal atom ``D``
and the constants ``true`` / ``false``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class Agent(enum.Enum):
    A = "a"
    B = "b"

    def __str__(self) -> str:
        return self.value

    @property
    def other(self) -> "Agent":
        return Agent.B if self is Agent.A else Agent.A


class Formula:
    """Base class of every AST node."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class SortAtom(Formula):
    agent: Agent


@dataclass(frozen=True)
class DiagAtom(Formula):
    pass


@dataclass(frozen=True)
class Truth(Formula):
    pass


@dataclass(frozen=True)
class Falsity(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Next(Formula):
    child: Formula


@dataclass(frozen=True)
class Always(Formula):
    child: Formula


@dataclass(frozen=True)
class Sometime(Formula):
    child: Formula


@dataclass(frozen=True)
class Believe(Formula):
    i: Agent
    j: Agent
    child: Formula


@dataclass(frozen=True)
class Assume(Formula):
    i: Agent
    j: Agent
    child: Formula


UNARY_TYPES = (Not, Next, Always, Sometime, Believe, Assume)
BINARY_TYPES = (And, Or, Implies, Iff)
ATOM_TYPES = (Prop, SortAtom, DiagAtom, Truth, Falsity)
CORE_TYPES = (Prop, SortAtom, DiagAtom, Not, And, Next, Always, Believe, Assume)

UA = SortAtom(Agent.A)
UB = SortAtom(Agent.B)
D = DiagAtom()

RESERVED_ATOMS = frozenset({"Ua", "Ub", "D", "true", "false"})
# operator letters; never usable as proposition names
KEYWORDS = frozenset({"X", "G", "F", "A", "B"})

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_identifier(name: str) -> bool:
    return bool(_IDENT.match(name)) and name not in RESERVED_ATOMS | KEYWORDS


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, UNARY_TYPES):
        return (f.child,)
    if isinstance(f, BINARY_TYPES):
        return (f.left, f.right)
    return ()


def size(f: Formula) -> int:
    """Number of AST nodes."""
    return 1 + sum(size(c) for c in children(f))


def depth(f: Formula) -> int:
    """Height of the tree; atoms have depth 0."""
    kids = children(f)
    return 1 + max(depth(c) for c in kids) if kids else 0


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order traversal (children before parents)."""
    for c in children(f):
        yield from subformulas(c)
    yield f


def is_core(f: Formula) -> bool:
    return all(isinstance(g, CORE_TYPES) for g in subformulas(f))


# --------------------------------------------------------------------------
# lexer / parser


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        exp = f"; expected one of {', '.join(sorted(expected))}" if expected else ""
        super().__init__(f"{message} at line {line}, column {column}{exp}")


class Token(NamedTuple):
    kind: str  # 'op', 'ident', 'epi', 'eof'
    text: str
    line: int
    column: int
    value: object = None


_PUNCT = ("<->", "->", "|", "&", "!", "(", ")")
_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_EPI = re.compile(r"([AB])\[\s*([^\s,\]]*)\s*,\s*([^\s,\]]*)\s*\]")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        ch = text[pos]
        col = pos - line_start + 1
        if ch == "\n":
            pos += 1
            line, line_start = line + 1, pos
            continue
        if ch.isspace():
            pos += 1
            continue
        if ch in "AB" and text.startswith("[", pos + 1):
            m = _EPI.match(text, pos)
            if not m:
                raise ParseError("malformed epistemic operator", line, col, frozenset({f"{ch}[a,b]"}))
            agents = []
            for k in (2, 3):
                tag = m.group(k)
                if tag not in ("a", "b"):
                    raise ParseError(f"bad agent tag {tag!r}", line, m.start(k) - line_start + 1,
                                     frozenset({"a", "b"}))
                agents.append(Agent(tag))
            tokens.append(Token("epi", m.group(0), line, col, (ch, *agents)))
            pos = m.end()
            continue
        for p in _PUNCT:
            if text.startswith(p, pos):
                tokens.append(Token("op", p, line, col))
                pos += len(p)
                break
        else:
            m = _WORD.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", line, col)
            tokens.append(Token("ident", m.group(0), line, col))
            pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_ATOM_START = frozenset({"identifier", "Ua", "Ub", "D", "true", "false", "("})
_UNARY_START = frozenset({"!", "X", "G", "F", "B[i,j]", "A[i,j]"})
_FORMULA_START = _ATOM_START | _UNARY_START


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, expected: frozenset[str]) -> ParseError:
        t = self.tok
        what = "end of input" if t.kind == "eof" else f"token {t.text!r}"
        return ParseError(f"unexpected {what}", t.line, t.column, expected)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def parse(self) -> Formula:
        f = self.iff()
        if self.tok.kind != "eof":
            expected = {"<->", "->", "|", "&"}
            if self.tok.text == ")":
                raise ParseError("unbalanced parenthesis", self.tok.line, self.tok.column,
                                 frozenset(expected | {"end of input"}))
            raise self.error(frozenset(expected | {"end of input"}))
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.accept("<->"):
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.accept("->"):
            return Implies(f, self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.accept("|"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        t = self.tok
        if t.kind == "op" and t.text == "!":
            self.pos += 1
            return Not(self.unary())
        if t.kind == "ident" and t.text in ("X", "G", "F"):
            self.pos += 1
            node = {"X": Next, "G": Always, "F": Sometime}[t.text]
            return node(self.unary())
        if t.kind == "epi":
            self.pos += 1
            letter, i, j = t.value
            node = Believe if letter == "B" else Assume
            return node(i, j, self.unary())
        return self.atom()

    def atom(self) -> Formula:
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.pos += 1
            f = self.iff()
            if not self.accept(")"):
                if self.tok.kind == "eof":
                    raise ParseError("unbalanced parenthesis", self.tok.line, self.tok.column,
                                     frozenset({")"}))
                raise self.error(frozenset({")", "<->", "->", "|", "&"}))
            return f
        if t.kind == "ident":
            self.pos += 1
            fixed = {"Ua": UA, "Ub": UB, "D": D, "true": Truth(), "false": Falsity()}
            if t.text in fixed:
                return fixed[t.text]
            if t.text in KEYWORDS:
                raise ParseError(f"reserved word {t.text!r} used as proposition",
                                 t.line, t.column, _FORMULA_START)
            return Prop(t.text)
        raise self.error(_FORMULA_START)


def parse(text: str) -> Formula:
    """Parse ``text`` into a :class:`Formula`; raises :class:`ParseError`."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printer

# binding strength; larger binds tighter
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_UNARY_PREC = 5
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), _UNARY_PREC)


def _wrap(f: Formula, parens: bool) -> str:
    s = render(f)
    return f"({s})" if parens else s


def render(f: Formula) -> str:
    """Print ``f`` with the fewest parentheses that parse back to the same tree."""
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, SortAtom):
        return f"U{f.agent.value}"
    if isinstance(f, DiagAtom):
        return "D"
    if isinstance(f, Truth):
        return "true"
    if isinstance(f, Falsity):
        return "false"
    if isinstance(f, UNARY_TYPES):
        if isinstance(f, Not):
            op = "!"
        elif isinstance(f, (Believe, Assume)):
            op = f"{'B' if isinstance(f, Believe) else 'A'}[{f.i},{f.j}] "
        else:
            op = {Next: "X ", Always: "G ", Sometime: "F "}[type(f)]
        return op + _wrap(f.child, isinstance(f.child, BINARY_TYPES))
    if isinstance(f, BINARY_TYPES):
        p = _PREC[type(f)]
        right_assoc = isinstance(f, Implies)
        left = _wrap(f.left, _prec(f.left) < p or (right_assoc and _prec(f.left) == p))
        right = _wrap(f.right, _prec(f.right) < p or (not right_assoc and _prec(f.right) == p))
        return f"{left} {_SYMBOL[type(f)]} {right}"
    raise TypeError(f"not a formula: {f!r}")


# --------------------------------------------------------------------------
# desugaring

CORE_TRUE: Formula = Not(And(D, Not(D)))
CORE_FALSE: Formula = Not(CORE_TRUE)


def desugar(f: Formula) -> Formula:
    """Rewrite ``f`` into the core connectives {not, and, next, always, B, A}."""
    if isinstance(f, (Prop, SortAtom, DiagAtom)):
        return f
    if isinstance(f, Truth):
        return CORE_TRUE
    if isinstance(f, Falsity):
        return CORE_FALSE
    if isinstance(f, Not):
        return Not(desugar(f.child))
    if isinstance(f, Next):
        return Next(desugar(f.child))
    if isinstance(f, Always):
        return Always(desugar(f.child))
    if isinstance(f, Sometime):
        return Not(Always(Not(desugar(f.child))))
    if isinstance(f, Believe):
        return Believe(f.i, f.j, desugar(f.child))
    if isinstance(f, Assume):
        return Assume(f.i, f.j, desugar(f.child))
    if isinstance(f, And):
        return And(desugar(f.left), desugar(f.right))
    if isinstance(f, Or):
        return Not(And(Not(desugar(f.left)), Not(desugar(f.right))))
    if isinstance(f, Implies):
        return Not(And(desugar(f.left), Not(desugar(f.right))))
    if isinstance(f, Iff):
        return desugar(And(Implies(f.left, f.right), Implies(f.right, f.left)))
    raise TypeError(f"not a formula: {f!r}")


def debug_repr(f: Formula) -> str:
    """Constructor-style dump, e.g. ``Always(DiagAtom)``."""
    if isinstance(f, Prop):
        return f'Prop("{f.name}")'
    if isinstance(f, SortAtom):
        return f"SortAtom({f.agent})"
    if isinstance(f, ATOM_TYPES):
        return type(f).__name__
    if isinstance(f, (Believe, Assume)):
        return f"{type(f).__name__}({f.i},{f.j},{debug_repr(f.child)})"
    return f"{type(f).__name__}({', '.join(debug_repr(c) for c in children(f))})"


# theorem formulas used throughout the package
THEOREM1_ANTECEDENT = parse("G (A[a,b] Ub)")
THEOREM1 = parse("G (B[a,b] A[b,a] (X G D)) -> G D")
THEOREM2 = parse("!G (B[a,b] A[b,a] (Ua & X G D))")
THEOREM2_PROOF_VARIANT = parse("!G (B[a,b] A[b,a] (X G D))")
BK_CONFIGURATION = parse("B[a,b] A[b,a] D")
