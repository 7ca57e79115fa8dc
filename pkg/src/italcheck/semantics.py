"""Point-wise satisfaction of iTAL formulas on lasso models.

``evaluate(m, n, w, f)`` decides ``(n, w) |= f``.  Every natural number ``n``
is folded onto a stored slice first, so the result is exact for the infinite
model the lasso denotes.

Believe/Assume read the believer's sort from the first agent index and the
subject's sort from the second: ``B[i,j] f`` holds at ``w`` iff ``w`` is an
``i``-world and every ``j``-world it considers possible satisfies ``f``;
``A[i,j] f`` additionally requires every ``j``-world satisfying ``f`` to be
considered possible.
"""

from __future__ import annotations

from typing import AbstractSet

from .formula import (
    Agent, Always, And, Assume, Believe, DiagAtom, Falsity, Formula, Iff, Implies, Next, Not,
    Or, Prop, Sometime, SortAtom, Truth,
)
from .model import TemporalModel, UnknownWorldError, canon_time, future_times, successor_time


class Evaluator:
    """Memoizing evaluator bound to one model.

    The memo is keyed on subformula identity, so it is only valid while the
    formulas passed in stay alive; :meth:`holds` keeps a reference to each
    root it has seen.
    """

    def __init__(self, m: TemporalModel):
        self.m = m
        self._worlds = m.worlds
        self._sort = {w: Agent.A for w in m.worlds_a} | {w: Agent.B for w in m.worlds_b}
        # successors[t][w]: worlds z with P_t(w, z)
        self._succ = [
            {w: tuple(sorted(s.successors(w))) for w in self._worlds} for s in m.slices
        ]
        self._next = [successor_time(m, t) for t in range(m.horizon)]
        self._future = [tuple(future_times(m, t)) for t in range(m.horizon)]
        self._memo: dict[tuple[int, int, str], bool] = {}
        self._roots: list[Formula] = []

    def holds(self, n: int, w: str, f: Formula) -> bool:
        if w not in self._sort:
            raise UnknownWorldError(w)
        self._roots.append(f)
        return self._eval(canon_time(self.m, n), w, f)

    def _eval(self, t: int, w: str, f: Formula) -> bool:
        key = (id(f), t, w)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._clause(t, w, f)
        return hit

    def _clause(self, t: int, w: str, f: Formula) -> bool:
        ev = self._eval
        if isinstance(f, Prop):
            return (t, w) in self.m.valuation.get(f.name, ())
        if isinstance(f, SortAtom):
            return self._sort[w] is f.agent
        if isinstance(f, DiagAtom):
            succ = self._succ[t]
            return all(w not in succ[z] for z in succ[w])
        if isinstance(f, Not):
            return not ev(t, w, f.child)
        if isinstance(f, And):
            return ev(t, w, f.left) and ev(t, w, f.right)
        if isinstance(f, Next):
            return ev(self._next[t], w, f.child)
        if isinstance(f, Always):
            return all(ev(u, w, f.child) for u in self._future[t])
        if isinstance(f, Believe):
            if self._sort[w] is not f.i:
                return False
            return all(ev(t, z, f.child) for z in self._succ[t][w] if self._sort[z] is f.j)
        if isinstance(f, Assume):
            if self._sort[w] is not f.i:
                return False
            succ = self._succ[t][w]
            return all(
                (z in succ and self._sort[z] is f.j) == ev(t, z, f.child) for z in self._worlds
            )
        # derived connectives, evaluated natively
        if isinstance(f, Truth):
            return True
        if isinstance(f, Falsity):
            return False
        if isinstance(f, Or):
            return ev(t, w, f.left) or ev(t, w, f.right)
        if isinstance(f, Implies):
            return not ev(t, w, f.left) or ev(t, w, f.right)
        if isinstance(f, Iff):
            return ev(t, w, f.left) == ev(t, w, f.right)
        if isinstance(f, Sometime):
            return any(ev(u, w, f.child) for u in self._future[t])
        raise TypeError(f"not a formula: {f!r}")


def evaluate(m: TemporalModel, n: int, w: str, f: Formula) -> bool:
    """Decide whether ``f`` holds at world ``w`` and time ``n`` of ``m``.

    Unknown propositions are false everywhere; unknown worlds raise
    :class:`UnknownWorldError`.
    """
    return Evaluator(m).holds(n, w, f)


def _check_world(m: TemporalModel, w: str) -> None:
    if w not in m.worlds_a and w not in m.worlds_b:
        raise UnknownWorldError(w)


def assumed_set(m: TemporalModel, n: int, x: str) -> frozenset[str]:
    """Worlds of the opposite sort that ``x`` considers possible at time ``n``."""
    _check_world(m, x)
    return m.slice_at(n).successors(x)


def _check_target(m: TemporalModel, x: str, ys: AbstractSet[str]) -> None:
    _check_world(m, x)
    opposite = set(m.sort_worlds(m.sort_of(x).other))
    bad = set(ys) - opposite
    if bad:
        raise ValueError(f"{sorted(bad)} are not worlds of the sort opposite to {x!r}")


def believes(m: TemporalModel, n: int, x: str, ys: AbstractSet[str]) -> bool:
    _check_target(m, x, ys)
    return assumed_set(m, n, x) <= set(ys)


def assumes(m: TemporalModel, n: int, x: str, ys: AbstractSet[str]) -> bool:
    _check_target(m, x, ys)
    return assumed_set(m, n, x) == set(ys)


def diag_slice(m: TemporalModel, n: int) -> frozenset[str]:
    """Worlds where the diagonal atom D holds at time ``n``."""
    rel = m.slice_at(n).relation
    return frozenset(w for w in m.worlds if not any((z, w) in rel for u, z in rel if u == w))
