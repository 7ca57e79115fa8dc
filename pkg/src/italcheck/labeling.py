"""Bottom-up labeling evaluator.

Computes, for each subformula, the full set of stored (time, world) points
where it holds.  It shares no code with :mod:`italcheck.semantics` beyond the
model data itself and serves as the cross-check oracle for it.  Temporal
operators are handled through explicit reachability along the successor-time
graph instead of the closed-form future window used by the recursive
evaluator.
"""

from __future__ import annotations

from typing import Iterable

from .formula import (
    Always, And, Assume, Believe, DiagAtom, Formula, Next, Not, Prop, SortAtom, desugar,
    subformulas,
)
from .model import TemporalModel

Point = tuple[int, str]


def _time_graph(m: TemporalModel) -> dict[int, int]:
    horizon = len(m.slices)
    return {t: (t + 1 if t + 1 < horizon else m.prefix_len) for t in range(horizon)}


def _reachable(step: dict[int, int], t: int) -> set[int]:
    seen = {t}
    while step[t] not in seen:
        t = step[t]
        seen.add(t)
    return seen


def label(m: TemporalModel, f: Formula) -> dict[Formula, frozenset[Point]]:
    """Truth set of every subformula of ``desugar(f)``."""
    return label_many(m, [f])


def label_many(m: TemporalModel, formulas: Iterable[Formula]) -> dict[Formula, frozenset[Point]]:
    """Like :func:`label`, sharing work across several roots."""
    times = range(len(m.slices))
    worlds = list(m.worlds_a) + list(m.worlds_b)
    points = {(t, w) for t in times for w in worlds}
    sort_a, sort_b = set(m.worlds_a), set(m.worlds_b)
    rel = [set(s.rel_ab) | set(s.rel_ba) for s in m.slices]
    step = _time_graph(m)
    later = {t: _reachable(step, t) for t in times}

    out: dict[Formula, frozenset[Point]] = {}
    for g in (g for f in formulas for g in subformulas(desugar(f))):
        if g in out:
            continue
        if isinstance(g, Prop):
            s = set(m.valuation.get(g.name, ())) & points
        elif isinstance(g, SortAtom):
            members = sort_a if g.agent.value == "a" else sort_b
            s = {(t, w) for (t, w) in points if w in members}
        elif isinstance(g, DiagAtom):
            s = {(t, w) for (t, w) in points
                 if not any((w, z) in rel[t] and (z, w) in rel[t] for z in worlds)}
        elif isinstance(g, Not):
            s = points - out[g.child]
        elif isinstance(g, And):
            s = set(out[g.left] & out[g.right])
        elif isinstance(g, Next):
            s = {(t, w) for (t, w) in points if (step[t], w) in out[g.child]}
        elif isinstance(g, Always):
            s = {(t, w) for (t, w) in points if all((u, w) in out[g.child] for u in later[t])}
        elif isinstance(g, (Believe, Assume)):
            src = sort_a if g.i.value == "a" else sort_b
            dst = sort_a if g.j.value == "a" else sort_b
            s = set()
            for t, w in points:
                if w not in src:
                    continue
                seen = {z for z in dst if (w, z) in rel[t]}
                sat = {z for z in worlds if (t, z) in out[g.child]}
                if (seen <= sat) if isinstance(g, Believe) else (seen == sat):
                    s.add((t, w))
        else:
            raise TypeError(f"not a core formula: {g!r}")
        out[g] = frozenset(s)
    return out


def truth_set(m: TemporalModel, f: Formula) -> frozenset[Point]:
    return label(m, f)[desugar(f)]
