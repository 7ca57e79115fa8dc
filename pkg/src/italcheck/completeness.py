"""Definable sets and assumption-completeness of static belief models.

Definability is measured against the modal fragment built from the atoms
``Ua``, ``Ub``, ``D`` with negation, conjunction and the eight belief and
assumption operators.  Formulas are grouped by the set of worlds they define,
so the enumeration stays small: a model with ``k`` worlds has at most ``2**k``
classes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .formula import (
    D, UA, UB, Agent, And, Assume, Believe, Formula, Not, render, size,
)
from .model import EnumSpec, TemporalModel, enumerate_models
from .semantics import assumed_set, diag_slice

MAX_DEPTH = 4

_AGENT_PAIRS = [(i, j) for i in Agent for j in Agent]


def _rank(f: Formula) -> tuple[int, str]:
    return size(f), render(f)


def definable_classes(m: TemporalModel, depth: int) -> dict[frozenset[str], Formula]:
    """Map each set of worlds definable at tree height <= ``depth`` to its
    smallest defining formula (ties broken by rendered text)."""
    if not m.is_static:
        raise ValueError("definability is computed on static models (prefix 0, loop 1)")
    if not 0 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must be between 0 and {MAX_DEPTH}")
    everything = frozenset(m.worlds)
    sorts = {Agent.A: frozenset(m.worlds_a), Agent.B: frozenset(m.worlds_b)}
    succ = {w: assumed_set(m, 0, w) for w in m.worlds}

    # truth sets of the operators, computed on whole sets of worlds
    def modal(op, i: Agent, j: Agent, s: frozenset[str]) -> frozenset[str]:
        if op is Believe:
            return frozenset(w for w in sorts[i] if succ[w] & sorts[j] <= s)
        return frozenset(w for w in sorts[i] if succ[w] & sorts[j] == s)

    best: dict[frozenset[str], Formula] = {}
    nodes: dict[frozenset[str], int] = {}
    texts: dict[frozenset[str], str] = {}

    def offer(s: frozenset[str], f: Formula, n: int) -> None:
        cur = nodes.get(s)
        if cur is not None and n == cur:
            if s not in texts:
                texts[s] = render(best[s])
            text = render(f)
            if text < texts[s]:
                best[s], texts[s] = f, text
        elif cur is None or n < cur:
            best[s], nodes[s] = f, n
            texts.pop(s, None)

    offer(sorts[Agent.A], UA, 1)
    offer(sorts[Agent.B], UB, 1)
    offer(diag_slice(m, 0), D, 1)
    for _ in range(depth):
        reps = sorted(best.items(), key=lambda kv: (nodes[kv[0]], texts.get(kv[0]) or render(kv[1])))
        for s, f in reps:
            n = nodes[s] + 1
            offer(everything - s, Not(f), n)
            for i, j in _AGENT_PAIRS:
                for op in (Believe, Assume):
                    offer(modal(op, i, j, s), op(i, j, f), n)
        for k, (s, f) in enumerate(reps):
            for t, g in reps[k + 1:]:
                offer(s & t, And(f, g), nodes[s] + nodes[t] + 1)
    return best


@dataclass(frozen=True)
class DefinableFamily:
    sort: Agent
    sets: dict[frozenset[str], Formula]

    def __contains__(self, ys) -> bool:
        return frozenset(ys) in self.sets


def definable_sets(m: TemporalModel, depth: int, sort: Agent) -> DefinableFamily:
    """Distinct subsets of ``sort``'s worlds cut out by formulas of height <= depth."""
    return _restrict(m, definable_classes(m, depth), sort)


def _restrict(m: TemporalModel, classes: dict[frozenset[str], Formula], sort: Agent) -> DefinableFamily:
    members = frozenset(m.sort_worlds(sort))
    restricted: dict[frozenset[str], Formula] = {}
    for s, f in classes.items():
        key = s & members
        cur = restricted.get(key)
        if cur is None or _rank(f) < _rank(cur):
            restricted[key] = f
    return DefinableFamily(sort, restricted)


@dataclass
class CompletenessReport:
    complete: bool
    depth: int
    witness_set: Optional[frozenset[str]] = None
    witness_formula: Optional[Formula] = None
    witness_sort: Optional[Agent] = None

    @property
    def verdict(self) -> str:
        return "complete" if self.complete else "incomplete"

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict, "depth": self.depth, "witness": None}
        if not self.complete:
            out["witness"] = {"set": sorted(self.witness_set), "formula": render(self.witness_formula),
                              "sort": str(self.witness_sort)}
        return out


def is_complete(m: TemporalModel, depth: int) -> CompletenessReport:
    """Check that every nonempty definable set is assumed by some world of the
    opposite sort; otherwise report the failing set with the smallest formula.
    """
    failures = []
    classes = definable_classes(m, depth)
    for sort in (Agent.B, Agent.A):
        assumed = {assumed_set(m, 0, x) for x in m.sort_worlds(sort.other)}
        for ys, f in _restrict(m, classes, sort).sets.items():
            if ys and ys not in assumed:
                failures.append((_rank(f), sort is Agent.A, ys, f, sort))
    if not failures:
        return CompletenessReport(True, depth)
    _, _, ys, f, sort = min(failures, key=lambda r: (r[0], r[1]))
    return CompletenessReport(False, depth, ys, f, sort)


@dataclass
class SweepReport:
    spec: EnumSpec
    depth: int
    models_total: int = 0
    models_incomplete: int = 0
    complete_models: list[TemporalModel] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"spec": self.spec.to_dict(), "depth": self.depth,
                "models_total": self.models_total, "models_incomplete": self.models_incomplete,
                "complete_models": [m.to_dict() for m in self.complete_models]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _complete_flag(args: tuple[TemporalModel, int]) -> bool:
    return is_complete(*args).complete


def bk_sweep(spec: EnumSpec, depth: int, jobs: int = 1) -> SweepReport:
    """Run :func:`is_complete` on every static model of ``spec``."""
    if not spec.is_static:
        raise ValueError("the completeness sweep needs a static spec (prefix 0, loop 1)")
    if not spec.strict_proper:
        raise ValueError("the completeness sweep runs on strict (proper) models only")
    out = SweepReport(spec, depth)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            flags = pool.map(_complete_flag, ((m, depth) for m in enumerate_models(spec)),
                             chunksize=64)
            _tally(out, enumerate_models(spec), flags)
    else:
        models = list(enumerate_models(spec))
        _tally(out, models, (_complete_flag((m, depth)) for m in models))
    return out


def _tally(out: SweepReport, models: Iterable[TemporalModel], flags: Iterable[bool]) -> None:
    for m, complete in zip(models, flags):
        out.models_total += 1
        if complete:
            out.complete_models.append(m)
        else:
            out.models_incomplete += 1
