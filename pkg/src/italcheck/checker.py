"""Model-level satisfiability and validity, and the theorem-instance harnesses."""

from __future__ import annotations

import enum
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .formula import (
    THEOREM1, THEOREM1_ANTECEDENT, THEOREM2, THEOREM2_PROOF_VARIANT, Formula, render,
)
from .model import EnumSpec, TemporalModel, enumerate_models
from .semantics import Evaluator


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    VIOLATION = "VIOLATION"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    time: int
    world: str
    kind: str  # "satisfying" or "refuting"

    def to_dict(self) -> dict:
        return {"time": self.time, "world": self.world}


def points(m: TemporalModel) -> Iterable[tuple[int, str]]:
    """Canonical evaluation points, time-major then by world identifier."""
    for t in range(m.horizon):
        for w in m.worlds:
            yield t, w


def satisfiable(m: TemporalModel, f: Formula, evaluator: Evaluator | None = None) -> Optional[Witness]:
    ev = evaluator or Evaluator(m)
    for t, w in points(m):
        if ev.holds(t, w, f):
            return Witness(t, w, "satisfying")
    return None


def valid(m: TemporalModel, f: Formula, evaluator: Evaluator | None = None) -> Optional[Witness]:
    """Return the first refuting point, or None when ``f`` holds everywhere."""
    ev = evaluator or Evaluator(m)
    for t, w in points(m):
        if not ev.holds(t, w, f):
            return Witness(t, w, "refuting")
    return None


@dataclass
class TheoremReport:
    theorem: str
    model: TemporalModel
    formula: Formula
    verdict: Verdict
    witness: Optional[Witness] = None
    antecedent_witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "model": self.model.to_dict(),
            "formula": render(self.formula),
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict() if self.witness else None,
        }
        if self.antecedent_witness is not None:
            out["antecedent_witness"] = self.antecedent_witness.to_dict()
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def check_theorem1(m: TemporalModel) -> TheoremReport:
    ev = Evaluator(m)
    pre = satisfiable(m, THEOREM1_ANTECEDENT, ev)
    if pre is None:
        return TheoremReport("theorem1", m, THEOREM1, Verdict.VACUOUS)
    bad = valid(m, THEOREM1, ev)
    verdict = Verdict.HOLDS if bad is None else Verdict.VIOLATION
    return TheoremReport("theorem1", m, THEOREM1, verdict, bad, pre)


def check_theorem2(m: TemporalModel, proof_variant: bool = False) -> TheoremReport:
    """``proof_variant`` checks the form without the ``Ua`` conjunct."""
    f = THEOREM2_PROOF_VARIANT if proof_variant else THEOREM2
    bad = valid(m, f)
    verdict = Verdict.HOLDS if bad is None else Verdict.VIOLATION
    return TheoremReport("theorem2-variant" if proof_variant else "theorem2", m, f, verdict, bad)


@dataclass
class TheoremSweep:
    spec: EnumSpec
    models_total: int = 0
    theorem1: Counter = field(default_factory=Counter)
    theorem2: Counter = field(default_factory=Counter)
    theorem2_variant: Counter = field(default_factory=Counter)
    violations: list[TheoremReport] = field(default_factory=list)
    first_nonvacuous: Optional[TemporalModel] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "models_total": self.models_total,
            "theorem1": dict(sorted(self.theorem1.items())),
            "theorem2": dict(sorted(self.theorem2.items())),
            "theorem2_variant": dict(sorted(self.theorem2_variant.items())),
            "violations": [r.to_dict() for r in self.violations],
        }

    def summary(self) -> str:
        def fmt(c: Counter) -> str:
            return ", ".join(f"{k}={v}" for k, v in sorted(c.items()))
        lines = [f"{self.models_total} models ({self.spec})",
                 f"theorem1: {fmt(self.theorem1)}",
                 f"theorem2: {fmt(self.theorem2)}",
                 f"theorem2 (variant without Ua): {fmt(self.theorem2_variant)}"]
        lines.append("no violations" if self.ok else f"{len(self.violations)} VIOLATIONS")
        return "\n".join(lines)


def _check_one(m: TemporalModel) -> tuple[TheoremReport, TheoremReport, TheoremReport]:
    return check_theorem1(m), check_theorem2(m), check_theorem2(m, proof_variant=True)


def sweep_theorems(spec: EnumSpec, jobs: int = 1, models: Iterable[TemporalModel] | None = None) -> TheoremSweep:
    """Check both theorems on every enumerated model.

    The variant of theorem 2 is tallied for information only; violations of it
    are not counted as theorem violations.
    """
    out = TheoremSweep(spec)
    models = enumerate_models(spec) if models is None else models
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results: Iterable = pool.map(_check_one, models, chunksize=64)
            _tally(out, results)
    else:
        _tally(out, map(_check_one, models))
    return out


def _tally(out: TheoremSweep, results) -> None:
    for r1, r2, r2v in results:
        out.models_total += 1
        out.theorem1[r1.verdict.value] += 1
        out.theorem2[r2.verdict.value] += 1
        out.theorem2_variant[r2v.verdict.value] += 1
        if r1.verdict is Verdict.HOLDS and out.first_nonvacuous is None:
            out.first_nonvacuous = r1.model
        for r in (r1, r2):
            if r.verdict is Verdict.VIOLATION:
                out.violations.append(r)

