"""Walk-through of the Brandenburger-Keisler configuration on a concrete model.

For an Ann state ``x`` the question is whether ``D`` holds at ``x``.  Each
answer is tested by rebuilding Bob's possibility sets so that every Bob state
``x`` considers possible assumes exactly the Ann states where ``D`` holds
(with ``x`` placed according to the answer), then re-evaluating ``D`` at ``x``
in the rebuilt model.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .checker import satisfiable
from .formula import BK_CONFIGURATION, D, render
from .model import ModelError, TemporalModel, loads, validate
from .semantics import assumed_set, diag_slice, evaluate


def bundled_model() -> TemporalModel:
    text = resources.files("italcheck").joinpath("data/bk_demo.json").read_text(encoding="utf-8")
    return loads(text)


@dataclass(frozen=True)
class Branch:
    answer: bool
    target: frozenset[str]  # Ann states Bob is made to assume
    model: TemporalModel | None  # None when the rebuilt relation is not serial
    outcome: bool | None  # D at x in the rebuilt model

    @property
    def consistent(self) -> bool:
        return self.outcome is not None and self.outcome == self.answer


def bk_branches(m: TemporalModel, x: str) -> tuple[Branch, Branch]:
    """Test the answers "yes" and "no" for Ann state ``x`` (static models)."""
    diag_a = diag_slice(m, 0) & frozenset(m.worlds_a)
    bobs = assumed_set(m, 0, x)
    out = []
    for answer in (True, False):
        target = (diag_a | {x}) if answer else (diag_a - {x})
        sl = m.slices[0]
        rel_ba = {p for p in sl.rel_ba if p[0] not in bobs}
        rel_ba |= {(y, z) for y in bobs for z in target}
        raw = m.to_dict()
        raw["slices"] = [{"rel_ab": [list(p) for p in sorted(sl.rel_ab)],
                          "rel_ba": [list(p) for p in sorted(rel_ba)]}]
        try:
            rebuilt = validate(raw, strict_proper=False)
        except ModelError:
            out.append(Branch(answer, frozenset(target), None, None))
            continue
        out.append(Branch(answer, frozenset(target), rebuilt, evaluate(rebuilt, 0, x, D)))
    return out[0], out[1]


def _fmt(ws) -> str:
    return "{" + ", ".join(sorted(ws)) + "}"


def bk_narrative(m: TemporalModel | None = None) -> str:
    m = m or bundled_model()
    if not m.is_static:
        raise ValueError("the walk-through needs a static model")
    yes_no = {True: "yes", False: "no"}
    lines = [
        "Brandenburger-Keisler configuration",
        "  Ann believes that Bob assumes that Ann believes that Bob's assumption is wrong",
        f"  formula: {render(BK_CONFIGURATION)}",
        "",
        f"Model: Ann states {_fmt(m.worlds_a)}, Bob states {_fmt(m.worlds_b)}",
    ]
    for w in m.worlds:
        lines.append(f"  {w} considers possible {_fmt(assumed_set(m, 0, w))}")
    diag = diag_slice(m, 0)
    lines.append(f"  D (\"Ann believes that Bob's assumption is wrong\") holds at "
                 f"{_fmt(diag & frozenset(m.worlds_a))} among Ann states")
    sat = satisfiable(m, BK_CONFIGURATION)
    lines.append(f"  configuration satisfiable in this model: {yes_no[sat is not None]}")
    lines.append("")
    lines.append("Question: does Ann believe that Bob's assumption is wrong?")
    answered = 0
    for x in m.worlds_a:
        lines.append(f"  Ann state {x} (Bob states considered: {_fmt(assumed_set(m, 0, x))})")
        for b in bk_branches(m, x):
            lines.append(f"    suppose {yes_no[b.answer]}: make each of those Bob states "
                         f"assume {_fmt(b.target)}")
            if b.model is None:
                lines.append("      rebuilt model is not serial; branch unavailable")
                continue
            verdict = "consistent" if b.consistent else "contradiction"
            lines.append(f"      then D at {x} evaluates to {str(b.outcome).lower()}: {verdict}")
        consistent = [b for b in bk_branches(m, x) if b.consistent]
        lines.append(f"    consistent answers: {len(consistent)}")
        answered += bool(consistent)
    lines.append("")
    if answered:
        lines.append(f"{answered} Ann state(s) admit a consistent answer; inspect this model.")
    else:
        lines.append("No Ann state admits a consistent answer, so the configuration is not "
                     "represented.")
    return "\n".join(lines) + "\n"
