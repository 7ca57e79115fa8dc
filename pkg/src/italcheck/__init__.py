"""Model checking for interactive temporal assumption logic on lasso models."""

from .checker import Verdict, Witness, check_theorem1, check_theorem2, satisfiable, sweep_theorems, valid
from .completeness import bk_sweep, definable_sets, is_complete
from .formula import Agent, Formula, ParseError, desugar, parse, render
from .model import EnumSpec, ModelError, TemporalModel, canon_time, enumerate_models, load, validate
from .semantics import assumed_set, assumes, believes, diag_slice, evaluate
from .yablo import finite_yablo, periodic_yablo

__all__ = [
    "Agent", "EnumSpec", "Formula", "ModelError", "ParseError", "TemporalModel", "Verdict",
    "Witness", "assumed_set", "assumes", "believes", "bk_sweep", "canon_time", "check_theorem1",
    "check_theorem2", "definable_sets", "desugar", "diag_slice", "enumerate_models", "evaluate",
    "finite_yablo", "is_complete", "load", "parse", "periodic_yablo", "render", "satisfiable",
    "sweep_theorems", "valid", "validate",
]
