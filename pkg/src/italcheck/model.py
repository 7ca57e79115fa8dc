"""Finite lasso-shaped iTAL models: validation, (de)serialization, enumeration.

Time is a finite prefix followed by a loop that repeats forever, so the
natural-number-indexed family of possibility relations is stored as
``prefix_len + loop_len`` slices.  Slice ``canon_time(n)`` governs time ``n``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .formula import KEYWORDS, RESERVED_ATOMS, Agent

Pair = tuple[str, str]


class ModelError(ValueError):
    """Raised when a model description violates one or more invariants."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


class InfeasibleSpecError(ValueError):
    pass


@dataclass(frozen=True)
class BeliefSlice:
    """One time step: a static two-sorted belief model."""

    worlds_a: frozenset[str]
    worlds_b: frozenset[str]
    rel_ab: frozenset[Pair]
    rel_ba: frozenset[Pair]

    def violations(self, strict_proper: bool = True, time: int | None = None) -> list[str]:
        at = "" if time is None else f" at time {time}"
        out = []
        if not self.worlds_a:
            out.append(f"worlds_a is empty{at}")
        if not self.worlds_b:
            out.append(f"worlds_b is empty{at}")
        overlap = self.worlds_a & self.worlds_b
        if overlap:
            out.append(f"sorts overlap on {sorted(overlap)}{at}")
        for name, rel, dom, cod in (("rel_ab", self.rel_ab, self.worlds_a, self.worlds_b),
                                    ("rel_ba", self.rel_ba, self.worlds_b, self.worlds_a)):
            for u, v in sorted(rel):
                if u not in dom or v not in cod:
                    out.append(f"{name} pair ({u},{v}) is not in its sort product{at}")
            sources = {u for u, _ in rel}
            for u in sorted(dom - sources):
                out.append(f"{name} is not serial: world {u} has no successor{at}")
            if strict_proper and dom and cod and len(rel & _product(dom, cod)) == len(dom) * len(cod):
                out.append(f"{name} is not proper: it equals the full product{at}")
        return out

    def successors(self, w: str) -> frozenset[str]:
        rel = self.rel_ab if w in self.worlds_a else self.rel_ba
        return frozenset(v for u, v in rel if u == w)

    @property
    def relation(self) -> frozenset[Pair]:
        """The combined possibility relation P_n = rel_ab | rel_ba."""
        return self.rel_ab | self.rel_ba


def _product(xs: Iterable[str], ys: Iterable[str]) -> frozenset[Pair]:
    return frozenset(itertools.product(xs, ys))


@dataclass(frozen=True)
class TemporalModel:
    worlds_a: tuple[str, ...]
    worlds_b: tuple[str, ...]
    prefix_len: int
    loop_len: int
    slices: tuple[BeliefSlice, ...]
    valuation: Mapping[str, frozenset[tuple[int, str]]] = field(default_factory=dict)
    strict_proper: bool = True

    @property
    def horizon(self) -> int:
        """Number of stored (canonical) time indices."""
        return self.prefix_len + self.loop_len

    @property
    def worlds(self) -> tuple[str, ...]:
        """All worlds in the fixed search order (sorted by identifier)."""
        return tuple(sorted(self.worlds_a + self.worlds_b))

    @property
    def is_static(self) -> bool:
        return self.prefix_len == 0 and self.loop_len == 1

    def sort_of(self, w: str) -> Agent:
        if w in self.worlds_a:
            return Agent.A
        if w in self.worlds_b:
            return Agent.B
        raise UnknownWorldError(w)

    def sort_worlds(self, agent: Agent) -> tuple[str, ...]:
        return self.worlds_a if agent is Agent.A else self.worlds_b

    def slice_at(self, n: int) -> BeliefSlice:
        return self.slices[canon_time(self, n)]

    def summary(self) -> str:
        return (f"{len(self.worlds_a)}x{len(self.worlds_b)} prefix={self.prefix_len} "
                f"loop={self.loop_len}")

    def to_dict(self) -> dict:
        return {
            "worlds_a": list(self.worlds_a),
            "worlds_b": list(self.worlds_b),
            "prefix_len": self.prefix_len,
            "loop_len": self.loop_len,
            "slices": [
                {"rel_ab": [list(p) for p in sorted(s.rel_ab)],
                 "rel_ba": [list(p) for p in sorted(s.rel_ba)]}
                for s in self.slices
            ],
            "valuation": {p: [[t, w] for t, w in sorted(pts)]
                          for p, pts in sorted(self.valuation.items())},
            "strict_proper": self.strict_proper,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


class UnknownWorldError(KeyError):
    def __str__(self) -> str:
        return f"unknown world {self.args[0]!r}"


def canon_time(m: TemporalModel, n: int) -> int:
    """Fold an arbitrary natural-number time onto a stored slice index."""
    if n < 0:
        raise ValueError(f"time must be a natural number, got {n}")
    if n < m.horizon:
        return n
    return m.prefix_len + (n - m.prefix_len) % m.loop_len


def successor_time(m: TemporalModel, t: int) -> int:
    t = canon_time(m, t)
    return t + 1 if t + 1 < m.horizon else m.prefix_len


def future_times(m: TemporalModel, n: int) -> range:
    """Canonical indices of every time m >= n."""
    t = canon_time(m, n)
    return range(t, m.horizon) if t < m.prefix_len else range(m.prefix_len, m.horizon)


_FIELDS = {"worlds_a", "worlds_b", "prefix_len", "loop_len", "slices", "valuation", "strict_proper"}


def validate(raw: Mapping, strict_proper: bool | None = None) -> TemporalModel:
    """Check a decoded model description and build a :class:`TemporalModel`.

    ``strict_proper`` overrides the flag stored in ``raw`` (default true).
    Raises :class:`ModelError` listing every violation found.
    """
    errs: list[str] = []
    if not isinstance(raw, Mapping):
        raise ModelError(["model description must be a JSON object"])
    unknown = set(raw) - _FIELDS
    if unknown:
        errs.append(f"unknown fields {sorted(unknown)}")
    missing = {"worlds_a", "worlds_b", "slices"} - set(raw)
    if missing:
        raise ModelError(errs + [f"missing fields {sorted(missing)}"])
    if strict_proper is None:
        strict_proper = raw.get("strict_proper", True)
        if not isinstance(strict_proper, bool):
            errs.append("strict_proper must be a boolean")
            strict_proper = True

    def names(key: str) -> tuple[str, ...]:
        val = raw[key]
        if not isinstance(val, list) or not all(isinstance(w, str) for w in val):
            errs.append(f"{key} must be an array of strings")
            return ()
        if len(set(val)) != len(val):
            errs.append(f"{key} contains duplicate worlds")
        return tuple(dict.fromkeys(val))

    worlds_a, worlds_b = names("worlds_a"), names("worlds_b")
    slices_raw = raw["slices"]
    if not isinstance(slices_raw, list):
        raise ModelError(errs + ["slices must be an array"])
    prefix_len = raw.get("prefix_len", 0)
    loop_len = raw.get("loop_len", len(slices_raw) - prefix_len if isinstance(prefix_len, int) else 1)
    for key, val, lo in (("prefix_len", prefix_len, 0), ("loop_len", loop_len, 1)):
        if not isinstance(val, int) or isinstance(val, bool) or val < lo:
            errs.append(f"{key} must be an integer >= {lo}, got {val!r}")
    if errs and any(e.startswith(("prefix_len", "loop_len")) for e in errs):
        raise ModelError(errs)
    if len(slices_raw) != prefix_len + loop_len:
        errs.append(f"expected {prefix_len + loop_len} slices (prefix_len + loop_len), "
                    f"got {len(slices_raw)}")

    slices = []
    for t, s in enumerate(slices_raw):
        if not isinstance(s, Mapping) or set(s) != {"rel_ab", "rel_ba"}:
            errs.append(f"slice {t} must have exactly the fields rel_ab and rel_ba")
            continue
        rels = []
        for key in ("rel_ab", "rel_ba"):
            pairs = s[key]
            ok = isinstance(pairs, list) and all(
                isinstance(p, list) and len(p) == 2 and all(isinstance(w, str) for w in p)
                for p in pairs)
            if not ok:
                errs.append(f"slice {t} {key} must be an array of [world, world] pairs")
                pairs = []
            rels.append(frozenset(tuple(p) for p in pairs))
        sl = BeliefSlice(frozenset(worlds_a), frozenset(worlds_b), *rels)
        errs.extend(sl.violations(strict_proper, time=t))
        slices.append(sl)

    valuation: dict[str, frozenset[tuple[int, str]]] = {}
    all_worlds = set(worlds_a) | set(worlds_b)
    val_raw = raw.get("valuation", {})
    if not isinstance(val_raw, Mapping):
        errs.append("valuation must be an object")
        val_raw = {}
    for prop, pts in val_raw.items():
        if prop in RESERVED_ATOMS or prop in KEYWORDS:
            errs.append(f"valuation assigns reserved atom {prop!r}")
            continue
        good = set()
        for pt in pts if isinstance(pts, list) else [None]:
            if not (isinstance(pt, list) and len(pt) == 2 and isinstance(pt[0], int)
                    and isinstance(pt[1], str)):
                errs.append(f"valuation of {prop!r} has malformed point {pt!r}")
                continue
            t, w = pt
            if w not in all_worlds:
                errs.append(f"valuation of {prop!r} references unknown world {w!r}")
            if not 0 <= t < prefix_len + loop_len:
                errs.append(f"valuation of {prop!r} references time {t} outside the stored range")
            good.add((t, w))
        valuation[prop] = frozenset(good)

    if errs:
        raise ModelError(errs)
    return TemporalModel(worlds_a, worlds_b, prefix_len, loop_len, tuple(slices),
                         valuation, strict_proper)


def loads(text: str, strict_proper: bool | None = None) -> TemporalModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError([f"invalid JSON: {exc}"]) from exc
    return validate(raw, strict_proper)


def load(path: str | Path, strict_proper: bool | None = None) -> TemporalModel:
    return loads(Path(path).read_text(encoding="utf-8"), strict_proper)


def static_model(worlds_a: Iterable[str], worlds_b: Iterable[str], rel_ab: Iterable[Pair],
                 rel_ba: Iterable[Pair], strict_proper: bool = True) -> TemporalModel:
    """Convenience constructor for a one-slice (constant in time) model."""
    return validate({
        "worlds_a": list(worlds_a), "worlds_b": list(worlds_b), "prefix_len": 0, "loop_len": 1,
        "slices": [{"rel_ab": [list(p) for p in rel_ab], "rel_ba": [list(p) for p in rel_ba]}],
    }, strict_proper)


# --------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumSpec:
    size_a: int
    size_b: int
    prefix_len: int = 0
    loop_len: int = 1
    strict_proper: bool = True
    time_varying: bool = True

    def __post_init__(self):
        if self.size_a < 1 or self.size_b < 1:
            raise ValueError("size_a and size_b must be >= 1")
        if self.loop_len < 1 or self.prefix_len < 0:
            raise ValueError("need loop_len >= 1 and prefix_len >= 0")

    @property
    def is_static(self) -> bool:
        return self.prefix_len == 0 and self.loop_len == 1

    @classmethod
    def parse(cls, text: str) -> "EnumSpec":
        """Parse ``"a=2,b=2,prefix=0,loop=2,strict"``.

        Bare flags: ``strict`` / ``nonstrict`` and ``varying`` / ``constant``.
        Defaults are strict and time-varying.
        """
        keys = {"a": "size_a", "b": "size_b", "prefix": "prefix_len", "loop": "loop_len"}
        flags = {"strict": ("strict_proper", True), "nonstrict": ("strict_proper", False),
                 "varying": ("time_varying", True), "constant": ("time_varying", False)}
        kwargs: dict = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            if "=" in item:
                k, _, v = item.partition("=")
                if k.strip() not in keys:
                    raise ValueError(f"unknown enumeration key {k!r}")
                try:
                    kwargs[keys[k.strip()]] = int(v)
                except ValueError:
                    raise ValueError(f"{k} must be an integer, got {v!r}") from None
            elif item in flags:
                name, val = flags[item]
                kwargs[name] = val
            else:
                raise ValueError(f"unknown enumeration flag {item!r}")
        if "size_a" not in kwargs or "size_b" not in kwargs:
            raise ValueError("enumeration spec needs both a= and b=")
        return cls(**kwargs)

    def __str__(self) -> str:
        return (f"a={self.size_a},b={self.size_b},prefix={self.prefix_len},loop={self.loop_len},"
                f"{'strict' if self.strict_proper else 'nonstrict'},"
                f"{'varying' if self.time_varying else 'constant'}")

    def to_dict(self) -> dict:
        return {"size_a": self.size_a, "size_b": self.size_b, "prefix_len": self.prefix_len,
                "loop_len": self.loop_len, "strict_proper": self.strict_proper,
                "time_varying": self.time_varying}


def _serial_relations(dom: tuple[str, ...], cod: tuple[str, ...], strict: bool) -> list[frozenset[Pair]]:
    """Serial relations dom -> cod in increasing bitmask order.

    Bit ``i * len(cod) + j`` stands for the pair ``(dom[i], cod[j])``.
    """
    pairs = list(itertools.product(dom, cod))
    full = (1 << len(pairs)) - 1
    out = []
    for mask in range(1, full + 1):
        if strict and mask == full:
            continue
        rows = [(mask >> (i * len(cod))) & ((1 << len(cod)) - 1) for i in range(len(dom))]
        if all(rows):
            out.append(frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
    return out


def world_names(spec: EnumSpec) -> tuple[tuple[str, ...], tuple[str, ...]]:
    return (tuple(f"x{i + 1}" for i in range(spec.size_a)),
            tuple(f"y{i + 1}" for i in range(spec.size_b)))


def count_models(spec: EnumSpec) -> int:
    xs, ys = world_names(spec)
    per_slice = len(_serial_relations(xs, ys, spec.strict_proper)) * len(
        _serial_relations(ys, xs, spec.strict_proper))
    horizon = spec.prefix_len + spec.loop_len
    return per_slice ** horizon if spec.time_varying else per_slice


def enumerate_models(spec: EnumSpec) -> Iterator[TemporalModel]:
    """Yield every model of the given shape with an empty valuation.

    Order: slice 0 is the most significant digit; within a slice rel_ab
    comes before rel_ba, each in increasing bitmask order.
    """
    xs, ys = world_names(spec)
    ab = _serial_relations(xs, ys, spec.strict_proper)
    ba = _serial_relations(ys, xs, spec.strict_proper)
    if not ab or not ba:
        raise InfeasibleSpecError(
            f"no serial{' proper' if spec.strict_proper else ''} relations exist for "
            f"{spec.size_a}x{spec.size_b} worlds (strict properness needs at least 2 worlds "
            f"in some sort)")
    fa, fb = frozenset(xs), frozenset(ys)
    choices = [BeliefSlice(fa, fb, r1, r2) for r1 in ab for r2 in ba]
    horizon = spec.prefix_len + spec.loop_len
    if spec.time_varying:
        combos: Iterable[tuple[BeliefSlice, ...]] = itertools.product(choices, repeat=horizon)
    else:
        combos = ((s,) * horizon for s in choices)
    for slices in combos:
        yield TemporalModel(xs, ys, spec.prefix_len, spec.loop_len, tuple(slices), {},
                            spec.strict_proper)
