"""Truth assignments for the Yablo sentence scheme.

Sentence ``S_i`` says "every later sentence is untrue".  Truncated to
finitely many sentences the scheme has exactly one consistent assignment;
over an ultimately periodic infinite sequence it has none.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

MAX_FINITE = 20
MAX_PERIODIC = 24


@dataclass(frozen=True)
class Assignment:
    """Truth values of S_1, S_2, ...: ``prefix`` then ``loop`` repeated forever.

    An empty ``loop`` means the sequence is finite.
    """

    prefix: tuple[bool, ...]
    loop: tuple[bool, ...] = ()

    @property
    def is_finite(self) -> bool:
        return not self.loop

    def value(self, i: int) -> bool:
        """Truth value of the ``i``-th sentence (0-based)."""
        if i < len(self.prefix):
            return self.prefix[i]
        if not self.loop:
            raise IndexError(i)
        return self.loop[(i - len(self.prefix)) % len(self.loop)]

    def later(self, i: int) -> tuple[bool, ...]:
        """Values of all sentences after ``i``, each loop position counted once."""
        n = len(self.prefix)
        if i < n:
            return self.prefix[i + 1:] + self.loop
        return self.loop

    def consistent(self) -> bool:
        """True when every stored sentence's value matches what it says."""
        return all(self.value(i) == (not any(self.later(i)))
                   for i in range(len(self.prefix) + len(self.loop)))

    def to_dict(self) -> dict:
        return {"prefix": list(self.prefix), "loop": list(self.loop)}


def finite_yablo(n: int) -> list[Assignment]:
    """All consistent assignments to S_1..S_n, where "later" ranges over
    the existing sentences only."""
    if not 1 <= n <= MAX_FINITE:
        raise ValueError(f"n must be between 1 and {MAX_FINITE}")
    return [a for bits in itertools.product((False, True), repeat=n)
            if (a := Assignment(bits)).consistent()]


def periodic_yablo(prefix_len: int, loop_len: int) -> Optional[Assignment]:
    """Search every lasso-shaped assignment of the given shape for a
    consistent one; returns the first found, or None."""
    if loop_len < 1 or prefix_len < 0:
        raise ValueError("need loop_len >= 1 and prefix_len >= 0")
    if prefix_len + loop_len > MAX_PERIODIC:
        raise ValueError(f"prefix_len + loop_len must be at most {MAX_PERIODIC}")
    for bits in itertools.product((False, True), repeat=prefix_len + loop_len):
        a = Assignment(bits[:prefix_len], bits[prefix_len:])
        if a.consistent():
            return a
    return None
