"""Certified search for eventual periodicity of the fixed point.

Candidates (u, w) with u w^omega matching a long prefix of f^omega(a) are
certified exactly: u w^omega is a fixed point of f iff f(u) f(w)^omega equals
u w^omega, and equality of two eventually periodic words is decided by
comparing prefixes of length max(|u1|, |u2|) + lcm(|w1|, |w2|). A certified
candidate equals f^omega(a) because both start with a and the fixed point
prolongable on a is unique. Negative outcomes only mean no candidate exists
within the stated bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .words import BinaryMorphism, Word, fixed_point_prefix


def periodic_prefix(preperiod: Word, period: Word, length: int) -> Word:
    """First `length` letters of u w^omega."""
    if len(period) == 0:
        raise ValueError("period word must be nonempty")
    if length <= len(preperiod):
        return preperiod[:length]
    tail = length - len(preperiod)
    reps = -(-tail // len(period))
    return Word(
        np.concatenate([preperiod.data, np.tile(period.data, reps)])[:length]
    )


def eq_eventually_periodic(u1: Word, w1: Word, u2: Word, w2: Word) -> bool:
    """Exact equality of u1 w1^omega and u2 w2^omega."""
    if len(w1) == 0 or len(w2) == 0:
        raise ValueError("period words must be nonempty")
    n = max(len(u1), len(u2)) + math.lcm(len(w1), len(w2))
    return periodic_prefix(u1, w1, n) == periodic_prefix(u2, w2, n)


@dataclass(frozen=True)
class PeriodicityVerdict:
    """status "periodic" carries the certified presentation (u, w); status
    "not_found" only rules out presentations within the recorded bounds."""

    status: str
    preperiod: Word | None
    period: Word | None
    max_preperiod: int
    max_period: int

    @property
    def found(self) -> bool:
        return self.status == "periodic"


def default_search_bound(f: BinaryMorphism) -> int:
    total = len(f.image_a) + len(f.image_b)
    return 4 * total * total


def decide_periodic(
    f: BinaryMorphism,
    max_period: int | None = None,
    max_preperiod: int | None = None,
) -> PeriodicityVerdict:
    """Search for (u, w) with f^omega(a) = u w^omega, |u| <= max_preperiod and
    |w| <= max_period, scanning preperiods then periods ascending.

    A candidate must first reproduce a prefix of length max_preperiod +
    4 max_period; survivors are certified via f(u) f(w)^omega = u w^omega,
    which is exact, so "periodic" verdicts are proofs."""
    f.require_prolongable()
    bound = default_search_bound(f)
    max_p = bound if max_period is None else max_period
    max_r = bound if max_preperiod is None else max_preperiod
    if max_p < 1 or max_r < 0:
        raise ValueError("bounds must allow at least one candidate")
    horizon = max_r + 4 * max_p
    arr = fixed_point_prefix(f, horizon).data
    for r in range(max_r + 1):
        tail = arr[r:]
        for p in range(1, max_p + 1):
            reps = -(-tail.size // p)
            if not np.array_equal(np.tile(arr[r : r + p], reps)[: tail.size], tail):
                continue
            u, w = Word(arr[:r]), Word(arr[r : r + p])
            if eq_eventually_periodic(f.apply(u), f.apply(w), u, w):
                return PeriodicityVerdict("periodic", u, w, max_r, max_p)
    return PeriodicityVerdict("not_found", None, None, max_r, max_p)
