"""Brute-force abelian analysis of materialized word prefixes.

These scanners are evidence generators and cross-checks for the exact
procedures, not proofs: everything here sees only the supplied prefix.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EmptySelectionError,
    HorizonTooShortError,
    WrongSpectralCaseError,
)
from .matrices import THETA2_INTEGER, matrix_of, spectral_profile
from .words import BinaryMorphism, Word, parikh


def _as_array(source) -> np.ndarray:
    """Accept Word, str, or any int sequence; return a 1-d integer array."""
    if isinstance(source, Word):
        return source.data
    if isinstance(source, str):
        return Word.from_str(source).data
    arr = np.asarray(source)
    if arr.ndim != 1:
        raise ValueError("prefix must be one-dimensional")
    return arr


def _prefix_counts(arr: np.ndarray) -> np.ndarray:
    """P[i] = number of a's (letter code 0) among the first i letters."""
    counts = np.zeros(arr.size + 1, dtype=np.int64)
    np.cumsum(arr == 0, out=counts[1:])
    return counts


@dataclass(frozen=True)
class AbelianPeriodWitness:
    preperiod: int
    period: int
    horizon: int


def validate_abelian_period(source, preperiod: int, period: int) -> bool:
    """True when all complete period-blocks after the preperiod have equal
    Parikh vectors on this prefix. Needs at least two complete blocks."""
    arr = _as_array(source)
    if period <= 0 or preperiod < 0:
        raise ValueError("need period >= 1 and preperiod >= 0")
    nblocks = (arr.size - preperiod) // period
    if nblocks < 2:
        raise HorizonTooShortError(
            f"prefix of {arr.size} leaves {nblocks} complete blocks for "
            f"(r={preperiod}, p={period}); need at least 2"
        )
    counts = _prefix_counts(arr)
    idx = preperiod + period * np.arange(nblocks + 1, dtype=np.int64)
    sums = np.diff(counts[idx])
    return bool(np.all(sums == sums[0]))


def abelian_period_oracle(source, max_period: int, max_preperiod: int):
    """Lexicographically minimal (preperiod, period), preperiod first, such
    that every complete block in the prefix has the same Parikh vector.
    Returns None when no candidate within bounds survives the whole prefix.
    """
    arr = _as_array(source)
    if max_period < 1 or max_preperiod < 0:
        raise ValueError("need max_period >= 1 and max_preperiod >= 0")
    if arr.size < 2 * max_period + max_preperiod:
        raise HorizonTooShortError(
            f"prefix of {arr.size} is shorter than 2*max_period + max_preperiod "
            f"= {2 * max_period + max_preperiod}"
        )
    counts = _prefix_counts(arr)
    n = arr.size
    # valid[r, p-1] says blocks r, r+p, ... all carry the same a-count.
    valid = np.zeros((max_preperiod + 1, max_period), dtype=bool)
    for p in range(1, max_period + 1):
        win = counts[p:] - counts[:-p]  # a-count of each length-p window
        agree = win[:-p] == win[p:] if win.size > p else np.empty(0, dtype=bool)
        # ok[i]: all windows at i, i+p, i+2p, ... agree; suffix-AND per residue.
        ok = np.ones(win.size, dtype=bool)
        if agree.size:
            for c in range(p):
                col = agree[c::p]
                if col.size:
                    ok[c::p][:-1] = np.logical_and.accumulate(col[::-1])[::-1]
        limit = min(max_preperiod, n - 2 * p)
        if limit >= 0:
            valid[: limit + 1, p - 1] = ok[: limit + 1]
    hits = np.argwhere(valid)
    if hits.size == 0:
        return None
    r, pm1 = hits[0]  # argwhere is row-major, so this is (r, p) lexicographic
    return AbelianPeriodWitness(int(r), int(pm1) + 1, n)


@dataclass(frozen=True)
class ComplexityProfile:
    """Abelian complexity and imbalance for window lengths 1..nmax."""

    horizon: int
    lengths: np.ndarray
    complexity: np.ndarray
    imbalance: np.ndarray

    def rows(self) -> list[tuple[int, int, int]]:
        return [
            (int(self.lengths[i]), int(self.complexity[i]), int(self.imbalance[i]))
            for i in range(self.lengths.size)
        ]

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("length,complexity,imbalance\n")
        for length, comp, imb in self.rows():
            out.write(f"{length},{comp},{imb}\n")
        return out.getvalue()


def imbalance_at(source, length: int) -> int:
    """max - min of the a-count over all complete length-`length` windows."""
    arr = _as_array(source)
    if not 1 <= length <= arr.size:
        raise HorizonTooShortError(
            f"window length {length} does not fit in a prefix of {arr.size}"
        )
    counts = _prefix_counts(arr)
    win = counts[length:] - counts[:-length]
    return int(win.max() - win.min())


def complexity_profile(source, nmax: int) -> ComplexityProfile:
    """Window scan over all lengths 1..nmax.

    For binary words the a-count of a sliding window moves by at most 1 per
    step, so it takes every value between its min and max; the number of
    distinct Parikh vectors is therefore imbalance + 1.
    """
    arr = _as_array(source)
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    if arr.size < 2 * nmax:
        raise HorizonTooShortError(
            f"prefix of {arr.size} is shorter than 2*nmax = {2 * nmax}"
        )
    counts = _prefix_counts(arr)
    lengths = np.arange(1, nmax + 1, dtype=np.int64)
    imbalance = np.empty(nmax, dtype=np.int64)
    for i, ell in enumerate(lengths):
        win = counts[ell:] - counts[:-ell]
        imbalance[i] = win.max() - win.min()
    return ComplexityProfile(arr.size, lengths, imbalance + 1, imbalance)


def lattice_path_heights(source) -> np.ndarray:
    """Heights y_k = (#a - #b) of the prefix of length k, for k = 0..L.

    The word becomes a lattice path: a steps up, b steps down."""
    arr = _as_array(source)
    heights = np.zeros(arr.size + 1, dtype=np.int64)
    np.cumsum(np.where(arr == 0, 1, -1), out=heights[1:])
    return heights


def heights_to_csv(heights: Sequence[int]) -> str:
    out = io.StringIO()
    out.write("index,height\n")
    for i, h in enumerate(heights):
        out.write(f"{i},{int(h)}\n")
    return out.getvalue()


def letters_at_progression(source, r: int, d: int) -> set:
    """Set of letters at positions r, r+d, r+2d, ... inside the prefix.

    Works over any alphabet (binary words, or integer state sequences)."""
    if d < 1 or r < 0:
        raise ValueError("need r >= 0 and d >= 1")
    if isinstance(source, (Word, str)):
        arr = _as_array(source)
        if r >= arr.size:
            raise EmptySelectionError(f"start {r} is past the prefix of {arr.size}")
        return {"ab"[int(c)] for c in np.unique(arr[r::d])}
    arr = _as_array(source)
    if r >= arr.size:
        raise EmptySelectionError(f"start {r} is past the prefix of {arr.size}")
    return {int(c) for c in np.unique(arr[r::d])}


def theta2_one_invariant_check(f: BinaryMorphism, u: Word | str) -> bool:
    """For theta2 = 1 the matrix has the shape [[A+1, alpha*A], [B, alpha*B+1]];
    the linear form B|u|_a - A|u|_b is then invariant under applying f."""
    profile = spectral_profile(matrix_of(f))
    if profile.theta2_kind != THETA2_INTEGER or profile.theta2_value != 1:
        raise WrongSpectralCaseError(
            f"needs second eigenvalue exactly 1, got kind={profile.theta2_kind} "
            f"value={profile.theta2_value}"
        )
    m = matrix_of(f)
    a_param, b_param = m.m11 - 1, m.m21
    if isinstance(u, str):
        u = Word.from_str(u)
    pu = parikh(u)
    pf = parikh(f.apply(u))
    return (
        b_param * pf.count_a - a_param * pf.count_b
        == b_param * pu.count_a - a_param * pu.count_b
    )
