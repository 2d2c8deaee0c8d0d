"""Decision machinery for morphisms whose matrix has second eigenvalue 0.

When the incidence matrix factors as [[nA, mA], [nB, mB]] with gcd(n, m) = 1,
every image under f has a-density exactly A/(A+B), image lengths are n(A+B)
and m(A+B), and iterating f multiplies all block lengths by the trace
k = nA + mB. The fixed point is purely abelian periodic iff for some K the
words f^K(a) and f^K(b) split into n resp. m abelian-equivalent chunks of
length (A+B) k^(K-1).

The chunk test at level t is a function of the "cut configuration": where the
chunk boundaries fall inside the level-1 block decomposition. Configurations
evolve deterministically in t, so a repeated configuration refutes purity for
all larger t and the scan may stop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotCoprimeError, OutOfRangeError
from .matrices import MorphismMatrix, Rank1Form, matrix_of, rank1_decompose
from .words import BinaryMorphism, ParikhVector, fixed_point_prefix


def block_length(f: BinaryMorphism, form: Rank1Form, u) -> int:
    """|f(u)| / (A+B): the number of length-(A+B) cells the image of u spans."""
    from .words import Word, parikh

    if isinstance(u, str):
        u = Word.from_str(u)
    pv = parikh(u)
    la, lb = len(f.image_a), len(f.image_b)
    total = la * pv.count_a + lb * pv.count_b
    assert total % form.block_unit == 0
    return total // form.block_unit


def _tables(f: BinaryMorphism, t: int):
    """Lengths and Parikh vectors of f^s(a) and f^s(b) for s = 0..t, exact."""
    m = matrix_of(f)
    pa = [ParikhVector(1, 0)]
    pb = [ParikhVector(0, 1)]
    for _ in range(t):
        pa.append(m.apply(pa[-1]))
        pb.append(m.apply(pb[-1]))
    lengths = [(v.length, w.length) for v, w in zip(pa, pb)]
    return lengths, pa, pb


def prefix_parikh(f: BinaryMorphism, seed: str, t: int, ell: int) -> ParikhVector:
    """Parikh vector of the length-ell prefix of f^t(seed), without
    materializing the word.

    Descends through f^t(seed) = f^(t-1)(d_1) ... f^(t-1)(d_r) where d_i are
    the letters of f(seed), consuming whole subtrees via exact matrix powers
    and recursing into the one subtree the boundary cuts.
    """
    if seed not in ("a", "b"):
        raise ValueError("seed must be 'a' or 'b'")
    if t < 0:
        raise ValueError("t must be >= 0")
    lengths, pa, pb = _tables(f, t)
    total = lengths[t][0] if seed == "a" else lengths[t][1]
    if not 0 <= ell <= total:
        raise OutOfRangeError(f"prefix length {ell} outside [0, {total}]")
    acc = ParikhVector(0, 0)
    remaining = ell
    cur = seed
    for s in range(t, 0, -1):
        if remaining == 0:
            return acc
        for d in f.image(cur):
            sub_len = lengths[s - 1][0] if d == "a" else lengths[s - 1][1]
            if remaining >= sub_len:
                acc = acc + (pa[s - 1] if d == "a" else pb[s - 1])
                remaining -= sub_len
                if remaining == 0:
                    return acc
            else:
                cur = d
                break
    if remaining:
        # only reachable for t = 0: the word is the single letter `cur`
        assert remaining == 1
        acc = acc + (ParikhVector(1, 0) if cur == "a" else ParikhVector(0, 1))
    return acc


@dataclass(frozen=True)
class CutDescriptor:
    """A position inside the level-1 block decomposition: which image block
    the cut lands in and the offset within that block."""

    block_letter: str
    offset: int


@dataclass(frozen=True)
class CutConfiguration:
    a_cuts: tuple[CutDescriptor, ...]
    b_cuts: tuple[CutDescriptor, ...]


def _locate_block(f: BinaryMorphism, seed: str, t: int, pos: int, lengths) -> CutDescriptor:
    """Descriptor of position `pos` in the decomposition of f^t(seed) into
    blocks f(c), c ranging over the letters of f^(t-1)(seed)."""
    cur, p = seed, pos
    for s in range(t, 1, -1):
        for d in f.image(cur):
            sub_len = lengths[s - 1][0] if d == "a" else lengths[s - 1][1]
            if p >= sub_len:
                p -= sub_len
            else:
                cur = d
                break
    return CutDescriptor(cur, p)


def configuration_of(f: BinaryMorphism, form: Rank1Form, t: int) -> CutConfiguration:
    """Where the n-1 cuts of f^t(a) and the m-1 cuts of f^t(b) fall.

    Cut i sits at position i * (A+B) k^(t-1); the descriptor records the
    block letter and offset at that position."""
    if t < 1:
        raise ValueError("t must be >= 1")
    lengths, _, _ = _tables(f, t)
    unit = form.block_unit * form.trace ** (t - 1)
    a_cuts = tuple(
        _locate_block(f, "a", t, i * unit, lengths) for i in range(1, form.n)
    )
    b_cuts = tuple(
        _locate_block(f, "b", t, j * unit, lengths) for j in range(1, form.m)
    )
    return CutConfiguration(a_cuts, b_cuts)


def check_pure_at(f: BinaryMorphism, form: Rank1Form, k: int) -> bool:
    """Do f^k(a) and f^k(b) split into n + m pairwise abelian-equivalent
    chunks of length (A+B) (nA+mB)^(k-1)?

    Chunks share a length, so equal a-counts is the whole test."""
    if k < 1:
        raise ValueError("k must be >= 1")
    unit = form.block_unit * form.trace ** (k - 1)
    ref = None
    for seed, parts in (("a", form.n), ("b", form.m)):
        prev = 0
        for i in range(1, parts + 1):
            ca = prefix_parikh(f, seed, k, i * unit).count_a
            chunk = ca - prev
            if ref is None:
                ref = chunk
            elif chunk != ref:
                return False
            prev = ca
    return True


@dataclass(frozen=True)
class PureVerdict:
    """Outcome of the pure abelian periodicity scan.

    status is "pure" (with k and the period), "not_pure" (configuration cycle
    found; sound refutation), or "resource_exhausted" (configuration cap hit
    before either)."""

    status: str
    k: int | None
    period: int | None
    iterations_used: int
    cycle_detected: bool


def decide_pure(f: BinaryMorphism, max_configurations: int = 10**6) -> PureVerdict:
    """Decide whether f^omega(a) is purely abelian periodic.

    Scans t = 1, 2, ...; a passing chunk test proves purity with period
    (A+B) (nA+mB)^(t-1), and a repeated cut configuration refutes it (the
    chunk test's outcome is a function of the configuration)."""
    f.require_prolongable()
    form = rank1_decompose(matrix_of(f))
    seen: set[CutConfiguration] = set()
    t = 0
    while len(seen) < max_configurations:
        t += 1
        config = configuration_of(f, form, t)
        if config in seen:
            return PureVerdict("not_pure", None, None, t, True)
        if check_pure_at(f, form, t):
            period = form.block_unit * form.trace ** (t - 1)
            return PureVerdict("pure", t, period, t, False)
        seen.add(config)
    return PureVerdict("resource_exhausted", None, None, t, False)


@dataclass(frozen=True)
class EventualConditions:
    """The four parts of the eventual-periodicity witness test at offset c."""

    a_chunks_equivalent: bool
    b_chunks_equivalent: bool
    cross_equivalent: bool
    prefixes_equivalent: bool

    @property
    def witness(self) -> bool:
        return (
            self.a_chunks_equivalent
            and self.b_chunks_equivalent
            and self.cross_equivalent
            and self.prefixes_equivalent
        )


@dataclass(frozen=True)
class EventualWitness:
    k: int
    cut_offset: int
    period: int


def _cyclic_chunk_counts(f, seed, parts, k, period, offset):
    """a-counts of the `parts` length-`period` chunks of the cyclic shift of
    f^k(seed) by `offset`, plus the Parikh vector of the length-`offset` prefix."""
    head = prefix_parikh(f, seed, k, offset)
    total = prefix_parikh(f, seed, k, parts * period)
    counts = []
    prev = head
    for i in range(1, parts):
        cur = prefix_parikh(f, seed, k, offset + i * period)
        counts.append(cur.count_a - prev.count_a)
        prev = cur
    counts.append(total.count_a - prev.count_a + head.count_a)
    return counts, head


def eventual_conditions_at(
    f: BinaryMorphism, form: Rank1Form, k: int, cut_offset: int
) -> EventualConditions:
    """Evaluate the witness conditions at level k and shift c = cut_offset:
    the shifted f^k(a) splits into n abelian-equivalent period-blocks, the
    shifted f^k(b) into m, all n + m blocks are pairwise equivalent, and the
    two length-c prefixes are abelian equivalent."""
    period = form.block_unit * form.trace ** (k - 1)
    if not 0 <= cut_offset < period:
        raise ValueError(f"cut offset must lie in [0, {period})")
    ca, head_a = _cyclic_chunk_counts(f, "a", form.n, k, period, cut_offset)
    cb, head_b = _cyclic_chunk_counts(f, "b", form.m, k, period, cut_offset)
    a_ok = all(c == ca[0] for c in ca)
    b_ok = all(c == cb[0] for c in cb)
    cross = all(c == ca[0] for c in ca + cb)
    return EventualConditions(a_ok, b_ok, cross, head_a == head_b)


def eventual_check_at(f: BinaryMorphism, form: Rank1Form, k: int):
    """Scan all cut offsets c in [0, period) at level k; return the first
    witness or None. A witness proves f^omega(a) is abelian periodic with
    period (A+B) (nA+mB)^(k-1) and preperiod c."""
    period = form.block_unit * form.trace ** (k - 1)
    for c in range(period):
        # prefix equivalence is the cheapest condition; gate on it first
        if prefix_parikh(f, "a", k, c) != prefix_parikh(f, "b", k, c):
            continue
        if eventual_conditions_at(f, form, k, c).witness:
            return EventualWitness(k, c, period)
    return None


def block_position_residues(
    f: BinaryMorphism, form: Rank1Form, t: int, d: int, horizon: int
) -> set[int]:
    """Residues mod d of the defined t-block-positions of the f(a) blocks in
    the first `horizon` letters of the fixed point.

    The fixed point decomposes into image blocks; each block f(a) at letter
    position i defines a t-block-position i / ((A+B) (nA+mB)^(t-1)) when that
    quotient is integral. Requires gcd(d, trace) = 1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    if math.gcd(d, form.trace) != 1:
        raise NotCoprimeError(f"d = {d} shares a factor with the trace {form.trace}")
    f.require_prolongable()
    prefix = fixed_point_prefix(f, horizon).data
    la, lb = len(f.image_a), len(f.image_b)
    lens = np.where(prefix == 0, la, lb).astype(np.int64)
    pos = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(lens)[:-1]])
    mask = (prefix == 0) & (pos + la <= horizon)
    unit = form.block_unit * form.trace ** (t - 1)
    if unit > horizon:
        # only position 0 can be unit-aligned, and s_0 = a always is
        return {0} if (mask.size and mask[0]) else set()
    sel = pos[mask]
    aligned = sel[sel % unit == 0] // unit
    return {int(r) for r in np.unique(aligned % d)}
