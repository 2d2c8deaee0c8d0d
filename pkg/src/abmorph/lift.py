"""Uniform lift of a second-eigenvalue-zero morphism to a coded automaton.

When the incidence matrix of f has determinant 0, lengths scale by the trace
k = nA + mB, so |f(f(c))| = k |f(c)| for both letters. Annotating the fixed
point's block factorization position by position yields a k-uniform morphism
on the extended alphabet {(c, i) : 0 <= i < |f(c)|}, and the original fixed
point is recovered by the coding (c, i) -> f(c)[i]. Reading base-k digits of
n most significant first, the induced automaton outputs letter n of the fixed
point, which is therefore k-automatic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTraceError, OutOfRangeError
from .matrices import Rank1Form
from .words import BinaryMorphism, Word, _expand_prefix, fixed_point_prefix


@dataclass(frozen=True)
class UniformLift:
    """A k-uniform morphism over the position-pair alphabet plus its coding.

    State ids enumerate the pairs (a, 0..|f(a)|-1) first, then
    (b, 0..|f(b)|-1). images[s] lists the k successor states of state s;
    coding[s] is the fixed-point letter at positions annotated by s. State 0
    is the initial state (a, 0)."""

    image_length_a: int
    image_length_b: int
    k: int
    images: tuple[tuple[int, ...], ...]
    coding: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.image_length_a + self.image_length_b

    def letter_pair(self, state: int) -> tuple[str, int]:
        if not 0 <= state < self.size:
            raise OutOfRangeError(f"state {state} outside [0, {self.size})")
        if state < self.image_length_a:
            return ("a", state)
        return ("b", state - self.image_length_a)

    def state_label(self, state: int) -> str:
        c, i = self.letter_pair(state)
        return f"{c}{i}"


def _position_codes(f: BinaryMorphism, la: int, u: Word) -> np.ndarray:
    """Concatenation, over the letters c of u, of the id runs for the pairs
    (c, 0), ..., (c, |f(c)|-1)."""
    runs = {
        "a": np.arange(la, dtype=np.int32),
        "b": np.arange(la, la + len(f.image_b), dtype=np.int32),
    }
    if len(u) == 0:
        return np.empty(0, dtype=np.int32)
    return np.concatenate([runs[c] for c in u])


def build_lift(f: BinaryMorphism, form: Rank1Form) -> UniformLift:
    """Construct the k-uniform lift, k being the rank-1 trace.

    The image of (c, i) is the i-th length-k chunk of the annotated
    factorization of f(f(c)) into blocks f(d), d over the letters of f(c)."""
    f.require_prolongable()
    k = form.trace
    if k < 2:
        raise DegenerateTraceError(f"lift needs trace >= 2, got {k}")
    la, lb = len(f.image_a), len(f.image_b)
    images: list[tuple[int, ...]] = []
    for c in ("a", "b"):
        ann = _position_codes(f, la, f.image(c))
        if ann.size != k * len(f.image(c)):
            raise DegenerateTraceError(
                "image lengths do not scale by the trace; the matrix is not rank 1"
            )
        for i in range(len(f.image(c))):
            images.append(tuple(int(s) for s in ann[i * k : (i + 1) * k]))
    coding = tuple(c for c in str(f.image_a) + str(f.image_b))
    lift = UniformLift(la, lb, k, tuple(images), coding)
    assert lift.images[0][0] == 0, "lift must be prolongable on state 0"
    return lift


def lift_fixed_prefix(lift: UniformLift, length: int) -> np.ndarray:
    """First `length` states of the lifted fixed point (int32 state ids)."""
    if length < 0:
        raise ValueError("length must be >= 0")
    arrays = [np.array(im, dtype=np.int32) for im in lift.images]
    return _expand_prefix(arrays, 0, length)


def lift_verify(f: BinaryMorphism, lift: UniformLift, length: int) -> bool:
    """Does the coded lifted fixed point reproduce f^omega(a) on `length` letters?"""
    states = lift_fixed_prefix(lift, length)
    codes = np.array([0 if c == "a" else 1 for c in lift.coding], dtype=np.uint8)
    coded = codes[states]
    return bool(np.array_equal(coded, fixed_point_prefix(f, length).data))


def is_bijective(lift: UniformLift) -> bool:
    """True when every digit acts as a permutation of the states."""
    n = lift.size
    for j in range(lift.k):
        if len({im[j] for im in lift.images}) != n:
            return False
    return True


def dfao_eval(lift: UniformLift, n: int) -> str:
    """Letter n of the fixed point, by reading the base-k digits of n most
    significant first from the initial state; n = 0 reads no digits."""
    if n < 0:
        raise OutOfRangeError("position must be >= 0")
    digits = []
    while n:
        n, r = divmod(n, lift.k)
        digits.append(r)
    state = 0
    for d in reversed(digits):
        state = lift.images[state][d]
    return lift.coding[state]


def dfao_table(lift: UniformLift) -> dict:
    """JSON-ready transition table with 1-based state ids."""
    states = []
    for s in range(lift.size):
        states.append(
            {
                "id": s + 1,
                "pair": lift.state_label(s),
                "output": lift.coding[s],
                "next": [t + 1 for t in lift.images[s]],
            }
        )
    return {
        "base": lift.k,
        "initial": 1,
        "bijective": is_bijective(lift),
        "states": states,
    }


def dfao_dot(lift: UniformLift) -> str:
    """DOT rendering of the automaton; edges merge digits sharing a target."""
    lines = [
        "digraph dfao {",
        "  rankdir=LR;",
        '  __start [shape=point, label=""];',
        "  __start -> q1;",
    ]
    for s in range(lift.size):
        lines.append(
            f'  q{s + 1} [shape=circle, label="{s + 1}:{lift.state_label(s)}/{lift.coding[s]}"];'
        )
    for s in range(lift.size):
        by_target: dict[int, list[int]] = {}
        for digit, target in enumerate(lift.images[s]):
            by_target.setdefault(target, []).append(digit)
        for target in sorted(by_target):
            label = ",".join(str(d) for d in by_target[target])
            lines.append(f'  q{s + 1} -> q{target + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
