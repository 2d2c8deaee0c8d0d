"""Binary words, Parikh vectors, and binary morphisms.

Words over {a, b} are stored one letter per byte (numpy uint8, 0 = a, 1 = b)
so that prefixes in the 1e6..1e8 letter range stay cheap to build and scan.
All counting is exact (Python ints).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BadLetterError,
    ErasingImageError,
    MorphismSyntaxError,
    NotProlongableError,
)

A = 0
B = 1

_CHARS = np.frombuffer(b"ab", dtype=np.uint8)


def _codes_from_str(s: str) -> np.ndarray:
    raw = np.frombuffer(s.encode("ascii", errors="strict"), dtype=np.uint8)
    codes = raw - ord("a")
    if codes.size and codes.max(initial=0) > 1:
        bad = chr(int(raw[int(np.argmax(codes > 1))]))
        raise BadLetterError(f"letter {bad!r} is not in the alphabet {{a, b}}")
    return codes


class Word:
    """An immutable finite word over {a, b}."""

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray | Sequence[int]):
        arr = np.asarray(data, dtype=np.uint8)
        if arr.ndim != 1:
            raise ValueError("word data must be one-dimensional")
        if arr.size and arr.max(initial=0) > 1:
            raise BadLetterError("letter codes must be 0 (a) or 1 (b)")
        arr = arr.copy()
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_str(cls, s: str) -> "Word":
        try:
            return cls(_codes_from_str(s))
        except UnicodeEncodeError as exc:
            raise BadLetterError(f"non-ascii symbol in word: {s!r}") from exc

    @classmethod
    def empty(cls) -> "Word":
        return cls(np.empty(0, dtype=np.uint8))

    @property
    def data(self) -> np.ndarray:
        """Read-only uint8 view, 0 = a, 1 = b."""
        return self._data

    def __len__(self) -> int:
        return int(self._data.size)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self._data[i])
        return "ab"[int(self._data[i])]

    def __iter__(self) -> Iterator[str]:
        for c in self._data:
            yield "ab"[int(c)]

    def __add__(self, other: "Word") -> "Word":
        return Word(np.concatenate([self._data, other._data]))

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = Word.from_str(other)
        if not isinstance(other, Word):
            return NotImplemented
        return self._data.size == other._data.size and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self) -> int:
        return hash(self._data.tobytes())

    def __str__(self) -> str:
        return _CHARS[self._data].tobytes().decode("ascii")

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 40:
            s = s[:37] + "..."
        return f"Word({s!r})"


@dataclass(frozen=True)
class ParikhVector:
    """Letter counts (|u|_a, |u|_b) of a binary word."""

    count_a: int
    count_b: int

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        return ParikhVector(self.count_a + other.count_a, self.count_b + other.count_b)

    def __sub__(self, other: "ParikhVector") -> "ParikhVector":
        return ParikhVector(self.count_a - other.count_a, self.count_b - other.count_b)

    @property
    def length(self) -> int:
        return self.count_a + self.count_b

    def as_tuple(self) -> tuple[int, int]:
        return (self.count_a, self.count_b)


def parikh(u: Word | str) -> ParikhVector:
    """Parikh vector of u; exact for words of any length."""
    if isinstance(u, str):
        u = Word.from_str(u)
    nb = int(np.count_nonzero(u.data))
    return ParikhVector(len(u) - nb, nb)


class BinaryMorphism:
    """A nonerasing morphism over {a, b}, given by its two images."""

    __slots__ = ("image_a", "image_b")

    def __init__(self, image_a: Word | str, image_b: Word | str):
        if isinstance(image_a, str):
            image_a = Word.from_str(image_a)
        if isinstance(image_b, str):
            image_b = Word.from_str(image_b)
        if len(image_a) == 0 or len(image_b) == 0:
            raise ErasingImageError("images must be nonempty words")
        object.__setattr__(self, "image_a", image_a)
        object.__setattr__(self, "image_b", image_b)

    def __setattr__(self, *_):
        raise AttributeError("BinaryMorphism is immutable")

    def image(self, letter: str) -> Word:
        if letter == "a":
            return self.image_a
        if letter == "b":
            return self.image_b
        raise BadLetterError(f"letter {letter!r} is not in the alphabet {{a, b}}")

    @property
    def is_prolongable(self) -> bool:
        """True when f(a) starts with a and |f(a)| >= 2, so f^t(a) nest properly."""
        return len(self.image_a) >= 2 and int(self.image_a.data[0]) == A

    def require_prolongable(self) -> None:
        if not self.is_prolongable:
            raise NotProlongableError(
                f"morphism {self.to_text()!r} is not prolongable on a"
            )

    def apply(self, u: Word | str) -> Word:
        if isinstance(u, str):
            u = Word.from_str(u)
        return Word(_apply_images([self.image_a.data, self.image_b.data], u.data))

    def __call__(self, u: Word | str) -> Word:
        return self.apply(u)

    def lengths(self) -> tuple[int, int]:
        return (len(self.image_a), len(self.image_b))

    def to_text(self) -> str:
        return f"a->{self.image_a}; b->{self.image_b}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMorphism):
            return NotImplemented
        return self.image_a == other.image_a and self.image_b == other.image_b

    def __hash__(self) -> int:
        return hash((self.image_a, self.image_b))

    def __repr__(self) -> str:
        return f"BinaryMorphism({self.to_text()!r})"


def compose(f: BinaryMorphism, g: BinaryMorphism) -> BinaryMorphism:
    """The morphism u -> f(g(u))."""
    return BinaryMorphism(f.apply(g.image_a), f.apply(g.image_b))


def square(f: BinaryMorphism) -> BinaryMorphism:
    return compose(f, f)


def parse_morphism(text: str) -> BinaryMorphism:
    """Parse 'a->WORD; b->WORD' (whitespace-insensitive) or '{"a": ..., "b": ...}'."""
    stripped = text.strip()
    if not stripped:
        raise MorphismSyntaxError("empty morphism text")
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MorphismSyntaxError(f"bad JSON morphism: {exc}") from exc
        if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
            raise MorphismSyntaxError('JSON morphism must have exactly keys "a" and "b"')
        if not all(isinstance(v, str) for v in obj.values()):
            raise MorphismSyntaxError("JSON morphism images must be strings")
        if "" in obj.values():
            raise ErasingImageError("images must be nonempty words")
        return BinaryMorphism(obj["a"], obj["b"])

    compact = "".join(stripped.split())
    if compact.endswith(";"):
        compact = compact[:-1]
    parts = compact.split(";")
    if len(parts) != 2:
        raise MorphismSyntaxError(f"expected 'a->WORD; b->WORD', got {text!r}")
    images = {}
    for part in parts:
        head, arrow, body = part.partition("->")
        if arrow != "->" or head not in ("a", "b") or head in images:
            raise MorphismSyntaxError(f"expected 'a->WORD; b->WORD', got {text!r}")
        images[head] = body
    if list(images) != ["a", "b"]:
        raise MorphismSyntaxError("rules must appear in the order a->...; b->...")
    if images["a"] == "" or images["b"] == "":
        raise ErasingImageError("images must be nonempty words")
    return BinaryMorphism(images["a"], images["b"])


def _apply_images(images: list[np.ndarray], arr: np.ndarray) -> np.ndarray:
    """Concatenate images[c] over the letters c of arr, fully vectorized.

    Output dtype follows the image arrays, so the same kernel serves binary
    words (uint8) and lifted alphabets with more letters."""
    dtype = images[0].dtype
    if arr.size == 0:
        return np.empty(0, dtype=dtype)
    sizes = np.array([im.size for im in images], dtype=np.int64)
    maxlen = int(sizes.max())
    padded = np.zeros((len(images), maxlen), dtype=dtype)
    for i, im in enumerate(images):
        padded[i, : im.size] = im
    counts = sizes[arr]
    total = int(counts.sum())
    starts = np.cumsum(counts) - counts
    src = np.repeat(arr.astype(np.int64), counts)
    pos = np.arange(total, dtype=np.int64) - np.repeat(starts, counts)
    return padded[src, pos]


def _expand_prefix(images: list[np.ndarray], start: int, length: int) -> np.ndarray:
    """First `length` letters of the fixed point of the morphism given by
    `images`, prolongable on `start`.

    Uses the telescoping factorization  s = start . x . f(x) . f^2(x) ...
    where images[start] = start . x, so each round is one vectorized morphism
    application. A stationary block (f(x) = x) means the tail is x^omega and
    is tiled directly; that keeps linear-growth morphisms at O(length).
    """
    if length <= 0:
        return np.empty(0, dtype=images[start].dtype)
    head = images[start]
    parts = [np.array([start], dtype=head.dtype), head[1:]]
    total = int(head.size)
    block = head[1:]
    while total < length:
        nxt = _apply_images(images, block)
        if nxt.size == block.size and np.array_equal(nxt, block):
            reps = -(-(length - total) // block.size)
            parts.append(np.tile(block, reps))
            break
        parts.append(nxt)
        total += int(nxt.size)
        block = nxt
    return np.concatenate(parts)[:length]


def fixed_point_prefix(f: BinaryMorphism, length: int) -> Word:
    """pref_length(f^omega(a)) for f prolongable on a."""
    f.require_prolongable()
    if length < 0:
        raise ValueError("length must be >= 0")
    return Word(_expand_prefix([f.image_a.data, f.image_b.data], A, length))


def _mat2_mul(x, y):
    (a, b), (c, d) = x
    (e, g), (h, k) = y
    return ((a * e + b * h, a * g + b * k), (c * e + d * h, c * g + d * k))


def _mat2_pow(m, t: int):
    result = ((1, 0), (0, 1))
    base = m
    while t:
        if t & 1:
            result = _mat2_mul(result, base)
        base = _mat2_mul(base, base)
        t >>= 1
    return result


def power_lengths(f: BinaryMorphism, t: int) -> tuple[int, int]:
    """(|f^t(a)|, |f^t(b)|) via exact integer matrix powers; t = 0 gives (1, 1)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    pa, pb = parikh(f.image_a), parikh(f.image_b)
    m = ((pa.count_a, pb.count_a), (pa.count_b, pb.count_b))
    mt = _mat2_pow(m, t)
    return (mt[0][0] + mt[1][0], mt[0][1] + mt[1][1])


def primitive_root(u: Word | str) -> Word:
    """Shortest w with u = w^k; computed from the classic border function."""
    if isinstance(u, str):
        u = Word.from_str(u)
    n = len(u)
    if n == 0:
        return u
    data = u.data
    border = np.zeros(n, dtype=np.int64)
    k = 0
    for i in range(1, n):
        while k > 0 and data[i] != data[k]:
            k = int(border[k - 1])
        if data[i] == data[k]:
            k += 1
        border[i] = k
    p = n - int(border[n - 1])
    if n % p == 0:
        return u[:p]
    return u


@dataclass(frozen=True)
class ConjugationResult:
    """Outcome of shifting a morphism until its images start with distinct letters.

    kind is one of "normalized", "power_of_common_word", "swapped_square".
    For "normalized", shift_word . g(w) = f(w) . shift_word for all w (power 1).
    For "swapped_square" the same identity holds against f^2 (power 2) and the
    returned morphism is the square of the shifted one, so its images start
    with a and b again. For "power_of_common_word" no normalization exists:
    both images are powers of one word and the fixed point is periodic.
    """

    kind: str
    morphism: BinaryMorphism
    shift_word: Word
    power: int


def conjugate_normalize(f: BinaryMorphism) -> ConjugationResult:
    """Cyclically shift f until image_a starts with a and image_b with b."""
    ia, ib = f.image_a, f.image_b
    if primitive_root(ia) == primitive_root(ib):
        return ConjugationResult("power_of_common_word", f, Word.empty(), 1)

    bound = math.lcm(len(ia), len(ib)) + 1
    g = f
    shift_parts: list[str] = []
    for _ in range(bound):
        first_a, first_b = g.image_a[0], g.image_b[0]
        if first_a != first_b:
            break
        c = first_a
        shift_parts.append(c)
        cw = Word.from_str(c)
        g = BinaryMorphism(g.image_a[1:] + cw, g.image_b[1:] + cw)
    else:
        raise AssertionError("shift loop exceeded the lcm bound on distinct images")

    shift = Word.from_str("".join(shift_parts))
    if g.image_a[0] == "a":
        return ConjugationResult("normalized", g, shift, 1)
    # Images start b, a: squaring restores the a, b orientation, and the
    # shift against f^2 is f(shift) . shift.
    return ConjugationResult("swapped_square", square(g), f.apply(shift) + shift, 2)
