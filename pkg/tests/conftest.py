"""Shared fixtures: the golden morphism corpus and seeded RNG helpers."""

import random
from dataclasses import dataclass

import pytest

from abmorph import (
    ANSWER_ABELIAN_PERIODIC,
    ANSWER_NOT_ABELIAN_PERIODIC,
    ANSWER_PURE_ABELIAN_PERIODIC,
    ANSWER_UNKNOWN,
    CERTAINTY_BOUNDED_SEARCH,
    CERTAINTY_PROVED,
    REASON_CHUNKS_EQUIVALENT,
    REASON_GT_ONE_UNBALANCED,
    REASON_IRRATIONAL_FREQUENCIES,
    REASON_NONPRIMITIVE_NO_PERIOD,
    REASON_NONPRIMITIVE_PERIODIC,
    REASON_ONE_FORM_FAILS,
    REASON_PURE_REFUTED_OPEN,
    REASON_SPECIAL_FORM,
    BinaryMorphism,
    parse_morphism,
)


@dataclass(frozen=True)
class CorpusEntry:
    text: str
    answer: str
    certainty: str
    reason: str
    claimed: tuple[int, int] | None  # (preperiod, period) when proved periodic


# One entry per classifier branch.  The expected triple is frozen here and
# asserted both in the unit tests and in the acceptance suite.
CORPUS = [
    CorpusEntry("a->ab; b->ba", ANSWER_PURE_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_CHUNKS_EQUIVALENT, (0, 2)),
    CorpusEntry("a->aba; b->bab", ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_SPECIAL_FORM, (0, 2)),
    CorpusEntry("a->ab; b->a", ANSWER_NOT_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_IRRATIONAL_FREQUENCIES, None),
    CorpusEntry("a->aab; b->bbaab", ANSWER_NOT_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_ONE_FORM_FAILS, None),
    CorpusEntry("a->aaab; b->abbb", ANSWER_NOT_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_GT_ONE_UNBALANCED, None),
    CorpusEntry("a->ab; b->b", ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_NONPRIMITIVE_PERIODIC, (1, 1)),
    CorpusEntry("a->aab; b->b", ANSWER_NOT_ABELIAN_PERIODIC,
                CERTAINTY_BOUNDED_SEARCH, REASON_NONPRIMITIVE_NO_PERIOD, None),
    CorpusEntry("a->ab; b->bbaa", ANSWER_UNKNOWN,
                CERTAINTY_BOUNDED_SEARCH, REASON_PURE_REFUTED_OPEN, None),
    CorpusEntry("a->abba; b->ab", ANSWER_PURE_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_CHUNKS_EQUIVALENT, (0, 2)),
    CorpusEntry("a->ababa; b->bababab", ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED, REASON_SPECIAL_FORM, (0, 2)),
]


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    return CORPUS


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xAB0C)


def random_morphism(rng: random.Random, max_len: int = 5,
                    prolongable: bool = True) -> BinaryMorphism:
    """Random non-erasing morphism; prolongable on a unless told otherwise."""
    def word(first: str | None, n: int) -> str:
        body = "".join(rng.choice("ab") for _ in range(n))
        return (first or "") + body

    if prolongable:
        image_a = word("a", rng.randint(1, max_len - 1))
    else:
        image_a = word(None, rng.randint(1, max_len))
    image_b = word(None, rng.randint(1, max_len))
    return parse_morphism(f"a->{image_a}; b->{image_b}")


def random_rank1_morphism(rng: random.Random, max_unit: int = 3,
                          max_mult: int = 3) -> BinaryMorphism:
    """Random prolongable morphism with a strictly positive rank-1 matrix.

    Draws a column-ratio pair (n, m) with gcd 1 and a block composition
    (A, B) with A, B >= 1, then shuffles letters inside each image while
    keeping image_a prolongable.
    """
    from math import gcd

    while True:
        n, m = rng.randint(1, max_mult), rng.randint(1, max_mult)
        if gcd(n, m) == 1:
            break
    A, B = rng.randint(1, max_unit), rng.randint(1, max_unit)
    a_rest = ["a"] * (n * A - 1) + ["b"] * (n * B)
    b_letters = ["a"] * (m * A) + ["b"] * (m * B)
    rng.shuffle(a_rest)
    rng.shuffle(b_letters)
    return parse_morphism(
        "a->%s; b->%s" % ("a" + "".join(a_rest), "".join(b_letters)))
