"""Exact eventual periodicity of fixed points."""

import pytest

from abmorph import (
    Word,
    decide_periodic,
    default_search_bound,
    eq_eventually_periodic,
    fixed_point_prefix,
    abelian_period_oracle,
    parse_morphism,
    periodic_prefix,
    validate_abelian_period,
)
from oracles import eventually_periodic_prefix


def W(s):
    return Word.from_str(s)


class TestPeriodicPrefix:
    def test_golden(self):
        assert periodic_prefix(W("a"), W("b"), 5) == "abbbb"
        assert periodic_prefix(W(""), W("ab"), 5) == "ababa"
        assert periodic_prefix(W("aab"), W("b"), 2) == "aa"
        assert periodic_prefix(W("a"), W("b"), 0) == ""

    def test_matches_naive(self, rng):
        for _ in range(100):
            u = "".join(rng.choice("ab") for _ in range(rng.randint(0, 6)))
            w = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
            n = rng.randint(0, 40)
            assert periodic_prefix(W(u), W(w), n) == \
                eventually_periodic_prefix(u, w, n)


class TestEqEventuallyPeriodic:
    def test_representation_invariance(self, rng):
        # u w^w == (u w) w^w == u (w w)^w == (u w0) (rot w)^w
        for _ in range(100):
            u = W("".join(rng.choice("ab") for _ in range(rng.randint(0, 5))))
            w = W("".join(rng.choice("ab") for _ in range(rng.randint(1, 5))))
            assert eq_eventually_periodic(u, w, u + w, w)
            assert eq_eventually_periodic(u, w, u, w + w)
            assert eq_eventually_periodic(u, w, u + w[:1], w[1:] + w[:1])

    def test_detects_differences(self):
        assert not eq_eventually_periodic(W(""), W("ab"), W(""), W("ba"))
        assert not eq_eventually_periodic(W("a"), W("b"), W("b"), W("b"))
        assert not eq_eventually_periodic(W(""), W("ab"), W(""), W("abb"))

    def test_same_word_different_split(self):
        # ab(ab)^w == (abab)^w
        assert eq_eventually_periodic(W("ab"), W("ab"), W(""), W("abab"))


class TestDecidePeriodic:
    def test_golden_found(self):
        v = decide_periodic(parse_morphism("a->ab; b->b"))
        assert v.found
        assert (v.preperiod, v.period) == (W("a"), W("b"))
        v = decide_periodic(parse_morphism("a->aba; b->bab"))
        assert (v.preperiod, v.period) == (W(""), W("ab"))
        v = decide_periodic(parse_morphism("a->aa; b->ab"))
        assert (v.preperiod, v.period) == (W(""), W("a"))

    def test_golden_not_found(self):
        assert not decide_periodic(parse_morphism("a->ab; b->ba")).found
        assert not decide_periodic(parse_morphism("a->ab; b->a")).found
        v = decide_periodic(parse_morphism("a->aab; b->b"), 64, 64)
        assert v.status == "not_found"
        assert (v.max_period, v.max_preperiod) == (64, 64)

    def test_default_bounds_recorded(self):
        f = parse_morphism("a->ab; b->b")
        assert default_search_bound(f) == 36
        v = decide_periodic(f)
        assert v.max_period == 36 and v.max_preperiod == 36

    def test_found_matches_fixed_point(self):
        # The certificate reproduces the fixed point letter for letter.
        for text in ["a->ab; b->b", "a->aba; b->bab", "a->aa; b->ab",
                     "a->ab; b->abab"]:
            f = parse_morphism(text)
            v = decide_periodic(f)
            assert v.found
            n = 2000
            assert periodic_prefix(v.preperiod, v.period, n) == \
                fixed_point_prefix(f, n)

    def test_found_implies_abelian_witness(self):
        for text in ["a->ab; b->b", "a->aba; b->bab"]:
            f = parse_morphism(text)
            v = decide_periodic(f)
            w = fixed_point_prefix(f, 4000)
            r, p = len(v.preperiod), len(v.period)
            assert validate_abelian_period(w, r, p)
            wit = abelian_period_oracle(w, max(p, 1), r)
            assert wit is not None
            assert wit.preperiod <= r and wit.period <= p

    def test_rejects_bad_bounds(self):
        f = parse_morphism("a->ab; b->b")
        with pytest.raises(ValueError):
            decide_periodic(f, max_period=0)
        with pytest.raises(ValueError):
            decide_periodic(f, max_preperiod=-1)

    def test_requires_prolongable(self):
        from abmorph import NotProlongableError

        with pytest.raises(NotProlongableError):
            decide_periodic(parse_morphism("a->ba; b->ab"))
