"""Rank-1 machinery: prefix Parikh queries, pure decision, eventual scan,
block-position residues."""

import math

import pytest

from abmorph import (
    CutConfiguration,
    CutDescriptor,
    EventualConditions,
    NotCoprimeError,
    OutOfRangeError,
    block_length,
    block_position_residues,
    check_pure_at,
    configuration_of,
    decide_pure,
    eventual_check_at,
    eventual_conditions_at,
    fixed_point_prefix,
    matrix_of,
    parikh,
    parse_morphism,
    prefix_parikh,
    rank1_decompose,
    validate_abelian_period,
)
from conftest import random_morphism, random_rank1_morphism
from oracles import naive_parikh, naive_power


def form_of(f):
    return rank1_decompose(matrix_of(f))


class TestPrefixParikh:
    def test_trivial_levels(self):
        f = parse_morphism("a->ab; b->bbaa")
        assert prefix_parikh(f, "a", 0, 1).as_tuple() == (1, 0)
        assert prefix_parikh(f, "b", 0, 1).as_tuple() == (0, 1)
        assert prefix_parikh(f, "a", 0, 0).as_tuple() == (0, 0)
        assert prefix_parikh(f, "b", 2, 7).as_tuple() == (3, 4)

    def test_matches_naive(self, rng):
        # Against literal string rewriting, all seeds, any morphism.
        for _ in range(150):
            f = random_morphism(rng, max_len=4, prolongable=False)
            seed = rng.choice("ab")
            t = rng.randint(0, 5)
            w = naive_power(str(f.image_a), str(f.image_b), seed, t)
            ell = rng.randint(0, len(w))
            assert prefix_parikh(f, seed, t, ell).as_tuple() == \
                naive_parikh(w[:ell])

    def test_full_length_matches_matrix_power(self, rng):
        for _ in range(60):
            f = random_morphism(rng, max_len=3, prolongable=False)
            t = rng.randint(0, 12)
            m = matrix_of(f).pow(t)
            la = m.m11 + m.m21
            assert prefix_parikh(f, "a", t, la).as_tuple() == (m.m11, m.m21)

    def test_large_level_no_materialization(self):
        # f^40(a) has ~3^40 letters; queries must stay cheap anyway.
        f = parse_morphism("a->ab; b->bbaa")
        got = prefix_parikh(f, "a", 40, 10**12)
        assert got.length == 10**12
        # a-frequency of the fixed point is exactly 1/2
        assert abs(got.count_a - 5 * 10**11) <= 10**6

    def test_out_of_range(self):
        f = parse_morphism("a->ab; b->bbaa")
        with pytest.raises(OutOfRangeError):
            prefix_parikh(f, "a", 1, 3)
        with pytest.raises(OutOfRangeError):
            prefix_parikh(f, "a", 0, 2)
        with pytest.raises(OutOfRangeError):
            prefix_parikh(f, "a", 1, -1)


class TestConfiguration:
    def test_worked_example(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        expected = CutConfiguration(
            a_cuts=(), b_cuts=(CutDescriptor("b", 2),))
        assert configuration_of(f, form, 1) == expected
        assert configuration_of(f, form, 2) == expected  # the cycle

    def test_deterministic(self):
        for text in ["a->ab; b->bbaa", "a->abba; b->ab", "a->ab; b->aabb"]:
            f = parse_morphism(text)
            form = form_of(f)
            for t in (1, 2, 3):
                assert configuration_of(f, form, t) == \
                    configuration_of(f, form, t)

    def test_offsets_within_blocks(self, rng):
        for _ in range(40):
            f = random_rank1_morphism(rng)
            form = form_of(f)
            for t in (1, 2):
                cfg = configuration_of(f, form, t)
                for cut in cfg.a_cuts + cfg.b_cuts:
                    limit = len(f.image(cut.block_letter))
                    assert 0 <= cut.offset < limit


class TestCheckPureAt:
    def test_golden(self):
        tm = parse_morphism("a->ab; b->ba")
        assert check_pure_at(tm, form_of(tm), 1)
        f = parse_morphism("a->ab; b->bbaa")
        assert not check_pure_at(f, form_of(f), 1)
        assert not check_pure_at(f, form_of(f), 2)
        g = parse_morphism("a->abba; b->ab")
        assert check_pure_at(g, form_of(g), 1)

    def test_matches_materialized_chunks(self, rng):
        # Chunk Parikh vectors computed on actual strings.
        for _ in range(60):
            f = random_rank1_morphism(rng, max_unit=2, max_mult=3)
            form = form_of(f)
            k = rng.randint(1, 2)
            unit = form.block_unit * form.trace ** (k - 1)
            chunks = []
            for seed, parts in (("a", form.n), ("b", form.m)):
                w = naive_power(str(f.image_a), str(f.image_b), seed, k)
                for i in range(parts):
                    chunks.append(naive_parikh(w[i * unit:(i + 1) * unit]))
            assert check_pure_at(f, form, k) == (len(set(chunks)) == 1)


class TestDecidePure:
    def test_worked_refutation(self):
        v = decide_pure(parse_morphism("a->ab; b->bbaa"))
        assert v.status == "not_pure"
        assert v.cycle_detected
        assert v.iterations_used == 2
        assert v.k is None and v.period is None

    def test_pure_cases(self):
        v = decide_pure(parse_morphism("a->ab; b->ba"))
        assert (v.status, v.k, v.period) == ("pure", 1, 2)
        v = decide_pure(parse_morphism("a->abba; b->ab"))
        assert (v.status, v.k, v.period) == ("pure", 1, 2)

    def test_equal_columns_pure_immediately(self, rng):
        # n = m = 1 means f(a) and f(b) are abelian equivalent already.
        for _ in range(30):
            f = random_rank1_morphism(rng, max_mult=1)
            v = decide_pure(f)
            assert (v.status, v.k) == ("pure", 1)

    def test_resource_cap(self):
        v = decide_pure(parse_morphism("a->ab; b->bbaa"), max_configurations=1)
        assert v.status == "resource_exhausted"
        assert v.iterations_used == 1
        assert not v.cycle_detected

    def test_pure_verdicts_validate_on_prefix(self, rng):
        pure_seen = 0
        for _ in range(80):
            f = random_rank1_morphism(rng)
            v = decide_pure(f, max_configurations=100)
            if v.status != "pure":
                continue
            pure_seen += 1
            if v.period <= 2000:
                w = fixed_point_prefix(f, max(4 * v.period, 4000))
                assert validate_abelian_period(w, 0, v.period)
        assert pure_seen >= 20

    def test_not_pure_has_no_small_pure_period(self, rng):
        # Soundness spot-check: scan the prefix for any pure period <= 64.
        from abmorph import abelian_period_oracle

        refuted = 0
        for _ in range(60):
            f = random_rank1_morphism(rng)
            v = decide_pure(f, max_configurations=100)
            if v.status != "not_pure":
                continue
            refuted += 1
            w = fixed_point_prefix(f, 4096)
            wit = abelian_period_oracle(w, 64, 0)
            assert wit is None or wit.preperiod > 0
        assert refuted >= 10


class TestEventual:
    def test_worked_near_miss(self):
        # At level 1 the offset-1 shift fails only prefix equivalence.
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        assert eventual_check_at(f, form, 1) is None
        conds = eventual_conditions_at(f, form, 1, 1)
        assert conds == EventualConditions(True, True, True, False)
        assert not conds.witness
        assert prefix_parikh(f, "a", 1, 1).as_tuple() == (1, 0)
        assert prefix_parikh(f, "b", 1, 1).as_tuple() == (0, 1)

    def test_positive_witness(self):
        # a->ab; b->aabb is not pure but becomes periodic after one letter.
        f = parse_morphism("a->ab; b->aabb")
        form = form_of(f)
        assert decide_pure(f).status == "not_pure"
        wit = eventual_check_at(f, form, 1)
        assert wit is not None
        assert (wit.k, wit.cut_offset, wit.period) == (1, 1, 2)

    def test_witness_validates_on_prefix(self, rng):
        found = 0
        for _ in range(60):
            f = random_rank1_morphism(rng)
            form = form_of(f)
            if decide_pure(f, max_configurations=50).status != "not_pure":
                continue
            for k in (1, 2):
                wit = eventual_check_at(f, form, k)
                if wit is None or wit.period > 2000:
                    continue
                found += 1
                w = fixed_point_prefix(f, max(4000, 6 * wit.period))
                assert validate_abelian_period(
                    w, wit.cut_offset, wit.period)
        assert found >= 3

    def test_offset_out_of_range(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        with pytest.raises(ValueError):
            eventual_conditions_at(f, form, 1, 2)


class TestBlockLength:
    def test_counts_cells_of_width_block_unit(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        assert form.block_unit == 2
        assert block_length(f, form, "a") == 1   # |f(a)| = 2 letters
        assert block_length(f, form, "b") == 2   # |f(b)| = 4 letters
        assert block_length(f, form, "ab") == 3
        for u in ("a", "b", "ab", "abba"):
            assert block_length(f, form, u) * form.block_unit \
                == len(f.apply(u))


class TestBlockPositionResidues:
    def naive(self, f, unit, d, horizon):
        w = str(fixed_point_prefix(f, horizon))
        la, lb = f.lengths()
        residues, pos = set(), 0
        for ch in w:
            if ch == "a" and pos + la <= horizon and pos % unit == 0:
                residues.add((pos // unit) % d)
            pos += la if ch == "a" else lb
        return residues

    def test_matches_naive(self, rng):
        for _ in range(40):
            f = random_rank1_morphism(rng, max_unit=2, max_mult=2)
            form = form_of(f)
            t = rng.randint(1, 3)
            d = rng.randint(1, 9)
            if math.gcd(d, form.trace) != 1:
                continue
            horizon = rng.randint(10, 2000)
            unit = form.block_unit * form.trace ** (t - 1)
            assert block_position_residues(f, form, t, d, horizon) == \
                self.naive(f, unit, d, horizon)

    def test_monotone_in_horizon(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        prev = set()
        for horizon in (10, 100, 1000, 10000):
            cur = block_position_residues(f, form, 1, 5, horizon)
            assert prev <= cur
            prev = cur

    def test_full_coverage_small(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        assert block_position_residues(f, form, 1, 5, 3**9) == set(range(5))

    def test_trivial_modulus(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        assert block_position_residues(f, form, 1, 1, 100) == {0}

    def test_coprime_required(self):
        f = parse_morphism("a->ab; b->bbaa")
        form = form_of(f)
        with pytest.raises(NotCoprimeError):
            block_position_residues(f, form, 1, 6, 100)
