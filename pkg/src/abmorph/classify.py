"""Routing and verdicts for the abelian-periodicity classification.

The decision tree branches on primitivity and the second eigenvalue. All
positive answers and all spectral refutations are proofs; the remaining
outcomes are explicitly bounded searches, and Unknown is a first-class
answer because the rank-1 eventual case has no known scan bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .analysis import imbalance_at
from .errors import NotPrimitiveError
from .matrices import (
    ABS_EQ_ONE,
    ABS_GT_ONE,
    ABS_IN_OPEN_UNIT_INTERVAL,
    THETA2_ZERO,
    FrequencyReport,
    Rank1Form,
    SpectralProfile,
    letter_frequencies,
    matrix_of,
    rank1_decompose,
    spectral_profile,
)
from .periodic import PeriodicityVerdict, decide_periodic
from .rank1 import EventualWitness, PureVerdict, decide_pure, eventual_check_at
from .words import BinaryMorphism, fixed_point_prefix

ANSWER_ABELIAN_PERIODIC = "AbelianPeriodic"
ANSWER_PURE_ABELIAN_PERIODIC = "PureAbelianPeriodic"
ANSWER_NOT_ABELIAN_PERIODIC = "NotAbelianPeriodic"
ANSWER_UNKNOWN = "Unknown"

CERTAINTY_PROVED = "Proved"
CERTAINTY_BOUNDED_SEARCH = "BoundedSearch"

REASON_SPECIAL_FORM = "SpecialFormABAB"
REASON_CHUNKS_EQUIVALENT = "ChunksEquivalent"
REASON_EVENTUAL_WITNESS = "EventualWitnessFound"
REASON_GT_ONE_UNBALANCED = "Theta2AbsGtOne_Unbalanced"
REASON_IRRATIONAL_FREQUENCIES = "IrrationalFrequencies"
REASON_ONE_FORM_FAILS = "Theta2One_FormFails"
REASON_MINUS_ONE = "Theta2MinusOne"
REASON_NONPRIMITIVE_PERIODIC = "NonPrimitive_PeriodicCertificate"
REASON_NONPRIMITIVE_NO_PERIOD = "NonPrimitive_NoPeriodFound"
REASON_PURE_REFUTED_OPEN = "Rank1_PureRefuted_EventualOpen"
REASON_RESOURCE_EXHAUSTED = "ResourceExhausted"

ANSWERS = (
    ANSWER_ABELIAN_PERIODIC,
    ANSWER_PURE_ABELIAN_PERIODIC,
    ANSWER_NOT_ABELIAN_PERIODIC,
    ANSWER_UNKNOWN,
)
CERTAINTIES = (CERTAINTY_PROVED, CERTAINTY_BOUNDED_SEARCH)
REASONS = (
    REASON_SPECIAL_FORM,
    REASON_CHUNKS_EQUIVALENT,
    REASON_EVENTUAL_WITNESS,
    REASON_GT_ONE_UNBALANCED,
    REASON_IRRATIONAL_FREQUENCIES,
    REASON_ONE_FORM_FAILS,
    REASON_MINUS_ONE,
    REASON_NONPRIMITIVE_PERIODIC,
    REASON_NONPRIMITIVE_NO_PERIOD,
    REASON_PURE_REFUTED_OPEN,
    REASON_RESOURCE_EXHAUSTED,
)


def special_form_exponents(f: BinaryMorphism) -> tuple[int, int] | None:
    """Exponents (k, m) when f(a) = a(ba)^k and f(b) = b(ab)^m, else None.

    Both images must alternate letters, start with their own letter, and have
    odd length. Fixed points of this family equal (ab)^omega."""
    ia, ib = f.image_a.data, f.image_b.data
    if ia.size % 2 == 0 or ib.size % 2 == 0:
        return None
    if (ia[0::2] != 0).any() or (ia[1::2] != 1).any():
        return None
    if (ib[0::2] != 1).any() or (ib[1::2] != 0).any():
        return None
    return ((ia.size - 1) // 2, (ib.size - 1) // 2)


@dataclass(frozen=True)
class ClassifyOptions:
    """Bounds for the searches a classification may run.

    eventual_k_max limits the eventual-witness level scan; the offset budget
    caps the total cut offsets tried across levels (the per-level offset
    count is the period and grows geometrically). horizon is the prefix
    length used for imbalance evidence."""

    eventual_k_max: int = 8
    eventual_offset_budget: int = 10**6
    horizon: int = 10**5
    max_period: int | None = None
    max_preperiod: int | None = None
    max_configurations: int = 10**6
    evidence_target: int = 4
    collect_evidence: bool = True


@dataclass(frozen=True)
class ImbalanceEvidence:
    """Largest window-count spread found by a geometric window-length scan.

    Supporting measurement only: no verdict's correctness rests on it."""

    window_length: int
    imbalance: int
    horizon: int
    target: int
    reached: bool


@dataclass(frozen=True)
class Verdict:
    answer: str
    certainty: str
    reason: str
    spectral: SpectralProfile
    rank1: Rank1Form | None = None
    pure: PureVerdict | None = None
    eventual: EventualWitness | None = None
    periodicity: PeriodicityVerdict | None = None
    special_form: tuple[int, int] | None = None
    frequencies: FrequencyReport | None = None
    claimed_preperiod: int | None = None
    claimed_period: int | None = None
    evidence: ImbalanceEvidence | None = None
    bounds: tuple[tuple[str, int], ...] = ()

    @property
    def is_abelian_periodic(self) -> bool | None:
        if self.answer in (ANSWER_ABELIAN_PERIODIC, ANSWER_PURE_ABELIAN_PERIODIC):
            return True
        if self.answer == ANSWER_NOT_ABELIAN_PERIODIC:
            return False
        return None


def imbalance_evidence(
    f: BinaryMorphism, horizon: int, target: int
) -> ImbalanceEvidence | None:
    """Scan window lengths on a geometric grid (ratio ~sqrt(2)) for a window
    count spread reaching `target`; keep the best seen otherwise."""
    if horizon < 2:
        return None
    prefix = fixed_point_prefix(f, horizon)
    n = len(prefix)
    best_len, best_im = 1, 0
    ell = 1
    while ell <= n // 2:
        im = imbalance_at(prefix, ell)
        if im > best_im:
            best_len, best_im = ell, im
            if im >= target:
                return ImbalanceEvidence(ell, im, n, target, True)
        ell = max(ell + 1, (ell * 181) // 128)
    return ImbalanceEvidence(best_len, best_im, n, target, False)


def _finish(verdict: Verdict, f: BinaryMorphism, options: ClassifyOptions) -> Verdict:
    needs_evidence = options.collect_evidence and verdict.reason in (
        REASON_GT_ONE_UNBALANCED,
        REASON_ONE_FORM_FAILS,
        REASON_NONPRIMITIVE_NO_PERIOD,
    )
    if not needs_evidence:
        return verdict
    evidence = imbalance_evidence(f, options.horizon, options.evidence_target)
    return replace(verdict, evidence=evidence)


def classify(f: BinaryMorphism, options: ClassifyOptions | None = None) -> Verdict:
    """Decide abelian periodicity of f^omega(a), as far as proofs or the
    configured bounds allow.

    Non-primitive morphisms are settled by the certified periodicity search.
    Primitive morphisms with nonzero second eigenvalue are either the
    alternating special family (abelian periodic) or refuted by their
    spectral class. The remaining rank-1 case runs the pure decision and
    then a bounded scan for an eventual witness."""
    opts = options or ClassifyOptions()
    f.require_prolongable()
    mat = matrix_of(f)
    prof = spectral_profile(mat)

    if not prof.primitive:
        pv = decide_periodic(f, opts.max_period, opts.max_preperiod)
        bounds = (
            ("max_preperiod", pv.max_preperiod),
            ("max_period", pv.max_period),
        )
        if pv.found:
            verdict = Verdict(
                ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED,
                REASON_NONPRIMITIVE_PERIODIC,
                prof,
                periodicity=pv,
                claimed_preperiod=len(pv.preperiod),
                claimed_period=len(pv.period),
                bounds=bounds,
            )
        else:
            verdict = Verdict(
                ANSWER_NOT_ABELIAN_PERIODIC,
                CERTAINTY_BOUNDED_SEARCH,
                REASON_NONPRIMITIVE_NO_PERIOD,
                prof,
                periodicity=pv,
                bounds=bounds + (("horizon", opts.horizon),),
            )
        return _finish(verdict, f, opts)

    freq = letter_frequencies(f)

    if prof.theta2_kind != THETA2_ZERO:
        form_km = special_form_exponents(f)
        if form_km is not None:
            return Verdict(
                ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED,
                REASON_SPECIAL_FORM,
                prof,
                special_form=form_km,
                frequencies=freq,
                claimed_preperiod=0,
                claimed_period=2,
            )
        if prof.theta2_abs_class == ABS_GT_ONE:
            reason = REASON_GT_ONE_UNBALANCED
        elif prof.theta2_abs_class == ABS_IN_OPEN_UNIT_INTERVAL:
            reason = REASON_IRRATIONAL_FREQUENCIES
        else:
            assert prof.theta2_abs_class == ABS_EQ_ONE
            reason = (
                REASON_ONE_FORM_FAILS if prof.theta2_value == 1 else REASON_MINUS_ONE
            )
        verdict = Verdict(
            ANSWER_NOT_ABELIAN_PERIODIC,
            CERTAINTY_PROVED,
            reason,
            prof,
            frequencies=freq,
        )
        return _finish(verdict, f, opts)

    form = rank1_decompose(mat)
    pure = decide_pure(f, max_configurations=opts.max_configurations)
    if pure.status == "pure":
        return Verdict(
            ANSWER_PURE_ABELIAN_PERIODIC,
            CERTAINTY_PROVED,
            REASON_CHUNKS_EQUIVALENT,
            prof,
            rank1=form,
            pure=pure,
            frequencies=freq,
            claimed_preperiod=0,
            claimed_period=pure.period,
        )
    if pure.status == "resource_exhausted":
        return Verdict(
            ANSWER_UNKNOWN,
            CERTAINTY_BOUNDED_SEARCH,
            REASON_RESOURCE_EXHAUSTED,
            prof,
            rank1=form,
            pure=pure,
            frequencies=freq,
            bounds=(("max_configurations", opts.max_configurations),),
        )

    budget = opts.eventual_offset_budget
    k_scanned = 0
    for k in range(1, opts.eventual_k_max + 1):
        period = form.block_unit * form.trace ** (k - 1)
        if period > budget:
            break
        budget -= period
        k_scanned = k
        witness = eventual_check_at(f, form, k)
        if witness is not None:
            return Verdict(
                ANSWER_ABELIAN_PERIODIC,
                CERTAINTY_PROVED,
                REASON_EVENTUAL_WITNESS,
                prof,
                rank1=form,
                pure=pure,
                eventual=witness,
                frequencies=freq,
                claimed_preperiod=witness.cut_offset,
                claimed_period=witness.period,
            )
    return Verdict(
        ANSWER_UNKNOWN,
        CERTAINTY_BOUNDED_SEARCH,
        REASON_PURE_REFUTED_OPEN,
        prof,
        rank1=form,
        pure=pure,
        frequencies=freq,
        bounds=(
            ("eventual_k_max", opts.eventual_k_max),
            ("eventual_k_scanned", k_scanned),
            ("eventual_offset_budget", opts.eventual_offset_budget),
        ),
    )


def _fraction_str(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def verdict_report(f: BinaryMorphism, verdict: Verdict) -> dict:
    """JSON-ready report for a classification.

    Numbers that can exceed 53 bits (periods, offsets) are decimal strings so
    the report survives tools with double-precision JSON parsers; exact
    rationals are "p/q" strings."""
    from . import __version__

    prof = verdict.spectral
    rank1 = None
    if verdict.rank1 is not None:
        r = verdict.rank1
        rank1 = {
            "A": r.A,
            "B": r.B,
            "n": r.n,
            "m": r.m,
            "trace": r.trace,
            "block_unit": r.block_unit,
        }
    pure = None
    if verdict.pure is not None:
        p = verdict.pure
        pure = {
            "status": p.status,
            "k": p.k,
            "period": None if p.period is None else str(p.period),
            "iterations_used": p.iterations_used,
            "cycle_detected": p.cycle_detected,
        }
    eventual = None
    if verdict.eventual is not None:
        w = verdict.eventual
        eventual = {
            "k": w.k,
            "cut_offset": str(w.cut_offset),
            "period": str(w.period),
        }
    periodicity = None
    if verdict.periodicity is not None:
        pv = verdict.periodicity
        periodicity = {
            "status": pv.status,
            "preperiod_word": None if pv.preperiod is None else str(pv.preperiod),
            "period_word": None if pv.period is None else str(pv.period),
            "max_preperiod": pv.max_preperiod,
            "max_period": pv.max_period,
        }
    special_form = None
    if verdict.special_form is not None:
        special_form = {"k": verdict.special_form[0], "m": verdict.special_form[1]}
    claimed = None
    if verdict.claimed_period is not None:
        claimed = {
            "preperiod": str(verdict.claimed_preperiod),
            "period": str(verdict.claimed_period),
        }
    frequencies = None
    if verdict.frequencies is not None:
        fr = verdict.frequencies
        frequencies = {
            "discriminant": fr.discriminant,
            "rational": fr.rational,
            "a": {
                "rational_part": _fraction_str(fr.rational_a),
                "sqrt_coefficient": _fraction_str(fr.coef_a),
            },
            "b": {
                "rational_part": _fraction_str(fr.rational_b),
                "sqrt_coefficient": _fraction_str(fr.coef_b),
            },
        }
    evidence = None
    if verdict.evidence is not None:
        ev = verdict.evidence
        evidence = {
            "window_length": ev.window_length,
            "imbalance": ev.imbalance,
            "horizon": ev.horizon,
            "target": ev.target,
            "reached": ev.reached,
        }
    return {
        "meta": {"tool": "abmorph", "version": __version__},
        "morphism": {
            "a": str(f.image_a),
            "b": str(f.image_b),
            "text": f.to_text(),
        },
        "matrix": [list(row) for row in matrix_of(f).rows()],
        "spectral": {
            "trace": prof.trace,
            "determinant": prof.determinant,
            "discriminant": prof.discriminant,
            "theta2_kind": prof.theta2_kind,
            "theta2_value": prof.theta2_value,
            "theta2_abs_class": prof.theta2_abs_class,
            "primitive": prof.primitive,
        },
        "rank1": rank1,
        "answer": verdict.answer,
        "certainty": verdict.certainty,
        "reason": verdict.reason,
        "witnesses": {
            "pure": pure,
            "eventual": eventual,
            "periodicity": periodicity,
            "special_form": special_form,
            "claimed_abelian_period": claimed,
        },
        "frequencies": frequencies,
        "bounds": dict(verdict.bounds),
        "evidence": evidence,
    }


def _nullable(schema: dict) -> dict:
    return {"anyOf": [{"type": "null"}, schema]}


_DECIMAL = {"type": "string", "pattern": "^-?[0-9]+$"}
_FRACTION = {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"}

VERDICT_REPORT_SCHEMA: dict = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": [
        "meta",
        "morphism",
        "matrix",
        "spectral",
        "rank1",
        "answer",
        "certainty",
        "reason",
        "witnesses",
        "frequencies",
        "bounds",
        "evidence",
    ],
    "properties": {
        "meta": {
            "type": "object",
            "additionalProperties": False,
            "required": ["tool", "version"],
            "properties": {
                "tool": {"const": "abmorph"},
                "version": {"type": "string"},
            },
        },
        "morphism": {
            "type": "object",
            "additionalProperties": False,
            "required": ["a", "b", "text"],
            "properties": {
                "a": {"type": "string", "pattern": "^[ab]+$"},
                "b": {"type": "string", "pattern": "^[ab]+$"},
                "text": {"type": "string"},
            },
        },
        "matrix": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {"type": "integer", "minimum": 0},
            },
        },
        "spectral": {
            "type": "object",
            "additionalProperties": False,
            "required": [
                "trace",
                "determinant",
                "discriminant",
                "theta2_kind",
                "theta2_value",
                "theta2_abs_class",
                "primitive",
            ],
            "properties": {
                "trace": {"type": "integer"},
                "determinant": {"type": "integer"},
                "discriminant": {"type": "integer", "minimum": 0},
                "theta2_kind": {
                    "enum": ["zero", "integer_nonzero", "irrational_quadratic"]
                },
                "theta2_value": _nullable({"type": "integer"}),
                "theta2_abs_class": {
                    "enum": [
                        "eq_zero",
                        "in_open_unit_interval",
                        "eq_one",
                        "gt_one",
                    ]
                },
                "primitive": {"type": "boolean"},
            },
        },
        "rank1": _nullable(
            {
                "type": "object",
                "additionalProperties": False,
                "required": ["A", "B", "n", "m", "trace", "block_unit"],
                "properties": {
                    "A": {"type": "integer", "minimum": 1},
                    "B": {"type": "integer", "minimum": 1},
                    "n": {"type": "integer", "minimum": 1},
                    "m": {"type": "integer", "minimum": 1},
                    "trace": {"type": "integer", "minimum": 2},
                    "block_unit": {"type": "integer", "minimum": 2},
                },
            }
        ),
        "answer": {"enum": list(ANSWERS)},
        "certainty": {"enum": list(CERTAINTIES)},
        "reason": {"enum": list(REASONS)},
        "witnesses": {
            "type": "object",
            "additionalProperties": False,
            "required": [
                "pure",
                "eventual",
                "periodicity",
                "special_form",
                "claimed_abelian_period",
            ],
            "properties": {
                "pure": _nullable(
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": [
                            "status",
                            "k",
                            "period",
                            "iterations_used",
                            "cycle_detected",
                        ],
                        "properties": {
                            "status": {
                                "enum": ["pure", "not_pure", "resource_exhausted"]
                            },
                            "k": _nullable({"type": "integer", "minimum": 1}),
                            "period": _nullable(_DECIMAL),
                            "iterations_used": {"type": "integer", "minimum": 0},
                            "cycle_detected": {"type": "boolean"},
                        },
                    }
                ),
                "eventual": _nullable(
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["k", "cut_offset", "period"],
                        "properties": {
                            "k": {"type": "integer", "minimum": 1},
                            "cut_offset": _DECIMAL,
                            "period": _DECIMAL,
                        },
                    }
                ),
                "periodicity": _nullable(
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": [
                            "status",
                            "preperiod_word",
                            "period_word",
                            "max_preperiod",
                            "max_period",
                        ],
                        "properties": {
                            "status": {"enum": ["periodic", "not_found"]},
                            "preperiod_word": _nullable(
                                {"type": "string", "pattern": "^[ab]*$"}
                            ),
                            "period_word": _nullable(
                                {"type": "string", "pattern": "^[ab]+$"}
                            ),
                            "max_preperiod": {"type": "integer", "minimum": 0},
                            "max_period": {"type": "integer", "minimum": 1},
                        },
                    }
                ),
                "special_form": _nullable(
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["k", "m"],
                        "properties": {
                            "k": {"type": "integer", "minimum": 0},
                            "m": {"type": "integer", "minimum": 0},
                        },
                    }
                ),
                "claimed_abelian_period": _nullable(
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["preperiod", "period"],
                        "properties": {
                            "preperiod": _DECIMAL,
                            "period": _DECIMAL,
                        },
                    }
                ),
            },
        },
        "frequencies": _nullable(
            {
                "type": "object",
                "additionalProperties": False,
                "required": ["discriminant", "rational", "a", "b"],
                "properties": {
                    "discriminant": {"type": "integer", "minimum": 0},
                    "rational": {"type": "boolean"},
                    "a": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["rational_part", "sqrt_coefficient"],
                        "properties": {
                            "rational_part": _FRACTION,
                            "sqrt_coefficient": _FRACTION,
                        },
                    },
                    "b": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["rational_part", "sqrt_coefficient"],
                        "properties": {
                            "rational_part": _FRACTION,
                            "sqrt_coefficient": _FRACTION,
                        },
                    },
                },
            }
        ),
        "bounds": {
            "type": "object",
            "additionalProperties": {"type": "integer"},
        },
        "evidence": _nullable(
            {
                "type": "object",
                "additionalProperties": False,
                "required": [
                    "window_length",
                    "imbalance",
                    "horizon",
                    "target",
                    "reached",
                ],
                "properties": {
                    "window_length": {"type": "integer", "minimum": 1},
                    "imbalance": {"type": "integer", "minimum": 0},
                    "horizon": {"type": "integer", "minimum": 2},
                    "target": {"type": "integer", "minimum": 1},
                    "reached": {"type": "boolean"},
                },
            }
        ),
    },
}
