"""Deciding pure abelian periodicity for a rank-1 morphism, step by step.

Run: python3 demos/04_pure_decision.py
"""

from abmorph import (
    check_pure_at,
    configuration_of,
    decide_pure,
    eventual_check_at,
    fixed_point_prefix,
    matrix_of,
    parse_morphism,
    rank1_decompose,
    validate_abelian_period,
)

# Positive case: chunks of width 2 all share the Parikh vector (1,1).
f = parse_morphism("a->ab; b->ba")
form = rank1_decompose(matrix_of(f))
print(f"{f.to_text()}: block unit {form.block_unit}")
print("chunks balanced at t=1:", check_pure_at(f, form, 1))
print("verdict:", decide_pure(f))

# Negative case: the cut configuration repeats, so no level ever balances.
g = parse_morphism("a->ab; b->bbaa")
gform = rank1_decompose(matrix_of(g))
print(f"\n{g.to_text()}: block unit {gform.block_unit}")
for t in (1, 2, 3):
    print(f"  t={t} balanced={check_pure_at(g, gform, t)}"
          f" configuration={configuration_of(g, gform, t)}")
print("verdict:", decide_pure(g))

# A refuted pure scan can still yield an abelian period after a preperiod.
h = parse_morphism("a->ab; b->aabb")
hform = rank1_decompose(matrix_of(h))
print(f"\n{h.to_text()}: pure verdict {decide_pure(h).status}")
wit = eventual_check_at(h, hform, 1)
print("eventual witness:", wit)
w = fixed_point_prefix(h, 10**4)
print("validates on 10^4 prefix:",
      validate_abelian_period(w, wit.cut_offset, wit.period))
