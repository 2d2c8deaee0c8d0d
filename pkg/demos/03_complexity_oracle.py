"""Abelian complexity, the brute-force period oracle, and lattice paths.

Run: python3 demos/03_complexity_oracle.py
"""

from abmorph import (
    abelian_period_oracle,
    complexity_profile,
    fixed_point_prefix,
    lattice_path_heights,
    parse_morphism,
    validate_abelian_period,
)

tm = parse_morphism("a->ab; b->ba")
w = fixed_point_prefix(tm, 4096)
print("Thue-Morse prefix:", str(w)[:32], "...")

prof = complexity_profile(w, 8)
print("\nwindow length, abelian complexity, imbalance:")
for row in prof.rows():
    print("  ", row)

wit = abelian_period_oracle(w, max_period=16, max_preperiod=8)
print(f"\nminimal abelian period witness: preperiod={wit.preperiod}"
      f" period={wit.period}")
print("validates:", validate_abelian_period(w, wit.preperiod, wit.period))

fib = parse_morphism("a->ab; b->a")
v = fixed_point_prefix(fib, 4096)
print(f"\nFibonacci prefix: {str(v)[:32]} ...")
print("oracle up to p=50, r=50:",
      abelian_period_oracle(v, max_period=50, max_preperiod=50))

heights = lattice_path_heights(str(w)[:16])
print("\nlattice path of the first 16 Thue-Morse letters (a: +1, b: -1):")
print("  ", heights)
