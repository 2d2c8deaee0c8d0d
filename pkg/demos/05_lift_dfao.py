"""Lifting a rank-1 fixed point to a uniform one, and reading letters by
base-k digits of the position.

Run: python3 demos/05_lift_dfao.py
"""

from abmorph import (
    build_lift,
    dfao_dot,
    dfao_eval,
    fixed_point_prefix,
    is_bijective,
    lift_verify,
    matrix_of,
    parse_morphism,
    rank1_decompose,
)

f = parse_morphism("a->ab; b->bbaa")
lift = build_lift(f, rank1_decompose(matrix_of(f)))

print(f"uniform lift of {f.to_text()}: {len(lift.images)} states,"
      f" block length {lift.k}")
for s, img in enumerate(lift.images):
    arrow = " ".join(str(t + 1) for t in img)
    print(f"  state {s + 1} ({lift.state_label(s)}) -> {arrow}"
          f"   codes to '{lift.coding[s]}'")

print("\nbijective:", is_bijective(lift))
print("agrees with the fixed point to 10^5:", lift_verify(f, lift, 10**5))

w = str(fixed_point_prefix(f, 20))
digits = [dfao_eval(lift, n) for n in range(20)]
print("\nposition:    ", " ".join(str(n % 10) for n in range(20)))
print("fixed point: ", " ".join(w))
print("dfao output: ", " ".join(digits))

n = 10**12
print(f"\nletter at position 10^12 (no materialization): {dfao_eval(lift, n)}")

dot = dfao_dot(lift)
print(f"\nGraphviz export ({len(dot.splitlines())} lines), first 5:")
for line in dot.splitlines()[:5]:
    print("  ", line)
