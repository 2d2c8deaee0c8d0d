"""Words, morphisms, and fixed points: the core objects.

Run: python3 demos/01_fixed_points.py
"""

from abmorph import (
    compose,
    fixed_point_prefix,
    parikh,
    parse_morphism,
    power_lengths,
    primitive_root,
)

f = parse_morphism("a->ab; b->bbaa")
print("morphism:", f.to_text())
print("images:  ", f.image_a, f.image_b)

print("\napply to 'aba':", f.apply("aba"))
print("square images: ", compose(f, f).to_text())

print("\niterates from 'a':")
w = "a"
for t in range(5):
    print(f"  f^{t}(a) = {w}")
    w = str(f.apply(w))

print("\nfixed point prefix (40 letters):", fixed_point_prefix(f, 40))
print("image lengths at t=10:", power_lengths(f, 10))

w18 = fixed_point_prefix(f, 18)
print(f"\nParikh vector of {w18}:", parikh(w18).as_tuple())

print("\nprimitive root of 'abab':", primitive_root("abab"))
print("primitive root of 'aab': ", primitive_root("aab"))
