"""Incidence matrices, the second eigenvalue, and letter frequencies.

Run: python3 demos/02_spectral.py
"""

from abmorph import (
    letter_frequencies,
    matrix_of,
    parse_morphism,
    rank1_decompose,
    spectral_profile,
)

EXAMPLES = [
    "a->ab; b->bbaa",   # second eigenvalue 0: rank-1 incidence matrix
    "a->ab; b->a",      # Fibonacci: irrational eigenvalues
    "a->aab; b->bbaab", # second eigenvalue exactly 1
    "a->aaab; b->abbb", # second eigenvalue 2: unbalanced
    "a->ab; b->b",      # non-primitive
]

for text in EXAMPLES:
    f = parse_morphism(text)
    m = matrix_of(f)
    prof = spectral_profile(m)
    print(f"{text:22s} matrix {m.rows()} trace {m.trace}"
          f" det {m.determinant}")
    print(f"{'':22s} theta2: kind={prof.theta2_kind} value={prof.theta2_value}"
          f" |theta2| class={prof.theta2_abs_class} primitive={m.primitive}")
    if m.primitive:
        freq = letter_frequencies(f)
        print(f"{'':22s} freq(a) = {freq.rational_a}"
              f" + {freq.coef_a}*sqrt({freq.discriminant})"
              f" ~ {freq.freq_a_float():.6f}")
    print()

f = parse_morphism("a->ab; b->bbaa")
form = rank1_decompose(matrix_of(f))
print("rank-1 decomposition of", f.to_text())
print(f"  A={form.A} B={form.B} n={form.n} m={form.m}"
      f" trace={form.trace} block unit={form.block_unit}")
print(f"  image of a spans {form.n} cell(s), image of b spans {form.m}")
