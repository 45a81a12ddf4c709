"""
Noncommutative polynomials and commutators
==========================================

Words over an alphabet form a basis; products concatenate words.
"""

# %%
from fractions import Fraction

from bchkit import Alphabet, NcPoly, ad_pow, commutator

ab = Alphabet(("A", "B"))
A = NcPoly.letter(ab, "A")
B = NcPoly.letter(ab, "B")

print("AB =", A * B, "   BA =", B * A)
print("[A, B] =", commutator(A, B))

# %%
# Nested brackets expand quickly; ad_A^3(B) has 2^3 words.
for n in range(4):
    print(f"ad_A^{n}(B) =", ad_pow(A, n, B))

# %%
# Coefficients stay exact rationals.
p = Fraction(1, 3) * (A * B) + Fraction(2, 3) * (A * B)
print(p, p.coefficient("AB"))

# %%
# The Jacobi identity, checked on a three-letter alphabet.
abc = Alphabet(("A", "B", "C"))
x = NcPoly.from_spellings(abc, {"AB": 1, "C": Fraction(-1, 2)})
y = NcPoly.from_spellings(abc, {"CA": 3})
z = NcPoly.from_spellings(abc, {"B": 1, "BCA": 1})
jacobi = commutator(x, commutator(y, z)) + commutator(z, commutator(x, y)) + commutator(y, commutator(z, x))
print("Jacobi sum:", jacobi)
