"""
Lie polynomials and right-normed brackets
=========================================

A homogeneous polynomial of degree n is a Lie polynomial exactly when
right-normed bracketing scales it by n.  Dividing by n then gives an
explicit bracket expression.
"""

# %%
from bchkit import (
    bch_recurrence,
    certify,
    dynkin_is_lie,
    expand_rightnormed,
    rmap,
)
from bchkit.algebra import BCH_ALPHABET, NcPoly

ab = NcPoly.monomial(BCH_ALPHABET, "AB")
print("rmap(AB) =", rmap(ab), " -> Lie?", dynkin_is_lie(ab))
bracket = ab - NcPoly.monomial(BCH_ALPHABET, "BA")
print("rmap(AB - BA) =", rmap(bracket), " -> Lie?", dynkin_is_lie(bracket))

# %%
res = bch_recurrence(5)
for n, form in enumerate(res.rightnormed, start=1):
    assert expand_rightnormed(form) == res.component(n)
    if n <= 4:
        print(f"C_{n} =", form)

# %%
cert = certify(res)
print("\n".join(cert.lines()))
print("all checks pass:", cert.ok)

# %%
# A single wrong coefficient is caught.
bad = list(res.components)
bad[2] = bad[2] + NcPoly.monomial(BCH_ALPHABET, "ABA")
print([line for line in certify(bad).lines() if "FAIL" in line])
