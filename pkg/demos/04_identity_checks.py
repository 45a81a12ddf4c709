"""
Randomized identity checks
==========================

Each check evaluates both sides of an identity on seeded random inputs.
The same runs back ``bchkit verify``.
"""

# %%
import random

from bchkit import check_baker_identity, check_exp_ad_identity, check_rPa
from bchkit.sampling import random_lie, random_poly
from bchkit.verify import ALPHABETS, run_verify

rng = random.Random(0)
abc = ALPHABETS[3]
p, q = random_poly(rng, abc, 3), random_poly(rng, abc, 3)
print("P =", p)
print("Q =", q)
print("r(r(P)Q) == [r(P), r(Q)]:", check_baker_identity(p, q))

lie_elt = random_lie(rng, abc, 3)
print("r(La) == -ad_a(L) for every letter:", all(check_rPa(lie_elt, a) for a in abc.letters))

x, y = random_poly(rng, ALPHABETS[2], 2), random_poly(rng, ALPHABETS[2], 2)
print("e^X Y e^-X == e^(ad X) Y to order 6:", check_exp_ad_identity(x, y, 6))

# %%
print(run_verify(max_degree=5, trials=25, seed=1).text())
