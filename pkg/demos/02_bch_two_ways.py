"""
BCH components two ways
=======================

Expand log(e^A e^B) directly as a truncated series, then rebuild the same
components one degree at a time from the commutator recurrence.
"""

# %%
import time

from bchkit import bch_direct, bch_recurrence

N = 8

t0 = time.perf_counter()
direct = bch_direct(N)
t_direct = time.perf_counter() - t0

t0 = time.perf_counter()
rec = bch_recurrence(N)
t_rec = time.perf_counter() - t0

print(f"direct: {t_direct:.3f}s   recurrence: {t_rec:.3f}s")

# %%
for n in range(1, 5):
    print(f"C_{n} =", rec.component(n))

# %%
same = all(x == y for x, y in zip(direct, rec.components))
print("identical in every degree:", same)
print("terms per degree:", [len(c) for c in rec.components])
print("largest denominator in C_8:", rec.component(8).max_denominator())
