"""
Infinite series with a certified tail
=====================================

The counts also have infinite-sum forms. Summing them in exact rationals,
with a geometric bound on the omitted tail below 1/2, pins down the integer.
"""

# %%
from bpa import barred_count, barred_series, fubini, fubini_series

res = fubini_series(6)
print(res.rounded, fubini(6))
print("terms:", res.terms_used, " partial:", float(res.partial_sum), " tail <=", float(res.tail_bound))

# %%
res = barred_series(4, 3)
print(res.rounded, barred_count(4, 3), res.terms_used, res.tail_bound)

# %%
# Asking for more terms shrinks the bound but never moves the answer.
longer = barred_series(4, 3, min_terms=200)
print(longer.rounded, float(longer.tail_bound))
