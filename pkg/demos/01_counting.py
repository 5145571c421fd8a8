"""
Counting arrangements exactly
=============================

Preferential arrangements (ordered set partitions), their barred versions,
and the restricted variant where only the last section may hold more than
one block.
"""

# %%
# Fubini numbers: ways a race with n runners can finish when ties are allowed.
from bpa import fubini, barred_count, barred_count_rec, restricted_count, build_table

print([fubini(n) for n in range(10)])

# %%
# With m bars the arrangement splits into m + 1 sections, some possibly empty.
# Two small values that are easy to check by hand:
print(barred_count(2, 2), barred_count(4, 5))

# %%
# The closed form and the sectioning recurrence are independent routes to
# the same numbers; they agree far beyond 64-bit range.
print(barred_count(40, 10) == barred_count_rec(40, 10), barred_count(40, 10))

# %%
# Restricted arrangements grow much more slowly.
print([restricted_count(5, m) for m in range(6)])

# %%
# A table checks every cell both ways as it fills in.
table = build_table(6, 4)
for n, row in table.rows():
    print(n, row)
