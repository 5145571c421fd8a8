"""
Listing arrangements
====================

The generators are lazy, so they can be sliced or counted without building
the full set in memory.
"""

# %%
from itertools import islice

from bpa import canonical_render, enum_barred, enum_preferential, enum_restricted, parse

# %%
# The 13 ways to arrange three runners.
print([canonical_render(a) for a in enum_preferential(3)])

# %%
# Two runners, one bar: eight arrangements.
for a in enum_barred(2, 1):
    print(canonical_render(a))

# %%
# Restricted arrangements: the sections before the last hold at most one block.
print([canonical_render(a) for a in enum_restricted(2, 1)])

# %%
# Text round-trips through parse; blocks print with ascending labels.
a = parse("7 34 1|256||")
print(a.bars, [sorted(b) for b in a.sections[0]], canonical_render(a))

# %%
# Streams are lazy: the first few of a huge set arrive immediately.
for a in islice(enum_barred(12, 3), 3):
    print(canonical_render(a))
