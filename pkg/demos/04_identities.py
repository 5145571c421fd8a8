"""
Checking the identities
=======================

Each identity is evaluated on a grid from the closed forms, and a few small
points are re-derived by counting the enumeration streams.
"""

# %%
from bpa.identities import verify_all, verify_restricted

report = verify_all(8, 5)
print(report.summary())
for note in report.notes:
    print("note:", note)

# %%
# Per-point results are available for inspection or export.
rep = verify_restricted(4, 2)
for p in rep.points[:8]:
    print(p.identity_id, p.n, p.m, p.lhs, p.rhs, p.verdict)

# %%
print(report.render_jsonl().splitlines()[0])
