"""
Cross-checking with OEIS and caching tables
===========================================

The Fubini numbers are OEIS A000670; a copy of its first terms ships with
the package so the comparison works offline.
"""

# %%
import tempfile
from pathlib import Path

from bpa import build_table, fubini, load_cache, save_cache
from bpa.oeis import Sequence, compare, fetch_bfile

remote = fetch_bfile("A000670", offline=True)
local = Sequence("local", 0, tuple(fubini(n) for n in range(20)))
print(compare(local, remote))

# %%
# Tables persist as plain text with a checksum trailer.
table = build_table(4, 3)
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "barred.cache"
    save_cache(table, path)
    print(path.read_text())
    print(load_cache(path) == table)
