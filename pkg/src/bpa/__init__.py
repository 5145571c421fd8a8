"""Exact counting, enumeration and identity checks for barred preferential arrangements."""

from .counting import (
    CountTable,
    Kind,
    barred_count,
    barred_count_rec,
    build_table,
    fubini,
    load_cache,
    restricted_count,
    restricted_count_sum,
    save_cache,
)
from .enumeration import (
    canonical_render,
    count_by_enumeration,
    enum_barred,
    enum_preferential,
    enum_restricted,
    parse,
)
from .identities import verify_all
from .series import barred_series, fubini_series

__version__ = "0.1.0"
