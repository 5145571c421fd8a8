"""OEIS b-files: parse, fetch (online or from fixtures), and compare with local values.

A b-file is plain text with one ``<index> <value>`` pair per line; lines
starting with ``#`` are comments. The package ships a fixture for A000670
(Fubini numbers) so comparisons can run offline. Set ``BPA_OEIS_FIXTURES``
to a directory of ``bNNNNNN.txt`` files to use your own.
"""

from __future__ import annotations

import os
import re
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

__all__ = [
    "FIXTURES_ENV",
    "BFileParseError",
    "ComparisonReport",
    "FixtureMissing",
    "NetworkFailure",
    "NotFound",
    "Sequence",
    "bfile_url",
    "compare",
    "fetch_bfile",
    "parse_bfile",
    "render_bfile",
]

FIXTURES_ENV = "BPA_OEIS_FIXTURES"
_PACKAGED_FIXTURES = Path(__file__).with_name("fixtures")
_ID = re.compile(r"A(\d{6})")

_RETRY_DELAY = 1.0


class NetworkFailure(OSError):
    pass


class FixtureMissing(NetworkFailure):
    """Offline mode was requested but no fixture exists for the id."""


class NotFound(LookupError):
    pass


class BFileParseError(ValueError):
    pass


@dataclass(frozen=True)
class Sequence:
    id: str
    offset: int
    terms: Tuple[int, ...]

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.terms))

    def __getitem__(self, index: int) -> int:
        return self.terms[index - self.offset]


@dataclass(frozen=True)
class ComparisonReport:
    compared: int
    first_mismatch: Optional[Tuple[int, int, int]] = None  # (index, local, remote)
    verdict: str = field(default="match")

    @property
    def ok(self) -> bool:
        return self.verdict == "match"


def parse_bfile(text: str, seq_id: str = "") -> Sequence:
    offset = None
    terms: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            index, value = (int(p) for p in parts)
        except ValueError:
            raise BFileParseError(f"line {lineno}: expected '<index> <value>', got {raw!r}") from None
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileParseError(
                f"line {lineno}: index {index} breaks the run (expected {offset + len(terms)})"
            )
        terms.append(value)
    if offset is None:
        raise BFileParseError("no data lines")
    return Sequence(seq_id, offset, tuple(terms))


def render_bfile(seq: Sequence) -> str:
    head = f"# {seq.id}\n" if seq.id else ""
    return head + "".join(f"{i} {v}\n" for i, v in zip(seq.indices, seq.terms))


def bfile_url(seq_id: str) -> str:
    digits = _check_id(seq_id)
    return f"https://oeis.org/{seq_id}/b{digits}.txt"


def _check_id(seq_id: str) -> str:
    match = _ID.fullmatch(seq_id)
    if not match:
        raise ValueError(f"not an OEIS id: {seq_id!r} (expected e.g. A000670)")
    return match.group(1)


def _fixture_dir(fixtures: Optional[os.PathLike]) -> Path:
    if fixtures is not None:
        return Path(fixtures)
    env = os.environ.get(FIXTURES_ENV)
    return Path(env) if env else _PACKAGED_FIXTURES


_cache: Dict[str, Sequence] = {}
_cache_lock = threading.Lock()


def fetch_bfile(
    seq_id: str,
    offline: bool = False,
    fixtures: Optional[os.PathLike] = None,
    timeout: float = 30.0,
    opener: Callable = urllib.request.urlopen,
    use_cache: bool = True,
) -> Sequence:
    """Fetch and parse the b-file for ``seq_id``.

    With ``offline=True`` nothing touches the network; the file is read from
    the fixture directory and :class:`FixtureMissing` is raised when absent.
    Online fetches retry once after a short delay. ``opener`` is the
    ``urlopen``-compatible callable to use (tests pass a fake one).
    """
    digits = _check_id(seq_id)
    if offline:
        path = _fixture_dir(fixtures) / f"b{digits}.txt"
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise FixtureMissing(f"offline mode: no fixture {path}") from None
        return parse_bfile(text, seq_id)

    if use_cache and seq_id in _cache:
        return _cache[seq_id]
    url = bfile_url(seq_id)
    last_error = None
    for attempt in range(2):
        if attempt:
            time.sleep(_RETRY_DELAY)
        try:
            with opener(url, timeout=timeout) as resp:
                text = resp.read().decode("utf-8")
            break
        except urllib.error.HTTPError as exc:
            if exc.code == 404:
                raise NotFound(f"{seq_id}: no b-file at {url}") from None
            last_error = exc
        except (urllib.error.URLError, OSError) as exc:
            last_error = exc
    else:
        raise NetworkFailure(f"could not fetch {url}: {last_error}")

    seq = parse_bfile(text, seq_id)
    if use_cache:
        with _cache_lock:
            _cache.setdefault(seq_id, seq)
    return seq


def compare(local: Sequence, remote: Sequence) -> ComparisonReport:
    """Compare term by term over the indices both sequences cover."""
    lo = max(local.offset, remote.offset)
    hi = min(local.indices.stop, remote.indices.stop)
    if hi <= lo:
        return ComparisonReport(0, None, "insufficient-overlap")
    for i in range(lo, hi):
        if local[i] != remote[i]:
            return ComparisonReport(hi - lo, (i, local[i], remote[i]), "mismatch")
    return ComparisonReport(hi - lo, None, "match")
