"""Sequential hash-then-verify matching, a brute-force oracle, and
multi-pattern search over per-length hash tables.

All matches are verified matches: a window is reported only when its
hash equals the pattern hash AND its bytes compare equal, so hash
collisions can cost time but never correctness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _scan
from .rkhash import hash_full

# Chunk size (in window offsets) for the batched multi-pattern hash sweep;
# bounds the temporary uint64 hash array to 8 MiB.
_HASH_BLOCK = 1 << 20


@dataclass
class MatchResult:
    """All match offsets for one (text, pattern) search.

    Offsets are sorted ascending with no duplicates, each in
    [0, text_length - pattern_length], and the window at every reported
    offset byte-equals the pattern.
    """

    text_length: int
    pattern_length: int
    offsets: list[int]

    def to_bitmap(self) -> np.ndarray:
        """Dense per-window boolean map, True where a match starts."""
        n_windows = max(self.text_length - self.pattern_length + 1, 0)
        bitmap = np.zeros(n_windows, dtype=bool)
        if self.offsets:
            bitmap[np.asarray(self.offsets)] = True
        return bitmap


@dataclass
class ScanStats:
    """Counters accumulated by an instrumented scan.

    ``collisions`` counts windows whose hash matched the pattern hash but
    whose bytes did not; hash_hits = matches + collisions.
    """

    windows: int = 0
    hash_hits: int = 0
    collisions: int = 0


class PatternSet:
    """Deduplicated non-empty patterns indexed for one-pass multi search.

    ``by_length`` groups pattern indices by pattern length; ``hash_index``
    maps, per length, a window hash to the pattern indices carrying it.
    Duplicate byte contents collapse to the first occurrence.
    """

    def __init__(self, patterns):
        self.patterns: list[bytes] = []
        self.by_length: dict[int, list[int]] = {}
        self.hash_index: dict[int, dict[int, list[int]]] = {}
        seen: set[bytes] = set()
        for raw in patterns:
            p = bytes(raw)
            if not p:
                raise ValueError("empty pattern")
            if p in seen:
                continue
            seen.add(p)
            idx = len(self.patterns)
            self.patterns.append(p)
            m = len(p)
            self.by_length.setdefault(m, []).append(idx)
            self.hash_index.setdefault(m, {}).setdefault(hash_full(p), []).append(idx)
        if not self.patterns:
            raise ValueError("pattern set is empty")

    def __len__(self) -> int:
        return len(self.patterns)


def search_naive(text, pattern) -> MatchResult:
    """Ground-truth oracle: direct byte comparison at every offset."""
    text = text if isinstance(text, bytes) else bytes(text)
    pattern = pattern if isinstance(pattern, bytes) else bytes(pattern)
    if not pattern:
        raise ValueError("empty pattern")
    n, m = len(text), len(pattern)
    offsets = [x for x in range(n - m + 1) if text[x : x + m] == pattern]
    return MatchResult(n, m, offsets)


def search_sequential(text, pattern, stats: ScanStats | None = None) -> MatchResult:
    """One-thread engine: hash every window, byte-verify on hash equality.

    The pattern hash is computed once up front; each window hash is then
    recomputed from scratch (no rolling).  Output is identical to
    search_naive.  A pattern longer than the text yields zero matches.
    """
    t = _scan.as_u8(text)
    p = _scan.as_u8(pattern)
    if p.size == 0:
        raise ValueError("empty pattern")
    n, m = t.size, p.size
    n_windows = n - m + 1
    if n_windows <= 0:
        return MatchResult(n, m, [])
    hx = hash_full(pattern)
    offsets, collisions = _scan.scan(t, p, hx, 0, n_windows)
    if stats is not None:
        stats.windows += n_windows
        stats.hash_hits += offsets.size + collisions
        stats.collisions += collisions
    return MatchResult(n, m, offsets.tolist())


def search_multi(text, patterns) -> list[tuple[int, MatchResult]]:
    """Match every pattern of a PatternSet in one hash sweep per length.

    For each distinct pattern length one pass computes the window hashes
    and looks them up in the set's hash index; candidate windows are
    byte-verified before being reported.  Per-pattern output equals
    search_naive for that pattern.  Returns one (pattern index, result)
    pair per distinct pattern, in pattern-index order.
    """
    if not isinstance(patterns, PatternSet):
        patterns = PatternSet(patterns)
    t = _scan.as_u8(text)
    n = t.size
    found: dict[int, list[int]] = {i: [] for i in range(len(patterns))}
    for m in sorted(patterns.by_length):
        n_windows = n - m + 1
        if n_windows <= 0:
            continue
        index = patterns.hash_index[m]
        for start in range(0, n_windows, _HASH_BLOCK):
            stop = min(start + _HASH_BLOCK, n_windows)
            hashes = _scan.window_hashes(t, m, start, stop)
            for hv, indices in index.items():
                for rel in np.flatnonzero(hashes == np.uint64(hv)):
                    x = start + int(rel)
                    window = t[x : x + m].tobytes()
                    for i in indices:
                        if window == patterns.patterns[i]:
                            found[i].append(x)
    return [
        (i, MatchResult(n, len(patterns.patterns[i]), found[i]))
        for i in range(len(patterns))
    ]
