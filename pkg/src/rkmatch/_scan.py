"""Hot scan paths: JIT-compiled hash-then-verify kernel, batched hashing.

The kernel is the exact per-window loop of the engines: compute the
shift-add hash of the window, compare against the pattern hash, and
byte-verify on equality.  It is compiled nogil so worker threads run it
concurrently on disjoint offset ranges.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_INITIAL_CAPACITY = 4096


def as_u8(data) -> np.ndarray:
    """View bytes-like input as a uint8 array, without copying bytes objects."""
    if isinstance(data, np.ndarray):
        if data.dtype != np.uint8:
            raise TypeError(f"expected uint8 array, got {data.dtype}")
        return np.ascontiguousarray(data)
    if isinstance(data, (bytes, bytearray, memoryview)):
        return np.frombuffer(data, dtype=np.uint8)
    raise TypeError(f"expected bytes-like input, got {type(data).__name__}")


@njit(cache=True, nogil=True)
def _scan_range(text, pattern, hx, start, stop, out):
    m = pattern.shape[0]
    matches = 0
    collisions = 0
    cap = out.shape[0]
    for x in range(start, stop):
        hy = np.uint64(0)
        for i in range(m):
            hy = (hy << np.uint64(1)) + np.uint64(text[x + i])
        if hy == hx:
            equal = True
            for i in range(m):
                if text[x + i] != pattern[i]:
                    equal = False
                    break
            if equal:
                if matches < cap:
                    out[matches] = x
                matches += 1
            else:
                collisions += 1
    return matches, collisions


def scan(text: np.ndarray, pattern: np.ndarray, hx: int, start: int, stop: int):
    """Scan window offsets [start, stop); returns (offsets, collision count).

    ``collisions`` counts windows whose hash equalled the pattern hash
    but whose bytes did not; such windows are never reported as matches.
    """
    if stop <= start:
        return np.empty(0, dtype=np.int64), 0
    capacity = min(stop - start, _INITIAL_CAPACITY)
    out = np.empty(capacity, dtype=np.int64)
    matches, collisions = _scan_range(text, pattern, np.uint64(hx), start, stop, out)
    if matches > capacity:
        # Rare: more matches than the first buffer held, rescan with exact room.
        out = np.empty(matches, dtype=np.int64)
        matches, collisions = _scan_range(text, pattern, np.uint64(hx), start, stop, out)
    return out[:matches].copy(), collisions


def window_hashes(text: np.ndarray, m: int, start: int, stop: int) -> np.ndarray:
    """Hashes of every window [x, x+m) for x in [start, stop), batched.

    Same shift-add fold as the scalar path, evaluated one byte position
    at a time across all requested windows.
    """
    if m < 1:
        raise ValueError("window length must be >= 1")
    if start == stop:
        return np.empty(0, dtype=np.uint64)
    if start < 0 or stop < start or stop - 1 + m > text.size:
        raise ValueError(
            f"window range [{start}, {stop}) of length {m} out of bounds "
            f"for text of length {text.size}"
        )
    count = stop - start
    h = np.zeros(count, dtype=np.uint64)
    for i in range(m):
        h <<= 1
        h += text[start + i : start + i + count]
    return h
