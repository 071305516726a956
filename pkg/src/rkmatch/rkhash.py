"""Shift-add window hashing of byte strings.

The hash of an m-byte string is the fold h <- (h*2 + byte) taken in
wrapping 64-bit arithmetic, i.e. sum(b[i] * 2**(m-1-i)) mod 2**64.
There is no prime modulus anywhere; the word width is the modulus, which
is what keeps the per-byte step down to a shift and an add.

Beyond 64 bytes the leading bytes of a window stop contributing (their
coefficients are 0 mod 2**64); that is accepted, since every hash hit is
byte-verified before it is reported.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

# Hash values are plain ints constrained to [0, 2**64).
HashValue = int


def hash_full(data) -> HashValue:
    """Hash an entire byte string; the empty string hashes to 0."""
    if not isinstance(data, bytes):
        data = bytes(data)
    h = 0
    for b in data:
        h = ((h << 1) + b) & MASK64
    return h


def hash_window(text, offset: int, m: int) -> HashValue:
    """Hash the m-byte window of ``text`` starting at ``offset``.

    Equals hash_full(text[offset:offset + m]) and is recomputed from
    scratch, never rolled: the scan engines hash each window
    independently, so any window can be hashed with no knowledge of its
    neighbours.
    """
    if m < 1:
        raise ValueError("window length must be >= 1")
    if offset < 0 or offset + m > len(text):
        raise ValueError(
            f"window [{offset}, {offset + m}) out of range for text of length {len(text)}"
        )
    return hash_full(text[offset : offset + m])


def roll(prev: HashValue, outgoing: int, incoming: int, m: int) -> HashValue:
    """Slide a window hash one position to the right.

    Given prev = hash of text[x:x+m], returns the hash of
    text[x+1:x+m+1], where ``outgoing`` is text[x] and ``incoming`` is
    text[x+m].  The outgoing byte's coefficient 2**(m-1) is taken mod
    2**64.  This exists purely as a cross-validation oracle for
    hash_window; no search path rolls.
    """
    if m < 1:
        raise ValueError("window length must be >= 1")
    top = (outgoing << (m - 1)) & MASK64
    return (((prev - top) << 1) + incoming) & MASK64
