"""Reproducible random DNA corpora from a fixed, portable PRNG.

Bytes are drawn from a splitmix64 stream so a (seed, length, alphabet)
spec yields identical output on any platform: the generator's state
after k steps is seed + k*GOLDEN mod 2**64, which also makes the stream
trivially vectorizable.  Symbol i is alphabet[output_i mod |alphabet|];
the modulo bias of a 64-bit draw over a 4-symbol alphabet is negligible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rkhash import MASK64

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

DNA_ALPHABET = b"ACGT"

# Corpus bytes are produced in blocks to bound the temporary uint64 stream.
_GEN_BLOCK = 1 << 22


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step; returns (output, next state)."""
    state = (state + _GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31), state


def splitmix64_stream(seed: int, count: int, skip: int = 0) -> np.ndarray:
    """Vectorized splitmix64 outputs for steps skip+1 .. skip+count.

    Bit-identical to iterating splitmix64() from the same seed.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    steps = np.arange(skip + 1, skip + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + np.uint64(_GOLDEN) * steps
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


@dataclass(frozen=True)
class DnaSpec:
    """Seed, length, and alphabet for one reproducible corpus."""

    seed: int
    length: int
    alphabet: bytes = DNA_ALPHABET

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be >= 0")
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")


def generate(spec: DnaSpec) -> bytes:
    """Deterministic corpus of exactly spec.length alphabet bytes."""
    out = bytearray(spec.length)
    table = np.frombuffer(spec.alphabet, dtype=np.uint8)
    k = np.uint64(len(table))
    for start in range(0, spec.length, _GEN_BLOCK):
        count = min(_GEN_BLOCK, spec.length - start)
        stream = splitmix64_stream(spec.seed, count, skip=start)
        out[start : start + count] = table[(stream % k).astype(np.intp)].tobytes()
    return bytes(out)


def plant(text, pattern, offsets) -> bytes:
    """Copy of ``text`` with ``pattern`` spliced in at each offset.

    Offsets must be in range and pairwise non-overlapping for the
    pattern length, so every planted copy survives verbatim and a naive
    search over the output reports at least the planted offsets.
    """
    text = text if isinstance(text, bytes) else bytes(text)
    pattern = pattern if isinstance(pattern, bytes) else bytes(pattern)
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    ordered = sorted(offsets)
    for x in ordered:
        if x < 0 or x + m > len(text):
            raise ValueError(f"offset {x} out of range for pattern of length {m}")
    for a, b in zip(ordered, ordered[1:]):
        if b - a < m:
            raise ValueError(f"offsets {a} and {b} overlap for pattern length {m}")
    buf = bytearray(text)
    for x in ordered:
        buf[x : x + m] = pattern
    return bytes(buf)
