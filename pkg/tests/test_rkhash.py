"""Hashing module: frozen examples, exhaustive window equivalence, rolling oracle."""

import itertools
import random

import numpy as np
import pytest

from rkmatch import MASK64, hash_full, hash_window, roll
from rkmatch._scan import as_u8, window_hashes


def fold(data):
    # Independent re-evaluation of the shift-add fold, kept deliberately dumb.
    h = 0
    for b in data:
        h = (h * 2 + b) % (1 << 64)
    return h


def test_empty_hashes_to_zero():
    assert hash_full(b"") == 0


def test_single_byte_is_its_value():
    assert hash_full(b"a") == 97


@pytest.mark.parametrize(
    "data,expected",
    [
        (b"ab", 292),  # 97*2 + 98
        (b"ac", 293),  # 97*2 + 99
        (b"ba", 293),  # 98*2 + 97: the crafted collision pair
        (b"ACGT", fold(b"ACGT")),
        (bytes(range(256)), fold(bytes(range(256)))),
    ],
)
def test_hash_full_known_values(data, expected):
    assert hash_full(data) == expected


def test_collision_pair():
    assert hash_full(b"ac") == hash_full(b"ba") == 293
    assert b"ac" != b"ba"


def test_hash_is_pure_function_of_content():
    assert hash_full(b"acgt") == hash_full(bytearray(b"acgt"))
    assert hash_full(memoryview(b"acgt")) == hash_full(b"acgt")


def test_hash_window_examples():
    assert hash_window(b"abab", 0, 2) == 292
    assert hash_window(b"abab", 2, 2) == 292
    assert hash_window(b"abab", 1, 2) == 293


def test_hash_window_exhaustive_small_alphabet():
    # Every (text, offset, m) over a 2-symbol alphabet up to length 6.
    for n in range(1, 7):
        for text in itertools.product(b"ab", repeat=n):
            text = bytes(text)
            for m in range(1, n + 1):
                for x in range(n - m + 1):
                    assert hash_window(text, x, m) == hash_full(text[x : x + m])


def test_hash_window_bounds():
    with pytest.raises(ValueError):
        hash_window(b"abc", 2, 2)
    with pytest.raises(ValueError):
        hash_window(b"abc", -1, 2)
    with pytest.raises(ValueError):
        hash_window(b"abc", 0, 0)


def test_roll_examples():
    # text "aba": sliding from "ab" (292) to "ba" (293)
    assert roll(292, 97, 97, 2) == 293
    # sliding over uniform text is a fixed point
    assert roll(hash_full(b"aa"), 97, 97, 2) == hash_full(b"aa")
    # text "bab": sliding from "ba" (293) to "ab" (292)
    assert roll(293, 98, 98, 2) == 292


def test_roll_rejects_zero_length():
    with pytest.raises(ValueError):
        roll(0, 0, 0, 0)


def test_roll_wraps_past_word_width():
    # m = 70: the outgoing byte's coefficient is 0 mod 2**64, so the
    # formula must still agree with a full recompute.
    rng = random.Random(7)
    text = bytes(rng.randrange(256) for _ in range(100))
    m = 70
    h = hash_window(text, 0, m)
    for x in range(len(text) - m):
        h = roll(h, text[x], text[x + m], m)
        assert h == hash_window(text, x + 1, m)


def test_rolling_agreement_random_texts():
    rng = random.Random(1234)
    for _ in range(200):
        n = rng.randrange(2, 512)
        m = rng.randrange(1, min(n, 16) + 1)
        text = bytes(rng.randrange(256) for _ in range(n))
        h = hash_window(text, 0, m)
        for x in range(n - m):
            h = roll(h, text[x], text[x + m], m)
            assert h == hash_window(text, x + 1, m)


def test_leading_bytes_do_not_matter_at_m65():
    # At m = 65 the first byte's coefficient 2**64 vanishes mod 2**64...
    a = b"\xff" + b"q" * 64
    b = b"\x00" + b"q" * 64
    assert hash_full(a) == hash_full(b)
    # ...while position 1 (coefficient 2**63) still matters.
    c = b"q\xff" + b"q" * 63
    d = b"q\x00" + b"q" * 63
    assert hash_full(c) != hash_full(d)


def test_wrapping_never_faults_on_high_bytes():
    data = b"\xff" * 4096
    assert 0 <= hash_full(data) <= MASK64


def test_batched_window_hashes_agree_with_scalar():
    rng = random.Random(99)
    text = bytes(rng.randrange(256) for _ in range(300))
    arr = as_u8(text)
    for m in (1, 2, 7, 64, 65, 100):
        batched = window_hashes(arr, m, 0, len(text) - m + 1)
        for x in range(len(text) - m + 1):
            assert int(batched[x]) == hash_window(text, x, m)


def test_batched_window_hashes_bounds():
    arr = as_u8(b"abcdef")
    with pytest.raises(ValueError):
        window_hashes(arr, 3, 0, 5)  # last window would overrun
    with pytest.raises(ValueError):
        window_hashes(arr, 0, 0, 1)
    assert window_hashes(arr, 3, 2, 2).size == 0


def test_as_u8_rejects_non_bytes():
    with pytest.raises(TypeError):
        as_u8("text")
    with pytest.raises(TypeError):
        as_u8(np.zeros(4, dtype=np.int32))
