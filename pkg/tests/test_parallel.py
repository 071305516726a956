"""Parallel engine: index algebra, launch planning, scheduling independence."""

import itertools
import random

import pytest

from rkmatch import (
    GRID_AXIS_CAP,
    LaunchConfig,
    ScanStats,
    ThreadCoord,
    hash_pattern_host,
    offset_of,
    plan_launch,
    search_naive,
    search_parallel,
    search_sequential,
)


def all_coords(cfg):
    gx, gy, gz = cfg.grid_dims
    for bz, by, bx in itertools.product(range(gz), range(gy), range(gx)):
        for t in range(cfg.block_dim):
            yield ThreadCoord((bx, by, bz), t)


def test_offset_of_worked_examples():
    assert offset_of(ThreadCoord((0, 0, 0), 0), LaunchConfig((4, 4, 1), 256)) == 0
    # blockId = 1 + 2*4 = 9; offset = 9*256 + 3
    assert offset_of(ThreadCoord((1, 2, 0), 3), LaunchConfig((4, 4, 1), 256)) == 2307
    # z term: blockId = 4*4*1 = 16; offset = 16*32
    assert offset_of(ThreadCoord((0, 0, 1), 0), LaunchConfig((4, 4, 2), 32)) == 512


def test_offset_of_rejects_out_of_range_coords():
    cfg = LaunchConfig((2, 2, 2), 8)
    with pytest.raises(ValueError):
        offset_of(ThreadCoord((2, 0, 0), 0), cfg)
    with pytest.raises(ValueError):
        offset_of(ThreadCoord((0, -1, 0), 0), cfg)
    with pytest.raises(ValueError):
        offset_of(ThreadCoord((0, 0, 0), 8), cfg)


def test_offset_of_is_bijective_on_small_configs():
    for dims in itertools.product((1, 2, 3), repeat=3):
        for block_dim in (1, 7, 32):
            cfg = LaunchConfig(dims, block_dim)
            seen = {offset_of(c, cfg) for c in all_coords(cfg)}
            assert seen == set(range(cfg.total_threads)), (dims, block_dim)


def test_launch_config_validation():
    with pytest.raises(ValueError):
        LaunchConfig((0, 1, 1), 32)
    with pytest.raises(ValueError):
        LaunchConfig((1, 1, 1), 0)
    with pytest.raises(ValueError):
        LaunchConfig((1, 1, 1), 1025)
    assert LaunchConfig((2, 3, 4), 5).total_threads == 120


def test_plan_launch_examples():
    cfg = plan_launch(1000, 7, 256)
    assert cfg.grid_dims == (4, 1, 1)  # ceil(994/256)
    assert cfg.total_threads == 1024 >= 994

    cfg = plan_launch(100, 100, 32)
    assert cfg.grid_dims == (1, 1, 1)
    assert cfg.total_threads == 32

    cfg = plan_launch(10_000_000, 7, 32)
    assert cfg.grid_dims == (65535, 5, 1)  # ceil(9999994/32)=312500 spills past the cap
    assert cfg.total_threads >= 10_000_000 - 7 + 1


def test_plan_launch_z_spill():
    cfg = plan_launch(20_000, 1, 1, axis_cap=10)
    # 20000 blocks of one thread: x and y both cap at 10, z covers the rest
    assert cfg.grid_dims == (10, 10, 200)
    assert cfg.total_threads == 20_000


def test_plan_launch_covers_all_windows():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randrange(1, 100_000)
        m = rng.randrange(1, n + 1)
        block_dim = rng.choice((1, 32, 256, 1024))
        cfg = plan_launch(n, m, block_dim)
        windows = n - m + 1
        assert cfg.total_threads >= windows
        assert cfg.block_dim == block_dim
        # no more than one spare block per axis step
        assert cfg.total_threads - windows < block_dim * (
            cfg.grid_dims[1] * cfg.grid_dims[2] + GRID_AXIS_CAP
        )


def test_plan_launch_validation():
    with pytest.raises(ValueError):
        plan_launch(10, 11, 32)  # pattern longer than text
    with pytest.raises(ValueError):
        plan_launch(10, 2, 0)
    with pytest.raises(ValueError):
        plan_launch(10, 2, 1025)
    with pytest.raises(ValueError):
        plan_launch(10, 0, 32)


def test_hash_pattern_host():
    assert hash_pattern_host(b"ab") == 292
    assert hash_pattern_host(b"a") == 97
    assert hash_pattern_host(b"ba") == 293
    with pytest.raises(ValueError):
        hash_pattern_host(b"")


def test_search_parallel_examples():
    cfg = plan_launch(4, 2, 32)
    assert search_parallel(b"abab", b"ab", cfg, workers=1).offsets == [0, 2]
    assert search_parallel(b"abab", b"ab", cfg, workers=8).offsets == [0, 2]

    stats = ScanStats()
    cfg = plan_launch(5, 2, 32)
    result = search_parallel(b"acXba", b"ac", cfg, workers=4, stats=stats)
    assert result.offsets == [0]
    assert stats.collisions == 1


def test_search_parallel_validation():
    cfg = LaunchConfig((1, 1, 1), 2)
    with pytest.raises(ValueError):
        search_parallel(b"abcdef", b"ab", cfg, workers=1)  # 5 windows, 2 threads
    with pytest.raises(ValueError):
        search_parallel(b"abab", b"", plan_launch(4, 1, 32), workers=1)
    with pytest.raises(ValueError):
        search_parallel(b"abab", b"ab", plan_launch(4, 2, 32), workers=0)


def test_search_parallel_pattern_longer_than_text():
    # No windows: any config is acceptable and the result is empty.
    cfg = LaunchConfig((1, 1, 1), 1)
    assert search_parallel(b"ab", b"abc", cfg, workers=3).offsets == []


def test_oversized_launch_changes_nothing():
    tight = plan_launch(26, 3, 1)
    padded = LaunchConfig((1024, 2, 2), 512)
    text = b"abcabcabcXabcabc" + b"abc" * 3 + b"c"
    for workers in (1, 2, 5):
        a = search_parallel(text, b"abc", tight, workers)
        b = search_parallel(text, b"abc", padded, workers)
        assert a == b == search_naive(text, b"abc")


def test_scheduling_independence_random():
    rng = random.Random(2024)
    for _ in range(40):
        n = rng.randrange(1, 2000)
        m = rng.randrange(1, min(n, 32) + 1)
        text = bytes(rng.choice(b"ACGT") for _ in range(n))
        if rng.random() < 0.5:
            x = rng.randrange(n - m + 1)
            pattern = text[x : x + m]
        else:
            pattern = bytes(rng.choice(b"ACGT") for _ in range(m))
        expected = search_sequential(text, pattern)
        for workers in (1, 2, 4, 8, 16):
            for block_dim in (32, 256, 1024):
                cfg = plan_launch(n, m, block_dim)
                assert search_parallel(text, pattern, cfg, workers) == expected


def test_worker_ranges_cover_every_window_exactly_once():
    # A text of all-'a' with pattern 'a' reports every window; any skipped
    # or double-scanned coordinate range would show up immediately.
    n = 4097
    text = b"a" * n
    for workers in (1, 2, 3, 7, 16):
        cfg = plan_launch(n, 1, 64)
        result = search_parallel(text, b"a", cfg, workers)
        assert result.offsets == list(range(n))
