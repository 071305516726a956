"""Grid/block/thread work decomposition executed on a CPU worker pool.

The index algebra is the three-level flattening used by data-parallel
kernels: a block id is flattened from a 3-D grid, then combined with the
per-block thread index to choose which window offset a kernel instance
examines.  Instances whose offset falls past the last window do nothing
(the guard), so a launch may be padded beyond the number of windows
without affecting the result.

Execution maps the flattened coordinate space onto worker threads in
contiguous ranges.  The scan kernel releases the GIL, so workers run
concurrently; each collects offsets into its own buffer and the merge is
a plain concatenation in range order, which is already globally sorted.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from . import _scan
from .matcher import MatchResult, ScanStats
from .rkhash import HashValue, hash_full

MAX_BLOCK_DIM = 1024  # per-block thread limit
GRID_AXIS_CAP = 65535  # default per-axis block-count cap


@dataclass(frozen=True)
class LaunchConfig:
    """Grid dimensions and threads-per-block for one parallel run."""

    grid_dims: tuple[int, int, int]
    block_dim: int

    def __post_init__(self):
        gx, gy, gz = self.grid_dims
        if min(gx, gy, gz) < 1:
            raise ValueError(f"grid dims must all be >= 1, got {self.grid_dims}")
        if not 1 <= self.block_dim <= MAX_BLOCK_DIM:
            raise ValueError(
                f"block_dim must be in [1, {MAX_BLOCK_DIM}], got {self.block_dim}"
            )

    @property
    def total_threads(self) -> int:
        gx, gy, gz = self.grid_dims
        return gx * gy * gz * self.block_dim


class ThreadCoord(NamedTuple):
    """One kernel instance: block index within the grid, thread index within the block."""

    block_idx: tuple[int, int, int]
    thread_idx: int


def offset_of(coord: ThreadCoord, cfg: LaunchConfig) -> int:
    """Flatten a thread coordinate to the window offset it examines.

    block_id = bx + by*gx + gx*gy*bz, then offset = block_id*block_dim + t.
    Over all valid coordinates of a config this is a bijection onto
    [0, total_threads).
    """
    bx, by, bz = coord.block_idx
    gx, gy, gz = cfg.grid_dims
    if not (0 <= bx < gx and 0 <= by < gy and 0 <= bz < gz):
        raise ValueError(f"block index {coord.block_idx} outside grid {cfg.grid_dims}")
    if not 0 <= coord.thread_idx < cfg.block_dim:
        raise ValueError(
            f"thread index {coord.thread_idx} outside block of {cfg.block_dim}"
        )
    block_id = bx + by * gx + gx * gy * bz
    return block_id * cfg.block_dim + coord.thread_idx


def plan_launch(n: int, m: int, block_dim: int, axis_cap: int = GRID_AXIS_CAP) -> LaunchConfig:
    """Size a launch so block*grid coverage reaches all n - m + 1 windows.

    Blocks are laid out along the x axis, spilling to y (then z) only when
    a per-axis count would exceed ``axis_cap``.
    """
    if not 1 <= block_dim <= MAX_BLOCK_DIM:
        raise ValueError(f"block_dim must be in [1, {MAX_BLOCK_DIM}], got {block_dim}")
    if m < 1:
        raise ValueError("pattern length must be >= 1")
    if m > n:
        raise ValueError(f"pattern length {m} exceeds text length {n}")
    if axis_cap < 1:
        raise ValueError("axis cap must be >= 1")
    blocks = -(-(n - m + 1) // block_dim)
    gx, gy, gz = blocks, 1, 1
    if gx > axis_cap:
        gy = -(-gx // axis_cap)
        gx = axis_cap
        if gy > axis_cap:
            gz = -(-gy // axis_cap)
            gy = axis_cap
    return LaunchConfig((gx, gy, gz), block_dim)


def hash_pattern_host(pattern) -> HashValue:
    """Pattern hash computed once up front and shared by every worker."""
    if len(pattern) == 0:
        raise ValueError("empty pattern")
    return hash_full(pattern)


_pools_lock = threading.Lock()
_pools: dict[int, ThreadPoolExecutor] = {}


def _pool(workers: int) -> ThreadPoolExecutor:
    with _pools_lock:
        pool = _pools.get(workers)
        if pool is None:
            pool = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="rkmatch")
            _pools[workers] = pool
        return pool


def search_parallel(
    text,
    pattern,
    cfg: LaunchConfig,
    workers: int = 1,
    stats: ScanStats | None = None,
) -> MatchResult:
    """Scan the launch's flattened coordinate space on ``workers`` threads.

    Conceptually one kernel instance runs per thread coordinate; an
    instance at offset x past the last window (x > n - m) does nothing,
    the rest hash their window and byte-verify on hash equality.  Worker
    w owns the contiguous coordinate range [w*ceil(N/W), ...), so the
    result is identical to search_sequential for every worker count and
    every covering config.
    """
    t = _scan.as_u8(text)
    p = _scan.as_u8(pattern)
    if p.size == 0:
        raise ValueError("empty pattern")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    n, m = t.size, p.size
    n_windows = n - m + 1
    if n_windows <= 0:
        return MatchResult(n, m, [])
    if cfg.total_threads < n_windows:
        raise ValueError(
            f"launch covers {cfg.total_threads} offsets but text has {n_windows} windows"
        )
    hx = hash_pattern_host(pattern)
    chunk = -(-cfg.total_threads // workers)
    ranges = []
    for w in range(workers):
        start = w * chunk
        stop = min(start + chunk, cfg.total_threads, n_windows)  # guard: x <= n - m
        if start < stop:
            ranges.append((start, stop))
    if len(ranges) <= 1:
        parts = [_scan.scan(t, p, hx, a, b) for a, b in ranges]
    else:
        parts = list(
            _pool(workers).map(lambda r: _scan.scan(t, p, hx, r[0], r[1]), ranges)
        )
    offsets: list[int] = []
    collisions = 0
    for part_offsets, part_collisions in parts:
        offsets.extend(part_offsets.tolist())
        collisions += part_collisions
    if stats is not None:
        stats.windows += n_windows
        stats.hash_hits += len(offsets) + collisions
        stats.collisions += collisions
    return MatchResult(n, m, offsets)
