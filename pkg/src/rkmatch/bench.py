"""Timing harness: sequential vs parallel scans with speedup reports.

Rows report median wall-clock milliseconds over ``reps`` runs after one
untimed warmup.  The clock covers hashing + matching + merge only;
corpus generation and file I/O stay outside it.  Every row is accepted
only after the timed engines agree with each other exactly and with a
subsampled brute-force pass, so a report can never be produced by a
wrong matcher.

Sweeps run serially, one timed run at a time, to avoid self-interference;
only the timed subject uses its own declared worker concurrency.
"""

from __future__ import annotations

import csv
import io
import json
import os
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Callable

from .datagen import DnaSpec, generate, splitmix64
from .matcher import MatchResult, search_naive, search_sequential
from .parallel import plan_launch, search_parallel

AXES = ("workers", "pattern_length", "file_size", "block_dim")

# Default sweep values mirroring the published experiment axes.
BLOCK_DIM_VALUES = (32, 64, 128, 256, 512, 1024)
PATTERN_LENGTH_VALUES = (25, 50, 100, 200, 800)
FILE_SIZE_VALUES = tuple(s * 2**20 for s in (2, 10, 20, 40))
DEFAULT_PATTERN_LENGTH = 7

CSV_COLUMNS = ("axis_value", "t_seq_ms", "t_par_ms", "speedup")


class CorrectnessError(RuntimeError):
    """A timed engine disagreed with another run or with the oracle."""


@dataclass
class TimedRun:
    median_ms: float
    times_ms: list[float]
    result: MatchResult


@dataclass
class BenchRow:
    axis_value: int
    t_seq_ms: float
    t_par_ms: float
    speedup: float


@dataclass
class BenchReport:
    axis: str
    rows: list[BenchRow]
    environment: dict


@dataclass(frozen=True)
class SweepConfig:
    """Fixed parameters for the axes a sweep does not vary."""

    corpus: DnaSpec = DnaSpec(seed=42, length=20 * 2**20)
    pattern_length: int = DEFAULT_PATTERN_LENGTH
    pattern_source: str = "sampled"  # "sampled" from the corpus, or "generated"
    workers: int = 0  # 0 means one worker per available CPU
    block_dim: int = 256
    reps: int = 3


def time_search(
    impl: Callable[[bytes, bytes], MatchResult], text, pattern, reps: int = 3
) -> TimedRun:
    """One untimed warmup, then ``reps`` timed runs of ``impl``.

    All runs must produce identical MatchResults; a disagreement is a
    correctness failure, not a timing.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    reference = impl(text, pattern)  # warmup, untimed
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        result = impl(text, pattern)
        times.append((time.perf_counter() - t0) * 1e3)
        if result != reference:
            raise CorrectnessError("matcher output changed between repetitions")
    return TimedRun(statistics.median(times), times, reference)


def speedup(t_base: float, t_par: float) -> float:
    """Baseline-over-parallel time ratio (>1 means the parallel run won)."""
    if t_base <= 0 or t_par <= 0:
        raise ValueError("execution times must be positive")
    return t_base / t_par


def _make_pattern(text: bytes, corpus: DnaSpec, m: int, source: str) -> bytes:
    if m < 1:
        raise ValueError("pattern length must be >= 1")
    if m > len(text):
        raise ValueError(f"pattern length {m} exceeds corpus length {len(text)}")
    if source == "sampled":
        draw, _ = splitmix64(corpus.seed ^ 0xA5A5A5A5A5A5A5A5)
        x = draw % (len(text) - m + 1)
        return text[x : x + m]
    if source == "generated":
        return generate(
            DnaSpec(seed=corpus.seed ^ 0x5DEECE66D, length=m, alphabet=corpus.alphabet)
        )
    raise ValueError(f"unknown pattern source {source!r}")


def _verify_subsampled(
    text: bytes, pattern: bytes, result: MatchResult, seed: int,
    samples: int = 4, window: int = 1 << 16,
) -> None:
    """Check a timed result against the brute-force oracle.

    Small texts are checked outright; large ones on ``samples`` random
    slices, comparing matches that fall fully inside each slice.
    """
    n, m = len(text), len(pattern)
    if n <= samples * window:
        if search_naive(text, pattern).offsets != result.offsets:
            raise CorrectnessError("timed engine disagrees with brute-force oracle")
        return
    claimed = result.offsets
    state = seed
    for _ in range(samples):
        draw, state = splitmix64(state)
        a = draw % (n - window + 1)
        b = a + window
        expected = {a + x for x in search_naive(text[a:b], pattern).offsets}
        got = {x for x in claimed if a <= x <= b - m}
        if expected != got:
            raise CorrectnessError(
                f"timed engine disagrees with brute-force oracle on slice [{a}, {b})"
            )


def sweep(axis: str, values, config: SweepConfig = SweepConfig()) -> BenchReport:
    """Time sequential vs parallel while varying one knob per row.

    All other parameters are held at the config's values.  Returns one
    row per sweep value; each row's speedup field is exactly the quotient
    of its two time fields.
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    values = list(values)
    if not values:
        raise ValueError("sweep needs at least one value")
    if config.reps < 3:
        raise ValueError("reports require reps >= 3")
    base_workers = config.workers or os.cpu_count() or 1

    texts: dict[DnaSpec, bytes] = {}
    rows = []
    for value in values:
        corpus = config.corpus
        m = config.pattern_length
        workers = base_workers
        block_dim = config.block_dim
        if axis == "workers":
            workers = int(value)
        elif axis == "pattern_length":
            m = int(value)
        elif axis == "block_dim":
            block_dim = int(value)
        elif axis == "file_size":
            corpus = DnaSpec(config.corpus.seed, int(value), config.corpus.alphabet)
        if corpus not in texts:
            texts[corpus] = generate(corpus)
        text = texts[corpus]
        pattern = _make_pattern(text, corpus, m, config.pattern_source)
        cfg = plan_launch(len(text), m, block_dim)

        seq = time_search(search_sequential, text, pattern, config.reps)
        par = time_search(
            lambda t, p: search_parallel(t, p, cfg, workers), text, pattern, config.reps
        )
        if seq.result != par.result:
            raise CorrectnessError(
                f"sequential and parallel engines disagree at {axis}={value}"
            )
        _verify_subsampled(text, pattern, seq.result, corpus.seed)
        rows.append(
            BenchRow(value, seq.median_ms, par.median_ms, speedup(seq.median_ms, par.median_ms))
        )

    environment = {
        "cpu_count": os.cpu_count(),
        "workers": base_workers,
        "block_dim": config.block_dim,
        "pattern_length": config.pattern_length,
        "pattern_source": config.pattern_source,
        "reps": config.reps,
        "warmup_runs": 1,
        "corpus": {
            "seed": config.corpus.seed,
            "length": config.corpus.length,
            "alphabet": config.corpus.alphabet.decode("ascii", "replace"),
        },
    }
    return BenchReport(axis, rows, environment)


def format_csv(report: BenchReport) -> str:
    """Delimited rows in the fixed column order axis_value,t_seq_ms,t_par_ms,speedup."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow([row.axis_value, row.t_seq_ms, row.t_par_ms, row.speedup])
    return buf.getvalue()


def write_csv(report: BenchReport, path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(format_csv(report))


def write_json(report: BenchReport, path) -> None:
    """Full report including environment metadata."""
    payload = {
        "axis": report.axis,
        "rows": [asdict(row) for row in report.rows],
        "environment": report.environment,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def format_table(report: BenchReport) -> str:
    """Fixed-width text table of the report rows."""
    header = f"{report.axis:>14}  {'t_seq_ms':>12}  {'t_par_ms':>12}  {'speedup':>9}"
    lines = [header, "-" * len(header)]
    for row in report.rows:
        lines.append(
            f"{row.axis_value:>14}  {row.t_seq_ms:>12.3f}  {row.t_par_ms:>12.3f}  {row.speedup:>9.4f}"
        )
    return "\n".join(lines)
