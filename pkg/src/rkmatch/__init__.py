"""Exact multi-pattern string matching with shift-add window hashing.

A sequential hash-then-verify scanner, an equivalent data-parallel
engine that reproduces grid/block/thread index arithmetic on CPU worker
threads, a reproducible DNA corpus generator, and a timing harness that
emits CSV/JSON reports with rendered figures.
"""

from .bench import (
    BenchReport,
    BenchRow,
    CorrectnessError,
    SweepConfig,
    TimedRun,
    format_csv,
    format_table,
    speedup,
    sweep,
    time_search,
    write_csv,
    write_json,
)
from .datagen import DNA_ALPHABET, DnaSpec, generate, plant, splitmix64, splitmix64_stream
from .matcher import (
    MatchResult,
    PatternSet,
    ScanStats,
    search_multi,
    search_naive,
    search_sequential,
)
from .parallel import (
    GRID_AXIS_CAP,
    MAX_BLOCK_DIM,
    LaunchConfig,
    ThreadCoord,
    hash_pattern_host,
    offset_of,
    plan_launch,
    search_parallel,
)
from .rkhash import MASK64, HashValue, hash_full, hash_window, roll

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "BenchRow",
    "CorrectnessError",
    "DNA_ALPHABET",
    "DnaSpec",
    "GRID_AXIS_CAP",
    "HashValue",
    "LaunchConfig",
    "MASK64",
    "MAX_BLOCK_DIM",
    "MatchResult",
    "PatternSet",
    "ScanStats",
    "SweepConfig",
    "ThreadCoord",
    "TimedRun",
    "format_csv",
    "format_table",
    "generate",
    "hash_full",
    "hash_pattern_host",
    "hash_window",
    "offset_of",
    "plan_launch",
    "plant",
    "roll",
    "search_multi",
    "search_naive",
    "search_parallel",
    "search_sequential",
    "speedup",
    "splitmix64",
    "splitmix64_stream",
    "sweep",
    "time_search",
    "write_csv",
    "write_json",
    "__version__",
]
