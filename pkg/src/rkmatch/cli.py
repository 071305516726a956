"""Command-line front end: corpus generation, search, verification, benchmarks.

Exit codes follow one contract everywhere: 0 success (for search, at
least one match; for verify, PASS), 1 no matches / verification FAIL,
2 any error (bad arguments, unreadable files, engine misuse).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .bench import (
    AXES,
    CorrectnessError,
    SweepConfig,
    format_csv,
    format_table,
    sweep,
    write_csv,
    write_json,
)
from .datagen import DNA_ALPHABET, DnaSpec, generate
from .matcher import PatternSet, search_naive, search_sequential
from .parallel import plan_launch, search_parallel

EXIT_OK = 0
EXIT_NO_MATCHES = 1
EXIT_ERROR = 2


class CliError(Exception):
    """User-facing invocation error; maps to exit code 2."""


@dataclass
class RunManifest:
    """One validated invocation: command, inputs, parameters, output."""

    command: str
    inputs: list[Path] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    output: Path | None = None
    out_format: str | None = None

    def validate(self) -> None:
        for path in self.inputs:
            if not path.is_file():
                raise CliError(f"input file not found: {path}")
            if not os.access(path, os.R_OK):
                raise CliError(f"input file not readable: {path}")


def parse_size(value: str) -> int:
    """Parse a byte count with optional KB/MB/GB suffix (powers of 1024)."""
    s = value.strip().upper()
    for suffix, factor in (("KB", 2**10), ("MB", 2**20), ("GB", 2**30), ("B", 1)):
        if s.endswith(suffix):
            s = s[: -len(suffix)]
            break
    else:
        factor = 1
    try:
        n = int(s) * factor
    except ValueError:
        raise CliError(f"cannot parse size {value!r}") from None
    if n < 0:
        raise CliError(f"size must be >= 0, got {value!r}")
    return n


def _load_patterns(args) -> list[bytes]:
    if args.pattern is not None and args.pattern_file is not None:
        raise CliError("use either --pattern or --pattern-file, not both")
    if args.pattern is not None:
        pattern = args.pattern.encode("latin-1")
        if not pattern:
            raise CliError("--pattern must not be empty")
        return [pattern]
    if args.pattern_file is not None:
        manifest = RunManifest("patterns", inputs=[Path(args.pattern_file)])
        manifest.validate()
        data = Path(args.pattern_file).read_bytes()
        lines = data.split(b"\n")
        if lines and lines[-1] == b"":
            lines.pop()  # trailing newline, not a blank pattern
        if not lines:
            raise CliError(f"pattern file {args.pattern_file} is empty")
        for lineno, line in enumerate(lines, start=1):
            if line == b"":
                raise CliError(
                    f"pattern file {args.pattern_file}: blank pattern at line {lineno}"
                )
        return lines
    raise CliError("one of --pattern / --pattern-file is required")


def _run_engine(engine: str, text: bytes, patterns: PatternSet, workers: int, block_dim: int):
    """Per-pattern match offsets for the chosen engine, in pattern-index order."""
    results = []
    for idx, pattern in enumerate(patterns.patterns):
        if engine == "naive":
            result = search_naive(text, pattern)
        elif engine == "seq":
            result = search_sequential(text, pattern)
        elif engine == "par":
            if len(pattern) > len(text):
                result = search_sequential(text, pattern)  # no windows, empty result
            else:
                cfg = plan_launch(len(text), len(pattern), block_dim)
                result = search_parallel(text, pattern, cfg, workers)
        else:
            raise CliError(f"unknown engine {engine!r}")
        results.append((idx, result))
    return results


def cmd_gen(args) -> int:
    spec = DnaSpec(
        seed=args.seed,
        length=parse_size(args.size),
        alphabet=args.alphabet.encode("latin-1"),
    )
    out = Path(args.out)
    data = generate(spec)
    out.write_bytes(data)
    print(f"wrote {out}: {len(data)} bytes (seed {spec.seed}, alphabet {args.alphabet})")
    return EXIT_OK


def cmd_search(args) -> int:
    manifest = RunManifest("search", inputs=[Path(args.text)])
    manifest.validate()
    text = Path(args.text).read_bytes()
    patterns = PatternSet(_load_patterns(args))
    results = _run_engine(args.engine, text, patterns, args.workers, args.block_dim)

    listing = sorted(
        (offset, idx) for idx, result in results for offset in result.offsets
    )
    for offset, idx in listing:
        print(f"MATCH {idx} {offset}")
    print(f"TOTAL {len(listing)}")
    return EXIT_OK if listing else EXIT_NO_MATCHES


def cmd_verify(args) -> int:
    manifest = RunManifest("verify", inputs=[Path(args.text)])
    manifest.validate()
    text = Path(args.text).read_bytes()
    patterns = PatternSet(_load_patterns(args))

    by_engine = {
        engine: _run_engine(engine, text, patterns, args.workers, args.block_dim)
        for engine in ("naive", "seq", "par")
    }
    failures = 0
    total = 0
    for idx, pattern in enumerate(patterns.patterns):
        offsets = {
            engine: by_engine[engine][idx][1].offsets for engine in by_engine
        }
        reference = offsets["naive"]
        total += len(reference)
        for engine in ("seq", "par"):
            if offsets[engine] != reference:
                failures += 1
                missing = sorted(set(reference) - set(offsets[engine]))[:10]
                spurious = sorted(set(offsets[engine]) - set(reference))[:10]
                print(
                    f"MISMATCH pattern {idx} engine {engine}: "
                    f"missing={missing} spurious={spurious}"
                )
    if failures:
        print(f"FAIL {failures} engine disagreement(s)")
        return EXIT_NO_MATCHES
    print(f"PASS {len(patterns)} pattern(s), {total} match(es) agree across naive/seq/par")
    return EXIT_OK


def _parse_values(axis: str, raw: str) -> list[int]:
    items = [item for item in raw.split(",") if item.strip()]
    if not items:
        raise CliError("--values must list at least one value")
    if axis == "file_size":
        return [parse_size(item) for item in items]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise CliError(f"cannot parse --values {raw!r}") from None


def cmd_bench(args) -> int:
    if args.axis not in AXES:
        raise CliError(f"--axis must be one of {', '.join(AXES)}")
    values = _parse_values(args.axis, args.values)
    config = SweepConfig(
        corpus=DnaSpec(seed=args.seed, length=parse_size(args.size)),
        pattern_length=args.pattern_len,
        pattern_source=args.pattern_source,
        workers=args.workers,
        block_dim=args.block_dim,
        reps=args.reps,
    )
    report = sweep(args.axis, values, config)

    print(format_table(report))
    if args.format == "csv":
        print(format_csv(report), end="")
    elif args.format == "json":
        print(json.dumps(
            {"axis": report.axis,
             "rows": [vars(r) for r in report.rows],
             "environment": report.environment},
            indent=2,
        ))

    if args.out:
        base = Path(args.out)
        if base.suffix in (".csv", ".json", ".png"):
            base = base.with_suffix("")
        base.parent.mkdir(parents=True, exist_ok=True)
        write_csv(report, base.with_suffix(".csv"))
        write_json(report, base.with_suffix(".json"))
        from .plots import render_report_figure

        render_report_figure(report, base.with_suffix(".png"))
        print(f"wrote {base.with_suffix('.csv')}, {base.with_suffix('.json')}, {base.with_suffix('.png')}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rkmatch",
        description="Exact string matching with shift-add window hashing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a reproducible DNA corpus")
    p_gen.add_argument("--seed", type=int, default=42)
    p_gen.add_argument("--size", required=True, help="byte count, KB/MB/GB suffixes allowed")
    p_gen.add_argument("--alphabet", default=DNA_ALPHABET.decode("ascii"))
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_gen)

    def add_pattern_args(p):
        p.add_argument("text", help="raw-byte text file to search")
        p.add_argument("--pattern", help="inline pattern (Latin-1 bytes)")
        p.add_argument("--pattern-file", help="newline-delimited pattern file")
        p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
        p.add_argument("--block-dim", type=int, default=256)

    p_search = sub.add_parser("search", help="search a text file for patterns")
    add_pattern_args(p_search)
    p_search.add_argument("--engine", choices=("naive", "seq", "par"), default="seq")
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="cross-check all engines on one input")
    add_pattern_args(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="run a timing sweep and write reports")
    p_bench.add_argument("--axis", required=True, help="/".join(AXES))
    p_bench.add_argument("--values", required=True, help="comma-separated sweep values")
    p_bench.add_argument("--size", default="20MB", help="corpus size")
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--pattern-len", type=int, default=7)
    p_bench.add_argument("--pattern-source", choices=("sampled", "generated"), default="sampled")
    p_bench.add_argument("--workers", type=int, default=0, help="0 = one per CPU")
    p_bench.add_argument("--block-dim", type=int, default=256)
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--out", help="report base path; writes .csv/.json/.png")
    p_bench.add_argument("--format", choices=("csv", "json"), help="also dump this format to stdout")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own errors on stderr
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CorrectnessError as exc:
        print(f"correctness failure: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
