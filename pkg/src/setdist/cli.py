"""Command line interface: ``setdist {map,dist,matrix,verify}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .core import DegenerateSetError
from .corpus import ENCODINGS, FORMATS, EncodingError, emit, load_documents, matrix
from .mappers import MAPPER_KINDS, MapperConfig, dist_strings, lz76_components, map_string
from .verifier import SUITES, format_reports, run_all

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_DEGENERATE, EXIT_VIOLATION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for input errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_mapper_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mapper", choices=MAPPER_KINDS, default="chunk")
    p.add_argument("--k", type=int, default=8, help="chunk word length in bits")
    p.add_argument("--symbol-width", type=int, default=7, help="bits per symbol (window)")
    p.add_argument("--window", type=int, default=3, help="symbols per window")
    p.add_argument("--stride", type=int, default=1, help="window step in symbols")
    p.add_argument("--encoding", choices=ENCODINGS, default="bits")


def _config(args) -> MapperConfig:
    try:
        return MapperConfig(args.mapper, args.k, args.symbol_width, args.window, args.stride)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="setdist", description="Combinatorial information set-distance")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("map", help="print the mapped set of one file")
    p.add_argument("file", type=Path)
    _add_mapper_args(p)

    p = sub.add_parser("dist", help="distance between two files")
    p.add_argument("file_a", type=Path)
    p.add_argument("file_b", type=Path)
    _add_mapper_args(p)

    p = sub.add_parser("matrix", help="pairwise distance matrix over a corpus")
    p.add_argument("inputs", nargs="+", type=Path, help="directory or files")
    _add_mapper_args(p)
    p.add_argument("--format", choices=FORMATS, default="tsv")
    p.add_argument("--skip-degenerate", action="store_true")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--universe", type=int, default=5, help="universe size for exhaustive suites")
    p.add_argument("--random-universe", type=int, default=12)
    p.add_argument("--lz-max-len", type=int, default=14)
    p.add_argument("--lz-trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--suite", action="append", choices=SUITES, dest="suites")
    p.add_argument("--json", action="store_true")
    return parser


def _load_one(path: Path, encoding: str):
    return load_documents([path], encoding)[0]


def cmd_map(args, out) -> int:
    cfg = _config(args)
    doc = _load_one(args.file, args.encoding)
    mapped = map_string(doc.payload, cfg)
    for element in mapped.sorted():
        print(element, file=out)
    print(f"cardinality: {mapped.cardinality}", file=out)
    if cfg.kind == "lz76":
        print(f"components: {len(lz76_components(doc.payload))}", file=out)
    return EXIT_OK


def cmd_dist(args, out) -> int:
    cfg = _config(args)
    a = _load_one(args.file_a, args.encoding)
    b = _load_one(args.file_b, args.encoding)
    print(f"{dist_strings(a.payload, b.payload, cfg):.6f}", file=out)
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    cfg = _config(args)
    docs = load_documents(args.inputs, args.encoding)
    try:
        m = matrix(docs, cfg, skip_degenerate=args.skip_degenerate)
    except DegenerateSetError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = emit(m, args.format)
    if args.output:
        args.output.write_bytes(data)
    else:
        out.write(data.decode("utf-8"))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.universe < 1 or args.random_universe < 2 or args.trials < 0 or args.workers < 1:
        raise UsageError("universe sizes, trials and workers must be positive")
    reports = run_all(trials=args.trials, size=args.universe, seed=args.seed,
                      random_size=args.random_universe, lz_max_len=args.lz_max_len,
                      lz_trials=args.lz_trials, workers=args.workers, suites=args.suites)
    if args.json:
        payload = {"seed": args.seed, "passed": all(r.passed for r in reports),
                   "reports": [r.to_dict() for r in reports]}
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(format_reports(reports, args.seed), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


COMMANDS = {"map": cmd_map, "dist": cmd_dist, "matrix": cmd_matrix, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"setdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSetError as exc:
        print(f"setdist: degenerate set: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (EncodingError, OSError, ValueError) as exc:
        print(f"setdist: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
