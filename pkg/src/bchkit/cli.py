"""``bchkit`` command line: compute, verify, bench.

Exit status: 0 on success, 1 when a verification or method comparison
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time

from . import bch, serialize
from .algebra import BCH_ALPHABET
from .series import bch_direct

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchkit",
        description="Exact BCH components of log(e^A e^B) and machine-checked identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print the components C_1..C_n")
    p.add_argument("-n", "--degree", type=_positive, default=8)
    p.add_argument("--method", choices=("direct", "recurrence", "both"), default="recurrence")
    p.add_argument("--basis", choices=serialize.BASES, default="words")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write here instead of standard output")

    p = sub.add_parser("verify", help="run the randomized identity checks and certify C_1..C_n")
    p.add_argument("--max-degree", type=_positive, default=6)
    p.add_argument("--trials", type=_nonnegative, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--output", help="write the report here instead of standard output")

    p = sub.add_parser("bench", help="per-degree timings and term counts as CSV")
    p.add_argument("--max-degree", type=_positive, default=8)
    p.add_argument("--output", help="write here instead of standard output")
    return parser


def _emit(text: str, path, stdout) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def cmd_compute(args, stdout, stderr) -> int:
    n = args.degree
    if args.method == "direct":
        result = bch.bch_direct_result(n)
    elif args.method == "recurrence":
        result = bch.bch_recurrence(n)
    else:
        result = bch.bch_recurrence(n)
        direct = bch_direct(n)
        for k, (x, y) in enumerate(zip(result.components, direct), start=1):
            if x != y:
                stderr.write(f"bchkit: methods disagree at degree {k}\n")
                stderr.write(f"  recurrence: {x}\n  direct:     {y}\n")
                return EXIT_FAIL
        result = bch.BchResult(result.components, result.rightnormed, "both")
    records = serialize.records_for(result, args.basis)
    _emit(serialize.render(args.format, BCH_ALPHABET, result.method, records), args.output, stdout)
    return EXIT_OK


def cmd_verify(args, stdout, stderr) -> int:
    from .verify import run_verify

    report = run_verify(args.max_degree, args.trials, args.seed)
    _emit(report.text(), args.output, stdout)
    return EXIT_OK if report.ok else EXIT_FAIL


BENCH_HEADER = (
    "degree",
    "direct_seconds",
    "direct_terms",
    "recurrence_seconds",
    "recurrence_terms",
    "cumulative_terms",
)


def bench_rows(max_degree: int):
    """Rows of :data:`BENCH_HEADER`; seconds are cumulative time to reach C_1..C_n."""
    rows = []
    rec_iter = bch.iter_recurrence(max_degree)
    rec_elapsed = 0.0
    total = 0
    for n in range(1, max_degree + 1):
        t0 = time.perf_counter()
        direct = bch_direct(n)[-1]
        t_direct = time.perf_counter() - t0

        t0 = time.perf_counter()
        rec = next(rec_iter)
        rec_elapsed += time.perf_counter() - t0

        total += len(rec)
        rows.append((n, t_direct, len(direct), rec_elapsed, len(rec), total))
    return rows


def cmd_bench(args, stdout, stderr) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for n, td, nd, tr, nr, tot in bench_rows(args.max_degree):
        writer.writerow((n, f"{td:.6f}", nd, f"{tr:.6f}", nr, tot))
    _emit(buf.getvalue(), args.output, stdout)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, stdout, stderr)
    except OSError as exc:
        stderr.write(f"bchkit: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
