"""Batch command-line frontend.

Words arrive one per line (or NUL-delimited with --null) from a file or
stdin, as raw bytes.  Exit codes: 0 success, 1 verification mismatch,
2 usage or input error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as bench_mod
from .errors import BadParameterError, EmptyWordError, RepsortError
from .oracles import MAX_BRUTE_WORDS, brute_rearrange, naive_sort
from .rearrange import Objective, largest_concat, smallest_concat
from .order import Relation, cmp_repeat
from .sorter import sort_by_inf_order, sort_repeating
from .words import root

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _InputError(Exception):
    """Bad document contents (maps to exit code 2)."""


class _VerifyError(Exception):
    """Cross-check against an oracle failed (maps to exit code 1)."""


def _read_words(path: str, null_delimited: bool) -> list[bytes]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    sep = b"\0" if null_delimited else b"\n"
    parts = data.split(sep)
    if parts and parts[-1] == b"":
        parts.pop()  # trailing delimiter does not create an extra word
    for lineno, part in enumerate(parts, start=1):
        if part == b"":
            raise _InputError(f"line {lineno}: blank line (empty words are invalid)")
    return parts


def _out(data: bytes) -> None:
    sys.stdout.buffer.write(data)


def _cmd_root(args) -> int:
    for w in _read_words(args.input, args.null):
        r = root(w)
        flag = b"true" if r.exponent == 1 else b"false"
        _out(w + b"\t" + r.root + b"\t" + str(r.exponent).encode() + b"\t" + flag + b"\n")
    return EXIT_OK


def _cmd_compare(args) -> int:
    a = os.fsencode(args.a)
    b = os.fsencode(args.b)
    rel = cmp_repeat(a, b)
    symbol = {Relation.LESS: b"<", Relation.EQUAL: b"=", Relation.GREATER: b">"}[rel]
    _out(symbol + b"\t" + a + b + b"\t" + b + a + b"\n")
    return EXIT_OK


def _cmd_sort(args) -> int:
    words = _read_words(args.input, args.null)
    if args.groups and args.mode != "repeat":
        raise _InputError("--groups is only available with --mode=repeat")
    if args.mode == "inf":
        order = sort_by_inf_order(words)
        for i in order:
            _out(words[i] + b"\n")
        return EXIT_OK
    outcome = sort_repeating(words)
    if args.verify and naive_sort(words) != outcome:
        raise _VerifyError("sort_repeating disagrees with naive_sort")
    if args.groups:
        for g, group in enumerate(outcome.tie_groups):
            if g:
                _out(b"\n")
            for i in group:
                _out(words[i] + b"\n")
    else:
        for i in outcome.order:
            _out(words[i] + b"\n")
    return EXIT_OK


def _cmd_rearrange(args) -> int:
    words = _read_words(args.input, args.null)
    if not words:
        raise _InputError("need at least one word")
    objective = Objective(args.objective)
    plan = smallest_concat(words) if objective is Objective.MIN else largest_concat(words)
    if args.verify:
        if len(words) > MAX_BRUTE_WORDS:
            raise _InputError(f"--verify needs at most {MAX_BRUTE_WORDS} words, got {len(words)}")
        expected = brute_rearrange(words, objective)
        if expected.result != plan.result or expected.unique != plan.unique:
            raise _VerifyError("rearrangement disagrees with exhaustive enumeration")
    _out(plan.result + b"\n")
    _out(" ".join(str(i) for i in plan.permutation).encode() + b"\n")
    return EXIT_OK


def _parse_sizes(text: str) -> list[tuple[int, int]]:
    sizes = []
    try:
        for item in text.split(","):
            n, m = item.split(":")
            sizes.append((int(n), int(m)))
    except ValueError as exc:
        raise _InputError(f"bad --sizes value {text!r}: expected n:m,n:m,...") from exc
    return sizes


def _cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    if args.backends:
        print(f"{'n':>8} {'m':>8} {'L':>12} {'jit_ms':>10} {'pure_ms':>10}")
        for n, m, total, t_jit, t_pure in bench_mod.compare_backends(sizes, reps=args.reps):
            print(f"{n:>8} {m:>8} {total:>12} {t_jit / 1e6:10.2f} {t_pure / 1e6:10.2f}")
        return EXIT_OK
    report = bench_mod.run_scaling(sizes, reps=args.reps)
    print(report.table())
    if args.record:
        with open(args.record, "w") as fh:
            for line in report.record_lines():
                fh.write(line + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repsort",
        description="Sort words by their repeating strings; build extremal concatenations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="word list file, or - for stdin")
        p.add_argument("--null", action="store_true", help="NUL-delimited words instead of lines")

    p = sub.add_parser("root", help="primitive root and exponent of each word")
    add_input(p)
    p.set_defaults(func=_cmd_root)

    p = sub.add_parser("compare", help="compare the repeating strings of two words")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sort", help="sort words by repeating string")
    add_input(p)
    p.add_argument("--mode", choices=["repeat", "inf"], default="repeat")
    p.add_argument("--groups", action="store_true", help="blank line between tie groups")
    p.add_argument("--verify", action="store_true", help="cross-check against the oracle sort")
    p.set_defaults(func=_cmd_sort)

    p = sub.add_parser("rearrange", help="smallest or largest concatenation")
    add_input(p)
    p.add_argument("--objective", choices=["min", "max"], default="min")
    p.add_argument("--verify", action="store_true", help="cross-check against brute force (n <= 8)")
    p.set_defaults(func=_cmd_rearrange)

    p = sub.add_parser("bench", help="time the linear sorter against the naive baseline")
    p.add_argument("--sizes", default="256:2000,512:2000,1024:2000", help='cases as "n:m,n:m,..."')
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--record", help="write one CSV line per case: n,m,L,t_linear_ns,t_naive_ns")
    p.add_argument("--backends", action="store_true", help="compare JIT vs pure-Python kernels")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code = args.func(args)
        sys.stdout.buffer.flush()
        return code
    except _VerifyError as exc:
        print(f"repsort: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (_InputError, EmptyWordError, BadParameterError) as exc:
        print(f"repsort: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"repsort: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RepsortError as exc:
        print(f"repsort: {exc}", file=sys.stderr)
        return EXIT_USAGE
