"""Benchmark harness: linear sorter vs the comparison-sort baseline.

The adversarial family (a long shared single-symbol prefix plus a short
distinct tail) is the worst case for comparison sorting: every pairwise
comparison must scan past the shared prefix, so the baseline costs
Omega(L log n) while the trie algorithm stays O(L).
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass, field

from . import _kernels
from .errors import BadParameterError
from .oracles import naive_sort
from .sorter import sort_repeating

_PREFIX_SYMBOL = ord("a")
# 255 usable tail symbols: every byte except the prefix symbol, ordered so
# the first tails are \x01, \x02, ... (\x00 is parked at the end)
_TAIL_DIGITS = (
    bytes(range(1, _PREFIX_SYMBOL))
    + bytes(range(_PREFIX_SYMBOL + 1, 256))
    + b"\x00"
)


@dataclass(frozen=True)
class BenchCase:
    generator: str
    n: int
    m: int
    words: list[bytes]
    total_length: int


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    total_length: int
    t_linear_ns: int
    t_naive_ns: int

    def record_line(self) -> str:
        return f"{self.n},{self.m},{self.total_length},{self.t_linear_ns},{self.t_naive_ns}"


@dataclass
class BenchReport:
    reps: int
    rows: list[BenchRow] = field(default_factory=list)

    def table(self) -> str:
        lines = [
            f"{'n':>8} {'m':>8} {'L':>12} {'linear_ms':>12} {'naive_ms':>12}"
            f" {'lin_ratio':>10} {'naive/lin':>10}"
        ]
        prev = None
        for row in self.rows:
            ratio = f"{row.t_linear_ns / prev.t_linear_ns:10.2f}" if prev else f"{'-':>10}"
            lines.append(
                f"{row.n:>8} {row.m:>8} {row.total_length:>12}"
                f" {row.t_linear_ns / 1e6:12.2f} {row.t_naive_ns / 1e6:12.2f}"
                f" {ratio} {row.t_naive_ns / row.t_linear_ns:10.2f}"
            )
            prev = row
        return "\n".join(lines)

    def record_lines(self) -> list[str]:
        return [row.record_line() for row in self.rows]


def gen_adversarial(n: int, m: int) -> BenchCase:
    """n primitive, distinct words: an m-symbol shared prefix plus a tail.

    Tails are the shortest base-255 encoding over the non-prefix symbols,
    so all words have equal length m + ceil(log_255 n).
    """
    if n <= 0 or m <= 0:
        raise BadParameterError("n and m must be positive")
    width = 1
    cap = len(_TAIL_DIGITS)
    while cap < n:
        width += 1
        cap *= len(_TAIL_DIGITS)
    prefix = bytes([_PREFIX_SYMBOL]) * m
    words = []
    for i in range(n):
        tail = bytearray(width)
        x = i
        for pos in range(width - 1, -1, -1):
            tail[pos] = _TAIL_DIGITS[x % len(_TAIL_DIGITS)]
            x //= len(_TAIL_DIGITS)
        words.append(prefix + bytes(tail))
    return BenchCase("adversarial", n, m, words, n * (m + width))


def _median_time_ns(fn, words, reps: int) -> int:
    times = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        fn(words)
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times))


def run_scaling(sizes, reps: int = 3, include_naive: bool = True) -> BenchReport:
    """Time both sorters on gen_adversarial cases; median of ``reps`` runs.

    A warm-up run of each sorter precedes timing (this also absorbs JIT
    compilation).  Correctness piggybacks on the benchmark: both sorters
    must produce the same outcome on every case.
    """
    sizes = list(sizes)
    if not sizes:
        raise BadParameterError("need at least one (n, m) size")
    report = BenchReport(reps=reps)
    warmed = False
    for n, m in sizes:
        case = gen_adversarial(n, m)
        # the generator emits words in sorted order; shuffle deterministically
        # so the comparison sort cannot ride a presorted run
        words = list(case.words)
        random.Random(0xBE7C).shuffle(words)
        case = BenchCase(case.generator, n, m, words, case.total_length)
        if not warmed:
            small = gen_adversarial(min(n, 8), min(m, 64))
            sort_repeating(small.words)
            naive_sort(small.words)
            warmed = True
        t_linear = _median_time_ns(sort_repeating, case.words, reps)
        t_naive = 0
        if include_naive:
            t_naive = _median_time_ns(naive_sort, case.words, reps)
            if naive_sort(case.words) != sort_repeating(case.words):
                raise AssertionError(f"sorter mismatch on n={n} m={m}")
        report.rows.append(BenchRow(n, m, case.total_length, t_linear, t_naive))
    return report


def compare_backends(sizes, reps: int = 3) -> list[tuple[int, int, int, int, int]]:
    """Time the linear sorter under the JIT and pure-Python kernel backends.

    Returns (n, m, L, t_jit_ns, t_pure_ns) per size.  Keep sizes modest:
    the pure backend exists for portability and debugging, not speed.
    """
    out = []
    for n, m in sizes:
        case = gen_adversarial(n, m)
        with _kernels.use_backend(pure=False):
            sort_repeating(case.words)  # warm-up / compile
            t_jit = _median_time_ns(sort_repeating, case.words, reps)
        with _kernels.use_backend(pure=True):
            t_pure = _median_time_ns(sort_repeating, case.words, reps)
        out.append((n, m, case.total_length, t_jit, t_pure))
    return out
