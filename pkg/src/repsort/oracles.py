"""Trusted slow references the fast paths are tested against.

These deliberately avoid the fast implementations: the root comes from
divisor enumeration, sorting from a comparison sort over materialized
repeating-string prefixes, rearrangement from exhaustive permutation
enumeration.  They ship in the library (not only the tests) so the CLI
can cross-check its own output via --verify.
"""

from __future__ import annotations

from functools import cmp_to_key
from itertools import permutations

from .errors import EmptyInputError, TooLargeError
from .order import Relation, cmp_repeat_oracle
from .rearrange import ConcatPlan, Objective
from .sorter import SortOutcome
from .words import RootDecomposition, check_word

MAX_BRUTE_WORDS = 8


def brute_root(a) -> RootDecomposition:
    """Primitive root by trying every divisor length in ascending order."""
    a = check_word(a)
    n = len(a)
    for p in range(1, n + 1):
        if n % p == 0 and a[:p] * (n // p) == a:
            return RootDecomposition(a[:p], n // p)
    raise AssertionError("unreachable: p = len(a) always reconstructs")


def naive_sort(words) -> SortOutcome:
    """Comparison sort baseline with the same tie-breaking as sort_repeating."""
    words = [check_word(w) for w in words]

    def compare(i: int, j: int) -> int:
        rel = cmp_repeat_oracle(words[i], words[j])
        if rel != Relation.EQUAL:
            return int(rel)
        if len(words[i]) != len(words[j]):
            return -1 if len(words[i]) < len(words[j]) else 1
        return i - j

    order = sorted(range(len(words)), key=cmp_to_key(compare))
    tie_groups: list[list[int]] = []
    for i in order:
        if tie_groups and cmp_repeat_oracle(words[tie_groups[-1][0]], words[i]) == Relation.EQUAL:
            tie_groups[-1].append(i)
        else:
            tie_groups.append([i])
    roots = [brute_root(words[group[0]]).root for group in tie_groups]
    return SortOutcome(order=order, tie_groups=tie_groups, distinct_roots=roots)


def brute_rearrange(words, objective: Objective) -> ConcatPlan:
    """Extremal concatenation by enumerating all permutations (n <= 8)."""
    words = [check_word(w) for w in words]
    if not words:
        raise EmptyInputError("need at least one word")
    if len(words) > MAX_BRUTE_WORDS:
        raise TooLargeError(f"brute force capped at {MAX_BRUTE_WORDS} words, got {len(words)}")
    want_max = objective is Objective.MAX
    best: bytes | None = None
    best_perm: tuple[int, ...] = ()
    hits = 0
    for perm in permutations(range(len(words))):
        s = b"".join(words[i] for i in perm)
        if best is None or (s > best if want_max else s < best):
            best = s
            best_perm = perm
            hits = 1
        elif s == best:
            hits += 1
    assert best is not None
    return ConcatPlan(
        permutation=list(best_perm),
        result=best,
        objective=objective,
        unique=hits == 1,
    )
