"""Linear-time sorting of words by their repeating strings.

For distinct primitive words the algorithm is: build a trie of the
inputs, compute each word's degree d_i (the longest power of the word
spelling a root path of the trie), materialize M_i = word_i**(d_i + 2),
and read off the lexicographic order of the M_i from a second trie.
Arbitrary inputs reduce to that case by replacing each word with its
primitive root.  Total work is O(L) for a fixed alphabet, and the size
bounds that make it linear (sum |N_i| <= 2L, sum |M_i| <= 4L) are
checked on every run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolationError, NotDistinctError, NotPrimitiveError
from .trie import Trie, build_trie
from .words import _root_many, check_word


@dataclass(frozen=True)
class SortOutcome:
    """Result of sorting by repeating strings.

    order: permutation of the original indices, non-decreasing in R.
    tie_groups: runs of indices whose words share one primitive root,
    in sorted order; within a group, by length then input index.
    distinct_roots: the primitive roots, one per tie group, sorted.
    """

    order: list[int]
    tie_groups: list[list[int]]
    distinct_roots: list[bytes]


def _sort_distinct_roots(words: list[bytes], trie: Trie) -> list[int]:
    # words must already be distinct and primitive; trie is their trie
    total = sum(len(w) for w in words)
    matched = trie._walk_cyclic_many(trie._buf, trie._starts, trie._ends)
    n_sum = 0
    powers = []
    for w, m in zip(words, matched):
        d = int(m) // len(w)
        n_sum += d * len(w)
        powers.append(w * (d + 2))
    if n_sum > 2 * total:
        raise InvariantViolationError(
            f"sum |N_i| = {n_sum} exceeds 2L = {2 * total}"
        )
    if n_sum + 2 * total > 4 * total:
        raise InvariantViolationError(
            f"sum |M_i| = {n_sum + 2 * total} exceeds 4L = {4 * total}"
        )
    order, prefix_flag = Trie(powers).lex_order()
    if prefix_flag:
        raise InvariantViolationError("some M_i is a proper prefix of another M_j")
    return order


def sort_primitive_distinct(words) -> list[int]:
    """Permutation sorting distinct primitive words so R is strictly increasing."""
    words = [check_word(w) for w in words]
    if not words:
        return []
    for w, r in zip(words, _root_many(words)):
        if r.exponent != 1:
            raise NotPrimitiveError(f"word {w!r} = {r.root!r}**{r.exponent} is not primitive")
    trie, dedup = build_trie(words)
    if len(set(dedup)) != len(words):
        raise NotDistinctError("input words are not pairwise distinct")
    return _sort_distinct_roots(words, trie)


def sort_repeating(words) -> SortOutcome:
    """Sort arbitrary non-empty words so their repeating strings are non-decreasing.

    Ties (words sharing a primitive root) are broken by length
    ascending, then by input index.
    """
    words = [check_word(w) for w in words]
    if not words:
        return SortOutcome([], [], [])
    roots = _root_many(words)
    index: dict[bytes, int] = {}
    distinct: list[bytes] = []
    members: list[list[int]] = []
    for i, r in enumerate(roots):
        rid = index.setdefault(r.root, len(distinct))
        if rid == len(distinct):
            distinct.append(r.root)
            members.append([])
        members[rid].append(i)
    root_order = _sort_distinct_roots(distinct, Trie(distinct))
    tie_groups = []
    for rid in root_order:
        tie_groups.append(sorted(members[rid], key=lambda i: (len(words[i]), i)))
    return SortOutcome(
        order=[i for group in tie_groups for i in group],
        tie_groups=tie_groups,
        distinct_roots=[distinct[rid] for rid in root_order],
    )


def sort_by_inf_order(words) -> list[int]:
    """Permutation realizing the total order (roots by R, ties by length)."""
    return sort_repeating(words).order
