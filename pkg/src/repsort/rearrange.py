"""Lexicographically smallest and largest concatenations of n words.

Concatenating in non-decreasing repeating-string order is minimal and in
non-increasing order maximal; the order of words inside one tie group
(equal roots) never changes the concatenated bytes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EmptyInputError
from .sorter import SortOutcome, sort_repeating


class Objective(enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class ConcatPlan:
    """A permutation of the inputs and the resulting concatenation.

    ``unique`` is true iff all input roots are pairwise distinct, which
    is exactly when the optimal permutation is unique.
    """

    permutation: list[int]
    result: bytes
    objective: Objective
    unique: bool


def _plan(words: list[bytes], outcome: SortOutcome, objective: Objective) -> ConcatPlan:
    if objective is Objective.MIN:
        perm = outcome.order
    else:
        perm = [i for group in reversed(outcome.tie_groups) for i in group]
    return ConcatPlan(
        permutation=perm,
        result=b"".join(words[i] for i in perm),
        objective=objective,
        unique=len(outcome.distinct_roots) == len(words),
    )


def smallest_concat(words) -> ConcatPlan:
    """The lexicographically smallest concatenation of the given words."""
    words = list(words)
    if not words:
        raise EmptyInputError("need at least one word")
    return _plan(words, sort_repeating(words), Objective.MIN)


def largest_concat(words) -> ConcatPlan:
    """The lexicographically largest concatenation of the given words."""
    words = list(words)
    if not words:
        raise EmptyInputError("need at least one word")
    return _plan(words, sort_repeating(words), Objective.MAX)
