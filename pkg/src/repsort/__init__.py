"""repsort: sort words by their infinite repeating strings in linear time,
and build the lexicographically smallest/largest concatenation.
"""

from .errors import (
    BadParameterError,
    EmptyInputError,
    EmptyWordError,
    InvariantViolationError,
    NotDistinctError,
    NotPrimitiveError,
    RepsortError,
    TooLargeError,
)
from .order import (
    Relation,
    cmp_inf,
    cmp_repeat,
    cmp_repeat_oracle,
    is_lyndon,
    repeat_prefix,
    truly_less,
)
from .rearrange import ConcatPlan, Objective, largest_concat, smallest_concat
from .sorter import SortOutcome, sort_by_inf_order, sort_primitive_distinct, sort_repeating
from .trie import Trie, build_trie, deg_set, lex_rank_words
from .words import RootDecomposition, border_length, deg_word, is_primitive, power, root

__all__ = [
    "BadParameterError",
    "ConcatPlan",
    "EmptyInputError",
    "EmptyWordError",
    "InvariantViolationError",
    "NotDistinctError",
    "NotPrimitiveError",
    "Objective",
    "Relation",
    "RepsortError",
    "RootDecomposition",
    "SortOutcome",
    "TooLargeError",
    "Trie",
    "border_length",
    "build_trie",
    "cmp_inf",
    "cmp_repeat",
    "cmp_repeat_oracle",
    "deg_set",
    "deg_word",
    "is_lyndon",
    "is_primitive",
    "largest_concat",
    "lex_rank_words",
    "power",
    "repeat_prefix",
    "root",
    "smallest_concat",
    "sort_by_inf_order",
    "sort_primitive_distinct",
    "sort_repeating",
    "truly_less",
]
