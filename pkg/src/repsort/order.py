"""Comparators between words.

The central fact: the order between the infinite repeating strings
R(a) = aaa... and R(b) is the order between the finite concatenations
a+b and b+a.  ``cmp_repeat`` uses that; ``cmp_repeat_oracle`` instead
materializes prefixes of R(a) and R(b) of length len(a)+len(b), which is
deep enough to decide the comparison.  ``cmp_inf`` extends the repeating
order to a total order on finite words by breaking root ties on length.
"""

from __future__ import annotations

import enum

from .words import check_word, root


class Relation(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _relation(x: bytes, y: bytes) -> Relation:
    if x == y:
        return Relation.EQUAL
    return Relation.LESS if x < y else Relation.GREATER


def repeat_prefix(a, n: int) -> bytes:
    """The first ``n`` symbols of the infinite repetition of ``a``."""
    a = check_word(a)
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    reps = -(-n // len(a))
    return (a * reps)[:n]


def cmp_repeat(a, b) -> Relation:
    """Compare R(a) and R(b) via a+b versus b+a."""
    a = check_word(a)
    b = check_word(b)
    return _relation(a + b, b + a)


def _cmp_repeat_virtual(a: bytes, b: bytes) -> Relation:
    # allocation-free variant of cmp_repeat: indexes the two virtual
    # concatenations modulo the word lengths; same observable behavior
    la, lb = len(a), len(b)
    n = la + lb
    for i in range(n):
        x = a[i] if i < la else b[i - la]
        y = b[i] if i < lb else a[i - lb]
        if x != y:
            return Relation.LESS if x < y else Relation.GREATER
    return Relation.EQUAL


def cmp_repeat_oracle(a, b) -> Relation:
    """Compare R(a) and R(b) by materializing their length-(|a|+|b|) prefixes."""
    a = check_word(a)
    b = check_word(b)
    n = len(a) + len(b)
    return _relation(repeat_prefix(a, n), repeat_prefix(b, n))


def cmp_inf(a, b) -> Relation:
    """Total order on finite non-empty words: roots by R, ties by length."""
    a = check_word(a)
    b = check_word(b)
    ra = root(a)
    rb = root(b)
    if ra.root == rb.root:
        # equal roots and equal lengths force identical words
        if len(a) == len(b):
            return Relation.EQUAL
        return Relation.LESS if len(a) < len(b) else Relation.GREATER
    return cmp_repeat(ra.root, rb.root)


def truly_less(a, b) -> bool:
    """True iff some position witnesses a < b (a < b and a is not a prefix of b)."""
    a = check_word(a)
    b = check_word(b)
    return a < b and not b.startswith(a)


def is_lyndon(a) -> bool:
    """True iff ``a`` is strictly smaller than all of its proper rotations."""
    a = check_word(a)
    for i in range(1, len(a)):
        if a[i:] + a[:i] <= a:
            return False
    return True
