"""Word arithmetic: powers, borders, primitive roots, prefix-power degrees.

Words are non-empty ``bytes``; symbols compare by numeric byte value and
that comparison induces the lexicographic order used everywhere in this
package.  The empty word is rejected by every operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptyWordError


def check_word(a) -> bytes:
    """Validate a word argument and normalize it to ``bytes``."""
    if isinstance(a, bytearray):
        a = bytes(a)
    if not isinstance(a, bytes):
        raise TypeError(f"word must be bytes, got {type(a).__name__}")
    if not a:
        raise EmptyWordError("the empty word is not a valid input")
    return a


def _as_array(a: bytes) -> np.ndarray:
    return np.frombuffer(a, dtype=np.uint8)


@dataclass(frozen=True)
class RootDecomposition:
    """A word written as root**exponent with a primitive root."""

    root: bytes
    exponent: int

    def rebuild(self) -> bytes:
        return self.root * self.exponent


def power(a, n: int) -> bytes:
    """The word ``a`` concatenated ``n`` times; n == 0 gives ``b""``."""
    a = check_word(a)
    if n < 0:
        raise ValueError("power exponent must be non-negative")
    return a * n


def border_length(a) -> int:
    """Largest j < len(a) such that a[:j] == a[-j:] (0 if none)."""
    a = check_word(a)
    return int(_kernels.active().border_length(_as_array(a)))


def root(a) -> RootDecomposition:
    """The unique primitive word whose power reconstructs ``a``."""
    a = check_word(a)
    j = int(_kernels.active().border_length(_as_array(a)))
    k = len(a) - j
    if len(a) % k == 0:
        return RootDecomposition(a[:k], len(a) // k)
    return RootDecomposition(a, 1)


def is_primitive(a) -> bool:
    """True iff ``a`` is not a proper power of a shorter word."""
    return root(a).exponent == 1


def deg_word(s, a) -> int:
    """Largest d such that s**d is a prefix of a."""
    s = check_word(s)
    a = check_word(a)
    matched = int(_kernels.active().cyclic_match(_as_array(s), _as_array(a)))
    return matched // len(s)


def _concat_arrays(words: list[bytes]):
    """Concatenate words into one uint8 buffer plus start/end offsets."""
    buf = _as_array(b"".join(words))
    lengths = np.fromiter((len(w) for w in words), dtype=np.int64, count=len(words))
    ends = np.cumsum(lengths)
    starts = ends - lengths
    return buf, starts, ends


def _root_many(words: list[bytes]) -> list[RootDecomposition]:
    """Batched :func:`root` (one kernel call for the whole list)."""
    words = [check_word(w) for w in words]
    if not words:
        return []
    buf, starts, ends = _concat_arrays(words)
    borders = np.empty(len(words), dtype=np.int64)
    _kernels.active().border_many(buf, starts, ends, borders)
    out = []
    for w, j in zip(words, borders):
        k = len(w) - int(j)
        if len(w) % k == 0:
            out.append(RootDecomposition(w[:k], len(w) // k))
        else:
            out.append(RootDecomposition(w, 1))
    return out
