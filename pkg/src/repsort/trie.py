"""Byte trie over a word list.

Nodes live in flat int32 arrays: ``head[node]`` points at the first edge
of a sibling list kept sorted by symbol, and each edge carries (symbol,
child, next sibling).  Terminal word indices hang off nodes as a second
linked list in input order.  The layout keeps construction at O(total
length) for a fixed alphabet and stays compact enough for inputs in the
tens of millions of symbols.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .words import _concat_arrays, check_word


class Trie:
    """Immutable prefix tree built once from a list of words."""

    def __init__(self, words):
        words = [check_word(w) for w in words]
        if not words:
            raise ValueError("trie needs at least one word")
        self._words = words
        buf, starts, ends = _concat_arrays(words)
        cap_nodes = buf.shape[0] + 1
        cap_edges = max(buf.shape[0], 1)
        head = np.empty(cap_nodes, dtype=np.int32)
        esym = np.empty(cap_edges, dtype=np.uint8)
        echild = np.empty(cap_edges, dtype=np.int32)
        enext = np.empty(cap_edges, dtype=np.int32)
        term_node = np.empty(len(words), dtype=np.int32)
        n_nodes, n_edges = _kernels.active().trie_build(
            buf, starts, ends, head, esym, echild, enext, term_node
        )
        self._buf = buf
        self._starts = starts
        self._ends = ends
        self._head = head
        self._esym = esym
        self._echild = echild
        self._enext = enext
        self._term_node = term_node
        self.node_count = int(n_nodes)
        self.edge_count = int(n_edges)
        self._max_len = max(len(w) for w in words)
        # terminal lists per node, in input order (built by pushing in reverse)
        term_head = np.full(self.node_count, -1, dtype=np.int32)
        term_next = np.empty(len(words), dtype=np.int32)
        for w in range(len(words) - 1, -1, -1):
            node = term_node[w]
            term_next[w] = term_head[node]
            term_head[node] = w
        self._term_head = term_head
        self._term_next = term_next

    def __len__(self) -> int:
        return len(self._words)

    @property
    def terminal_count(self) -> int:
        """Number of distinct inserted words."""
        return int(np.unique(self._term_node).shape[0])

    def terminals(self, word_index: int) -> list[int]:
        """All input indices whose word ends at the same node as word_index."""
        out = []
        t = int(self._term_head[self._term_node[word_index]])
        while t != -1:
            out.append(t)
            t = int(self._term_next[t])
        return out

    def walk_cyclic(self, a: bytes) -> int:
        """Symbols matched walking from the root along a, a, a, ..."""
        a = check_word(a)
        arr = np.frombuffer(a, dtype=np.uint8)
        return int(
            _kernels.active().trie_walk(
                arr, 0, arr.shape[0], self._head, self._esym, self._echild, self._enext
            )
        )

    def _walk_cyclic_many(self, buf, starts, ends) -> np.ndarray:
        out = np.empty(starts.shape[0], dtype=np.int64)
        _kernels.active().trie_walk_many(
            buf, starts, ends, self._head, self._esym, self._echild, self._enext, out
        )
        return out

    def lex_order(self) -> tuple[list[int], bool]:
        """Word indices in lexicographic word order, plus a flag telling
        whether some word is a proper prefix of another.

        Equal words come out in input order; a word that is a prefix of
        another comes out before it.
        """
        out = np.empty(len(self._words), dtype=np.int32)
        stack = np.empty(self._max_len + 2, dtype=np.int32)
        count, prefix_flag = _kernels.active().trie_dfs(
            self._head, self._echild, self._enext, self._term_head, self._term_next, stack, out
        )
        assert int(count) == len(self._words)
        return [int(i) for i in out], bool(prefix_flag)


def build_trie(words) -> tuple[Trie, list[int]]:
    """Build a trie and a dedup map from input index to distinct-word id.

    Distinct-word ids are assigned in order of first appearance.
    """
    trie = Trie(words)
    ids: dict[int, int] = {}
    dedup = []
    for node in trie._term_node:
        dedup.append(ids.setdefault(int(node), len(ids)))
    return trie, dedup


def deg_set(trie: Trie, a) -> int:
    """Largest d such that a**d spells a root path of the trie."""
    a = check_word(a)
    return trie.walk_cyclic(a) // len(a)


def lex_rank_words(words) -> list[int]:
    """Indices of ``words`` in lexicographic order (stable for equal words)."""
    order, _ = Trie(words).lex_order()
    return order
