"""Hot inner loops over uint8/int32 numpy arrays.

By default every kernel is compiled with numba (cached on disk after the
first run).  Setting ``REPSORT_PURE=1`` in the environment selects a
fallback backend that runs the exact same functions as interpreted
Python over the same numpy arrays.  The two backends are observably
identical; the test suite exercises both.

Each kernel is self-contained (no kernel calls another) so that numba's
on-disk cache works for all of them.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from functools import lru_cache
from types import SimpleNamespace

import numpy as np

ENV_FLAG = "REPSORT_PURE"

_KERNEL_NAMES = (
    "border_length",
    "border_many",
    "cyclic_match",
    "trie_build",
    "trie_walk",
    "trie_walk_many",
    "trie_dfs",
)


def _border_length(a):
    # longest j < len(a) with a[:j] == a[-j:], via the KMP failure function
    n = a.shape[0]
    fail = np.zeros(n, dtype=np.int64)
    k = 0
    for i in range(1, n):
        c = a[i]
        while k > 0 and a[k] != c:
            k = fail[k - 1]
        if a[k] == c:
            k += 1
        fail[i] = k
    return fail[n - 1]


def _border_many(buf, starts, ends, out):
    # border length of each word buf[starts[w]:ends[w]], written to out[w]
    maxlen = 0
    for w in range(starts.shape[0]):
        ln = ends[w] - starts[w]
        if ln > maxlen:
            maxlen = ln
    fail = np.zeros(maxlen, dtype=np.int64)
    for w in range(starts.shape[0]):
        s = starts[w]
        n = ends[w] - s
        k = 0
        fail[0] = 0
        for i in range(1, n):
            c = buf[s + i]
            while k > 0 and buf[s + k] != c:
                k = fail[k - 1]
            if buf[s + k] == c:
                k += 1
            fail[i] = k
        out[w] = fail[n - 1]


def _cyclic_match(s, a):
    # length of the longest prefix of a that matches s repeated cyclically
    m = s.shape[0]
    n = a.shape[0]
    i = 0
    j = 0
    while i < n and a[i] == s[j]:
        i += 1
        j += 1
        if j == m:
            j = 0
    return i


def _trie_build(buf, starts, ends, head, esym, echild, enext, term_node):
    # Inserts every word into the trie arrays.  Sibling edge lists are
    # kept sorted by symbol so a later DFS visits children in ascending
    # symbol order.  Returns (node count, edge count).
    n_nodes = 1
    n_edges = 0
    head[0] = -1
    for w in range(starts.shape[0]):
        node = 0
        i = starts[w]
        end = ends[w]
        while i < end:
            c = buf[i]
            prev = -1
            e = head[node]
            while e != -1 and esym[e] < c:
                prev = e
                e = enext[e]
            if e != -1 and esym[e] == c:
                node = echild[e]
                i += 1
                continue
            # no child for c: every remaining symbol opens a fresh chain
            esym[n_edges] = c
            echild[n_edges] = n_nodes
            enext[n_edges] = e
            if prev == -1:
                head[node] = n_edges
            else:
                enext[prev] = n_edges
            node = n_nodes
            n_nodes += 1
            n_edges += 1
            i += 1
            while i < end:
                head[node] = n_edges  # single fresh edge, no sibling scan
                esym[n_edges] = buf[i]
                echild[n_edges] = n_nodes
                enext[n_edges] = -1
                node = n_nodes
                n_nodes += 1
                n_edges += 1
                i += 1
            head[node] = -1
        term_node[w] = node
    return n_nodes, n_edges


def _trie_walk(buf, start, end, head, esym, echild, enext):
    # walks from the root consuming buf[start:end] cyclically until no
    # matching child exists; returns the number of symbols matched
    node = 0
    matched = 0
    i = start
    while True:
        c = buf[i]
        e = head[node]
        while e != -1 and esym[e] < c:
            e = enext[e]
        if e == -1 or esym[e] != c:
            return matched
        node = echild[e]
        matched += 1
        i += 1
        if i == end:
            i = start


def _trie_walk_many(buf, starts, ends, head, esym, echild, enext, out):
    for w in range(starts.shape[0]):
        start = starts[w]
        end = ends[w]
        node = 0
        matched = 0
        i = start
        while True:
            c = buf[i]
            e = head[node]
            while e != -1 and esym[e] < c:
                e = enext[e]
            if e == -1 or esym[e] != c:
                break
            node = echild[e]
            matched += 1
            i += 1
            if i == end:
                i = start
        out[w] = matched


def _trie_dfs(head, echild, enext, term_head, term_next, stack, out):
    # Preorder traversal, children in ascending symbol order, emitting a
    # node's terminal word indices before descending.  Also reports
    # whether any terminal node has descendants (i.e. one inserted word
    # is a proper prefix of another).  Returns (emitted, prefix_flag).
    n_out = 0
    prefix_flag = False
    t = term_head[0]
    while t != -1:
        out[n_out] = t
        n_out += 1
        t = term_next[t]
    if term_head[0] != -1 and head[0] != -1:
        prefix_flag = True
    top = 0
    stack[top] = head[0]
    top += 1
    while top > 0:
        e = stack[top - 1]
        if e == -1:
            top -= 1
            continue
        nxt = enext[e]
        node = echild[e]
        # descend unary chains without touching the stack
        while nxt == -1 and term_head[node] == -1:
            e = head[node]
            if e == -1:
                break
            nxt = enext[e]
            node = echild[e]
        stack[top - 1] = nxt
        t = term_head[node]
        while t != -1:
            out[n_out] = t
            n_out += 1
            t = term_next[t]
        if term_head[node] != -1 and head[node] != -1:
            prefix_flag = True
        stack[top] = head[node]
        top += 1
    return n_out, prefix_flag


@lru_cache(maxsize=None)
def kernels_for(pure: bool) -> SimpleNamespace:
    """Return the kernel namespace for the requested backend."""
    impls = {name: globals()["_" + name] for name in _KERNEL_NAMES}
    if not pure:
        from numba import njit

        jit = njit(cache=True, nogil=True)
        impls = {name: jit(fn) for name, fn in impls.items()}
    return SimpleNamespace(pure=pure, **impls)


def _env_pure() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


_active = kernels_for(_env_pure())


def active() -> SimpleNamespace:
    """The currently selected kernel backend."""
    return _active


@contextmanager
def use_backend(pure: bool):
    """Temporarily switch backends (used by tests and the benchmark)."""
    global _active
    previous = _active
    _active = kernels_for(pure)
    try:
        yield _active
    finally:
        _active = previous
