"""Suffix array, document array and pattern range search.

Suffixes are compared as plain byte strings where running off the end of the
text sorts first, so no two suffixes ever compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import TERMINATOR, DocumentCollection, docs_of
from .errors import EmptyPattern, TerminatorInPattern


@dataclass(frozen=True)
class SuffixStructures:
    sa: np.ndarray  # 1-based text positions
    da: np.ndarray  # 1-based document ids

    @property
    def n(self) -> int:
        return len(self.sa)


def suffix_array(text: np.ndarray) -> np.ndarray:
    """0-based suffix array by prefix doubling; O(n log^2 n) worst case."""
    n = len(text)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    rank = text.astype(np.int64)
    base = max(n, 256) + 1
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:] + 1
        key = rank * base + second
        sa = np.argsort(key, kind="stable")
        sorted_key = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(sorted_key[1:] != sorted_key[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n - 1 or k >= n:
            return sa.astype(np.int64)
        k *= 2


def build_suffix_array(coll: DocumentCollection) -> SuffixStructures:
    sa = suffix_array(coll.text_array()) + 1
    return SuffixStructures(sa=sa, da=docs_of(coll, sa))


def check_pattern(pattern: bytes) -> None:
    if len(pattern) == 0:
        raise EmptyPattern("pattern must be nonempty")
    if TERMINATOR in pattern:
        raise TerminatorInPattern("pattern contains the terminator byte 0x00")


def pattern_range(s: SuffixStructures, coll: DocumentCollection,
                  pattern: bytes) -> tuple[int, int] | None:
    """Return the 1-based inclusive SA interval ``(sp, ep)`` of suffixes prefixed by ``pattern``."""
    check_pattern(pattern)
    p = coll.encode(pattern)
    if p is None:
        return None
    text, sa, m = coll.text, s.sa, len(p)

    lo, hi = 0, len(sa)
    while lo < hi:
        mid = (lo + hi) // 2
        start = int(sa[mid]) - 1
        if text[start:start + m] < p:
            lo = mid + 1
        else:
            hi = mid
    sp = lo
    hi = len(sa)
    while lo < hi:
        mid = (lo + hi) // 2
        start = int(sa[mid]) - 1
        if text[start:start + m] <= p:
            lo = mid + 1
        else:
            hi = mid
    if lo == sp:
        return None
    return sp + 1, lo
