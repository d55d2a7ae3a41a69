"""Document listing over the grammar-compressed document array, plus brute-force baselines."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .corpus import DocumentCollection
from .doclists import SampledLists, build_doclists, compute_list
from .errors import UnsortedInput
from .gcda import cover, extract
from .repair import Grammar, build_grammar
from .suffix_index import SuffixStructures, build_suffix_array, check_pattern, pattern_range


@dataclass
class Index:
    collection: DocumentCollection
    suffixes: SuffixStructures
    grammar: Grammar
    lists: SampledLists

    @property
    def b(self) -> int:
        return self.lists.b

    @property
    def beta(self) -> float:
        return self.lists.beta

    def space(self) -> dict[str, int]:
        """Byte breakdown of the in-memory structures at minimal bit widths."""
        n, g = self.collection.n, self.grammar
        sa_width = max(1, n.bit_length())
        g_width = max(1, g.n_symbols.bit_length())
        out = {
            "n": n,
            "d": self.collection.n_docs,
            "sa_bytes": (n * sa_width + 7) // 8,
            "text_bytes": n,
            "grammar_rules": g.n_rules,
            "grammar_height": g.height[g.start],
            "grammar_bytes": (len(g.rules) * g_width + 7) // 8,
            "grammar_lengths_bytes": (g.n_rules * sa_width + 7) // 8,
            "stored_lists": self.lists.n_lists,
            "list_grammar_rules": self.lists.list_grammar.n_rules,
        }
        out.update(self.lists.nbytes())
        out["lists_bytes"] = (out["lists_rules_bytes"] + out["lists_store_bytes"]
                              + out["lists_starts_bytes"] + out["sampled_flags_bytes"])
        out["plain_da_bytes"] = 4 * n
        return out


def build_index(coll: DocumentCollection, b: int = 512, beta: float = 4.0) -> Index:
    suffixes = build_suffix_array(coll)
    grammar = build_grammar(suffixes.da.tolist(), coll.n_docs)
    return Index(coll, suffixes, grammar, build_doclists(grammar, b, beta))


@dataclass
class QueryStats:
    """Counters filled in by :func:`list_documents` when requested."""
    occ: int = 0
    segments: int = 0
    lists_merged: int = 0
    pushed: int = 0
    unsampled_leaf_segments: int = 0
    segment_list_total: int = 0
    # symbol sizes seen per cover segment, kept for bound checks
    segment_sizes: list[int] = field(default_factory=list)

    def volume_bound(self, beta: float, b: int) -> float:
        return beta * self.segment_list_total + self.unsampled_leaf_segments * b


def merge_distinct(lists: Sequence[Sequence[int]], stats: QueryStats | None = None) -> list[int]:
    """Union of strictly increasing lists through a binary heap, each value once."""
    heap = [(lst[0], idx, 0) for idx, lst in enumerate(lists) if len(lst)]
    heapq.heapify(heap)
    pushed = len(heap)
    out: list[int] = []
    while heap:
        value, idx, pos = heap[0]
        if not out or out[-1] != value:
            out.append(value)
        lst = lists[idx]
        pos += 1
        if pos < len(lst):
            nxt = lst[pos]
            if nxt <= value:
                raise UnsortedInput(f"list {idx} is not strictly increasing at {pos}")
            heapq.heapreplace(heap, (nxt, idx, pos))
            pushed += 1
        else:
            heapq.heappop(heap)
    if stats is not None:
        stats.pushed += pushed
        stats.lists_merged += sum(1 for lst in lists if len(lst))
    return out


def list_documents(idx: Index, pattern: bytes, stats: QueryStats | None = None) -> list[int]:
    rng = pattern_range(idx.suffixes, idx.collection, pattern)
    if rng is None:
        return []
    g, lists = idx.grammar, idx.lists
    nt, b = g.n_terminals, lists.b
    segments = cover(g, *rng)
    # identical symbols share one list, so each is fetched and merged once
    fetched: dict[int, list[int]] = {}
    groups: list[list[int]] = []
    direct = 0
    for seg in segments:
        v = seg.symbol
        if v <= nt or lists.is_sampled(v):
            members = [v]
        elif g.exp_len[v] <= b:
            members = [v]
            direct += 1
            if v not in fetched:
                fetched[v] = compute_list(g, v)
        else:
            members = lists.sampled_descendants(v)
        for u in members:
            if u not in fetched:
                fetched[u] = [u] if u <= nt else lists.get_list(u)
        groups.append(members)
    if stats is not None:
        stats.occ = rng[1] - rng[0] + 1
        stats.segments = len(segments)
        stats.unsampled_leaf_segments = direct
        for members in groups:
            if len(members) == 1:
                size = len(fetched[members[0]])
            else:
                size = len(merge_distinct([fetched[u] for u in dict.fromkeys(members)]))
            stats.segment_sizes.append(size)
        stats.segment_list_total = sum(stats.segment_sizes)
    return merge_distinct(list(fetched.values()), stats)


def list_documents_brute_c(idx: Index, pattern: bytes) -> list[int]:
    rng = pattern_range(idx.suffixes, idx.collection, pattern)
    if rng is None:
        return []
    return sorted(set(extract(idx.grammar, *rng)))


def list_documents_brute_d(coll: DocumentCollection, s: SuffixStructures, pattern: bytes) -> list[int]:
    rng = pattern_range(s, coll, pattern)
    if rng is None:
        return []
    return np.unique(s.da[rng[0] - 1:rng[1]]).tolist()


def naive_scan(coll: DocumentCollection, pattern: bytes) -> list[int]:
    """Reference answer straight from the raw documents."""
    check_pattern(pattern)
    return [j for j, doc in enumerate(coll.documents(), start=1) if pattern in doc]
