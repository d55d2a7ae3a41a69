"""Sampled, grammar-compressed document lists for nonterminals of the DA grammar.

Only nodes of the *sampled tree* keep a list. Leaves of that tree are the
symbols with expansion length at most ``b`` hanging below a longer parent;
an internal node is dropped when the distinct lists of its highest sampled
descendants add up to at most ``beta`` times its own list size. The start
symbol always keeps its list.

Document sets are handled as Python ints used as bitsets (bit ``j`` set for
document ``j``) while building.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitvector import BitVector
from .errors import (
    DocIdOutOfRange,
    GrammarNotCompleted,
    NotSampled,
    UnsortedList,
)
from .repair import Grammar, compress, decompress


def _bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def document_sets(g: Grammar) -> list[int]:
    """Bitset of distinct documents under every symbol, indexed by symbol id."""
    sets = [0] + [1 << t for t in range(1, g.n_terminals + 1)]
    rules = g.rules
    for k in range(0, len(rules), 2):
        sets.append(sets[rules[k]] | sets[rules[k + 1]])
    return sets


def compute_list(g: Grammar, v: int) -> list[int]:
    """Sorted distinct documents in the expansion of ``v``, straight from the grammar."""
    return sorted(set(decompress(g, v)))


def _reachable(g: Grammar) -> list[bool]:
    seen = [False] * (g.n_symbols + 1)
    seen[g.start] = True
    nt = g.n_terminals
    for v in range(g.n_symbols, nt, -1):
        if seen[v]:
            left, right = g.children(v)
            seen[left] = seen[right] = True
    return seen


def build_sampled_tree(g: Grammar, b: int, beta: float,
                       doc_sets: Sequence[int] | None = None) -> list[bool]:
    """Per-symbol flags telling which lists are stored."""
    if not g.completed:
        raise GrammarNotCompleted("sampling needs a completed grammar")
    if b < 1 or beta < 1:
        raise ValueError("b and beta must both be >= 1")
    if doc_sets is None:
        doc_sets = document_sets(g)
    nt, exp_len = g.n_terminals, g.exp_len
    sampled = [False] * (g.n_symbols + 1)
    sampled[g.start] = g.start > nt
    if exp_len[g.start] <= b:
        return sampled

    seen = _reachable(g)
    internal = [v for v in range(nt + 1, g.n_symbols + 1) if seen[v] and exp_len[v] > b]
    for v in internal:
        sampled[v] = True
        for c in g.children(v):
            if c > nt and exp_len[c] <= b:
                sampled[c] = True

    size = [0] + [1] * nt + [s.bit_count() for s in doc_sets[nt + 1:]]
    below: dict[int, frozenset[int]] = {}
    internal.sort(key=lambda v: g.height[v])
    for v in internal:
        if v == g.start:
            continue
        kids: set[int] = set()
        for c in g.children(v):
            if c <= nt or sampled[c]:
                kids.add(c)
            else:
                kids |= below[c]
        if sum(size[u] for u in kids) <= beta * size[v]:
            sampled[v] = False
            below[v] = frozenset(kids)
    return sampled


def compress_lists(lists: Sequence[Sequence[int]], d: int) -> tuple[Grammar, list[int], BitVector]:
    """Re-Pair the separated concatenation of ``lists``; separators are dropped afterwards."""
    for idx, lst in enumerate(lists):
        if len(lst) == 0:
            raise UnsortedList(f"list {idx} is empty")
        prev = 0
        for x in lst:
            if not 1 <= x <= d:
                raise DocIdOutOfRange(f"list {idx} holds document {x} outside 1..{d}")
            if x <= prev:
                raise UnsortedList(f"list {idx} is not strictly increasing")
            prev = x
    if not lists:
        return Grammar(d), [], BitVector([])
    n_sep = len(lists) - 1
    seq: list[int] = []
    for idx, lst in enumerate(lists):
        if idx:
            seq.append(d + idx)
        seq.extend(lst)
    raw = compress(seq, d + n_sep)

    def renumber(x: int) -> int:
        return x if x <= d else x - n_sep

    grammar = Grammar(d, [renumber(x) for x in raw.rules])
    store: list[int] = []
    starts: list[int] = []
    fresh = True
    for x in raw.top_level:
        if d < x <= d + n_sep:
            fresh = True
            continue
        store.append(renumber(x))
        starts.append(1 if fresh else 0)
        fresh = False
    grammar.top_level = list(store)
    return grammar, store, BitVector(starts)


@dataclass
class SampledLists:
    grammar: Grammar
    b: int
    beta: float
    sampled: BitVector
    list_grammar: Grammar
    list_store: list[int]
    list_starts: BitVector

    @property
    def n_lists(self) -> int:
        return self.list_starts.ones

    def is_sampled(self, v: int) -> bool:
        return v < len(self.sampled) and bool(self.sampled[v])

    def stored_symbols(self) -> list[int]:
        return [self.sampled.select1(k) for k in range(1, self.sampled.ones + 1)]

    def get_list(self, v: int) -> list[int]:
        if not self.is_sampled(v):
            raise NotSampled(v)
        k = self.sampled.rank1(v) + 1
        begin = self.list_starts.select1(k)
        end = self.list_starts.select1(k + 1) if k < self.n_lists else len(self.list_store)
        out: list[int] = []
        for x in self.list_store[begin:end]:
            out.extend(decompress(self.list_grammar, x))
        return out

    def sampled_descendants(self, v: int) -> list[int]:
        """Highest sampled descendants of ``v`` left to right; terminals stand for themselves."""
        g = self.grammar
        g.check_symbol(v)
        nt = g.n_terminals
        out: list[int] = []
        stack = [v]
        while stack:
            x = stack.pop()
            if x <= nt or self.is_sampled(x):
                out.append(x)
            else:
                left, right = g.children(x)
                stack.append(right)
                stack.append(left)
        return out

    def nbytes(self) -> dict[str, int]:
        """In-memory payload with every array bit-packed at its minimal width."""
        g2 = self.list_grammar
        width = max(1, (g2.n_symbols).bit_length())
        return {
            "lists_rules_bytes": (len(g2.rules) * width + 7) // 8,
            "lists_store_bytes": (len(self.list_store) * width + 7) // 8,
            "lists_starts_bytes": self.list_starts.nbytes(),
            "sampled_flags_bytes": self.sampled.nbytes(),
        }


def build_doclists(g: Grammar, b: int = 512, beta: float = 4.0) -> SampledLists:
    doc_sets = document_sets(g)
    flags = build_sampled_tree(g, b, beta, doc_sets)
    symbols = [v for v, keep in enumerate(flags) if keep]
    lists = [_bits_to_list(doc_sets[v]) for v in symbols]
    list_grammar, store, starts = compress_lists(lists, g.n_terminals)
    return SampledLists(g, b, beta, BitVector(flags), list_grammar, store, starts)

