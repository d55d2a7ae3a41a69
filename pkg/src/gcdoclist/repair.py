"""Re-Pair grammar compression over integer sequences.

Symbols ``1..n_terminals`` are terminals; rule ``k`` (0-based creation order)
defines nonterminal ``n_terminals + 1 + k``. Pair frequencies count
non-overlapping occurrences, left to right, so a run ``x^5`` holds two
occurrences of ``(x, x)``. Frequency ties go to the pair whose symbols were
created earliest (terminals have rank 0, rule ``k`` has rank ``k + 1``),
then to the lexicographically smaller pair.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import AlreadyCompleted, EmptySequence, SymbolOutOfRange, UnknownSymbol


@dataclass
class Grammar:
    n_terminals: int
    rules: list[int] = field(default_factory=list)
    start: int | None = None
    top_level: list[int] | None = None
    exp_len: list[int] = field(default_factory=list)
    height: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.exp_len:
            self._recompute_tables()

    def _recompute_tables(self) -> None:
        self.exp_len = [0] + [1] * self.n_terminals
        self.height = [0] * (self.n_terminals + 1)
        rules = self.rules
        for k in range(0, len(rules), 2):
            left, right = rules[k], rules[k + 1]
            self.exp_len.append(self.exp_len[left] + self.exp_len[right])
            self.height.append(1 + max(self.height[left], self.height[right]))

    @property
    def n_rules(self) -> int:
        return len(self.rules) // 2

    @property
    def n_symbols(self) -> int:
        return self.n_terminals + self.n_rules

    @property
    def completed(self) -> bool:
        return self.start is not None

    def is_terminal(self, v: int) -> bool:
        return 1 <= v <= self.n_terminals

    def check_symbol(self, v: int) -> None:
        if not 1 <= v <= self.n_symbols:
            raise UnknownSymbol(v)

    def children(self, v: int) -> tuple[int, int]:
        k = 2 * (v - self.n_terminals - 1)
        return self.rules[k], self.rules[k + 1]

    def add_rule(self, left: int, right: int) -> int:
        self.rules.append(left)
        self.rules.append(right)
        self.exp_len.append(self.exp_len[left] + self.exp_len[right])
        self.height.append(1 + max(self.height[left], self.height[right]))
        return self.n_symbols

    def size(self) -> int:
        """Grammar size: right-hand-side symbols plus the residual top level."""
        return len(self.rules) + (len(self.top_level) if self.top_level is not None else 0)


def decompress(g: Grammar, v: int) -> list[int]:
    g.check_symbol(v)
    nt = g.n_terminals
    rules = g.rules
    out: list[int] = []
    stack = [v]
    while stack:
        x = stack.pop()
        if x <= nt:
            out.append(x)
        else:
            k = 2 * (x - nt - 1)
            stack.append(rules[k + 1])
            stack.append(rules[k])
    return out


def expand_all(g: Grammar, symbols: Iterable[int]) -> list[int]:
    out: list[int] = []
    for v in symbols:
        out.extend(decompress(g, v))
    return out


class _PairTable:
    """Live sequence plus counted pair occurrences, updated incrementally.

    A position ``i`` is *counted* under pair ``(sym[i], sym[next[i]])`` unless
    it continues an equal-symbol run whose previous position is counted under
    the same pair; that reproduces left-to-right non-overlapping counting.
    """

    def __init__(self, seq: list[int], n_terminals: int):
        n = len(seq)
        self.nt = n_terminals
        self.sym = seq
        self.nxt = list(range(1, n + 1))
        self.nxt[-1] = -1
        self.prv = list(range(-1, n - 1))
        self.key = [-1] * n  # pair key each position is counted under, or -1
        self.occ: dict[int, set[int]] = {}
        self.heap: list[tuple[int, int, int, int]] = []
        self.base = 1 << 40
        self.touched: set[int] = set()
        for i in range(n):
            self.refresh(i)
        self._flush(self.occ)

    def _rank(self, v: int) -> int:
        return 0 if v <= self.nt else v - self.nt

    def _push(self, key: int, count: int) -> None:
        a, b = divmod(key, self.base)
        heapq.heappush(self.heap, (-count, self._rank(a) + self._rank(b), a, b))

    def _flush(self, keys) -> None:
        # pairs whose count grew get one exact entry; shrunken ones are fixed up lazily on pop
        for key in keys:
            where = self.occ.get(key)
            if where is not None and len(where) >= 2:
                self._push(key, len(where))
        self.touched = set()

    def _unset(self, i: int) -> None:
        key = self.key[i]
        if key >= 0:
            self.occ[key].discard(i)
            self.key[i] = -1

    def refresh(self, i: int) -> None:
        sym, nxt, prv, keys = self.sym, self.nxt, self.prv, self.key
        while i != -1:
            j = nxt[i]
            if j == -1:
                want = -1
            else:
                a, b = sym[i], sym[j]
                want = a * self.base + b
                if a == b and prv[i] != -1 and keys[prv[i]] == want:
                    want = -1
            if want == keys[i]:
                return
            self._unset(i)
            if want >= 0:
                where = self.occ.get(want)
                if where is None:
                    where = self.occ[want] = set()
                where.add(i)
                keys[i] = want
                self.touched.add(want)
            # only a run of equal symbols propagates counted status rightwards
            if j != -1 and sym[i] == sym[j]:
                i = j
            else:
                return

    def best_pair(self) -> tuple[int, int] | None:
        heap = self.heap
        while heap:
            negc, rank, a, b = heap[0]
            where = self.occ.get(a * self.base + b)
            count = len(where) if where else 0
            if count == -negc:
                return a, b
            heapq.heappop(heap)
            if 2 <= count < -negc:
                self._push(a * self.base + b, count)
        return None

    def replace(self, a: int, b: int, new: int) -> None:
        key = a * self.base + b
        sym, nxt, prv, keys = self.sym, self.nxt, self.prv, self.key
        while self.occ.get(key):
            for i in sorted(self.occ[key]):
                if keys[i] != key:
                    continue
                j = nxt[i]
                p = prv[i]
                q = nxt[j]
                self._unset(i)
                self._unset(j)
                if p != -1:
                    self._unset(p)
                sym[i] = new
                sym[j] = -1
                nxt[i] = q
                if q != -1:
                    prv[q] = i
                if p != -1:
                    self.refresh(p)
                self.refresh(i)
                if q != -1:
                    self.refresh(q)
        self.occ.pop(key, None)
        self._flush(self.touched)

    def sequence(self) -> list[int]:
        out = []
        i = 0
        while i != -1:
            out.append(self.sym[i])
            i = self.nxt[i]
        return out


def compress(seq: Sequence[int], n_terminals: int) -> Grammar:
    """Run Re-Pair until no pair occurs twice; the result keeps its top level."""
    values = [int(x) for x in seq]
    if not values:
        raise EmptySequence("cannot compress an empty sequence")
    for x in values:
        if not 1 <= x <= n_terminals:
            raise SymbolOutOfRange(f"symbol {x} outside 1..{n_terminals}")
    g = Grammar(n_terminals)
    table = _PairTable(values, n_terminals)
    while True:
        pair = table.best_pair()
        if pair is None:
            break
        new = g.add_rule(*pair)
        table.replace(pair[0], pair[1], new)
    g.top_level = table.sequence()
    return g


def complete(g: Grammar) -> Grammar:
    """Merge the top level into one start symbol, lowest resulting height first.

    Ties go to the leftmost pair. A pair already defined by a rule reuses it.
    The input grammar is not modified.
    """
    if g.completed or g.top_level is None:
        raise AlreadyCompleted("grammar already has a start symbol")
    out = Grammar(g.n_terminals, list(g.rules), exp_len=list(g.exp_len), height=list(g.height))
    existing = {(out.rules[k], out.rules[k + 1]): out.n_terminals + 1 + k // 2
                for k in range(0, len(out.rules), 2)}
    seq = list(g.top_level)
    m = len(seq)
    nxt = list(range(1, m + 1))
    nxt[-1] = -1
    prv = list(range(-1, m - 1))
    alive = [True] * m
    height = out.height
    heap = [(1 + max(height[seq[i]], height[seq[i + 1]]), i, seq[i], seq[i + 1])
            for i in range(m - 1)]
    heapq.heapify(heap)
    remaining = m
    while remaining > 1:
        h, i, left, right = heapq.heappop(heap)
        j = nxt[i] if alive[i] else -1
        if j == -1 or seq[i] != left or seq[j] != right:
            continue
        new = existing.get((left, right))
        if new is None:
            new = out.add_rule(left, right)
            existing[(left, right)] = new
        seq[i] = new
        alive[j] = False
        nxt[i] = nxt[j]
        if nxt[i] != -1:
            prv[nxt[i]] = i
        remaining -= 1
        p = prv[i]
        if p != -1:
            heapq.heappush(heap, (1 + max(height[seq[p]], height[new]), p, seq[p], new))
        if nxt[i] != -1:
            q = nxt[i]
            heapq.heappush(heap, (1 + max(height[new], height[seq[q]]), i, new, seq[q]))
    out.start = seq[0]
    out.top_level = None
    return out


def build_grammar(seq: Sequence[int], n_terminals: int) -> Grammar:
    return complete(compress(seq, n_terminals))
