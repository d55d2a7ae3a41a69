"""Random access, extraction and maximal covers over a grammar-compressed DA.

All positions are 1-based and inclusive. The grammar must be completed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GrammarNotCompleted, InvalidRange, PositionOutOfRange
from .repair import Grammar, decompress


@dataclass(frozen=True)
class CoverSegment:
    symbol: int
    span_start: int
    span_end: int

    def __len__(self) -> int:
        return self.span_end - self.span_start + 1


def _root(g: Grammar) -> int:
    if g.start is None:
        raise GrammarNotCompleted("grammar has no start symbol")
    return g.start


def access(g: Grammar, i: int) -> int:
    v = _root(g)
    if not 1 <= i <= g.exp_len[v]:
        raise PositionOutOfRange(f"position {i} not in 1..{g.exp_len[v]}")
    nt, rules, exp_len = g.n_terminals, g.rules, g.exp_len
    while v > nt:
        k = 2 * (v - nt - 1)
        left = rules[k]
        if i <= exp_len[left]:
            v = left
        else:
            i -= exp_len[left]
            v = rules[k + 1]
    return v


def _check_range(g: Grammar, sp: int, ep: int) -> int:
    v = _root(g)
    if not 1 <= sp <= ep <= g.exp_len[v]:
        raise InvalidRange(f"[{sp}..{ep}] is not a valid range of 1..{g.exp_len[v]}")
    return v


def cover(g: Grammar, sp: int, ep: int) -> list[CoverSegment]:
    """Maximal parse-tree nodes tiling ``[sp..ep]``, left to right."""
    root = _check_range(g, sp, ep)
    nt, rules, exp_len = g.n_terminals, g.rules, g.exp_len
    out: list[CoverSegment] = []
    stack = [(root, 1)]
    while stack:
        v, lo = stack.pop()
        hi = lo + exp_len[v] - 1
        if hi < sp or lo > ep:
            continue
        if sp <= lo and hi <= ep:
            out.append(CoverSegment(v, lo, hi))
            continue
        k = 2 * (v - nt - 1)
        left, right = rules[k], rules[k + 1]
        stack.append((right, lo + exp_len[left]))
        stack.append((left, lo))
    return out


def extract(g: Grammar, sp: int, ep: int) -> list[int]:
    out: list[int] = []
    for seg in cover(g, sp, ep):
        out.extend(decompress(g, seg.symbol))
    return out
