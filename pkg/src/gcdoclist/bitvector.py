"""Plain bitvector with rank/select directories.

Bits live in 64-bit words. A cumulative count every 512 bits plus a 16-bit
in-block count per word give constant-time rank; select binary-searches the
block directory and then scans at most eight words.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

WORDS_PER_BLOCK = 8


class BitVector:
    def __init__(self, bits: Iterable[int] | np.ndarray):
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits, dtype=bool)
        self.n = len(arr)
        padded = np.zeros(((self.n + 63) // 64) * 64, dtype=bool)
        padded[: self.n] = arr
        self.words = np.packbits(padded, bitorder="little").view("<u8").astype(np.uint64)
        self._build_directory()

    @classmethod
    def from_words(cls, words: np.ndarray, n: int) -> "BitVector":
        bv = cls.__new__(cls)
        bv.n = n
        bv.words = np.asarray(words, dtype=np.uint64)
        bv._build_directory()
        return bv

    def _build_directory(self) -> None:
        counts = np.bitwise_count(self.words).astype(np.int64)
        n_blocks = (len(counts) + WORDS_PER_BLOCK - 1) // WORDS_PER_BLOCK
        padded = np.zeros(n_blocks * WORDS_PER_BLOCK, dtype=np.int64)
        padded[: len(counts)] = counts
        per_block = padded.reshape(n_blocks, WORDS_PER_BLOCK)
        self.block_rank = np.concatenate(([0], np.cumsum(per_block.sum(axis=1))))
        inner = np.cumsum(per_block, axis=1) - per_block
        self.word_rank = inner.ravel()[: len(counts)].astype(np.uint16)
        self.ones = int(self.block_rank[-1])
        self._words = [int(w) for w in self.words]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self._words[i >> 6] >> (i & 63)) & 1

    def rank1(self, i: int) -> int:
        """Number of 1-bits in positions ``[0, i)``."""
        if not 0 <= i <= self.n:
            raise IndexError(i)
        w, off = i >> 6, i & 63
        if w == len(self._words):
            return self.ones
        return (int(self.block_rank[w // WORDS_PER_BLOCK]) + int(self.word_rank[w])
                + (self._words[w] & ((1 << off) - 1)).bit_count())

    def select1(self, k: int) -> int:
        """0-based position of the ``k``-th 1-bit (``k`` is 1-based)."""
        if not 1 <= k <= self.ones:
            raise IndexError(k)
        block = int(np.searchsorted(self.block_rank, k, side="left")) - 1
        remaining = k - int(self.block_rank[block])
        w = block * WORDS_PER_BLOCK
        while True:
            c = self._words[w].bit_count()
            if remaining <= c:
                break
            remaining -= c
            w += 1
        word = self._words[w]
        for _ in range(remaining - 1):
            word &= word - 1
        return (w << 6) + ((word & -word).bit_length() - 1)

    def to_list(self) -> list[int]:
        return [self[i] for i in range(self.n)]

    def nbytes(self) -> int:
        """Payload bytes (bits rounded up); directories are o(n) and not counted."""
        return (self.n + 7) // 8
