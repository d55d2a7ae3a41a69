"""Document collections: the concatenated text with per-document terminators.

Raw input bytes are remapped order-preservingly onto ``1..sigma`` and every
document is followed by the terminator, stored as byte ``0``. Positions and
document ids are 1-based throughout the public API.
"""
from __future__ import annotations

import bisect
import functools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyCollection,
    EmptyDocument,
    PositionOutOfRange,
    TerminatorInDocument,
)

TERMINATOR = 0
DEFAULT_SEP_BYTE = 0x0A


@dataclass(frozen=True)
class DocumentCollection:
    text: bytes
    boundaries: tuple[int, ...]
    alphabet: bytes

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def n_docs(self) -> int:
        return len(self.boundaries)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def text_array(self) -> np.ndarray:
        return np.frombuffer(self.text, dtype=np.uint8)

    def encode(self, raw: bytes) -> bytes | None:
        """Map raw bytes into the internal alphabet; ``None`` if some byte never occurs."""
        table = _encode_table(self.alphabet)
        if any(table[c] < 0 for c in raw):
            return None
        return bytes(table[c] for c in raw)

    def decode(self, internal: bytes) -> bytes:
        return bytes(self.alphabet[c - 1] for c in internal)

    def document(self, j: int) -> bytes:
        """Raw content of document ``j`` (1-based), without its terminator."""
        if not 1 <= j <= self.n_docs:
            raise PositionOutOfRange(f"document {j} not in 1..{self.n_docs}")
        start = self.boundaries[j - 2] if j > 1 else 0
        return self.decode(self.text[start:self.boundaries[j - 1] - 1])

    def documents(self) -> list[bytes]:
        return [self.document(j) for j in range(1, self.n_docs + 1)]


@functools.lru_cache(maxsize=8)
def _encode_table(alphabet: bytes) -> tuple[int, ...]:
    table = [-1] * 256
    for code, c in enumerate(alphabet, start=1):
        table[c] = code
    return tuple(table)


def load_documents(docs: Sequence[bytes]) -> DocumentCollection:
    if len(docs) == 0:
        raise EmptyCollection("a collection needs at least one document")
    present = set()
    for j, doc in enumerate(docs, start=1):
        if len(doc) == 0:
            raise EmptyDocument(f"document {j} is empty")
        if TERMINATOR in doc:
            raise TerminatorInDocument(f"document {j} contains the terminator byte 0x00")
        present.update(doc)
    alphabet = bytes(sorted(present))
    table = bytes(max(code, 0) for code in _encode_table(alphabet))
    parts = []
    boundaries = []
    end = 0
    for doc in docs:
        parts.append(bytes(doc).translate(table))
        parts.append(b"\x00")
        end += len(doc) + 1
        boundaries.append(end)
    return DocumentCollection(b"".join(parts), tuple(boundaries), alphabet)


def doc_of(coll: DocumentCollection, pos: int) -> int:
    if not 1 <= pos <= coll.n:
        raise PositionOutOfRange(f"position {pos} not in 1..{coll.n}")
    return bisect.bisect_left(coll.boundaries, pos) + 1


def docs_of(coll: DocumentCollection, positions: np.ndarray) -> np.ndarray:
    """Vectorised :func:`doc_of` for an array of 1-based positions."""
    bounds = np.asarray(coll.boundaries, dtype=np.int64)
    return np.searchsorted(bounds, positions, side="left").astype(np.int64) + 1


def split_concat(data: bytes, sep_byte: int = DEFAULT_SEP_BYTE) -> list[bytes]:
    """Split a single-file collection at ``sep_byte``; one trailing separator is allowed."""
    pieces = data.split(bytes([sep_byte]))
    if pieces and pieces[-1] == b"":
        pieces.pop()
    return pieces


def read_directory(path: str | Path) -> tuple[list[str], list[bytes]]:
    files = sorted(p for p in Path(path).iterdir() if p.is_file())
    return [p.name for p in files], [p.read_bytes() for p in files]


def read_collection(path: str | Path, mode: str = "dir",
                    sep_byte: int = DEFAULT_SEP_BYTE) -> tuple[list[str], DocumentCollection]:
    """Load a collection from disk; returns display names alongside it."""
    if mode == "dir":
        names, docs = read_directory(path)
    elif mode == "concat":
        docs = split_concat(Path(path).read_bytes(), sep_byte)
        names = [f"doc{j}" for j in range(1, len(docs) + 1)]
    else:
        raise ValueError(f"unknown input mode {mode!r}")
    return names, load_documents(docs)


def write_concat(path: str | Path, docs: Iterable[bytes], sep_byte: int = DEFAULT_SEP_BYTE) -> None:
    sep = bytes([sep_byte])
    with open(path, "wb") as fh:
        for doc in docs:
            fh.write(doc)
            fh.write(sep)
