"""Binary index file.

Layout, all integers little-endian::

    "GCDA"  u32 version  u64 section_count
    section_count x (8-byte ASCII tag, u64 offset, u64 length)
    section payloads
    u32 CRC-32 of every preceding byte

Integer arrays are stored as 64-bit values, bitvectors as ``u64 n_bits``
followed by their 64-bit words. ``beta`` is stored as ``round(beta * 1000)``.
"""
from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np

from .bitvector import BitVector
from .corpus import DocumentCollection, docs_of
from .doclists import SampledLists
from .errors import BadIndexFile, DocListError
from .listing import Index
from .repair import Grammar
from .suffix_index import SuffixStructures

MAGIC = b"GCDA"
VERSION = 1
BETA_SCALE = 1000
_ENTRY = struct.Struct("<8sQQ")
_HEAD = struct.Struct("<4sIQ")


def _ints(*values) -> bytes:
    return np.asarray(values, dtype="<i8").tobytes()


def _array(values) -> bytes:
    return np.asarray(values, dtype="<i8").tobytes()


def _bitvector(bv: BitVector) -> bytes:
    return _ints(bv.n) + np.asarray(bv.words, dtype="<u8").tobytes()


def _sections(idx: Index) -> list[tuple[bytes, bytes]]:
    coll, g, lists = idx.collection, idx.grammar, idx.lists
    g2 = lists.list_grammar
    return [
        (b"META", _ints(coll.n, coll.n_docs, coll.sigma)),
        (b"BNDS", _array(coll.boundaries)),
        (b"ALPH", coll.alphabet),
        (b"TEXT", coll.text),
        (b"SARR", _array(idx.suffixes.sa)),
        (b"DAGR", _ints(g.n_terminals, g.n_rules, g.start) + _array(g.rules) + _array(g.exp_len)),
        (b"SMPL", _ints(lists.b, round(lists.beta * BETA_SCALE)) + _bitvector(lists.sampled)),
        (b"LGRM", _ints(g2.n_terminals, g2.n_rules) + _array(g2.rules)),
        (b"LSTO", _array(lists.list_store)),
        (b"LSTB", _bitvector(lists.list_starts)),
    ]


def dumps(idx: Index) -> bytes:
    sections = _sections(idx)
    offset = _HEAD.size + _ENTRY.size * len(sections)
    parts = [_HEAD.pack(MAGIC, VERSION, len(sections))]
    for tag, payload in sections:
        parts.append(_ENTRY.pack(tag.ljust(8, b"\0"), offset, len(payload)))
        offset += len(payload)
    parts.extend(payload for _, payload in sections)
    body = b"".join(parts)
    return body + struct.pack("<I", zlib.crc32(body))


def save(idx: Index, path: str | Path) -> int:
    data = dumps(idx)
    Path(path).write_bytes(data)
    return len(data)


class _Reader:
    def __init__(self, payload: bytes):
        self.buf = payload
        self.pos = 0

    def ints(self, count: int) -> list[int]:
        return [int(x) for x in self.array(count)]

    def array(self, count: int) -> np.ndarray:
        end = self.pos + 8 * count
        if count < 0 or end > len(self.buf):
            raise BadIndexFile("section truncated")
        out = np.frombuffer(self.buf, dtype="<i8", count=count, offset=self.pos).astype(np.int64)
        self.pos = end
        return out

    def bitvector(self) -> BitVector:
        (n,) = self.ints(1)
        n_words = (n + 63) // 64
        end = self.pos + 8 * n_words
        if n < 0 or end > len(self.buf):
            raise BadIndexFile("bitvector truncated")
        words = np.frombuffer(self.buf, dtype="<u8", count=n_words, offset=self.pos)
        self.pos = end
        return BitVector.from_words(words.astype(np.uint64), n)

    def done(self) -> None:
        if self.pos != len(self.buf):
            raise BadIndexFile("trailing bytes in section")


def loads(data: bytes) -> Index:
    if len(data) < _HEAD.size + 4:
        raise BadIndexFile("file too short")
    body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) != crc:
        raise BadIndexFile("checksum mismatch")
    magic, version, count = _HEAD.unpack_from(body, 0)
    if magic != MAGIC:
        raise BadIndexFile("not a GCDA index file")
    if version != VERSION:
        raise BadIndexFile(f"unsupported format version {version}")
    sections: dict[bytes, bytes] = {}
    for k in range(count):
        tag, offset, length = _ENTRY.unpack_from(body, _HEAD.size + k * _ENTRY.size)
        if offset + length > len(body):
            raise BadIndexFile(f"section {tag!r} out of bounds")
        sections[tag.rstrip(b"\0")] = body[offset:offset + length]
    try:
        return _assemble(sections)
    except KeyError as exc:
        raise BadIndexFile(f"missing section {exc}") from None
    except BadIndexFile:
        raise
    except (DocListError, IndexError, ValueError) as exc:
        raise BadIndexFile(f"malformed section payload: {exc}") from None


def _assemble(sec: dict[bytes, bytes]) -> Index:
    meta = _Reader(sec[b"META"])
    n, d, sigma = meta.ints(3)
    boundaries = tuple(int(x) for x in np.frombuffer(sec[b"BNDS"], dtype="<i8"))
    alphabet, text = sec[b"ALPH"], sec[b"TEXT"]
    if len(text) != n or len(boundaries) != d or len(alphabet) != sigma:
        raise BadIndexFile("collection metadata inconsistent")
    coll = DocumentCollection(text, boundaries, alphabet)

    sa = np.frombuffer(sec[b"SARR"], dtype="<i8").astype(np.int64)
    if len(sa) != n:
        raise BadIndexFile("suffix array length mismatch")
    suffixes = SuffixStructures(sa=sa, da=docs_of(coll, sa))

    rd = _Reader(sec[b"DAGR"])
    n_terminals, n_rules, start = rd.ints(3)
    rules = rd.ints(2 * n_rules)
    exp_len = rd.ints(n_terminals + n_rules + 1)
    rd.done()
    grammar = Grammar(n_terminals, rules, start=start)
    if grammar.exp_len != exp_len or grammar.exp_len[start] != n:
        raise BadIndexFile("grammar expansion lengths inconsistent")

    rd = _Reader(sec[b"SMPL"])
    b, beta_fixed = rd.ints(2)
    sampled = rd.bitvector()
    rd.done()
    rd = _Reader(sec[b"LGRM"])
    t2, r2 = rd.ints(2)
    list_grammar = Grammar(t2, rd.ints(2 * r2))
    rd.done()
    store = [int(x) for x in np.frombuffer(sec[b"LSTO"], dtype="<i8")]
    list_grammar.top_level = list(store)
    rd = _Reader(sec[b"LSTB"])
    starts = rd.bitvector()
    rd.done()
    if len(starts) != len(store) or sampled.ones != starts.ones:
        raise BadIndexFile("list directory inconsistent")
    lists = SampledLists(grammar, b, beta_fixed / BETA_SCALE, sampled, list_grammar, store, starts)
    return Index(coll, suffixes, grammar, lists)


def load(path: str | Path) -> Index:
    return loads(Path(path).read_bytes())
