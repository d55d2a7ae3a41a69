"""Synthetic repetitive collections (Concat / Version) and query patterns."""
from __future__ import annotations

import string
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .corpus import DEFAULT_SEP_BYTE, DocumentCollection, load_documents, write_concat
from .errors import InvalidSpec, PatternLengthInfeasible, RateOutOfRange

RNG_ALGORITHM = "numpy.random.PCG64"
SYMBOL_POOL = (string.ascii_lowercase + string.ascii_uppercase + string.digits).encode()


@dataclass(frozen=True)
class SynthSpec:
    base_count: int = 10
    base_len: int = 1000
    variants_per_base: int = 100
    mutation_rate: float = 0.001
    mode: str = "version"
    sigma: int = 4
    rng_seed: int = 0
    seed_text: str | None = None

    def validate(self) -> None:
        if self.base_count < 1 or self.base_len < 1 or self.variants_per_base < 1:
            raise InvalidSpec("base_count, base_len and variants_per_base must be >= 1")
        if not 0 < self.mutation_rate <= 1:
            raise InvalidSpec(f"mutation_rate {self.mutation_rate} outside (0, 1]")
        if self.mode not in ("version", "concat"):
            raise InvalidSpec(f"unknown mode {self.mode!r}")
        if self.seed_text is None and not 2 <= self.sigma <= len(SYMBOL_POOL):
            raise InvalidSpec(f"sigma must lie in 2..{len(SYMBOL_POOL)}")


def default_alphabet(sigma: int) -> bytes:
    return SYMBOL_POOL[:sigma]


def mutate(doc: bytes, rate: float, rng: np.random.Generator,
           alphabet: bytes | None = None) -> bytes:
    """Replace each symbol, with probability ``rate``, by a different uniform symbol."""
    if not 0 < rate <= 1:
        raise RateOutOfRange(f"rate {rate} outside (0, 1]")
    if alphabet is None:
        alphabet = bytes(sorted(set(doc)))
    alpha = np.frombuffer(alphabet, dtype=np.uint8)
    if len(alpha) < 2:
        raise InvalidSpec("mutation needs an alphabet of at least two symbols")
    lookup = np.full(256, -1, dtype=np.int64)
    lookup[alpha] = np.arange(len(alpha))
    codes = lookup[np.frombuffer(doc, dtype=np.uint8)]
    if (codes < 0).any():
        raise InvalidSpec("document contains symbols outside the mutation alphabet")
    hit = rng.random(len(codes)) < rate
    shift = rng.integers(1, len(alpha), size=int(hit.sum()))
    codes[hit] = (codes[hit] + shift) % len(alpha)
    return alpha[codes].tobytes()


def _base_documents(spec: SynthSpec, rng: np.random.Generator) -> tuple[list[bytes], bytes]:
    if spec.seed_text is None:
        alphabet = default_alphabet(spec.sigma)
        alpha = np.frombuffer(alphabet, dtype=np.uint8)
        bases = [alpha[rng.integers(0, len(alpha), size=spec.base_len)].tobytes()
                 for _ in range(spec.base_count)]
        return bases, alphabet
    raw = Path(spec.seed_text).read_bytes()
    raw = raw.replace(b"\x00", b"").replace(bytes([DEFAULT_SEP_BYTE]), b" ")
    if len(raw) < spec.base_len:
        raise InvalidSpec(f"seed text shorter than base_len={spec.base_len}")
    starts = rng.integers(0, len(raw) - spec.base_len + 1, size=spec.base_count)
    bases = [raw[s:s + spec.base_len] for s in starts]
    return bases, bytes(sorted(set(raw)))


def generate_documents(spec: SynthSpec) -> list[bytes]:
    """Raw documents of the collection; randomness is drawn identically for both modes."""
    spec.validate()
    rng = np.random.Generator(np.random.PCG64(spec.rng_seed))
    bases, alphabet = _base_documents(spec, rng)
    families = [[mutate(base, spec.mutation_rate, rng, alphabet)
                 for _ in range(spec.variants_per_base)] for base in bases]
    if spec.mode == "version":
        return [v for family in families for v in family]
    return [b"".join(family) for family in families]


def generate(spec: SynthSpec) -> DocumentCollection:
    return load_documents(generate_documents(spec))


def sample_patterns(coll: DocumentCollection, count: int, min_len: int, max_len: int,
                    rng: np.random.Generator) -> list[bytes]:
    """Substrings of random documents; each is guaranteed to occur in the text."""
    if min_len < 1 or max_len < min_len:
        raise PatternLengthInfeasible(f"bad length range {min_len}..{max_len}")
    if count == 0:
        return []
    starts = np.concatenate(([0], np.asarray(coll.boundaries[:-1])))
    lengths = np.asarray(coll.boundaries) - starts - 1
    longest = int(lengths.max())
    if longest < min_len:
        raise PatternLengthInfeasible(f"no document has length >= {min_len}")
    top = min(max_len, longest)
    out = []
    for _ in range(count):
        m = int(rng.integers(min_len, top + 1))
        eligible = np.flatnonzero(lengths >= m)
        j = int(eligible[rng.integers(0, len(eligible))])
        off = int(starts[j]) + int(rng.integers(0, lengths[j] - m + 1))
        out.append(coll.decode(coll.text[off:off + m]))
    return out


def write_collection(spec: SynthSpec, output: str | Path) -> Path:
    """Write the concat-format collection and its ``.manifest`` sidecar; returns the manifest path."""
    docs = generate_documents(spec)
    write_concat(output, docs, DEFAULT_SEP_BYTE)
    manifest = Path(str(output) + ".manifest")
    fields = asdict(spec)
    fields.update(rng=RNG_ALGORITHM, n_docs=len(docs), sep_byte=DEFAULT_SEP_BYTE,
                  total_len=sum(len(d) for d in docs))
    manifest.write_text("".join(f"{k}={v}\n" for k, v in fields.items()))
    return manifest
