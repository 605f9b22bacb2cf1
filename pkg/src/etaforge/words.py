"""Bi-infinite binary words for partitions and the core/quotient splitting.

A partition is encoded by the 0/1 profile of its diagram boundary: position
p carries a 0 exactly when p = part_i - i for some row i (rows below the
diagram contribute the all-zero tail), and a 1 otherwise.  The canonical
anchoring places the dot so that the number of 1s at negative positions
equals the number of 0s at nonnegative positions; the dot then sits at the
corner of the Durfee square.

Splitting the word into the t interleaved subsequences gives the modulus-t
decomposition: sorting each section yields the core, and each section read
as a word of its own is one quotient component.  A box of the partition is
the pair (position of a 1, position of a later 0) and its hook length is
the distance between them, which is what makes hook bookkeeping exact here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition


class CanonicalWord:
    """Finite window of the canonically anchored boundary word.

    ``bits`` spans global positions ``start .. start + len(bits) - 1``;
    everything left of the window is 0, everything right is 1.  The window
    is trimmed (first bit 1, last bit 0, or empty) and the anchoring is
    validated on construction.
    """

    __slots__ = ("bits", "start")

    def __init__(self, bits=(), start: int = 0):
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        if bits:
            if bits[0] != 1 or bits[-1] != 0:
                raise ValueError("window must start with 1 and end with 0")
        else:
            start = 0
        neg_ones = sum(1 for k, b in enumerate(bits) if b == 1 and start + k < 0)
        nonneg_zeros = sum(1 for k, b in enumerate(bits) if b == 0 and start + k >= 0)
        if neg_ones != nonneg_zeros:
            raise ValueError(
                f"window is not canonically anchored: {neg_ones} ones below the dot, "
                f"{nonneg_zeros} zeros at or above it"
            )
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "start", start)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalWord is immutable")

    @property
    def dot_index(self) -> int:
        """Number of window bits strictly before the dot."""
        return -self.start

    @property
    def end(self) -> int:
        return self.start + len(self.bits) - 1

    def bit_at(self, p: int) -> int:
        if p < self.start:
            return 0
        if p > self.end:
            return 1
        return self.bits[p - self.start]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CanonicalWord)
            and self.bits == other.bits
            and self.start == other.start
        )

    def __hash__(self):
        return hash((self.bits, self.start))

    def __str__(self) -> str:
        head = "".join(str(b) for b in self.bits[: self.dot_index])
        tail = "".join(str(b) for b in self.bits[self.dot_index:])
        return f"{head}.{tail}"

    def __repr__(self) -> str:
        return f"CanonicalWord({self})"

    @classmethod
    def parse(cls, text: str) -> "CanonicalWord":
        if text.count(".") != 1:
            raise ValueError("expected exactly one dot")
        head, tail = text.split(".")
        bits = tuple(int(c) for c in head + tail)
        return cls(bits, -len(head))


def to_word(lam: Partition) -> CanonicalWord:
    """Canonical boundary word of a partition."""
    parts = lam.parts
    if not parts:
        return CanonicalWord()
    ell = len(parts)
    betas = {parts[i] - (i + 1) for i in range(ell)}
    start = -ell
    end = parts[0] - 1
    bits = tuple(0 if p in betas else 1 for p in range(start, end + 1))
    return CanonicalWord(bits, start)


def _parts_from_window(bits, start: int) -> Partition:
    """Partition encoded by an arbitrarily anchored finite window.

    The anchoring does not matter: the constant contributed by the all-zero
    tail below the window is subtracted off.
    """
    zero_positions = [start + k for k, b in enumerate(bits) if b == 0]
    tail = start + len(zero_positions)
    parts = []
    for rank, p in enumerate(reversed(zero_positions), start=1):
        v = p + rank - tail
        if v:
            parts.append(v)
    return Partition(parts)


def from_word(word: CanonicalWord) -> Partition:
    return _parts_from_window(word.bits, word.start)


def mirror_f(bits) -> tuple[int, ...]:
    """Reverse a finite bit sequence and complement every bit."""
    return tuple(1 - int(b) for b in reversed(tuple(bits)))


@dataclass(frozen=True)
class WordForm:
    is_self_conjugate: bool
    is_doubled_distinct: bool

    def label(self) -> str:
        tags = [
            name
            for flag, name in (
                (self.is_self_conjugate, "SC"),
                (self.is_doubled_distinct, "DD"),
            )
            if flag
        ]
        return "+".join(tags) if tags else "neither"


def word_form(word: CanonicalWord) -> WordForm:
    """Detect the mirror shapes v.f(v)… (self-conjugate) and v.1f(v)… (doubled distinct)."""
    span = max(abs(word.start), word.end + 1, 1) + 1
    sc = all(word.bit_at(p) == 1 - word.bit_at(-1 - p) for p in range(span))
    dd = word.bit_at(0) == 1 and all(
        word.bit_at(p) == 1 - word.bit_at(-p) for p in range(1, span + 1)
    )
    return WordForm(sc, dd)


@dataclass(frozen=True)
class QuotientVector:
    """Core plus the t quotient components of the modulus-t decomposition."""

    core: Partition
    quotient: tuple[Partition, ...]
    t: int

    def __post_init__(self):
        if self.t < 2:
            raise ValueError("modulus must be >= 2")
        if len(self.quotient) != self.t:
            raise ValueError(f"expected {self.t} quotient components")
        if not self.core.is_t_core(self.t):
            raise ValueError(f"core {self.core!r} has a hook divisible by {self.t}")

    def weight(self) -> int:
        return self.core.weight + self.t * sum(q.weight for q in self.quotient)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "core": self.core.to_json(),
            "quotient": [q.to_json() for q in self.quotient],
        }


def _section_window(word: CanonicalWord, t: int, k: int) -> tuple[list[int], int]:
    """Bits of the residue-k subsequence covering the word's window."""
    if not word.bits:
        return [], 0
    lo = word.start
    i0 = (lo - k + t - 1) // t  # ceil((lo - k) / t)
    i1 = (word.end - k) // t
    bits = [word.bit_at(i * t + k) for i in range(i0, i1 + 1)]
    return bits, i0


def section_levels(word: CanonicalWord, t: int) -> list[int]:
    """Boundary level of each sorted section: the sorted residue-k word has
    its first 1 at this position (zeros strictly below, ones from it on)."""
    levels = []
    for k in range(t):
        bits, i0 = _section_window(word, t, k)
        nonneg_zeros = sum(1 for idx, b in enumerate(bits) if b == 0 and i0 + idx >= 0)
        neg_ones = sum(1 for idx, b in enumerate(bits) if b == 1 and i0 + idx < 0)
        levels.append(nonneg_zeros - neg_ones)
    return levels


def partition_from_levels(levels, t: int) -> Partition:
    """Partition whose residue-k sections are sorted with first 1 at levels[k]."""
    levels = list(levels)
    if len(levels) != t:
        raise ValueError(f"expected {t} levels")
    lo = min(min(n * t + k for k, n in enumerate(levels)), 0)
    hi = max(max((n - 1) * t + k for k, n in enumerate(levels)), -1)
    bits = []
    for p in range(lo, hi + 1):
        k = p % t
        i = (p - k) // t
        bits.append(1 if i >= levels[k] else 0)
    return _parts_from_window(bits, lo)


def littlewood(lam: Partition, t: int) -> QuotientVector:
    """Split a partition into its t-core and t-quotient via the word sections."""
    if t < 2:
        raise ValueError("modulus must be >= 2")
    word = to_word(lam)
    quotient = []
    for k in range(t):
        bits, i0 = _section_window(word, t, k)
        quotient.append(_parts_from_window(bits, i0))
    core = partition_from_levels(section_levels(word, t), t)
    qv = QuotientVector(core, tuple(quotient), t)
    if qv.weight() != lam.weight:
        raise AssertionError("core/quotient weights do not add up")
    return qv


def littlewood_inverse(qv: QuotientVector) -> Partition:
    """Reassemble the partition from its core and quotient."""
    t = qv.t
    levels = section_levels(to_word(qv.core), t)
    quot_words = [to_word(q) for q in qv.quotient]
    lo = min(
        min((levels[k] - len(qv.quotient[k])) * t + k for k in range(t)),
        0,
    )
    hi = max(
        max((levels[k] + max(q.parts[0] if q.parts else 0, 0) - 1) * t + k
            for k, q in enumerate(qv.quotient)),
        -1,
    )
    bits = []
    for p in range(lo, hi + 1):
        k = p % t
        i = (p - k) // t
        bits.append(quot_words[k].bit_at(i - levels[k]))
    return _parts_from_window(bits, lo)


def box_map(lam: Partition, t: int) -> dict[tuple[int, int], tuple[int, tuple[int, int]]]:
    """Where each box with hook divisible by t lands in the quotient.

    Returns {(i, j): (k, (i', j'))} with the hook in the source equal to
    t times the hook of the image box in quotient component k.
    """
    if t < 2:
        raise ValueError("modulus must be >= 2")
    parts = lam.parts
    if not parts:
        return {}
    conj = lam.conjugate()
    zero_pos = [parts[r] - (r + 1) for r in range(len(parts))]        # row r+1
    one_pos = [c - 1 - conj.parts[c - 1] for c in range(1, parts[0] + 1)]  # column c
    mapping: dict[tuple[int, int], tuple[int, tuple[int, int]]] = {}
    for r, p in enumerate(zero_pos, start=1):
        for c, q in enumerate(one_pos, start=1):
            if q >= p:
                break
            if (p - q) % t:
                continue
            k = p % t
            row = 1 + sum(
                1 for other in zero_pos if other > p and other % t == k
            )
            col = sum(
                1 for other in one_pos if other <= q and (other % t) == k
            )
            mapping[(r, c)] = (k, (row, col))
    return mapping
