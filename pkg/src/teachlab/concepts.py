"""Concepts over a finite domain and the concept-class file codec.

Instances are numbered 1..n.  A concept is a 0/1 labeling of the instances,
held as an n-bit integer with bit i-1 storing the label of instance i; a
concept class is an ordered, duplicate-free collection of concepts over a
shared domain.  Keeping labelings in machine words turns agreement and
difference queries into single integer operations, and those two queries
are the inner loop of every search in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FormatError

__all__ = [
    "Concept",
    "ConceptClass",
    "agrees_on",
    "complement",
    "difference_set",
    "instances_to_mask",
    "mask_to_instances",
    "parse_class",
    "serialize_class",
]


def instances_to_mask(instances: Iterable[int], n: int) -> int:
    """Pack a set of 1-based instances into an n-bit mask."""
    mask = 0
    for x in instances:
        if not 1 <= x <= n:
            raise ValueError(f"instance {x} outside domain 1..{n}")
        mask |= 1 << (x - 1)
    return mask


def mask_to_instances(mask: int) -> frozenset[int]:
    """Unpack an instance mask into the 1-based instances it contains."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return frozenset(out)


@dataclass(frozen=True)
class Concept:
    """A 0/1 labeling of the domain [n], packed into an integer mask."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("domain size must be at least 1")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("membership mask does not fit the domain")

    @classmethod
    def from_instances(cls, instances: Iterable[int], n: int) -> Concept:
        return cls(n, instances_to_mask(instances, n))

    @classmethod
    def from_string(cls, text: str) -> Concept:
        """Parse a bitstring; character j (1-based, from the left) labels instance j."""
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise FormatError(f"invalid character {ch!r} in concept string")
        if not text:
            raise FormatError("empty concept string")
        return cls(len(text), bits)

    def label(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"instance {x} outside domain 1..{self.n}")
        return (self.bits >> (x - 1)) & 1

    def members(self) -> frozenset[int]:
        return mask_to_instances(self.bits)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.n))

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and (self.bits >> (x - 1)) & 1 == 1


@dataclass(frozen=True)
class ConceptClass:
    """An ordered, duplicate-free collection of concepts over one domain."""

    n: int
    concepts: tuple[Concept, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("domain size must be at least 1")
        for c in self.concepts:
            if c.n != self.n:
                raise ValueError("concept domain size differs from class domain size")
        if len({c.bits for c in self.concepts}) != len(self.concepts):
            raise ValueError("concept class contains duplicate concepts")

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> ConceptClass:
        return cls(n, tuple(Concept(n, b) for b in masks))

    @classmethod
    def from_instance_sets(cls, sets: Iterable[Iterable[int]], n: int) -> ConceptClass:
        return cls(n, tuple(Concept.from_instances(s, n) for s in sets))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(c.bits for c in self.concepts)

    def index_of(self, c: Concept) -> int:
        for i, own in enumerate(self.concepts):
            if own == c:
                return i
        raise ValueError("concept not in class")

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, i: int) -> Concept:
        return self.concepts[i]

    def __contains__(self, c: object) -> bool:
        return isinstance(c, Concept) and any(own == c for own in self.concepts)


def _require_same_domain(c: Concept, c2: Concept) -> None:
    if c.n != c2.n:
        raise ValueError("concepts are defined over different domain sizes")


def agrees_on(c: Concept, c2: Concept, s: Iterable[int]) -> bool:
    """True iff the two concepts assign equal labels to every instance in s."""
    _require_same_domain(c, c2)
    return (c.bits ^ c2.bits) & instances_to_mask(s, c.n) == 0


def difference_set(c: Concept, c2: Concept) -> frozenset[int]:
    """The instances on which the two concepts disagree; empty iff they are equal."""
    _require_same_domain(c, c2)
    return mask_to_instances(c.bits ^ c2.bits)


def complement(c: Concept) -> Concept:
    """Flip every label: the concept [n] minus C."""
    return Concept(c.n, c.bits ^ ((1 << c.n) - 1))


def parse_class(text: str) -> ConceptClass:
    """Parse the class file format.

    The first content line is the header ``n=<int>``; every following content
    line is a bitstring of length n whose j-th character (from the left)
    labels instance j.  Lines starting with ``#`` and blank lines are skipped.
    """
    n: int | None = None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise FormatError(f"line {lineno}: expected 'n=<int>' header before concept lines")
            try:
                n = int(line[2:])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 1:
                raise FormatError(f"line {lineno}: domain size must be positive")
            continue
        if len(line) != n:
            raise FormatError(f"line {lineno}: expected {n} characters, got {len(line)}")
        bits = 0
        for j, ch in enumerate(line):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise FormatError(f"line {lineno}: invalid character {ch!r} in concept line")
        if bits in seen:
            raise FormatError(f"line {lineno}: duplicate concept {line!r}")
        seen.add(bits)
        masks.append(bits)
    if n is None:
        raise FormatError("missing 'n=<int>' header line")
    if not masks:
        raise FormatError("class file contains no concepts")
    return ConceptClass.from_masks(masks, n)


def serialize_class(k: ConceptClass) -> str:
    """Render a class in the file format; parse_class(serialize_class(k)) == k."""
    lines = [f"n={k.n}"]
    lines.extend(c.to_string() for c in k.concepts)
    return "\n".join(lines) + "\n"
