"""Tournaments and the concept classes they induce.

A tournament on players 1..n orients every pair; concept C_j collects the
players that beat j, so j is never in C_j and always in its complement.
The 2n concepts {C_j} and {complement of C_j} admit the order-1 no-clash
teacher assigning {j} to both concepts derived from player j, and
conversely an admissible order-1 teacher on a 2n-concept class pins the
orientation of every pair, which recover_tournament implements.

Orientations are packed one bit per pair in row-major upper-triangle order.
Random tournaments draw each pair's bit from its own SplitMix64 stream
indexed by the pair rank, so generation is reproducible and independent of
draw order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .concepts import ConceptClass
from .errors import FormatError, PropertyViolation
from .ncteach import NCTeacher, is_nc_teacher
from .rng import stream_bit

__all__ = [
    "Tournament",
    "all_tournaments",
    "canonical_teacher",
    "class1",
    "class2",
    "linear_tournament",
    "pair_rank",
    "parse_tournament",
    "random_tournament",
    "recover_tournament",
    "serialize_tournament",
]


def pair_rank(n: int, i: int, j: int) -> int:
    """Rank of the pair (i, j), 1 <= i < j <= n, in row-major upper-triangle order."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Tournament:
    """An orientation of every pair of [n]; bit pair_rank(i,j) set means edge (i, j)."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one player")
        if not 0 <= self.bits < (1 << comb(self.n, 2)):
            raise ValueError("orientation bits do not fit the pair count")

    def has_edge(self, i: int, j: int) -> bool:
        """True iff the directed edge (i, j) is present (i is a winner against j)."""
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"need two distinct players in 1..{self.n}")
        if i < j:
            return (self.bits >> pair_rank(self.n, i, j)) & 1 == 1
        return (self.bits >> pair_rank(self.n, j, i)) & 1 == 0

    def edges(self) -> Iterator[tuple[int, int]]:
        """All directed edges, one per pair, in pair-rank order."""
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                yield (i, j) if self.has_edge(i, j) else (j, i)


def linear_tournament(n: int) -> Tournament:
    """Edge (i, j) for every i < j: players in index order."""
    return Tournament(n, (1 << comb(n, 2)) - 1)


def random_tournament(n: int, seed: int) -> Tournament:
    """Each pair's orientation from its own stream: bit = stream_bit(seed, rank)."""
    bits = 0
    for r in range(comb(n, 2)):
        bits |= stream_bit(seed, r) << r
    return Tournament(n, bits)


def all_tournaments(n: int) -> Iterator[Tournament]:
    """All 2^C(n,2) tournaments on [n]."""
    for bits in range(1 << comb(n, 2)):
        yield Tournament(n, bits)


def _winner_masks(g: Tournament) -> list[int]:
    """Mask of C_j = {i : edge (i, j)} for each j."""
    out = []
    for j in range(1, g.n + 1):
        m = 0
        for i in range(1, g.n + 1):
            if i != j and g.has_edge(i, j):
                m |= 1 << (i - 1)
        out.append(m)
    return out


def class1(g: Tournament) -> ConceptClass:
    """The n complement concepts, ordered by player: [n] minus C_1, ..., [n] minus C_n."""
    full = (1 << g.n) - 1
    return ConceptClass.from_masks([full ^ m for m in _winner_masks(g)], g.n)


def class2(g: Tournament) -> ConceptClass:
    """All 2n induced concepts: C_1, ..., C_n, then their complements."""
    winners = _winner_masks(g)
    full = (1 << g.n) - 1
    return ConceptClass.from_masks(winners + [full ^ m for m in winners], g.n)


def canonical_teacher(g: Tournament) -> NCTeacher:
    """The order-1 teacher on class2(g) assigning {j} to both concepts of player j."""
    singletons = tuple(frozenset({j}) for j in range(1, g.n + 1))
    return NCTeacher(class2(g), singletons + singletons)


def recover_tournament(k: ConceptClass, t: NCTeacher) -> Tournament:
    """Rebuild the tournament from a 2n-concept class and an admissible order-1 teacher.

    Every singleton must be assigned to exactly two concepts; the one
    containing its instance plays the complement role.  Edge (i, j) is
    present exactly when C_j agrees with the complement concept of i on {i}.
    """
    n = k.n
    if t.k.n != n or t.k.masks != k.masks:
        raise ValueError("teacher is not defined on the given class")
    if len(k) != 2 * n:
        raise PropertyViolation(
            f"class has {len(k)} concepts; an NC-maximum dimension-1 class over [{n}] has {2 * n}")
    if any(len(s) != 1 for s in t.sets):
        raise PropertyViolation("every teaching set must be a single instance")
    if not is_nc_teacher(t):
        raise PropertyViolation("teacher admits a clash")
    users: dict[int, list[int]] = {x: [] for x in range(1, n + 1)}
    for idx, s in enumerate(t.sets):
        (x,) = s
        users[x].append(idx)
    masks = k.masks
    c_of: list[int] = [0] * (n + 1)
    cbar_of: list[int] = [0] * (n + 1)
    for x in range(1, n + 1):
        if len(users[x]) != 2:
            raise PropertyViolation(
                f"instance {x} is the teaching set of {len(users[x])} concepts; expected exactly 2")
        a, b = users[x]
        bit = 1 << (x - 1)
        if (masks[a] ^ masks[b]) & bit == 0:
            raise PropertyViolation(f"the two concepts taught by {{{x}}} agree on {x}")
        if masks[a] & bit:
            cbar_of[x], c_of[x] = masks[a], masks[b]
        else:
            cbar_of[x], c_of[x] = masks[b], masks[a]
    bits = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            forward = c_of[j] >> (i - 1) & 1 == 1   # i in C_j
            backward = c_of[i] >> (j - 1) & 1 == 1  # j in C_i
            if forward == backward:
                raise PropertyViolation(f"pair ({i}, {j}) is not oriented exactly once")
            if forward:
                bits |= 1 << pair_rank(n, i, j)
    g = Tournament(n, bits)
    if frozenset(class2(g).masks) != frozenset(masks):
        raise PropertyViolation("recovered tournament does not induce the given class")
    return g


def serialize_tournament(g: Tournament) -> str:
    """Render a tournament: header ``n=<int>``, then one ``i j`` line per pair."""
    lines = [f"n={g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def parse_tournament(text: str) -> Tournament:
    """Parse the tournament file format: exactly C(n,2) directed edges, one per pair."""
    n: int | None = None
    bits = 0
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise FormatError(f"line {lineno}: expected 'n=<int>' header before edge lines")
            try:
                n = int(line[2:])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 1:
                raise FormatError(f"line {lineno}: need at least one player")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'i j'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: players must be integers") from None
        if a == b or not (1 <= a <= n and 1 <= b <= n):
            raise FormatError(f"line {lineno}: need two distinct players in 1..{n}")
        i, j = (a, b) if a < b else (b, a)
        r = pair_rank(n, i, j)
        if r in seen:
            raise FormatError(f"line {lineno}: pair {{{i}, {j}}} oriented twice")
        seen.add(r)
        if a < b:
            bits |= 1 << r
    if n is None:
        raise FormatError("missing 'n=<int>' header line")
    if len(seen) != comb(n, 2):
        raise FormatError(f"expected {comb(n, 2)} edges, got {len(seen)}")
    return Tournament(n, bits)
