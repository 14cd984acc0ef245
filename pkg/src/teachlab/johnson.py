"""Johnson graphs, wide and narrow cliques, and exact narrow-clique-free maxima.

J(n, k) has the k-subsets of [n] as vertices, adjacent when they share k-1
elements.  A clique is wide when all members share a common (k-1)-set and
narrow when their union has only k+1 elements; maximal narrow cliques are
exactly the k-subsets of a (k+1)-set.  A family therefore avoids narrow
(t+1)-cliques iff every (k+1)-subset of [n] contains at most t members, and
that counter form drives the branch-and-bound search for H_t(n, k): include
or exclude vertices in colex order, prune on remaining-vertex count and the
counting bound t*C(n,k+1)/(n-k), which equals t*C(n,k)/(k+1) exactly since
each k-set lies in exactly n-k of the (k+1)-sets.
"""

from __future__ import annotations

import enum
import itertools
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

from .concepts import instances_to_mask, mask_to_instances
from .errors import BudgetError, FormatError

__all__ = [
    "CliqueClass",
    "HMaxResult",
    "KSetFamily",
    "classify_clique",
    "complement_family",
    "h_max",
    "h_ratio",
    "johnson_adjacent",
    "narrow_clique_free",
    "narrow_cliques",
    "parse_family",
    "restrict_family",
    "serialize_family",
]


@dataclass(frozen=True)
class KSetFamily:
    """A family of k-subsets of [n]."""

    n: int
    k: int
    members: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        for a in self.members:
            if len(a) != self.k:
                raise ValueError(f"member {sorted(a)} does not have size {self.k}")
            for x in a:
                if not 1 <= x <= self.n:
                    raise ValueError(f"instance {x} outside domain 1..{self.n}")

    def member_masks(self) -> list[int]:
        return sorted(instances_to_mask(a, self.n) for a in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.members)


class CliqueClass(enum.Enum):
    WIDE = "wide"
    NARROW = "narrow"
    BOTH = "both"
    NEITHER = "neither"


def johnson_adjacent(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff the two equal-size sets share all but one element."""
    sa, sb = frozenset(a), frozenset(b)
    if len(sa) != len(sb):
        raise ValueError("Johnson adjacency needs equal-size sets")
    return len(sa & sb) == len(sa) - 1


def classify_clique(sets: Iterable[Iterable[int]]) -> CliqueClass:
    """Classify a clique of J(n, k) by common intersection and union size.

    Raises ValueError when the input is not a clique (including repeated
    vertices).  Singletons satisfy neither bound; pairs satisfy both.
    """
    members = [frozenset(s) for s in sets]
    if not members:
        raise ValueError("empty clique")
    if len(set(members)) != len(members):
        raise ValueError("repeated vertex: not a clique")
    k = len(members[0])
    for a, b in itertools.combinations(members, 2):
        if not johnson_adjacent(a, b):
            raise ValueError(f"{sorted(a)} and {sorted(b)} are not adjacent: not a clique")
    common = frozenset.intersection(*members)
    union = frozenset.union(*members)
    wide = len(common) == k - 1
    narrow = len(union) == k + 1
    if wide and narrow:
        return CliqueClass.BOTH
    if wide:
        return CliqueClass.WIDE
    if narrow:
        return CliqueClass.NARROW
    return CliqueClass.NEITHER


def narrow_cliques(n: int, k: int) -> Iterator[frozenset[frozenset[int]]]:
    """The maximal narrow cliques of J(n, k): all k-subsets of each (k+1)-subset."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    for d in itertools.combinations(range(1, n + 1), k + 1):
        dset = frozenset(d)
        yield frozenset(dset - {x} for x in d)


def narrow_clique_free(f: KSetFamily, t: int) -> bool:
    """True iff no t+1 members of f fit inside one (k+1)-subset of [n].

    Equivalent to f spanning no narrow (t+1)-clique: t+1 distinct k-sets
    inside a (k+1)-set always form one.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if f.k == f.n:
        return True
    masks = f.member_masks()
    for d in itertools.combinations(range(f.n), f.k + 1):
        dm = 0
        for x in d:
            dm |= 1 << x
        inside = sum(1 for m in masks if m & ~dm == 0)
        if inside > t:
            return False
    return True


@dataclass(frozen=True)
class HMaxResult:
    """Outcome of an H_t(n, k) search; exact iff lower == upper == size."""

    n: int
    k: int
    t: int
    status: str  # "exact" or "inconclusive"
    size: int | None
    witness: KSetFamily | None
    lower: int
    upper: int


class _Stop(Exception):
    pass


def _greedy_family(verts: list[int], vds: list[tuple[int, ...]], nds: int, t: int) -> list[int]:
    counts = [0] * nds
    chosen = []
    for vi, v in enumerate(verts):
        if all(counts[di] < t for di in vds[vi]):
            for di in vds[vi]:
                counts[di] += 1
            chosen.append(v)
    return chosen


def h_max(n: int, k: int, t: int, exact_limit: int = 1000) -> HMaxResult:
    """Largest family of k-subsets of [n] with at most t members in any (k+1)-subset.

    Exact (with the colex-least maximum witness) when C(n, k) <= exact_limit;
    otherwise reports greedy lower and counting upper bounds, labeled
    inconclusive.
    """
    if not 1 <= t <= k <= n:
        raise ValueError(f"need 1 <= t <= k <= n, got t={t}, k={k}, n={n}")
    nv = comb(n, k)
    verts = sorted(instances_to_mask(c, n)
                   for c in itertools.combinations(range(1, n + 1), k))
    if n == k:
        fam = KSetFamily(n, k, frozenset({frozenset(range(1, n + 1))}))
        return HMaxResult(n, k, t, "exact", 1, fam, 1, 1)

    dsubs = sorted(instances_to_mask(c, n)
                   for c in itertools.combinations(range(1, n + 1), k + 1))
    vindex = {v: i for i, v in enumerate(verts)}
    per_vertex: list[list[int]] = [[] for _ in range(nv)]
    for di, dm in enumerate(dsubs):
        b = dm
        while b:
            low = b & -b
            b ^= low
            per_vertex[vindex[dm ^ low]].append(di)
    vds = [tuple(ds) for ds in per_vertex]

    counting_upper = t * comb(n, k + 1) // (n - k)
    upper0 = min(nv, counting_upper)
    greedy = _greedy_family(verts, vds, len(dsubs), t)
    lower0 = len(greedy)

    if nv > exact_limit:
        fam = KSetFamily(n, k, frozenset(mask_to_instances(v) for v in greedy))
        return HMaxResult(n, k, t, "inconclusive", None, fam, lower0, upper0)

    counts = [0] * len(dsubs)
    best = lower0
    # every accepted k-set raises n-k of the D-counters, so the leftover
    # slack sum(t - counts) caps any extension at slack // (n - k)
    stride = n - k
    slack = t * len(dsubs)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * nv + 200))
    try:
        def grow(idx: int, cur: int) -> None:
            nonlocal best, slack
            room = nv - idx
            cap = slack // stride
            if cap < room:
                room = cap
            if cur + room <= best:
                return
            if idx == nv:
                best = cur
                if best >= upper0:
                    raise _Stop
                return
            if all(counts[di] < t for di in vds[idx]):
                for di in vds[idx]:
                    counts[di] += 1
                slack -= stride
                grow(idx + 1, cur + 1)
                for di in vds[idx]:
                    counts[di] -= 1
                slack += stride
            grow(idx + 1, cur)

        try:
            grow(0, 0)
        except _Stop:
            pass

        counts = [0] * len(dsubs)
        slack = t * len(dsubs)
        chosen: list[int] = []
        witness: list[int] | None = None

        def extract(idx: int, cur: int) -> bool:
            nonlocal witness, slack
            if cur == best:
                witness = list(chosen)
                return True
            room = nv - idx
            cap = slack // stride
            if cap < room:
                room = cap
            if cur + room < best:
                return False
            if all(counts[di] < t for di in vds[idx]):
                for di in vds[idx]:
                    counts[di] += 1
                slack -= stride
                chosen.append(verts[idx])
                if extract(idx + 1, cur + 1):
                    return True
                chosen.pop()
                for di in vds[idx]:
                    counts[di] -= 1
                slack += stride
            return extract(idx + 1, cur)

        extract(0, 0)
    finally:
        sys.setrecursionlimit(old_limit)
    assert witness is not None
    fam = KSetFamily(n, k, frozenset(mask_to_instances(v) for v in witness))
    return HMaxResult(n, k, t, "exact", best, fam, best, best)


def h_ratio(n: int, k: int, t: int, exact_limit: int = 1000) -> Fraction:
    """H_t(n, k) / C(n, k) as an exact rational; requires the exact search to finish."""
    res = h_max(n, k, t, exact_limit)
    if res.status != "exact":
        raise BudgetError(f"h_max({n}, {k}, {t}) is inconclusive under limit {exact_limit}")
    return Fraction(res.size, comb(n, k))


def restrict_family(f: KSetFamily, i: int) -> KSetFamily:
    """Members avoiding instance i, re-indexed over a domain of size n-1.

    Labels below i are unchanged; labels above i shift down by one (the
    order-preserving embedding of [n] minus {i} onto [n-1], and the identity
    when i = n).
    """
    if not 1 <= i <= f.n:
        raise ValueError(f"instance {i} outside domain 1..{f.n}")
    if f.k > f.n - 1:
        raise ValueError("members span the whole domain; nothing survives restriction")
    kept = []
    for a in f.members:
        if i in a:
            continue
        kept.append(frozenset(x if x < i else x - 1 for x in a))
    return KSetFamily(f.n - 1, f.k, frozenset(kept))


def complement_family(f: KSetFamily) -> KSetFamily:
    """Replace every member A by [n] minus A; an isomorphism J(n,k) -> J(n,n-k)."""
    if f.k == f.n:
        raise ValueError("complement members would be empty")
    full = frozenset(range(1, f.n + 1))
    return KSetFamily(f.n, f.n - f.k, frozenset(full - a for a in f.members))


def serialize_family(f: KSetFamily) -> str:
    """One member per line, instances ascending, members in colex order."""
    lines = []
    for m in f.member_masks():
        lines.append(" ".join(str(x) for x in sorted(mask_to_instances(m))))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_family(text: str, n: int) -> KSetFamily:
    """Parse a witness family over [n]; k is taken from the first member line."""
    members: list[frozenset[int]] = []
    k: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            inst = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: instances must be integers") from None
        if len(set(inst)) != len(inst):
            raise FormatError(f"line {lineno}: repeated instance in member")
        for x in inst:
            if not 1 <= x <= n:
                raise FormatError(f"line {lineno}: instance {x} outside domain 1..{n}")
        if k is None:
            k = len(inst)
        elif len(inst) != k:
            raise FormatError(f"line {lineno}: member size {len(inst)} differs from {k}")
        member = frozenset(inst)
        if member in members:
            raise FormatError(f"line {lineno}: duplicate member")
        members.append(member)
    if k is None:
        raise FormatError("witness file lists no members")
    return KSetFamily(n, k, frozenset(members))
