"""Teaching dimension, its extremes over a class, and the recursive variant.

A teaching set for C within class CC must intersect every difference set
{x : C(x) != C'(x)} over competitors C' in CC, so the minimal teaching set
is exactly a minimum hitting set of the difference masks.  One
branch-and-bound decision kernel underlies everything here: it branches on
the instances of the smallest uncovered difference set and prunes with a
greedy disjoint-packing lower bound.  td_min and rtd only ever ask decision
questions (iterative deepening), which is much cheaper than minimizing per
concept; td_of additionally extracts the lexicographically least witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .concepts import Concept, ConceptClass, instances_to_mask, mask_to_instances
from .errors import BudgetError

__all__ = [
    "TeachingReport",
    "is_teaching_set",
    "rtd",
    "rtd_bruteforce",
    "td_max",
    "td_min",
    "td_of",
    "teaching_report",
]


def _diff_masks(masks: tuple[int, ...] | list[int], i: int) -> list[int]:
    mi = masks[i]
    return [mi ^ mj for j, mj in enumerate(masks) if j != i]


def _hit_decision(masks: list[int], budget: int, allowed: int) -> bool:
    """Can at most `budget` instances drawn from `allowed` hit every mask?"""
    if not masks:
        return True
    if budget <= 0:
        return False
    # most constrained mask, plus a greedy disjoint-packing lower bound
    best_count = -1
    best_bits = 0
    packed = 0
    packing = 0
    for m in masks:
        mb = m & allowed
        if mb == 0:
            return False
        c = mb.bit_count()
        if best_count < 0 or c < best_count:
            best_count = c
            best_bits = mb
        if mb & packed == 0:
            packed |= mb
            packing += 1
            if packing > budget:
                return False
    bits = best_bits
    while bits:
        low = bits & -bits
        bits ^= low
        rest = [m for m in masks if m & low == 0]
        if _hit_decision(rest, budget - 1, allowed):
            return True
    return False


def _min_hit_size(masks: list[int], n: int) -> int:
    full = (1 << n) - 1
    for s in range(n + 1):
        if _hit_decision(masks, s, full):
            return s
    raise AssertionError("difference family not hittable by the full domain")


def _lex_min_witness(masks: list[int], size: int, n: int) -> int:
    """Lexicographically least hitting set of the given (minimal) size, as a mask."""
    full = (1 << n) - 1
    chosen = 0
    remaining = masks
    floor = 0
    for slot in range(size, 0, -1):
        for x in range(floor + 1, n + 2 - slot):
            bit = 1 << (x - 1)
            rest = [m for m in remaining if m & bit == 0]
            if _hit_decision(rest, slot - 1, full & ~((1 << x) - 1)):
                chosen |= bit
                remaining = rest
                floor = x
                break
        else:
            raise AssertionError("witness construction lost feasibility")
    return chosen


def _sorted_diffs(masks: tuple[int, ...] | list[int], i: int) -> list[int]:
    diffs = _diff_masks(masks, i)
    diffs.sort(key=int.bit_count)
    return diffs


def is_teaching_set(k: ConceptClass, c: Concept, s) -> bool:
    """True iff no other concept of k agrees with c on all of s."""
    i = k.index_of(c)
    smask = instances_to_mask(s, k.n)
    return all(d & smask for d in _diff_masks(k.masks, i))


def td_of(k: ConceptClass, c: Concept) -> tuple[int, frozenset[int]]:
    """Minimal teaching-set size for c within k, with the lex-least witness."""
    i = k.index_of(c)
    diffs = _sorted_diffs(k.masks, i)
    size = _min_hit_size(diffs, k.n)
    return size, mask_to_instances(_lex_min_witness(diffs, size, k.n))


def td_min(k: ConceptClass) -> int:
    """min over concepts C of TD(C, k), by iterative deepening over set sizes."""
    if len(k) == 0:
        raise ValueError("td_min of an empty class")
    return _td_min_lists([_sorted_diffs(k.masks, i) for i in range(len(k))], k.n)


def _td_min_lists(per_concept: list[list[int]], n: int) -> int:
    full = (1 << n) - 1
    for s in range(n + 1):
        for diffs in per_concept:
            if _hit_decision(diffs, s, full):
                return s
    raise AssertionError("no concept is teachable by the full domain")


def td_max(k: ConceptClass) -> int:
    """max over concepts C of TD(C, k)."""
    if len(k) == 0:
        raise ValueError("td_max of an empty class")
    return max(_min_hit_size(_sorted_diffs(k.masks, i), k.n) for i in range(len(k)))


@dataclass(frozen=True)
class TeachingReport:
    """Per-concept minimal teaching-set sizes with one lex-least witness each."""

    k: ConceptClass
    sizes: tuple[int, ...]
    witnesses: tuple[frozenset[int], ...]

    def size_of(self, c: Concept) -> int:
        return self.sizes[self.k.index_of(c)]

    def witness_of(self, c: Concept) -> frozenset[int]:
        return self.witnesses[self.k.index_of(c)]

    @property
    def td(self) -> int:
        return max(self.sizes)

    @property
    def td_min(self) -> int:
        return min(self.sizes)


def teaching_report(k: ConceptClass) -> TeachingReport:
    if len(k) == 0:
        raise ValueError("teaching report of an empty class")
    sizes = []
    witnesses = []
    for c in k:
        size, w = td_of(k, c)
        sizes.append(size)
        witnesses.append(w)
    return TeachingReport(k, tuple(sizes), tuple(witnesses))


def rtd(k: ConceptClass) -> int:
    """Recursive teaching dimension: peel easiest-to-teach concepts, track the max.

    Each round removes every concept whose teaching dimension within the
    remaining class equals that class's td_min; the empty remainder
    contributes 0.
    """
    masks = list(k.masks)
    n = k.n
    full = (1 << n) - 1
    best = 0
    while masks:
        per = [_sorted_diffs(masks, i) for i in range(len(masks))]
        m = _td_min_lists(per, n)
        if m > best:
            best = m
        masks = [masks[i] for i in range(len(masks)) if not _hit_decision(per[i], m, full)]
    return best


def rtd_bruteforce(k: ConceptClass, cap: int = 14) -> int:
    """max over all nonempty subclasses of td_min, by direct enumeration.

    Exponential in |k|; refuses classes larger than cap.  Subclasses whose
    td_min provably cannot exceed the running maximum are skipped with a
    single decision call, which leaves the returned maximum exact.
    """
    m = len(k)
    if m == 0:
        raise ValueError("rtd of an empty class")
    if m > cap:
        raise BudgetError(f"brute force enumerates 2^{m} subclasses; cap is {cap}")
    masks = k.masks
    n = k.n
    full = (1 << n) - 1
    diff = [[masks[i] ^ masks[j] for j in range(m)] for i in range(m)]
    best = 0
    for sub in range(1, 1 << m):
        idxs = [i for i in range(m) if (sub >> i) & 1]
        lists = [[diff[i][j] for j in idxs if j != i] for i in idxs]
        if any(_hit_decision(d, best, full) for d in lists):
            continue
        s = best + 1
        while not any(_hit_decision(d, s, full) for d in lists):
            s += 1
        best = s
    return best
