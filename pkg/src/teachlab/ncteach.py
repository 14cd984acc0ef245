"""No-clash teachers: admissibility, normalization, and exact NCTD search.

A teacher assigns each concept an instance set; two concepts clash when
they agree everywhere on the union of their assigned sets, and a teacher is
admissible when no pair clashes.  NCTD(k) is computed by deciding, for
d = counting lower bound, d+1, ..., whether an admissible assignment of
d-subsets exists.  The decision procedure is backtracking over concepts
with forward checking: each concept's surviving candidates are a bitmask
over the lexicographic list of d-subsets, the concept with the fewest
survivors is assigned next (ties by concept order), and candidates are
tried in lexicographic order, so the first witness found is deterministic.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .concepts import Concept, ConceptClass, agrees_on, instances_to_mask, mask_to_instances
from .errors import FormatError

__all__ = [
    "NCTeacher",
    "NctdResult",
    "clash",
    "decide_order",
    "is_nc_teacher",
    "nctd",
    "nctd_lower_bound",
    "normalize_teacher",
    "parse_teacher",
    "serialize_teacher",
]


@dataclass(frozen=True)
class NCTeacher:
    """An assignment of one instance set to each concept of a class."""

    k: ConceptClass
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.sets) != len(self.k):
            raise ValueError("teacher must assign exactly one set per concept")
        for s in self.sets:
            for x in s:
                if not 1 <= x <= self.k.n:
                    raise ValueError(f"instance {x} outside domain 1..{self.k.n}")

    @property
    def order(self) -> int:
        """Largest assigned set size."""
        return max((len(s) for s in self.sets), default=0)

    def set_for(self, c: Concept) -> frozenset[int]:
        return self.sets[self.k.index_of(c)]

    def set_masks(self) -> tuple[int, ...]:
        n = self.k.n
        return tuple(instances_to_mask(s, n) for s in self.sets)


def clash(c: Concept, c2: Concept, s: Iterable[int], s2: Iterable[int]) -> bool:
    """True iff the two (distinct) concepts agree on all of s union s2."""
    if c == c2:
        raise ValueError("clash is defined for distinct concepts")
    return agrees_on(c, c2, set(s) | set(s2))


def is_nc_teacher(t: NCTeacher) -> bool:
    """True iff no pair of concepts clashes under t."""
    masks = t.k.masks
    smasks = t.set_masks()
    m = len(masks)
    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] ^ masks[j]) & (smasks[i] | smasks[j]) == 0:
                return False
    return True


def normalize_teacher(t: NCTeacher, d: int) -> NCTeacher:
    """Pad every assigned set to size exactly d with the smallest unused instances.

    Enlarging a set can only expose more disagreement, so an admissible
    teacher stays admissible.
    """
    if d < t.order:
        raise ValueError(f"cannot normalize to order {d}: teacher has order {t.order}")
    if d > t.k.n:
        raise ValueError(f"order {d} exceeds domain size {t.k.n}")
    padded = []
    for s in t.sets:
        grown = set(s)
        x = 1
        while len(grown) < d:
            if x not in grown:
                grown.add(x)
            x += 1
        padded.append(frozenset(grown))
    return NCTeacher(t.k, tuple(padded))


def nctd_lower_bound(k: ConceptClass) -> int:
    """Smallest d with 2^d * C(n, d) >= |k|: at most 2^d concepts may share a set."""
    size = len(k)
    for d in range(k.n + 1):
        if (1 << d) * comb(k.n, d) >= size:
            return d
    raise AssertionError("2^n always covers a duplicate-free class")


class _Timeout(Exception):
    pass


def _candidate_masks(n: int, d: int) -> list[int]:
    return [instances_to_mask(c, n) for c in itertools.combinations(range(1, n + 1), d)]


def _greedy_order1(diff: list[list[int]], m: int, n: int) -> list[int] | None:
    """First-fit singleton assignment, trying instance (i mod n)+1 first at concept i.

    A completed assignment is admissible by construction (each value is
    checked against all earlier ones); failure says nothing, the caller
    falls back to the complete search.
    """
    assign: list[int] = []
    for i in range(m):
        di = diff[i]
        for off in range(n):
            bit = 1 << ((i + off) % n)
            for j in range(i):
                dm = di[j]
                if not dm & bit and not dm & assign[j]:
                    break
            else:
                assign.append(bit)
                break
        else:
            return None
    return assign


def decide_order(masks: list[int] | tuple[int, ...], n: int, d: int,
                 deadline: float | None = None) -> list[int] | None:
    """Instance-set masks of an admissible order-d teacher, in concept order.

    Returns None when no admissible assignment of d-subsets exists.  Raises
    TimeoutError when the monotonic-clock deadline passes mid-search.
    """
    m = len(masks)
    if m == 0:
        return []
    cands = _candidate_masks(n, d)
    ncand = len(cands)
    fullc = (1 << ncand) - 1
    diff = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            diff[i][j] = diff[j][i] = masks[i] ^ masks[j]

    if d == 1:
        sol = _greedy_order1(diff, m, n)
        if sol is not None:
            return sol

    if d == 1:
        # candidate index x-1 is the singleton {x}, so candidate masks align with instance masks
        def allowed(dm: int) -> int:
            return dm
    else:
        hit = [0] * (n + 1)
        for ci, cm in enumerate(cands):
            b = cm
            while b:
                low = b & -b
                hit[low.bit_length()] |= 1 << ci
                b ^= low
        memo: dict[int, int] = {}

        def allowed(dm: int) -> int:
            a = memo.get(dm)
            if a is None:
                a = 0
                b = dm
                while b:
                    low = b & -b
                    a |= hit[low.bit_length()]
                    b ^= low
                memo[dm] = a
            return a

    domains = [fullc] * m
    assigned = [-1] * m
    nodes = 0

    def search() -> bool:
        nonlocal nodes
        pick = -1
        pick_count = ncand + 1
        for i in range(m):
            if assigned[i] < 0:
                c = domains[i].bit_count()
                if c < pick_count:
                    pick_count = c
                    pick = i
        if pick < 0:
            return True
        avail = domains[pick]
        while avail:
            low = avail & -avail
            avail ^= low
            nodes += 1
            if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
                raise _Timeout
            ci = low.bit_length() - 1
            smask = cands[ci]
            assigned[pick] = ci
            trail: list[tuple[int, int]] = []
            ok = True
            for j in range(m):
                if assigned[j] >= 0:
                    continue
                dm = diff[pick][j]
                if smask & dm:
                    continue
                old = domains[j]
                new = old & allowed(dm)
                if new != old:
                    trail.append((j, old))
                    domains[j] = new
                    if new == 0:
                        ok = False
                        break
            if ok and search():
                return True
            for j, old in trail:
                domains[j] = old
            assigned[pick] = -1
        return False

    try:
        found = search()
    except _Timeout:
        raise TimeoutError(f"order-{d} teacher search hit its deadline") from None
    if not found:
        return None
    return [cands[assigned[i]] for i in range(m)]


@dataclass(frozen=True)
class NctdResult:
    """Outcome of an NCTD search.

    status is "exact" (d and teacher set), "exceeds_d_max", or "timeout";
    lower_bound is the best verified bound in every case.
    """

    status: str
    d: int | None
    teacher: NCTeacher | None
    lower_bound: int


def nctd(k: ConceptClass, d_max: int | None = None, timeout: float | None = None) -> NctdResult:
    """Exact no-clash teaching dimension of k, searched upward from the counting bound."""
    if len(k) == 0:
        raise ValueError("nctd of an empty class")
    n = k.n
    if d_max is None:
        d_max = n
    if not 0 <= d_max <= n:
        raise ValueError(f"d_max must lie in 0..{n}")
    deadline = None if timeout is None else time.monotonic() + timeout
    verified = nctd_lower_bound(k)
    masks = list(k.masks)
    for d in range(verified, d_max + 1):
        try:
            sol = decide_order(masks, n, d, deadline)
        except TimeoutError:
            return NctdResult("timeout", None, None, verified)
        if sol is not None:
            teacher = NCTeacher(k, tuple(mask_to_instances(s) for s in sol))
            return NctdResult("exact", d, teacher, verified)
        verified = d + 1
    return NctdResult("exceeds_d_max", None, None, verified)


def serialize_teacher(t: NCTeacher) -> str:
    """Render a teacher: header ``n=<n> d=<order>``, then one line per concept."""
    lines = [f"n={t.k.n} d={t.order}"]
    for c, s in zip(t.k.concepts, t.sets):
        inst = " ".join(str(x) for x in sorted(s))
        lines.append(f"{c.to_string()} : {inst}".rstrip())
    return "\n".join(lines) + "\n"


def parse_teacher(text: str) -> NCTeacher:
    """Parse the teacher file format written by serialize_teacher."""
    n: int | None = None
    d: int | None = None
    masks: list[int] = []
    sets: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("d="):
                raise FormatError(f"line {lineno}: expected header 'n=<int> d=<int>'")
            try:
                n = int(parts[0][2:])
                d = int(parts[1][2:])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 1 or d < 0 or d > n:
                raise FormatError(f"line {lineno}: header out of range")
            continue
        if ":" not in line:
            raise FormatError(f"line {lineno}: expected '<bits> : <instances>'")
        left, _, right = line.partition(":")
        bitstr = left.strip()
        if len(bitstr) != n or any(ch not in "01" for ch in bitstr):
            raise FormatError(f"line {lineno}: bad concept string {bitstr!r}")
        bits = 0
        for j, ch in enumerate(bitstr):
            if ch == "1":
                bits |= 1 << j
        try:
            inst = [int(tok) for tok in right.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: instances must be integers") from None
        if len(set(inst)) != len(inst):
            raise FormatError(f"line {lineno}: repeated instance in teaching set")
        if len(inst) > d:
            raise FormatError(f"line {lineno}: teaching set larger than declared order {d}")
        for x in inst:
            if not 1 <= x <= n:
                raise FormatError(f"line {lineno}: instance {x} outside domain 1..{n}")
        masks.append(bits)
        sets.append(frozenset(inst))
    if n is None:
        raise FormatError("missing 'n=<int> d=<int>' header line")
    if not masks:
        raise FormatError("teacher file assigns no sets")
    try:
        k = ConceptClass.from_masks(masks, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return NCTeacher(k, tuple(sets))
