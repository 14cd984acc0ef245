"""Desk-scale probabilistic and exhaustive experiments.

Random tournaments drive the td_min statistics: trial i of master seed s
derives its own tournament seed from SplitMix64 stream i, so runs are
reproducible and trials are order-independent (safe to parallelize).  The
exhaustive searches (dimension-1 characterization, maximum-class search)
enumerate concept classes directly as subsets of the 2^n concept masks and
lean on the order-d teacher decision procedure; maximum witnesses are
reported as canonical forms under domain permutation.

The threshold and claim arithmetic uses base-2 logarithms throughout.
Binomials are exact integers however large; the only approximate step is
taking log of an exact integer, and every inequality checked that way has
margins that dwarf float error by many orders of magnitude.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bounds import ksz_bound
from .classical import rtd, td_min
from .concepts import ConceptClass, instances_to_mask
from .errors import BudgetError
from .ncteach import decide_order, nctd
from .rng import stream
from .tournaments import Tournament, all_tournaments, class1, class2, random_tournament

__all__ = [
    "ClaimCheck",
    "ClaimScan",
    "Dim1Report",
    "ExperimentConfig",
    "MaxClassResult",
    "PatternReport",
    "TauReport",
    "Threshold",
    "TdminSummary",
    "TrialRecord",
    "claim_check",
    "claim_scan",
    "max_class_search",
    "pattern_count",
    "pattern_report",
    "run_tdmin_experiment",
    "tau_estimate",
    "threshold_k",
    "verify_dim1",
]


@dataclass(frozen=True)
class Threshold:
    """k' = log2(n) - 2*log2(log2(2n)) - shift, and k = floor(k')."""

    k_prime: float
    k: int


def threshold_k(n: int, shift: int = 4) -> Threshold:
    """The td_min threshold for class1 of a random tournament; may be negative."""
    if n < 2:
        raise ValueError("need n >= 2")
    kp = math.log2(n) - 2.0 * math.log2(math.log2(2 * n)) - shift
    return Threshold(kp, math.floor(kp))


@dataclass(frozen=True)
class ClaimCheck:
    """Both growth inequalities at one n, plus the corollary variant.

    defined means k >= 0 so the binomial term is meaningful; holds means
    both inequalities are satisfied.  The sufficient conditions are the
    log-form reductions and imply their inequality wherever both are
    defined.
    """

    n: int
    k_prime: float
    k: int
    defined: bool
    ineq1: bool | None        # 2^-(k+1) (n-k) >= 2, exactly
    ineq2: bool | None        # C(n,k) 2^k exp(-2^-(k+3)(n-k)) < 1
    sufficient: bool | None   # k log(2n) - 2^-(k+4) n < 0
    cor_k_prime: float
    cor_k: int
    cor_defined: bool
    cor_ineq1: bool | None    # 2^-(k+2) n >= 2, exactly
    cor_ineq2: bool | None    # C(n,k) 2^k exp(-2^-(k+4) n) < (2n)^-log(2n)
    cor_sufficient: bool | None  # k log(2n) - 2^-(k+4) n < -log^2(2n)

    @property
    def holds(self) -> bool:
        return bool(self.defined and self.ineq1 and self.ineq2)

    @property
    def cor_holds(self) -> bool:
        return bool(self.cor_defined and self.cor_ineq1 and self.cor_ineq2)


def claim_check(n: int) -> ClaimCheck:
    """Evaluate the random-tournament growth claim and its corollary form at n."""
    thr = threshold_k(n, shift=4)
    cor = threshold_k(n, shift=5)
    k, k2 = thr.k, cor.k
    log2n = math.log2(2 * n)

    defined = 0 <= k <= n
    ineq1 = ineq2 = sufficient = None
    if defined:
        ineq1 = Fraction(n - k, 1 << (k + 1)) >= 2
        lhs_log = math.log(comb(n, k) * (1 << k))
        ineq2 = lhs_log < float(Fraction(n - k, 1 << (k + 3)))
        sufficient = k * log2n < float(Fraction(n, 1 << (k + 4)))

    cor_defined = 0 <= k2 <= n
    cor_ineq1 = cor_ineq2 = cor_sufficient = None
    if cor_defined:
        cor_ineq1 = Fraction(n, 1 << (k2 + 2)) >= 2
        lhs_log = math.log(comb(n, k2) * (1 << k2))
        x2 = float(Fraction(n, 1 << (k2 + 4)))
        cor_ineq2 = lhs_log - x2 < -log2n * math.log(2 * n)
        cor_sufficient = k2 * log2n - x2 < -(log2n * log2n)

    return ClaimCheck(n, thr.k_prime, k, defined, ineq1, ineq2, sufficient,
                      cor.k_prime, k2, cor_defined, cor_ineq1, cor_ineq2, cor_sufficient)


@dataclass(frozen=True)
class ClaimScan:
    """claim_check over a geometric grid, with empirical onset points.

    n0 (and cor_n0) is the least grid value from which every tested larger
    grid value satisfies the inequalities; None when the tail still fails.
    """

    limit: int
    records: tuple[ClaimCheck, ...]
    n0: int | None
    cor_n0: int | None


def claim_scan(limit: int = 1 << 40) -> ClaimScan:
    """Scan powers of two and 3*2^(e-1) up to limit."""
    if limit < 2:
        raise ValueError("need limit >= 2")
    grid: set[int] = set()
    e = 1
    while (1 << e) <= limit:
        grid.add(1 << e)
        if e >= 2 and 3 << (e - 1) <= limit:
            grid.add(3 << (e - 1))
        e += 1
    if not grid:
        grid.add(2)
    records = tuple(claim_check(n) for n in sorted(grid))

    def onset(flags: list[bool]) -> int | None:
        start = None
        for rec, ok in zip(reversed(records), reversed(flags)):
            if not ok:
                break
            start = rec.n
        return start

    n0 = onset([r.holds for r in records])
    cor_n0 = onset([r.cor_holds for r in records])
    return ClaimScan(limit, records, n0, cor_n0)


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters for the random-tournament td_min experiment."""

    n: int
    trials: int
    seed: int
    k_override: int | None = None
    include_rtd_up_to: int = 0
    max_n: int = 64

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.trials < 1:
            raise ValueError("need at least one trial")


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    seed: int
    td_min: int
    nctd: int
    rtd: int | None = None


@dataclass(frozen=True)
class TdminSummary:
    n: int
    trials: int
    seed: int
    counts: tuple[tuple[int, int], ...]  # (td_min value, multiplicity), ascending
    minimum: int
    mean: float
    maximum: int
    threshold: int
    fraction_below: float


def _trial_record(args: tuple[int, int, int, bool]) -> TrialRecord:
    n, master_seed, trial, with_rtd = args
    trial_seed = stream(master_seed, trial)
    g = random_tournament(n, trial_seed)
    k1 = class1(g)
    td = td_min(k1)
    nc = nctd(k1).d
    assert nc is not None
    r = rtd(k1) if with_rtd else None
    return TrialRecord(trial, trial_seed, td, nc, r)


def run_tdmin_experiment(cfg: ExperimentConfig, jobs: int = 1) -> tuple[tuple[TrialRecord, ...], TdminSummary]:
    """td_min and nctd of class1 over cfg.trials random tournaments.

    Deterministic for a given config; records come back ordered by trial
    index whatever the job count.
    """
    if cfg.n > cfg.max_n:
        raise BudgetError(f"exact td_min budget is n <= {cfg.max_n}, got n={cfg.n}")
    with_rtd = cfg.n <= cfg.include_rtd_up_to
    args = [(cfg.n, cfg.seed, i, with_rtd) for i in range(cfg.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = tuple(pool.map(_trial_record, args))
    else:
        records = tuple(_trial_record(a) for a in args)
    values = [r.td_min for r in records]
    counter = Counter(values)
    k = cfg.k_override if cfg.k_override is not None else threshold_k(cfg.n).k
    below = sum(1 for v in values if v < k)
    summary = TdminSummary(
        cfg.n, cfg.trials, cfg.seed,
        tuple(sorted(counter.items())),
        min(values), sum(values) / len(values), max(values),
        k, below / len(values),
    )
    return records, summary


def pattern_count(g: Tournament, s, b) -> int:
    """Concepts of class1(g) matching bit pattern b on the sorted instances of s."""
    inst = sorted(set(s))
    bits = list(b)
    if len(bits) != len(inst):
        raise ValueError(f"pattern has {len(bits)} bits for {len(inst)} instances")
    smask = instances_to_mask(inst, g.n)
    pat = 0
    for x, bit in zip(inst, bits):
        if bit not in (0, 1):
            raise ValueError("pattern bits must be 0 or 1")
        if bit:
            pat |= 1 << (x - 1)
    return sum(1 for m in class1(g).masks if m & smask == pat)


@dataclass(frozen=True)
class PatternReport:
    """Pattern statistics of class1(g) at one sample size k.

    unique_exists (some (S, b) matched by exactly one concept) is equivalent
    to td_min(class1(g)) <= k.  min_count minimizes over all 2^k patterns
    per S including unmatched ones; min_realized only over matched ones, so
    min_count >= 2 is strictly stronger than the absence of unique patterns.
    """

    n: int
    k: int
    min_count: int
    min_realized: int
    unique_exists: bool


def pattern_report(g: Tournament, k: int) -> PatternReport:
    if not 0 <= k <= g.n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    masks = class1(g).masks
    min_count: int | None = None
    min_realized: int | None = None
    unique = False
    for combo in itertools.combinations(range(g.n), k):
        smask = 0
        for x in combo:
            smask |= 1 << x
        buckets = Counter(m & smask for m in masks)
        realized = min(buckets.values())
        overall = realized if len(buckets) == (1 << k) else 0
        if min_realized is None or realized < min_realized:
            min_realized = realized
        if min_count is None or overall < min_count:
            min_count = overall
        if realized == 1:
            unique = True
    assert min_count is not None and min_realized is not None
    return PatternReport(g.n, k, min_count, min_realized, unique)


@dataclass(frozen=True)
class Dim1Report:
    """Outcome of the exhaustive dimension-1 characterization at one n."""

    n: int
    candidates: int
    passing: frozenset[frozenset[int]]
    expected: frozenset[frozenset[int]]
    complement_closed: bool

    @property
    def ok(self) -> bool:
        return self.passing == self.expected


def verify_dim1(n: int, prefilter: bool = False) -> Dim1Report:
    """Enumerate all 2n-concept classes over [n]; compare the order-1 admissible
    ones against the tournament-induced classes.

    prefilter skips classes not closed under complementation (a necessary
    condition); the default decides every class, which is slower and
    assumption-free.
    """
    if not 1 <= n <= 4:
        raise BudgetError(f"enumeration over C(2^n, 2n) classes is budgeted for n <= 4, got {n}")
    size = 2 * n
    total = 1 << n
    full = total - 1
    candidates = 0
    passing: set[frozenset[int]] = set()
    if size <= total:
        for combo in itertools.combinations(range(total), size):
            if prefilter:
                cs = set(combo)
                if any((full ^ m) not in cs for m in combo):
                    continue
            candidates += 1
            if decide_order(list(combo), n, 1) is not None:
                passing.add(frozenset(combo))
    expected = frozenset(frozenset(class2(g).masks) for g in all_tournaments(n))
    closed = all(all((full ^ m) in cls for m in cls) for cls in passing)
    return Dim1Report(n, candidates, frozenset(passing), expected, closed)


def _apply_perm(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        mask ^= low
        out |= 1 << perm[low.bit_length() - 1]
    return out


def _canonical_class(masks, n: int) -> tuple[int, ...]:
    """Least image of the class under all domain permutations."""
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(n)):
        img = tuple(sorted(_apply_perm(m, perm) for m in masks))
        if best is None or img < best:
            best = img
    assert best is not None
    return best


@dataclass(frozen=True)
class MaxClassResult:
    """Largest class size admitting an order-d teacher, with canonical witnesses."""

    n: int
    d: int
    status: str  # "exact" or "inconclusive"
    size: int | None
    witnesses: tuple[ConceptClass, ...]
    lower: int
    upper: int


def max_class_search(n: int, d: int, limit_n: int = 4, limit_d: int = 2) -> MaxClassResult:
    """Exact M_NC(n, d) by top-down enumeration from the counting bound.

    Removing concepts never raises NCTD, so the first size with any passing
    class is the maximum.  Beyond the (limit_n, limit_d) budget only the
    greedy lower-bound witness and the counting upper bound are reported.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    upper = min(1 << n, ksz_bound(n, d))
    greedy: list[int] = []
    for m in range(1 << n):
        if decide_order(greedy + [m], n, d) is not None:
            greedy.append(m)
    lower = len(greedy)
    greedy_class = ConceptClass.from_masks(greedy, n)
    if n > limit_n or d > limit_d:
        return MaxClassResult(n, d, "inconclusive", None, (greedy_class,), lower, upper)
    for size in range(upper, lower - 1, -1):
        passing = [combo for combo in itertools.combinations(range(1 << n), size)
                   if decide_order(list(combo), n, d) is not None]
        if passing:
            canon = sorted({_canonical_class(c, n) for c in passing})
            witnesses = tuple(ConceptClass.from_masks(c, n) for c in canon)
            return MaxClassResult(n, d, "exact", size, witnesses, size, size)
    raise AssertionError("greedy witness size is always attainable")


def _wilson_interval(hits: int, trials: int, z: float = 1.959963984540054) -> tuple[float, float]:
    p = hits / trials
    denom = 1.0 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z * z / (4.0 * trials * trials)) / denom
    # the interval provably contains p; the min/max only absorbs float noise
    # at the endpoints (hits = 0 or hits = trials)
    return max(0.0, min(center - half, p)), min(1.0, max(center + half, p))


@dataclass(frozen=True)
class TauReport:
    """Estimated probability that td_min stays at or below the shifted threshold."""

    n: int
    trials: int
    seed: int
    k: int
    k_source: str  # "threshold" or "override"
    vacuous: bool
    hits: int
    fraction: float
    ci_low: float
    ci_high: float


def tau_estimate(n: int, trials: int, seed: int, k_override: int | None = None,
                 max_n: int = 64) -> TauReport:
    """Fraction of random tournaments with td_min(class1) <= k, with a Wilson 95% CI.

    k defaults to floor(log2 n - 2 log2 log2(2n)) - 5; at desk scale that is
    negative, the event is empty, and the report is flagged vacuous without
    sampling.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if n > max_n:
        raise BudgetError(f"exact td_min budget is n <= {max_n}, got n={n}")
    if k_override is not None:
        k, source = k_override, "override"
    else:
        k, source = threshold_k(n, shift=5).k, "threshold"
    if k < 1:
        return TauReport(n, trials, seed, k, source, True, 0, 0.0, 0.0, 0.0)
    hits = 0
    for i in range(trials):
        g = random_tournament(n, stream(seed, i))
        if td_min(class1(g)) <= k:
            hits += 1
    lo, hi = _wilson_interval(hits, trials)
    return TauReport(n, trials, seed, k, source, False, hits, hits / trials, lo, hi)
