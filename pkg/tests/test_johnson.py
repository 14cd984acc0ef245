"""Extremal families in Johnson graphs.

Vertices of J(n, k) are the k-subsets of [n]; two are adjacent when they
meet in k-1 points.  H_t(n, k) is the largest family with at most t
members inside any (k+1)-subset, i.e. with no narrow (t+1)-clique.
"""

import functools
import itertools
import random
from fractions import Fraction
from math import comb, floor

import pytest

from teachlab import (
    BudgetError,
    CliqueClass,
    FormatError,
    KSetFamily,
    classify_clique,
    complement_family,
    h_max,
    h_ratio,
    johnson_adjacent,
    narrow_clique_free,
    narrow_cliques,
    parse_family,
    restrict_family,
    serialize_family,
)

from oracles import brute_h_max

# the hard instances near n=7 take seconds each; share them across tests
_h_max = functools.lru_cache(maxsize=None)(h_max)


def test_adjacency():
    assert johnson_adjacent({1, 2}, {1, 3})
    assert not johnson_adjacent({1, 2}, {3, 4})
    assert not johnson_adjacent({1, 2}, {1, 2})
    assert johnson_adjacent({1, 2, 3}, {1, 2, 4})


def test_classify_clique_examples():
    # common intersection of size k-1: wide; union of size k+1: narrow
    assert classify_clique([{1, 2, 3}, {1, 2, 4}, {1, 2, 5}]) is CliqueClass.WIDE
    assert classify_clique([{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}]) is CliqueClass.NARROW
    assert classify_clique([{1, 2, 3}, {1, 2, 4}]) is CliqueClass.BOTH
    assert classify_clique([{1, 2, 3}]) is CliqueClass.NEITHER


def test_classify_clique_every_triangle_is_wide_or_narrow():
    # in any Johnson graph a triangle has a 2-point core or a 4-point span
    n, k = 6, 3
    verts = [frozenset(s) for s in itertools.combinations(range(1, n + 1), k)]
    for a, b, c in itertools.combinations(verts, 3):
        if johnson_adjacent(a, b) and johnson_adjacent(a, c) and johnson_adjacent(b, c):
            assert classify_clique([a, b, c]) in (CliqueClass.WIDE, CliqueClass.NARROW)


def test_classify_clique_rejects_non_cliques():
    with pytest.raises(ValueError):
        classify_clique([])
    with pytest.raises(ValueError):
        classify_clique([{1, 2}, {1, 2}])
    with pytest.raises(ValueError):
        classify_clique([{1, 2}, {3, 4}])


def test_narrow_cliques_enumerates_k_plus_1_subsets():
    for n, k in ((4, 2), (5, 2), (5, 3), (6, 3)):
        cliques = list(narrow_cliques(n, k))
        assert len(cliques) == comb(n, k + 1)
        for q in cliques:
            assert len(q) == k + 1
            assert classify_clique(q) in (CliqueClass.NARROW, CliqueClass.BOTH)


def test_narrow_clique_free_definition():
    f = KSetFamily(4, 2, frozenset({frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})}))
    # the triangle {1,2},{1,3},{2,3} sits inside {1,2,3}
    assert not narrow_clique_free(f, 2)
    assert narrow_clique_free(f, 3)


FROZEN_H = {
    # (n, k, t): value
    (3, 2, 2): 2,
    (4, 2, 2): 4,
    (5, 2, 2): 6,
    (6, 2, 2): 9,
    (7, 2, 2): 12,
    (6, 3, 2): 10,
    (7, 3, 2): 15,
    (7, 3, 3): 23,
    (7, 4, 2): 14,
    (7, 4, 3): 21,
}


def test_h_max_frozen_values():
    for (n, k, t), want in FROZEN_H.items():
        res = _h_max(n, k, t)
        assert res.status == "exact", (n, k, t)
        assert res.size == want, (n, k, t)
        assert narrow_clique_free(res.witness, t)
        assert len(res.witness.members) == want


def test_h_max_degenerate_rows():
    # a single k-set is the whole graph when n = k
    for k in range(1, 7):
        for t in range(1, k + 1):
            assert h_max(k, k, t).size == 1
    # at n = k+1 every pair is adjacent and the one narrow clique is everything
    for k in range(1, 7):
        for t in range(1, k + 1):
            assert h_max(k + 1, k, t).size == t


def test_h_max_matches_triangle_free_bipartite_count():
    # k = 2, t = 2 forbids triangles; the extremal edge count is floor(n^2/4)
    for n in (3, 4, 5, 6, 7):
        assert h_max(n, 2, 2).size == floor(n * n / 4)


def test_h_max_matches_bruteforce():
    for n in range(2, 6):
        for k in range(1, n + 1):
            for t in range(1, k + 1):
                res = h_max(n, k, t)
                assert res.status == "exact"
                assert res.size == brute_h_max(n, k, t), (n, k, t)


def test_h_max_rejects_bad_parameters():
    with pytest.raises(ValueError):
        h_max(2, 1, 2)
    with pytest.raises(ValueError):
        h_max(3, 4, 2)
    with pytest.raises(ValueError):
        h_max(3, 2, 0)


def test_h_max_counting_upper_bound():
    # t members per (k+1)-subset, each k-set inside n-k of them
    for (n, k, t), want in FROZEN_H.items():
        assert want * (n - k) <= t * comb(n, k + 1)


def test_h_max_witness_is_colex_least_for_smallest_case():
    res = h_max(3, 2, 2)
    assert res.witness.members == frozenset({frozenset({1, 2}), frozenset({1, 3})})


def test_h_ratio_values_and_monotonicity():
    assert h_ratio(3, 2, 2) == Fraction(2, 3)
    # the normalized density h = H / C(n, k) is nonincreasing in n
    for k, t, n_hi in ((2, 2, 8), (3, 2, 7), (3, 3, 7), (4, 2, 7), (4, 3, 7)):
        chain = [Fraction(_h_max(n, k, t).size, comb(n, k)) for n in range(k + 1, n_hi + 1)]
        assert chain[0] == h_ratio(k + 1, k, t) == Fraction(t, k + 1)
        assert all(a >= b for a, b in zip(chain, chain[1:])), (k, t, chain)


def test_h_ratio_budget_error_when_inexact():
    with pytest.raises(BudgetError):
        h_ratio(12, 3, 2, exact_limit=10)


def test_h_max_inconclusive_when_over_limit():
    res = h_max(12, 3, 2, exact_limit=10)
    assert res.status == "inconclusive"
    assert res.lower <= res.upper
    assert res.witness is not None
    assert narrow_clique_free(res.witness, 2)
    assert len(res.witness.members) == res.lower


def test_restrict_family_deletes_a_point():
    f = h_max(5, 3, 2).witness
    for i in range(1, 6):
        g = restrict_family(f, i)
        assert g.n == f.n - 1 and g.k == f.k
        assert len(g.members) == sum(1 for s in f.members if i not in s)
        # labels above i shift down; restricting at n is the identity on labels
        want = frozenset(
            frozenset(x if x < i else x - 1 for x in s) for s in f.members if i not in s
        )
        assert g.members == want
    with pytest.raises(ValueError):
        restrict_family(f, 6)
    with pytest.raises(ValueError):
        restrict_family(h_max(3, 3, 1).witness, 1)


def test_restrict_preserves_narrow_clique_freeness():
    rng = random.Random(2)
    for _ in range(30):
        n, k, t = 6, 3, rng.choice([2, 3])
        verts = [frozenset(s) for s in itertools.combinations(range(1, n + 1), k)]
        fam = KSetFamily(n, k, frozenset(rng.sample(verts, rng.randint(1, 12))))
        if not narrow_clique_free(fam, t):
            continue
        i = rng.randint(1, n)
        assert narrow_clique_free(restrict_family(fam, i), t)


def test_complement_family_involution():
    f = h_max(5, 2, 2).witness
    g = complement_family(f)
    assert g.n == 5 and g.k == 3
    assert complement_family(g).members == f.members


def test_family_serialization_round_trip():
    f = h_max(6, 3, 2).witness
    text = serialize_family(f)
    back = parse_family(text, 6)
    assert back.members == f.members and back.k == f.k
    assert serialize_family(back) == text


def test_serialize_family_is_sorted_ascending():
    f = h_max(4, 2, 2).witness
    lines = serialize_family(f).splitlines()
    assert lines == sorted(lines, key=lambda s: tuple(reversed([int(x) for x in s.split()])))
    for line in lines:
        xs = [int(x) for x in line.split()]
        assert xs == sorted(xs)


@pytest.mark.parametrize(
    "text",
    [
        "1 2\n1\n",  # mixed sizes
        "1 1\n",  # repeated element
        "1 9\n",  # out of range for n=4
        "1 2\n1 2\n",  # duplicate member
        "a b\n",  # not integers
    ],
)
def test_parse_family_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse_family(text, 4)


def test_parse_family_empty_text_rejected():
    with pytest.raises(FormatError):
        parse_family("", 4)
