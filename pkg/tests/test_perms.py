"""Core permutation / pattern counting tests.

The naive oracle here enumerates all C(n, k) subsets directly and is kept
independent of the library's pruned search.
"""
import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from permutonlab.errors import InputError, PreconditionError
from permutonlab.perms import (
    Permutation,
    all_permutations,
    apply_symmetry,
    avoids,
    count_occurrences,
    format_permutation,
    identity,
    lis_length,
    parse_pattern,
    parse_permutation,
    pattern_of_points,
    pattern_of_values,
    reverse_identity,
)


def naive_count(pattern: Permutation, perm: Permutation) -> int:
    """Independent oracle: test every k-subset of positions."""
    k = pattern.order
    hits = 0
    for subset in itertools.combinations(perm.values, k):
        if pattern_of_values(subset).values == pattern.values:
            hits += 1
    return hits


def random_perm(rng: random.Random, n: int) -> Permutation:
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return Permutation(tuple(vals))


class TestPermutationType:
    def test_valid(self):
        p = Permutation((2, 1, 4, 3))
        assert p.order == 4
        assert p(1) == 2 and p(4) == 3

    def test_rejects_duplicates(self):
        with pytest.raises(InputError):
            Permutation((2, 2, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Permutation((1, 3))

    def test_rejects_empty(self):
        with pytest.raises(InputError):
            Permutation(())


class TestPatternOfPoints:
    def test_basic(self):
        assert pattern_of_points([(0.1, 0.5), (0.4, 0.2), (0.9, 0.7)]).values == (2, 1, 3)

    def test_singleton(self):
        assert pattern_of_points([(0.2, 0.9)]).values == (1,)

    def test_decreasing(self):
        assert pattern_of_points([(0.1, 0.3), (0.2, 0.2), (0.3, 0.1)]).values == (3, 2, 1)

    def test_rejects_duplicate_y(self):
        with pytest.raises(InputError):
            pattern_of_points([(0.1, 0.5), (0.2, 0.5)])

    def test_rejects_non_increasing_x(self):
        with pytest.raises(InputError):
            pattern_of_points([(0.5, 0.1), (0.5, 0.2)])

    def test_midpoint_placement_recovers_permutation(self):
        # Placing points at ((i-0.5)/n, (pi(i)-0.5)/n) must reproduce pi.
        rng = random.Random(7)
        for n in range(1, 11):
            p = random_perm(rng, n)
            pts = [(Fraction(2 * i - 1, 2 * n), Fraction(2 * p(i) - 1, 2 * n)) for i in range(1, n + 1)]
            assert pattern_of_points(pts) == p


class TestCountOccurrences:
    def test_132_in_1432(self):
        res = count_occurrences(Permutation((1, 3, 2)), Permutation((1, 4, 3, 2)))
        assert res.occurrences == 3
        assert res.total_subsets == 4
        assert res.density == Fraction(3, 4)

    def test_self_count(self):
        p = Permutation((3, 1, 4, 2))
        res = count_occurrences(p, p)
        assert res.occurrences == 1 and res.density == 1

    def test_adjacent_swap_inversions(self):
        res = count_occurrences(Permutation((2, 1)), Permutation((2, 1, 4, 3, 6, 5)))
        assert res.occurrences == 3
        assert res.density == Fraction(3, 15) == Fraction(1, 5)

    def test_k_greater_than_n_rejected(self):
        with pytest.raises(PreconditionError):
            count_occurrences(identity(4), identity(3))

    def test_matches_naive_oracle(self):
        rng = random.Random(123)
        for _ in range(120):
            n = rng.randint(2, 10)
            k = rng.randint(1, min(4, n))
            perm = random_perm(rng, n)
            pat = random_perm(rng, k)
            assert count_occurrences(pat, perm).occurrences == naive_count(pat, perm)

    def test_density_sums_to_one_over_patterns(self):
        rng = random.Random(5)
        for n, k in [(5, 2), (6, 3), (8, 3), (10, 4)]:
            perm = random_perm(rng, n)
            total = sum(count_occurrences(pat, perm).density for pat in all_permutations(k))
            assert total == 1

    def test_symmetry_equivariance(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(3, 9)
            k = rng.randint(2, 3)
            perm, pat = random_perm(rng, n), random_perm(rng, k)
            base = count_occurrences(pat, perm).occurrences
            for sym in ("inverse", "reverse", "complement"):
                assert count_occurrences(apply_symmetry(pat, sym), apply_symmetry(perm, sym)).occurrences == base


class TestAvoids:
    def test_examples(self):
        assert avoids(Permutation((1, 2, 3)), Permutation((3, 2, 1)))
        assert avoids(Permutation((2, 1)), identity(10))
        assert not avoids(Permutation((1, 3, 2)), Permutation((1, 4, 3, 2)))

    def test_agrees_with_count(self):
        rng = random.Random(99)
        for _ in range(80):
            n = rng.randint(3, 9)
            k = rng.randint(2, min(4, n))
            perm, pat = random_perm(rng, n), random_perm(rng, k)
            assert avoids(pat, perm) == (count_occurrences(pat, perm).occurrences == 0)

    def test_lis_shortcut_exhaustive(self):
        # Monotone-pattern shortcut must agree with plain enumeration on
        # every permutation of order <= 8 (subsampled only above order 6).
        rng = random.Random(3)
        for n in range(2, 9):
            perms = list(itertools.permutations(range(1, n + 1)))
            if n > 6:
                perms = rng.sample(perms, 1500)
            for vals in perms:
                perm = Permutation(vals)
                for k in range(2, min(4, n) + 1):
                    assert (lis_length(vals) < k) == (naive_count(identity(k), perm) == 0)
                    assert avoids(identity(k), perm) == (naive_count(identity(k), perm) == 0)
                    assert avoids(reverse_identity(k), perm) == (naive_count(reverse_identity(k), perm) == 0)


class TestSymmetries:
    def test_inverse(self):
        assert apply_symmetry(Permutation((2, 3, 1)), "inverse").values == (3, 1, 2)

    def test_reverse(self):
        assert apply_symmetry(identity(3), "reverse").values == (3, 2, 1)

    def test_involution_under_inverse(self):
        p = Permutation((1, 4, 3, 2))
        assert apply_symmetry(p, "inverse") == p

    def test_unknown_symmetry(self):
        with pytest.raises(InputError):
            apply_symmetry(identity(3), "rotate")


class TestParsing:
    def test_round_trip(self):
        rng = random.Random(1)
        for _ in range(20):
            p = random_perm(rng, rng.randint(1, 12))
            assert parse_permutation(format_permutation(p)) == p

    def test_spaces_and_commas(self):
        assert parse_permutation("2 1 4 3").values == (2, 1, 4, 3)
        assert parse_permutation("2,1,4,3").values == (2, 1, 4, 3)
        assert parse_permutation("1").values == (1,)

    def test_distinct_errors(self):
        with pytest.raises(InputError, match="duplicate"):
            parse_permutation("2 2 1")
        with pytest.raises(InputError, match="out of range"):
            parse_permutation("1 5 3")
        with pytest.raises(InputError, match="empty"):
            parse_permutation("   ")

    def test_pattern_literal(self):
        assert parse_pattern("132").values == (1, 3, 2)
        assert parse_pattern("1").values == (1,)
        assert parse_pattern("10,2,1,3,4,5,6,7,8,9").order == 10
