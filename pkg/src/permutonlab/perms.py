"""Permutations, pattern occurrence counting, densities, and symmetries.

A permutation of order ``n`` is stored in one-line notation as a tuple of the
values ``(pi(1), ..., pi(n))``, 1-based. A *pattern* is just a permutation of
small order ``k``; a k-subset of positions of ``pi`` induces the pattern whose
values have the same relative order as the selected entries.
"""
from __future__ import annotations

import itertools
import re
from bisect import bisect_left, insort
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InputError, PreconditionError

__all__ = [
    "Permutation",
    "PatternCount",
    "identity",
    "reverse_identity",
    "all_permutations",
    "pattern_of_points",
    "pattern_of_values",
    "count_occurrences",
    "avoids",
    "apply_symmetry",
    "lis_length",
    "lds_length",
    "parse_permutation",
    "parse_pattern",
    "format_permutation",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in one-line notation.

    >>> Permutation((2, 1, 3)).order
    3
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise InputError("a permutation must have order n >= 1")
        seen = [False] * n
        for v in self.values:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise InputError(f"value {v!r} out of range 1..{n}")
            if seen[v - 1]:
                raise InputError(f"duplicate value {v}")
            seen[v - 1] = True

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"position {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({''.join(map(str, self.values)) if len(self) <= 9 else self.values})"


@dataclass(frozen=True)
class PatternCount:
    """Exact occurrence count of a pattern: ``density == occurrences / total_subsets``."""

    occurrences: int
    total_subsets: int
    density: Fraction

    def __post_init__(self) -> None:
        assert 0 <= self.occurrences <= self.total_subsets
        assert self.density == Fraction(self.occurrences, self.total_subsets)


def identity(n: int) -> Permutation:
    """The identity permutation of order n."""
    return Permutation(tuple(range(1, n + 1)))


def reverse_identity(n: int) -> Permutation:
    """The decreasing permutation (n, n-1, ..., 1)."""
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(k: int) -> Iterator[Permutation]:
    """All permutations of order k in lexicographic order."""
    for vals in itertools.permutations(range(1, k + 1)):
        yield Permutation(vals)


def pattern_of_values(values: Sequence) -> Permutation:
    """Pattern induced by a sequence of pairwise-distinct comparable values.

    >>> pattern_of_values((0.5, 0.2, 0.7)).values
    (2, 1, 3)
    """
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return Permutation(tuple(ranks))


def pattern_of_points(points: Sequence[tuple]) -> Permutation:
    """Permutation induced by points (x_i, y_i): value at i is #{j : y_j <= y_i}.

    Rejects configurations with non-increasing x or duplicate y; such
    configurations induce no unique pattern.
    """
    if len(points) == 0:
        raise InputError("empty point configuration")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    for x0, x1 in zip(xs, xs[1:]):
        if not x0 < x1:
            raise InputError("x-coordinates must be strictly increasing")
    if len(set(ys)) != len(ys):
        raise InputError("duplicate y-coordinate in point configuration")
    return pattern_of_values(ys)


def _rank_profile(values: tuple[int, ...]) -> tuple[int, ...]:
    """rank_profile[m] = 1-based rank of values[m] among values[:m+1]."""
    sorted_prefix: list[int] = []
    profile = []
    for v in values:
        r = bisect_left(sorted_prefix, v)
        insort(sorted_prefix, v)
        profile.append(r + 1)
    return tuple(profile)


def _count_inversions(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j], by merge counting."""
    seq = list(seq)
    if len(seq) < 2:
        return 0
    buf = [0] * len(seq)
    count = 0
    width = 1
    n = len(seq)
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if seq[i] <= seq[j]:
                    buf[k] = seq[i]
                    i += 1
                else:
                    buf[k] = seq[j]
                    count += mid - i
                    j += 1
                k += 1
            buf[k:hi] = seq[i:mid] if i < mid else seq[j:hi]
            seq[lo:hi] = buf[lo:hi]
        width *= 2
    return count


def _occurrences_dfs(pattern: tuple[int, ...], values: tuple[int, ...], stop_at_first: bool) -> int:
    """Count k-subsets of positions inducing ``pattern``, by pruned DFS.

    Positions are chosen left to right; a branch dies as soon as the chosen
    prefix stops being order-isomorphic to the pattern prefix.
    """
    k, n = len(pattern), len(values)
    target = _rank_profile(pattern)
    count = 0
    chosen_sorted: list[int] = []

    def extend(depth: int, start: int) -> bool:
        nonlocal count
        if depth == k:
            count += 1
            return stop_at_first
        # not enough positions left to complete the pattern
        for pos in range(start, n - (k - depth) + 1):
            v = values[pos]
            r = bisect_left(chosen_sorted, v)
            if r + 1 != target[depth]:
                continue
            insort(chosen_sorted, v)
            done = extend(depth + 1, pos + 1)
            chosen_sorted.pop(bisect_left(chosen_sorted, v))
            if done:
                return True
        return False

    extend(0, 0)
    return count


def count_occurrences(pattern: Permutation, perm: Permutation) -> PatternCount:
    """Exact number of k-subsets of positions of ``perm`` inducing ``pattern``.

    Uses a dedicated merge-based inversion counter for the order-2 patterns
    and pruned depth-first enumeration otherwise. All arithmetic is exact.

    >>> count_occurrences(Permutation((1, 3, 2)), Permutation((1, 4, 3, 2))).occurrences
    3
    """
    k, n = pattern.order, perm.order
    if k > n:
        raise PreconditionError(f"pattern order {k} exceeds permutation order {n}")
    total = comb(n, k)
    if pattern.values == (2, 1):
        occ = _count_inversions(perm.values)
    elif pattern.values == (1, 2):
        occ = comb(n, 2) - _count_inversions(perm.values)
    else:
        occ = _occurrences_dfs(pattern.values, perm.values, stop_at_first=False)
    return PatternCount(occ, total, Fraction(occ, total))


def lis_length(values: Sequence[int]) -> int:
    """Length of the longest (strictly) increasing subsequence, via patience sorting."""
    piles: list[int] = []
    for v in values:
        i = bisect_left(piles, v)
        if i == len(piles):
            piles.append(v)
        else:
            piles[i] = v
    return len(piles)


def lds_length(values: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    return lis_length([-v for v in values])


def avoids(pattern: Permutation, perm: Permutation) -> bool:
    """True iff ``perm`` contains no occurrence of ``pattern``.

    Monotone patterns are decided by longest increasing/decreasing
    subsequence length (O(n log n)); the general case runs the pruned
    search with early exit.
    """
    k, n = pattern.order, perm.order
    if k > n:
        raise PreconditionError(f"pattern order {k} exceeds permutation order {n}")
    if pattern.values == identity(k).values:
        return lis_length(perm.values) < k
    if pattern.values == reverse_identity(k).values:
        return lds_length(perm.values) < k
    return _occurrences_dfs(pattern.values, perm.values, stop_at_first=True) == 0


def apply_symmetry(perm: Permutation, which: str) -> Permutation:
    """Apply one of the classical symmetries.

    inverse:    out(pi(i)) = i
    reverse:    out(i) = pi(n+1-i)
    complement: out(i) = n+1-pi(i)
    """
    n = perm.order
    if which == "inverse":
        out = [0] * n
        for i, v in enumerate(perm.values, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))
    if which == "reverse":
        return Permutation(tuple(reversed(perm.values)))
    if which == "complement":
        return Permutation(tuple(n + 1 - v for v in perm.values))
    raise InputError(f"unknown symmetry {which!r} (expected inverse, reverse, or complement)")


_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace- or comma-separated 1-based values.

    >>> parse_permutation("2 1 4 3").values
    (2, 1, 4, 3)
    """
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    if not tokens:
        raise InputError("empty permutation input")
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise InputError(f"not an integer: {t!r}") from None
    return Permutation(tuple(values))


def parse_pattern(text: str) -> Permutation:
    """Parse a pattern literal.

    Concatenated digits ("132") are accepted for order <= 9; beyond that the
    separated form of :func:`parse_permutation` is required, since multi-digit
    values would be ambiguous.
    """
    text = text.strip()
    if not text:
        raise InputError("empty pattern input")
    if text.isdigit():
        return Permutation(tuple(int(c) for c in text))
    return parse_permutation(text)


def format_permutation(perm: Permutation) -> str:
    """One-line text form: values separated by single spaces."""
    return " ".join(str(v) for v in perm.values)
