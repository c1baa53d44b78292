"""Brute-force pattern containment and avoider counting for one-line permutations.

Containment is classical: a permutation contains a pattern when some
subsequence is order-isomorphic to it.  Counting avoiders enumerates all m!
permutations and scans every index subset per pattern length, so it is an
oracle, deliberately independent of the path counters it cross-checks, and is
capped at a configurable exhaustive bound.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations as iter_permutations
from typing import Iterable, Sequence

from .paths import PathbijError

Permutation = tuple[int, ...]

# Avoiding these three length-4 patterns characterizes the permutations whose
# count matches the peak-limited Schroeder family one size down.
DEFAULT_PATTERNS: tuple[Permutation, ...] = ((3, 2, 4, 1), (3, 4, 2, 1), (4, 3, 2, 1))

MAX_EXHAUSTIVE = 9


class SizeTooLarge(PathbijError):
    """Exhaustive counting was asked for more elements than the configured bound."""


def parse_permutation(text: str) -> Permutation:
    """Parse a digit string like ``"3241"`` into one-line notation."""
    if not text.isdigit():
        raise ValueError(f"{text!r} is not a digit string")
    values = tuple(int(ch) for ch in text)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(values)}")
    return values


def parse_patterns(text: str) -> tuple[Permutation, ...]:
    """Parse a comma-separated pattern list like ``"3241,3421,4321"``."""
    chunks = [chunk.strip() for chunk in text.split(",") if chunk.strip()]
    return tuple(parse_permutation(chunk) for chunk in chunks)


def rank_signature(values: Sequence[int]) -> Permutation:
    """One-line pattern of a sequence of distinct values (ranks start at 1)."""
    ordered = sorted(values)
    return tuple(ordered.index(v) + 1 for v in values)


def contains_pattern(perm: Sequence[int], pat: Sequence[int]) -> bool:
    """Classical containment: some subsequence of perm is order-isomorphic to pat."""
    k = len(pat)
    if k > len(perm):
        return False
    target = tuple(pat)
    return any(rank_signature(sub) == target for sub in combinations(tuple(perm), k))


def _contains_quad(perm: Permutation, pats: frozenset[Permutation]) -> bool:
    # Inlined rank computation for the common all-length-4 case; subsets of a
    # permutation tuple come out in positional order, i.e. as subsequences.
    for a, b, c, d in combinations(perm, 4):
        if (
            1 + (a > b) + (a > c) + (a > d),
            1 + (b > a) + (b > c) + (b > d),
            1 + (c > a) + (c > b) + (c > d),
            1 + (d > a) + (d > b) + (d > c),
        ) in pats:
            return True
    return False


def count_avoiders(
    m: int,
    patterns: Iterable[Sequence[int]] = DEFAULT_PATTERNS,
    max_exhaustive: int = MAX_EXHAUSTIVE,
) -> int:
    """Count permutations of [m] containing none of the patterns, by full enumeration."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > max_exhaustive:
        raise SizeTooLarge(f"m={m} exceeds the exhaustive bound {max_exhaustive}")
    pats = frozenset(tuple(p) for p in patterns)
    if not pats:
        return math.factorial(m)
    lengths = sorted({len(p) for p in pats})
    count = 0
    if lengths == [4]:
        for perm in iter_permutations(range(1, m + 1)):
            if not _contains_quad(perm, pats):
                count += 1
        return count
    by_length = {k: frozenset(p for p in pats if len(p) == k) for k in lengths}
    for perm in iter_permutations(range(1, m + 1)):
        if not any(
            rank_signature(sub) in of_len
            for k, of_len in by_length.items()
            if k <= m
            for sub in combinations(perm, k)
        ):
            count += 1
    return count
