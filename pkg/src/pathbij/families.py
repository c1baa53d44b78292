"""Exhaustive enumerators and exact counters for the two path families.

The enumerate_* functions walk the step tree depth-first with children in
D < F < U order, pruning any prefix that cannot return to ground within the
remaining width, so the output is duplicate-free and ASCII-sorted by
construction.  The count_* functions answer the same cardinality questions
without enumeration: a column-by-column dynamic program over path prefixes
with Python's native big integers.  Counting a prefix table once gives the
counts for every size up to a bound, which is what the *_series variants
return; the single-size functions just read off the last entry.
"""

from __future__ import annotations

from collections import defaultdict
from typing import NamedTuple

from .paths import DOWN, FLAT, UP, Path, is_indecomposable, peak_apexes


def enumerate_class_a(n: int, flat_line: int = 2) -> list[Path]:
    """All size-n grand Schroeder paths with every flatstep on y = flat_line, sorted."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    out: list[Path] = []
    steps: list[str] = []

    # rem is the unused width in half-units; a prefix at height h can still
    # reach (2n, 0) iff |h| <= rem (parity works out automatically).
    def extend(h: int, rem: int) -> None:
        if rem == 0:
            out.append(Path("".join(steps)))
            return
        if abs(h - 1) < rem:
            steps.append(DOWN)
            extend(h - 1, rem - 1)
            steps.pop()
        if h == flat_line and abs(h) <= rem - 2:
            steps.append(FLAT)
            extend(h, rem - 2)
            steps.pop()
        if abs(h + 1) < rem:
            steps.append(UP)
            extend(h + 1, rem - 1)
            steps.pop()

    extend(0, 2 * n)
    return out


def enumerate_class_b(n: int) -> list[Path]:
    """All size-n Schroeder paths with at most one peak per component, sorted."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    out: list[Path] = []
    steps: list[str] = []

    # peak_used tracks whether the open component already spent its peak;
    # both flags reset when a step lands on ground (component boundary).
    def extend(h: int, rem: int, last_up: bool, peak_used: bool) -> None:
        if rem == 0:
            out.append(Path("".join(steps)))
            return
        if h >= 1 and not (last_up and peak_used):
            steps.append(DOWN)
            if h == 1:
                extend(0, rem - 1, False, False)
            else:
                extend(h - 1, rem - 1, False, peak_used or last_up)
            steps.pop()
        if h <= rem - 2:
            steps.append(FLAT)
            extend(h, rem - 2, False, peak_used)
            steps.pop()
        if h + 1 < rem:
            steps.append(UP)
            extend(h + 1, rem - 1, True, peak_used)
            steps.pop()

    extend(0, 2 * n, False, False)
    return out


def count_class_a_series(max_n: int, flat_line: int = 2) -> list[int]:
    """Exact counts for every size 0..max_n from one DP pass over prefix width and height."""
    if max_n < 0:
        raise ValueError("size must be nonnegative")
    width = 2 * max_n
    cols: list[dict[int, int]] = [defaultdict(int) for _ in range(width + 1)]
    cols[0][0] = 1
    for x in range(width):
        rem = width - x
        for h, c in cols[x].items():
            if abs(h + 1) < rem:
                cols[x + 1][h + 1] += c
            if abs(h - 1) < rem:
                cols[x + 1][h - 1] += c
            if h == flat_line and abs(h) <= rem - 2:
                cols[x + 2][h] += c
    return [cols[2 * i].get(0, 0) for i in range(max_n + 1)]


def count_class_b_series(max_n: int) -> list[int]:
    """Exact counts for every size 0..max_n; DP state is (height, last step up, peak used)."""
    if max_n < 0:
        raise ValueError("size must be nonnegative")
    width = 2 * max_n
    start = (0, False, False)
    cols: list[dict[tuple[int, bool, bool], int]] = [defaultdict(int) for _ in range(width + 1)]
    cols[0][start] = 1
    for x in range(width):
        rem = width - x
        for (h, last_up, peak_used), c in cols[x].items():
            if h + 1 < rem:
                cols[x + 1][(h + 1, True, peak_used)] += c
            if h >= 1 and not (last_up and peak_used):
                nxt = start if h == 1 else (h - 1, False, peak_used or last_up)
                cols[x + 1][nxt] += c
            if h <= rem - 2:
                cols[x + 2][(h, False, peak_used)] += c
    return [cols[2 * i].get(start, 0) for i in range(max_n + 1)]


def count_class_a(n: int, flat_line: int = 2) -> int:
    """|enumerate_class_a(n, flat_line)| without enumerating."""
    return count_class_a_series(n, flat_line)[n]


def count_class_b(n: int) -> int:
    """|enumerate_class_b(n)| without enumerating."""
    return count_class_b_series(n)[n]


class Census(NamedTuple):
    below_a: int
    above_a: int
    nopeak_b: int
    onepeak_b: int


def indec_census(n: int) -> Census:
    """Indecomposable counts: flat-line grand paths by side, peak-limited paths by peak count."""
    if n < 1:
        raise ValueError("the census is defined for sizes >= 1")
    below = above = 0
    for p in enumerate_class_a(n):
        if is_indecomposable(p):
            if p.steps[0] == DOWN:
                below += 1
            else:
                above += 1
    nopeak = onepeak = 0
    for q in enumerate_class_b(n):
        if is_indecomposable(q):
            if peak_apexes(q):
                onepeak += 1
            else:
                nopeak += 1
    return Census(below, above, nopeak, onepeak)
