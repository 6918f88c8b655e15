"""Permutations in one-line notation, pattern containment and adjacent transpositions.

This package has a clean architecture. Hence, the entities depend on nothing outside
this package except the standard library and numpy.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

DEFAULT_AVOIDERS_CAP: int = 10


class PermGap(IntEnum):
    """Number of adjacent transpositions separating two permutations, capped at 2."""

    ZERO = 0
    ONE = 1
    TWO = 2
    MORE = 3

    def __str__(self) -> str:
        return "MORE" if self is PermGap.MORE else str(self.value)


@dataclass(frozen=True, order=True)
class Permutation:
    """For representing a permutation of {1, ..., n} in one-line notation.

    Attributes
    ----------
    values          : the images of 1, ..., n
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(
                f"not a permutation of 1..{len(self.values)}: {self.values}"
            )

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space-separated values, or a compact digit string for n <= 9."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation")
        try:
            if " " in text or "," in text:
                return cls(tuple(int(part) for part in text.replace(",", " ").split()))
            return cls(tuple(int(char) for char in text))
        except ValueError as ex:
            raise ValueError(f"not a permutation: {text!r} ({ex})") from ex

    @classmethod
    def identity(cls, size: int) -> Permutation:
        """Return 12...n."""
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def reversal(cls, size: int) -> Permutation:
        """Return n(n-1)...1."""
        return cls(tuple(range(size, 0, -1)))

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return " ".join(str(value) for value in self.values)

    def compact(self) -> str:
        """Return the digit string form, e.g. 54673821; only defined for n <= 9."""
        if len(self) > 9:
            raise ValueError("digit strings are ambiguous for permutations of size > 9")
        return "".join(str(value) for value in self.values)

    def swap(self, position: int) -> Permutation:
        """Return self with entries position and position + 1 (1-based) interchanged."""
        if not 1 <= position < len(self):
            raise ValueError(f"no adjacent transposition at position {position}")
        values = list(self.values)
        values[position - 1], values[position] = values[position], values[position - 1]
        return Permutation(tuple(values))


def standardize(seq: Sequence[int]) -> Permutation:
    """Replace the smallest value by 1, the second smallest by 2, and so on."""
    if len(set(seq)) != len(seq):
        raise ValueError(f"cannot standardize a sequence with repeated values: {seq}")
    ranks = {value: rank for rank, value in enumerate(sorted(seq), start=1)}
    return Permutation(tuple(ranks[value] for value in seq))


def contains_pattern(perm: Permutation, pattern: Permutation) -> bool:
    """Return True if some subsequence of perm standardizes to pattern.

    Brute force over all index subsets; meant for small sizes only.
    """
    if len(pattern) > len(perm):
        raise ValueError(f"pattern {pattern} is longer than {perm}")
    return any(
        standardize(subseq) == pattern
        for subseq in combinations(perm.values, len(pattern))
    )


def _same_order(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    return all(
        (seq[i] < seq[j]) == (pattern[i] < pattern[j])
        for i, j in combinations(range(len(seq)), 2)
    )


def _ends_with_pattern(prefix: Sequence[int], pattern: Permutation) -> bool:
    # only occurrences that use the last entry of prefix
    *head, last = prefix
    return any(
        _same_order((*subseq, last), pattern.values)
        for subseq in combinations(head, len(pattern) - 1)
    )


def iter_avoiders(size: int, patterns: Iterable[Permutation]) -> Iterator[Permutation]:
    """Yield the permutations of 1..size avoiding every pattern, lexicographically.

    Values are appended one at a time; a prefix that already contains a pattern is
    not extended.
    """
    forbidden = tuple(patterns)
    if any(not pattern.values for pattern in forbidden):
        return

    def extend(prefix: list[int], unused: list[int]) -> Iterator[Permutation]:
        if not unused:
            yield Permutation(tuple(prefix))
            return
        for value in unused:
            prefix.append(value)
            if not any(_ends_with_pattern(prefix, pattern) for pattern in forbidden):
                yield from extend(prefix, [other for other in unused if other != value])
            prefix.pop()

    yield from extend([], list(range(1, size + 1)))


def enumerate_avoiders(
    size: int,
    patterns: Iterable[Permutation],
    cap: int = DEFAULT_AVOIDERS_CAP,
) -> list[Permutation]:
    """Return the permutations of 1..size avoiding every pattern, lexicographically."""
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if size > cap:
        raise ValueError(f"exhaustive enumeration is limited to size {cap}, got {size}")
    return list(iter_avoiders(size, patterns))


def _adjacent_swaps(perm: Permutation) -> Iterator[Permutation]:
    for position in range(1, len(perm)):
        yield perm.swap(position)


def _one_swap_apart(first: Permutation, second: Permutation) -> bool:
    diff = [i for i, (a, b) in enumerate(zip(first.values, second.values)) if a != b]
    return (
        len(diff) == 2
        and diff[1] == diff[0] + 1
        and first.values[diff[0]] == second.values[diff[1]]
        and first.values[diff[1]] == second.values[diff[0]]
    )


def perm_gap(first: Permutation, second: Permutation) -> PermGap:
    """Classify the number of adjacent transpositions between first and second."""
    if len(first) != len(second):
        raise ValueError(
            f"permutations of different size: {len(first)} and {len(second)}"
        )
    if first == second:
        return PermGap.ZERO
    if _one_swap_apart(first, second):
        return PermGap.ONE
    # two adjacent transpositions change at most four entries
    changed = sum(a != b for a, b in zip(first.values, second.values))
    if changed <= 4 and any(
        _one_swap_apart(middle, second) for middle in _adjacent_swaps(first)
    ):
        return PermGap.TWO
    return PermGap.MORE
