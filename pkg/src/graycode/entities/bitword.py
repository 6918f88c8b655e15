"""Binary words of fixed length and the augmentation graph G(n).

Two words of length n are adjacent in G(n) when they differ in position 1 only, or when
one is obtained from the other by interchanging a 0 and a 1 in adjacent positions.

Positions are numbered from 1 at the left. A word is also represented by its code, the
integer whose binary representation (n digits, most significant first) is the word, so
that position 1 is bit n-1 and appending a suffix is a left shift.

This package has a clean architecture. Hence, the entities depend on nothing outside
this package except the standard library and numpy.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np
import numpy.typing as npt

DEFAULT_BFS_CAP: int = 14

CodeArray = npt.NDArray[np.uint64]


class Gap(IntEnum):
    """Classification of the distance between two words of G(n)."""

    ZERO = 0
    ONE = 1
    TWO = 2
    MORE = 3

    def __str__(self) -> str:
        return "MORE" if self is Gap.MORE else str(self.value)


@dataclass(frozen=True, order=True)
class BinaryWord:
    """A vertex of G(n).

    Attributes
    ----------
    bits            : the entries, position 1 first
    """

    bits: tuple[int, ...]
    code: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.bits:
            raise ValueError("a binary word has length at least 1")
        if any(bit not in (0, 1) for bit in self.bits):
            raise ValueError(f"a binary word has entries 0 and 1 only, got {self.bits}")
        # because frozen=True, we need to use __setattr__ here:
        object.__setattr__(self, "code", int("".join(str(bit) for bit in self.bits), 2))

    @classmethod
    def parse(cls, text: str) -> BinaryWord:
        """Return the word written as a string over '0' and '1', position 1 leftmost."""
        if not text or any(char not in "01" for char in text):
            raise ValueError(f"not a binary word: {text!r}")
        return cls(tuple(int(char) for char in text))

    @classmethod
    def from_code(cls, code: int, length: int) -> BinaryWord:
        """Return the word of the given length whose code is code."""
        if length < 1 or not 0 <= code < (1 << length):
            raise ValueError(f"code {code} does not fit a word of length {length}")
        return cls(tuple((code >> (length - 1 - pos)) & 1 for pos in range(length)))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    def extend(self, suffix: str) -> BinaryWord:
        """Return the concatenation of self and the binary string suffix."""
        return BinaryWord.parse(str(self) + suffix)


def zeros(length: int) -> BinaryWord:
    """Return 00...0."""
    return BinaryWord((0,) * length)


def ones(length: int) -> BinaryWord:
    """Return 11...1."""
    return BinaryWord((1,) * length)


def with_ones_at(length: int, positions: Iterable[int]) -> BinaryWord:
    """Return the word of the given length with ones exactly at the 1-based positions.

    For example with_ones_at(5, (1, 5)) is 10001.
    """
    bits = [0] * length
    for pos in positions:
        if not 1 <= pos <= length:
            raise ValueError(f"position {pos} outside a word of length {length}")
        bits[pos - 1] = 1
    return BinaryWord(tuple(bits))


def vertices(length: int) -> Iterator[BinaryWord]:
    """Yield all 2^length words in lexicographic order."""
    if length < 1:
        raise ValueError(f"word length must be positive, got {length}")
    for code in range(1 << length):
        yield BinaryWord.from_code(code, length)


def _check_lengths(first: BinaryWord, second: BinaryWord) -> int:
    if len(first) != len(second):
        raise ValueError(
            f"words of different length: {first} ({len(first)}) "
            f"and {second} ({len(second)})"
        )
    return len(first)


def _neighbor_codes(code: int, length: int) -> list[int]:
    # rule 1 first, then the swaps from the right end
    result = [code ^ (1 << (length - 1))]
    for low in range(length - 1):
        if ((code >> low) ^ (code >> (low + 1))) & 1:
            result.append(code ^ (3 << low))
    return result


def _adjacent_codes(first: int, second: int, length: int) -> bool:
    diff = first ^ second
    if diff == 1 << (length - 1):
        return True
    lowest = diff & -diff
    if diff == 0 or diff != 3 * lowest:
        return False
    # the two positions must hold a 0 and a 1
    return (first & diff) not in (0, diff)


def adjacent(first: BinaryWord, second: BinaryWord) -> bool:
    """Return True if first and second are adjacent in G(n)."""
    length = _check_lengths(first, second)
    return _adjacent_codes(first.code, second.code, length)


def neighbors(word: BinaryWord) -> set[BinaryWord]:
    """Return the neighborhood of word in G(n)."""
    length = len(word)
    return {
        BinaryWord.from_code(code, length)
        for code in _neighbor_codes(word.code, length)
    }


def gap(first: BinaryWord, second: BinaryWord) -> Gap:
    """Classify the distance between first and second without a graph search.

    A distance of 2 is recognized by a common neighbor.
    """
    length = _check_lengths(first, second)
    if first.code == second.code:
        return Gap.ZERO
    if _adjacent_codes(first.code, second.code, length):
        return Gap.ONE
    if any(
        _adjacent_codes(middle, second.code, length)
        for middle in _neighbor_codes(first.code, length)
    ):
        return Gap.TWO
    return Gap.MORE


def _check_cap(length: int, cap: int) -> None:
    if length > cap:
        raise ValueError(
            f"breadth-first search is limited to words of length {cap}, got {length}"
        )


def distances_from(source: BinaryWord, cap: int = DEFAULT_BFS_CAP) -> dict[str, int]:
    """Return the distance from source to every vertex, keyed by the word string."""
    length = len(source)
    _check_cap(length, cap)
    seen = {source: 0}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        for nxt in neighbors(current):
            if nxt not in seen:
                seen[nxt] = seen[current] + 1
                queue.append(nxt)
    return {str(word): dist for word, dist in seen.items()}


def distance_bfs(
    first: BinaryWord, second: BinaryWord, cap: int = DEFAULT_BFS_CAP
) -> int:
    """Return the length of a shortest path between first and second in G(n).

    This is the reference implementation for gap: a plain breadth-first search using
    neighbors only.
    """
    length = _check_lengths(first, second)
    _check_cap(length, cap)
    if first == second:
        return 0
    seen = {first: 0}
    queue = deque([first])
    while queue:
        current = queue.popleft()
        for nxt in neighbors(current):
            if nxt == second:
                return seen[current] + 1
            if nxt not in seen:
                seen[nxt] = seen[current] + 1
                queue.append(nxt)
    # G(n) is connected, so we never get here
    raise RuntimeError(f"no path between {first} and {second}")


def _lowest(values: CodeArray) -> CodeArray:
    return values & (~values + np.uint64(1))


def _is_pair(values: CodeArray) -> npt.NDArray[np.bool_]:
    # exactly two set bits, next to each other
    return (values != 0) & (values == _lowest(values) * np.uint64(3))


def _split(first: CodeArray, mask: CodeArray) -> npt.NDArray[np.bool_]:
    # first has both a one and a zero among the bits of mask
    inside = first & mask
    return (inside != 0) & (inside != mask)


def _adjacent_array(
    first: CodeArray, second: CodeArray, length: int
) -> npt.NDArray[np.bool_]:
    diff = first ^ second
    swap = _is_pair(diff) & _split(first, diff)
    return swap | (diff == np.uint64(1 << (length - 1)))


def gap_codes(
    first: CodeArray, second: CodeArray, length: int
) -> npt.NDArray[np.int8]:
    """Classify elementwise the distances between two arrays of codes.

    The result holds Gap values; the semantics are those of gap. A pair at distance 2
    is recognised from the shape of first ^ second, one of:

    - the bit of position 2 alone (a flip and a swap of positions 1 and 2);
    - position 1 plus an adjacent pair split in first (a flip and another swap);
    - two bits two apart that differ in first (two swaps sharing a position);
    - two adjacent pairs both split in first (two swaps with nothing in common).
    """
    first = np.asarray(first, dtype=np.uint64)
    second = np.asarray(second, dtype=np.uint64)
    diff = first ^ second
    top = np.uint64(1 << (length - 1))
    lowest = _lowest(diff)

    common = (diff == lowest * np.uint64(5)) & _split(first, diff)
    rest = diff & ~top
    common |= ((diff & top) != 0) & _is_pair(rest) & _split(first, rest)
    pair = lowest * np.uint64(3)
    rest = diff ^ pair
    common |= (
        ((diff & pair) == pair)
        & _is_pair(rest)
        & _split(first, pair)
        & _split(first, rest)
    )
    if length >= 2:
        common |= diff == np.uint64(1 << (length - 2))

    result = np.full(first.shape, int(Gap.MORE), dtype=np.int8)
    result[common] = int(Gap.TWO)
    result[_adjacent_array(first, second, length)] = int(Gap.ONE)
    result[diff == 0] = int(Gap.ZERO)
    return result
