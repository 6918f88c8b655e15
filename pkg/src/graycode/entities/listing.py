"""The Listing dataclass: an ordered sequence of distinct binary words of one length.

This package has a clean architecture. Hence, the entities depend on nothing outside
this package except the standard library and numpy.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from .bitword import BinaryWord, CodeArray


@dataclass(frozen=True, eq=False)
class Listing:
    """For representing a listing of (a subset of) V(G(n)).

    Attributes
    ----------
    length          : the word length n
    codes           : the codes of the entries in listing order (read-only)
    """

    length: int
    codes: CodeArray

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"word length must be positive, got {self.length}")
        codes = np.asarray(self.codes, dtype=np.uint64)
        # copy unless the source is already read-only
        codes = codes.copy() if codes.flags.writeable else codes.view()
        if codes.ndim != 1:
            raise ValueError("a listing is one-dimensional")
        if codes.size and int(codes.max()) >= (1 << self.length):
            raise ValueError(f"entries do not fit words of length {self.length}")
        codes.setflags(write=False)
        # because frozen=True, we need to use __setattr__ here:
        object.__setattr__(self, "codes", codes)

    @classmethod
    def from_words(cls, words: Iterable[BinaryWord | str]) -> Listing:
        """Create a listing from words or their string forms; all lengths must match."""
        parsed = [
            word if isinstance(word, BinaryWord) else BinaryWord.parse(word)
            for word in words
        ]
        if not parsed:
            raise ValueError("cannot infer the word length of an empty listing")
        if len(lengths := {len(word) for word in parsed}) != 1:
            raise ValueError(f"words of different lengths: {sorted(lengths)}")
        return cls(len(parsed[0]), np.array([w.code for w in parsed], dtype=np.uint64))

    @classmethod
    def parse_lines(cls, text: str) -> Listing:
        """Create a listing from the lines format: one word per line, blanks ignored."""
        return cls.from_words(
            line.strip() for line in text.splitlines() if line.strip()
        )

    def __len__(self) -> int:
        return int(self.codes.size)

    def __getitem__(self, index: int) -> BinaryWord:
        """Return the entry at the 0-based index."""
        return BinaryWord.from_code(int(self.codes[index]), self.length)

    def __iter__(self) -> Iterator[BinaryWord]:
        for code in self.codes.tolist():
            yield BinaryWord.from_code(code, self.length)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Listing):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash((self.length, self.codes.tobytes()))

    def strings(self) -> list[str]:
        """Return the entries as strings."""
        return [format(code, f"0{self.length}b") for code in self.codes.tolist()]

    def position(self, word: BinaryWord) -> int | None:
        """Return the 1-based position of word, or None if it is not listed."""
        if len(word) != self.length:
            raise ValueError(f"word {word} does not have length {self.length}")
        if (found := np.flatnonzero(self.codes == np.uint64(word.code))).size:
            return int(found[0]) + 1
        return None

    def is_complete(self) -> bool:
        """Return True if every word of length n is listed exactly once."""
        if len(self) != 1 << self.length:
            return False
        seen = np.zeros(len(self), dtype=bool)
        seen[self.codes] = True
        return bool(seen.all())

    def with_suffix(self, suffix: str) -> Listing:
        """Return the listing of the entries with the binary string suffix appended."""
        shift = np.uint64(len(suffix))
        tail = np.uint64(int(suffix, 2))
        return Listing(self.length + len(suffix), (self.codes << shift) | tail)
