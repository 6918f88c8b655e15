"""Construction of the listing of all words of length n from 00...0 to 10...0.

Consecutive words are at distance 1 or 2 in G(n) and two distance 2 jumps never follow
each other. The listing of length n+1 rearranges the listing of length n in three
blocks; odd and even lengths alternate between two rearrangements, and their induction
hypotheses are the property sets A (odd) and B (even).
"""

import logging
from collections.abc import Iterator

import numpy as np

from graycode.entities.bitword import BinaryWord, with_ones_at
from graycode.entities.listing import Listing

from .configuring import get_debug_checks
from .verify import InvariantError, PropertyId, PropertySet, require, run_checks

_logger = logging.getLogger(__name__)

_BASE_CYCLES: dict[int, tuple[str, ...]] = {
    1: ("0", "1"),
    2: ("00", "01", "11", "10"),
    3: ("000", "010", "110", "011", "111", "101", "001", "100"),
}

Blocks = tuple[Listing, Listing, Listing]


def base_cycle(length: int) -> Listing:
    """Return the base listing of length 1, 2 or 3."""
    if length not in _BASE_CYCLES:
        raise ValueError(f"base cycles exist for lengths 1, 2 and 3, not {length}")
    return Listing.from_words(_BASE_CYCLES[length])


def find_pair(
    listing: Listing,
    first: BinaryWord,
    second: BinaryWord,
    property_id: PropertyId = PropertyId.A3,
) -> int:
    """Return the smallest 1-based i with listing[i] = first and listing[i+1] = second.

    A missing pair means the induction hypothesis property_id does not hold.
    """
    if len(first) != listing.length or len(second) != listing.length:
        raise ValueError(f"words {first}, {second} do not have length {listing.length}")
    codes = listing.codes
    hits = np.flatnonzero(
        (codes[:-1] == np.uint64(first.code)) & (codes[1:] == np.uint64(second.code))
    )
    if not hits.size:
        raise InvariantError(
            property_id, f"{first} is not immediately followed by {second}"
        )
    return int(hits[0]) + 1


def _anchor(length: int) -> BinaryWord:
    return with_ones_at(length, (1, length))


def _odd_blocks(listing: Listing) -> Blocks:
    length = listing.length
    pos = find_pair(
        listing, _anchor(length), with_ones_at(length, (length,)), PropertyId.A3
    )
    _logger.debug("length %d: 10...01, 00...01 at position %d", length, pos)
    codes = listing.codes
    return (
        Listing(length, codes[:pos]).with_suffix("0"),
        Listing(length, codes[::-1]).with_suffix("1"),
        Listing(length, codes[pos:]).with_suffix("0"),
    )


def _even_blocks(listing: Listing) -> Blocks:
    length = listing.length
    if length < 4:
        raise InvariantError(
            PropertyId.B3, f"001...01 needs word length at least 4, got {length}"
        )
    pos = find_pair(
        listing, _anchor(length), with_ones_at(length, (3, length)), PropertyId.B3
    )
    _logger.debug("length %d: 10...01, 001...01 at position %d", length, pos)
    codes = listing.codes
    rotated = np.concatenate((codes[-1:], codes[:-1]))
    return (
        Listing(length, codes[:pos]).with_suffix("0"),
        Listing(length, rotated).with_suffix("1"),
        Listing(length, codes[pos:]).with_suffix("0"),
    )


def _check_level(listing: Listing, prop_set: PropertySet) -> None:
    if get_debug_checks():
        require(run_checks(listing, prop_set))


def cycle_blocks(listing: Listing) -> Blocks:
    """Return the three blocks whose concatenation is the next level after listing.

    For odd word length these are X1, X2 (the full reversal, suffix 1) and X3; for even
    word length Y1, Y2 (the last entry moved to the front, suffix 1) and Y3.
    """
    if listing.length % 2:
        return _odd_blocks(listing)
    return _even_blocks(listing)


def _concatenate(blocks: Blocks) -> Listing:
    return Listing(blocks[0].length, np.concatenate([block.codes for block in blocks]))


def extend_odd_to_even(listing: Listing) -> Listing:
    """Return the listing of length 2k from one of length 2k-1 satisfying A1-A4."""
    if listing.length % 2 == 0:
        raise ValueError(f"expected an odd word length, got {listing.length}")
    _check_level(listing, PropertySet.A)
    return _concatenate(_odd_blocks(listing))


def extend_even_to_odd(listing: Listing) -> Listing:
    """Return the listing of length 2k+1 from one of length 2k satisfying B1-B4."""
    if listing.length % 2:
        raise ValueError(f"expected an even word length, got {listing.length}")
    _check_level(listing, PropertySet.B)
    return _concatenate(_even_blocks(listing))


def _build(length: int) -> Listing:
    if length <= 3:
        return base_cycle(length)
    # every longer listing descends from the one of length 3: L_2 has no 001...01
    listing = base_cycle(3)
    while listing.length < length:
        _logger.debug("extending the cycle listing to length %d", listing.length + 1)
        if listing.length % 2:
            listing = extend_odd_to_even(listing)
        else:
            listing = extend_even_to_odd(listing)
    return listing


def cycle_listing(length: int, check: bool = True) -> Listing:
    """Return the listing of all words of the given length from 00...0 to 10...0.

    With check, the result is verified against L1-L3 and an InvariantError is raised
    for the first failing property.
    """
    if length < 1:
        raise ValueError(f"word length must be positive, got {length}")
    listing = _build(length)
    if check:
        require(run_checks(listing, PropertySet.L))
    return listing


def iter_cycle_listing(length: int) -> Iterator[BinaryWord]:
    """Yield the cycle listing word by word.

    Only the previous level is materialized; the blocks of the requested level are
    produced one at a time.
    """
    if length <= 3:
        yield from cycle_listing(length, check=False)
        return
    for block in cycle_blocks(_build(length - 1)):
        yield from block
