"""Construction of the listing of all words of length n from 00...0 to 11...1.

The listing of length n is assembled from the listing eta of length n-2 in five
segments: P00 (eta with suffix 00), Lower, Zigzag and Upper (eta with suffixes 10 and
01 in a case dependent order) and P11 (eta with suffix 11). The case is selected by the
positions M of 11...10 and N of 00...01 in eta.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from graycode.entities.bitword import BinaryWord, CodeArray, ones, with_ones_at, zeros
from graycode.entities.listing import Listing

from .configuring import get_debug_checks
from .verify import InvariantError, PropertyId, PropertySet, require, run_checks

_logger = logging.getLogger(__name__)

_BASE_PATHS: dict[int, tuple[str, ...]] = {
    2: ("00", "10", "01", "11"),
    3: ("000", "100", "010", "110", "101", "001", "011", "111"),
    4: (
        "0000",
        "1000",
        "0100",
        "1100",
        "1010",
        "0010",
        "0001",
        "1001",
        "0110",
        "1110",
        "1101",
        "0101",
        "0011",
        "1011",
        "0111",
        "1111",
    ),
}

_SUFFIX_01 = np.uint64(0b01)
_SUFFIX_10 = np.uint64(0b10)


@dataclass(frozen=True)
class CaseSelector:
    """For selecting one of the four constructions.

    Attributes
    ----------
    m_index         : the 1-based position M of 11...10 in the inner listing
    n_index         : the 1-based position N of 00...01 in the inner listing
    case_id         : 1 if M > N and M - N odd, 2 if M > N and M - N even,
                      3 if M < N and M - N odd, 4 if M < N and M - N even (no init)
    """

    m_index: int
    n_index: int
    case_id: int = field(init=False)

    def __post_init__(self) -> None:
        if self.m_index < 1 or self.n_index < 1 or self.m_index == self.n_index:
            raise ValueError(
                f"M and N should be distinct positive positions, "
                f"got {self.m_index} and {self.n_index}"
            )
        odd = (self.m_index - self.n_index) % 2 == 1
        if self.m_index > self.n_index:
            case_id = 1 if odd else 2
        else:
            case_id = 3 if odd else 4
        # because frozen=True, we need to use __setattr__ here:
        object.__setattr__(self, "case_id", case_id)


@dataclass(frozen=True)
class Segment:
    """A named part of the next level.

    Attributes
    ----------
    name            : one of P00, Lower, Zigzag, Upper, P11
    listing         : the entries of the segment
    """

    name: str
    listing: Listing


def base_path(length: int) -> Listing:
    """Return the base listing of length 2, 3 or 4."""
    if length not in _BASE_PATHS:
        raise ValueError(f"base paths exist for lengths 2, 3 and 4, not {length}")
    return Listing.from_words(_BASE_PATHS[length])


def locate_m_n(listing: Listing) -> CaseSelector:
    """Return the positions of 11...10 and 00...01 in listing and the resulting case."""
    length = listing.length
    m_word = with_ones_at(length, range(1, length))
    n_word = with_ones_at(length, (length,))
    m_index, n_index = listing.position(m_word), listing.position(n_word)
    if m_index is None or n_index is None:
        missing = m_word if m_index is None else n_word
        raise InvariantError(PropertyId.COVERAGE, f"{missing} is not listed")
    if abs(m_index - n_index) < 2:
        raise InvariantError(
            None, f"|M - N| must be at least 2, got M = {m_index} and N = {n_index}"
        )
    selector = CaseSelector(m_index, n_index)
    _logger.debug(
        "length %d: M = %d, N = %d, case %d",
        length + 2,
        m_index,
        n_index,
        selector.case_id,
    )
    return selector


class _Eta:
    """1-based access to ranges of the inner listing, with a two letter suffix."""

    def __init__(self, listing: Listing) -> None:
        self.codes = listing.codes << np.uint64(2)
        self.length = listing.length + 2
        self.top = len(listing)

    def up(self, first: int, last: int, suffix: np.uint64) -> CodeArray:
        """eta_first, ..., eta_last with suffix"""
        return self.codes[first - 1 : last] | suffix

    def down(self, first: int, last: int, suffix: np.uint64) -> CodeArray:
        """eta_first, eta_first - 1, ..., eta_last with suffix"""
        return self.codes[last - 1 : first][::-1] | suffix

    def zigzag(self, indices: list[int]) -> CodeArray:
        """Pairs eta_i 01, eta_i 10 and eta_i 10, eta_i 01 in turn, starting with 01."""
        heads = self.codes[np.asarray(indices, dtype=np.intp) - 1]
        leading = np.where(np.arange(len(indices)) % 2 == 0, _SUFFIX_01, _SUFFIX_10)
        result = np.empty(2 * len(indices), dtype=np.uint64)
        result[0::2] = heads | leading
        result[1::2] = heads | (np.uint64(0b11) ^ leading)
        return result

    def segment(self, name: str, *parts: CodeArray) -> Segment:
        """Concatenate parts into a named segment."""
        return Segment(name, Listing(self.length, np.concatenate(parts)))


def _middle_segments(eta: _Eta, selector: CaseSelector) -> list[Segment]:
    m_idx, n_idx, top = selector.m_index, selector.n_index, eta.top
    match selector.case_id:
        case 1 | 2:
            lower = eta.segment(
                "Lower",
                eta.up(m_idx, top, _SUFFIX_10),
                eta.down(top, m_idx, _SUFFIX_01),
            )
            zigzag = eta.segment(
                "Zigzag", eta.zigzag(list(range(m_idx - 1, n_idx, -1)))
            )
            first, second = (
                (_SUFFIX_01, _SUFFIX_10)
                if selector.case_id == 1
                else (_SUFFIX_10, _SUFFIX_01)
            )
            upper = eta.segment(
                "Upper", eta.down(n_idx, 1, first), eta.up(1, n_idx, second)
            )
            return [lower, zigzag, upper]
        case 3:
            upper = eta.segment(
                "Upper", eta.down(m_idx, 1, _SUFFIX_10), eta.up(1, m_idx, _SUFFIX_01)
            )
            zigzag = eta.segment(
                "Zigzag",
                eta.zigzag(list(range(m_idx + 1, n_idx - 1))),
                eta.up(n_idx - 1, n_idx - 1, _SUFFIX_10),
            )
            lower = eta.segment(
                "Lower",
                eta.up(n_idx, top, _SUFFIX_10),
                eta.down(top, n_idx, _SUFFIX_01),
                eta.up(n_idx - 1, n_idx - 1, _SUFFIX_01),
            )
            return [upper, zigzag, lower]
        case _:
            upper = eta.segment(
                "Upper", eta.down(m_idx, 1, _SUFFIX_10), eta.up(1, m_idx, _SUFFIX_01)
            )
            zigzag = eta.segment("Zigzag", eta.zigzag(list(range(m_idx + 1, n_idx))))
            lower = eta.segment(
                "Lower",
                eta.up(n_idx, top, _SUFFIX_10),
                eta.down(top, n_idx, _SUFFIX_01),
            )
            return [upper, zigzag, lower]


def path_segments(listing: Listing, selector: CaseSelector) -> list[Segment]:
    """Return the segments of the next level in concatenation order.

    Cases 1 and 2 give P00, Lower, Zigzag, Upper, P11; cases 3 and 4 give P00, Upper,
    Zigzag, Lower, P11.
    """
    eta = _Eta(listing)
    return [
        eta.segment("P00", eta.codes),
        *_middle_segments(eta, selector),
        eta.segment("P11", eta.up(1, eta.top, np.uint64(0b11))),
    ]


def build_case(listing: Listing, selector: CaseSelector) -> Listing:
    """Return the listing of length n from the listing of length n - 2."""
    if get_debug_checks():
        require(run_checks(listing, PropertySet.C))
    segments = path_segments(listing, selector)
    return Listing(
        listing.length + 2,
        np.concatenate([segment.listing.codes for segment in segments]),
    )


def _build(length: int) -> Listing:
    if length == 1:
        return Listing.from_words((zeros(1), ones(1)))
    if length <= 4:
        return base_path(length)
    # odd lengths descend from length 3, even ones from length 4
    listing = base_path(4 - length % 2)
    while listing.length < length:
        listing = build_case(listing, locate_m_n(listing))
    return listing


def path_listing(length: int, check: bool = True) -> Listing:
    """Return the listing of all words of the given length from 00...0 to 11...1.

    Length 1 gives (0, 1). With check, the result is verified against C1-C4.
    """
    if length < 1:
        raise ValueError(f"word length must be positive, got {length}")
    listing = _build(length)
    if check:
        require(run_checks(listing, PropertySet.C))
    return listing


def iter_path_listing(length: int) -> Iterator[BinaryWord]:
    """Yield the path listing word by word, segment by segment."""
    if length <= 4:
        yield from path_listing(length, check=False)
        return
    inner = _build(length - 2)
    for segment in path_segments(inner, locate_m_n(inner)):
        yield from segment.listing
