"""Use cases for checking the named properties of binary and permutation listings.

Every property is evaluated literally on the listing, independently of how the
listing was constructed. Distances are classified by bitword.gap semantics (vectorized)
and permutation distances by permutations.perm_gap. Reported indices are 1-based.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from graycode.entities.bitword import BinaryWord, Gap, gap_codes, with_ones_at
from graycode.entities.listing import Listing
from graycode.entities.permutations import Permutation, PermGap, perm_gap

_logger = logging.getLogger(__name__)

_Entries = Sequence[object] | Listing
_GapArray = npt.NDArray[np.int8]
_GAP_CHUNK = 1 << 20


class PropertyId(str, enum.Enum):
    """The ids of the checkable properties."""

    COVERAGE = "COVERAGE"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"

    def __str__(self) -> str:
        return str(self.value)


class PropertySet(str, enum.Enum):
    """The property sets; A and B are the induction hypotheses of the cycle listing."""

    A = "A"
    B = "B"
    C = "C"
    L = "L"
    P = "P"
    Q = "Q"


BINARY_SETS = (PropertySet.A, PropertySet.B, PropertySet.C, PropertySet.L)
PERM_SETS = (PropertySet.P, PropertySet.Q)


@dataclass(frozen=True)
class Counterexample:
    """A violation of a property.

    Attributes
    ----------
    index           : 1-based position in the listing where the violation shows
    detail          : human readable description
    """

    index: int
    detail: str


@dataclass(frozen=True)
class PropertyReport:
    """The outcome of checking one property.

    Attributes
    ----------
    property_id     : the checked property
    counterexamples : the violations found, the first one only unless asked otherwise
    passed          : True if and only if there are no counterexamples (no init)
    """

    property_id: PropertyId
    counterexamples: tuple[Counterexample, ...] = ()
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", not self.counterexamples)

    @property
    def counterexample(self) -> Counterexample | None:
        """The first violation, if any"""
        return self.counterexamples[0] if self.counterexamples else None


class InvariantError(RuntimeError):
    """A construction produced or received a listing that violates a property.

    Attributes
    ----------
    property_id     : the violated property, None for a broken construction premise
    report          : the failed report, if the error was raised from one
    """

    def __init__(
        self,
        property_id: PropertyId | None,
        message: str,
        report: PropertyReport | None = None,
    ) -> None:
        super().__init__(f"{property_id}: {message}" if property_id else message)
        self.property_id = property_id
        self.report = report

    @classmethod
    def from_report(cls, report: PropertyReport) -> InvariantError:
        """Create the error for a failed report."""
        example = report.counterexample
        detail = f"@index={example.index} {example.detail}" if example else "failed"
        return cls(report.property_id, detail, report)


@dataclass(frozen=True)
class GapProfile:
    """The gap classes of the consecutive pairs of a listing.

    Attributes
    ----------
    length          : the word length n
    gaps            : gaps[i] classifies entries i+1 and i+2 (1-based)
    """

    length: int
    gaps: tuple[Gap, ...]

    def __len__(self) -> int:
        return len(self.gaps)

    def __iter__(self) -> Iterator[Gap]:
        return iter(self.gaps)

    def count(self, the_gap: Gap) -> int:
        """Return the number of pairs in the class the_gap."""
        return sum(1 for value in self.gaps if value == the_gap)


def all_passed(reports: Iterable[PropertyReport]) -> bool:
    """Return True if every report passed."""
    return all(report.passed for report in reports)


def require(reports: Iterable[PropertyReport]) -> None:
    """Raise an InvariantError for the first failed report."""
    for report in reports:
        if not report.passed:
            _logger.warning("property %s failed: %s", report.property_id, report)
            raise InvariantError.from_report(report)


def _first(failures: Iterable[Counterexample]) -> tuple[Counterexample, ...]:
    example = next(iter(failures), None)
    return (example,) if example else ()


def _collect(
    property_id: PropertyId, failures: Iterable[Counterexample], verbose: bool
) -> PropertyReport:
    return PropertyReport(
        property_id, tuple(failures) if verbose else _first(failures)
    )


def check_coverage(listing: Listing, verbose: bool = False) -> PropertyReport:
    """Check that every word of length n appears exactly once."""

    def failures() -> Iterable[Counterexample]:
        if listing.is_complete():
            return
        _, first_seen = np.unique(listing.codes, return_index=True)
        repeated = np.ones(len(listing), dtype=np.bool_)
        repeated[first_seen] = False
        for idx in np.flatnonzero(repeated).tolist():
            yield Counterexample(idx + 1, f"{listing[idx]} appears twice")
        if (expected := 1 << listing.length) != len(listing):
            yield Counterexample(
                len(listing), f"count {len(listing)} != {expected}"
            )

    return _collect(PropertyId.COVERAGE, failures(), verbose)


def _gap_array(listing: Listing) -> _GapArray:
    codes = listing.codes
    gaps = np.empty(max(len(codes) - 1, 0), dtype=np.int8)
    for start in range(0, gaps.size, _GAP_CHUNK):
        stop = min(start + _GAP_CHUNK, gaps.size)
        gaps[start:stop] = gap_codes(
            codes[start:stop], codes[start + 1 : stop + 1], listing.length
        )
    return gaps


def gap_profile(listing: Listing) -> GapProfile:
    """Return the gap classes of all consecutive pairs of listing."""
    return GapProfile(
        listing.length, tuple(Gap(value) for value in _gap_array(listing).tolist())
    )


def _endpoint_failures(
    entries: _Entries, expected: Sequence[tuple[int, object]]
) -> Iterable[Counterexample]:
    for pos, wanted in expected:
        if not 1 <= pos <= len(entries):
            yield Counterexample(pos, f"expected {wanted}, listing too short")
        elif entries[pos - 1] != wanted:
            yield Counterexample(pos, f"expected {wanted}, got {entries[pos - 1]}")


def _bound_failures(gaps: _GapArray, entries: _Entries) -> Iterable[Counterexample]:
    for idx in np.flatnonzero((gaps != 1) & (gaps != 2)).tolist():
        yield Counterexample(
            idx + 1,
            f"gap({entries[idx]}, {entries[idx + 1]}) = {Gap(int(gaps[idx]))}",
        )


def _double_jump_failures(
    gaps: _GapArray, entries: _Entries
) -> Iterable[Counterexample]:
    # no wrap-around pair
    doubles = np.flatnonzero((gaps[:-1] == 2) & (gaps[1:] == 2)) + 1
    for idx in doubles.tolist():
        yield Counterexample(idx + 1, f"two distance 2 jumps around {entries[idx]}")


def _pair_failures(
    listing: Listing, anchor: BinaryWord, partner: BinaryWord, unordered: bool
) -> Iterable[Counterexample]:
    codes = listing.codes
    heads, tails = codes[:-1], codes[1:]
    found = (heads == np.uint64(anchor.code)) & (tails == np.uint64(partner.code))
    if unordered:
        found |= (heads == np.uint64(partner.code)) & (tails == np.uint64(anchor.code))
    if not found.any():
        yield Counterexample(
            listing.position(anchor) or 0,
            f"{anchor} is not immediately followed by {partner}",
        )


def _c4_failures(listing: Listing, gaps: _GapArray) -> Iterable[Counterexample]:
    target = with_ones_at(listing.length, (listing.length,))
    pos = listing.position(target)
    if pos is None:
        yield Counterexample(0, f"{target} is not listed")
    elif pos == 1:
        yield Counterexample(1, f"{target} has no predecessor")
    elif pos < len(listing) and gaps[pos - 2] != 1:
        yield Counterexample(
            pos, f"gap({listing[pos - 2]}, {target}) = {Gap(int(gaps[pos - 2]))}"
        )


def _undefined(property_id: PropertyId, length: int, minimum: int) -> PropertyReport:
    return PropertyReport(
        property_id,
        (Counterexample(0, f"undefined for word length {length} < {minimum}"),),
    )


def check_binary_properties(  # pylint: disable=too-many-locals
    listing: Listing,
    prop_set: PropertySet,
    unordered: bool = False,
    verbose: bool = False,
) -> list[PropertyReport]:
    """Evaluate the properties of the set A, B, C or L on listing.

    The special words are derived from the word length n of the listing. A3 and B3
    are checked as ordered adjacency unless unordered is True.
    """
    length = listing.length
    gaps = _gap_array(listing)
    first = with_ones_at(length, ())
    last_cycle = with_ones_at(length, (1,))
    cycle_ends = ((1, first), (len(listing), last_cycle))

    def bounds(property_id: PropertyId) -> PropertyReport:
        return _collect(property_id, _bound_failures(gaps, listing), verbose)

    def double_jumps(property_id: PropertyId) -> PropertyReport:
        return _collect(property_id, _double_jump_failures(gaps, listing), verbose)

    def both(property_id: PropertyId) -> PropertyReport:
        failures = [
            *_bound_failures(gaps, listing),
            *_double_jump_failures(gaps, listing),
        ]
        failures.sort(key=lambda example: example.index)
        return _collect(property_id, failures, verbose)

    def ends(
        property_id: PropertyId, expected: Sequence[tuple[int, BinaryWord]]
    ) -> PropertyReport:
        return _collect(property_id, _endpoint_failures(listing, expected), verbose)

    def second_to_last(property_id: PropertyId) -> PropertyReport:
        if length < 3:
            return _undefined(property_id, length, 3)
        return ends(property_id, ((len(listing) - 1, with_ones_at(length, (3,))),))

    def pair(
        property_id: PropertyId, partner_ones: tuple[int, ...], minimum: int
    ) -> PropertyReport:
        if length < minimum:
            return _undefined(property_id, length, minimum)
        anchor = with_ones_at(length, (1, length))
        partner = with_ones_at(length, partner_ones)
        return _collect(
            property_id, _pair_failures(listing, anchor, partner, unordered), verbose
        )

    match prop_set:
        case PropertySet.A:
            return [
                ends(PropertyId.A1, cycle_ends),
                both(PropertyId.A2),
                pair(PropertyId.A3, (length,), 2),
                second_to_last(PropertyId.A4),
            ]
        case PropertySet.B:
            return [
                ends(PropertyId.B1, cycle_ends),
                both(PropertyId.B2),
                pair(PropertyId.B3, (3, length), 4),
                second_to_last(PropertyId.B4),
            ]
        case PropertySet.C:
            path_ends = (
                (1, first),
                (2, last_cycle),
                (len(listing), with_ones_at(length, range(1, length + 1))),
            )
            return [
                ends(PropertyId.C1, path_ends),
                bounds(PropertyId.C2),
                double_jumps(PropertyId.C3),
                _collect(PropertyId.C4, _c4_failures(listing, gaps), verbose),
            ]
        case PropertySet.L:
            return [
                ends(PropertyId.L1, cycle_ends),
                bounds(PropertyId.L2),
                double_jumps(PropertyId.L3),
            ]
        case _:
            raise ValueError(f"{prop_set} is not a property set of binary listings")


def check_perm_coverage(
    perms: Sequence[Permutation], verbose: bool = False
) -> PropertyReport:
    """Check that perms lists 2^(n-1) distinct permutations of one size n."""

    def failures() -> Iterable[Counterexample]:
        if not perms:
            yield Counterexample(0, "empty listing")
            return
        size = len(perms[0])
        seen: set[Permutation] = set()
        for pos, perm in enumerate(perms, start=1):
            if len(perm) != size:
                yield Counterexample(pos, f"{perm} does not have size {size}")
            elif perm in seen:
                yield Counterexample(pos, f"{perm} appears twice")
            seen.add(perm)
        if (expected := 1 << (size - 1)) != len(perms):
            yield Counterexample(len(perms), f"count {len(perms)} != {expected}")

    return _collect(PropertyId.COVERAGE, failures(), verbose)


def perm_gaps(perms: Sequence[Permutation]) -> list[PermGap]:
    """Return the perm_gap classes of all consecutive pairs of perms."""
    return [perm_gap(perms[i], perms[i + 1]) for i in range(len(perms) - 1)]


def check_perm_properties(
    perms: Sequence[Permutation], prop_set: PropertySet, verbose: bool = False
) -> list[PropertyReport]:
    """Evaluate the properties of the set P or Q on a permutation listing."""
    if prop_set not in PERM_SETS:
        raise ValueError(f"{prop_set} is not a property set of permutation listings")
    if not perms:
        empty = (Counterexample(0, "empty listing"),)
        ids = (
            (PropertyId.P1, PropertyId.P2, PropertyId.P3)
            if prop_set is PropertySet.P
            else (PropertyId.Q1, PropertyId.Q2, PropertyId.Q3)
        )
        return [PropertyReport(property_id, empty) for property_id in ids]

    size = len(perms[0])
    gaps = np.array(perm_gaps(perms), dtype=np.int8)
    if prop_set is PropertySet.P:
        last = Permutation((2, 1, *range(3, size + 1))) if size >= 2 else perms[0]
        ids = (PropertyId.P1, PropertyId.P2, PropertyId.P3)
    else:
        last = Permutation.reversal(size)
        ids = (PropertyId.Q1, PropertyId.Q2, PropertyId.Q3)
    expected = [(1, Permutation.identity(size)), (len(perms), last)]
    return [
        _collect(ids[0], _endpoint_failures(perms, expected), verbose),
        _collect(ids[1], _perm_bound_failures(gaps, perms), verbose),
        _collect(ids[2], _double_jump_failures(gaps, perms), verbose),
    ]


def _perm_bound_failures(
    gaps: _GapArray, perms: Sequence[Permutation]
) -> Iterable[Counterexample]:
    for idx in np.flatnonzero((gaps != 1) & (gaps != 2)).tolist():
        yield Counterexample(
            idx + 1,
            f"perm_gap({perms[idx]}, {perms[idx + 1]}) = {PermGap(int(gaps[idx]))}",
        )


def run_checks(
    listing: Listing,
    prop_set: PropertySet,
    unordered: bool = False,
    verbose: bool = False,
) -> list[PropertyReport]:
    """Check coverage and, if it passes, the chosen property set."""
    coverage = check_coverage(listing, verbose)
    if not coverage.passed:
        return [coverage]
    return [coverage, *check_binary_properties(listing, prop_set, unordered, verbose)]


def run_perm_checks(
    perms: Sequence[Permutation], prop_set: PropertySet, verbose: bool = False
) -> list[PropertyReport]:
    """Check coverage and, if it passes, the chosen permutation property set."""
    coverage = check_perm_coverage(perms, verbose)
    if not coverage.passed:
        return [coverage]
    return [coverage, *check_perm_properties(perms, prop_set, verbose)]
