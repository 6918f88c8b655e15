"""Adapters for mapping listings, permutations and reports to text and JSON.

This package has a clean architecture. Hence, this module should only depend on the
entities and the use_cases module (apart from plain Python and the serialization
framework). It should not contain any business- or application logic.
"""

import enum
from collections.abc import Iterable, Iterator, Sequence

from pydantic import TypeAdapter, ValidationError
from pydantic.dataclasses import dataclass

from .entities.listing import Listing
from .entities.permutations import Permutation
from .use_cases.verify import PropertyReport


class TextFormat(str, enum.Enum):
    """The supported formats of listings and reports."""

    LINES = "lines"
    JSON = "json"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ListingRecord:
    """The structured form of a binary or permutation listing.

    Attributes
    ----------
    n               : the word length, or the permutation size
    variant         : cycle or path
    entries         : the entries as strings, in listing order
    """

    n: int
    variant: str
    entries: list[str]


@dataclass(frozen=True)
class CounterexampleRecord:
    """The structured form of a Counterexample."""

    index: int
    detail: str


@dataclass(frozen=True)
class ReportRecord:
    """The structured form of a PropertyReport."""

    property_id: str
    passed: bool
    counterexamples: list[CounterexampleRecord]

    @classmethod
    def from_report(cls, report: PropertyReport) -> "ReportRecord":
        """Create the record of report"""
        return cls(
            property_id=str(report.property_id),
            passed=report.passed,
            counterexamples=[
                CounterexampleRecord(index=example.index, detail=example.detail)
                for example in report.counterexamples
            ],
        )


_LISTING_ADAPTER = TypeAdapter(ListingRecord)
_REPORTS_ADAPTER = TypeAdapter(list[ReportRecord])


def _to_json(record: ListingRecord) -> str:
    return _LISTING_ADAPTER.dump_json(record, indent=2).decode()


def _read_record(text: str) -> ListingRecord:
    try:
        return _LISTING_ADAPTER.validate_json(text)
    except ValidationError as ex:
        raise ValueError(f"not a listing record: {ex}") from ex


def listing_to_text(listing: Listing, variant: str, text_format: TextFormat) -> str:
    """Render listing as one word per line, or as a JSON listing record."""
    if text_format is TextFormat.JSON:
        return _to_json(
            ListingRecord(n=listing.length, variant=variant, entries=listing.strings())
        )
    return "\n".join(listing.strings())


def iter_listing_lines(listing: Listing, chunk_size: int = 1 << 16) -> Iterator[str]:
    """Yield the lines format of listing in chunks of chunk_size words."""
    for start in range(0, len(listing), chunk_size):
        chunk = Listing(listing.length, listing.codes[start : start + chunk_size])
        yield "\n".join(chunk.strings()) + "\n"


def listing_from_text(text: str, text_format: TextFormat) -> Listing:
    """Read a binary listing in the lines or the JSON format."""
    if text_format is TextFormat.JSON:
        record = _read_record(text)
        listing = Listing.from_words(record.entries)
        if listing.length != record.n:
            raise ValueError(f"entries have length {listing.length}, not {record.n}")
        return listing
    return Listing.parse_lines(text)


def _perm_string(perm: Permutation, compact: bool) -> str:
    return perm.compact() if compact else str(perm)


def perms_to_text(
    perms: Sequence[Permutation],
    variant: str,
    text_format: TextFormat,
    compact: bool = False,
) -> str:
    """Render a permutation listing, space separated or as digit strings."""
    entries = [_perm_string(perm, compact) for perm in perms]
    if text_format is TextFormat.JSON:
        size = len(perms[0]) if perms else 0
        return _to_json(ListingRecord(n=size, variant=variant, entries=entries))
    return "\n".join(entries)


def perms_from_text(text: str, text_format: TextFormat) -> list[Permutation]:
    """Read a permutation listing in the lines or the JSON format."""
    if text_format is TextFormat.JSON:
        entries: Iterable[str] = _read_record(text).entries
    else:
        entries = (line for line in text.splitlines() if line.strip())
    return [Permutation.parse(entry) for entry in entries]


def report_lines(report: PropertyReport) -> list[str]:
    """Render report as `<ID> PASS` or `<ID> FAIL @index=<i> <detail>`.

    Every counterexample after the first one gets an indented line of its own.
    """
    if report.passed:
        return [f"{report.property_id} PASS"]
    first, *others = report.counterexamples
    return [
        f"{report.property_id} FAIL @index={first.index} {first.detail}",
        *(f"    @index={example.index} {example.detail}" for example in others),
    ]


def reports_to_text(
    reports: Iterable[PropertyReport], text_format: TextFormat
) -> str:
    """Render all reports, one per line or as a JSON list."""
    if text_format is TextFormat.JSON:
        records = [ReportRecord.from_report(report) for report in reports]
        return _REPORTS_ADAPTER.dump_json(records, indent=2).decode()
    return "\n".join(line for report in reports for line in report_lines(report))
