# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring
import time

import pytest

from graycode.entities.bitword import BinaryWord, Gap, gap
from graycode.entities.listing import Listing
from graycode.use_cases.listing_path import (
    CaseSelector,
    base_path,
    build_case,
    iter_path_listing,
    locate_m_n,
    path_listing,
    path_segments,
)
from graycode.use_cases.verify import (
    InvariantError,
    PropertySet,
    all_passed,
    run_checks,
)


def test_base_path(path_3: Listing, path_4: Listing) -> None:
    assert base_path(2).strings() == ["00", "10", "01", "11"]
    assert base_path(3) == path_3
    assert base_path(4) == path_4
    for length in (1, 5):
        with pytest.raises(ValueError):
            base_path(length)


@pytest.mark.parametrize(
    "m_index,n_index,case_id",
    [(10, 7, 1), (10, 6, 2), (3, 8, 3), (4, 6, 4), (3, 9, 4)],
)
def test_case_selector(m_index: int, n_index: int, case_id: int) -> None:
    assert CaseSelector(m_index, n_index).case_id == case_id


@pytest.mark.parametrize("m_index,n_index", [(0, 3), (3, 0), (5, 5)])
def test_case_selector_rejects(m_index: int, n_index: int) -> None:
    with pytest.raises(ValueError):
        CaseSelector(m_index, n_index)


def test_locate_m_n(path_3: Listing, path_4: Listing) -> None:
    assert locate_m_n(path_3) == CaseSelector(4, 6)
    assert locate_m_n(path_3).case_id == 4
    assert locate_m_n(path_4) == CaseSelector(10, 7)
    assert locate_m_n(path_4).case_id == 1


def test_locate_m_n_too_close() -> None:
    with pytest.raises(InvariantError) as info:
        locate_m_n(base_path(2))
    assert info.value.property_id is None


def test_locate_m_n_missing_word() -> None:
    with pytest.raises(InvariantError):
        locate_m_n(Listing.from_words(["000", "001", "011"]))


def test_build_case(path_3: Listing, path_5: Listing) -> None:
    assert build_case(path_3, locate_m_n(path_3)) == path_5


def test_path_segments(path_3: Listing) -> None:
    segments = path_segments(path_3, locate_m_n(path_3))
    assert [segment.name for segment in segments] == [
        "P00",
        "Upper",
        "Zigzag",
        "Lower",
        "P11",
    ]
    assert segments[2].listing.strings() == ["10101", "10110"]
    assert segments[1].listing.strings()[:4] == ["11010", "01010", "10010", "00010"]
    assert sum(len(segment.listing) for segment in segments) == 32


def test_path_segments_case_1(path_4: Listing) -> None:
    segments = path_segments(path_4, locate_m_n(path_4))
    assert [segment.name for segment in segments] == [
        "P00",
        "Lower",
        "Zigzag",
        "Upper",
        "P11",
    ]
    # eta_9 = 0110 and eta_8 = 1001
    assert segments[2].listing.strings() == ["011001", "011010", "100110", "100101"]


@pytest.mark.parametrize(
    "selector",
    [CaseSelector(10, 7), CaseSelector(10, 6), CaseSelector(3, 8), CaseSelector(3, 9)],
)
def test_every_case_lists_every_word(path_4: Listing, selector: CaseSelector) -> None:
    segments = path_segments(path_4, selector)
    middle = segments[1:4]
    assert sum(len(segment.listing) for segment in middle) == 32
    listing = build_case(path_4, selector)
    assert listing.is_complete()
    assert listing[0] == BinaryWord.parse("000000")
    assert listing[-1] == BinaryWord.parse("111111")


@pytest.mark.parametrize("selector", [CaseSelector(3, 8), CaseSelector(3, 9)])
def test_zigzag_pairs_are_adjacent(path_4: Listing, selector: CaseSelector) -> None:
    zigzag = path_segments(path_4, selector)[2].listing
    for idx in range(0, len(zigzag) - 1, 2):
        assert gap(zigzag[idx], zigzag[idx + 1]) is Gap.ONE


def test_path_listing_examples(
    path_3: Listing, path_4: Listing, path_5: Listing
) -> None:
    assert path_listing(1).strings() == ["0", "1"]
    assert path_listing(2).strings() == ["00", "10", "01", "11"]
    assert path_listing(3) == path_3
    assert path_listing(4) == path_4
    assert path_listing(5) == path_5


def test_path_listing_rejects_zero_length() -> None:
    with pytest.raises(ValueError):
        path_listing(0)


@pytest.mark.parametrize("length", range(1, 17))
def test_path_listing_properties(length: int) -> None:
    listing = path_listing(length)
    assert listing.is_complete()
    assert all_passed(run_checks(listing, PropertySet.C))


@pytest.mark.parametrize("length", range(1, 10))
def test_iter_path_listing(length: int) -> None:
    streamed = [str(entry) for entry in iter_path_listing(length)]
    assert streamed == path_listing(length).strings()


def test_debug_checks(monkeypatch: pytest.MonkeyPatch, path_3: Listing) -> None:
    monkeypatch.setenv("GRAYCODE_DEBUG_CHECKS", "true")
    assert path_listing(9) == path_listing(9, check=False)
    reversed_path = Listing(3, path_3.codes[::-1])
    with pytest.raises(InvariantError):
        build_case(reversed_path, CaseSelector(4, 6))


def test_length_24_in_seconds() -> None:
    start = time.perf_counter()
    listing = path_listing(24)
    assert time.perf_counter() - start < 10
    assert len(listing) == 1 << 24
    assert listing.is_complete()
