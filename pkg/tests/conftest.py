# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring
import pytest

from graycode.entities.listing import Listing

CYCLE_4 = (
    "0000 0100 1100 0110 1110 1010 1001 0011 "
    "1011 1111 0111 1101 0101 0001 0010 1000"
).split()

CYCLE_5 = (
    "00000 01000 11000 01100 11100 10100 10010 10001 "
    "00001 01001 11001 01101 11101 10101 10011 00111 "
    "10111 11111 01111 11011 01011 00011 00101 00110 "
    "10110 11110 01110 11010 01010 00010 00100 10000"
).split()

PATH_5 = (
    "00000 10000 01000 11000 10100 00100 01100 11100 "
    "11010 01010 10010 00010 00001 10001 01001 11001 "
    "10101 10110 00110 01110 11110 11101 01101 00101 "
    "00011 10011 01011 11011 10111 00111 01111 11111"
).split()

PERM_CYCLE_6 = (
    "123456 231456 321456 342156 432156 324156 324516 324561 "
    "234561 342561 432561 453261 543261 435261 435621 456321 "
    "546321 654321 564321 543621 453621 345621 345261 345216 "
    "435216 543216 453216 432516 342516 234516 234156 213456"
).split()

PERM_PATH_6 = (
    "123456 213456 231456 321456 324156 234156 342156 432156 "
    "432516 342516 324516 234516 234561 324561 342561 432561 "
    "435261 435216 345216 453216 543216 543261 453261 345261 "
    "345621 435621 453621 543621 546321 456321 564321 654321"
).split()


@pytest.fixture
def cycle_2() -> Listing:
    return Listing.from_words(["00", "01", "11", "10"])


@pytest.fixture
def cycle_3() -> Listing:
    return Listing.from_words(["000", "010", "110", "011", "111", "101", "001", "100"])


@pytest.fixture
def cycle_4() -> Listing:
    return Listing.from_words(CYCLE_4)


@pytest.fixture
def cycle_5() -> Listing:
    return Listing.from_words(CYCLE_5)


@pytest.fixture
def path_3() -> Listing:
    return Listing.from_words(["000", "100", "010", "110", "101", "001", "011", "111"])


@pytest.fixture
def path_4() -> Listing:
    return Listing.from_words(
        (
            "0000 1000 0100 1100 1010 0010 0001 1001 "
            "0110 1110 1101 0101 0011 1011 0111 1111"
        ).split()
    )


@pytest.fixture
def path_5() -> Listing:
    return Listing.from_words(PATH_5)


@pytest.fixture
def cycle_5_strings() -> list[str]:
    return list(CYCLE_5)


@pytest.fixture
def perm_cycle_6() -> list[str]:
    return list(PERM_CYCLE_6)


@pytest.fixture
def perm_path_6() -> list[str]:
    return list(PERM_PATH_6)
