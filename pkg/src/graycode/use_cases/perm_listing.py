"""Gray codes for the permutations avoiding 132 and 312.

Both listings are the images under psi of a binary listing of length n-1; since psi
turns every edge of G(n-1) into an adjacent transposition, the distance bounds carry
over from the binary listing.
"""

import enum
import logging
from collections.abc import Iterator

from graycode.entities.gilbreath import psi
from graycode.entities.permutations import Permutation

from .listing_cycle import cycle_listing, iter_cycle_listing
from .listing_path import iter_path_listing, path_listing

_logger = logging.getLogger(__name__)


class Variant(str, enum.Enum):
    """The two binary listings and the permutation Gray codes built from them."""

    CYCLE = "cycle"
    PATH = "path"

    def __str__(self) -> str:
        return str(self.value)


def _check_size(size: int) -> None:
    if size < 2:
        raise ValueError(f"permutation listings need size at least 2, got {size}")


def perm_listing(size: int, variant: Variant | str) -> list[Permutation]:
    """Return the Gray code of the permutations of the given size avoiding 132 and 312.

    The cycle variant starts at 12...n and ends at 2134...n; the path variant starts at
    12...n and ends at n...21.
    """
    _check_size(size)
    variant = Variant(variant)
    _logger.debug("mapping the %s listing of length %d", variant, size - 1)
    if variant is Variant.CYCLE:
        words = cycle_listing(size - 1)
    else:
        words = path_listing(size - 1)
    return [psi(word) for word in words]


def iter_perm_listing(size: int, variant: Variant | str) -> Iterator[Permutation]:
    """Yield the permutations of perm_listing(size, variant) one at a time."""
    _check_size(size)
    words = (
        iter_cycle_listing(size - 1)
        if Variant(variant) is Variant.CYCLE
        else iter_path_listing(size - 1)
    )
    for word in words:
        yield psi(word)
