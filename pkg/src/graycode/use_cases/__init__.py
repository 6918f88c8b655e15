"""This module contains the constructions of the listings and their verification.

This package has a clean architecture. Hence, this module should only depend on the
entities module (apart from plain Python).
"""

from . import configuring, listing_cycle, listing_path, perm_listing, verify
from .listing_cycle import cycle_listing
from .listing_path import path_listing
from .perm_listing import Variant, iter_perm_listing
from .verify import InvariantError, PropertyReport, PropertySet

__all__ = [
    "InvariantError",
    "PropertyReport",
    "PropertySet",
    "Variant",
    "cycle_listing",
    "iter_perm_listing",
    "path_listing",
]
