"""This module contains the combinatorial objects: binary words, listings, permutations.

This package has a clean architecture. Hence, the entities depend on nothing outside
this package except the standard library and numpy.
"""

from . import bitword, gilbreath, listing, permutations
