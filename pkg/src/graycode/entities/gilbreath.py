"""The bijection from binary words of length n-1 onto the Gilbreath permutations.

The Gilbreath permutations of size n are those avoiding both 132 and 312; there are
2^(n-1) of them. The map turns an edge of the augmentation graph into a single adjacent
transposition.

This package has a clean architecture. Hence, the entities depend on nothing outside
this package except the standard library and numpy.
"""

from .bitword import BinaryWord, adjacent
from .permutations import DEFAULT_AVOIDERS_CAP, Permutation, contains_pattern

GILBREATH_PATTERNS: tuple[Permutation, ...] = (
    Permutation((1, 3, 2)),
    Permutation((3, 1, 2)),
)


def psi(word: BinaryWord) -> Permutation:
    """Return the Gilbreath permutation a_1 a_2 ... a_n of the word e_1 ... e_(n-1).

    a_1 is the number of ones plus one. For i >= 1, a_(i+1) is a_1 plus the number of
    zeros among e_1..e_i when e_i = 0, and the number of ones among e_i..e_(n-1) when
    e_i = 1.
    """
    bits = word.bits
    first = sum(bits) + 1
    values = [first]
    zeros_seen = 0
    ones_left = first - 1
    for bit in bits:
        if bit:
            values.append(ones_left)
            ones_left -= 1
        else:
            zeros_seen += 1
            values.append(first + zeros_seen)
    return Permutation(tuple(values))


def psi_inv(perm: Permutation, cap: int = DEFAULT_AVOIDERS_CAP) -> BinaryWord:
    """Return the word mapped onto perm.

    Entries below a_1 come from ones and entries above a_1 from zeros. Permutations of
    size up to cap are also checked for the forbidden patterns; the result is always
    checked by mapping it back.
    """
    if len(perm) < 2:
        raise ValueError(f"permutation {perm} is too short to be the image of a word")
    if len(perm) <= cap and any(
        len(pattern) <= len(perm) and contains_pattern(perm, pattern)
        for pattern in GILBREATH_PATTERNS
    ):
        raise ValueError(f"{perm} contains 132 or 312")
    head = perm.values[0]
    word = BinaryWord(tuple(int(value < head) for value in perm.values[1:]))
    if psi(word) != perm:
        raise ValueError(f"{perm} is not the image of a binary word")
    return word


def edge_transposition(first: BinaryWord, second: BinaryWord) -> int:
    """Return the position p such that psi(second) is psi(first) with entries p and
    p + 1 interchanged.

    Flipping position 1 swaps the first two entries; interchanging positions i and i+1
    swaps entries i+1 and i+2.
    """
    if not adjacent(first, second):
        raise ValueError(f"{first} and {second} are not adjacent")
    diff = first.code ^ second.code
    length = len(first)
    if diff == 1 << (length - 1):
        return 1
    return length - ((diff & -diff).bit_length() - 1)
