"""Braid words and the exact closure invariants used downstream.

A word in the braid group B_n is a tuple of nonzero letters, where letter
+i (resp. -i) is the positive (resp. negative) half twist of strands i and
i+1.  Letters act left to right.  From a word we extract:

  * the underlying permutation, hence the component count of the closure;
  * for 3-braids, the action on the first homology of the double cover of
    the disk branched over three points.  That action is the reduced Burau
    matrix of the word evaluated at t = -1, an integer 2x2 matrix; the
    order of its cokernel against the identity is the determinant of the
    closure, which is also the order of the first homology of the double
    cover of S^3 branched over the closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError
from .exactalg import AbelianGroup, IntMatrix, cokernel, determinant


@dataclass(frozen=True)
class BraidWord:
    """A word in B_strands, letters in {-(strands-1), ..., -1, 1, ..., strands-1}."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid group needs at least one strand")
        for letter in self.letters:
            if not isinstance(letter, int) or letter == 0:
                raise ValueError("braid letters are nonzero integers")
            if abs(letter) > self.strands - 1:
                raise ValueError(
                    f"letter {letter} is not a generator of B_{self.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)


@dataclass(frozen=True)
class ClosureData:
    """Combinatorial data of the closed-up braid."""

    components: int
    exponent_sum: int
    strands: int


def parse_braid_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed letters, e.g. "1 1 -2".

    When strands is not given it is inferred as 1 + the largest generator
    index used, so the empty word with no declared strand count lives in B_1.
    """
    tokens = text.split()
    letters = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"bad braid letter {tok!r}") from None
        if value == 0:
            raise ParseError("0 is not a braid letter")
        letters.append(value)
    inferred = 1 + max((abs(x) for x in letters), default=0)
    n = inferred if strands is None else strands
    if n < 1:
        raise ParseError("strand count must be at least 1")
    if n < inferred:
        raise ParseError(f"word uses generators outside B_{n}")
    return BraidWord(n, tuple(letters))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for letter in word.letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(word.strands, tuple(out))


def cyclic_free_reduce(word: BraidWord) -> BraidWord:
    """Free reduction up to cyclic rotation: also cancel across the ends."""
    w = free_reduce(word)
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return BraidWord(word.strands, tuple(letters))


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Image of each strand under the word, 1-based: strand i ends at result[i-1]."""
    positions = list(range(word.strands))
    for letter in word.letters:
        j = abs(letter) - 1
        positions = [j + 1 if p == j else j if p == j + 1 else p
                     for p in positions]
    return tuple(p + 1 for p in positions)


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return count


def closure_data(word: BraidWord) -> ClosureData:
    """Component count and exponent sum of the closure of the word.

    Closure components correspond to cycles of the underlying permutation.
    """
    return ClosureData(components=_cycle_count(permutation(word)),
                       exponent_sum=word.exponent_sum(),
                       strands=word.strands)


_BURAU_NEG1 = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def burau_neg1(word: BraidWord) -> IntMatrix:
    """Reduced Burau matrix at t = -1 of a 3-braid word, letters composed
    left to right.  The generators go to transvections, so the result is
    always in SL(2, Z)."""
    if word.strands != 3:
        raise DomainError("reduced Burau at -1 is implemented for 3-braids")
    a, b, c, d = 1, 0, 0, 1
    for letter in word.letters:
        (p, q), (r, s) = _BURAU_NEG1[letter]
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return IntMatrix.from_rows([[a, b], [c, d]])


def determinant_of_closure_3braid(word: BraidWord) -> int:
    """Determinant of the closed 3-braid, as a nonnegative integer.

    This is |det(B(-1) - I)| for the reduced Burau matrix B(-1); it equals
    the order of H_1 of the double cover of S^3 branched over the closure,
    with 0 meaning that homology is infinite.
    """
    m = burau_neg1(word) - IntMatrix.identity(2)
    return abs(determinant(m))


def branched_cover_h1_3braid(word: BraidWord) -> AbelianGroup:
    """H_1 of the double cover of S^3 branched over the closed 3-braid,
    presented as the cokernel of B(-1) - I."""
    return cokernel(burau_neg1(word) - IntMatrix.identity(2))


def connected_sum_braid(p: int, q: int) -> BraidWord:
    """The 3-braid sigma_1^p sigma_2^q.

    Its closure is the connected sum of the (2, p) and (2, q) torus links,
    so its branched double cover is L(p, 1) # L(q, 1).
    """
    letters = [1 if p > 0 else -1] * abs(p) + [2 if q > 0 else -2] * abs(q)
    return BraidWord(3, tuple(letters))


def power_product_exponents(word: BraidWord) -> tuple[int, int] | None:
    """Recognise words that are sigma_1^p sigma_2^q up to cyclic rotation.

    Returns (p, q) when, after cyclic free reduction, the word consists of
    at most one run of sigma_1^{+-1} letters and at most one run of
    sigma_2^{+-1} letters (runs taken cyclically).  Otherwise None.
    """
    w = cyclic_free_reduce(word)
    if any(abs(x) > 2 for x in w.letters):
        return None
    if not w.letters:
        return (0, 0)
    # Runs of equal letters, with the first and last merged cyclically.
    runs: list[list[int]] = []
    for letter in w.letters:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    p = q = 0
    seen: set[int] = set()
    for letter, count in runs:
        gen = abs(letter)
        if gen in seen:
            return None
        seen.add(gen)
        if gen == 1:
            p = count if letter > 0 else -count
        else:
            q = count if letter > 0 else -count
    return (p, q)


def braid_index_upper(word: BraidWord) -> int:
    """Strand count of the given presentation, an upper bound for the braid
    index of the closure."""
    return word.strands
