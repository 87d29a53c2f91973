"""Monodromy data for the two pages of Euler characteristic -1.

For the pair of pants (three-holed sphere), the mapping class group is the
free abelian group on the three boundary Dehn twists, so a monodromy is
just a triple of twist exponents.

For the once-punctured torus, mapping classes are words in the Dehn twists
a, b along the two core curves; we track the induced action on H_1 of the
torus, which identifies the twist group with SL(2, Z).  The generator
images are chosen so that lifting a 3-braid through the branched double
cover of the disk (sigma_1 -> a, sigma_2 -> b) makes the homology action
equal to the reduced Burau matrix of the braid at t = -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .errors import DomainError, ParseError
from .exactalg import IntMatrix


@dataclass(frozen=True)
class PantsMonodromy:
    """Boundary-twist exponents (r1, r2, r3) on the three-holed sphere."""

    r1: int
    r2: int
    r3: int

    def exponents(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)


def compose_pants(first: PantsMonodromy, second: PantsMonodromy) -> PantsMonodromy:
    """Composition of pants mapping classes; the twist exponents add."""
    return PantsMonodromy(first.r1 + second.r1,
                          first.r2 + second.r2,
                          first.r3 + second.r3)


def parse_pants(text: str) -> PantsMonodromy:
    """Parse "r1,r2,r3" (whitespace around commas allowed)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ParseError("expected exactly three comma-separated twist exponents")
    values = []
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise ParseError(f"bad twist exponent {part!r}") from None
    return PantsMonodromy(*values)


_TORUS_LETTERS = frozenset("aAbB")


@dataclass(frozen=True)
class TorusTwistWord:
    """Word in the core twists of the once-punctured torus.

    Letters: 'a' and 'b' are the positive twists, 'A' and 'B' their
    inverses, applied left to right.  Equality is letter-for-letter; words
    that differ as strings but agree as mapping classes compare unequal.
    """

    letters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter not in _TORUS_LETTERS:
                raise ValueError(f"bad torus twist letter {letter!r}")

    @classmethod
    def from_string(cls, text: str) -> "TorusTwistWord":
        return cls(tuple(text))

    def __mul__(self, other: "TorusTwistWord") -> "TorusTwistWord":
        return TorusTwistWord(self.letters + other.letters)

    def inverse(self) -> "TorusTwistWord":
        return TorusTwistWord(tuple(x.swapcase() for x in reversed(self.letters)))


_TORUS_ACTION = {
    "a": ((1, 1), (0, 1)),
    "A": ((1, -1), (0, 1)),
    "b": ((1, 0), (-1, 1)),
    "B": ((1, 0), (1, 1)),
}


def torus_rep(word: TorusTwistWord) -> IntMatrix:
    """Action of the twist word on H_1 of the torus, in SL(2, Z)."""
    a, b, c, d = 1, 0, 0, 1
    for letter in word.letters:
        (p, q), (r, s) = _TORUS_ACTION[letter]
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return IntMatrix.from_rows([[a, b], [c, d]])


def birman_hilden_lift(word: BraidWord) -> TorusTwistWord:
    """Lift of a 3-braid to the once-punctured torus double covering the
    3-marked disk: sigma_1 -> a, sigma_2 -> b, inverses to inverses."""
    if word.strands != 3:
        raise DomainError("only 3-braids lift to the once-punctured torus")
    table = {1: "a", -1: "A", 2: "b", -2: "B"}
    return TorusTwistWord(tuple(table[x] for x in word.letters))
