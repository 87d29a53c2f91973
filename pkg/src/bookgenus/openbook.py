"""Abstract open book decompositions and their genus bookkeeping.

An open book is a compact orientable page with nonempty boundary together
with a monodromy.  The closed 3-manifold it presents has a Heegaard
splitting whose genus is 1 - chi(page): doubling the page along the
binding gives a closed surface of that genus.  So the page's Euler
characteristic controls every genus bound in this package, and plumbing
two books adds Euler characteristics (chi = chi1 + chi2 - 1) while merging
one boundary component from each page.

Monodromies are carried structurally for the small pages where we can
compute with them (exponents on the pants, twist words on the once-
punctured torus, a twist power on the annulus) and as an opaque marker
otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .braid import BraidWord, closure_data
from .errors import DomainError, ParseError
from .exactalg import AbelianGroup, IntMatrix, cokernel
from .mcg import PantsMonodromy, TorusTwistWord, birman_hilden_lift, torus_rep


@dataclass(frozen=True)
class PageType:
    """Homeomorphism type of a page: orientable, genus g, b boundary circles."""

    genus: int
    boundary: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.boundary < 1:
            raise ValueError("a page needs at least one boundary circle")

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - self.boundary


DISK = PageType(0, 1)
ANNULUS = PageType(0, 2)
PANTS = PageType(0, 3)
ONE_HOLED_TORUS = PageType(1, 1)


@dataclass(frozen=True)
class PantsExponents:
    """Pants monodromy: boundary twist exponents."""

    twists: PantsMonodromy


@dataclass(frozen=True)
class TorusWord:
    """Once-punctured-torus monodromy: word in the core twists."""

    word: TorusTwistWord


@dataclass(frozen=True)
class AnnulusExponent:
    """Annulus monodromy: a power of the core twist."""

    twists: int


@dataclass(frozen=True)
class DiskTrivial:
    """The only disk monodromy: the identity."""


@dataclass(frozen=True)
class Opaque:
    """Monodromy present but not tracked; only page bookkeeping applies."""


Monodromy = Union[PantsExponents, TorusWord, AnnulusExponent, DiskTrivial, Opaque]

_PAGE_FOR_MONODROMY = {
    PantsExponents: PANTS,
    TorusWord: ONE_HOLED_TORUS,
    AnnulusExponent: ANNULUS,
    DiskTrivial: DISK,
}


@dataclass(frozen=True)
class OpenBook:
    page: PageType
    monodromy: Monodromy

    def __post_init__(self) -> None:
        required = _PAGE_FOR_MONODROMY.get(type(self.monodromy))
        if required is not None and self.page != required:
            raise ValueError(
                f"{type(self.monodromy).__name__} monodromy requires page "
                f"(genus, boundary) = ({required.genus}, {required.boundary})")


def euler_characteristic(page: PageType) -> int:
    """chi of the page: 2 - 2g - b."""
    return page.chi


def induced_heegaard_genus(book: OpenBook) -> int:
    """Genus of the Heegaard splitting obtained by doubling the page."""
    return 1 - book.page.chi


def obg_upper_bound(book: OpenBook) -> int:
    """Upper bound this book gives for the open book genus of its manifold.

    The open book genus is the smallest induced Heegaard genus over all
    open books for the manifold, so any single book bounds it from above.
    """
    return induced_heegaard_genus(book)


def plumb(first: OpenBook, second: OpenBook, *,
          annuli_to_torus: bool = True) -> OpenBook:
    """Plumbing (Murasugi sum along a square) of two open books.

    The pages are glued along a square meeting one boundary component of
    each, so chi = chi1 + chi2 - 1 and the boundary counts satisfy
    b = b1 + b2 - 1.  Generically the genus adds.  The one ambiguous case
    is annulus-with-annulus, where both the once-punctured torus (the two
    core curves meeting once, as in plumbing Hopf bands) and the
    three-holed sphere satisfy the constraints; annuli_to_torus selects
    between them and defaults to the Hopf-band picture.

    The resulting monodromy is not tracked.
    """
    chi = first.page.chi + second.page.chi - 1
    boundary = first.page.boundary + second.page.boundary - 1
    if first.page == ANNULUS and second.page == ANNULUS and not annuli_to_torus:
        page = PANTS
    else:
        genus = first.page.genus + second.page.genus
        if first.page == ANNULUS and second.page == ANNULUS:
            genus, boundary = 1, 1
        else:
            boundary = 2 - 2 * genus - chi
        page = PageType(genus, boundary)
    if page.chi != chi:
        raise AssertionError("plumbing bookkeeping out of sync")
    return OpenBook(page, Opaque())


def h1_connected_binding(book: OpenBook) -> AbelianGroup:
    """H_1 of the closed manifold of a one-boundary-component open book.

    With connected binding, capping off the open book gives the mapping
    torus relation in homology: H_1(M) = coker(rho(monodromy) - I) where
    rho is the action on H_1 of the page.  Only implemented where the
    monodromy is tracked (disk and once-punctured torus pages).
    """
    if book.page.boundary != 1:
        raise DomainError("binding is not connected")
    if isinstance(book.monodromy, DiskTrivial):
        return AbelianGroup.trivial()
    if isinstance(book.monodromy, TorusWord):
        action = torus_rep(book.monodromy.word)
        return cokernel(action - IntMatrix.identity(2))
    raise DomainError("monodromy is not tracked for this page")


def dbc_page(strands: int) -> PageType:
    """Page of the branched-double-cover open book of a closed k-braid.

    The cover of the k-marked disk branched over the marked points has
    genus (k-1)/2 with one boundary circle for odd k, and genus (k-2)/2
    with two boundary circles for even k; either way chi = 2 - k.
    """
    if strands < 1:
        raise DomainError("strand count must be at least 1")
    if strands % 2 == 1:
        return PageType((strands - 1) // 2, 1)
    return PageType((strands - 2) // 2, 2)


def dbc_open_book(word: BraidWord) -> OpenBook:
    """Open book of the double cover of S^3 branched over the braid closure.

    The page is the branched double cover of the disk; the monodromy is the
    lift of the braid.  The lift is tracked for k <= 3 (trivial on the
    disk, a twist power on the annulus, a twist word on the once-punctured
    torus) and opaque for larger k.
    """
    k = word.strands
    page = dbc_page(k)
    monodromy: Monodromy
    if k == 1:
        monodromy = DiskTrivial()
    elif k == 2:
        monodromy = AnnulusExponent(closure_data(word).exponent_sum)
    elif k == 3:
        monodromy = TorusWord(birman_hilden_lift(word))
    else:
        monodromy = Opaque()
    return OpenBook(page, monodromy)


def dbc_obg_bound(word: BraidWord) -> int:
    """Open book genus bound k - 1 from a k-braid presentation.

    This is obg_upper_bound of the branched-cover open book: the page has
    chi = 2 - k, so the induced Heegaard genus is k - 1.
    """
    return obg_upper_bound(dbc_open_book(word))


_NAMED_PAGES = {
    "disk": DISK,
    "disc": DISK,
    "annulus": ANNULUS,
    "pants": PANTS,
    "torus": ONE_HOLED_TORUS,
}

_GXBY = re.compile(r"^g(\d+)b(\d+)$")


def parse_page(token: str) -> PageType:
    """Parse one page descriptor: a name (disk, annulus, pants, torus, with
    torus meaning the once-punctured torus) or gXbY such as g2b1."""
    name = token.strip().lower()
    if name in _NAMED_PAGES:
        return _NAMED_PAGES[name]
    match = _GXBY.match(name)
    if match:
        genus, boundary = int(match.group(1)), int(match.group(2))
        if boundary < 1:
            raise ParseError(f"page {token!r} has no boundary")
        return PageType(genus, boundary)
    raise ParseError(f"bad page descriptor {token!r}")


def parse_pages(text: str) -> list[PageType]:
    """Parse a comma-separated list of page descriptors."""
    tokens = [t for t in (s.strip() for s in text.split(",")) if t]
    if not tokens:
        raise ParseError("no page descriptors given")
    return [parse_page(t) for t in tokens]


def plumb_pages(pages: list[PageType]) -> OpenBook:
    """Plumb a sequence of at least two pages left to right."""
    if len(pages) < 2:
        raise DomainError("plumbing needs at least two pages")
    book = OpenBook(pages[0], Opaque())
    for page in pages[1:]:
        book = plumb(book, OpenBook(page, Opaque()))
    return book
