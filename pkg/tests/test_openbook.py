"""Open book bookkeeping: pages, plumbing, branched-cover books.

The parity table for branched-cover pages and the chi = 2 - k identity
are frozen here for k up to 8; the cross check at the bottom ties the
homology of the k = 3 cover book to the closure determinant.
"""

import random

import pytest

from bookgenus.braid import (BraidWord, determinant_of_closure_3braid)
from bookgenus.errors import DomainError, ParseError
from bookgenus.exactalg import AbelianGroup, group_order
from bookgenus.mcg import PantsMonodromy, TorusTwistWord
from bookgenus.openbook import (ANNULUS, DISK, ONE_HOLED_TORUS, PANTS,
                                AnnulusExponent, DiskTrivial, Opaque,
                                OpenBook, PageType, PantsExponents, TorusWord,
                                dbc_obg_bound, dbc_open_book, dbc_page,
                                euler_characteristic, h1_connected_binding,
                                induced_heegaard_genus, obg_upper_bound,
                                parse_page, parse_pages, plumb, plumb_pages)


class TestPageType:
    def test_chi_table(self):
        assert euler_characteristic(DISK) == 1
        assert euler_characteristic(ANNULUS) == 0
        assert euler_characteristic(PANTS) == -1
        assert euler_characteristic(ONE_HOLED_TORUS) == -1
        assert euler_characteristic(PageType(2, 1)) == -3

    def test_validation(self):
        with pytest.raises(ValueError):
            PageType(-1, 1)
        with pytest.raises(ValueError):
            PageType(0, 0)


class TestOpenBook:
    def test_page_monodromy_match(self):
        OpenBook(PANTS, PantsExponents(PantsMonodromy(1, 2, 3)))
        OpenBook(ONE_HOLED_TORUS, TorusWord(TorusTwistWord.from_string("ab")))
        OpenBook(ANNULUS, AnnulusExponent(4))
        OpenBook(DISK, DiskTrivial())
        OpenBook(PageType(7, 2), Opaque())

    def test_mismatch_rejected(self):
        with pytest.raises(ValueError):
            OpenBook(DISK, AnnulusExponent(1))
        with pytest.raises(ValueError):
            OpenBook(PANTS, TorusWord(TorusTwistWord.from_string("a")))

    def test_induced_genus(self):
        assert induced_heegaard_genus(OpenBook(DISK, DiskTrivial())) == 0
        assert induced_heegaard_genus(OpenBook(ANNULUS, AnnulusExponent(1))) == 1
        pants_book = OpenBook(PANTS, PantsExponents(PantsMonodromy(1, 1, 1)))
        assert induced_heegaard_genus(pants_book) == 2
        assert obg_upper_bound(pants_book) == 2


class TestPlumb:
    def test_two_annuli_default_torus(self):
        book = plumb(OpenBook(ANNULUS, Opaque()), OpenBook(ANNULUS, Opaque()))
        assert book.page == ONE_HOLED_TORUS
        assert isinstance(book.monodromy, Opaque)

    def test_two_annuli_pants_option(self):
        book = plumb(OpenBook(ANNULUS, Opaque()), OpenBook(ANNULUS, Opaque()),
                     annuli_to_torus=False)
        assert book.page == PANTS

    def test_frozen_combinations(self):
        disk = OpenBook(DISK, Opaque())
        pants = OpenBook(PANTS, Opaque())
        assert plumb(disk, pants).page == PANTS
        assert plumb(pants, pants).page == PageType(0, 5)
        torus = OpenBook(ONE_HOLED_TORUS, Opaque())
        assert plumb(torus, torus).page == PageType(2, 1)

    def test_chi_and_genus_additivity(self):
        rng = random.Random(15)
        for _ in range(300):
            p1 = PageType(rng.randint(0, 4), rng.randint(1, 5))
            p2 = PageType(rng.randint(0, 4), rng.randint(1, 5))
            b1, b2 = OpenBook(p1, Opaque()), OpenBook(p2, Opaque())
            plumbed = plumb(b1, b2)
            assert plumbed.page.chi == p1.chi + p2.chi - 1
            assert plumbed.page.boundary >= 1
            assert induced_heegaard_genus(plumbed) == \
                induced_heegaard_genus(b1) + induced_heegaard_genus(b2)


class TestPageParsing:
    def test_names_and_codes(self):
        assert parse_page("disk") == DISK
        assert parse_page("disc") == DISK
        assert parse_page("Annulus") == ANNULUS
        assert parse_page("pants") == PANTS
        assert parse_page("torus") == ONE_HOLED_TORUS
        assert parse_page("g2b1") == PageType(2, 1)

    def test_rejects(self):
        for bad in ["sphere", "g1b0", "g1", "", "b2"]:
            with pytest.raises(ParseError):
                parse_page(bad)

    def test_parse_pages(self):
        assert parse_pages("annulus, annulus") == [ANNULUS, ANNULUS]
        with pytest.raises(ParseError):
            parse_pages(" , ")

    def test_plumb_pages_needs_two(self):
        with pytest.raises(DomainError):
            plumb_pages([ANNULUS])
        assert plumb_pages([ANNULUS, ANNULUS, ANNULUS]).page == PageType(1, 2)


class TestConnectedBindingHomology:
    def test_disk(self):
        assert h1_connected_binding(OpenBook(DISK, DiskTrivial())) == \
            AbelianGroup.trivial()

    def test_torus_words(self):
        word = TorusWord(TorusTwistWord.from_string("abab"))
        assert h1_connected_binding(OpenBook(ONE_HOLED_TORUS, word)) == \
            AbelianGroup(0, (3,))
        identity = TorusWord(TorusTwistWord.from_string(""))
        assert h1_connected_binding(OpenBook(ONE_HOLED_TORUS, identity)) == \
            AbelianGroup(2)

    def test_rejects(self):
        with pytest.raises(DomainError):
            h1_connected_binding(OpenBook(ANNULUS, AnnulusExponent(2)))
        with pytest.raises(DomainError):
            h1_connected_binding(OpenBook(PageType(1, 1), Opaque()))


class TestBranchedCoverBook:
    def test_parity_table(self):
        expected = {1: (0, 1), 2: (0, 2), 3: (1, 1), 4: (1, 2),
                    5: (2, 1), 6: (2, 2), 7: (3, 1), 8: (3, 2)}
        for k, (genus, boundary) in expected.items():
            page = dbc_page(k)
            assert (page.genus, page.boundary) == (genus, boundary)
            assert page.chi == 2 - k

    def test_monodromy_variants(self):
        assert isinstance(dbc_open_book(BraidWord(1)).monodromy, DiskTrivial)
        two = dbc_open_book(BraidWord(2, (1, 1, 1)))
        assert two.monodromy == AnnulusExponent(3)
        three = dbc_open_book(BraidWord(3, (1, -2)))
        assert three.monodromy == TorusWord(TorusTwistWord.from_string("aB"))
        assert isinstance(dbc_open_book(BraidWord(5, (4,))).monodromy, Opaque)

    def test_obg_bound(self):
        for k in range(1, 9):
            assert dbc_obg_bound(BraidWord(k)) == k - 1

    def test_rejects(self):
        with pytest.raises(DomainError):
            dbc_page(0)

    def test_cover_homology_order_is_determinant(self):
        rng = random.Random(2048)
        gens = (1, -1, 2, -2)
        for _ in range(500):
            word = BraidWord(
                3, tuple(rng.choice(gens) for _ in range(rng.randint(0, 30))))
            book = dbc_open_book(word)
            order = group_order(h1_connected_binding(book))
            det = determinant_of_closure_3braid(word)
            assert order == (det if det != 0 else None)
