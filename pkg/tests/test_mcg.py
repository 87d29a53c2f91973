"""Pants and once-punctured-torus monodromies.

The load-bearing fact checked here: torus_rep composed with the
Birman-Hilden lift equals the Burau action at -1, on a large sample of
random 3-braid words.
"""

import random

import pytest

from bookgenus.braid import BraidWord, burau_neg1
from bookgenus.errors import DomainError, ParseError
from bookgenus.mcg import (PantsMonodromy, TorusTwistWord, birman_hilden_lift,
                           compose_pants, parse_pants, torus_rep)


class TestPants:
    def test_compose_adds(self):
        a = PantsMonodromy(2, -2, 0)
        b = PantsMonodromy(1, 1, 5)
        assert compose_pants(a, b) == PantsMonodromy(3, -1, 5)
        assert compose_pants(a, b) == compose_pants(b, a)

    def test_exponents(self):
        assert PantsMonodromy(2, -2, 0).exponents() == (2, -2, 0)

    def test_parse(self):
        assert parse_pants("2,-2,0") == PantsMonodromy(2, -2, 0)
        assert parse_pants(" 1 , 5 , 0 ") == PantsMonodromy(1, 5, 0)

    def test_parse_rejects(self):
        for bad in ["2,-2", "2,-2,0,1", "a,b,c", "", "2;3;4"]:
            with pytest.raises(ParseError):
                parse_pants(bad)


class TestTorusWord:
    def test_validation(self):
        with pytest.raises(ValueError):
            TorusTwistWord(("x",))
        TorusTwistWord(())

    def test_from_string_and_ops(self):
        w = TorusTwistWord.from_string("aB")
        assert w.letters == ("a", "B")
        assert w.inverse().letters == ("b", "A")
        assert (w * w).letters == ("a", "B", "a", "B")

    def test_letter_level_equality(self):
        # "ab" and "ba" act differently; even homology-equal words with
        # different spellings are unequal as words.
        assert TorusTwistWord.from_string("ab") != TorusTwistWord.from_string("ba")


class TestTorusRep:
    def test_generators(self):
        assert torus_rep(TorusTwistWord.from_string("a")).to_rows() == \
            [[1, 1], [0, 1]]
        assert torus_rep(TorusTwistWord.from_string("b")).to_rows() == \
            [[1, 0], [-1, 1]]
        assert torus_rep(TorusTwistWord.from_string("")).to_rows() == \
            [[1, 0], [0, 1]]

    def test_frozen_products(self):
        assert torus_rep(TorusTwistWord.from_string("aB")).to_rows() == \
            [[2, 1], [1, 1]]
        assert torus_rep(TorusTwistWord.from_string("abab")).to_rows() == \
            [[-1, 1], [-1, 0]]

    def test_braid_relation(self):
        assert torus_rep(TorusTwistWord.from_string("aba")) == \
            torus_rep(TorusTwistWord.from_string("bab"))

    def test_inverse_and_unimodular(self):
        rng = random.Random(6)
        letters = "aAbB"
        for _ in range(300):
            word = TorusTwistWord(
                tuple(rng.choice(letters) for _ in range(rng.randint(0, 25))))
            m = torus_rep(word).to_rows()
            [a, b], [c, d] = m
            assert a * d - b * c == 1
            assert torus_rep(word.inverse()).to_rows() == [[d, -b], [-c, a]]


class TestBirmanHildenLift:
    def test_letter_map(self):
        w = BraidWord(3, (1, -2, 2, -1))
        assert birman_hilden_lift(w).letters == ("a", "B", "b", "A")

    def test_needs_three_strands(self):
        with pytest.raises(DomainError):
            birman_hilden_lift(BraidWord(2, (1,)))

    def test_commutes_with_burau(self):
        rng = random.Random(345)
        gens = (1, -1, 2, -2)
        for _ in range(1000):
            word = BraidWord(
                3, tuple(rng.choice(gens) for _ in range(rng.randint(0, 30))))
            assert torus_rep(birman_hilden_lift(word)) == burau_neg1(word)
