"""Orbit configuration, parameters, and indexed words."""

import pytest
from hypothesis import given, settings, strategies as st

from gwa.errors import ValidationError
from gwa.orbit import (
    OrbitConfig,
    TParam,
    Word,
    canonical_shift,
    cycle_word_for,
    letter_mul,
    primitive_period,
    word_is_periodic,
    word_shift,
    word_tensor,
)


class TestTParam:
    def test_parse_repr_round_trip(self):
        t = TParam.parse("0:1,2:3", 3)
        assert t.exponents == (1, 0, 3)
        assert TParam.parse(repr(t), 3) == t

    def test_breaks(self):
        assert TParam.parse("0:1,2:3", 3).breaks() == {0, 2}
        assert TParam.one(3).breaks() == set()

    def test_vanishes_exactly_on_breaks(self):
        cfg = OrbitConfig(3)
        t = TParam.parse("0:1,2:2", 3)
        for j in range(3):
            value = t.evaluate(cfg, j)
            assert value.is_zero() == (j in t.breaks())

    def test_product_adds_exponents(self):
        a = TParam((1, 0, 2))
        b = TParam((0, 3, 1))
        assert a * b == TParam((1, 3, 3))


class TestLetterMonoid:
    def test_table(self):
        assert letter_mul("1", "1") == "1"
        assert letter_mul("x", "x") == "x"
        assert letter_mul("y", "y") == "y"
        assert letter_mul("x", "1") == "x"
        assert letter_mul("1", "y") == "y"
        assert letter_mul("x", "y") == "0"
        assert letter_mul("y", "x") == "0"
        for a in "01xy":
            assert letter_mul("0", a) == "0"
            assert letter_mul(a, "0") == "0"

    @given(a=st.sampled_from("01xy"), b=st.sampled_from("01xy"),
           c=st.sampled_from("01xy"))
    def test_commutative_associative(self, a, b, c):
        assert letter_mul(a, b) == letter_mul(b, a)
        assert letter_mul(letter_mul(a, b), c) == \
            letter_mul(a, letter_mul(b, c))


class TestWord:
    def test_letters_must_match_breaks(self):
        t = TParam.parse("0:1", 3)  # break at 0 only
        w = Word(3, 1, "11x")  # positions 1,2,3 -> weights 1,2,0
        w.validate_for(t)
        with pytest.raises(ValidationError):
            Word(3, 1, "x1x").validate_for(t)
        with pytest.raises(ValidationError):
            Word(3, 1, "111").validate_for(t)

    def test_cyclic_letter_wraps(self):
        w = Word(3, 1, "11x11y")
        assert w.cyclic_letter(3) == "x"
        assert w.cyclic_letter(6) == "y"
        assert w.cyclic_letter(9) == "x"

    words = st.integers(0, 2 ** 6 - 1).map(
        lambda bits: Word(3, 1, "".join(
            "11" + "xy"[(bits >> k) & 1] for k in range(3))))

    @given(w=words, j=st.integers(-3, 3))
    @settings(max_examples=40, deadline=None)
    def test_shift_properties(self, w, j):
        # shifts count whole revolutions; a full cycle is the identity
        assert word_shift(w, w.repetition).letters == w.letters
        assert len(word_shift(w, j)) == len(w)
        c, _ = canonical_shift(w)
        assert canonical_shift(word_shift(w, j))[0].letters == c.letters

    def test_periodicity(self):
        assert word_is_periodic(Word(3, 1, "11x11x"))
        assert not word_is_periodic(Word(3, 1, "11x11y"))
        assert primitive_period(Word(3, 1, "11x11x")) == 1
        assert primitive_period(Word(3, 1, "11x11y")) == 2

    def test_cycle_word_for(self):
        t = TParam.parse("0:1,2:1", 3)
        w = cycle_word_for(t, 2, {(0, 0): "x", (0, 2): "y",
                                  (1, 0): "y", (1, 2): "x"})
        assert w.letters == "1yx1xy"

    def test_word_tensor_monoid_rule(self):
        a = Word(3, 1, "11x")
        b = Word(3, 1, "11y")
        assert word_tensor(a, a).letters == "11x"
        assert word_tensor(a, b).letters == "110"
