"""Module families, splitting, and composition factors."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from gwa.errors import NonSplitSpectrum, ValidationError
from gwa.modules import (
    CycleModule,
    Decomposition,
    PathModule,
    composition_factors,
    module_from_json,
    split,
)
from gwa.orbit import OrbitConfig, TParam, Word, word_shift
from gwa.scalars import CycloScalar, JordanType


CFG3 = OrbitConfig(3)


def jt(*blocks):
    return JordanType([(CFG3.scalar(b) if isinstance(b, int) else b, s)
                       for b, s in blocks])


class TestValidation:
    def test_path_start_must_be_break(self):
        t = TParam.parse("0:1", 3)
        with pytest.raises(ValidationError):
            PathModule(CFG3, t, 1, Word(3, 2, "1"))

    def test_path_end_must_be_break(self):
        t = TParam.parse("0:1", 3)
        with pytest.raises(ValidationError):
            PathModule(CFG3, t, 0, Word(3, 1, "1"))

    def test_path_letters_checked(self):
        t = TParam.parse("0:1,2:1", 3)
        with pytest.raises(ValidationError):
            PathModule(CFG3, t, 2, Word(3, 3, "y1y1x"))  # pos 4 is break

    def test_cycle_word_length(self):
        with pytest.raises(ValidationError):
            CycleModule(CFG3, TParam.one(3), Word(3, 1, "11"),
                        jt((1, 1)))

    def test_cycle_eigenvalue_nonzero(self):
        with pytest.raises(Exception):
            CycleModule(CFG3, TParam.one(3), Word(3, 1, "111"),
                        jt((0, 1)))


class TestSplitting:
    def test_zero_letter_cuts_path(self):
        t = TParam.parse("0:1,1:1,2:2", 3)
        m = PathModule(CFG3, t, 2, Word(3, 3, "x0x"))
        dec = split(m)
        want = Decomposition([
            PathModule(CFG3, t, 2, Word(3, 3, "x")),
            PathModule(CFG3, t, 1, Word(3, 2, "x")),
        ])
        assert dec.isomorphic(want)

    def test_decomposable_word_from_worked_example(self):
        t = TParam.parse("1:1,2:1", 3)
        m = PathModule(CFG3, t, 2, Word(3, 3, "1yx10x1"))
        dec = split(m)
        want = Decomposition([
            PathModule(CFG3, t, 2, Word(3, 3, "1yx1")),
            PathModule(CFG3, t, 1, Word(3, 2, "x1")),
        ])
        assert dec.isomorphic(want)

    def test_periodic_cycle_splits_with_available_roots(self):
        # two revolutions of the same letters, eigenvalue 4: the factors
        # carry the two square roots +-2
        t = TParam.parse("0:1", 3)
        m = CycleModule(CFG3, t, Word(3, 1, "11x11x"), jt((4, 1)))
        dec = split(m)
        mods = [mod for mod, mult in dec for _ in range(mult)]
        assert len(mods) == 2
        eigs = sorted(repr(mod.F.blocks[0][0]) for mod in mods)
        assert eigs == ["-2", "2"]

    def test_periodic_cycle_without_roots_raises(self):
        cfg = OrbitConfig(2, 4)
        t = TParam.parse("0:1", 2)
        m = CycleModule(cfg, t, Word(2, 1, "1x1x"),
                        JordanType([(CycloScalar.zeta(4, 1), 1)]))
        with pytest.raises(NonSplitSpectrum):
            split(m)

    def test_shifted_cycle_words_are_isomorphic(self):
        t = TParam.parse("0:1", 3)
        w = Word(3, 1, "11x11y")
        m1 = CycleModule(CFG3, t, w, jt((2, 1)))
        m2 = CycleModule(CFG3, t, word_shift(w, 1), jt((2, 1)))
        assert split(m1).isomorphic(split(m2))


class TestCompositionFactors:
    def test_simple_path_is_its_own_factor(self):
        t = TParam.parse("0:1,1:1,2:1", 3)
        m = PathModule(CFG3, t, 0, Word(3, 1, ""))
        assert composition_factors(m).isomorphic(Decomposition([m]))

    def test_length_two_extension(self):
        t = TParam.parse("0:1,1:1,2:1", 3)
        m = PathModule(CFG3, t, 2, Word(3, 3, "x"))
        factors = composition_factors(m)
        want = Decomposition([
            PathModule(CFG3, t, 2, Word(3, 3, "")),
            PathModule(CFG3, t, 0, Word(3, 1, "")),
        ])
        assert factors.isomorphic(want)

    def test_jordan_block_filtration(self):
        m = CycleModule(CFG3, TParam.one(3), Word(3, 1, "111"),
                        jt((2, 3)))
        factors = composition_factors(m)
        want = Decomposition(
            [CycleModule(CFG3, TParam.one(3), Word(3, 1, "111"),
                         jt((2, 1)))] * 3)
        assert factors.isomorphic(want)

    @settings(max_examples=25, deadline=None)
    @given(data=st.data())
    def test_factor_dimensions_add_up(self, data):
        rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
        from gwa.selftest import _rand_module
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m = _rand_module(rng, cfg)
        try:
            factors = composition_factors(split(m))
        except NonSplitSpectrum:
            return
        assert sum(mod.dimension * mult for mod, mult in factors) \
            == m.dimension


class TestSerialization:
    def test_path_json_round_trip(self):
        t = TParam.parse("0:1,2:1", 3)
        m = PathModule(CFG3, t, 2, Word(3, 3, "x1x"))
        assert module_from_json(m.to_json(), CFG3).normal_form() \
            == m.normal_form()

    def test_cycle_json_round_trip(self):
        m = CycleModule(CFG3, TParam.parse("0:2", 3),
                        Word(3, 1, "11y"), jt((2, 2)))
        assert module_from_json(m.to_json(), CFG3).normal_form() \
            == m.normal_form()
