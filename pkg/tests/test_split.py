"""Split Grothendieck rings: breakless, quotient, and semisimple parts."""

import random

import pytest

from gwa.modules import CycleModule, PathModule
from gwa.orbit import OrbitConfig, TParam, Word, cycle_word_for, word_shift
from gwa.scalars import CycloScalar, JordanType
from gwa.splitring import (
    SemisimpleMonomial,
    SplitElement,
    TrivialMonomial,
    chebyshev_expand,
    ideal_membership,
    module_to_semisimple,
    quotient_band,
    quotient_mul,
    quotient_unit,
    section_alpha,
    semisimple_mul,
    semisimple_to_module,
    trivial_from_polynomial,
    trivial_mul,
    trivial_to_polynomial,
)
from gwa.tensorops import tensor


CFG = OrbitConfig(3, 12)
RNG = random.Random(0)


def rs():
    s = CycloScalar.from_rational(RNG.randint(1, 3), CFG.conductor)
    if RNG.random() < 0.6:
        s = s * CycloScalar.zeta(CFG.conductor, RNG.randrange(CFG.conductor))
    return s


class TestTrivialPart:
    @pytest.mark.parametrize("a,b", [(a, b) for a in (1, 2, 4)
                                     for b in (1, 3, 5)])
    def test_clebsch_gordan_matches_tensor(self, a, b):
        xi, eta = rs(), rs()
        prod = trivial_mul(TrivialMonomial(CFG, xi, a),
                           TrivialMonomial(CFG, eta, b))
        c1 = CycleModule(CFG, TParam.one(3), Word(3, 1, "111"),
                         JordanType([(xi, a)]))
        c2 = CycleModule(CFG, TParam.one(3), Word(3, 1, "111"),
                         JordanType([(eta, b)]))
        got = {}
        for mod, mult in tensor(c1, c2).decomposition:
            (mu, size), = mod.F.blocks
            key = TrivialMonomial(CFG, mu, size)
            got[key] = got.get(key, 0) + mult
        assert got == {m: int(c) for m, c in prod.terms.items()}

    def test_polynomial_round_trip(self):
        terms = {TrivialMonomial(CFG, rs(), RNG.randint(1, 6)):
                 RNG.randint(-3, 3) for _ in range(3)}
        e = SplitElement(CFG, terms)
        assert trivial_from_polynomial(CFG, trivial_to_polynomial(e)) == e

    def test_powers_of_the_size_two_class(self):
        s = SplitElement.from_monomial(TrivialMonomial(CFG, CFG.one(), 2))
        acc = s
        for n in range(2, 6):
            acc = trivial_mul(acc, s)
            top = max(acc.terms, key=lambda m: m.a)
            assert top.a == n + 1 and acc.terms[top] == 1

    def test_chebyshev_expansion(self):
        assert chebyshev_expand(CFG, 3) == {2: 1, 0: -1}


class TestQuotientPart:
    W1 = cycle_word_for(TParam.generator(3, 0), 2,
                        {(0, 0): "x", (1, 0): "y"})
    W2 = cycle_word_for(TParam.generator(3, 0), 1, {(0, 0): "x"})

    def test_distinct_orbits_annihilate(self):
        assert quotient_mul(quotient_band(CFG, self.W1),
                            quotient_band(CFG, self.W2)).is_zero()

    def test_band_square_doubles_power(self):
        b = quotient_band(CFG, self.W1)
        sq = quotient_mul(b, b)
        (m, c), = sq.sorted_terms()
        assert c == 1 and m.n == 2 and m.word.letters == b.word.letters

    def test_unit_root_of_unity_absorbed(self):
        b = quotient_band(CFG, self.W1)
        u = quotient_unit(CFG, CycloScalar.from_rational(-1, CFG.conductor))
        assert quotient_mul(u, b) == SplitElement.from_monomial(b)

    def test_band_is_shift_invariant(self):
        assert quotient_band(CFG, word_shift(self.W1, 1)) == \
            quotient_band(CFG, self.W1)

    def test_ideal_membership(self):
        assert ideal_membership(
            PathModule(CFG, TParam.generator(3, 0), 0, Word(3, 1, "11")))
        assert not ideal_membership(
            CycleModule(CFG, TParam.one(3), Word(3, 1, "111"),
                        JordanType([(CFG.one(), 1)])))


class TestSemisimplePart:
    def _symbols(self):
        syms = []
        for a in range(1, 3):
            syms.append(SemisimpleMonomial(CFG, "x", a))
            syms.append(SemisimpleMonomial(CFG, "y", a, rs()))
            syms.append(SemisimpleMonomial(CFG, "ystar", a, rs()))
        syms.append(SemisimpleMonomial(CFG, "u", xi=rs()))
        return syms

    def test_table_matches_tensor_and_section(self):
        syms = self._symbols()
        for m1 in syms:
            for m2 in syms:
                table = semisimple_mul(m1, m2)
                dec = tensor(semisimple_to_module(m1),
                             semisimple_to_module(m2)).decomposition
                mods = [mod for mod, mult in dec for _ in range(mult)]
                assert len(mods) == 1
                got = SplitElement.from_monomial(
                    module_to_semisimple(mods[0]))
                assert got == table
                assert section_alpha(dec) == table
