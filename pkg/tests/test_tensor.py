"""Tensor product decomposition of weight modules."""

import random

from hypothesis import given, settings, strategies as st

from gwa.errors import NonSplitSpectrum
from gwa.modules import CycleModule, Decomposition, PathModule, split
from gwa.orbit import OrbitConfig, TParam, Word
from gwa.scalars import JordanType
from gwa.selftest import _rand_module, _rand_scalar
from gwa.tensorops import tensor


CFG3 = OrbitConfig(3)


def unit(cfg, value=1):
    return CycleModule(cfg, TParam.one(cfg.p), Word(cfg.p, 1, "1" * cfg.p),
                       JordanType([(cfg.scalar(value), 1)]))


class TestWorkedExample:
    T = TParam.parse("0:1,2:1", 3)
    TP = TParam.parse("1:1,2:1", 3)
    TT = T * TP

    def expected(self):
        return Decomposition([
            PathModule(CFG3, self.TT, 2, Word(3, 3, "xyx")),
            PathModule(CFG3, self.TT, 2, Word(3, 3, "")),
            PathModule(CFG3, self.TT, 2, Word(3, 3, "x")),
            PathModule(CFG3, self.TT, 2, Word(3, 3, "x")),
            PathModule(CFG3, self.TT, 1, Word(3, 2, "x")),
        ])

    def test_direct_route(self):
        m1 = PathModule(CFG3, self.T, 2, Word(3, 3, "x1x"))
        m2 = PathModule(CFG3, self.TP, 2, Word(3, 3, "1yx10x1"))
        assert tensor(m1, m2).decomposition.isomorphic(self.expected())

    def test_pre_split_route(self):
        m1 = PathModule(CFG3, self.T, 2, Word(3, 3, "x1x"))
        m2 = PathModule(CFG3, self.TP, 2, Word(3, 3, "1yx10x1"))
        dec = tensor(m1, split(m2)).decomposition
        assert dec.isomorphic(self.expected())


class TestStructure:
    @staticmethod
    def _weight_dims(m):
        p = m.cfg.p
        dims = [0] * p
        if isinstance(m, PathModule):
            for k in range(m.i + 1, m.i + len(m.w) + 2):
                dims[k % p] += 1
        else:
            r = m.w.repetition
            for w in range(p):
                dims[w] = r * m.F.dimension
        return dims

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_dimensions_multiply_weight_by_weight(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m1 = _rand_module(rng, cfg)
        m2 = _rand_module(rng, cfg)
        try:
            dec = tensor(m1, m2).decomposition
        except NonSplitSpectrum:
            return
        d1 = self._weight_dims(m1)
        d2 = self._weight_dims(m2)
        got = [0] * p
        for m, mult in dec:
            for w, d in enumerate(self._weight_dims(m)):
                got[w] += d * mult
        assert got == [a * b for a, b in zip(d1, d2)]

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_commutative(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m1 = _rand_module(rng, cfg)
        m2 = _rand_module(rng, cfg)
        try:
            a = tensor(m1, m2).decomposition
            b = tensor(m2, m1).decomposition
        except NonSplitSpectrum:
            return
        assert a.isomorphic(b)

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_associative(self, seed):
        rng = random.Random(seed)
        cfg = OrbitConfig(2)
        mods = [_rand_module(rng, cfg) for _ in range(3)]
        if any(m.dimension > 6 for m in mods):
            return
        try:
            lhs = tensor(tensor(mods[0], mods[1]).decomposition,
                         mods[2]).decomposition
            rhs = tensor(mods[0],
                         tensor(mods[1], mods[2]).decomposition
                         ).decomposition
        except NonSplitSpectrum:
            return
        assert lhs.isomorphic(rhs)

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_unit_acts_trivially(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m = _rand_module(rng, cfg)
        try:
            dec = tensor(unit(cfg), m).decomposition
            assert dec.isomorphic(split(m))
        except NonSplitSpectrum:
            return

    def test_unit_scalar_twists_eigenvalue(self):
        cfg = OrbitConfig(3)
        rng = random.Random(3)
        xi = _rand_scalar(rng, cfg)
        m = CycleModule(cfg, TParam.parse("0:1", 3), Word(3, 1, "11x"),
                        JordanType([(cfg.scalar(2), 1)]))
        dec = tensor(unit(cfg, 5), m).decomposition
        (mod, mult), = dec.summands
        assert mult == 1
        assert mod.F.blocks[0][0] == cfg.scalar(10)
        del xi


class TestTwoBreakCounterexample:
    def test_indecomposable_of_length_two(self):
        t = TParam.parse("0:1", 3)
        tp = TParam.parse("1:1,2:1", 3)
        m1 = CycleModule(CFG3, t, Word(3, 1, "11x"),
                         JordanType([(CFG3.one(), 1)]))
        m2 = PathModule(CFG3, tp, 2, Word(3, 3, "1"))
        dec = tensor(m1, m2).decomposition
        want = Decomposition([PathModule(CFG3, t * tp, 2, Word(3, 3, "x"))])
        assert dec.isomorphic(want)
