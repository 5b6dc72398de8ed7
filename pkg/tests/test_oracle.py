"""Independent matrix realization and numeric decomposition oracle."""

import random

from hypothesis import given, settings, strategies as st

from gwa.errors import NonSplitSpectrum
from gwa.modules import CycleModule, PathModule, split
from gwa.oracle import (
    kronecker_tensor,
    oracle_composition_series,
    oracle_decompose,
    realize,
)
from gwa.orbit import OrbitConfig, TParam, Word
from gwa.scalars import JordanType, Matrix
from gwa.selftest import _rand_module
from gwa.modules import composition_factors
from gwa.tensorops import tensor


class TestRealize:
    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_defining_relations(self, seed):
        """YX and XY act by the parameter evaluated at the right point."""
        rng = random.Random(seed)
        p = rng.choice([2, 3, 4])
        cfg = OrbitConfig(p)
        m = _rand_module(rng, cfg)
        e = realize(m)
        for i in range(p):
            n = e.dims[i]
            if n == 0:
                continue
            t_val = e.t.evaluate(cfg, i)
            yx = e.Y_maps[(i + 1) % p] * e.X_maps[i]
            assert yx == Matrix.identity(cfg.conductor, n) * t_val

    def test_weight_space_dimensions(self):
        cfg = OrbitConfig(3)
        m = PathModule(cfg, TParam.parse("0:1,2:1", 3), 2,
                       Word(3, 3, "x1x"))
        e = realize(m)
        assert e.dims == (2, 1, 1)

    def test_kronecker_pairs_equal_weights(self):
        cfg = OrbitConfig(3)
        m1 = PathModule(cfg, TParam.parse("0:1", 3), 0, Word(3, 1, "11"))
        m2 = PathModule(cfg, TParam.parse("1:1", 3), 1, Word(3, 2, "11"))
        e = kronecker_tensor(realize(m1), realize(m2))
        assert e.dims == (1, 1, 1)


class TestDecompose:
    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_recovers_known_splitting(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m = _rand_module(rng, cfg)
        if m.dimension > 16:
            return
        try:
            want = split(m)
            got = oracle_decompose(realize(m), seed=seed)
        except NonSplitSpectrum:
            return
        assert got.isomorphic(want)

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_tensor_agreement(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3, 4])
        cfg = OrbitConfig(p)
        m1 = _rand_module(rng, cfg)
        m2 = _rand_module(rng, cfg)
        if m1.dimension * m2.dimension > 36:
            return
        try:
            res = tensor(m1, m2)
            od = oracle_decompose(
                kronecker_tensor(realize(m1), realize(m2)), seed=seed)
        except NonSplitSpectrum:
            return
        assert od.isomorphic(res.decomposition)

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_composition_series_agreement(self, seed):
        rng = random.Random(seed)
        p = rng.choice([2, 3])
        cfg = OrbitConfig(p)
        m = _rand_module(rng, cfg)
        if m.dimension > 14:
            return
        try:
            want = composition_factors(split(m))
            got = oracle_composition_series(realize(m), seed=seed)
        except NonSplitSpectrum:
            return
        assert got.isomorphic(want)

    def test_four_factor_path(self):
        """A path with word xyx has socle length four."""
        cfg = OrbitConfig(3)
        t = TParam.parse("0:1,1:1,2:2", 3)
        m = PathModule(cfg, t, 2, Word(3, 3, "xyx"))
        sym = composition_factors(m)
        orc = oracle_composition_series(realize(m), seed=0)
        assert sym.isomorphic(orc)
        assert sum(mult for _, mult in sym) == 4
