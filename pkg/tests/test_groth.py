"""Symbolic product ring: rewrite rules, module route, Hilbert counts."""

import random

from hypothesis import given, settings, strategies as st

from gwa.groth import (
    GrothElement,
    arc_monomial,
    basis_dimension,
    groth_mul_modules,
    groth_mul_rewrite,
    hilbert_enumerated_coeff,
    hilbert_series_coeff,
    module_to_monomial,
    monomial_to_module,
    quotient_basis_monomials,
    unit_monomial,
    xpow_monomial,
    ypow_monomial,
)
from gwa.orbit import OrbitConfig
from gwa.scalars import CycloScalar


def _rand_scalar(rng, cfg):
    N = cfg.conductor
    s = CycloScalar.from_rational(rng.randint(1, 3), N)
    if rng.random() < 0.5:
        s = s * CycloScalar.zeta(N, rng.randrange(N))
    return s


def _rand_monomial(rng, cfg):
    p = cfg.p
    kind = rng.choice(["arc", "xpow", "unit", "ypow", "ystar"])
    if kind == "arc":
        i = rng.randrange(p)
        j = rng.choice([k for k in range(p) if k != i])
        powers = [0] * p
        allowed = [k for k in range(p)
                   if not (k != i and k != j and (k - i) % p < (j - i) % p)]
        for k in allowed:
            if rng.random() < 0.4:
                powers[k] = rng.randint(1, 2)
        return arc_monomial(cfg, i, j, powers)
    if kind == "xpow":
        return xpow_monomial(cfg, rng.randrange(p), rng.randint(1, 3))
    if kind == "unit":
        return unit_monomial(cfg, _rand_scalar(rng, cfg))
    powers = [0] * p
    while not any(powers):
        powers = [rng.randint(0, 2) for _ in range(p)]
    return ypow_monomial(cfg, powers, _rand_scalar(rng, cfg),
                         star=(kind == "ystar"))


class TestRoundTrip:
    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_monomial_module_round_trip(self, seed):
        rng = random.Random(seed)
        cfg = OrbitConfig(rng.choice([2, 3, 4]))
        m = _rand_monomial(rng, cfg)
        assert module_to_monomial(monomial_to_module(m)) == m


class TestProducts:
    def test_x0_times_x1_is_arc_sum(self):
        cfg = OrbitConfig(3)
        e = groth_mul_rewrite(
            GrothElement.from_monomial(xpow_monomial(cfg, 0)),
            GrothElement.from_monomial(xpow_monomial(cfg, 1)))
        want = GrothElement.from_monomial(arc_monomial(cfg, 0, 1)) + \
            GrothElement.from_monomial(arc_monomial(cfg, 1, 0))
        assert e == want

    def test_disjoint_arcs_annihilate(self):
        cfg = OrbitConfig(4)
        e = groth_mul_rewrite(
            GrothElement.from_monomial(arc_monomial(cfg, 0, 1)),
            GrothElement.from_monomial(arc_monomial(cfg, 2, 3)))
        assert e.is_zero()

    def test_unit_is_identity(self):
        cfg = OrbitConfig(3)
        one = GrothElement.from_monomial(unit_monomial(cfg))
        for rngseed in range(5):
            rng = random.Random(rngseed)
            e = GrothElement.from_monomial(_rand_monomial(rng, cfg))
            assert groth_mul_rewrite(one, e) == e

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_routes_agree(self, seed):
        rng = random.Random(seed)
        cfg = OrbitConfig(rng.choice([2, 3, 4]))
        e1 = GrothElement.from_monomial(_rand_monomial(rng, cfg))
        e2 = GrothElement.from_monomial(_rand_monomial(rng, cfg))
        a = groth_mul_rewrite(e1, e2)
        assert a == groth_mul_modules(e1, e2)
        assert a == groth_mul_rewrite(e2, e1)

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_associative(self, seed):
        rng = random.Random(seed)
        cfg = OrbitConfig(rng.choice([2, 3]))
        es = [GrothElement.from_monomial(_rand_monomial(rng, cfg))
              for _ in range(3)]
        lhs = groth_mul_rewrite(groth_mul_rewrite(es[0], es[1]), es[2])
        rhs = groth_mul_rewrite(es[0], groth_mul_rewrite(es[1], es[2]))
        assert lhs == rhs


class TestHilbert:
    def test_known_coefficients_p3(self):
        assert [hilbert_series_coeff(3, d) for d in range(5)] == \
            [1, 9, 21, 38, 60]

    def test_enumeration_matches_series(self):
        for p in range(1, 5):
            for deg in range(7):
                assert hilbert_enumerated_coeff(p, deg) == \
                    hilbert_series_coeff(p, deg)

    def test_graded_piece_counts(self):
        from gwa.groth import _compositions
        for p in (2, 3):
            for deg in range(5):
                for d in _compositions(deg, p):
                    monos = quotient_basis_monomials(p, d)
                    assert len(monos) == len(set(monos))
                    want = 1 if not any(d) else \
                        2 + sum(1 for a in d if a > 0)
                    assert basis_dimension(p, d) == want
