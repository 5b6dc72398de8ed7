"""Exact cyclotomic arithmetic, polynomials, and matrices."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gwa.scalars import (
    CycloScalar,
    JordanType,
    Matrix,
    Poly,
    companion,
    jordan_decompose,
    nth_roots_in_field,
    poly_power_bracket,
    scalar_from_text,
    scalar_to_text,
)
from gwa.errors import ParseError


def z(k=1, N=12):
    return CycloScalar.zeta(N, k)


def rat(v, N=12):
    return CycloScalar.from_rational(Fraction(v), N)


class TestCycloScalar:
    def test_root_of_unity_order(self):
        assert (z(1) ** 12).is_one()
        assert not (z(1) ** 6).is_one()
        assert z(1) ** 6 == rat(-1)

    def test_primitivity(self):
        for k in range(1, 12):
            assert not (z(1) ** k).is_one() or k == 12

    def test_inverse(self):
        s = rat(3) + z(5)
        assert (s * s.inverse()).is_one()
        assert (rat(1) / s) == s.inverse()

    def test_division_and_power(self):
        s = z(7) * rat(Fraction(2, 3))
        assert s ** 0 == rat(1)
        assert s ** -2 == (s * s).inverse()

    def test_lift_to_larger_field(self):
        a = CycloScalar.zeta(3, 1)
        b = a.lift(12)
        assert b == CycloScalar.zeta(12, 4)

    rationals = st.fractions(
        min_value=-5, max_value=5, max_denominator=6)

    @given(a=rationals, b=rationals, k=st.integers(0, 11),
           j=st.integers(0, 11))
    @settings(max_examples=40, deadline=None)
    def test_field_axioms(self, a, b, k, j):
        x = rat(a) * z(k)
        y = rat(b) * z(j)
        w = z(5) + rat(2)
        assert (x + y) * w == x * w + y * w
        assert x * y == y * x
        assert x - x == rat(0)
        if not x.is_zero():
            assert (y / x) * x == y

    @given(a=rationals, k=st.integers(0, 11))
    @settings(max_examples=30, deadline=None)
    def test_text_round_trip(self, a, k):
        s = rat(a) * z(k) + rat(1)
        text = scalar_to_text(s)
        assert scalar_from_text(text, 12) == s

    def test_text_rejects_floats(self):
        with pytest.raises(ParseError):
            scalar_from_text("0.5", 12)
        with pytest.raises(ParseError):
            scalar_from_text("w^2", 12)


class TestPoly:
    def test_x_minus_evaluation(self):
        f = Poly.x_minus(z(3))
        assert f(z(3)).is_zero()
        assert not f(z(4)).is_zero()

    def test_divmod_identity(self):
        f = Poly.x_minus(z(1)) * Poly.x_minus(rat(2)) + Poly(12, [rat(5)])
        g = Poly.x_minus(rat(2))
        q, r = f.divmod(g)
        assert q * g + r == f

    def test_gcd_of_shared_root(self):
        a = Poly.x_minus(z(2)) * Poly.x_minus(rat(3))
        b = Poly.x_minus(z(2)) * Poly.x_minus(rat(4))
        g = a.gcd(b)
        assert g.degree == 1
        assert g(z(2)).is_zero()

    def test_power_bracket_squares_roots(self):
        f = Poly.x_minus(z(2)) * Poly.x_minus(rat(3))
        f2 = poly_power_bracket(f, 2)
        assert f2(z(4)).is_zero()
        assert f2(rat(9)).is_zero()


class TestMatrix:
    def _random_invertible(self, rng, n=3):
        while True:
            m = Matrix(12, [[rat(rng.randint(-3, 3)) * z(rng.randrange(12))
                             for _ in range(n)] for _ in range(n)])
            if not m.det().is_zero():
                return m

    def test_inverse_round_trip(self):
        rng = random.Random(1)
        m = self._random_invertible(rng)
        assert m * m.inverse() == Matrix.identity(12, 3)

    def test_nullspace_annihilates(self):
        m = Matrix(12, [[rat(1), rat(2), rat(3)],
                        [rat(2), rat(4), rat(6)]])
        vecs = m.nullspace()
        assert len(vecs) == 2
        for v in vecs:
            prod = [sum((m.rows[r][c] * v[c] for c in range(3)),
                        start=rat(0)) for r in range(2)]
            assert all(x.is_zero() for x in prod)

    def test_companion_char_poly(self):
        f = (Poly.x_minus(z(2)) * Poly.x_minus(rat(3))).monic()
        c = companion(f)
        assert c.char_poly().monic() == f

    def test_jordan_round_trip(self):
        rng = random.Random(7)
        jt = JordanType([(rat(2), 2), (z(3), 1)])
        m = jt.to_matrix(12)
        g = self._random_invertible(rng, jt.dimension)
        conj = g * m * g.inverse()
        assert jordan_decompose(conj) == jt


class TestRoots:
    def test_square_roots_present(self):
        roots = nth_roots_in_field(z(2), 2)
        assert z(1) in roots and rat(-1) * z(1) in roots

    def test_square_roots_absent(self):
        assert nth_roots_in_field(CycloScalar.zeta(4, 1), 2) == []
