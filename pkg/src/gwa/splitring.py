"""Split character rings: classes of modules modulo direct sums only.

Three tractable structures are implemented: the breakless ring with
basis u(xi,a) and Clebsch-Gordan multiplication; the quotient of the
single-break ring by the ideal spanned by path-module classes; and the
semisimple section for the single-break monoid, where tensor products
of simple classes stay simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RootExtractionNeeded
from .groth import (
    GrothElement,
    unit_monomial,
    xpow_monomial,
    ypow_monomial,
    module_to_monomial,
)
from .modules import CycleModule, Decomposition, PathModule, \
    composition_factors
from .orbit import OrbitConfig, Word, canonical_shift, word_is_periodic
from .scalars import CycloScalar, nth_roots_in_field, scalar_to_text


# ---------------------------------------------------------------------------
# breakless ring: basis u(xi, a)


@dataclass(frozen=True)
class TrivialMonomial:
    """Basis class u(xi, a): the breakless cycle with a single Jordan
    block of size a and eigenvalue xi."""

    cfg: OrbitConfig
    xi: CycloScalar
    a: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("block size must be at least 1")
        if self.xi.is_zero():
            raise ValueError("eigenvalue must be nonzero")

    def sort_key(self):
        return (self.a, scalar_to_text(self.xi))

    def __repr__(self):
        return f"u({scalar_to_text(self.xi)},{self.a})"


class SplitElement:
    """Rational linear combination of split-ring basis monomials."""

    __slots__ = ("cfg", "terms")

    def __init__(self, cfg, terms=None):
        self.cfg = cfg
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @staticmethod
    def from_monomial(m, coeff=1):
        return SplitElement(m.cfg, {m: Fraction(coeff)})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SplitElement(self.cfg, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return SplitElement(self.cfg, out)

    def scale(self, coeff):
        coeff = Fraction(coeff)
        return SplitElement(self.cfg,
                            {m: c * coeff for m, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SplitElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(repr(m) if c == 1 else f"{c}*{m!r}"
                          for m, c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "monomial": repr(m)}
                for m, c in self.sorted_terms()]


def _mul_elements(e1, e2, mono_mul):
    out = SplitElement(e1.cfg, {})
    for m1, c1 in e1.terms.items():
        for m2, c2 in e2.terms.items():
            out = out + mono_mul(m1, m2).scale(c1 * c2)
    return out


def trivial_mul(m1, m2):
    """Clebsch-Gordan product of two Jordan-block classes:
    u(xi,a) u(eta,b) = sum over k of u(xi eta, a+b-2k+1)."""
    if isinstance(m1, SplitElement):
        return _mul_elements(m1, m2, trivial_mul)
    cfg = m1.cfg
    terms = {}
    for k in range(1, min(m1.a, m2.a) + 1):
        mono = TrivialMonomial(cfg, m1.xi * m2.xi, m1.a + m2.a - 2 * k + 1)
        terms[mono] = terms.get(mono, Fraction(0)) + 1
    return SplitElement(cfg, terms)


def chebyshev_expand(cfg, a):
    """u(1,a) written as a polynomial in s = u(1,2): dict power -> coeff,
    via the recurrence u(1,a) = u(1,a-1) s - u(1,a-2)."""
    prev = {0: Fraction(1)}   # u(1,1) = 1
    if a == 1:
        return prev
    cur = {1: Fraction(1)}    # u(1,2) = s
    for _ in range(a - 2):
        nxt = {k + 1: c for k, c in cur.items()}
        for k, c in prev.items():
            nxt[k] = nxt.get(k, Fraction(0)) - c
        prev, cur = cur, {k: c for k, c in nxt.items() if c}
    return cur


def trivial_to_polynomial(elem):
    """Express a basis element in the polynomial generators: returns a
    dict (xi, n) -> coeff meaning u(xi,1) * u(1,2)^n."""
    out = {}
    for m, c in elem.terms.items():
        for n, cc in chebyshev_expand(m.cfg, m.a).items():
            key = (m.xi, n)
            out[key] = out.get(key, Fraction(0)) + c * cc
    return {k: v for k, v in out.items() if v}


def trivial_from_polynomial(cfg, poly):
    """Inverse of trivial_to_polynomial: expand u(xi,1) u(1,2)^n into
    the u(xi,a) basis."""
    out = SplitElement(cfg, {})
    s = TrivialMonomial(cfg, cfg.one(), 2)
    for (xi, n), c in poly.items():
        acc = SplitElement.from_monomial(TrivialMonomial(cfg, xi, 1), c)
        for _ in range(n):
            acc = _mul_elements(acc, SplitElement.from_monomial(s),
                                trivial_mul)
        out = out + acc
    return out


def ideal_membership(m):
    """True iff the indecomposable class lies in the span of the
    path-module classes (which forms an ideal)."""
    if isinstance(m, PathModule):
        return True
    if isinstance(m, CycleModule):
        return False
    raise TypeError("expected an indecomposable module class")


# ---------------------------------------------------------------------------
# quotient of the single-break ring by the path-class ideal


@dataclass(frozen=True)
class QuotientMonomial:
    """Basis monomial of the single-break quotient ring.

    Without a directional part: u_xi * u(1,2)^a, stored as (xi, a).
    With one: the unit part is stored by the invariant xi^r, where r is
    the revolution count of the canonical word representative; the
    monomial is u_{xi} * u(1,2)^a * y_w^n with xi determined only up to
    r-th roots of unity.
    """

    cfg: OrbitConfig
    xi: CycloScalar          # the unit scalar, or its r-th power invariant
    a: int                   # u(1,2) exponent
    word: Word | None = None  # canonical orbit representative, or None
    n: int = 0               # directional exponent

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("polynomial exponent must be non-negative")
        if (self.word is None) != (self.n == 0):
            raise ValueError("directional word and exponent must agree")
        if self.word is not None:
            if self.n < 1:
                raise ValueError("directional exponent must be positive")
            if word_is_periodic(self.word):
                raise ValueError("directional word must be non-periodic")
            if canonical_shift(self.word)[0].letters != self.word.letters:
                raise ValueError("directional word must be the canonical "
                                 "orbit representative")
        if self.xi.is_zero():
            raise ValueError("unit scalar must be nonzero")

    @property
    def revolutions(self):
        return self.word.repetition if self.word is not None else 0

    def sort_key(self):
        return (self.n, self.word.letters if self.word else "", self.a,
                scalar_to_text(self.xi))

    def __repr__(self):
        parts = []
        if not self.xi.is_one():
            if self.word is None:
                parts.append(f"u[{scalar_to_text(self.xi)}]")
            else:
                parts.append(
                    f"u[{scalar_to_text(self.xi)}^(1/{self.revolutions})]")
        if self.a:
            parts.append(f"u[1,2]^{self.a}" if self.a > 1 else "u[1,2]")
        if self.word is not None:
            yw = f"yw[{self.word.letters}]"
            parts.append(f"{yw}^{self.n}" if self.n > 1 else yw)
        return "*".join(parts) if parts else "u[1]"

    def representative_unit(self):
        """An explicit unit scalar for display: an r-th root of the
        stored invariant when a directional part is present."""
        if self.word is None or self.revolutions == 1:
            return self.xi
        r = self.revolutions
        roots = nth_roots_in_field(self.xi, r)
        if not roots:
            raise RootExtractionNeeded(
                f"no {r}-th root of {scalar_to_text(self.xi)} in the "
                f"cyclotomic field of conductor {self.cfg.conductor}",
                required_conductor=self.cfg.conductor * r)
        return roots[0]


def quotient_unit(cfg, xi=None, a=0):
    return QuotientMonomial(cfg, cfg.one() if xi is None else xi, a)


def quotient_band(cfg, word, xi=None, a=0, n=1, xi_is_invariant=False):
    """Build a directional monomial; xi is the plain unit scalar unless
    xi_is_invariant is set, in which case it is already the r-th power."""
    w, _ = canonical_shift(word)
    xi = cfg.one() if xi is None else xi
    if not xi_is_invariant:
        xi = xi ** w.repetition
    return QuotientMonomial(cfg, xi, a, w, n)


def quotient_mul(m1, m2):
    """Product in the quotient ring: unit parts multiply, polynomial
    exponents add, and directional parts combine only on the same
    shift orbit (distinct orbits annihilate)."""
    if isinstance(m1, SplitElement):
        return _mul_elements(m1, m2, quotient_mul)
    cfg = m1.cfg
    if m1.word is not None and m2.word is not None:
        if m1.word.letters != m2.word.letters:
            return SplitElement(cfg, {})
        mono = QuotientMonomial(cfg, m1.xi * m2.xi, m1.a + m2.a,
                                m1.word, m1.n + m2.n)
        return SplitElement.from_monomial(mono)
    if m1.word is None and m2.word is None:
        return SplitElement.from_monomial(
            QuotientMonomial(cfg, m1.xi * m2.xi, m1.a + m2.a))
    unit, band = (m1, m2) if m1.word is None else (m2, m1)
    r = band.revolutions
    mono = QuotientMonomial(cfg, (unit.xi ** r) * band.xi,
                            unit.a + band.a, band.word, band.n)
    return SplitElement.from_monomial(mono)


# ---------------------------------------------------------------------------
# semisimple section for the single-break monoid


@dataclass(frozen=True)
class SemisimpleMonomial:
    """Simple class over the single-break monoid: one of u_xi, x_a,
    y_{a,xi}, y*_{a,xi}."""

    cfg: OrbitConfig
    kind: str                # "u", "x", "y", "ystar"
    a: int = 0
    xi: CycloScalar | None = None

    def __post_init__(self):
        if self.kind not in ("u", "x", "y", "ystar"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "u":
            if self.a:
                raise ValueError("unit class carries no degree")
        elif self.a < 1:
            raise ValueError("degree must be positive")
        if self.kind != "x" and (self.xi is None or self.xi.is_zero()):
            raise ValueError("unit scalar must be nonzero")
        if self.kind == "x" and self.xi is not None:
            raise ValueError("x classes carry no unit scalar")

    def sort_key(self):
        kinds = {"u": 0, "x": 1, "y": 2, "ystar": 3}
        return (kinds[self.kind], self.a,
                scalar_to_text(self.xi) if self.xi is not None else "")

    def __repr__(self):
        if self.kind == "u":
            return f"u[{scalar_to_text(self.xi)}]"
        if self.kind == "x":
            return f"xa[{self.a}]"
        sym = "ya" if self.kind == "y" else "ysa"
        return f"{sym}[{self.a},{scalar_to_text(self.xi)}]"


def semisimple_mul(m1, m2):
    """Multiplication table of the simple classes; every product of two
    simple classes is again a single simple class."""
    if isinstance(m1, SplitElement):
        return _mul_elements(m1, m2, semisimple_mul)
    cfg = m1.cfg
    k1, k2 = m1.kind, m2.kind
    if k1 == "u" and k2 == "u":
        out = SemisimpleMonomial(cfg, "u", xi=m1.xi * m2.xi)
    elif "u" in (k1, k2):
        other = m2 if k1 == "u" else m1
        unit = m1 if k1 == "u" else m2
        if other.kind == "x":
            out = other
        else:
            out = SemisimpleMonomial(cfg, other.kind, other.a,
                                     unit.xi * other.xi)
    elif "x" in (k1, k2):
        out = SemisimpleMonomial(cfg, "x", m1.a + m2.a)
    elif k1 == k2:
        out = SemisimpleMonomial(cfg, k1, m1.a + m2.a, m1.xi * m2.xi)
    else:
        out = SemisimpleMonomial(cfg, "x", m1.a + m2.a)
    return SplitElement.from_monomial(out)


def semisimple_to_module(m):
    """The simple module carried by a semisimple-section symbol."""
    from .groth import monomial_to_module
    cfg = m.cfg
    if m.kind == "u":
        return monomial_to_module(unit_monomial(cfg, m.xi))
    if m.kind == "x":
        return monomial_to_module(xpow_monomial(cfg, 0, m.a))
    powers = [0] * cfg.p
    powers[0] = m.a
    return monomial_to_module(
        ypow_monomial(cfg, powers, m.xi, star=(m.kind == "ystar")))


def module_to_semisimple(mod):
    """Inverse of semisimple_to_module on simple single-break modules."""
    mono = module_to_monomial(mod)
    cfg = mono.cfg
    if mono.kind == "unit":
        return SemisimpleMonomial(cfg, "u", xi=mono.xi)
    if mono.kind == "xpow":
        if mono.i != 0:
            raise ValueError("class outside the single-break monoid")
        return SemisimpleMonomial(cfg, "x", mono.powers[0])
    if mono.kind in ("ypow", "ystar"):
        if any(mono.powers[1:]):
            raise ValueError("class outside the single-break monoid")
        kind = "y" if mono.kind == "ypow" else "ystar"
        return SemisimpleMonomial(cfg, kind, mono.powers[0], mono.xi)
    raise ValueError("class outside the single-break monoid")


def section_alpha(value):
    """Section of the canonical surjection: the class of the direct sum
    of the simple subquotients, as a semisimple-section element."""
    if isinstance(value, Decomposition):
        dec = value
    else:
        dec = Decomposition([value])
    out = {}
    for simple, mult in composition_factors(dec):
        sym = module_to_semisimple(simple)
        out[sym] = out.get(sym, Fraction(0)) + mult
    cfg = next(iter(out)).cfg if out else None
    return SplitElement(cfg, out)
