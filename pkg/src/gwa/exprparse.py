"""Text expression grammar for modules and ring elements.

Module literals:
    V[t=0:1,2:1; i=2; w="x1x"]            -- path module
    V[t=1:1; w="x11"@1; F=[["1",1]]]      -- cycle module with eigen-data

Ring elements are '+'-separated terms; each term is an optional
rational coefficient followed by a '*'-separated product of generators,
optionally raised with '^'. Generator sets depend on the ring:
    character ring:  u[s]  x[i]  x[i,j]  y[i]  ys[i]
    trivial split:   u[s,a]
    quotient split:  u[s]  u[s,a]  yw[word]
    semisimple:      u[s]  xa[a]  ya[a,s]  ysa[a,s]
Scalar literals s are sums of products of rationals and powers z^k of
the primitive root of unity of the configured conductor.
"""

from __future__ import annotations

import ast
from fractions import Fraction

from .errors import ParseError
from .modules import CycleModule, PathModule
from .orbit import TParam, Word
from .scalars import JordanType, scalar_from_text


def _split_top(text, sep):
    """Split on a separator at bracket depth zero, skipping quotes."""
    parts = []
    cur = []
    depth = 0
    in_quote = False
    for ch in text:
        if ch == '"':
            in_quote = not in_quote
            cur.append(ch)
        elif in_quote:
            cur.append(ch)
        elif ch in "[(":
            depth += 1
            cur.append(ch)
        elif ch in "])":
            depth -= 1
            cur.append(ch)
        elif ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_module(text, cfg):
    """Parse a module literal V[...]."""
    text = text.strip()
    if not text.startswith("V[") or not text.endswith("]"):
        raise ParseError("module literal must look like V[...]", 0)
    body = text[2:-1]
    fields = {}
    order = []
    for part in _split_top(body, ";"):
        part = part.strip()
        if not part:
            continue
        key, eq, value = part.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {part!r}")
        key = key.strip()
        if key in fields:
            raise ParseError(f"duplicate field {key!r}")
        fields[key] = value.strip()
        order.append(key)
    if "t" not in fields or "w" not in fields:
        raise ParseError("module literal needs t= and w= fields")
    t = TParam.parse(fields["t"], cfg.p)
    word_text, start = _parse_word_field(fields["w"])
    if "i" in fields:
        try:
            i = int(fields["i"]) % cfg.p
        except ValueError:
            raise ParseError(f"bad index {fields['i']!r}")
        if start is not None and start % cfg.p != (i + 1) % cfg.p:
            raise ParseError("word start is inconsistent with the "
                             "path index")
        return PathModule(cfg, t, i, Word(cfg.p, i + 1, word_text))
    start = 1 if start is None else start
    if start != 1:
        raise ParseError("cycle words start at position 1")
    if "F" not in fields:
        raise ParseError("cycle literal needs an F= field")
    jordan = _parse_jordan(fields["F"], cfg)
    return CycleModule(cfg, t, Word(cfg.p, 1, word_text), jordan)


def _parse_word_field(value):
    value = value.strip()
    start = None
    if "@" in value:
        value, _, start_text = value.rpartition("@")
        try:
            start = int(start_text)
        except ValueError:
            raise ParseError(f"bad word start {start_text!r}")
    value = value.strip()
    if value.startswith('"') and value.endswith('"') and len(value) >= 2:
        value = value[1:-1]
    for pos, ch in enumerate(value):
        if ch not in "01xy":
            raise ParseError(f"letter {ch!r} is not in {{0,1,x,y}}", pos)
    return value, start


def _parse_jordan(value, cfg):
    try:
        data = ast.literal_eval(value)
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"bad eigen-data literal: {exc}")
    if not isinstance(data, (list, tuple)):
        raise ParseError("eigen-data must be a list of [scalar, size]")
    blocks = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError("each eigen block is a [scalar, size] pair")
        text, size = item
        blocks.append((scalar_from_text(str(text), cfg.conductor),
                       int(size)))
    return JordanType(blocks)


# ---------------------------------------------------------------------------
# ring elements


def _parse_gen(text, cfg, ring):
    """One generator token like u[...], returning a basis monomial and
    the ring-appropriate monomial-multiplication callable."""
    from . import groth, splitring
    text = text.strip()
    name, bracket, rest = text.partition("[")
    if not bracket or not rest.endswith("]"):
        raise ParseError(f"generator {text!r} must look like name[args]")
    args = _split_top(rest[:-1], ",")
    args = [a.strip() for a in args]

    def scal(a):
        return scalar_from_text(a, cfg.conductor)

    def intarg(a):
        try:
            return int(a)
        except ValueError:
            raise ParseError(f"expected an integer, got {a!r}")

    if ring == "groth":
        if name == "u" and len(args) == 1:
            return groth.unit_monomial(cfg, scal(args[0]))
        if name == "x" and len(args) == 1:
            return groth.xpow_monomial(cfg, intarg(args[0]))
        if name == "x" and len(args) == 2:
            return groth.arc_monomial(cfg, intarg(args[0]), intarg(args[1]))
        if name in ("y", "ys") and len(args) == 1:
            powers = [0] * cfg.p
            powers[intarg(args[0]) % cfg.p] = 1
            return groth.ypow_monomial(cfg, powers, star=(name == "ys"))
    elif ring == "trivial":
        if name == "u" and len(args) == 2:
            return splitring.TrivialMonomial(cfg, scal(args[0]),
                                             intarg(args[1]))
        if name == "u" and len(args) == 1:
            return splitring.TrivialMonomial(cfg, scal(args[0]), 1)
    elif ring == "quotient":
        if name == "u" and len(args) == 1:
            return splitring.quotient_unit(cfg, scal(args[0]))
        if name == "u" and len(args) == 2:
            return splitring.quotient_unit(cfg, scal(args[0]),
                                           intarg(args[1]))
        if name == "yw" and 1 <= len(args) <= 2:
            letters = args[0].strip()
            if len(letters) >= 2 and letters[0] == letters[-1] \
                    and letters[0] in "\"'":
                letters = letters[1:-1]
            word = Word(cfg.p, 1, letters)
            xi = scal(args[1]) if len(args) == 2 else None
            return splitring.quotient_band(cfg, word, xi)
    elif ring == "semisimple":
        if name == "u" and len(args) == 1:
            return splitring.SemisimpleMonomial(cfg, "u", xi=scal(args[0]))
        if name == "xa" and len(args) == 1:
            return splitring.SemisimpleMonomial(cfg, "x", intarg(args[0]))
        if name in ("ya", "ysa") and len(args) == 2:
            kind = "y" if name == "ya" else "ystar"
            return splitring.SemisimpleMonomial(cfg, kind, intarg(args[0]),
                                                scal(args[1]))
    raise ParseError(f"unknown generator {text!r} for ring {ring!r}")


def _ring_ops(cfg, ring):
    """(one-element, monomial-to-element, multiply) for the ring."""
    from . import groth, splitring
    if ring == "groth":
        one = groth.GrothElement.from_monomial(groth.unit_monomial(cfg))
        return (one, groth.GrothElement.from_monomial,
                groth.groth_mul_rewrite)
    lift = splitring.SplitElement.from_monomial
    if ring == "trivial":
        one = lift(splitring.TrivialMonomial(cfg, cfg.one(), 1))
        mul = splitring.trivial_mul
    elif ring == "quotient":
        one = lift(splitring.quotient_unit(cfg))
        mul = splitring.quotient_mul
    elif ring == "semisimple":
        one = lift(splitring.SemisimpleMonomial(cfg, "u", xi=cfg.one()))
        mul = splitring.semisimple_mul
    else:
        raise ParseError(f"unknown ring {ring!r}")

    def elem_mul(e1, e2):
        if not hasattr(e1, "terms"):
            e1 = lift(e1)
        return mul(e1, e2 if hasattr(e2, "terms") else lift(e2))

    return one, lift, elem_mul


def parse_ring_element(text, cfg, ring="groth"):
    """Parse a '+'-separated ring element in the given ring's grammar."""
    one, lift, mul = _ring_ops(cfg, ring)
    total = None
    for term in _split_top(text.strip(), "+"):
        term = term.strip()
        if not term:
            raise ParseError("empty term")
        coeff = Fraction(1)
        factors = _split_top(term, "*")
        acc = one
        for factor in factors:
            factor = factor.strip()
            if not factor:
                raise ParseError(f"empty factor in {term!r}")
            power = 1
            if "^" in factor and not factor.startswith("u["):
                base, _, exp_text = factor.rpartition("^")
                if "]" not in exp_text:
                    try:
                        power = int(exp_text)
                    except ValueError:
                        raise ParseError(f"bad exponent {exp_text!r}")
                    factor = base
            if "[" not in factor:
                try:
                    coeff *= Fraction(factor) ** power
                    continue
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad coefficient {factor!r}")
            mono = _parse_gen(factor, cfg, ring)
            for _ in range(power):
                acc = mul(acc, lift(mono))
        acc = acc.scale(coeff)
        total = acc if total is None else total + acc
    if total is None:
        raise ParseError("empty element")
    return total
