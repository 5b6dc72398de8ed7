"""Tensor product decomposition of weight modules.

The product of two weight modules over parameters t and t' is a weight
module over t*t'; it decomposes as a direct sum read off from aligned
word products. All routines return the fully normalized decomposition
into indecomposables.
"""

from __future__ import annotations

from math import gcd

from .errors import PreconditionBreaks
from .modules import (
    CycleModule,
    Decomposition,
    PathModule,
    split,
    split_cycle,
    split_path_at_zeros,
)
from .orbit import (
    Word,
    letter_mul,
    require_same_config,
    scalar_twist_product,
    word_shift,
    word_tensor,
)
from .scalars import JordanType, jordan_decompose, poly_power_bracket, Poly


class TensorResult:
    """Product parameter together with the decomposed product module."""

    __slots__ = ("product_t", "decomposition")

    def __init__(self, product_t, decomposition):
        self.product_t = product_t
        self.decomposition = decomposition

    def __repr__(self):
        return f"TensorResult(t={self.product_t!r}, " \
               f"{self.decomposition!r})"

    def to_json(self):
        return {"product_t": repr(self.product_t),
                "decomposition": self.decomposition.to_json()}


def tensor_cycle_cycle_nobreak(m1, m2):
    """Product of two breakless cycles: Kronecker product of the
    monodromies, split into Jordan blocks."""
    require_same_config(m1.cfg, m2.cfg)
    t_prod = m1.t * m2.t
    if m1.t.breaks() or m2.t.breaks() or t_prod.breaks():
        raise PreconditionBreaks("both parameters must be breakless")
    out = []
    for m in split_cycle(m1).modules():
        for m2i in split_cycle(m2).modules():
            (xi, a), = m.F.blocks
            (eta, b), = m2i.F.blocks
            # Kronecker product of two Jordan blocks with nonzero
            # eigenvalues: eigenvalue xi*eta, sizes a+b-2k+1
            for k in range(1, min(a, b) + 1):
                out.append(CycleModule(m.cfg, t_prod,
                                       Word(m.cfg.p, 1, "1" * m.cfg.p),
                                       JordanType([(xi * eta,
                                                    a + b - 2 * k + 1)])))
    return TensorResult(t_prod, Decomposition(out))


def tensor_unit_cycle(m1, m2):
    """Breakless cycle times a trivial-monodromy cycle with breaks:
    the monodromy is raised to the revolution count of the word."""
    require_same_config(m1.cfg, m2.cfg)
    if m1.t.breaks():
        raise PreconditionBreaks("first factor must be breakless")
    if m2.F.blocks != ((m2.cfg.one(), 1),):
        raise ValueError("second factor must have trivial monodromy data")
    r = m2.repetition
    N = m1.cfg.conductor
    out = []
    for xi, a in m1.F.blocks:
        f = (Poly.x_minus(xi)) ** a
        fr = poly_power_bracket(f, r)
        for mu, size in jordan_decompose_companion(fr, N):
            out.append(CycleModule(m2.cfg, m2.t, m2.w,
                                   JordanType([(mu, size)])))
    dec = split(Decomposition(out))
    return TensorResult(m1.t * m2.t, dec)


def jordan_decompose_companion(f, conductor):
    """Jordan data of the companion matrix of f: one block per
    irreducible factor power; linear factors only in this use."""
    from .scalars import field_factor, companion
    blocks = []
    for g, mult in field_factor(f):
        if g.degree == 1:
            root = -(g.coeffs[0] * g.coeffs[1].inverse())
            blocks.append((root, mult))
        else:
            # non-linear factor: fall back to matrix Jordan form, which
            # reports the obstruction precisely
            return jordan_decompose(companion(f)).blocks
    return blocks


def tensor_cycle_cycle(m1, m2):
    """General cycle times cycle with at least one break present."""
    require_same_config(m1.cfg, m2.cfg)
    cfg = m1.cfg
    t_prod = m1.t * m2.t
    r1, r2 = m1.repetition, m2.repetition
    d = gcd(r1, r2)
    out = []
    for a1 in split_cycle(m1).modules():
        for a2 in split_cycle(m2).modules():
            (xi, a), = a1.F.blocks
            (eta, b), = a2.F.blocks
            for j in range(d):
                w2j = word_shift(a2.w, j)
                word = word_tensor(a1.w, w2j)
                lam = scalar_twist_product(a1.t, a1.w, w2j, cfg) * \
                    scalar_twist_product(a2.t, w2j, a1.w, cfg)
                eigen = (xi ** (r2 // d)) * (eta ** (r1 // d)) * lam
                for k in range(1, min(a, b) + 1):
                    summand = CycleModule(
                        cfg, t_prod, word,
                        JordanType([(eigen, a + b - 2 * k + 1)]))
                    out.extend((n, mult) for n, mult
                               in split_cycle(summand))
    return TensorResult(t_prod, Decomposition(out))


def tensor_path_path(m1, m2):
    """Product of two path modules by aligned letter products."""
    require_same_config(m1.cfg, m2.cfg)
    if m1.i > m2.i:
        m1, m2 = m2, m1
    cfg = m1.cfg
    p = cfg.p
    t_prod = m1.t * m2.t
    i, ip = m1.i, m2.i
    l1, l2 = len(m1.w), len(m2.w)
    # c: dimension of the first module's weight space at weight ip+1
    c = sum(1 for k in range(i + 1, i + l1 + 2) if (k - ip - 1) % p == 0)
    cp = sum(1 for k in range(ip + 1, ip + l2 + 2) if (k - i - 1) % p == 0)
    out = []
    for j in range(c):
        # align position ip+1+j*p of the first word with the second word
        length = min(i + l1 - ip - j * p, l2)
        letters = "".join(
            letter_mul(m1.w.letter(ip + m + j * p), m2.w.letter(ip + m))
            for m in range(1, length + 1))
        out.extend(split_path_at_zeros(
            PathModule(cfg, t_prod, ip % p,
                       Word(p, (ip % p) + 1, letters))).modules())
    delta = 1 if i == ip else 0
    for j in range(1, cp - delta + 1):
        length = min(l1, ip + l2 - i - j * p)
        letters = "".join(
            letter_mul(m1.w.letter(i + m), m2.w.letter(i + m + j * p))
            for m in range(1, length + 1))
        out.extend(split_path_at_zeros(
            PathModule(cfg, t_prod, i % p,
                       Word(p, (i % p) + 1, letters))).modules())
    return TensorResult(t_prod, Decomposition(out))


def tensor_path_cycle(m1, m2):
    """Path module times a cycle with breaks: one aligned-word summand
    per revolution, repeated once per monodromy dimension."""
    require_same_config(m1.cfg, m2.cfg)
    cfg = m1.cfg
    t_prod = m1.t * m2.t
    r = m2.repetition
    dmult = m2.F.dimension
    i = m1.i
    out = []
    for j in range(r):
        letters = "".join(
            letter_mul(m1.w.letter(i + m),
                       m2.w.cyclic_letter(i + m + j * cfg.p))
            for m in range(1, len(m1.w) + 1))
        path = PathModule(cfg, t_prod, i, Word(cfg.p, i + 1, letters))
        out.extend((n, mult * dmult) for n, mult
                   in split_path_at_zeros(path))
    return TensorResult(t_prod, Decomposition(out))


def tensor_path_nobreak(m1, m2):
    """Path module times a breakless cycle: the monodromy only
    multiplies the result by its dimension."""
    require_same_config(m1.cfg, m2.cfg)
    if m2.t.breaks():
        raise PreconditionBreaks("cycle factor must be breakless")
    d = m2.F.dimension
    retargeted = PathModule(m1.cfg, m1.t * m2.t, m1.i, m1.w)
    return TensorResult(m1.t * m2.t, Decomposition([(retargeted, d)]))


def _tensor_pair(m1, m2):
    """Dispatch one pair of indecomposable summands."""
    c1 = isinstance(m1, CycleModule)
    c2 = isinstance(m2, CycleModule)
    if c1 and c2:
        if not (m1.t.breaks() or m2.t.breaks()):
            return tensor_cycle_cycle_nobreak(m1, m2)
        if not m1.t.breaks():
            return tensor_cycle_cycle(m1, m2)
        if not m2.t.breaks():
            return tensor_cycle_cycle(m2, m1)
        return tensor_cycle_cycle(m1, m2)
    if c1 and not c2:
        m1, m2 = m2, m1
        c2 = True
    if c2:
        if not m2.t.breaks():
            return tensor_path_nobreak(m1, m2)
        return tensor_path_cycle(m1, m2)
    return tensor_path_path(m1, m2)


def tensor(m1, m2):
    """Tensor product of two modules (or decompositions), fully split."""
    d1 = split(m1)
    d2 = split(m2)
    t_prod = None
    out = []
    for a, ka in d1:
        for b, kb in d2:
            res = _tensor_pair(a, b)
            t_prod = res.product_t
            out.extend((m, mult * ka * kb) for m, mult
                       in res.decomposition)
    if t_prod is None:
        # empty product: derive the parameter directly when possible
        if not isinstance(m1, Decomposition) and \
                not isinstance(m2, Decomposition):
            t_prod = m1.t * m2.t
    return TensorResult(t_prod, Decomposition(out))
