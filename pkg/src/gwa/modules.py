"""The two families of weight modules on a finite orbit and their
structural operations: validation, splitting into indecomposables,
composition factors, and isomorphism testing.

A cycle module lives on a circular basis of length r*p with an invertible
monodromy operator; a path module lives on a chain between two breaks.
"""

from __future__ import annotations

from collections import Counter

from .errors import (
    InvalidBreakIndex,
    InvalidWord,
    NonSplitSpectrum,
    SingularF,
    ZeroLetterPresent,
)
from .orbit import (
    OrbitConfig,
    TParam,
    Word,
    canonical_shift,
    primitive_period,
    require_same_config,
    word_shift,
)
from .scalars import (
    JordanType,
    Matrix,
    Poly,
    jordan_decompose,
    nth_roots_in_field,
    scalar_from_text,
    scalar_to_text,
)


class CycleModule:
    """Weight module on a circular basis e_1..e_{rp} with monodromy data F.

    X moves forward (with the parameter scalar over 1-letters and the
    F-twist at the wrap), Y moves backward; letters x and y mark breaks
    where only one direction survives.
    """

    kind = "cycle"

    __slots__ = ("cfg", "t", "w", "F")

    def __init__(self, cfg, t, w, F):
        if isinstance(w, str):
            w = Word(cfg.p, 1, w)
        if isinstance(F, Matrix):
            F = jordan_decompose(F)
        if isinstance(F, (list, tuple)):
            F = JordanType(F)
        self.cfg = cfg
        self.t = t
        self.w = w
        self.F = F
        self.validate()

    def validate(self):
        if self.t.p != self.cfg.p:
            raise InvalidWord("parameter orbit size differs from config")
        if self.w.start != 1:
            raise InvalidWord("cycle words must start at position 1")
        if len(self.w) == 0 or len(self.w) % self.cfg.p:
            raise InvalidWord("cycle word length must be a positive "
                              "multiple of p")
        self.w.validate_for(self.t)
        for xi, _ in self.F.blocks:
            if xi.is_zero():
                raise SingularF("monodromy eigenvalue 0 is not allowed")

    @property
    def repetition(self):
        return len(self.w) // self.cfg.p

    @property
    def dimension(self):
        return len(self.w) * self.F.dimension

    def dimension_vector(self):
        rd = self.repetition * self.F.dimension
        return tuple([rd] * self.cfg.p)

    def normal_form(self):
        """Canonical representative of the isomorphism class."""
        w, _ = canonical_shift(self.w)
        return ("cycle", self.t.exponents, w.letters,
                tuple((xi, s) for xi, s in self.F.blocks))

    def __eq__(self, other):
        return isinstance(other, CycleModule) and self.cfg == other.cfg \
            and self.t == other.t and self.w.letters == other.w.letters \
            and self.F == other.F

    def __hash__(self):
        return hash(("cycle", self.t, self.w.letters, self.F))

    def __repr__(self):
        return f"V[t={self.t!r}; w={self.w!r}; F={self.F!r}]"

    def to_json(self):
        return {"kind": "cycle", "t": repr(self.t),
                "w": {"w": self.w.letters, "start": 1},
                "F": [[scalar_to_text(xi), s] for xi, s in self.F.blocks]}


class PathModule:
    """Weight module on a chain of basis vectors e_{i+1}..e_{i+l+1}
    between two breaks; the empty word gives a one-dimensional module
    on which both X and Y act as zero."""

    kind = "path"

    __slots__ = ("cfg", "t", "i", "w")

    def __init__(self, cfg, t, i, w):
        if isinstance(w, str):
            w = Word(cfg.p, (i % cfg.p) + 1, w)
        self.cfg = cfg
        self.t = t
        self.i = i % cfg.p
        self.w = w
        self.validate()

    def validate(self):
        p = self.cfg.p
        breaks = self.t.breaks()
        if self.i not in breaks:
            raise InvalidBreakIndex(
                f"start index {self.i} is not a break of t={self.t!r}")
        end = (self.i + len(self.w) + 1) % p
        if end not in breaks:
            raise InvalidBreakIndex(
                f"end index {end} is not a break of t={self.t!r}")
        if self.w.start != self.i + 1:
            raise InvalidWord("path word must start right after the break")
        self.w.validate_for(self.t)

    @property
    def dimension(self):
        return len(self.w) + 1

    def dimension_vector(self):
        p = self.cfg.p
        dims = [0] * p
        for k in range(self.i + 1, self.i + len(self.w) + 2):
            dims[k % p] += 1
        return tuple(dims)

    def normal_form(self):
        return ("path", self.t.exponents, self.i, self.w.letters)

    def __eq__(self, other):
        return isinstance(other, PathModule) and self.cfg == other.cfg \
            and self.t == other.t and self.i == other.i \
            and self.w.letters == other.w.letters

    def __hash__(self):
        return hash(("path", self.t, self.i, self.w.letters))

    def __repr__(self):
        return f"V[t={self.t!r}; i={self.i}; w={self.w!r}]"

    def to_json(self):
        return {"kind": "path", "t": repr(self.t), "i": self.i,
                "w": {"w": self.w.letters, "start": self.i + 1}}


def module_from_json(data, cfg):
    t = TParam.parse(data["t"] if data["t"] != "1" else "", cfg.p)
    if data["kind"] == "cycle":
        blocks = [(scalar_from_text(xi, cfg.conductor), s)
                  for xi, s in data["F"]]
        return CycleModule(cfg, t, Word(cfg.p, 1, data["w"]["w"]),
                           JordanType(blocks))
    return PathModule(cfg, t, data["i"],
                      Word(cfg.p, data["i"] + 1, data["w"]["w"]))


class Decomposition:
    """Multiset of indecomposable summands with multiplicities."""

    __slots__ = ("summands",)

    def __init__(self, modules):
        counter = Counter()
        index = {}
        for m in modules:
            if isinstance(m, tuple):
                m, mult = m
            else:
                mult = 1
            key = m.normal_form()
            counter[key] += mult
            index.setdefault(key, m)
        self.summands = tuple(sorted(
            ((index[key], counter[key]) for key in counter),
            key=lambda pair: _sort_key(pair[0])))

    def modules(self):
        out = []
        for m, mult in self.summands:
            out.extend([m] * mult)
        return out

    @property
    def total_dimension(self):
        return sum(m.dimension * mult for m, mult in self.summands)

    def dimension_vector(self, p):
        dims = [0] * p
        for m, mult in self.summands:
            for k, d in enumerate(m.dimension_vector()):
                dims[k] += d * mult
        return tuple(dims)

    def isomorphic(self, other):
        mine = Counter(m.normal_form() for m in self.modules())
        theirs = Counter(m.normal_form() for m in other.modules())
        return mine == theirs

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        parts = []
        for m, mult in self.summands:
            parts.append(f"{m!r}" + (f"^{mult}" if mult > 1 else ""))
        return " (+) ".join(parts) if parts else "0"

    def to_json(self):
        return {"summands": [{"module": m.to_json(), "multiplicity": mult}
                             for m, mult in self.summands]}


def _sort_key(m):
    nf = m.normal_form()
    return (nf[0], nf[1], str(nf[2]), str(nf[3:]))


def validate(m):
    """Re-run all structural checks on a module."""
    m.validate()


def dimension_vector(m):
    return m.dimension_vector()


def split_path_at_zeros(m):
    """Split a path module at every 0-letter; a 0 at position k severs the
    chain into the part before k and the part after, with the later part
    restarting at the break k mod p."""
    idx = m.w.letters.find("0")
    if idx < 0:
        return Decomposition([m])
    k = m.i + 1 + idx  # absolute position of the zero letter
    left = PathModule(m.cfg, m.t, m.i,
                      Word(m.cfg.p, m.i + 1, m.w.letters[:idx]))
    right = PathModule(m.cfg, m.t, k % m.cfg.p,
                       Word(m.cfg.p, (k % m.cfg.p) + 1,
                            m.w.letters[idx + 1:]))
    return Decomposition(split_path_at_zeros(right).modules() + [left])


def split_cycle(m):
    """Full decomposition of a cycle module into indecomposables.

    Case order: a 0-letter collapses the circle to a path (repeated d
    times); the monodromy splits blockwise; a periodic word splits into
    primitive-period circles whose eigenvalues are the corresponding
    roots of the original eigenvalue.
    """
    p = m.cfg.p
    rp = len(m.w)
    idx = m.w.letters.find("0")
    if idx >= 0:
        z = idx + 1  # absolute position of a zero letter
        letters = "".join(m.w.cyclic_letter(z + n) for n in range(1, rp))
        path = PathModule(m.cfg, m.t, z % p,
                          Word(p, (z % p) + 1, letters))
        d = m.F.dimension
        return Decomposition(
            [(pm, mult * d) for pm, mult in split_path_at_zeros(path)])
    out = []
    period = primitive_period(m.w)
    e = m.repetition // period
    w_prim = Word(p, 1, m.w.letters[:period * p])
    for xi, size in m.F.blocks:
        if e == 1:
            out.append(CycleModule(m.cfg, m.t, m.w, JordanType([(xi, size)])))
            continue
        roots = nth_roots_in_field(xi, e)
        if len(roots) < e:
            raise NonSplitSpectrum(f"x^{e} - ({scalar_to_text(xi)})")
        for mu in roots:
            out.append(CycleModule(m.cfg, m.t, w_prim,
                                   JordanType([(mu, size)])))
    return Decomposition(out)


def split(m):
    """Decompose either family into indecomposables."""
    if isinstance(m, Decomposition):
        out = []
        for sub, mult in m:
            out.extend([(n, mult) for n in split(sub).modules()])
        return Decomposition(out)
    if isinstance(m, PathModule):
        return split_path_at_zeros(m)
    return split_cycle(m)


def is_indecomposable(m):
    if isinstance(m, PathModule):
        return not m.w.has_zero()
    return (not m.w.has_zero()) and len(m.F.blocks) == 1 \
        and primitive_period(m.w) == m.repetition


def is_simple(m):
    if isinstance(m, PathModule):
        return set(m.w.letters) <= {"1"}
    if m.w.has_zero() or len(m.F.blocks) != 1 or m.F.blocks[0][1] != 1:
        return False
    if m.repetition != 1:
        return False
    directional = {ch for ch in m.w.letters if ch in "xy"}
    return len(directional) <= 1


def composition_factors(m):
    """Multiset of simple subquotients, as a Decomposition."""
    if isinstance(m, Decomposition):
        out = []
        for sub, mult in m:
            out.extend([(n, mult * k)
                        for n, k in composition_factors(sub).summands])
        return Decomposition(out)
    if m.w.has_zero():
        raise ZeroLetterPresent("split the module before taking factors")
    p = m.cfg.p
    if isinstance(m, PathModule):
        return Decomposition(_path_segments(m.cfg, m.t, m.i, m.w.letters))
    letters = m.w.letters
    has_x = "x" in letters
    has_y = "y" in letters
    if not (has_x and has_y):
        # uniform direction: the Jordan filtration gives size-1 copies,
        # after first reducing any periodic word to primitive circles
        if primitive_period(m.w) != m.repetition:
            return composition_factors(split_cycle(m))
        out = []
        for xi, size in m.F.blocks:
            out.append((CycleModule(m.cfg, m.t, m.w, JordanType([(xi, 1)])),
                        size))
        return Decomposition(out)
    # both directions present: cut the circle at every directional letter
    d = m.F.dimension
    rp = len(letters)
    cuts = [k for k in range(1, rp + 1) if letters[k - 1] in "xy"]
    out = []
    for n, k1 in enumerate(cuts):
        k2 = cuts[(n + 1) % len(cuts)]
        gap = (k2 - k1) % rp
        if gap == 0:
            gap = rp
        run = gap - 1  # number of 1-letters strictly between the cuts
        out.append((PathModule(m.cfg, m.t, k1 % p,
                               Word(p, (k1 % p) + 1, "1" * run)), d))
    return Decomposition(out)


def _path_segments(cfg, t, i, letters):
    """Simple factors of a zero-free path word: maximal 1-runs."""
    p = cfg.p
    out = []
    seg_start = i + 1
    for off, ch in enumerate(letters):
        k = i + 1 + off
        if ch in "xy":
            run = k - seg_start
            out.append(PathModule(cfg, t, (seg_start - 1) % p,
                                  Word(p, ((seg_start - 1) % p) + 1,
                                       "1" * run)))
            seg_start = k + 1
    run = (i + len(letters) + 1) - seg_start
    out.append(PathModule(cfg, t, (seg_start - 1) % p,
                          Word(p, ((seg_start - 1) % p) + 1, "1" * run)))
    return out


def is_isomorphic(m1, m2):
    """Isomorphism test for indecomposable modules."""
    if isinstance(m1, PathModule) != isinstance(m2, PathModule):
        return False
    require_same_config(m1.cfg, m2.cfg)
    return m1.normal_form() == m2.normal_form()
