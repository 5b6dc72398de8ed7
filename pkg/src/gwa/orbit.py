"""Finite orbit model and word combinatorics.

The base ring is the Laurent polynomial ring with automorphism
sigma(z) = q^{-1} z for q a primitive p-th root of unity. The orbit
consists of the maximal ideals m_i = (z - q^i); the parameter t is a
product of the ideal generators, and a word over {0,1,x,y} records how
X and Y act at each orbit position.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatch, InvalidWord
from .scalars import CycloScalar

LETTERS = "01xy"


class OrbitConfig:
    """Orbit size p and the cyclotomic conductor N (with p | N)."""

    __slots__ = ("p", "conductor", "q")

    def __init__(self, p, conductor=None):
        if p < 1:
            raise ValueError("orbit size must be positive")
        if conductor is None:
            conductor = p
        if conductor % p:
            raise ValueError("orbit size must divide the conductor")
        self.p = p
        self.conductor = conductor
        self.q = CycloScalar.zeta(conductor, conductor // p)

    def q_power(self, k):
        return CycloScalar.zeta(self.conductor,
                                (self.conductor // self.p) * (k % self.p))

    def zero(self):
        return CycloScalar.from_rational(0, self.conductor)

    def one(self):
        return CycloScalar.from_rational(1, self.conductor)

    def scalar(self, value):
        return CycloScalar.from_rational(value, self.conductor)

    def __eq__(self, other):
        return isinstance(other, OrbitConfig) and self.p == other.p \
            and self.conductor == other.conductor

    def __hash__(self):
        return hash((self.p, self.conductor))

    def __repr__(self):
        return f"OrbitConfig(p={self.p}, conductor={self.conductor})"


def require_same_config(cfg1, cfg2):
    if cfg1 != cfg2:
        raise ContextMismatch(f"orbit configs differ: {cfg1} vs {cfg2}")


@dataclass(frozen=True)
class TParam:
    """The parameter t = prod_i (z - q^i)^{k_i}, stored by exponent vector."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents",
                           tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @staticmethod
    def one(p):
        return TParam((0,) * p)

    @staticmethod
    def generator(p, i, power=1):
        exps = [0] * p
        exps[i % p] = power
        return TParam(tuple(exps))

    @staticmethod
    def parse(text, p):
        """Parse a comma list of index:exponent pairs, e.g. "0:1,2:2"."""
        exps = [0] * p
        text = text.strip()
        if text:
            for pair in text.split(","):
                idx, _, exp = pair.partition(":")
                exps[int(idx) % p] += int(exp) if exp else 1
        return TParam(tuple(exps))

    @property
    def p(self):
        return len(self.exponents)

    def is_one(self):
        return not any(self.exponents)

    def breaks(self):
        """Orbit indices where t vanishes."""
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other):
        if self.p != other.p:
            raise ContextMismatch("parameters over different orbit sizes")
        return TParam(tuple(a + b for a, b in
                            zip(self.exponents, other.exponents)))

    def evaluate(self, cfg, j):
        """The value of t at the orbit point z = q^j."""
        acc = cfg.one()
        qj = cfg.q_power(j)
        for i, e in enumerate(self.exponents):
            if e:
                acc = acc * (qj - cfg.q_power(i)) ** e
        return acc

    def __repr__(self):
        if self.is_one():
            return "1"
        return ",".join(f"{i}:{e}" for i, e in enumerate(self.exponents) if e)


def letter_mul(a, b):
    """Commutative letter product: equal letters idempotent, 1 is the unit,
    0 absorbs, and the two directional letters annihilate each other."""
    if a == "1":
        return b
    if b == "1":
        return a
    if a == b:
        return a
    return "0"


@dataclass(frozen=True)
class Word:
    """An indexed word: letters w_start .. w_{start+len-1} over {0,1,x,y}.

    Cycle modules use words of length r*p starting at 1; path modules use
    words of any length starting just after the initial break.
    """

    p: int
    start: int
    letters: str

    def __post_init__(self):
        for pos, ch in enumerate(self.letters):
            if ch not in LETTERS:
                raise InvalidWord(
                    f"letter {ch!r} at offset {pos} is not in {{0,1,x,y}}")

    def __len__(self):
        return len(self.letters)

    @property
    def repetition(self):
        """Number of orbit revolutions for a p-word."""
        if len(self.letters) % self.p:
            raise InvalidWord("not a p-word: length is not a multiple of p")
        return len(self.letters) // self.p

    def letter(self, k):
        """Letter at absolute position k (start <= k < start + length)."""
        return self.letters[k - self.start]

    def cyclic_letter(self, k):
        """Letter at position k of a p-word, read cyclically from 1."""
        return self.letters[(k - 1) % len(self.letters)]

    def positions(self):
        return range(self.start, self.start + len(self.letters))

    def validate_for(self, t):
        """Check the defining pattern: letter 1 exactly at non-breaks of t."""
        breaks = t.breaks()
        for k in self.positions():
            ch = self.letter(k)
            if (ch == "1") == (k % self.p in breaks):
                raise InvalidWord(
                    f"letter {ch!r} at position {k} conflicts with the "
                    f"break set {sorted(breaks)} of t={t!r}")

    def has_zero(self):
        return "0" in self.letters

    def __repr__(self):
        return f'"{self.letters}"@{self.start}'


def word_tensor(w, w2):
    """Positionwise letter product of two p-words, read cyclically up to
    the least common period."""
    if w.p != w2.p:
        raise ContextMismatch("words over different orbit sizes")
    r, r2 = w.repetition, w2.repetition
    import math
    length = len(w.letters) * r2 // math.gcd(r, r2)
    letters = "".join(
        letter_mul(w.cyclic_letter(k), w2.cyclic_letter(k))
        for k in range(1, length + 1))
    return Word(w.p, 1, letters)


def word_shift(w, j):
    """Cyclic shift of a p-word by j*p positions."""
    r = w.repetition
    if r == 0:
        return w
    off = (j % r) * w.p
    return Word(w.p, 1, w.letters[off:] + w.letters[:off])


def word_is_periodic(w):
    """True iff the p-word is fixed by a proper cyclic p-shift."""
    r = w.repetition
    return any(word_shift(w, j).letters == w.letters for j in range(1, r))


def primitive_period(w):
    """Smallest j >= 1 with word_shift(w, j) = w."""
    r = w.repetition
    for j in range(1, r + 1):
        if r % j == 0 and word_shift(w, j).letters == w.letters:
            return j
    return r


def canonical_shift(w):
    """Lexicographically least cyclic p-shift (letter order 0 < 1 < x < y)
    and the shift amount achieving it."""
    r = w.repetition
    best, best_j = w.letters, 0
    for j in range(1, r):
        cand = word_shift(w, j).letters
        if cand < best:
            best, best_j = cand, j
    return Word(w.p, 1, best), best_j


def scalar_twist_product(u, w, w2, cfg):
    """Accumulated parameter scalar of the aligned word pair: the product of
    the evaluations of u at the positions where w reads 1 and w2 reads x.

    The evaluation point for position k is z = q^k, matching the module
    normalization in which an X-step over a 1-letter at position k carries
    the scalar u(q^k).
    """
    if w.p != w2.p or w.p != u.p:
        raise ContextMismatch("mismatched orbit sizes")
    r, r2 = w.repetition, w2.repetition
    import math
    length = len(w.letters) * r2 // math.gcd(r, r2)
    acc = cfg.one()
    for k in range(1, length + 1):
        if w.cyclic_letter(k) == "1" and w2.cyclic_letter(k) == "x":
            acc = acc * u.evaluate(cfg, k)
    return acc


@lru_cache(maxsize=None)
def _valid_letter_choices(p, breaks, k):
    return ("1",) if (k % p) not in breaks else ("x", "y", "0")


def cycle_word_for(t, r, break_letters):
    """Build the length r*p cycle word for t with given letters at breaks.

    break_letters maps each pair (revolution, break index) or break index
    to a letter in {x, y, 0}; unspecified breaks default to "x".
    """
    breaks = t.breaks()
    letters = []
    for k in range(1, r * t.p + 1):
        i = k % t.p
        if i not in breaks:
            letters.append("1")
        else:
            rev = (k - 1) // t.p
            ch = break_letters.get((rev, i), break_letters.get(i, "x"))
            letters.append(ch)
    return Word(t.p, 1, "".join(letters))
