"""Exact arithmetic in cyclotomic fields Q(zeta_N), polynomials over them,
exact matrices, companion matrices and Jordan data.

Every scalar is a vector of rationals in the power basis of Q(zeta_N)
modulo the N-th cyclotomic polynomial, so equality is decidable and no
floating point appears anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import sympy

from .errors import NonSplitSpectrum, ZeroConstantTerm

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# cyclotomic polynomial tables


def _int_polydiv(num, den):
    """Exact division of integer polynomial lists (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1]:
            raise ArithmeticError("non-exact division")
        c //= den[-1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly_int(N):
    """Integer coefficients of the N-th cyclotomic polynomial, lowest first."""
    if N == 1:
        return (-1, 1)
    poly = [0] * N + [1]
    poly[0] = -1  # z^N - 1
    for d in range(1, N):
        if N % d == 0:
            poly = _int_polydiv(poly, cyclotomic_poly_int(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _euler_phi(N):
    return len(cyclotomic_poly_int(N)) - 1


@lru_cache(maxsize=None)
def _reduction_table(N):
    """Coordinates of z^k mod Phi_N for k = phi .. 2*phi-2."""
    phi = _euler_phi(N)
    tail = [Fraction(-c, cyclotomic_poly_int(N)[phi])
            for c in cyclotomic_poly_int(N)[:phi]]
    rows = []
    cur = tail[:]
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        top = cur[phi - 1]
        cur = [_ZERO] + cur[:phi - 1]
        if top:
            cur = [a + top * b for a, b in zip(cur, tail)]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_coords(N, coords):
    """Reduce a coefficient list of length <= 2*phi-1 to the power basis."""
    phi = _euler_phi(N)
    if len(coords) <= phi:
        return tuple(coords) + (_ZERO,) * (phi - len(coords))
    table = _reduction_table(N)
    out = list(coords[:phi])
    for k in range(phi, len(coords)):
        c = coords[k]
        if c:
            row = table[k - phi]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _zeta_power_coords(N, power):
    """Power-basis coordinates of z^power mod Phi_N, any 0 <= power < N."""
    phi = _euler_phi(N)
    if power < phi:
        return (_ZERO,) * power + (_ONE,) + (_ZERO,) * (phi - power - 1)
    tail = [Fraction(-c, cyclotomic_poly_int(N)[phi])
            for c in cyclotomic_poly_int(N)[:phi]]
    cur = list(_zeta_power_coords(N, phi - 1))
    for _ in range(power - phi + 1):
        top = cur[phi - 1]
        cur = [_ZERO] + cur[:phi - 1]
        if top:
            cur = [a + top * b for a, b in zip(cur, tail)]
    return tuple(cur)


class CycloScalar:
    """An element of Q(zeta_N) in canonical power-basis coordinates."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor, coeffs):
        phi = _euler_phi(conductor)
        coeffs = tuple(coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value, conductor=1):
        phi = _euler_phi(conductor)
        coeffs = [Fraction(value)] + [_ZERO] * (phi - 1)
        return CycloScalar(conductor, coeffs)

    @staticmethod
    def zeta(conductor, power=1):
        """zeta_N^power as an exact scalar."""
        power %= conductor
        return CycloScalar(conductor, _zeta_power_coords(conductor, power))

    def lift(self, conductor):
        """Embed into Q(zeta_M) for a conductor M divisible by ours."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                f"cannot lift conductor {self.conductor} into {conductor}")
        step = conductor // self.conductor
        coords = [_ZERO] * (_euler_phi(self.conductor) * step)
        for k, c in enumerate(self.coeffs):
            if c:
                coords[k * step] = c
        return CycloScalar(conductor, _reduce_coords(conductor, coords))

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.from_rational(other, self.conductor)
        if not isinstance(other, CycloScalar):
            return None, None
        if other.conductor == self.conductor:
            return self, other
        target = self.conductor * other.conductor \
            // math.gcd(self.conductor, other.conductor)
        return self.lift(target), other.lift(target)

    def __add__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CycloScalar(a.conductor,
                           [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CycloScalar(a.conductor,
                           [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycloScalar(self.conductor, [f * x for x in self.coeffs])
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._match(other)
        if b.is_rational():
            f = b.coeffs[0]
            return CycloScalar(a.conductor, [f * x for x in a.coeffs])
        if a.is_rational():
            f = a.coeffs[0]
            return CycloScalar(b.conductor, [f * x for x in b.coeffs])
        n = len(a.coeffs)
        conv = [_ZERO] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return CycloScalar(a.conductor, _reduce_coords(a.conductor, conv))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloScalar.from_rational(1 / self.coeffs[0], self.conductor)
        # extended Euclid of the coordinate polynomial against Phi_N over Q
        N = self.conductor
        phi_poly = [Fraction(c) for c in cyclotomic_poly_int(N)]
        r0, r1 = phi_poly, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv_c = 1 / r1[0]
                coords = [c * inv_c for c in s1]
                return CycloScalar(N, _reduce_coords(N, coords))
            q, r = _frac_polydivmod(r0, r1)
            s = _frac_polysub(s0, _frac_polymul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycloScalar(self.conductor, [x / f for x in self.coeffs])
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloScalar.from_rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._match(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    # -- display -----------------------------------------------------------

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z^{k}" if k > 1 else "z"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"conductor": self.conductor,
                "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data):
        return CycloScalar(data["conductor"],
                           [Fraction(c) for c in data["coeffs"]])


def cyclo_embed(n_root, N):
    """The exact root of unity zeta_N^n_root."""
    if N < 1:
        raise ValueError("conductor must be positive")
    return CycloScalar.zeta(N, n_root)


# ---------------------------------------------------------------------------
# rational coefficient helpers (lists lowest degree first)


def _frac_polydivmod(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    q = [_ZERO] * max(len(num) - len(den) + 1, 1)
    inv = 1 / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * inv
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    r = num[:len(den) - 1]
    while r and not r[-1]:
        r.pop()
    return q, r


def _frac_polymul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# polynomials over a cyclotomic field


class Poly:
    """Univariate polynomial over Q(zeta_N), coefficients lowest degree first."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        coeffs = [c if isinstance(c, CycloScalar)
                  else CycloScalar.from_rational(c, conductor)
                  for c in coeffs]
        coeffs = [c.lift(conductor) if c.conductor != conductor else c
                  for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.conductor = conductor
        self.coeffs = tuple(coeffs)

    @staticmethod
    def x_minus(scalar):
        """The monic linear polynomial x - scalar."""
        return Poly(scalar.conductor,
                    [-scalar, CycloScalar.from_rational(1, scalar.conductor)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def constant(self):
        if not self.coeffs:
            return CycloScalar.from_rational(0, self.conductor)
        return self.coeffs[0]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.conductor, [c * inv for c in self.coeffs])

    def __call__(self, value):
        acc = CycloScalar.from_rational(0, self.conductor)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        zero = CycloScalar.from_rational(0, self.conductor)
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return Poly(self.conductor, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + Poly(other.conductor, [-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, CycloScalar):
            return Poly(self.conductor, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.conductor, [])
        zero = CycloScalar.from_rational(0, self.conductor)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x.is_zero():
                for j, y in enumerate(other.coeffs):
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return Poly(self.conductor, out)

    def __pow__(self, n):
        result = Poly(self.conductor, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = CycloScalar.from_rational(0, self.conductor)
        num = list(self.coeffs)
        den = other.coeffs
        if len(num) < len(den):
            return Poly(self.conductor, []), self
        q = [zero] * (len(num) - len(den) + 1)
        inv = den[-1].inverse()
        for k in range(len(num) - len(den), -1, -1):
            c = num[k + len(den) - 1] * inv
            q[k] = c
            if not c.is_zero():
                for j, d in enumerate(den):
                    num[k + j] = num[k + j] - c * d
        return Poly(self.conductor, q), Poly(self.conductor, num[:len(den) - 1])

    def derivative(self):
        return Poly(self.conductor,
                    [c * k for k, c in enumerate(self.coeffs)][1:])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def __eq__(self, other):
        return isinstance(other, Poly) and \
            len(self.coeffs) == len(other.coeffs) and \
            all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k > 0 and c.is_one():
                parts.append(xs)
            else:
                cs = repr(c)
                if not c.is_rational():
                    cs = f"({cs})"
                parts.append(f"{cs}*{xs}" if xs else cs)
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense exact matrix over Q(zeta_N)."""

    __slots__ = ("conductor", "rows", "nrows", "ncols")

    def __init__(self, conductor, rows, ncols=None):
        self.conductor = conductor
        self.rows = [
            [c if isinstance(c, CycloScalar)
             else CycloScalar.from_rational(c, conductor)
             for c in row]
            for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(conductor, n):
        one = CycloScalar.from_rational(1, conductor)
        zero = CycloScalar.from_rational(0, conductor)
        return Matrix(conductor,
                      [[one if i == j else zero for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def zeros(conductor, nrows, ncols):
        zero = CycloScalar.from_rational(0, conductor)
        return Matrix(conductor, [[zero] * ncols for _ in range(nrows)],
                      ncols=ncols)

    def copy_rows(self):
        return [row[:] for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.nrows == other.nrows \
            and self.ncols == other.ncols \
            and all(a == b for ra, rb in zip(self.rows, other.rows)
                    for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def __add__(self, other):
        return Matrix(self.conductor,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __sub__(self, other):
        return Matrix(self.conductor,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __mul__(self, other):
        if isinstance(other, (CycloScalar, int, Fraction)):
            return Matrix(self.conductor,
                          [[a * other for a in row] for row in self.rows],
                          ncols=self.ncols)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = CycloScalar.from_rational(0, self.conductor)
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for row in self.rows:
            nz = [(j, a) for j, a in enumerate(row) if not a.is_zero()]
            new_row = []
            for col in cols:
                acc = zero
                for j, a in nz:
                    if not col[j].is_zero():
                        acc = acc + a * col[j]
                new_row.append(acc)
            out.append(new_row)
        return Matrix(self.conductor, out, ncols=other.ncols)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Matrix.identity(self.conductor, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def kron(self, other):
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return Matrix(self.conductor, out,
                      ncols=self.ncols * other.ncols)

    def _echelon(self, augment=None):
        """Row reduce; returns (rows, pivots, aug_rows, det_scale, swaps)."""
        rows = self.copy_rows()
        aug = [row[:] for row in augment] if augment is not None else None
        pivots = []
        det_scale = CycloScalar.from_rational(1, self.conductor)
        swaps = 0
        r = 0
        for c in range(self.ncols):
            pivot = None
            for i in range(r, self.nrows):
                if not rows[i][c].is_zero():
                    pivot = i
                    break
            if pivot is None:
                continue
            if pivot != r:
                rows[r], rows[pivot] = rows[pivot], rows[r]
                if aug is not None:
                    aug[r], aug[pivot] = aug[pivot], aug[r]
                swaps += 1
            inv = rows[r][c].inverse()
            det_scale = det_scale * rows[r][c]
            rows[r] = [a * inv for a in rows[r]]
            if aug is not None:
                aug[r] = [a * inv for a in aug[r]]
            for i in range(self.nrows):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                    if aug is not None:
                        aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return rows, pivots, aug, det_scale, swaps

    def rank(self):
        return len(self._echelon()[1])

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        if self.nrows == 0:
            return CycloScalar.from_rational(1, self.conductor)
        _, pivots, _, scale, swaps = self._echelon()
        if len(pivots) < self.nrows:
            return CycloScalar.from_rational(0, self.conductor)
        return scale * (-1 if swaps % 2 else 1)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        ident = Matrix.identity(self.conductor, self.nrows)
        _, pivots, aug, _, _ = self._echelon(ident.rows)
        if len(pivots) < self.nrows:
            raise ZeroDivisionError("singular matrix")
        return Matrix(self.conductor, aug)

    def nullspace(self):
        """Basis of the right kernel as a list of column vectors."""
        rows, pivots, _, _, _ = self._echelon()
        zero = CycloScalar.from_rational(0, self.conductor)
        one = CycloScalar.from_rational(1, self.conductor)
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [zero] * self.ncols
            vec[fc] = one
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][fc]
            basis.append(vec)
        return basis

    def solve(self, rhs_cols):
        """Solve self * X = B for the column list rhs_cols; None if unsolvable."""
        aug = [[rhs[i] for rhs in rhs_cols] for i in range(self.nrows)]
        rows, pivots, aug, _, _ = self._echelon(aug)
        zero = CycloScalar.from_rational(0, self.conductor)
        nsol = len(rhs_cols)
        for i in range(len(pivots), self.nrows):
            if any(not aug[i][k].is_zero() for k in range(nsol)):
                return None
        sols = []
        for k in range(nsol):
            vec = [zero] * self.ncols
            for r, pc in enumerate(pivots):
                vec[pc] = aug[r][k]
            sols.append(vec)
        return sols

    def transpose(self):
        rows = [list(col) for col in zip(*self.rows)] if self.rows else []
        if not rows and self.ncols:
            rows = [[] for _ in range(self.ncols)]
        return Matrix(self.conductor, rows, ncols=self.nrows)

    def char_poly(self):
        """Exact characteristic polynomial det(x*I - M), monic."""
        n = self.nrows
        if n == 0:
            return Poly(self.conductor, [1])
        # evaluate det(x_j*I - M) at n+1 rational points, then interpolate
        points, values = [], []
        for j in range(n + 1):
            xj = CycloScalar.from_rational(j, self.conductor)
            shifted = Matrix(
                self.conductor,
                [[(xj - a) if i == k else -a
                  for k, a in enumerate(row)]
                 for i, row in enumerate(self.rows)])
            points.append(xj)
            values.append(shifted.det())
        return _lagrange(self.conductor, points, values)

    def __repr__(self):
        return "[" + "; ".join(
            ", ".join(repr(a) for a in row) for row in self.rows) + "]"


def _lagrange(conductor, points, values):
    """Interpolating polynomial through exact (point, value) pairs."""
    acc = Poly(conductor, [])
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi.is_zero():
            continue
        num = Poly(conductor, [yi])
        den = CycloScalar.from_rational(1, conductor)
        for j, xj in enumerate(points):
            if i != j:
                num = num * Poly.x_minus(xj)
                den = den * (xi - xj)
        acc = acc + num * den.inverse()
    return acc


# ---------------------------------------------------------------------------
# Jordan data


class JordanType:
    """Multiset of Jordan blocks (eigenvalue, size) of an invertible operator."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = [(xi, int(size)) for xi, size in blocks]
        for xi, size in blocks:
            if size < 1:
                raise ValueError("block size must be positive")
        self.blocks = tuple(sorted(
            blocks, key=lambda b: (_scalar_key(b[0]), b[1])))

    @property
    def dimension(self):
        return sum(size for _, size in self.blocks)

    def eigenvalues(self):
        return [xi for xi, _ in self.blocks]

    def to_matrix(self, conductor):
        n = self.dimension
        m = Matrix.zeros(conductor, n, n).rows
        one = CycloScalar.from_rational(1, conductor)
        pos = 0
        for xi, size in self.blocks:
            for k in range(size):
                m[pos + k][pos + k] = xi.lift(conductor) \
                    if xi.conductor != conductor else xi
                if k + 1 < size:
                    m[pos + k + 1][pos + k] = one
            pos += size
        return Matrix(conductor, m)

    def __eq__(self, other):
        return isinstance(other, JordanType) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "{" + ", ".join(f"({xi!r},{s})" for xi, s in self.blocks) + "}"

    def to_json(self):
        return [[repr(xi), s] for xi, s in self.blocks]


def _scalar_key(s):
    return (s.conductor, tuple((c.numerator, c.denominator) for c in s.coeffs))


def companion(f):
    """Companion matrix of a polynomial with nonzero constant term."""
    f = f.monic()
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    if f.constant().is_zero():
        raise ZeroConstantTerm(f"constant term of {f!r} is zero")
    d = f.degree
    zero = CycloScalar.from_rational(0, f.conductor)
    one = CycloScalar.from_rational(1, f.conductor)
    rows = [[zero] * d for _ in range(d)]
    for k in range(1, d):
        rows[k][k - 1] = one
    for k in range(d):
        rows[k][d - 1] = -f.coeffs[k]
    return Matrix(f.conductor, rows)


# ---------------------------------------------------------------------------
# roots over the field (norm-based reduction to rational factorization)


def _poly_to_coordinate_rows(f):
    """Coefficients of f as rows of rational coordinates (deg+1 x phi)."""
    return [list(c.coeffs) for c in f.coeffs]


def _norm_resultant(f, shift):
    """Res_y(Phi_N(y), F(x - shift*y, y)) in Q[x], via interpolation."""
    N = f.conductor
    phi = _euler_phi(N)
    phi_coeffs = [Fraction(c) for c in cyclotomic_poly_int(N)]
    coord = _poly_to_coordinate_rows(f)
    d = f.degree
    target_deg = d * phi
    xs, ys = [], []
    x_val = 0
    while len(xs) <= target_deg:
        # g(y) = sum_k P_k(y) * (x_val - shift*y)^k, a rational poly in y
        g = [_ZERO]
        powers = [[Fraction(1)]]  # (x_val - shift*y)^k
        base = [Fraction(x_val), Fraction(-shift)]
        for _ in range(d):
            powers.append(_frac_polymul(powers[-1], base))
        for k in range(d + 1):
            term = _frac_polymul(coord[k], powers[k])
            g = _frac_polysub(g, [-c for c in term])
        while len(g) > 1 and not g[-1]:
            g.pop()
        ys.append(_frac_resultant(phi_coeffs, g))
        xs.append(Fraction(x_val))
        x_val += 1
    return _frac_interpolate(xs, ys, target_deg)


def _frac_resultant(a, b):
    """Resultant of two rational polynomial lists via Euclidean reduction."""
    a = list(a)
    b = list(b)
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a or not b:
        return _ZERO
    res = _ONE
    while True:
        if len(b) == 1:
            return res * b[0] ** (len(a) - 1)
        if len(a) < len(b):
            if ((len(a) - 1) * (len(b) - 1)) % 2:
                res = -res
            a, b = b, a
        _, r = _frac_polydivmod(a, b)
        while r and not r[-1]:
            r.pop()
        if not r:
            return _ZERO
        res = res * b[-1] ** (len(a) - len(r))
        if ((len(a) - 1) * (len(b) - 1)) % 2:
            res = -res
        a, b = b, r


def _frac_interpolate(xs, ys, degree):
    """Rational Lagrange interpolation, returns list lowest first."""
    acc = [_ZERO] * (degree + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = [yi]
        den = _ONE
        for j, xj in enumerate(xs):
            if i != j:
                num = _frac_polymul(num, [-xj, _ONE])
                den = den * (xi - xj)
        inv = 1 / den
        for k, c in enumerate(num):
            acc[k] += c * inv
    while len(acc) > 1 and not acc[-1]:
        acc.pop()
    return acc


def _factor_rational(coeffs):
    """Irreducible factors over Q of a rational polynomial list."""
    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                     for c in coeffs])), x, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(str(c)) for c in reversed(fac.all_coeffs())]
        for _ in range(mult):
            out.append(cs)
    return out


def _field_factor_squarefree(f):
    """Irreducible factors over Q(zeta_N) of a monic squarefree polynomial."""
    N = f.conductor
    if f.degree <= 1:
        return [f]
    zeta = CycloScalar.zeta(N)
    for shift in range(0, 8 * f.degree + 8):
        norm = _norm_resultant(f, shift)
        d_norm = [c * k for k, c in enumerate(norm)][1:]
        g = _frac_poly_gcd(norm, d_norm)
        if len(g) > 1:
            continue  # norm not squarefree; try another shift
        factors = []
        for rat in _factor_rational(norm):
            # substitute x -> x + shift*zeta and intersect with f
            xpz = Poly(N, [zeta * shift, 1])
            power = Poly(N, [1])
            acc = Poly(N, [])
            for k, c in enumerate(rat):
                if c:
                    acc = acc + power * CycloScalar.from_rational(c, N)
                power = power * xpz
            h = f.gcd(acc)
            if h.degree >= 1:
                factors.append(h.monic())
        total = Poly(N, [1])
        for h in factors:
            total = total * h
        if total.monic() == f.monic() and \
                sum(h.degree for h in factors) == f.degree:
            return factors
    raise ArithmeticError("no squarefree norm found")  # pragma: no cover


def _frac_poly_gcd(a, b):
    a = [c for c in a]
    b = [c for c in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    while b:
        _, r = _frac_polydivmod(a, b)
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    return a


def field_factor(f):
    """Factor f over Q(zeta_N) into monic irreducibles with multiplicity.

    Returns a list of (factor, multiplicity) pairs.
    """
    f = f.monic()
    out = []
    remaining = f
    while remaining.degree >= 1:
        sqf = remaining.gcd(remaining.derivative())
        part = remaining.divmod(sqf)[0]  # product of distinct irreducibles
        for irr in _field_factor_squarefree(part.monic()):
            mult = 0
            while True:
                q, r = remaining.divmod(irr)
                if r.is_zero():
                    remaining = q
                    mult += 1
                else:
                    break
            out.append((irr, mult))
    return out


def field_roots(f):
    """Roots of f in Q(zeta_N) with multiplicities.

    Returns (roots, nonsplit) where roots is a list of (root, multiplicity)
    and nonsplit is the first irreducible factor of degree > 1, or None.
    """
    roots = []
    nonsplit = None
    for irr, mult in field_factor(f):
        if irr.degree == 1:
            roots.append((-irr.coeffs[0], mult))
        elif nonsplit is None:
            nonsplit = irr
    return roots, nonsplit


def nth_roots_in_field(scalar, n):
    """All solutions of x^n = scalar inside the scalar's field."""
    N = scalar.conductor
    one = CycloScalar.from_rational(1, N)
    coeffs = [-scalar] + [CycloScalar.from_rational(0, N)] * (n - 1) + [one]
    roots, _ = field_roots(Poly(N, coeffs))
    return [r for r, _ in roots]


# ---------------------------------------------------------------------------
# Jordan decomposition and the root-power transform


def jordan_decompose(M):
    """Jordan block data of an invertible matrix, via exact rank profiles."""
    if M.nrows != M.ncols:
        raise ValueError("need a square matrix")
    n = M.nrows
    if n == 0:
        return JordanType([])
    chi = M.char_poly()
    if chi.constant().is_zero():
        raise ValueError("matrix is singular")
    roots, nonsplit = field_roots(chi)
    if nonsplit is not None:
        raise NonSplitSpectrum(repr(nonsplit))
    blocks = []
    ident = Matrix.identity(M.conductor, n)
    for xi, mult in roots:
        if mult == 1:
            blocks.append((xi, 1))
            continue
        shifted = M - ident * xi
        ranks = [n]
        power = ident
        for k in range(1, mult + 2):
            power = power * shifted
            ranks.append(power.rank())
            if ranks[-1] == n - mult:
                break
        # number of blocks of size >= k is rank((M-xi)^{k-1}) - rank((M-xi)^k)
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        at_least.append(0)
        for k in range(len(at_least) - 1):
            count = at_least[k] - at_least[k + 1]
            blocks.extend([(xi, k + 1)] * count)
    return JordanType(blocks)


def poly_power_bracket(f, n):
    """The polynomial whose roots are the n-th powers of the roots of f.

    Computed as Res_y(f(y), x - y^n) up to normalization, so no root
    extraction is needed; the leading coefficient is preserved as lc(f)^n.
    """
    if n < 1:
        raise ValueError("exponent must be positive")
    if f.constant().is_zero():
        raise ZeroConstantTerm("power transform requires nonzero constant term")
    if n == 1:
        return f
    N = f.conductor
    d = f.degree
    mon = f.monic()
    points, values = [], []
    j = 0
    while len(points) <= d:
        xj = CycloScalar.from_rational(j, N)
        # Res_y(mon(y), xj - y^n) = prod over roots alpha of (xj - alpha^n)
        # evaluate by resultant of the two scalar polynomials in y
        g = Poly(N, [xj] + [0] * (n - 1) + [-1])
        points.append(xj)
        values.append(_poly_resultant(mon, g))
        j += 1
    interp = _lagrange(N, points, values)
    # orient sign so the result is monic, then restore lc(f)^n
    if not interp.leading().is_one():
        interp = interp.monic()
    return interp * f.leading() ** n


def _poly_resultant(a, b):
    """Resultant of two polynomials over the field."""
    if a.is_zero() or b.is_zero():
        return CycloScalar.from_rational(0, a.conductor)
    res = CycloScalar.from_rational(1, a.conductor)
    while True:
        if b.degree == 0:
            return res * b.coeffs[0] ** a.degree
        if a.degree < b.degree:
            if (a.degree * b.degree) % 2:
                res = -res
            a, b = b, a
        r = a.divmod(b)[1]
        if r.is_zero():
            return CycloScalar.from_rational(0, a.conductor)
        res = res * b.leading() ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2:
            res = -res
        a, b = b, r


def scalar_to_text(s):
    """Render a scalar as a sum of rational multiples of powers of z,
    where z denotes the primitive N-th root of unity of the conductor."""
    if s.is_rational():
        return str(s.coeffs[0])
    parts = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            z = "z" if k == 1 else f"z^{k}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-1*{z}")
            else:
                parts.append(f"{c}*{z}")
    return "+".join(parts) if parts else "0"


def scalar_from_text(text, conductor):
    """Parse the scalar grammar: sums of terms, each a '*'-product of
    rationals and powers z^k of the primitive N-th root of unity."""
    from .errors import ParseError
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty scalar literal")
    # split on '+' and on '-' that start a new term
    terms = []
    cur = ""
    for idx, ch in enumerate(text):
        if ch == "+" and cur:
            terms.append(cur)
            cur = ""
        elif ch == "-" and cur and text[idx - 1] not in "*/^+-":
            terms.append(cur)
            cur = "-"
        else:
            cur += ch
    if cur:
        terms.append(cur)
    total = CycloScalar.from_rational(0, conductor)
    for term in terms:
        sign = 1
        while term.startswith("-"):
            sign = -sign
            term = term[1:]
        while term.startswith("+"):
            term = term[1:]
        acc = CycloScalar.from_rational(sign, conductor)
        for factor in term.split("*"):
            if not factor:
                raise ParseError(f"empty factor in scalar term {term!r}")
            if factor.startswith("z"):
                power = 1
                if factor.startswith("z^"):
                    try:
                        power = int(factor[2:])
                    except ValueError:
                        raise ParseError(f"bad exponent in {factor!r}")
                elif factor != "z":
                    raise ParseError(f"bad factor {factor!r}")
                acc = acc * CycloScalar.zeta(conductor, power)
            else:
                if "." in factor or "e" in factor or "E" in factor:
                    raise ParseError(
                        f"scalar literals are exact rationals, "
                        f"not decimals: {factor!r}")
                try:
                    acc = acc * Fraction(factor)
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad rational factor {factor!r}")
        total = total + acc
    return total


def matrix_sigma_twist(M, cfg, k):
    """The matrix of the shifted operator; the shift fixes field scalars,
    so entries are unchanged and only the weight bookkeeping moves."""
    if M.nrows != M.ncols:
        raise ValueError("need a square matrix")
    return M
