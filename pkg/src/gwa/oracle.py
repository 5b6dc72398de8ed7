"""Brute-force matrix realization of weight modules and a from-scratch
decomposition routine, independent of the symbolic tensor rules.

The decomposition never guesses: every summand it reports is certified by
an explicit split monomorphism (an embedding together with a left inverse
that are both module maps), and completeness is certified by exact
dimension bookkeeping. Randomness only steers the search; a bad draw can
make the search fail loudly, never return a wrong answer.
"""

from __future__ import annotations

import random

from .errors import OracleError, ValidationError
from .modules import CycleModule, Decomposition, PathModule
from .orbit import TParam, Word, require_same_config
from .scalars import JordanType, Matrix, jordan_decompose


class ExplicitModule:
    """Weight-space dimensions plus one X and one Y matrix per orbit edge.

    X_maps[i] maps weight i to weight i+1; Y_maps[i] maps weight i to
    weight i-1 (indices cyclic modulo p).
    """

    __slots__ = ("cfg", "t", "dims", "X_maps", "Y_maps")

    def __init__(self, cfg, t, dims, X_maps, Y_maps, check=True):
        self.cfg = cfg
        self.t = t
        self.dims = tuple(dims)
        self.X_maps = list(X_maps)
        self.Y_maps = list(Y_maps)
        if check:
            self.check_relations()

    @property
    def total_dimension(self):
        return sum(self.dims)

    def check_relations(self):
        p = self.cfg.p

        def shape_ok(m, nrows, ncols):
            if nrows == 0 or ncols == 0:
                return m.nrows * m.ncols == 0
            return m.nrows == nrows and m.ncols == ncols

        for i in range(p):
            if not shape_ok(self.X_maps[i], self.dims[(i + 1) % p],
                            self.dims[i]):
                raise ValidationError(f"X map {i} has wrong shape")
            if not shape_ok(self.Y_maps[i], self.dims[(i - 1) % p],
                            self.dims[i]):
                raise ValidationError(f"Y map {i} has wrong shape")
        for i in range(p):
            ti = self.t.evaluate(self.cfg, i)
            if self.dims[i] and self.dims[(i + 1) % p]:
                yx = self.Y_maps[(i + 1) % p] * self.X_maps[i]
                ti_id = Matrix.identity(self.cfg.conductor,
                                        self.dims[i]) * ti
                if yx != ti_id:
                    raise ValidationError(f"YX relation fails at weight {i}")
                xy = self.X_maps[i] * self.Y_maps[(i + 1) % p]
                ti_id = Matrix.identity(
                    self.cfg.conductor, self.dims[(i + 1) % p]) * ti
                if xy != ti_id:
                    raise ValidationError(
                        f"XY relation fails at weight {i + 1}")
            elif not ti.is_zero():
                # t nonzero at a weight forces equal adjacent dimensions
                if bool(self.dims[i]) != bool(self.dims[(i + 1) % p]):
                    raise ValidationError(
                        f"invertible edge at weight {i} joins spaces of "
                        "different dimensions")


def realize(m):
    """Exact matrix realization of a cycle or path module."""
    cfg = m.cfg
    p = cfg.p
    N = cfg.conductor
    if isinstance(m, PathModule):
        positions = list(range(m.i + 1, m.i + len(m.w) + 2))
        letters = {k: m.w.letter(k) for k in m.w.positions()}
        basis = [(k, 0) for k in positions]
        d = 1
        F = Fi = None
        wrap = None
    else:
        rp = len(m.w)
        d = m.F.dimension
        F = m.F.to_matrix(N)
        Fi = F.inverse()
        positions = list(range(1, rp + 1))
        letters = {k: m.w.letters[k - 1] for k in positions}
        basis = [(k, s) for k in positions for s in range(d)]
        wrap = rp
    by_weight = [[] for _ in range(p)]
    for b in basis:
        by_weight[b[0] % p].append(b)
    index = {b: by_weight[b[0] % p].index(b) for b in basis}
    dims = [len(w) for w in by_weight]
    X_maps = [Matrix.zeros(N, dims[(i + 1) % p], dims[i]) for i in range(p)]
    Y_maps = [Matrix.zeros(N, dims[(i - 1) % p], dims[i]) for i in range(p)]
    for (k, s) in basis:
        i = k % p
        # X out of position k
        ch = letters.get(k)
        if ch is not None and ch in "1x":
            coeff = m.t.evaluate(cfg, k) if ch == "1" else cfg.one()
            if wrap is not None and k == wrap:
                for u in range(d):
                    if not F.rows[u][s].is_zero():
                        X_maps[i].rows[index[(1, u)]][index[(k, s)]] = \
                            coeff * F.rows[u][s]
            else:
                X_maps[i].rows[index[(k + 1, s)]][index[(k, s)]] = coeff
        # Y out of position k, governed by the letter at k-1
        if wrap is not None and k == 1:
            ch_prev = letters[wrap]
            if ch_prev in "1y":
                for u in range(d):
                    if not Fi.rows[u][s].is_zero():
                        Y_maps[i].rows[index[(wrap, u)]][index[(k, s)]] = \
                            Fi.rows[u][s]
        else:
            ch_prev = letters.get(k - 1)
            if ch_prev is not None and ch_prev in "1y":
                Y_maps[i].rows[index[(k - 1, s)]][index[(k, s)]] = cfg.one()
    return ExplicitModule(cfg, m.t, dims, X_maps, Y_maps)


def kronecker_tensor(e1, e2):
    """Weightwise Kronecker product; the relations then hold for t*t'."""
    require_same_config(e1.cfg, e2.cfg)
    p = e1.cfg.p
    dims = [a * b for a, b in zip(e1.dims, e2.dims)]
    X_maps = [e1.X_maps[i].kron(e2.X_maps[i]) for i in range(p)]
    Y_maps = [e1.Y_maps[i].kron(e2.Y_maps[i]) for i in range(p)]
    return ExplicitModule(e1.cfg, e1.t * e2.t, dims, X_maps, Y_maps)


def direct_sum(e1, e2):
    p = e1.cfg.p
    N = e1.cfg.conductor
    dims = [a + b for a, b in zip(e1.dims, e2.dims)]

    def block(i, m1, m2, rows, cols):
        out = Matrix.zeros(N, rows, cols)
        for r in range(m1.nrows):
            for c in range(m1.ncols):
                out.rows[r][c] = m1.rows[r][c]
        for r in range(m2.nrows):
            for c in range(m2.ncols):
                out.rows[m1.nrows + r][m1.ncols + c] = m2.rows[r][c]
        return out

    X_maps = [block(i, e1.X_maps[i], e2.X_maps[i],
                    dims[(i + 1) % p], dims[i]) for i in range(p)]
    Y_maps = [block(i, e1.Y_maps[i], e2.Y_maps[i],
                    dims[(i - 1) % p], dims[i]) for i in range(p)]
    return ExplicitModule(e1.cfg, e1.t, dims, X_maps, Y_maps)


# ---------------------------------------------------------------------------
# collapsed system: one space per break arc, one forward and one backward map


class Collapsed:
    """Spaces U_s at the weight after each break, with A_s: U_s -> U_{s+1}
    (transport along the arc and across the next break via X) and
    B_s: U_{s+1} -> U_s (across the break via Y, pulled back along the arc).

    A_s B_s = B_s A_s = 0; module maps correspond to tuples commuting with
    all A and B, so direct summands can be detected here.
    """

    __slots__ = ("cfg", "t", "breaks", "starts", "dims", "A", "B")

    def __init__(self, cfg, t, breaks, starts, dims, A, B):
        self.cfg = cfg
        self.t = t
        self.breaks = breaks
        self.starts = starts
        self.dims = dims
        self.A = A
        self.B = B

    @property
    def m(self):
        return len(self.breaks)


def collapse(e):
    """Collapse an explicit module onto the arc-start weight spaces."""
    cfg = e.cfg
    p = cfg.p
    breaks = sorted(e.t.breaks())
    if not breaks:
        raise ValueError("collapse needs at least one break")
    m = len(breaks)
    starts = [(b + 1) % p for b in breaks]
    dims = [e.dims[c] for c in starts]
    A, B = [], []
    for s in range(m):
        c = starts[s]
        b_next = breaks[(s + 1) % m]
        c_next = (b_next + 1) % p
        if e.dims[c] == 0 or e.dims[c_next] == 0:
            A.append(Matrix.zeros(cfg.conductor, e.dims[c_next], e.dims[c]))
            B.append(Matrix.zeros(cfg.conductor, e.dims[c], e.dims[c_next]))
            continue
        # interior transport from weight c up to weight b_next
        arc = Matrix.identity(cfg.conductor, e.dims[c])
        i = c
        while i != b_next:
            arc = e.X_maps[i] * arc
            i = (i + 1) % p
        A.append(e.X_maps[b_next] * arc)
        B.append(arc.inverse() * e.Y_maps[c_next])
    return Collapsed(cfg, e.t, breaks, starts, dims, A, B)


def hom_basis(c_sys, e_sys):
    """Basis of the space of morphisms between two collapsed systems,
    as lists of per-arc matrices (maps C_s -> E_s)."""
    m = c_sys.m
    N = c_sys.cfg.conductor
    # unknown layout: for each s, an e_dims[s] x c_dims[s] matrix
    offsets = []
    total = 0
    for s in range(m):
        offsets.append(total)
        total += e_sys.dims[s] * c_sys.dims[s]
    if total == 0:
        return []

    def idx(s, row, col):
        return offsets[s] + row * c_sys.dims[s] + col

    zero = c_sys.cfg.zero()
    rows = []
    for s in range(m):
        s1 = (s + 1) % m
        # phi_{s+1} A^C_s = A^E_s phi_s
        for r in range(e_sys.dims[s1]):
            for c in range(c_sys.dims[s]):
                row = [zero] * total
                for k in range(c_sys.dims[s1]):
                    v = c_sys.A[s].rows[k][c]
                    if not v.is_zero():
                        row[idx(s1, r, k)] = row[idx(s1, r, k)] + v
                for k in range(e_sys.dims[s]):
                    v = e_sys.A[s].rows[r][k]
                    if not v.is_zero():
                        row[idx(s, k, c)] = row[idx(s, k, c)] - v
                if any(not x.is_zero() for x in row):
                    rows.append(row)
        # phi_s B^C_s = B^E_s phi_{s+1}
        for r in range(e_sys.dims[s]):
            for c in range(c_sys.dims[s1]):
                row = [zero] * total
                for k in range(c_sys.dims[s]):
                    v = c_sys.B[s].rows[k][c]
                    if not v.is_zero():
                        row[idx(s, r, k)] = row[idx(s, r, k)] + v
                for k in range(e_sys.dims[s1]):
                    v = e_sys.B[s].rows[r][k]
                    if not v.is_zero():
                        row[idx(s1, k, c)] = row[idx(s1, k, c)] - v
                if any(not x.is_zero() for x in row):
                    rows.append(row)
    if not rows:
        kernel = None  # whole space
        basis_vecs = []
        one = c_sys.cfg.one()
        for j in range(total):
            vec = [zero] * total
            vec[j] = one
            basis_vecs.append(vec)
    else:
        basis_vecs = Matrix(N, rows).nullspace()
    out = []
    for vec in basis_vecs:
        maps = []
        for s in range(m):
            rows_s = []
            for r in range(e_sys.dims[s]):
                rows_s.append(vec[offsets[s] + r * c_sys.dims[s]:
                                  offsets[s] + (r + 1) * c_sys.dims[s]])
            maps.append(Matrix(N, rows_s) if e_sys.dims[s] else
                        Matrix.zeros(N, 0, c_sys.dims[s]))
        out.append(maps)
    return out


def _try_split(c_sys, e_sys, rng, tries=24):
    """Search for a split embedding of the candidate system into e_sys.

    Returns (phi, pi) with pi*phi = identity on the candidate, or None.
    Soundness: any returned pair is an exact certificate.
    """
    if any(c > e for c, e in zip(c_sys.dims, e_sys.dims)):
        return None
    phis = hom_basis(c_sys, e_sys)
    if not phis:
        return None
    psis = hom_basis(e_sys, c_sys)
    if not psis:
        return None
    N = c_sys.cfg.conductor
    m = c_sys.m
    cdim = sum(c_sys.dims)
    for _ in range(tries):
        cphi = [rng.randint(-3, 3) for _ in phis]
        cpsi = [rng.randint(-3, 3) for _ in psis]
        phi = [_combine(phis, cphi, s, N) for s in range(m)]
        psi = [_combine(psis, cpsi, s, N) for s in range(m)]
        # block diagonal psi*phi over all arcs; empty arcs are trivially
        # invertible
        pi = []
        ok = True
        for s in range(m):
            if c_sys.dims[s] == 0:
                pi.append(Matrix.zeros(N, 0, e_sys.dims[s]))
                continue
            comp = psi[s] * phi[s]
            if comp.det().is_zero():
                ok = False
                break
            pi.append(comp.inverse() * psi[s])
        if ok:
            return phi, pi
    return None


def _combine(maps_list, coeffs, s, N):
    acc = None
    for c, maps in zip(coeffs, maps_list):
        if c:
            term = maps[s] * c
            acc = term if acc is None else acc + term
    if acc is None:
        shape = maps_list[0][s]
        acc = Matrix.zeros(N, shape.nrows, shape.ncols)
    return acc


def _quotient_system(e_sys, pi):
    """Restrict a collapsed system to the kernel of a split projection."""
    N = e_sys.cfg.conductor
    m = e_sys.m
    kernels = []
    for s in range(m):
        if pi[s].nrows == 0:
            kernels.append(Matrix.identity(N, e_sys.dims[s]))
        else:
            vecs = pi[s].nullspace()
            kernels.append(Matrix(N, [[v[i] for v in vecs]
                                      for i in range(e_sys.dims[s])])
                           if vecs else Matrix.zeros(N, e_sys.dims[s], 0))
    new_dims = [k.ncols for k in kernels]
    newA, newB = [], []
    for s in range(m):
        s1 = (s + 1) % m
        newA.append(_restrict(e_sys.A[s], kernels[s], kernels[s1], N))
        newB.append(_restrict(e_sys.B[s], kernels[s1], kernels[s], N))
    return Collapsed(e_sys.cfg, e_sys.t, e_sys.breaks, e_sys.starts,
                     new_dims, newA, newB)


def _restrict(mat, basis_src, basis_dst, N):
    """Express mat * basis_src in the coordinates of basis_dst."""
    if basis_src.ncols == 0 or basis_dst.ncols == 0:
        return Matrix.zeros(N, basis_dst.ncols, basis_src.ncols)
    image = mat * basis_src
    sols = basis_dst.solve([[image.rows[r][c] for r in range(image.nrows)]
                            for c in range(image.ncols)])
    if sols is None:
        raise OracleError("projection kernel is not invariant")
    return Matrix(N, [[sols[c][r] for c in range(len(sols))]
                      for r in range(basis_dst.ncols)])


# ---------------------------------------------------------------------------
# decomposition


def oracle_decompose(e, seed=0):
    """Decompose an explicit module into indecomposables from scratch."""
    rng = random.Random(seed)
    cfg = e.cfg
    if e.total_dimension == 0:
        return Decomposition([])
    if not e.t.breaks():
        return _decompose_breakless(e)
    sys0 = collapse(e)
    found = []
    sys_cur = sys0
    guard = 0
    while sum(sys_cur.dims) > 0:
        guard += 1
        if guard > 4 * e.total_dimension + 16:
            raise OracleError("decomposition did not terminate")
        progressed = False
        for cand in _candidate_summands(sys_cur, rng):
            c_sys = collapse(realize(cand))
            split_pair = _try_split(c_sys, sys_cur, rng)
            if split_pair is not None:
                _, pi = split_pair
                sys_cur = _quotient_system(sys_cur, pi)
                found.append(cand)
                progressed = True
                break
        if not progressed:
            raise OracleError("no certified summand found; "
                              "remaining arc dimensions "
                              f"{sys_cur.dims}")
    dec = Decomposition(found)
    if dec.dimension_vector(cfg.p) != e.dims:
        raise OracleError("dimension accounting failed")
    return dec


def _decompose_breakless(e):
    """Breakless case: the anchored monodromy determines everything."""
    cfg = e.cfg
    p = cfg.p
    n = e.dims[0]
    mono = Matrix.identity(cfg.conductor, n)
    for i in range(p):
        mono = e.X_maps[i] * mono
    jt = jordan_decompose(mono)
    t1 = TParam.one(p)
    return Decomposition(
        [CycleModule(cfg, t1, Word(p, 1, "1" * p), JordanType([(xi, a)]))
         for xi, a in jt.blocks])


def _candidate_summands(sys_cur, rng):
    """Yield candidate indecomposable modules for the current system,
    most promising first: traced strings, then traced/enumerated bands."""
    seen = set()
    for cand in _string_candidates(sys_cur, rng):
        key = cand.normal_form()
        if key not in seen:
            seen.add(key)
            yield cand
    for cand in _band_candidates(sys_cur, rng):
        key = cand.normal_form()
        if key not in seen:
            seen.add(key)
            yield cand
    # last resort: enumerate path shapes outright.  Tracing can lose its
    # way in quotient coordinates where solutions of the step equations
    # are only defined up to other summands; enumeration is exhaustive
    # for paths and every guess is still certified before peeling.
    for cand in _enumerated_path_candidates(sys_cur):
        key = cand.normal_form()
        if key not in seen:
            seen.add(key)
            yield cand


def _enumerated_path_candidates(sys_cur):
    """All path shapes that fit inside the current system, smallest
    first: a start arc plus a sequence of break letters in {x, y}."""
    total = sum(sys_cur.dims)
    m = sys_cur.m
    for crossings in range(total + 1):
        fits = False
        for s in range(m):
            base = _build_path(sys_cur, s, ("x",) * crossings)
            if base.dimension > total:
                continue
            fits = True
            for bits in range(2 ** crossings):
                letters = tuple("xy"[(bits >> k) & 1]
                                for k in range(crossings))
                yield _build_path(sys_cur, s, letters)
        if not fits:
            return


def _member(vec, basis_mat):
    """Is vec in the column span of basis_mat?"""
    if basis_mat.ncols == 0:
        return all(v.is_zero() for v in vec)
    return basis_mat.solve([list(vec)]) is not None


def _image_matrix(mat):
    cols = [[mat.rows[r][c] for r in range(mat.nrows)]
            for c in range(mat.ncols)]
    keep = []
    N = mat.conductor
    for col in cols:
        trial = keep + [col]
        m = Matrix(N, [[trial[j][i] for j in range(len(trial))]
                       for i in range(mat.nrows)])
        if m.rank() == len(trial):
            keep.append(col)
    return Matrix(N, [[keep[j][i] for j in range(len(keep))]
                      for i in range(mat.nrows)]) if keep else \
        Matrix.zeros(N, mat.nrows, 0)


def _string_candidates(sys_cur, rng):
    """Trace candidate path summands starting from forward-dead vectors."""
    m = sys_cur.m
    p = sys_cur.cfg.p
    total = sum(sys_cur.dims)
    out = []
    for s in range(m):
        if sys_cur.dims[s] == 0:
            continue
        kerA = sys_cur.A[s].nullspace()
        if not kerA:
            continue
        imB = _image_matrix(sys_cur.B[s])
        for vec in kerA:
            if _member(vec, imB):
                continue
            out.extend(_trace_back(sys_cur, s, vec, total, rng))
    # shorter candidates first: cheaper to test, peel small pieces early
    out.sort(key=lambda c: c.dimension)
    return out


def _trace_back(sys_cur, s_end, vec, max_steps, rng):
    """Walk a dead-end vector backwards, recording break letters.

    Returns candidate path modules (several when a step is ambiguous)."""
    m = sys_cur.m
    results = []
    stack = [(s_end, tuple(vec), (), 0)]
    N = sys_cur.cfg.conductor
    while stack and len(results) < 6:
        s, v, letters, steps = stack.pop()
        if steps > max_steps:
            continue
        sp = (s - 1) % m
        options = []
        # came across break b_s via X: solve A_{s-1} u = v
        sol = sys_cur.A[sp].solve([list(v)])
        if sol is not None:
            options.append(("x", sp, tuple(sol[0])))
        # came across break b_s via Y: u = B_{s-1} v gives the predecessor
        u = [sum((sys_cur.B[sp].rows[r][c] * v[c]
                  for c in range(len(v))),
                 start=sys_cur.cfg.zero())
             for r in range(sys_cur.B[sp].nrows)]
        if any(not x.is_zero() for x in u):
            options.append(("y", sp, tuple(u)))
        if not options:
            # reached the start of the string: build the candidate
            results.append(_build_path(sys_cur, s, letters))
            continue
        for ch, sp2, u2 in options:
            stack.append((sp2, u2, (ch,) + letters, steps + 1))
        if len(options) == 2:
            # ambiguous step: also allow terminating here if v is not
            # forced to continue (contamination can fake both options)
            pass
    return results


def _build_path(sys_cur, s_start, letters):
    """Assemble a path module from a start arc and break letters.

    letters[k] is the letter at the k-th break crossed going forward."""
    cfg = sys_cur.cfg
    p = cfg.p
    m = sys_cur.m
    i = sys_cur.breaks[s_start]
    word_letters = []
    s = s_start
    pos = i  # current absolute break position
    for ch in letters:
        b_next = sys_cur.breaks[(s + 1) % m]
        gap = (b_next - sys_cur.breaks[s]) % p
        if gap == 0:
            gap = p
        word_letters.extend(["1"] * (gap - 1))
        word_letters.append(ch)
        pos += gap
        s = (s + 1) % m
    # trailing arc: from the last crossed break to the ending break
    b_next = sys_cur.breaks[(s + 1) % m]
    gap = (b_next - sys_cur.breaks[s]) % p
    if gap == 0:
        gap = p
    word_letters.extend(["1"] * (gap - 1))
    return PathModule(cfg, sys_cur.t, i,
                      Word(p, (i % p) + 1, "".join(word_letters)))


def _band_candidates(sys_cur, rng):
    """Candidate cycle summands from the normalized circle operator."""
    cfg = sys_cur.cfg
    m = sys_cur.m
    if any(d != sys_cur.dims[0] for d in sys_cur.dims):
        return []
    n = sys_cur.dims[0]
    if n == 0:
        return []
    taus = []
    for s in range(m):
        tau = _regular_step(sys_cur, s)
        if tau is None:
            return []
        taus.append(tau)
    T = Matrix.identity(cfg.conductor, n)
    for tau in taus:
        T = tau * T
    # divide out the forced parameter scalars accumulated along the arcs
    forced = cfg.one()
    breaks = sys_cur.t.breaks()
    for i in range(cfg.p):
        if i not in breaks:
            forced = forced * sys_cur.t.evaluate(cfg, i)
    if forced.is_zero():
        return []
    T = T * forced.inverse()
    # eigen-data of the once-around operator via irreducible factors; the
    # revolution count r recovers a base-field eigenvalue as x^r mod g
    from .scalars import Poly, field_factor
    factors = field_factor(T.char_poly())
    sizes_by_factor = []
    N = cfg.conductor
    ident = Matrix.identity(N, n)
    for g, mult in factors:
        gT = _poly_at_matrix(g, T, N)
        power = ident
        ranks = [n]
        for _ in range(mult):
            power = power * gT
            ranks.append(power.rank())
        sizes = []
        for k in range(1, mult + 1):
            count = (ranks[k - 1] - ranks[k]) // g.degree
            nxt = (ranks[k] - ranks[k + 1]) // g.degree if k < mult else 0
            sizes.extend([k] * (count - nxt))
        sizes_by_factor.append((g, sizes))
    out = []
    p = cfg.p
    max_r = max(1, n)
    words = _cycle_words(sys_cur, max_r)
    for w in words:
        r = len(w.letters) // p
        xr = Poly(N, [cfg.zero()] * r + [cfg.one()])
        for g, sizes in sizes_by_factor:
            xi_poly = xr.divmod(g)[1]
            if xi_poly.degree > 0:
                continue
            xi = xi_poly.constant()
            if xi.is_zero():
                continue
            for a in sorted(set(sizes)):
                out.append(CycleModule(cfg, sys_cur.t, w,
                                       JordanType([(xi, a)])))
    out.sort(key=lambda c: c.dimension)
    return out


def _regular_step(sys_cur, s):
    """An invertible forward step U_s -> U_{s+1} when no strings remain."""
    N = sys_cur.cfg.conductor
    n = sys_cur.dims[s]
    s1 = (s + 1) % sys_cur.m
    if sys_cur.dims[s1] != n:
        return None
    kerA = sys_cur.A[s].nullspace()
    # vectors outside ker A travel by A; vectors inside travel by a
    # B-preimage (exists when the system is a sum of circles)
    if not kerA:
        tau = sys_cur.A[s]
        return tau if not tau.det().is_zero() else None
    ker_mat = Matrix(N, [[v[i] for v in kerA] for i in range(n)])
    pre = sys_cur.B[s].solve([[v[i] for i in range(n)] for v in kerA])
    if pre is None:
        return None
    # complement of ker A via pivot columns of A
    comp_cols = _pivot_columns(sys_cur.A[s])
    if len(comp_cols) + len(kerA) != n:
        return None
    cols = []
    images = []
    for c in comp_cols:
        e = [sys_cur.cfg.zero()] * n
        e[c] = sys_cur.cfg.one()
        cols.append(e)
        images.append([sys_cur.A[s].rows[r][c]
                       for r in range(sys_cur.dims[s1])])
    for v, u in zip(kerA, pre):
        cols.append(list(v))
        images.append(list(u))
    basis = Matrix(N, [[cols[j][i] for j in range(n)] for i in range(n)])
    img = Matrix(N, [[images[j][i] for j in range(n)]
                     for i in range(sys_cur.dims[s1])])
    if basis.det().is_zero():
        return None
    tau = img * basis.inverse()
    return tau if not tau.det().is_zero() else None


def _pivot_columns(mat):
    return mat._echelon()[1]


def _poly_at_matrix(g, M, N):
    acc = Matrix.zeros(N, M.nrows, M.ncols)
    power = Matrix.identity(N, M.nrows)
    for c in g.coeffs:
        if not c.is_zero():
            acc = acc + power * c
        power = power * M
    return acc


def _cycle_words(sys_cur, max_r):
    """All valid non-periodic cycle words with at most max_r revolutions."""
    from .orbit import word_is_periodic
    cfg = sys_cur.cfg
    p = cfg.p
    breaks = sorted(sys_cur.t.breaks())
    out = []
    for r in range(1, max_r + 1):
        slots = len(breaks) * r
        if slots > 16:
            break
        for mask in range(2 ** slots):
            letters = ["1"] * (r * p)
            bit = 0
            for rev in range(r):
                for b in breaks:
                    # break at weight b occurs at position b (or p when b=0)
                    pos = rev * p + (b - 1) % p + 1
                    letters[pos - 1] = "x" if (mask >> bit) & 1 else "y"
                    bit += 1
            w = Word(p, 1, "".join(letters))
            if not word_is_periodic(w):
                out.append(w)
    return out


# ---------------------------------------------------------------------------
# composition series


def oracle_composition_series(e, seed=0):
    """Multiset of simple factors, found by repeatedly extracting a simple
    submodule and passing to the quotient. Randomness only picks starting
    vectors; the factor multiset is unique by Jordan-Hoelder."""
    rng = random.Random(seed)
    factors = []
    cur = e
    guard = 0
    while cur.total_dimension:
        guard += 1
        if guard > e.total_dimension + 4:
            raise OracleError("composition series did not terminate")
        simple = _find_simple_submodule(cur, rng)
        factors.append(_identify_simple(cur, simple))
        cur = _quotient_module(cur, simple)
    return Decomposition(factors)


def _closure(e, weight, vec):
    """Smallest invariant subspace containing the given weight vector,
    as per-weight column matrices."""
    cfg = e.cfg
    p = cfg.p
    N = cfg.conductor
    basis = [[] for _ in range(p)]  # lists of vectors (as lists)
    pending = [(weight, list(vec))]
    while pending:
        w, v = pending.pop()
        if all(x.is_zero() for x in v):
            continue
        mat = _cols_matrix(N, basis[w], e.dims[w])
        if _member(v, mat):
            continue
        basis[w].append(v)
        for mp, w2 in ((e.X_maps[w], (w + 1) % p),
                       (e.Y_maps[w], (w - 1) % p)):
            img = [sum((mp.rows[r][c] * v[c] for c in range(len(v))
                        if not mp.rows[r][c].is_zero()),
                       start=cfg.zero())
                   for r in range(e.dims[w2])]
            pending.append((w2, img))
    return [_cols_matrix(N, basis[w], e.dims[w]) for w in range(p)]


def _cols_matrix(N, vecs, nrows):
    if not vecs:
        return Matrix.zeros(N, nrows, 0)
    return Matrix(N, [[vecs[j][i] for j in range(len(vecs))]
                      for i in range(nrows)])


def _subspace_dim(mats):
    return sum(m.rank() for m in mats)


def _find_simple_submodule(e, rng):
    """Locate a simple submodule: closures of forward-dead vectors and of
    circle-operator eigenvectors, minimized until stable."""
    candidates = _socle_candidates(e)
    if not candidates:
        raise OracleError("no candidate generators for a simple submodule")
    best = None
    best_dim = None
    for w, v in candidates:
        sub = _closure(e, w, v)
        sdim = _subspace_dim(sub)
        if sdim and (best_dim is None or sdim < best_dim):
            best, best_dim = sub, sdim
    # refine: inside the candidate closure, every weight vector must
    # regenerate the whole subspace, otherwise descend
    for _ in range(e.total_dimension + 2):
        again = False
        for w in range(e.cfg.p):
            mat = best[w]
            for j in range(mat.ncols):
                v = [mat.rows[i][j] for i in range(mat.nrows)]
                sub = _closure(e, w, v)
                sdim = _subspace_dim(sub)
                if 0 < sdim < best_dim:
                    best, best_dim = sub, sdim
                    again = True
                    break
            if again:
                break
        if not again:
            if any(mat.ncols > 1 for mat in best):
                raise OracleError("could not isolate a simple submodule")
            return best
    raise OracleError("simple submodule refinement did not terminate")


def _socle_candidates(e):
    """Weight vectors likely to generate small submodules: forward-dead
    vectors at break edges, else eigenvectors of the circle operator."""
    from .scalars import field_factor
    cfg = e.cfg
    p = cfg.p
    out = []
    if e.t.breaks():
        sys_c = collapse(e)
        for s in range(sys_c.m):
            if sys_c.dims[s] == 0:
                continue
            for vec in sys_c.A[s].nullspace():
                out.append((sys_c.starts[s], list(vec)))
        # additionally, eigenvectors of the regularized circle map pick
        # out band directions that dead vectors alone cannot isolate
        taus = []
        for s in range(sys_c.m):
            tau = _regular_step(sys_c, s)
            if tau is None:
                return out
            taus.append(tau)
        T = Matrix.identity(cfg.conductor, sys_c.dims[0])
        for tau in taus:
            T = tau * T
        anchor = sys_c.starts[0]
    else:
        n = e.dims[0]
        if n == 0:
            return []
        T = Matrix.identity(cfg.conductor, n)
        for i in range(p):
            T = e.X_maps[i] * T
        anchor = 0
    for g, _mult in field_factor(T.char_poly()):
        if g.degree != 1:
            continue
        lam = -(g.coeffs[0] * g.coeffs[1].inverse())
        shifted = T - Matrix.identity(cfg.conductor, T.nrows) * lam
        for vec in shifted.nullspace():
            out.append((anchor, list(vec)))
    return out


def _identify_simple(e, sub):
    """Name the simple module spanned by a dims<=1 invariant subspace."""
    cfg = e.cfg
    p = cfg.p
    present = [w for w in range(p) if sub[w].ncols]
    breaks = e.t.breaks()

    def edge_dead(i):
        """True when neither X forward nor Y backward links weight i to i+1."""
        i2 = (i + 1) % p
        if sub[i].ncols == 0 or sub[i2].ncols == 0:
            return True
        xs = _edge_scalar(e.X_maps[i], sub[i], sub[i2])
        if xs is not None and not xs.is_zero():
            return False
        ys = _edge_scalar(e.Y_maps[i2], sub[i2], sub[i])
        return ys is None or ys.is_zero()

    dead_edges = [i for i in range(p) if edge_dead(i)]
    if len(present) < p or dead_edges:
        start_candidates = [w for w in present
                            if ((w - 1) % p) in dead_edges]
        if len(start_candidates) != 1:
            raise OracleError("disconnected simple support")
        a = start_candidates[0]
        s = len(present) - 1
        return PathModule(cfg, e.t, (a - 1) % p,
                          Word(p, ((a - 1) % p) + 1, "1" * s))
    # all weights present with one dimension each and no dead edges:
    # circle simple
    letters = [""] * p
    acc = cfg.one()
    for i in range(p):
        i2 = (i + 1) % p
        xi_scal = _edge_scalar(e.X_maps[i], sub[i], sub[i2])
        if xi_scal is not None and not xi_scal.is_zero():
            letters[i] = "1" if i not in breaks else "x"
            acc = acc * xi_scal
        else:
            if i not in breaks:
                raise OracleError("vanishing edge off the break set")
            y_scal = _edge_scalar(e.Y_maps[i2], sub[i2], sub[i])
            if y_scal is None or y_scal.is_zero():
                raise OracleError("simple circle with a dead edge")
            letters[i] = "y"
            acc = acc * y_scal.inverse()
    forced = cfg.one()
    for i in range(p):
        if i not in breaks:
            forced = forced * e.t.evaluate(cfg, i)
    xi = acc * forced.inverse()
    # positions 1..p carry weights 1..p-1,0: letter at position k acts
    # out of weight k % p
    word = "".join(letters[k % p] for k in range(1, p + 1))
    return CycleModule(cfg, e.t, Word(p, 1, word),
                       JordanType([(xi, 1)]))


def _edge_scalar(mp, src, dst):
    """The scalar lambda with mp * src = lambda * dst for line subspaces."""
    if src.ncols != 1 or dst.ncols != 1:
        return None
    img = mp * src
    sol = dst.solve([[img.rows[r][0] for r in range(img.nrows)]])
    if sol is None:
        return None
    return sol[0][0]


def _quotient_module(e, sub):
    """Quotient of an explicit module by an invariant subspace."""
    cfg = e.cfg
    p = cfg.p
    N = cfg.conductor
    bases = []
    comps = []
    for w in range(p):
        mat = sub[w]
        pivots = set()
        if mat.ncols:
            pivots = set(mat.transpose()._echelon()[1])
        comp_cols = [i for i in range(e.dims[w]) if i not in pivots]
        comp_cols = comp_cols[:e.dims[w] - mat.ncols]
        full_cols = [[mat.rows[i][j] for i in range(e.dims[w])]
                     for j in range(mat.ncols)]
        for c in comp_cols:
            vec = [cfg.zero()] * e.dims[w]
            vec[c] = cfg.one()
            full_cols.append(vec)
        full = _cols_matrix(N, full_cols, e.dims[w])
        if full.ncols != e.dims[w] or (full.ncols and full.det().is_zero()):
            raise OracleError("failed to complete subspace basis")
        bases.append(full)
        comps.append(mat.ncols)
    dims = [e.dims[w] - comps[w] for w in range(p)]
    invs = [bases[w].inverse() if e.dims[w] else bases[w] for w in range(p)]

    def project(mat_map, w_src, w_dst):
        if dims[w_dst] == 0 or dims[w_src] == 0:
            return Matrix.zeros(N, dims[w_dst], dims[w_src])
        conj = invs[w_dst] * mat_map * bases[w_src]
        rows = [row[comps[w_src]:] for row in conj.rows[comps[w_dst]:]]
        return Matrix(N, rows, ncols=dims[w_src])

    X_maps = [project(e.X_maps[w], w, (w + 1) % p) for w in range(p)]
    Y_maps = [project(e.Y_maps[w], w, (w - 1) % p) for w in range(p)]
    return ExplicitModule(cfg, e.t, dims, X_maps, Y_maps, check=False)
