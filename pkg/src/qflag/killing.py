"""Coquasi-triangular pairing r, its inverse, and the quantum Killing map Q.

On generators r(u^i_j ⊗ u^k_l) = q^(-1/N) R^{ki}_{jl}.  Two derived matrix
valued maps do most of the work:

* rho(x)[k][l] = r(x ⊗ u^k_l), an algebra map,
* A(x)[k][m]   = r(u^k_m ⊗ x), an algebra anti-map.

Q(h) = sum A(h_(1)) rho(h_(2)), and for a product
Q(f g) = sum A(g_(1)) Q(f) rho(g_(2)).  Q of a word is therefore built
letter by letter with the transfer operator X -> sum_k A(u^i_k) X rho(u^k_j).
"""

from __future__ import annotations

from .errors import InvalidElementError
from .ncalg import (SPECIAL, TensorPoly, _acc, antipode, coproduct,
                    r_bar_entry, r_matrix_entry, NCPoly)


class QMatrix:
    """Square matrix over QScalar."""

    __slots__ = ("rows", "F")

    def __init__(self, F, rows):
        self.F = F
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, F, n):
        return cls(F, [[F.one if i == j else F.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, F, n):
        return cls(F, [[F.zero] * n for _ in range(n)])

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, kl):
        k, l = kl
        return self.rows[k][l]

    def __add__(self, other):
        return QMatrix(self.F, [[a + b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return QMatrix(self.F, [[a - b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, c):
        return QMatrix(self.F, [[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                s = self.F.zero
                for a, b in zip(r, col):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return QMatrix(self.F, out)

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def as_vector(self):
        """Sparse dict keyed by 1-based (k, l)."""
        return {(k + 1, l + 1): x for k, r in enumerate(self.rows)
                for l, x in enumerate(r) if x}

    def __repr__(self):
        from .printing import format_matrix
        return f"QMatrix({format_matrix(self)})"


class KillingContext:
    """Memo tables for r, r-bar and Q on one SU context."""

    def __init__(self, ctx):
        if ctx.kind != SPECIAL:
            raise InvalidElementError("pairings are defined on C_q[SU_N] only")
        self.ctx = ctx
        F = ctx.F
        n = ctx.size
        self.F = F
        self.n = n
        qm = F.s(-1)          # q^(-1/N)
        qp = F.s(1)
        rng = range(1, n + 1)
        # generator tables indexed by generator integer
        self._rho = {}
        self._A = {}
        self._rhob = {}
        self._Ab = {}
        for i in rng:
            for j in rng:
                g = ctx.gen(i, j)
                self._rho[g] = QMatrix(F, [[qm * r_matrix_entry(F, k, i, j, l) for l in rng] for k in rng])
                self._A[g] = QMatrix(F, [[qm * r_matrix_entry(F, i, k, m, j) for m in rng] for k in rng])
                self._rhob[g] = QMatrix(F, [[qp * r_bar_entry(F, k, i, j, l) for l in rng] for k in rng])
                self._Ab[g] = QMatrix(F, [[qp * r_bar_entry(F, i, k, m, j) for m in rng] for k in rng])
        self._r = {}
        self._rb = {}
        self._r_alt = {}
        self._rho_w = {}
        self._A_w = {}
        self._Ab_w = {}
        self._rhob_w = {}
        self._Q = {}

    # -- word matrices ------------------------------------------------------

    def rho_word(self, w):
        hit = self._rho_w.get(w)
        if hit is None:
            hit = QMatrix.identity(self.F, self.n)
            for g in w:
                hit = hit * self._rho[g]
            self._rho_w[w] = hit
        return hit

    def A_word(self, w):
        hit = self._A_w.get(w)
        if hit is None:
            hit = QMatrix.identity(self.F, self.n)
            for g in reversed(w):
                hit = hit * self._A[g]
            self._A_w[w] = hit
        return hit

    def Abar_word(self, w):
        # r-bar(u^i_j ⊗ g h) = sum_k rbar(u^i_k ⊗ g) rbar(u^k_j ⊗ h)
        hit = self._Ab_w.get(w)
        if hit is None:
            hit = QMatrix.identity(self.F, self.n)
            for g in w:
                hit = hit * self._Ab[g]
            self._Ab_w[w] = hit
        return hit

    def rhobar_word(self, w):
        # r-bar(f g ⊗ u^k_l) = sum_m rbar(g ⊗ u^k_m) rbar(f ⊗ u^m_l)
        hit = self._rhob_w.get(w)
        if hit is None:
            hit = QMatrix.identity(self.F, self.n)
            for g in reversed(w):
                hit = hit * self._rhob[g]
            self._rhob_w[w] = hit
        return hit

    # -- r ------------------------------------------------------------------

    def r_mono(self, m1, m2):
        """r on two normal-form monomials, peeling the left argument."""
        key = (m1, m2)
        hit = self._r.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        w1 = m1[1]
        if not w1:
            val = ctx.counit_monomial(m2)
        else:
            x, rest = w1[0], (0, w1[1:])
            i, j = ctx.gen_pair(x)
            val = self.F.zero
            for (h1, h2), c in ctx.delta_monomial(m2).items():
                a = self.A_word(h1[1])[i - 1, j - 1]
                if a:
                    b = self.r_mono(rest, h2)
                    if b:
                        val = val + c * a * b
        self._r[key] = val
        return val

    def r_mono_alt(self, m1, m2):
        """r evaluated by peeling the right argument instead (oracle route)."""
        key = (m1, m2)
        hit = self._r_alt.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        w2 = m2[1]
        if not w2:
            val = ctx.counit_monomial(m1)
        else:
            x, rest = w2[-1], (0, w2[:-1])
            k, l = ctx.gen_pair(x)
            val = self.F.zero
            # r(f ⊗ g x) = r(f_(1) ⊗ x) r(f_(2) ⊗ g)
            for (f1, f2), c in ctx.delta_monomial(m1).items():
                a = self.rho_word(f1[1])[k - 1, l - 1]
                if a:
                    b = self.r_mono_alt(f2, rest)
                    if b:
                        val = val + c * a * b
        self._r_alt[key] = val
        return val

    def rbar_mono(self, m1, m2):
        """r-bar peeling the left argument: rbar(x f ⊗ h) = rbar(f ⊗ h1) rbar(x ⊗ h2)."""
        key = (m1, m2)
        hit = self._rb.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        w1 = m1[1]
        if not w1:
            val = ctx.counit_monomial(m2)
        else:
            x, rest = w1[0], (0, w1[1:])
            i, j = ctx.gen_pair(x)
            val = self.F.zero
            for (h1, h2), c in ctx.delta_monomial(m2).items():
                a = self.Abar_word(h2[1])[i - 1, j - 1]
                if a:
                    b = self.rbar_mono(rest, h1)
                    if b:
                        val = val + c * a * b
        self._rb[key] = val
        return val

    def pair(self, f, g, mono_fn):
        _check_pair(self.ctx, f, g)
        total = self.F.zero
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                v = mono_fn(m1, m2)
                if v:
                    total = total + c1 * c2 * v
        return total

    # -- Q ------------------------------------------------------------------

    def transfer(self, g, X):
        i, j = self.ctx.gen_pair(g)
        out = None
        for k in range(1, self.n + 1):
            gik = self.ctx.gen(i, k)
            gkj = self.ctx.gen(k, j)
            term = self._A[gik] * X * self._rho[gkj]
            out = term if out is None else out + term
        return out

    def Q_word(self, w):
        hit = self._Q.get(w)
        if hit is None:
            if not w:
                hit = QMatrix.identity(self.F, self.n)
            else:
                hit = self.transfer(w[-1], self.Q_word(w[:-1]))
            self._Q[w] = hit
        return hit

    def Q(self, f):
        if f.ctx != self.ctx:
            raise InvalidElementError("element from a different context")
        out = QMatrix.zeros(self.F, self.n)
        for (dp, w), c in f.terms.items():
            out = out + self.Q_word(w).scale(c)
        return out

    def Q_naive(self, f):
        """Q straight from the definition Q_kl(h) = sum r(u^k_m ⊗ h1) r(h2 ⊗ u^m_l),
        with r evaluated through the right-peeling recursion."""
        ctx = self.ctx
        n = self.n
        rows = [[self.F.zero] * n for _ in range(n)]
        t = coproduct(f)
        for (h1, h2), c in t.terms.items():
            for k in range(1, n + 1):
                for m in range(1, n + 1):
                    a = self.r_mono_alt((0, (ctx.gen(k, m),)), h1)
                    if not a:
                        continue
                    for l in range(1, n + 1):
                        b = self.r_mono_alt(h2, (0, (ctx.gen(m, l),)))
                        if b:
                            rows[k - 1][l - 1] = rows[k - 1][l - 1] + c * a * b
        return QMatrix(self.F, rows)


def _check_pair(ctx, f, g):
    for p in (f, g):
        if p.ctx != ctx:
            raise InvalidElementError("pairing arguments must live in the SU context")
        if any(dp for dp, _ in p.terms):
            raise InvalidElementError("pairings are not defined on det^-1")


_KCTX = {}


def killing_context(ctx):
    k = _KCTX.get(ctx.key)
    if k is None:
        k = KillingContext(ctx)
        _KCTX[ctx.key] = k
    return k


def r_form(f, g):
    k = killing_context(f.ctx)
    return k.pair(f, g, k.r_mono)


def r_form_alt(f, g):
    k = killing_context(f.ctx)
    return k.pair(f, g, k.r_mono_alt)


def r_bar_form(f, g):
    k = killing_context(f.ctx)
    return k.pair(f, g, k.rbar_mono)


def killing_Q(h):
    if any(dp for dp, _ in h.terms):
        raise InvalidElementError("Q is not defined on det^-1")
    return killing_context(h.ctx).Q(h)


def killing_Q_naive(h):
    return killing_context(h.ctx).Q_naive(h)


def ad_r(f):
    """Right adjoint coaction h -> h_(2) ⊗ S(h_(1)) h_(3)."""
    ctx = f.ctx
    if ctx.kind != SPECIAL:
        raise InvalidElementError("Ad_R is implemented on C_q[SU_N]")
    out = {}
    for (m1, m23), c in coproduct(f).terms.items():
        s1 = ctx.antipode_monomial(m1)
        for (m2, m3), c2 in ctx.delta_monomial(m23).items():
            right = s1 * NCPoly(ctx, {m3: ctx.F.one})
            for m, c3 in right.terms.items():
                _acc(out, (m2, m), c * c2 * c3)
    return TensorPoly(ctx, ctx, out)


# ---------------------------------------------------------------------------
# closed forms, evaluated as sparse sums over nonzero R-matrix entries

def _r_entries(F, n, bar=False):
    fn = r_bar_entry if bar else r_matrix_entry
    out = []
    rng = range(1, n + 1)
    for i in rng:
        for k in rng:
            for j, l in {(k, i), (i, k)}:
                v = fn(F, i, k, j, l)
                if v:
                    out.append(((i, k, j, l), v))
    return out


def sparse_sum(factors, bound, weight):
    """Sum over all assignments of the product of the factor values.

    ``factors`` is a list of (index-variable names, entries) with entries a
    list of (index tuple, value); ``bound`` fixes some variables.
    ``weight(assignment)`` supplies the scalar q-power prefactor.
    """
    states = [(dict(bound), None)]
    for names, entries in factors:
        nxt = []
        for env, val in states:
            for idx, v in entries:
                new = None
                ok = True
                for name, x in zip(names, idx):
                    cur = env.get(name) if new is None else new.get(name)
                    if cur is None:
                        if new is None:
                            new = dict(env)
                        new[name] = x
                    elif cur != x:
                        ok = False
                        break
                if ok:
                    nxt.append((env if new is None else new, v if val is None else val * v))
        states = nxt
        if not states:
            break
    total = None
    for env, val in states:
        term = val * weight(env)
        total = term if total is None else total + term
    return total


SHAPES = {
    # name: (argument names, factor list of (R or Rbar, variable names), weight exponent)
    "Gen": (("i", "j"),
            [("R", "ikza"), ("R", "zajl")],
            lambda e, N: (0, -2)),
    "SGen": (("g", "h"),
             [("B", "akzh"), ("B", "zgal")],
             lambda e, N: (2 * (e["a"] - e["h"]), 2)),
    "GenGen": (("i", "j", "r", "s"),
               [("R", "rkzb"), ("R", "izya"), ("R", "yajx"), ("R", "xbsl")],
               lambda e, N: (0, -4)),
    "GenSGen": (("i", "j", "g", "h"),
                [("B", "bkzh"), ("R", "izya"), ("R", "yajx"), ("B", "xgbl")],
                lambda e, N: (2 * (e["b"] - e["h"]), 0)),
    "GenSGenGen": (("i", "j", "g", "h", "r", "s"),
                   [("R", "rkzc"), ("B", "bzyh"), ("R", "iyxa"), ("R", "xajw"),
                    ("B", "wgbv"), ("R", "vcsl")],
                   lambda e, N: (2 * (e["b"] - e["h"]), -2)),
}


_ENTRY_CACHE = {}


def closed_Q(ctx, shape, k, l, *indices):
    """Closed-form value of Q_kl on u^i_j, S(u^g_h), products thereof."""
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    names, factors, wexp = SHAPES[shape]
    n = ctx.size
    if len(indices) != len(names):
        raise ValueError(f"{shape} takes {len(names)} indices")
    for x in (k, l) + tuple(indices):
        if not 1 <= x <= n:
            raise InvalidElementError(f"index {x} out of range 1..{n}")
    F = ctx.F
    key = (ctx.key,)
    tables = _ENTRY_CACHE.get(key)
    if tables is None:
        tables = {"R": _r_entries(F, n), "B": _r_entries(F, n, bar=True)}
        _ENTRY_CACHE[key] = tables
    bound = dict(zip(names, indices))
    bound["k"], bound["l"] = k, l
    fl = [(tuple(vars_), tables[kind]) for kind, vars_ in factors]

    def weight(env):
        qexp, nexp = wexp(env, n)
        # q^(qexp) * q^(nexp/N) = s^(qexp*N + nexp)
        return F.s(qexp * n + nexp)

    val = sparse_sum(fl, bound, weight)
    return F.zero if val is None else val


def closed_Q_matrix(ctx, shape, *indices):
    n = ctx.size
    return QMatrix(ctx.F, [[closed_Q(ctx, shape, k, l, *indices) for l in range(1, n + 1)]
                           for k in range(1, n + 1)])


def shape_element(ctx, shape, *indices):
    """The algebra element whose Q-image a closed form describes."""
    u = ctx.u
    if shape == "Gen":
        i, j = indices
        return u(i, j)
    if shape == "SGen":
        g, h = indices
        return antipode(u(g, h))
    if shape == "GenGen":
        i, j, r, s = indices
        return u(i, j) * u(r, s)
    if shape == "GenSGen":
        i, j, g, h = indices
        return u(i, j) * antipode(u(g, h))
    if shape == "GenSGenGen":
        i, j, g, h, r, s = indices
        return u(i, j) * antipode(u(g, h)) * u(r, s)
    raise ValueError(shape)
