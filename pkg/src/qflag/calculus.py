"""The quotient calculus Ω¹_q(SU_N) with left-module basis e⁻, e⁰, e⁺.

Cosets of ker ε modulo I = ker(Q)⁺ + D1 + D2 are computed from Q-images:
the Q-images of the 2N-1 basis representatives together with those of
D1 ∪ D2 span all N×N matrices, so every Q(x) has unique coordinates in
that basis and the coset of x is read off from the first 2N-1 of them.

Basis order is (e⁻_1..e⁻_{N-1}, e⁰, e⁺_1..e⁺_{N-1}) with representatives
e⁻_i = u^1_{i+1},  e⁰ = u^1_1 - 1,  e⁺_i = u^{i+1}_1.
"""

from __future__ import annotations

from .errors import ContextMismatchError, InternalInvariantError, NotAugmentationError
from .killing import killing_context
from .linalg import rank, solve_dense
from .ncalg import SPECIAL, NCPoly, _acc, antipode, counit, coproduct


class CalculusContext:
    def __init__(self, ctx):
        if ctx.kind != SPECIAL:
            raise ContextMismatchError("the calculus lives on C_q[SU_N]")
        self.ctx = ctx
        self.n = n = ctx.size
        self.F = ctx.F
        self.K = killing_context(ctx)
        one = ctx.one()
        reps = [ctx.u(1, i + 1) for i in range(1, n)]
        reps.append(ctx.u(1, 1) - one)
        reps += [ctx.u(i + 1, 1) for i in range(1, n)]
        self.reps = reps
        self.labels = ([f"em[{i}]" for i in range(1, n)] + ["e0"]
                       + [f"ep[{i}]" for i in range(1, n)])
        self.d1 = [ctx.u(i, 1) * antipode(ctx.u(1, i)) for i in range(2, n + 1)]
        self.d2 = [ctx.u(i, j) for i in range(2, n + 1) for j in range(2, n + 1) if i != j]
        self.keys = [(k, l) for k in range(1, n + 1) for l in range(1, n + 1)]
        cols = [self._vec(self.K.Q(x)) for x in reps + self.d1 + self.d2]
        if len(cols) != n * n:
            raise InternalInvariantError("wrong number of spanning elements")
        # inverse of the column matrix, so coordinates are one product away
        zero, onev = self.F.zero, self.F.one
        self._inv_rows = None
        inv_cols = []
        for t in range(n * n):
            e = [onev if s == t else zero for s in range(n * n)]
            inv_cols.append(solve_dense(cols, e, zero, onev))
        m = 2 * n - 1
        self._inv_rows = [[inv_cols[t][b] for t in range(n * n)] for b in range(m)]
        self.dim = m
        self._coset_mono = {}
        self._dmono = {}
        self._act = {}

    def _vec(self, Qm):
        return [Qm[k - 1, l - 1] for k, l in self.keys]

    # -- cosets ---------------------------------------------------------------

    def coords_of_Q(self, Qm):
        v = self._vec(Qm)
        out = []
        for row in self._inv_rows:
            s = self.F.zero
            for a, b in zip(row, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def coset(self, x):
        if x.ctx != self.ctx:
            raise ContextMismatchError("element from a different context")
        if counit(x):
            raise NotAugmentationError("coset needs an element with ε(x) = 0")
        return self.coords_of_Q(self.K.Q(x))

    def coset_monomial_aug(self, m):
        """Coordinates of the coset of m - ε(m)."""
        hit = self._coset_mono.get(m)
        if hit is None:
            Qm = self.K.Q_word(m[1])
            if self.ctx.counit_monomial(m):
                Qm = Qm - self.K.Q(self.ctx.one())
            hit = self.coords_of_Q(Qm)
            self._coset_mono[m] = hit
        return hit

    def in_ideal(self, x):
        return not counit(x) and not any(self.coset(x))

    # -- forms ----------------------------------------------------------------

    def zero_form(self):
        return Omega1(self, [self.ctx.zero()] * self.dim)

    def basis_form(self, b):
        coeffs = [self.ctx.zero()] * self.dim
        coeffs[b] = self.ctx.one()
        return Omega1(self, coeffs)

    def index(self, label):
        return self.labels.index(label)

    def e0(self):
        return self.basis_form(self.n - 1)

    def ep(self, i):
        return self.basis_form(self.n - 1 + i)

    def em(self, i):
        return self.basis_form(i - 1)

    def from_coords(self, coords):
        return Omega1(self, [self.ctx.scalar(c) for c in coords])

    def d_monomial(self, m):
        hit = self._dmono.get(m)
        if hit is None:
            acc = [dict() for _ in range(self.dim)]
            for (m1, m2), c in self.ctx.delta_monomial(m).items():
                coords = self.coset_monomial_aug(m2)
                for b, x in enumerate(coords):
                    if x:
                        _acc(acc[b], m1, c * x)
            hit = Omega1(self, [NCPoly(self.ctx, t) for t in acc])
            self._dmono[m] = hit
        return hit

    def ext_d(self, f):
        if f.ctx != self.ctx:
            raise ContextMismatchError("element from a different context")
        out = self.zero_form()
        for m, c in f.terms.items():
            out = out + self.d_monomial(m).scale(c)
        return out

    def _act_basis(self, b, m):
        """(1 ⊗ e_b) · m as an Omega1."""
        key = (b, m)
        hit = self._act.get(key)
        if hit is None:
            ctx = self.ctx
            acc = [dict() for _ in range(self.dim)]
            rep = self.reps[b]
            for (g1, g2), c in ctx.delta_monomial(m).items():
                coords = self.coords_of_Q(self.K.Q(rep * NCPoly(ctx, {g2: self.F.one})))
                for k, x in enumerate(coords):
                    if x:
                        _acc(acc[k], g1, c * x)
            hit = Omega1(self, [NCPoly(ctx, t) for t in acc])
            self._act[key] = hit
        return hit

    def right_act(self, w, g):
        if g.ctx != self.ctx:
            raise ContextMismatchError("element from a different context")
        out = self.zero_form()
        for b, f in enumerate(w.coeffs):
            if f.is_zero():
                continue
            for m, c in g.terms.items():
                out = out + self._act_basis(b, m).left_mul(f).scale(c)
        return out

    def theta(self, x):
        if counit(x):
            raise NotAugmentationError("θ needs an element with ε(x) = 0")
        out = self.zero_form()
        for (m1, m2), c in coproduct(x).terms.items():
            s = self.ctx.antipode_monomial(m1)
            out = out + self.d_monomial(m2).left_mul(s).scale(c)
        return out

    def bc_coset(self, x):
        if counit(x):
            raise NotAugmentationError("coset needs an element with ε(x) = 0")
        return self.K.Q(x)

    def rank_check(self):
        """(dim span of all N² spanning Q-images, dim of the D-part)."""
        full = [self.K.Q(x).as_vector() for x in self.reps + self.d1 + self.d2]
        dpart = [self.K.Q(x).as_vector() for x in self.d1 + self.d2]
        return rank(full), rank(dpart)


class Omega1:
    """Element of Ω¹_q(SU_N): one coefficient polynomial per basis form."""

    __slots__ = ("calc", "coeffs")

    def __init__(self, calc, coeffs):
        self.calc = calc
        self.coeffs = list(coeffs)

    def labels(self):
        return self.calc.labels

    def _check(self, other):
        if not isinstance(other, Omega1) or other.calc is not self.calc:
            raise ContextMismatchError("forms over different calculi")

    def __add__(self, other):
        self._check(other)
        return Omega1(self.calc, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return Omega1(self.calc, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Omega1(self.calc, [-a for a in self.coeffs])

    def scale(self, c):
        return Omega1(self.calc, [a.scale(c) for a in self.coeffs])

    def left_mul(self, f):
        return Omega1(self.calc, [f * a for a in self.coeffs])

    def __rmul__(self, f):
        if isinstance(f, NCPoly):
            return self.left_mul(f)
        return self.scale(f)

    def __mul__(self, g):
        """Right module action by an algebra element."""
        if isinstance(g, NCPoly):
            return self.calc.right_act(self, g)
        return self.scale(g)

    def __eq__(self, other):
        return (isinstance(other, Omega1) and other.calc is self.calc
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def is_zero(self):
        return all(a.is_zero() for a in self.coeffs)

    def block(self, which):
        """Keep only the e⁻ ('-'), e⁰ ('0') or e⁺ ('+') coefficients."""
        n = self.calc.n
        zero = self.calc.ctx.zero()
        out = []
        for b, a in enumerate(self.coeffs):
            kind = "-" if b < n - 1 else ("0" if b == n - 1 else "+")
            out.append(a if kind in which else zero)
        return Omega1(self.calc, out)

    def coefficient(self, label):
        return self.coeffs[self.calc.index(label)]

    def __repr__(self):
        from .printing import format_form
        return f"Omega1({format_form(self)})"

    def __str__(self):
        from .printing import format_form
        return format_form(self)


_CALC = {}


def calculus(ctx):
    c = _CALC.get(ctx.key)
    if c is None:
        c = CalculusContext(ctx)
        _CALC[ctx.key] = c
    return c


def coset(x):
    return calculus(x.ctx).coset(x)


def bc_coset(x):
    return calculus(x.ctx).bc_coset(x)


def ext_d(f):
    return calculus(f.ctx).ext_d(f)


def right_act(w, g):
    return w.calc.right_act(w, g)


def theta(x):
    return calculus(x.ctx).theta(x)
