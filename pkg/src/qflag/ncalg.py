"""The algebras C_q[M_N], C_q[U_N], C_q[SU_N] with normal forms and Hopf maps.

Generators u^i_j are encoded as integers g = (i-1)*size + (j-1), so the
integer order is the row-major order on index pairs.  A monomial is a pair
``(detpow, word)`` where ``word`` is a nondecreasing tuple of generators and
``detpow`` is an integer power of det (always 0 outside U contexts).

Normal forms
------------
* M: sorted words (PBW basis).  Products are normalised by inserting one
  generator at a time and applying the swap rules derived from the
  R-matrix relations.
* SU: sorted words not containing the full diagonal u11 u22 ... uNN as a
  sub-multiset.  A word w containing it is rewritten through
  det * w' = c w + (terms of lower weight), where w' is w with one copy of
  the diagonal removed, c is a power of q and the weight of a word is
  sum(i*j).  This uses that the diagonal term is the unique weight-maximal
  term of det.
* U: det^n * (SU-standard word), n any integer, obtained by the same
  reduction with det kept as a central power instead of being set to 1.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import ContextMismatchError, InvalidElementError, BoundError
from .linalg import Echelon, rref
from .qfield import Field, QScalar

MATRIX = "MatrixBialgebra"
UNITARY = "UnitaryGroup"
SPECIAL = "SpecialUnitaryGroup"
KINDS = (MATRIX, UNITARY, SPECIAL)

EMPTY = (0, ())


def perm_length(p):
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def _acc(d, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


_REGISTRY = {}


def get_algebra(kind, size, root):
    """Return the shared context for (kind, size, root)."""
    key = (kind, size, root)
    alg = _REGISTRY.get(key)
    if alg is None:
        alg = Algebra(kind, size, root)
        _REGISTRY[key] = alg
    return alg


def su(n, root=None):
    return get_algebra(SPECIAL, n, n if root is None else root)


def um(m, root):
    return get_algebra(UNITARY, m, root)


def mat(n, root=None):
    return get_algebra(MATRIX, n, n if root is None else root)


class RuleTable:
    """Swap rules and (for SU/U) the diagonal reduction data."""

    def __init__(self, context, swap_rules, det_word=None, det_coeff=None):
        self.context = context
        self.swap_rules = swap_rules
        self.det_word = det_word
        self.det_coeff = det_coeff

    def __repr__(self):
        return (f"RuleTable({self.context!r}, {len(self.swap_rules)} swap rules, "
                f"det_word={self.det_word})")


class Algebra:
    """An AlgebraSpec together with its memo tables.

    Use :func:`get_algebra` so that contexts, and their caches, are shared.
    """

    def __init__(self, kind, size, root):
        if kind not in KINDS:
            raise ValueError(f"unknown algebra kind {kind!r}")
        if size < 1:
            raise ValueError("algebra size must be at least 1")
        self.kind = kind
        self.size = size
        self.root = root
        self.F = Field(root)
        self.ngens = size * size
        self.diag = tuple(self.gen(k, k) for k in range(1, size + 1))
        self._base = None if kind == MATRIX else get_algebra(MATRIX, size, root)
        # M-level caches (only used on MATRIX contexts)
        self._rules = None
        self._wg = {}
        self._ww = {}
        self._delta_m = {}
        self._det_cache = None
        # context caches
        self._reduce = {}
        self._delta = {}
        self._antipode = {}
        self._s_gen = None

    # -- identity ---------------------------------------------------------

    @property
    def key(self):
        return (self.kind, self.size, self.root)

    def __eq__(self, other):
        return isinstance(other, Algebra) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        short = {MATRIX: "M", UNITARY: "U", SPECIAL: "SU"}[self.kind]
        return f"C_q[{short}_{self.size}](root={self.root})"

    @property
    def base(self):
        return self if self.kind == MATRIX else self._base

    # -- generators ---------------------------------------------------------

    def gen(self, i, j):
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise InvalidElementError(f"u[{i},{j}] out of range for size {self.size}")
        return (i - 1) * self.size + (j - 1)

    def gen_pair(self, g):
        return divmod(g, self.size)[0] + 1, g % self.size + 1

    def weight(self, word):
        s = 0
        for g in word:
            i, j = self.gen_pair(g)
            s += i * j
        return s

    # -- element constructors ---------------------------------------------

    def zero(self):
        return NCPoly(self, {})

    def one(self):
        return NCPoly(self, {EMPTY: self.F.one})

    def scalar(self, c):
        c = self.F(c)
        return NCPoly(self, {EMPTY: c} if c else {})

    def u(self, i, j):
        return self.from_free({(0, (self.gen(i, j),)): self.F.one})

    def detinv(self):
        if self.kind != UNITARY:
            raise InvalidElementError("detinv only exists in U contexts")
        return NCPoly(self, {(-1, ()): self.F.one})

    def det_power(self, n):
        if n == 0:
            return self.one()
        if self.kind == UNITARY:
            return NCPoly(self, {(n, ()): self.F.one})
        if self.kind == SPECIAL:
            return self.one()
        if n < 0:
            raise InvalidElementError("det is not invertible in C_q[M_N]")
        return quantum_determinant(self) ** n

    def from_free(self, terms):
        """Normal form of a combination of arbitrary (detpow, word) monomials."""
        out = {}
        for (dp, word), c in terms.items():
            if not c:
                continue
            if dp and self.kind != UNITARY:
                if self.kind == SPECIAL:
                    dp = 0
                else:
                    raise InvalidElementError("det powers need a U context")
            for w, c1 in self.base._nf_free_word(tuple(word)).items():
                for (dp2, w2), c2 in self._reduce_word(w).items():
                    _acc(out, (dp + dp2, w2), c * c1 * c2)
        return NCPoly(self, out)

    # -- M-level rewriting ------------------------------------------------

    def rules(self):
        if self.kind != MATRIX:
            return self.base.rules()
        if self._rules is None:
            self._rules = _derive_swap_rules(self)
        return self._rules

    def _mul_word_gen(self, w, x):
        key = (w, x)
        hit = self._wg.get(key)
        if hit is not None:
            return hit
        if not w or w[-1] <= x:
            res = {w + (x,): self.F.one}
        else:
            res = {}
            pre = w[:-1]
            for (a, b), c in self.rules()[(w[-1], x)]:
                for w1, c1 in self._mul_word_gen(pre, a).items():
                    for w2, c2 in self._mul_word_gen(w1, b).items():
                        _acc(res, w2, c * c1 * c2)
        self._wg[key] = res
        return res

    def _mul_words(self, w1, w2):
        if not w2:
            return {w1: self.F.one}
        if len(w2) == 1:
            return self._mul_word_gen(w1, w2[0])
        key = (w1, w2)
        hit = self._ww.get(key)
        if hit is not None:
            return hit
        cur = {w1: self.F.one}
        for x in w2:
            nxt = {}
            for w, c in cur.items():
                for w3, c3 in self._mul_word_gen(w, x).items():
                    _acc(nxt, w3, c * c3)
            cur = nxt
        self._ww[key] = cur
        return cur

    def _nf_free_word(self, letters):
        """M-level normal form of an arbitrary word (tuple of generators)."""
        if all(letters[k] <= letters[k + 1] for k in range(len(letters) - 1)):
            return {letters: self.F.one}
        return self._mul_words((), letters)

    def _det_m(self):
        base = self.base
        if base._det_cache is None:
            n = self.size
            F = self.F
            out = {}
            for p in itertools.permutations(range(1, n + 1)):
                c = (-F.q) ** perm_length(p)
                word = tuple(base.gen(i + 1, p[i]) for i in range(n))
                for w, c1 in base._nf_free_word(word).items():
                    _acc(out, w, c * c1)
            base._det_cache = out
        return base._det_cache

    # -- context reduction (det handling) -------------------------------

    def _contains_diag(self, word):
        it = iter(word)
        # word is sorted and so is self.diag; subsequence test on multisets
        return all(any(g == d for g in it) for d in self.diag)

    def _remove_diag(self, word):
        rest = list(word)
        for d in self.diag:
            rest.remove(d)
        return tuple(rest)

    def _reduce_word(self, w):
        """Sorted word -> {(detpow, standard word): coeff} in this context."""
        if self.kind == MATRIX:
            return {(0, w): self.F.one}
        hit = self._reduce.get(w)
        if hit is not None:
            return hit
        if not self._contains_diag(w):
            res = {(0, w): self.F.one}
        else:
            base = self.base
            w1 = self._remove_diag(w)
            prod = {}
            for v, c in self._det_m().items():
                for v2, c2 in base._mul_words(v, w1).items():
                    _acc(prod, v2, c * c2)
            lead = prod.pop(w)
            inv = lead.invert()
            res = {}
            shift = 1 if self.kind == UNITARY else 0
            for (dp, v), c in self._reduce_word(w1).items():
                _acc(res, (dp + shift, v), c * inv)
            for v, c in prod.items():
                for mon, c2 in self._reduce_word(v).items():
                    _acc(res, mon, -c * c2 * inv)
        self._reduce[w] = res
        return res

    def mul_monomials(self, m1, m2):
        (d1, w1), (d2, w2) = m1, m2
        out = {}
        for w, c in self.base._mul_words(w1, w2).items():
            for (dp, v), c2 in self._reduce_word(w).items():
                _acc(out, (d1 + d2 + dp, v), c * c2)
        return out

    # -- Hopf structure on monomials -------------------------------------

    def _delta_word_m(self, w):
        base = self.base
        hit = base._delta_m.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {((), ()): self.F.one}
        else:
            res = {}
            i, j = self.gen_pair(w[-1])
            for (l, r), c in self._delta_word_m(w[:-1]).items():
                for k in range(1, self.size + 1):
                    for l2, c1 in base._mul_word_gen(l, base.gen(i, k)).items():
                        for r2, c2 in base._mul_word_gen(r, base.gen(k, j)).items():
                            _acc(res, (l2, r2), c * c1 * c2)
        base._delta_m[w] = res
        return res

    def delta_monomial(self, mon):
        hit = self._delta.get(mon)
        if hit is not None:
            return hit
        dp, w = mon
        res = {}
        for (l, r), c in self._delta_word_m(w).items():
            for (dl, lw), cl in self._reduce_word(l).items():
                for (dr, rw), cr in self._reduce_word(r).items():
                    _acc(res, ((dp + dl, lw), (dp + dr, rw)), c * cl * cr)
        self._delta[mon] = res
        return res

    def counit_monomial(self, mon):
        return self.F.one if all(g in self.diag for g in mon[1]) else self.F.zero

    def antipode_gen(self, g):
        if self.kind == MATRIX:
            raise InvalidElementError("C_q[M_N] has no antipode")
        if self._s_gen is None:
            self._s_gen = [_antipode_generator(self, *self.gen_pair(h))
                           for h in range(self.ngens)]
        return self._s_gen[g]

    def antipode_monomial(self, mon):
        hit = self._antipode.get(mon)
        if hit is not None:
            return hit
        dp, w = mon
        res = self.det_power(-dp) if self.kind == UNITARY else self.one()
        for g in reversed(w):
            res = res * self.antipode_gen(g)
        self._antipode[mon] = res
        return res

    # -- misc -------------------------------------------------------------

    def standard_words(self, degree):
        """Sorted words of exactly this degree that are in normal form here."""
        for w in itertools.combinations_with_replacement(range(self.ngens), degree):
            if self.kind == MATRIX or not self._contains_diag(w):
                yield w

    def random_poly(self, rng, degree=2, nterms=3, max_coeff=3):
        """Random element given as free words (then normalised)."""
        terms = {}
        for _ in range(nterms):
            d = rng.randint(0, degree)
            word = tuple(rng.randrange(self.ngens) for _ in range(d))
            c = self.F.s(rng.randint(-2, 2)) * rng.choice(
                [k for k in range(-max_coeff, max_coeff + 1) if k])
            dp = rng.randint(-1, 1) if self.kind == UNITARY else 0
            _acc(terms, (dp, word), c)
        return self.from_free(terms)

    def random_free_terms(self, rng, degree=2, nterms=3):
        terms = {}
        for _ in range(nterms):
            d = rng.randint(0, degree)
            word = tuple(rng.randrange(self.ngens) for _ in range(d))
            c = self.F.s(rng.randint(-2, 2)) * rng.choice([-2, -1, 1, 2, 3])
            _acc(terms, (0, word), c)
        return terms


# ---------------------------------------------------------------------------
# rule derivation

def r_matrix_entry(F, i, k, j, l):
    """R^{ik}_{jl} with the convention H(0) = 0."""
    v = F.zero
    if i == l and k == j:
        v = F.q if i == k else F.one
    if i == j and k == l and k > i:
        v = v + F.nu
    return v


def r_bar_entry(F, i, k, j, l):
    v = F.zero
    if i == l and k == j:
        v = F.q.invert() if i == k else F.one
    if i == j and k == l and k > i:
        v = v - F.nu
    return v


def relation_vectors(alg):
    """The degree-two defining relations as dicts over (unsorted) words."""
    n, F = alg.size, alg.F
    rng = range(1, n + 1)
    out = []
    for a, b, c, d in itertools.product(rng, repeat=4):
        vec = {}
        for w in rng:
            for x in rng:
                coef = r_matrix_entry(F, a, c, w, x)
                if coef:
                    _acc(vec, (alg.gen(w, b), alg.gen(x, d)), coef)
        for y in rng:
            for z in rng:
                coef = r_matrix_entry(F, y, z, b, d)
                if coef:
                    _acc(vec, (alg.gen(a, y), alg.gen(c, z)), -coef)
        if vec:
            out.append(vec)
    return out


def _derive_swap_rules(alg):
    from .errors import InternalInvariantError

    def order(word):
        # out-of-order pairs first (largest first), then sorted pairs
        return (0 if word[0] > word[1] else 1, tuple(-g for g in word))

    reduced = rref(relation_vectors(alg), order=order)
    ngen = alg.ngens
    expected = {(x, y) for x in range(ngen) for y in range(ngen) if x > y}
    pivots = {col for col, _ in reduced}
    if pivots != expected:
        raise InternalInvariantError("relations do not determine one rule per unordered pair")
    rules = {}
    for col, row in reduced:
        rhs = []
        for word, c in row.items():
            if word == col:
                continue
            if word[0] > word[1]:
                raise InternalInvariantError("swap rule is not reduced")
            rhs.append((word, -c))
        rhs.sort()
        rules[col] = tuple(rhs)
    return rules


def derive_rewrite_rules(context):
    rules = context.rules()
    if context.kind == MATRIX:
        return RuleTable(context, rules)
    det = context._det_m()
    return RuleTable(context, rules, det_word=context.diag, det_coeff=det[context.diag])


# ---------------------------------------------------------------------------
# polynomials

class NCPoly:
    """Element of an algebra context, always stored in normal form."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms

    def _check(self, other):
        if isinstance(other, NCPoly):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, (int, Fraction, QScalar)):
            return self.ctx.scalar(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return NCPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, k):
        k = self.ctx.F(k)
        if not k:
            return self.ctx.zero()
        return NCPoly(self.ctx, {m: c * k for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        ctx = self.ctx
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, c3 in ctx.mul_monomials(m1, m2).items():
                    _acc(out, m, c * c3)
        return NCPoly(ctx, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction, QScalar)):
            return self.terms == self.ctx.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for _, w in self.terms), default=0)

    def constant_term(self):
        return self.terms.get(EMPTY, self.ctx.F.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0], len(t[0][1]), t[0][1]))

    def __repr__(self):
        from .printing import format_poly
        return f"NCPoly({format_poly(self)})"

    def __str__(self):
        from .printing import format_poly
        return format_poly(self)


class TensorPoly:
    """Element of A ⊗ B for two contexts, legs in normal form."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left, right, terms):
        self.left = left
        self.right = right
        self.terms = terms

    @classmethod
    def simple(cls, f, g):
        out = {}
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                _acc(out, (m1, m2), c1 * c2)
        return cls(f.ctx, g.ctx, out)

    def __add__(self, other):
        if (other.left, other.right) != (self.left, self.right):
            raise ContextMismatchError("tensor contexts differ")
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorPoly(self.left, self.right, out)

    def __neg__(self):
        return TensorPoly(self.left, self.right, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return TensorPoly(self.left, self.right,
                          {m: c * k for m, c in self.terms.items()} if k else {})

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (self.left, self.right, self.terms) == (other.left, other.right, other.terms)

    def __hash__(self):
        return hash((self.left, self.right, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def map_legs(self, fl=None, fr=None, left=None, right=None):
        """Apply monomial maps (monomial -> NCPoly) to either leg."""
        left = left or self.left
        right = right or self.right
        out = {}
        for (m1, m2), c in self.terms.items():
            p1 = fl(m1) if fl else NCPoly(self.left, {m1: self.left.F.one})
            p2 = fr(m2) if fr else NCPoly(self.right, {m2: self.right.F.one})
            for a, ca in p1.terms.items():
                for b, cb in p2.terms.items():
                    _acc(out, (a, b), c * ca * cb)
        return TensorPoly(left, right, out)

    def mul(self, other):
        """Product in the tensor product algebra."""
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                for a, ca in self.left.mul_monomials(a1, a2).items():
                    for b, cb in self.right.mul_monomials(b1, b2).items():
                        _acc(out, (a, b), c1 * c2 * ca * cb)
        return TensorPoly(self.left, self.right, out)

    def contract(self):
        """m: A ⊗ A -> A."""
        if self.left != self.right:
            raise ContextMismatchError("cannot multiply legs of different algebras")
        out = {}
        for (a, b), c in self.terms.items():
            for m, c2 in self.left.mul_monomials(a, b).items():
                _acc(out, m, c * c2)
        return NCPoly(self.left, out)

    def right_coefficients(self):
        """Group as {right monomial: left NCPoly}."""
        groups = {}
        for (a, b), c in self.terms.items():
            groups.setdefault(b, {})[a] = c
        return {b: NCPoly(self.left, t) for b, t in groups.items()}

    def left_coefficients(self):
        groups = {}
        for (a, b), c in self.terms.items():
            groups.setdefault(a, {})[b] = c
        return {a: NCPoly(self.right, t) for a, t in groups.items()}

    def __repr__(self):
        from .printing import format_tensor
        return f"TensorPoly({format_tensor(self)})"


def mono(ctx, m):
    return NCPoly(ctx, {m: ctx.F.one})


# ---------------------------------------------------------------------------
# public operations

def normal_form(f):
    return f.ctx.from_free(f.terms)


def multiply(f, g):
    if f.ctx != g.ctx:
        raise ContextMismatchError(f"{f.ctx!r} vs {g.ctx!r}")
    return f * g


def equals(f, g):
    if f.ctx != g.ctx:
        raise ContextMismatchError(f"{f.ctx!r} vs {g.ctx!r}")
    return normal_form(f).terms == normal_form(g).terms


def quantum_determinant(ctx):
    if ctx.kind == SPECIAL:
        return ctx.one()
    terms = {(0, w): c for w, c in ctx._det_m().items()}
    return ctx.from_free(terms)


def counit(f):
    ctx = f.ctx
    total = ctx.F.zero
    for m, c in f.terms.items():
        if ctx.counit_monomial(m):
            total = total + c
    return total


def coproduct(f):
    ctx = f.ctx
    out = {}
    for m, c in f.terms.items():
        for k, c2 in ctx.delta_monomial(m).items():
            _acc(out, k, c * c2)
    return TensorPoly(ctx, ctx, out)


def antipode(f):
    ctx = f.ctx
    out = ctx.zero()
    for m, c in f.terms.items():
        out = out + ctx.antipode_monomial(m).scale(c)
    return out


def _antipode_generator(ctx, i, j):
    """S(u^i_j) = det^-1 (u^j_i)^*, the quantum cofactor."""
    n, F = ctx.size, ctx.F
    rows = [k for k in range(1, n + 1) if k != j]
    cols = [l for l in range(1, n + 1) if l != i]
    pref = (-F.q) ** (i - j)
    terms = {}
    dp = -1 if ctx.kind == UNITARY else 0
    for p in itertools.permutations(range(n - 1)):
        word = tuple(ctx.gen(rows[a], cols[p[a]]) for a in range(n - 1))
        _acc(terms, (dp, word), pref * (-F.q) ** perm_length(p))
    return ctx.from_free(terms)


def coproduct_free(ctx, terms):
    """Δ of a combination of free words, computed letter by letter."""
    out = {}
    for (dp, word), c in terms.items():
        res = {(((dp, ()), (dp, ()))): c}
        for g in word:
            i, j = ctx.gen_pair(g)
            nxt = {}
            for (l, r), c1 in res.items():
                for k in range(1, ctx.size + 1):
                    for ml, cl in ctx.mul_monomials(l, (0, (ctx.gen(i, k),))).items():
                        for mr, cr in ctx.mul_monomials(r, (0, (ctx.gen(k, j),))).items():
                            _acc(nxt, (ml, mr), c1 * cl * cr)
            res = nxt
        for k, v in res.items():
            _acc(out, k, v)
    return TensorPoly(ctx, ctx, out)


def counit_free(ctx, terms):
    total = ctx.F.zero
    for (dp, word), c in terms.items():
        if all(g in ctx.diag for g in word):
            total = total + c
    return total


def tensor_counit_left(t):
    """(ε ⊗ id)(t)."""
    out = {}
    for (a, b), c in t.terms.items():
        e = t.left.counit_monomial(a)
        if e:
            _acc(out, b, c * e)
    return NCPoly(t.right, out)


def tensor_counit_right(t):
    out = {}
    for (a, b), c in t.terms.items():
        e = t.right.counit_monomial(b)
        if e:
            _acc(out, a, c * e)
    return NCPoly(t.left, out)


def delta_left(t):
    """(Δ ⊗ id) t, as a dict {(m1, m2, m3): c}."""
    out = {}
    ctx = t.left
    for (a, b), c in t.terms.items():
        for (x, y), c2 in ctx.delta_monomial(a).items():
            _acc(out, (x, y, b), c * c2)
    return out


def delta_right(t):
    out = {}
    ctx = t.right
    for (a, b), c in t.terms.items():
        for (x, y), c2 in ctx.delta_monomial(b).items():
            _acc(out, (a, x, y), c * c2)
    return out


# ---------------------------------------------------------------------------
# degree-bounded ideal membership oracle

_ORACLE_CACHE = {}


def _oracle_echelon(ctx, bound):
    key = (ctx.key, bound)
    ech = _ORACLE_CACHE.get(key)
    if ech is not None:
        return ech
    n = ctx.size
    det = ctx._det_m()
    det_minus_one = dict(det)
    _acc(det_minus_one, (), -ctx.F.one)
    ech = Echelon(order=lambda w: (-len(w), tuple(-g for g in w)))
    top = bound - n
    # m1 (det - 1) m2 with m1, m2 PBW words; det is central so m1 m2 suffices
    for d in range(0, top + 1):
        for m in ctx.standard_words(d):
            vec = {}
            for v, c in det_minus_one.items():
                for w, c2 in ctx._mul_words(v, m).items():
                    _acc(vec, w, c * c2)
            ech.add(vec)
    _ORACLE_CACHE[key] = ech
    return ech


def oracle_ideal_membership(f, degree_bound):
    """Bounded test for f ∈ <det - 1> inside C_q[M_N]."""
    ctx = f.ctx
    if ctx.kind != MATRIX:
        raise InvalidElementError("the oracle works in C_q[M_N]")
    if degree_bound < f.degree():
        raise BoundError(f"bound {degree_bound} is below deg f = {f.degree()}")
    vec = {w: c for (_, w), c in f.terms.items()}
    return _oracle_echelon(ctx, degree_bound).contains(vec)


# ---------------------------------------------------------------------------
# alternative rewriting strategy (used by the confluence self-test)

def rewrite_free(ctx, terms, strategy="leftmost"):
    """Normal form by repeatedly rewriting one adjacent out-of-order pair.

    This deliberately does not share code with the insertion algorithm used
    by :meth:`Algebra.from_free`.
    """
    base = ctx.base
    rules = base.rules()
    pending = {}
    for (dp, w), c in terms.items():
        _acc(pending, (dp, tuple(w)), c)
    done = {}
    while pending:
        (dp, word), c = pending.popitem()
        pos = None
        rng = range(len(word) - 1)
        if strategy == "rightmost":
            rng = reversed(rng)
        for k in rng:
            if word[k] > word[k + 1]:
                pos = k
                break
        if pos is None:
            _acc(done, (dp, word), c)
            continue
        for (a, b), c2 in rules[(word[pos], word[pos + 1])]:
            _acc(pending, (dp, word[:pos] + (a, b) + word[pos + 2:]), c * c2)
    out = {}
    for (dp, w), c in done.items():
        if dp and ctx.kind == SPECIAL:
            dp = 0
        for (dp2, v), c2 in _reduce_by_det_search(ctx, w, strategy).items():
            _acc(out, (dp + dp2, v), c * c2)
    return NCPoly(ctx, out)


_DET_SEARCH = {}


def _reduce_by_det_search(ctx, word, strategy):
    """Diagonal reduction through free-word rewriting of det * w'."""
    one = ctx.F.one
    if ctx.kind == MATRIX or not ctx._contains_diag(word):
        return {(0, word): one}
    key = (ctx.key, word, strategy)
    hit = _DET_SEARCH.get(key)
    if hit is not None:
        return hit
    n = ctx.size
    rest = ctx._remove_diag(word)
    free = {}
    for p in itertools.permutations(range(1, n + 1)):
        letters = tuple(ctx.gen(i + 1, p[i]) for i in range(n)) + rest
        _acc(free, (0, letters), (-ctx.F.q) ** perm_length(p))
    prod = rewrite_free(ctx.base, free, strategy).terms
    lead = prod.pop((0, word))
    inv = lead.invert()
    shift = 1 if ctx.kind == UNITARY else 0
    res = {}
    for (dp, v), c in _reduce_by_det_search(ctx, rest, strategy).items():
        _acc(res, (dp + shift, v), c * inv)
    for (_, v), c in prod.items():
        for mon, c2 in _reduce_by_det_search(ctx, v, strategy).items():
            _acc(res, mon, -c * c2 * inv)
    _DET_SEARCH[key] = res
    return res


def sample_rng(seed):
    return random.Random(seed)
