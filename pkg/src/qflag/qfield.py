"""Exact arithmetic in Q(q^{1/N}).

Elements are reduced fractions of Laurent polynomials in a formal variable
``s`` with ``s**N == q``.  A Laurent polynomial is stored as a tuple of
``(exponent, coefficient)`` pairs sorted by exponent, coefficients being
``int`` or ``Fraction`` and never zero.

Canonical form: the denominator has lowest exponent 0 and leading
coefficient 1, and is coprime to the numerator.  Equality of two scalars is
therefore structural equality.  Most values that occur in practice have
denominator 1 and take a fast path that never computes a gcd.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, IncompatibleRootError

ONE_POLY = ((0, 1),)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# -- Laurent polynomial helpers (tuples of (exp, coeff)) ---------------------

def lp_add(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for e, c in b:
        v = d.get(e, 0) + c
        if v:
            d[e] = v
        else:
            del d[e]
    return tuple(sorted((e, _norm_coeff(c)) for e, c in d.items()))


def lp_neg(a):
    return tuple((e, -c) for e, c in a)


def lp_scale(a, k):
    if not k:
        return ()
    return tuple((e, _norm_coeff(c * k)) for e, c in a)


def lp_shift(a, k):
    return tuple((e + k, c) for e, c in a)


def lp_mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        (ea, ca), = a
        return tuple((ea + e, _norm_coeff(ca * c)) for e, c in b)
    if len(b) == 1:
        (eb, cb), = b
        return tuple((e + eb, _norm_coeff(c * cb)) for e, c in a)
    d = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            d[e] = d.get(e, 0) + ca * cb
    return tuple(sorted((e, _norm_coeff(c)) for e, c in d.items() if c))


def _to_dense(a):
    """Laurent tuple -> (shift, dense coefficient list starting at shift)."""
    lo = a[0][0]
    out = [0] * (a[-1][0] - lo + 1)
    for e, c in a:
        out[e - lo] = c
    return lo, out


def _from_dense(lo, coeffs):
    return tuple((lo + i, _norm_coeff(c)) for i, c in enumerate(coeffs) if c)


def _dense_divmod(num, den):
    num = [Fraction(c) for c in num]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lc = Fraction(den[-1])
    while len(num) >= len(den) and any(num):
        k = len(num) - len(den)
        f = num[-1] / lc
        q[k] = f
        for i, c in enumerate(den):
            num[k + i] -= f * c
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _dense_gcd(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and any(b):
        _, r = _dense_divmod(a, b)
        a, b = b, r
    lc = a[-1]
    return [c / lc for c in a]


def _content_denominator(poly):
    lcm = 1
    for _, c in poly:
        if isinstance(c, Fraction):
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return lcm


class QScalar:
    """Immutable element of Q(s), s = q^(1/root)."""

    __slots__ = ("num", "den", "root", "_hash")

    def __init__(self, num=(), den=ONE_POLY, root=1, _canonical=False):
        if not _canonical:
            num, den = _canonicalize(tuple(num), tuple(den))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, num, den, root):
        return cls(num, den, root, _canonical=True)

    @classmethod
    def from_int(cls, k, root):
        k = _norm_coeff(Fraction(k)) if isinstance(k, Fraction) else k
        return cls._raw(((0, k),) if k else (), ONE_POLY, root)

    @classmethod
    def monomial(cls, coeff, exp, root):
        coeff = _norm_coeff(coeff)
        return cls._raw(((exp, coeff),) if coeff else (), ONE_POLY, root)

    @classmethod
    def from_laurent(cls, terms, root):
        """Build from a mapping ``{s_exponent: rational}``."""
        items = tuple(sorted((e, _norm_coeff(c)) for e, c in dict(terms).items() if c))
        return cls._raw(items, ONE_POLY, root)

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QScalar):
            if other.root != self.root:
                raise IncompatibleRootError(
                    f"root orders differ: {self.root} vs {other.root}")
            return other
        if isinstance(other, (int, Fraction)):
            return QScalar.from_int(other, self.root)
        return None

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        return self.den == ONE_POLY

    def is_one(self):
        return self.num == ONE_POLY and self.den == ONE_POLY

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return QScalar._raw(lp_add(self.num, other.num), ONE_POLY, self.root)
        if self.den == other.den:
            return QScalar(lp_add(self.num, other.num), self.den, self.root)
        num = lp_add(lp_mul(self.num, other.den), lp_mul(other.num, self.den))
        return QScalar(num, lp_mul(self.den, other.den), self.root)

    __radd__ = __add__

    def __neg__(self):
        return QScalar._raw(lp_neg(self.num), self.den, self.root)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == ONE_POLY and other.den == ONE_POLY:
            return QScalar._raw(lp_mul(self.num, other.num), ONE_POLY, self.root)
        return QScalar(lp_mul(self.num, other.num), lp_mul(self.den, other.den),
                       self.root)

    __rmul__ = __mul__

    def invert(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        if len(self.num) == 1 and self.den == ONE_POLY:
            (e, c), = self.num
            return QScalar.monomial(Fraction(1) / c, -e, self.root)
        return QScalar(self.den, self.num, self.root)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        out = QScalar.from_int(1, self.root)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QScalar):
            return (self.root == other.root and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (int, Fraction)):
            return self.den == ONE_POLY and self.num == (((0, _norm_coeff(other)),) if other else ())
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den, self.root))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from .printing import format_scalar
        return f"QScalar({format_scalar(self)!r}, root={self.root})"

    def __str__(self):
        from .printing import format_scalar
        return format_scalar(self)

    # -- debugging hook (no contract) --------------------------------------

    def eval_at(self, s_value):
        """Evaluate at a rational value of s; debugging aid only."""
        s_value = Fraction(s_value)

        def ev(p):
            return sum((Fraction(c) * s_value ** e for e, c in p), Fraction(0))

        return ev(self.num) / ev(self.den)


def _canonicalize(num, den):
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return (), ONE_POLY
    if den == ONE_POLY:
        return num, den
    # move the s-power content of the denominator into the numerator
    lo = den[0][0]
    if lo:
        den = lp_shift(den, -lo)
        num = lp_shift(num, -lo)
    if len(den) > 1:
        nlo, ndense = _to_dense(num)
        _, ddense = _to_dense(den)
        g = _dense_gcd(ndense, ddense)
        if len(g) > 1:
            ndense, _ = _dense_divmod(ndense, g)
            ddense, _ = _dense_divmod(ddense, g)
            num = _from_dense(nlo, ndense)
            den = _from_dense(0, ddense)
    lc = Fraction(den[-1][1])
    if lc != 1:
        num = lp_scale(num, 1 / lc)
        den = lp_scale(den, 1 / lc)
    return num, den


# -- public operations ------------------------------------------------------

def q_power(num, den, root):
    """q^(num/den) as a monomial in s = q^(1/root); den must divide root."""
    if den <= 0 or root % den:
        raise IncompatibleRootError(
            f"q^({num}/{den}) is not in Q(q^(1/{root}))")
    return QScalar.monomial(1, num * (root // den), root)


def field_arith(op, a, b):
    if not isinstance(a, QScalar) or not isinstance(b, QScalar):
        raise TypeError("field_arith expects QScalar operands")
    if a.root != b.root:
        raise IncompatibleRootError(f"root orders differ: {a.root} vs {b.root}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def field_invert(a):
    return a.invert()


def canonicalize(x):
    """Return the canonical representative (idempotent)."""
    return QScalar(x.num, x.den, x.root)


def nu(root):
    """q - q^-1."""
    return QScalar.from_laurent({root: 1, -root: -1}, root)


class Field:
    """Convenience handle on Q(q^(1/root)) for one session."""

    def __init__(self, root):
        if root < 1:
            raise ValueError("root order must be positive")
        self.root = root
        self.zero = QScalar.from_int(0, root)
        self.one = QScalar.from_int(1, root)
        self.q = q_power(1, 1, root)
        self.nu = nu(root)

    def __call__(self, k):
        if isinstance(k, QScalar):
            if k.root != self.root:
                raise IncompatibleRootError(f"root orders differ: {self.root} vs {k.root}")
            return k
        return QScalar.from_int(k, self.root)

    def qp(self, num, den=1):
        return q_power(num, den, self.root)

    def s(self, exp):
        return QScalar.monomial(1, exp, self.root)

    def __eq__(self, other):
        return isinstance(other, Field) and other.root == self.root

    def __hash__(self):
        return hash(("Field", self.root))

    def __repr__(self):
        return f"Field(root={self.root})"
