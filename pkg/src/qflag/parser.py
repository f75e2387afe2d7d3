"""Parser for algebra and one-form expressions.

Grammar (products are left associative, juxtaposition means ``*``)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (['*' | '/'] factor)*
    factor  := atom ['^' exponent]
    atom    := number | 'q' | 'u[i,j]' | 'det' | 'detinv' | 't'
             | 'z[i]' | 'zs[i]' | 'zz[i,j]' | 'S(' expr ')' | '(' expr ')'
             | 'e0' | 'ep[i]' | 'em[i]' | 'a' | 'b' | 'c' | 'd'
    exponent:= ['-'] integer | '(' rational sum ')'

The letters a, b, c, d stand for u[1,1], u[1,2], u[2,1], u[2,2] and are only
accepted when N = 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (IncompatibleRootError, IndexRangeError, InvalidElementError, ParseError,
                     UnknownIdentifierError)
from .ncalg import SPECIAL, UNITARY, NCPoly, antipode, get_algebra
from .qfield import QScalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)

LETTERS = {"a": (1, 1), "b": (1, 2), "c": (2, 1), "d": (2, 2)}
INDEXED = {"u": 2, "z": 1, "zs": 1, "zz": 2, "ep": 1, "em": 1}
PLAIN = {"q", "det", "detinv", "t", "e0", "S"}


@dataclass(frozen=True)
class Node:
    kind: str
    args: tuple
    pos: int


class Session:
    """The algebra context expressions are evaluated in."""

    def __init__(self, n, kind=SPECIAL, root=None):
        self.n = n
        self.ctx = get_algebra(kind, n, root or n)

    @property
    def root(self):
        return self.ctx.root


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("id", m.group(2), start))
        elif m.group(3):
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, pos=None, cls=ParseError):
        raise cls(msg, self.text, self.peek()[2] if pos is None else pos)

    def expect(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            self.fail(f"expected {op!r}", pos)
        return pos

    def at_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            self.fail(f"unexpected {val!r}", pos)
        return node

    def expr(self):
        pos = self.peek()[2]
        if self.at_op("-"):
            self.next()
            node = Node("neg", (self.term(),), pos)
        else:
            node = self.term()
        while self.at_op("+", "-"):
            _, op, p = self.next()
            node = Node("add" if op == "+" else "sub", (node, self.term()), p)
        return node

    def _starts_atom(self):
        kind, val, _ = self.peek()
        if kind in ("num", "id"):
            return True
        return kind == "op" and val == "("

    def term(self):
        node = self.factor()
        while True:
            if self.at_op("*", "/"):
                _, op, p = self.next()
                node = Node("mul" if op == "*" else "div", (node, self.factor()), p)
            elif self._starts_atom():
                p = self.peek()[2]
                node = Node("mul", (node, self.factor()), p)
            else:
                return node

    def factor(self):
        node = self.atom()
        if self.at_op("^"):
            p = self.next()[2]
            node = Node("pow", (node, self.exponent()), p)
        return node

    def exponent(self):
        if self.at_op("("):
            self.next()
            val = self._rational_sum()
            self.expect(")")
            return val
        sign = 1
        if self.at_op("-"):
            self.next()
            sign = -1
        kind, val, pos = self.next()
        if kind != "num":
            self.fail("expected an exponent", pos)
        return Fraction(sign * val)

    def _rational(self):
        kind, val, pos = self.next()
        if kind != "num":
            self.fail("expected a number", pos)
        r = Fraction(val)
        if self.at_op("/"):
            self.next()
            kind, den, pos = self.next()
            if kind != "num" or den == 0:
                self.fail("expected a nonzero denominator", pos)
            r /= den
        return r

    def _rational_sum(self):
        sign = 1
        if self.at_op("-"):
            self.next()
            sign = -1
        total = sign * self._rational()
        while self.at_op("+", "-"):
            op = self.next()[1]
            r = self._rational()
            total += r if op == "+" else -r
        return total

    def indices(self, name, count, pos):
        self.expect("[")
        out = []
        for k in range(count):
            if k:
                self.expect(",")
            kind, val, p = self.next()
            if kind != "num":
                self.fail("expected an index", p)
            if not 1 <= val <= self.n:
                self.fail(f"index {val} of {name} outside 1..{self.n}", p, IndexRangeError)
            out.append(val)
        self.expect("]")
        return tuple(out)

    def atom(self):
        kind, val, pos = self.next()
        if kind == "num":
            return Node("num", (Fraction(val),), pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind != "id":
            self.fail(f"unexpected {val!r}" if val else "unexpected end of input", pos)
        if val in INDEXED:
            idx = self.indices(val, INDEXED[val], pos)
            return Node(val, idx, pos)
        if val == "S":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Node("S", (inner,), pos)
        if val in PLAIN:
            return Node(val, (), pos)
        if val in LETTERS and self.n == 2:
            return Node("u", LETTERS[val], pos)
        self.fail(f"unknown identifier {val!r}", pos, UnknownIdentifierError)


def parse_expr(text, session):
    """Parse ``text`` into a Node tree; indices are checked against N."""
    n = session.n if isinstance(session, Session) else session.size
    return _Parser(text, n).parse()


# ---------------------------------------------------------------------------
# evaluation

def _q_scalar(exp, root, text, pos):
    e = exp * root
    if e.denominator != 1:
        raise IncompatibleRootError(f"q^({exp}) needs root order divisible by {exp.denominator}")
    return QScalar.monomial(1, int(e), root)


class _Eval:
    def __init__(self, text, session):
        self.text = text
        self.ctx = session.ctx if isinstance(session, Session) else session
        self.F = self.ctx.F
        self._calc = None

    def calc(self):
        if self._calc is None:
            from .calculus import calculus
            self._calc = calculus(self.ctx)
        return self._calc

    def fail(self, msg, node):
        raise ParseError(msg, self.text, node.pos)

    def to_poly(self, v):
        if isinstance(v, QScalar):
            return self.ctx.scalar(v)
        return v

    def run(self, node):
        k = node.kind
        a = node.args
        ctx = self.ctx
        if k == "num":
            return self.F(a[0])
        if k == "q":
            return self.F.q
        if k == "u":
            if max(a) > ctx.size:
                raise IndexRangeError(f"index outside 1..{ctx.size}", self.text, node.pos)
            return ctx.u(*a)
        if k == "det":
            return ctx.det_power(1)
        if k == "detinv":
            if ctx.kind != UNITARY:
                raise InvalidElementError("detinv only exists in C_q[U_M]")
            return ctx.detinv()
        if k == "t":
            if ctx.kind != UNITARY or ctx.size != 1:
                raise UnknownIdentifierError("t is the generator of C_q[U_1]", self.text, node.pos)
            return ctx.det_power(1)
        if k in ("z", "zs", "zz"):
            if ctx.kind != SPECIAL:
                raise InvalidElementError("sphere coordinates live in C_q[SU_N]")
            from . import bundles
            return getattr(bundles, k)(ctx, *a)
        if k == "e0":
            return self.calc().e0()
        if k == "ep":
            return self.calc().ep(*a)
        if k == "em":
            return self.calc().em(*a)
        if k == "S":
            v = self.run(a[0])
            if isinstance(v, QScalar):
                return v
            if not isinstance(v, NCPoly):
                self.fail("S applies to algebra elements", node)
            return antipode(v)
        if k == "neg":
            v = self.run(a[0])
            return -v
        if k in ("add", "sub"):
            x, y = self.run(a[0]), self.run(a[1])
            return self.combine(x, y, k == "sub", node)
        if k == "mul":
            return self.mul(self.run(a[0]), self.run(a[1]), node)
        if k == "div":
            x, y = self.run(a[0]), self.run(a[1])
            if not isinstance(y, QScalar):
                self.fail("can only divide by a scalar", node)
            inv = y.invert()
            return x * inv if isinstance(x, QScalar) else x.scale(inv)
        if k == "pow":
            base, e = a
            if base.kind == "q":
                return _q_scalar(e, self.F.root, self.text, node.pos)
            v = self.run(base)
            if e.denominator != 1:
                self.fail("fractional powers only apply to q", node)
            e = int(e)
            if isinstance(v, QScalar):
                return v ** e
            if not isinstance(v, NCPoly):
                self.fail("forms cannot be raised to a power", node)
            if e < 0:
                return self.inverse_monomial(v, node) ** (-e)
            return v ** e
        raise ParseError(f"unknown node {k}", self.text, node.pos)

    def inverse_monomial(self, v, node):
        # only det powers (t, det, detinv) are invertible
        if len(v.terms) == 1:
            (m, c), = v.terms.items()
            if not m[1] and (m[0] or v.ctx.kind == SPECIAL):
                if v.ctx.kind == SPECIAL:
                    return v.ctx.scalar(c.invert())
                return NCPoly(v.ctx, {(-m[0], ()): c.invert()})
        self.fail("only det powers have negative powers", node)

    def combine(self, x, y, minus, node):
        from .calculus import Omega1
        if isinstance(x, Omega1) or isinstance(y, Omega1):
            if not (isinstance(x, Omega1) and isinstance(y, Omega1)):
                self.fail("cannot add a one-form and an algebra element", node)
            return x - y if minus else x + y
        if isinstance(x, QScalar) and isinstance(y, QScalar):
            return x - y if minus else x + y
        x, y = self.to_poly(x), self.to_poly(y)
        return x - y if minus else x + y

    def mul(self, x, y, node):
        from .calculus import Omega1
        if isinstance(y, Omega1):
            if isinstance(x, Omega1):
                self.fail("cannot multiply two one-forms", node)
            if isinstance(x, QScalar):
                return y.scale(x)
            return y.left_mul(x)
        if isinstance(x, Omega1):
            if isinstance(y, QScalar):
                return x.scale(y)
            self.fail("one-forms are multiplied from the right with 'act'", node)
        if isinstance(x, QScalar) and isinstance(y, QScalar):
            return x * y
        if isinstance(x, QScalar):
            return y.scale(x)
        if isinstance(y, QScalar):
            return x.scale(y)
        return x * y


def evaluate(node, session, text=""):
    """Value of a parsed expression: QScalar, NCPoly or Omega1."""
    return _Eval(text, session).run(node)


def parse_element(text, session):
    """Parse and evaluate; scalars are promoted to algebra elements."""
    v = evaluate(parse_expr(text, session), session, text)
    if isinstance(v, QScalar):
        ctx = session.ctx if isinstance(session, Session) else session
        return ctx.scalar(v)
    return v
