import pytest
from hypothesis import given, strategies as st

from conftest import polys
from qflag.calculus import calculus
from qflag.errors import IndexRangeError, ParseError, UnknownIdentifierError
from qflag.ncalg import antipode, mat, quantum_determinant, su
from qflag.parser import Session, parse_element, parse_expr
from qflag.printing import format_form, format_poly

M2 = Session(2, kind=mat(2).kind)
S2, S3 = Session(2), Session(3)


def test_det_expression():
    f = parse_element("u[1,1]*u[2,2] - q^(1/1)*u[1,2]*u[2,1]", M2)
    assert f == quantum_determinant(M2.ctx)


def test_nodes():
    assert parse_expr("S(u[1,2])", S2).kind == "S"
    assert parse_element("S(u[1,2])", S2) == antipode(S2.ctx.u(1, 2))
    assert parse_element("zz[1,2]", S2) == parse_element("u[1,1]*S(u[1,2])", S2)
    assert parse_element("2 a b", S2) == S2.ctx.u(1, 1) * S2.ctx.u(1, 2) * 2


def test_rational_exponents():
    F = S3.ctx.F
    assert parse_element("q^(2 - 2/3)", S3) == S3.ctx.scalar(F.s(4))
    F2 = S2.ctx.F
    assert parse_element("q^-1/2", S2) == S2.ctx.scalar(F2.s(-2) * F2.one / 2)


def test_forms():
    w = parse_element("u[1,1] e0 + u[1,2] ep[1]", S2)
    C = calculus(S2.ctx)
    assert w == C.ext_d(S2.ctx.u(1, 1))


@pytest.mark.parametrize("text, cls, col", [
    ("u[1,", ParseError, 5),
    ("u[3,1]", IndexRangeError, 3),
    ("foo", UnknownIdentifierError, 1),
    ("u[1,1] +\n  )", ParseError, 3),
])
def test_errors_have_positions(text, cls, col):
    with pytest.raises(cls) as info:
        parse_element(text, S2)
    assert info.value.col == col


def test_error_line():
    with pytest.raises(ParseError) as info:
        parse_element("u[1,1] +\n  )", S2)
    assert info.value.line == 2


def test_letters_only_at_n2():
    with pytest.raises(UnknownIdentifierError):
        parse_element("a", S3)


@given(polys(su(2), 3, 4), st.booleans())
def test_round_trip_su2(f, letters):
    assert parse_element(format_poly(f, letters), S2) == f


@given(polys(su(3), 2, 3))
def test_round_trip_su3(f):
    assert parse_element(format_poly(f), S3) == f


@given(polys(mat(2), 3, 4))
def test_round_trip_m2(f):
    assert parse_element(format_poly(f), M2) == f


@given(polys(su(2), 2, 2))
def test_round_trip_forms(f):
    w = calculus(S2.ctx).ext_d(f)
    if w.is_zero():
        return      # the zero form prints as 0, which reads back as a scalar
    assert parse_element(format_form(w), S2) == w
