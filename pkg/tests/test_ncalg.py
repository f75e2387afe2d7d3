import random

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from qflag.errors import ContextMismatchError
from qflag.ncalg import (TensorPoly, antipode, coproduct, counit, delta_left, delta_right,
                         equals, mat, multiply, normal_form, oracle_ideal_membership,
                         quantum_determinant, rewrite_free, su, tensor_counit_left,
                         tensor_counit_right, um)

M2, S2, S3 = mat(2), su(2), su(3)


def letters(ctx):
    return [ctx.u(i, j) for i in (1, 2) for j in (1, 2)]


def test_rewrite_rules_in_m2():
    a, b, c, d = letters(M2)
    q = M2.F.q
    assert c * a == (a * c).scale(q.invert())
    assert b * a == (a * b).scale(q.invert())
    assert d * a == a * d - (b * c).scale(M2.F.nu)
    assert multiply(a, d) - multiply(d, a) == (b * c).scale(M2.F.nu)


def test_det_rule_in_su2():
    a, b, c, d = letters(S2)
    q = S2.F.q
    assert quantum_determinant(M2) == M2.u(1, 1) * M2.u(2, 2) - (M2.u(1, 2) * M2.u(2, 1)).scale(q)
    assert normal_form(quantum_determinant(S2)) == S2.one()
    assert b * c == (S2.one() - a * d).scale(-q.invert())


def test_det_central_in_m3():
    M3 = mat(3)
    det = quantum_determinant(M3)
    for i in range(1, 4):
        for j in range(1, 4):
            assert det * M3.u(i, j) == M3.u(i, j) * det
    assert counit(det) == M3.F.one


def test_sphere_commutation():
    z1, z2 = S2.u(1, 1), S2.u(2, 1)
    assert multiply(z1, z2) == multiply(z2, z1).scale(S2.F.q)


def test_counit_and_coproduct_examples():
    a, b, c, d = letters(S2)
    assert counit(b) == 0 and counit(S2.one()) == 1
    assert coproduct(a) == TensorPoly.simple(a, a) + TensorPoly.simple(b, c)
    assert coproduct(S2.one()) == TensorPoly.simple(S2.one(), S2.one())
    t = coproduct(S3.u(1, 2))
    assert delta_left(t) == delta_right(t)


def test_antipode_examples():
    a, b, c, d = letters(S2)
    q = S2.F.q
    assert antipode(a) == d
    assert antipode(b) == b.scale(-q.invert())
    assert antipode(c) == c.scale(-q)
    assert antipode(S2.one()) == S2.one()


def test_sphere_sum_and_third_relation():
    z = [S3.u(i, 1) for i in range(1, 4)]
    zs = [antipode(S3.u(1, i)) for i in range(1, 4)]
    assert equals(sum((zs[i] * z[i] for i in range(3)), S3.zero()), S3.one())
    F = S3.F
    rhs = S3.zero()
    for k in (2, 3):
        rhs = rhs + (z[k - 1] * zs[k - 1]).scale(-F.q.invert() * F.nu * F.q ** (2 * (k - 1)))
    assert equals(z[0] * zs[0] - zs[0] * z[0], rhs)


def test_oracle_examples():
    det = quantum_determinant(M2)
    assert oracle_ideal_membership(det - M2.one(), 2)
    assert not oracle_ideal_membership(M2.u(1, 1), 4)


def test_unitary_det_inverse():
    U2 = um(2, 2)
    assert U2.det_power(1) * U2.detinv() == U2.one()
    assert antipode(U2.det_power(1)) == U2.detinv()


def test_contexts_do_not_mix():
    with pytest.raises(ContextMismatchError):
        S2.u(1, 1) + S3.u(1, 1)


@given(polys(S2), polys(S2), polys(S2))
def test_associativity_su2(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(polys(S3, 2, 2), polys(S3, 2, 2))
def test_coproduct_multiplicative_su3(f, g):
    assert coproduct(f * g) == coproduct(f).mul(coproduct(g))


@given(polys(S2))
def test_counit_laws(f):
    t = coproduct(f)
    assert tensor_counit_left(t) == f
    assert tensor_counit_right(t) == f


@given(polys(S2), polys(S2))
def test_antipode_anti_multiplicative(f, g):
    assert antipode(f * g) == antipode(g) * antipode(f)


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_rewriting_confluent(seed, n):
    ctx = su(n)
    terms = ctx.random_free_terms(random.Random(seed), 4, 3)
    a = ctx.from_free(terms)
    assert rewrite_free(ctx, terms, "leftmost") == a
    assert rewrite_free(ctx, terms, "rightmost") == a
