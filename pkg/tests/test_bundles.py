import pytest
from hypothesis import given, settings, strategies as st

from conftest import polys
from qflag import bundles as B
from qflag.calculus import calculus
from qflag.errors import CoinvarianceError, NotHomogeneousError
from qflag.ncalg import TensorPoly, antipode, su

S2, S3 = su(2), su(3)


def test_generator_tables():
    alpha = B.bundle_map(B.ALPHA, S3)
    assert alpha(S3.u(1, 1)) == alpha.target.det_power(-1)
    assert alpha(S3.u(2, 3)) == alpha.target.u(1, 2)
    gamma = B.bundle_map(B.GAMMA, S2)
    assert gamma(S2.u(2, 2)) == gamma.target.det_power(1)
    assert B.hopf_map(B.BETA, S2.u(1, 2)).is_zero()


def test_coactions():
    U1 = B.bundle_map(B.GAMMA, S3).target
    for i in (1, 2, 3):
        z = B.z(S3, i)
        assert B.coaction(B.BETA, z) == TensorPoly.simple(z, B.bundle_map(B.BETA, S3).target.one())
        assert B.coaction(B.GAMMA, z) == TensorPoly.simple(z, U1.det_power(-1))
        assert B.is_coinvariant(B.BETA, B.zs(S3, i))
        assert B.line_bundle_degree(z) == -1
        assert B.line_bundle_degree(B.zs(S3, i)) == 1
        for j in (1, 2, 3):
            assert B.is_coinvariant(B.ALPHA, B.zz(S3, i, j))
            assert B.line_bundle_degree(B.zs(S3, i) * B.z(S3, j)) == 0
    assert not B.is_coinvariant(B.GAMMA, B.z(S3, 1))
    assert B.coaction(B.ALPHA, S3.one()) == TensorPoly.simple(S3.one(), B.bundle_map(B.ALPHA, S3).target.one())


def test_degree_rejects_mixed():
    with pytest.raises(NotHomogeneousError):
        B.line_bundle_degree(B.z(S2, 1) + B.zs(S2, 1))


def test_subalgebra_element_checks_claim():
    B.SubalgebraElement(B.zz(S2, 1, 2), B.PROJECTIVE)
    B.SubalgebraElement(B.z(S2, 2), B.SPHERE)
    B.SubalgebraElement(B.zs(S2, 2), 1)
    with pytest.raises(CoinvarianceError):
        B.SubalgebraElement(B.z(S2, 2), B.PROJECTIVE)
    with pytest.raises(CoinvarianceError):
        B.SubalgebraElement(S3.u(1, 2), B.SPHERE)


def test_ver_examples():
    alpha = B.bundle_map(B.ALPHA, S3)
    for i in (1, 2, 3):
        got = B.galois_ver(B.ALPHA, S3.one(), S3.u(i, 1))
        assert got == TensorPoly.simple(S3.u(i, 1), alpha.target.det_power(-1))
    f = S3.u(1, 2)
    assert B.galois_ver(B.BETA, f, S3.one()) == TensorPoly.simple(f, B.bundle_map(B.BETA, S3).target.one())
    tgt = alpha.target
    assert B.galois_ver_inv(B.ALPHA, f, tgt.one()) == TensorPoly.simple(f, S3.one())
    U1 = B.bundle_map(B.GAMMA, S2).target
    inv = B.galois_ver_inv(B.GAMMA, S2.one(), U1.det_power(-1))
    want = TensorPoly(S2, S2, {})
    for k in (1, 2):
        want = want + TensorPoly.simple(antipode(S2.u(1, k)), S2.u(k, 1))
    assert inv == want


@settings(max_examples=20)
@given(st.sampled_from([B.ALPHA, B.BETA]), polys(S3, 1, 2), st.integers(0, 10 ** 6))
def test_ver_inverse(tag, f, seed):
    import random
    tgt = B.bundle_map(tag, S3).target
    h = tgt.random_poly(random.Random(seed), 2, 2)
    assert B.ver(tag, B.galois_ver_inv(tag, f, h)) == TensorPoly.simple(f, h)


@given(st.integers(-3, 3), polys(S2))
def test_ver_inverse_gamma(k, f):
    U1 = B.bundle_map(B.GAMMA, S2).target
    h = U1.det_power(k)
    assert B.ver(B.GAMMA, B.galois_ver_inv(B.GAMMA, f, h)) == TensorPoly.simple(f, h)


def test_dolbeault_examples():
    C = calculus(S2)
    a, b, c, d = (S2.u(i, j) for i in (1, 2) for j in (1, 2))
    q = S2.F.q
    assert B.dolbeault(B.zz(S2, 1, 2), "del") == C.ep(1).left_mul(b * b).scale(-q.invert())
    assert B.dolbeault(B.zz(S2, 2, 1), "delbar") == C.em(1).left_mul(c * c).scale(q)
    assert B.dolbeault(S2.one(), "del").is_zero()
    with pytest.raises(CoinvarianceError):
        B.dolbeault(a, "del")


def test_connection():
    C = calculus(S3)
    P = B.connection_project
    assert P(C.e0()) == C.e0()
    assert P(C.ep(1)).is_zero() and P(C.em(2)).is_zero()
    f, g = S3.u(1, 2), S3.u(3, 1)
    assert P(C.e0().left_mul(f) + C.ep(1).left_mul(g)) == C.e0().left_mul(f)
    assert B.covariant_derivative(S3.one()).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_nabla_example(n):
    ctx = su(n)
    C = calculus(ctx)
    s = ctx.F.s
    for i in range(1, n + 1):
        w = B.covariant_derivative(B.SubalgebraElement(B.zs(ctx, i), 1))
        first = C.zero_form()
        for k in range(2, n + 1):
            first = first - C.em(k - 1).left_mul(antipode(ctx.u(k, i))).scale(s(n + 4 - 2 * k * n))
        second = C.zero_form()
        for l in range(1, n + 1):
            second = second + B.dolbeault(B.zz(ctx, l, i), "delbar").left_mul(B.zs(ctx, l))
        assert w == first == second.scale(s(2 - 2 * n))


def test_fiber_ideals():
    span = B.fiber_ideal_span(B.GAMMA, S2, 4)
    t = B.bundle_map(B.GAMMA, S2).target.det_power(1)
    one = t.ctx.one()
    assert B.in_span(span, t * t - t - (t - one).scale(S2.F.s(-2)))
    assert not B.in_span(span, t - one)
    assert B.fiber_quotient_dimension(B.ALPHA, S2, 4) == 1
    assert B.fiber_quotient_dimension(B.BETA, S2, 4) == 0
