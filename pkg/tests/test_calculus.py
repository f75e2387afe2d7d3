import pytest
from hypothesis import given

from conftest import polys
from qflag.calculus import bc_coset, calculus, coset, ext_d, right_act, theta
from qflag.errors import ContextMismatchError, NotAugmentationError
from qflag.killing import QMatrix
from qflag.ncalg import antipode, mat, su

S2, S3 = su(2), su(3)
C2, C3 = calculus(S2), calculus(S3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dimensions(n):
    C = calculus(su(n))
    assert C.rank_check() == (n * n, (n - 1) ** 2)
    assert C.dim == 2 * n - 1


def test_coset_examples():
    F = S3.F
    assert coset(S3.u(2, 1)) == [0, 0, 0, 1, 0]
    assert coset(S3.u(2, 1) * antipode(S3.u(1, 1)))[3] == F.s(-1)
    for i in (2, 3):
        cs = coset(antipode(S3.u(1, i)))
        assert cs[i - 2] == -F.s(7 - 6 * i)


def test_bc_coset():
    a, b = S2.u(1, 1), S2.u(1, 2)
    assert not bc_coset((a - S2.one()) * b).is_zero()
    assert bc_coset(S2.zero()) == QMatrix.zeros(S2.F, 2)


def test_d_examples():
    a, b = S2.u(1, 1), S2.u(1, 2)
    assert ext_d(a) == C2.e0().left_mul(a) + C2.ep(1).left_mul(b)
    assert ext_d(S2.one()).is_zero()
    F = S3.F
    for i in (1, 2, 3):
        zs = antipode(S3.u(1, i))
        want = C3.e0().left_mul(zs).scale(-F.s(-4))
        for k in (1, 2):
            want = want - C3.em(k).left_mul(antipode(S3.u(k + 1, i))).scale(F.s(7 - 6 * (k + 1)))
        assert ext_d(zs) == want


def test_right_action_examples():
    F = S3.F
    for r in (1, 2, 3):
        z = S3.u(r, 1)
        assert right_act(C3.ep(1), z) == C3.ep(1).left_mul(z).scale(F.s(1))
        want = C3.e0().left_mul(z).scale(F.s(4))
        for k in (2, 3):
            want = want + C3.ep(k - 1).left_mul(S3.u(r, k)).scale(F.s(4) - 1)
        assert right_act(C3.e0(), z) == want
    w = C3.ep(2).left_mul(S3.u(1, 3))
    assert right_act(w, S3.one()) == w


def test_theta_on_sphere_coordinates():
    assert theta(S3.u(2, 1)) == C3.ep(1)
    assert theta(S3.u(1, 1) - S3.one()) == C3.e0()


def test_errors():
    with pytest.raises(NotAugmentationError):
        coset(S2.one())
    with pytest.raises(ContextMismatchError):
        calculus(mat(2))


@given(polys(S2), polys(S2))
def test_leibniz_su2(f, g):
    assert ext_d(f * g) == ext_d(g).left_mul(f) + right_act(ext_d(f), g)


@given(polys(S3, 2, 2), polys(S3, 1, 2))
def test_leibniz_su3(f, g):
    assert ext_d(f * g) == ext_d(g).left_mul(f) + right_act(ext_d(f), g)


@given(polys(S2), polys(S2), polys(S2))
def test_right_action_is_an_action(f, g, h):
    w = ext_d(h)
    assert right_act(right_act(w, f), g) == right_act(w, f * g)


@given(polys(S2))
def test_d_kills_scalars_and_theta_matches_coset(f):
    from qflag.ncalg import counit
    x = f - S2.scalar(counit(f))
    assert theta(x) == C2.from_coords(coset(x))
