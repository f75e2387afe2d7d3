import random

from hypothesis import HealthCheck, settings, strategies as st

from qflag.qfield import QScalar

settings.register_profile(
    "qflag", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qflag")


def laurent(root=2):
    coeffs = st.integers(-3, 3)
    return st.dictionaries(st.integers(-4, 4), coeffs, max_size=3).map(
        lambda d: QScalar.from_laurent(d, root))


def scalars(root=2):
    def build(pair):
        num, den = pair
        return num if den.is_zero() else num * den.invert()
    return st.tuples(laurent(root), laurent(root)).map(build)


def polys(ctx, degree=2, nterms=3):
    return st.integers(0, 10 ** 6).map(
        lambda seed: ctx.random_poly(random.Random(seed), degree, nterms))
