"""Quantum principal bundles over C_q[SU_N] and the induced structures.

Three Hopf algebra maps out of C_q[SU_N] are implemented:

* alpha: onto C_q[U_{N-1}], u11 -> det^-1, lower block shifted up-left;
* beta:  onto C_q[SU_{N-1}], u11 -> 1, lower block shifted up-left;
* gamma: onto C_q[U_1] = C[t, t^-1], u11 -> t^-1, uNN -> t, other
  diagonal generators -> 1.

All three kill the off-diagonal generators of the first row and column.
The auxiliary maps delta (U_M -> SU_M) and zeta (U_M -> U_1) factor beta
and gamma through alpha.
"""

from __future__ import annotations

from .calculus import calculus as _calculus, ext_d as _ext_d, theta as _theta
from .errors import (CoinvarianceError, ContextMismatchError, InvalidElementError,
                     NotHomogeneousError)
from .linalg import Echelon, kernel_combinations
from .ncalg import (SPECIAL, NCPoly, TensorPoly, _acc, antipode,
                    coproduct, counit, quantum_determinant, su, um)

ALPHA, BETA, GAMMA, DELTA, ZETA = "Alpha", "Beta", "Gamma", "Delta", "Zeta"


class HopfMap:
    """A Hopf algebra map given on generators (and on det for U sources)."""

    def __init__(self, tag, source, target, gen_images, det_image=None):
        self.tag = tag
        self.source = source
        self.target = target
        self.gen_images = gen_images
        self.det_image = det_image
        self._memo = {}

    def __repr__(self):
        return f"HopfMap({self.tag}: {self.source!r} -> {self.target!r})"

    def monomial(self, m):
        hit = self._memo.get(m)
        if hit is None:
            dp, word = m
            hit = self.target.one()
            if dp:
                if self.det_image is None:
                    raise InvalidElementError("map has no value on det")
                base = self.det_image if dp > 0 else self._det_inv_image()
                hit = base ** abs(dp)
            for g in word:
                hit = hit * self.gen_images[g]
                if hit.is_zero():
                    break
            self._memo[m] = hit
        return hit

    def _det_inv_image(self):
        # det maps to a monomial t^k or det^k, whose inverse is again a monomial
        (m, c), = self.det_image.terms.items()
        if m[1]:
            raise InvalidElementError("det image is not invertible")
        return NCPoly(self.target, {(-m[0], ()): c.invert()})

    def __call__(self, f):
        if f.ctx != self.source:
            raise ContextMismatchError(f"{self.tag} expects {self.source!r}")
        out = {}
        for m, c in f.terms.items():
            for m2, c2 in self.monomial(m).terms.items():
                _acc(out, m2, c * c2)
        return NCPoly(self.target, out)


_MAPS = {}


def _shifted_images(src, tgt, corner):
    n = src.size
    zero = tgt.zero()
    imgs = []
    for g in range(src.ngens):
        i, j = src.gen_pair(g)
        if i == 1 and j == 1:
            imgs.append(corner)
        elif i == 1 or j == 1:
            imgs.append(zero)
        else:
            imgs.append(tgt.u(i - 1, j - 1) if n > 1 else zero)
    return imgs


def hopf_map_by_tag(tag, n, root=None):
    """The map ``tag`` with source C_q[SU_n] (Alpha, Beta, Gamma) or
    C_q[U_n] (Delta, Zeta); ``root`` defaults to n for SU sources."""
    root = root or n
    key = (tag, n, root)
    hit = _MAPS.get(key)
    if hit is not None:
        return hit
    if tag in (ALPHA, BETA, GAMMA):
        if n < 2:
            raise InvalidElementError("bundle maps need N >= 2")
        src = su(n, root)
        if tag == ALPHA:
            tgt = um(n - 1, root)
            hit = HopfMap(tag, src, tgt, _shifted_images(src, tgt, tgt.detinv()))
        elif tag == BETA:
            tgt = su(n - 1, root)
            hit = HopfMap(tag, src, tgt, _shifted_images(src, tgt, tgt.one()))
        else:
            tgt = um(1, root)
            imgs = []
            for g in range(src.ngens):
                i, j = src.gen_pair(g)
                if i != j:
                    imgs.append(tgt.zero())
                elif i == 1:
                    imgs.append(tgt.det_power(-1))
                elif i == n:
                    imgs.append(tgt.det_power(1))
                else:
                    imgs.append(tgt.one())
            hit = HopfMap(tag, src, tgt, imgs)
    elif tag == DELTA:
        src, tgt = um(n, root), su(n, root)
        hit = HopfMap(tag, src, tgt, [tgt.u(*src.gen_pair(g)) for g in range(src.ngens)],
                      det_image=tgt.one())
    elif tag == ZETA:
        src, tgt = um(n, root), um(1, root)
        imgs = []
        for g in range(src.ngens):
            i, j = src.gen_pair(g)
            if i != j:
                imgs.append(tgt.zero())
            else:
                imgs.append(tgt.det_power(1) if i == n else tgt.one())
        hit = HopfMap(tag, src, tgt, imgs, det_image=tgt.det_power(1))
    else:
        raise InvalidElementError(f"unknown Hopf map {tag!r}")
    _MAPS[key] = hit
    return hit


def bundle_map(tag, ctx):
    if ctx.kind != SPECIAL:
        raise ContextMismatchError("bundle maps start from C_q[SU_N]")
    return hopf_map_by_tag(tag, ctx.size, ctx.root)


def hopf_map(tag, f):
    """Apply Alpha, Beta or Gamma to f in C_q[SU_N]."""
    return bundle_map(tag, f.ctx)(f)


# ---------------------------------------------------------------------------
# coactions and coinvariants

def coaction(tag, f):
    """Right coaction (id ⊗ π)Δ."""
    pi = bundle_map(tag, f.ctx)
    return coproduct(f).map_legs(fr=pi.monomial, right=pi.target)


def is_coinvariant(tag, f):
    pi = bundle_map(tag, f.ctx)
    return coaction(tag, f) == TensorPoly.simple(f, pi.target.one())


def line_bundle_degree(f):
    """Integer k with Δ_γ(f) = f ⊗ t^k, so deg z_i = -1 and deg z_i* = 1."""
    if f.is_zero():
        return 0
    groups = coaction(GAMMA, f).right_coefficients()
    if len(groups) != 1:
        raise NotHomogeneousError("element mixes several degrees")
    (dp, word), left = next(iter(groups.items()))
    if word or left != f:
        raise NotHomogeneousError("element is not homogeneous")
    return dp


# ---------------------------------------------------------------------------
# sphere and flag coordinates

def z(ctx, i):
    return ctx.u(i, 1)


def zs(ctx, i):
    return antipode(ctx.u(1, i))


def zz(ctx, i, j):
    return ctx.u(i, 1) * antipode(ctx.u(1, j))


SPHERE, PROJECTIVE = "Sphere", "ProjectiveSpace"


class SubalgebraElement:
    """An element of C_q[SU_N] together with the subalgebra or line bundle it
    is claimed to live in; the claim is checked on construction.

    ``space`` is "Sphere" (Beta-coinvariant), "ProjectiveSpace"
    (Alpha-coinvariant) or an integer p for the degree-p line bundle.
    """

    __slots__ = ("ambient", "space")

    def __init__(self, ambient, space):
        if ambient.ctx.kind != SPECIAL:
            raise ContextMismatchError("subalgebra elements live in C_q[SU_N]")
        if space == SPHERE:
            ok = is_coinvariant(BETA, ambient)
        elif space == PROJECTIVE:
            ok = is_coinvariant(ALPHA, ambient)
        elif isinstance(space, int) and not isinstance(space, bool):
            ok = ambient.is_zero() or line_bundle_degree(ambient) == space
        else:
            raise InvalidElementError(f"unknown space {space!r}")
        if not ok:
            raise CoinvarianceError(f"element is not in {space}")
        self.ambient = ambient
        self.space = space

    def __repr__(self):
        return f"SubalgebraElement({self.ambient}, {self.space!r})"


# ---------------------------------------------------------------------------
# Hopf-Galois maps

def section(tag, ctx, m):
    """A lift of the target monomial m back to C_q[SU_N] with π(lift) = m."""
    pi = bundle_map(tag, ctx)
    dp, word = m
    if tag == GAMMA:
        if word:
            raise InvalidElementError("U_1 monomials have no generators")
        if dp >= 0:
            return zs(ctx, 1) ** dp
        return z(ctx, 1) ** (-dp)
    tgt = pi.target
    out = ctx.one()
    if dp < 0:
        out = ctx.u(1, 1) ** (-dp)
    elif dp > 0:
        lifted = _lift(ctx, tgt, quantum_determinant(tgt.base))
        out = lifted ** dp
    return out * _lift(ctx, tgt, NCPoly(tgt.base, {(0, word): ctx.F.one}))


def _lift(ctx, tgt, f):
    out = {}
    for (dp, word), c in f.terms.items():
        lw = tuple(ctx.gen(i + 1, j + 1) for i, j in map(tgt.gen_pair, word))
        _acc(out, (0, lw), c)
    return ctx.from_free(out)


def ver(tag, t):
    """The canonical map on an element of G ⊗ G: f ⊗ g -> f g₁ ⊗ π(g₂)."""
    ctx = t.left
    pi = bundle_map(tag, ctx)
    out = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), c2 in ctx.delta_monomial(b).items():
            img = pi.monomial(b2)
            if img.is_zero():
                continue
            for m, c3 in ctx.mul_monomials(a, b1).items():
                for h, c4 in img.terms.items():
                    _acc(out, (m, h), c * c2 * c3 * c4)
    return TensorPoly(ctx, pi.target, out)


def galois_ver(tag, f, g):
    return ver(tag, TensorPoly.simple(f, g))


def v_map(t):
    """f ⊗ g -> f S(g₁) ⊗ g₂ on G ⊗ G."""
    ctx = t.left
    out = {}
    for (a, b), c in t.terms.items():
        for (b1, b2), c2 in ctx.delta_monomial(b).items():
            left = NCPoly(ctx, {a: ctx.F.one}) * ctx.antipode_monomial(b1)
            for m, c3 in left.terms.items():
                _acc(out, (m, b2), c * c2 * c3)
    return TensorPoly(ctx, ctx, out)


def galois_ver_inv(tag, f, h):
    """A representative in G ⊗ G of ver⁻¹(f ⊗ h), built from the section."""
    ctx = f.ctx
    pi = bundle_map(tag, ctx)
    if h.ctx != pi.target:
        raise ContextMismatchError(f"{tag} needs an element of {pi.target!r}")
    lift = ctx.zero()
    for m, c in h.terms.items():
        lift = lift + section(tag, ctx, m).scale(c)
    return v_map(TensorPoly.simple(f, lift))


# ---------------------------------------------------------------------------
# calculus on the base

def theta(x):
    return _theta(x)


def dolbeault(f, part):
    """(∂f or ∂̄f) for f coinvariant under Alpha; part is 'del' or 'delbar'."""
    if part not in ("del", "delbar"):
        raise InvalidElementError("part must be 'del' or 'delbar'")
    if not is_coinvariant(ALPHA, f):
        raise CoinvarianceError("Dolbeault operators act on the flag coordinate ring")
    w = _ext_d(f)
    if not w.block("0").is_zero():
        raise CoinvarianceError("exterior derivative has an e0 component")
    return w.block("+" if part == "del" else "-")


def connection_project(w):
    return w.block("0")


def covariant_derivative(f):
    """(id - Π) d f on a homogeneous element of the sphere line bundles."""
    if isinstance(f, SubalgebraElement):
        f = f.ambient
    line_bundle_degree(f)
    w = _ext_d(f)
    return w - connection_project(w)


# ---------------------------------------------------------------------------
# fiber calculi

def sphere_words(ctx, bound):
    """All products of z_i, z_i* of length <= bound."""
    letters = [z(ctx, i) for i in range(1, ctx.size + 1)]
    letters += [zs(ctx, i) for i in range(1, ctx.size + 1)]
    out = [ctx.one()]
    layer = [ctx.one()]
    for _ in range(bound):
        layer = [p * x for p in layer for x in letters]
        out.extend(layer)
    return out


def window(tag, ctx, bound):
    if tag == GAMMA:
        return sphere_words(ctx, bound)
    out = []
    for deg in range(bound + 1):
        out.extend(NCPoly(ctx, {(0, w): ctx.F.one}) for w in ctx.standard_words(deg))
    return out


def _ideal_functional(calc, x):
    e = counit(x)
    Qm = calc.K.Q(x)
    if e:
        Qm = Qm - calc.K.Q(calc.ctx.one()).scale(e)
    vec = {("e",): e} if e else {}
    for b, c in enumerate(calc.coords_of_Q(Qm)):
        if c:
            vec[b] = c
    return vec


def ideal_in_window(tag, ctx, bound):
    """Spanning set of I ∩ W for the bounded window W attached to ``tag``."""
    calc = _calculus(ctx)
    W = window(tag, ctx, bound)
    vecs = [_ideal_functional(calc, x) for x in W]
    out = []
    for comb in kernel_combinations(vecs, ctx.F.one):
        x = ctx.zero()
        for j, c in comb.items():
            x = x + W[j].scale(c)
        out.append(x)
    return out


def fiber_ideal_span(tag, ctx, bound):
    """Normal-formed, independent images π(I ∩ W) in the fiber algebra."""
    pi = bundle_map(tag, ctx)
    ech = Echelon()
    out = []
    for x in ideal_in_window(tag, ctx, bound):
        y = pi(x)
        if ech.add(dict(y.terms)):
            out.append(y)
    return out


def in_span(polys, f):
    ech = Echelon()
    for p in polys:
        ech.add(dict(p.terms))
    return ech.contains(dict(f.terms))


def fiber_quotient_dimension(tag, ctx, bound):
    """dim of π(W ∩ ker ε) modulo π(I ∩ W)."""
    pi = bundle_map(tag, ctx)
    aug = Echelon()
    for x in window(tag, ctx, bound):
        y = pi(x - ctx.scalar(counit(x)))
        aug.add(dict(y.terms))
    return aug.rank - len(fiber_ideal_span(tag, ctx, bound))


def induced_coaction(tag, x):
    """Δ_M on the coset of x: Σ coset(x₂ - ε(x₂)) ⊗ S(π(x₁)), grouped by the
    fiber monomial; returns {monomial: coordinate list}."""
    ctx = x.ctx
    calc = _calculus(ctx)
    pi = bundle_map(tag, ctx)
    out = {}
    for (m1, m2), c in coproduct(x).terms.items():
        img = antipode(pi.monomial(m1))
        if img.is_zero():
            continue
        coords = calc.coset_monomial_aug(m2)
        for h, c2 in img.terms.items():
            acc = out.setdefault(h, [ctx.F.zero] * calc.dim)
            for b, v in enumerate(coords):
                if v:
                    acc[b] = acc[b] + c * c2 * v
    return {h: v for h, v in out.items() if any(v)}
