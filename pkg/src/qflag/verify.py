"""Named verification suites.

Each suite rebuilds a family of identities for a given N and records one
check per family (a family passes when every instance passes; the first
failing instance is kept as the witness).  Sampled checks are evidence,
not proofs; reports say so in their ``note`` field.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import bundles as B
from .calculus import Omega1, calculus
from .errors import InvalidElementError, ResourceGuardError, UnknownSuiteError
from .killing import (SHAPES, closed_Q_matrix, killing_context, shape_element)
from .linalg import kernel_combinations
from .ncalg import (NCPoly, TensorPoly, _acc, antipode, coproduct, coproduct_free, counit,
                    counit_free, delta_left, delta_right, mat, oracle_ideal_membership,
                    quantum_determinant, r_bar_entry, r_matrix_entry, relation_vectors,
                    rewrite_free, su, tensor_counit_left, tensor_counit_right)

SCHEMA = "qflag.suite-report/1"
NOTE = "sampled checks are evidence, not proofs"


@dataclass(frozen=True)
class Budget:
    mode: str = "exhaustive"        # exhaustive | sample | dimension
    count: int = 0

    def __str__(self):
        return f"sample:{self.count}" if self.mode == "sample" else self.mode


def parse_budget(text):
    if text in (None, "", "default"):
        return None
    if text in ("exhaustive", "dimension"):
        return Budget(text)
    if text.startswith("sample:"):
        k = int(text.split(":", 1)[1])
        if k <= 0:
            raise ValueError("sample count must be positive")
        return Budget("sample", k)
    raise ValueError(f"unknown budget {text!r}")


def default_budget(n):
    if n <= 2:
        return Budget("exhaustive")
    if n == 3:
        return Budget("sample", 500)
    return Budget("dimension")


@dataclass
class Check:
    description: str
    citation: str
    status: str
    witness: str | None = None

    def as_dict(self):
        d = {"description": self.description, "citation": self.citation, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class SuiteReport:
    suite_name: str
    n: int
    seed: int
    budget: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    def as_dict(self):
        return {
            "schema": SCHEMA,
            "suite": self.suite_name,
            "n": self.n,
            "seed": self.seed,
            "budget": self.budget,
            "note": NOTE,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "elapsed": round(self.elapsed, 3),
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def summary_lines(self):
        out = [f"suite {self.suite_name}  N={self.n}  budget={self.budget}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.description}"
            if c.witness:
                line += f"  -- witness: {c.witness}"
            out.append(line)
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"{verdict}: {sum(c.status == 'pass' for c in self.checks)}/{len(self.checks)}"
                   f" checks in {self.elapsed:.2f}s")
        return out


class Runner:
    """Collects checks for one suite run."""

    def __init__(self, n, seed, budget, bound=None):
        self.bound = bound
        self.n = n
        self.seed = seed
        self.budget = budget
        self.rng = random.Random(seed)
        self.checks = []
        self.ctx = su(n)
        self.F = self.ctx.F

    def check(self, description, citation, ok, witness=None):
        self.checks.append(Check(description, citation, "pass" if ok else "fail",
                                 None if ok else (witness or "identity does not hold")))

    def family(self, description, citation, items, fn):
        """fn(item) returns None on success or a witness string."""
        count = 0
        for item in items:
            count += 1
            try:
                bad = fn(item)
            except Exception as exc:          # a crash is a failed instance
                bad = f"{type(exc).__name__}: {exc}"
            if bad is not None:
                self.check(f"{description}", citation, False, f"{item}: {bad}")
                return
        self.check(f"{description}", citation, count > 0, "no instances")

    def tuples(self, ranges, cap=None):
        """All index tuples, or a seeded sample of them in sample mode."""
        ranges = [list(r) for r in ranges]
        total = 1
        for r in ranges:
            total *= len(r)
        limit = None
        if self.budget.mode == "sample":
            limit = self.budget.count
        if cap is not None:
            limit = cap if limit is None else min(limit, cap)
        if limit is None or total <= limit:
            return list(itertools.product(*ranges))
        picks = sorted(self.rng.sample(range(total), limit))
        out = []
        for p in picks:
            idx = []
            for r in reversed(ranges):
                p, k = divmod(p, len(r))
                idx.append(r[k])
            out.append(tuple(reversed(idx)))
        return out

    def samples(self, count):
        if self.budget.mode == "sample":
            return min(count, self.budget.count)
        return count


def _neq(a, b):
    return None if a == b else f"{a}  !=  {b}"


def _zero(x):
    return None if x.is_zero() else f"nonzero: {x}"


def _gens(ctx):
    n = ctx.size
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


# ---------------------------------------------------------------------------
# Hopf structure

def suite_hopf_axioms(run):
    ctx, n, F = run.ctx, run.n, run.F
    gens = _gens(ctx)

    def counit_law(ij):
        x = ctx.u(*ij)
        t = coproduct(x)
        return _neq(tensor_counit_left(t), x) or _neq(tensor_counit_right(t), x)

    def coassoc(ij):
        t = coproduct(ctx.u(*ij))
        return None if delta_left(t) == delta_right(t) else "(Δ⊗id)Δ != (id⊗Δ)Δ"

    def antipode_law(x):
        t = coproduct(x)
        left, right = ctx.zero(), ctx.zero()
        for (a, b), c in t.terms.items():
            ma = NCPoly(ctx, {a: F.one})
            mb = NCPoly(ctx, {b: F.one})
            left = left + (ctx.antipode_monomial(a) * mb).scale(c)
            right = right + (ma * ctx.antipode_monomial(b)).scale(c)
        unit = ctx.scalar(counit(x))
        return _neq(left, unit) or _neq(right, unit)

    run.family("counit laws on generators", "counit axiom", gens, counit_law)
    run.family("coassociativity on generators", "coassociativity", gens, coassoc)
    run.family("antipode axiom on generators", "antipode axiom",
               gens, lambda ij: antipode_law(ctx.u(*ij)))
    pairs = run.tuples([gens, gens])
    run.family("antipode axiom on generator products", "antipode axiom",
               pairs, lambda p: antipode_law(ctx.u(*p[0]) * ctx.u(*p[1])))

    M = mat(n)
    rels = relation_vectors(M)
    run.family("coproduct kills every defining relation", "R-matrix relations",
               range(len(rels)),
               lambda k: _zero(coproduct_free(M, {(0, w): c for w, c in rels[k].items()})))
    run.family("counit kills every defining relation", "R-matrix relations",
               range(len(rels)),
               lambda k: None if not counit_free(M, {(0, w): c for w, c in rels[k].items()})
               else "nonzero counit")
    det = quantum_determinant(M)
    run.check("det is grouplike", "quantum determinant",
              coproduct(det) == TensorPoly.simple(det, det))
    run.family("det is central", "quantum determinant", gens,
               lambda ij: _neq(det * M.u(*ij), M.u(*ij) * det))
    run.check("det = 1 in the special unitary quotient", "quantum determinant",
              quantum_determinant(ctx) == ctx.one()
              and ctx.from_free({(0, w): c for w, c in M._det_m().items()}) == ctx.one())
    if n == 2:
        a, b, c, d = (ctx.u(*ij) for ij in gens)
        q = F.q
        run.check("antipode values S(a)=d, S(b)=-q^-1 b, S(c)=-q c", "antipode via quantum minors",
                  antipode(a) == d and antipode(b) == b.scale(-q.invert())
                  and antipode(c) == c.scale(-q))


# ---------------------------------------------------------------------------
# coquasi-triangular structure

def suite_coquasi(run):
    ctx, n, F = run.ctx, run.n, run.F
    K = killing_context(ctx)
    gens = _gens(ctx)
    u = ctx.u

    def r(f, g):
        return K.pair(f, g, K.r_mono)

    def r_alt(f, g):
        return K.pair(f, g, K.r_mono_alt)

    def rbar(f, g):
        return K.pair(f, g, K.rbar_mono)

    def law1(t):
        f, g, h = (u(*x) for x in t)
        (k, l) = t[2]
        rhs = F.zero
        for m in range(1, n + 1):
            rhs = rhs + r(f, u(k, m)) * r(g, u(m, l))
        return _neq(r_alt(f * g, h), rhs)

    def law2(t):
        f, g, h = (u(*x) for x in t)
        (i, j) = t[0]
        rhs = F.zero
        for m in range(1, n + 1):
            rhs = rhs + r(u(i, m), h) * r(u(m, j), g)
        return _neq(r(f, g * h), rhs)

    def law_bar(t):
        f, g, h = (u(*x) for x in t)
        (k, l) = t[2]
        rhs = F.zero
        for m in range(1, n + 1):
            rhs = rhs + rbar(g, u(k, m)) * rbar(f, u(m, l))
        return _neq(rbar(f * g, h), rhs)

    triples = run.tuples([gens, gens, gens])
    run.family("r(fg⊗h) = r(f⊗h1) r(g⊗h2) on generator triples", "coquasi-triangular law",
               triples, law1)
    run.family("r(f⊗gh) = r(f1⊗h) r(f2⊗g) on generator triples", "coquasi-triangular law",
               triples, law2)
    run.family("rbar(fg⊗h) = rbar(g⊗h1) rbar(f⊗h2) on generator triples",
               "inverse pairing", triples, law_bar)

    def conv_inverse(p):
        (i, j), (k, l) = p
        tot = F.zero
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                tot = tot + r(u(i, a), u(k, b)) * rbar(u(a, j), u(b, l))
        want = F.one if (i == j and k == l) else F.zero
        return _neq(tot, want)

    pairs = run.tuples([gens, gens])
    run.family("rbar is the convolution inverse of r", "inverse pairing", pairs, conv_inverse)

    def quasi(p):
        (i, j), (k, l) = p
        lhs, rhs = ctx.zero(), ctx.zero()
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                c1 = r(u(a, j), u(b, l))
                if c1:
                    lhs = lhs + (u(k, b) * u(i, a)).scale(c1)
                c2 = r(u(i, a), u(k, b))
                if c2:
                    rhs = rhs + (u(a, j) * u(b, l)).scale(c2)
        return _neq(lhs, rhs)

    run.family("quasi-commutativity g1 f1 r(f2⊗g2) = r(f1⊗g1) f2 g2", "quasi-commutativity",
               pairs, quasi)
    q_root = F.s(n - 1)
    run.check("r(u11⊗u11) = q^(1-1/N), rbar(u11⊗u11) = q^(1/N-1)", "generator table",
              r(u(1, 1), u(1, 1)) == q_root and rbar(u(1, 1), u(1, 1)) == q_root.invert())
    run.family("generator table r(u^i_j⊗u^k_l) = q^(-1/N) R^{ki}_{jl}", "generator table",
               itertools.product(gens, gens),
               lambda p: _neq(r(u(*p[0]), u(*p[1])),
                              F.s(-1) * r_matrix_entry(F, p[1][0], p[0][0], p[0][1], p[1][1])))
    run.family("generator table rbar(u^i_j⊗u^k_l) = q^(1/N) Rbar^{ki}_{jl}", "generator table",
               itertools.product(gens, gens),
               lambda p: _neq(rbar(u(*p[0]), u(*p[1])),
                              F.s(1) * r_bar_entry(F, p[1][0], p[0][0], p[0][1], p[1][1])))


# ---------------------------------------------------------------------------
# Killing form

def suite_killing(run):
    ctx, n, F = run.ctx, run.n, run.F
    K = killing_context(ctx)
    rng = range(1, n + 1)
    for shape, (names, _, _) in SHAPES.items():
        cache = {}

        def cmp(t, shape=shape, cache=cache):
            k, l, idx = t[0], t[1], t[2:]
            hit = cache.get(idx)
            if hit is None:
                x = shape_element(ctx, shape, *idx)
                hit = (closed_Q_matrix(ctx, shape, *idx), K.Q_naive(x), K.Q(x))
                cache[idx] = hit
            closed, naive, fast = hit
            a, b, c = closed[k - 1, l - 1], naive[k - 1, l - 1], fast[k - 1, l - 1]
            return None if a == b == c else f"closed {a}, definition {b}, transfer {c}"

        tuples = run.tuples([rng] * (2 + len(names)))
        run.family(f"closed form {shape} against the convolution definition",
                   "closed forms of Q", tuples, cmp)
    run.check("Q(1) is the identity", "Killing representation",
              K.Q(ctx.one()) == K.Q(ctx.one()).identity(F, n))
    gens = _gens(ctx)

    def transfer(p):
        f, g = ctx.u(*p[0]), ctx.u(*p[1])
        return _neq(K.Q(f * g), K.Q_naive(f * g))

    run.family("Q(fg) from the transfer identity equals the definition",
               "Killing representation", run.tuples([gens, gens]), transfer)
    if n >= 3:
        def q11(k):
            Qm = K.Q(ctx.u(k, k))
            if Qm[0, 0] != F.s(-2):
                return f"Q11 = {Qm[0, 0]}"
            for l in range(2, n + 1):
                if Qm[0, l - 1] or Qm[l - 1, 0]:
                    return f"Q1{l} or Q{l}1 nonzero"
            return None
        run.family("Q11(u^k_k) = q^(-2/N) and Q1l = Ql1 = 0 for k, l >= 2",
                   "principal homogeneous space", range(2, n + 1), q11)


# ---------------------------------------------------------------------------
# calculus

def suite_lambda_dimension(run):
    n = run.n
    C = calculus(run.ctx)
    full, dpart = C.rank_check()
    run.check(f"span of the Q-images of the basis representatives has dimension N^2 = {n * n}",
              "basis of the bicovariant calculus", full == n * n, f"rank {full}")
    run.check(f"D-span has dimension (N-1)^2 = {(n - 1) ** 2}", "quotient calculus",
              dpart == (n - 1) ** 2, f"rank {dpart}")
    run.check(f"quotient basis has 2N-1 = {2 * n - 1} elements", "quotient calculus",
              C.dim == 2 * n - 1 and len(C.labels) == 2 * n - 1)


def suite_vd_submodule(run):
    ctx, n = run.ctx, run.n
    K = killing_context(ctx)
    C = calculus(ctx)
    rng = range(1, n + 1)
    u = ctx.u

    def first_row_col(x, rows=True, cols=True):
        Qm = K.Q(x)
        for m in rng:
            if cols and Qm[m - 1, 0]:
                return f"Q{m}1 = {Qm[m - 1, 0]}"
            if rows and Qm[0, m - 1]:
                return f"Q1{m} = {Qm[0, m - 1]}"
        return None

    hi = range(2, n + 1)
    d2 = [(i, j) for i in hi for j in hi if i != j]
    if d2:
        run.family("Q1l and Qk1 vanish on u^i_j u^r_s (i != j >= 2)", "V_D is a right submodule",
                   run.tuples([d2, rng, rng]),
                   lambda t: first_row_col(u(*t[0]) * u(t[1], t[2])))
    run.family("Q1l and Qk1 vanish on u^i_1 S(u^1_i) u^r_s (i >= 2)", "V_D is a right submodule",
               run.tuples([hi, rng, rng]),
               lambda t: first_row_col(u(t[0], 1) * antipode(u(1, t[0])) * u(t[1], t[2])))
    run.family("Qk1 vanishes on u^i_1 u^r_s (i >= 2)", "V_+ is a right submodule",
               run.tuples([hi, rng, rng]),
               lambda t: first_row_col(u(t[0], 1) * u(t[1], t[2]), rows=False))
    run.family("Q1l vanishes on u^1_j u^r_s (j >= 2)", "V_- is a right submodule",
               run.tuples([hi, rng, rng]),
               lambda t: first_row_col(u(1, t[0]) * u(t[1], t[2]), cols=False))

    rnd = run.rng
    pairs = [(ctx.random_poly(rnd, 2, 2), ctx.random_poly(rnd, 2, 2))
             for _ in range(run.samples(100))]

    def leibniz(p):
        f, g = p
        return _neq(C.ext_d(f * g), C.ext_d(g).left_mul(f) + C.right_act(C.ext_d(f), g))

    run.family("Leibniz rule d(fg) = f dg + (df) g on random pairs", "exterior derivative",
               pairs, leibniz)

    ideal = B.ideal_in_window(B.ALPHA, ctx, 2)

    def rep_independent(t):
        b, w, (i, j) = t
        x = ideal[w]
        g = u(i, j)
        alt = C.zero_form()
        for (g1, g2), c in ctx.delta_monomial(g.terms and next(iter(g.terms))).items():
            coords = C.coords_of_Q(K.Q((C.reps[b] + x) * NCPoly(ctx, {g2: run.F.one})))
            alt = alt + C.from_coords(coords).left_mul(NCPoly(ctx, {g1: c}))
        return _neq(alt, C.basis_form(b) * g)

    run.family("right action does not depend on the basis representative",
               "right ideal property", run.tuples([range(C.dim), range(len(ideal)), _gens(ctx)],
                                                  cap=200), rep_independent)


def suite_su2_ideal(run):
    ctx, F = run.ctx, run.F
    C = calculus(ctx)
    q = F.q
    a, b, c, d = (ctx.u(i, j) for i, j in _gens(ctx))
    one = ctx.one()
    gens1 = {"(a-q)(a-1)": (a - one.scale(q)) * (a - one), "bc": b * c, "b^2": b * b,
             "c^2": c * c, "(a-q)b": (a - one.scale(q)) * b, "(a-q)c": (a - one.scale(q)) * c}
    gens2 = dict(gens1)
    gens2.pop("(a-q)(a-1)")
    gens2["a+qd-(q+1)"] = a + d.scale(q) - one.scale(q + 1)
    for label, x in sorted({**gens1, **gens2}.items()):
        run.check(f"{label} lies in the ideal", "SU_2 example",
                  counit(x) == 0 and not any(C.coset(x)), f"coset {C.coset(x)}")
    D = C.ext_d
    run.check("e+ = a dc - q c da", "SU_2 example",
              C.ep(1) == D(c).left_mul(a) - D(a).left_mul(c).scale(q))
    run.check("e0 = d da - q^-1 b dc", "SU_2 example",
              C.e0() == D(a).left_mul(d) - D(c).left_mul(b).scale(q.invert()))
    run.check("e- = d db - q^-1 b dd", "SU_2 example",
              C.em(1) == D(b).left_mul(d) - D(d).left_mul(b).scale(q.invert()))
    e0, ep, em = C.e0(), C.ep(1), C.em(1)
    qi = q.invert()
    run.check("da = a e0 + b e+", "SU_2 example", D(a) == e0.left_mul(a) + ep.left_mul(b))
    run.check("db = a e- - q^-1 b e0", "SU_2 example",
              D(b) == em.left_mul(a) - e0.left_mul(b).scale(qi))
    run.check("dc = c e0 + d e+", "SU_2 example", D(c) == e0.left_mul(c) + ep.left_mul(d))
    run.check("dd = c e- - q^-1 d e0", "SU_2 example",
              D(d) == em.left_mul(c) - e0.left_mul(d).scale(qi))
    qm1 = q - 1
    rel = {
        "e0 a = q a e0 + (q-1) b e+": (e0 * a, e0.left_mul(a).scale(q) + ep.left_mul(b).scale(qm1)),
        "e0 b = q^-1 b e0 + (q-1) a e-": (e0 * b, e0.left_mul(b).scale(qi) + em.left_mul(a).scale(qm1)),
        "e0 c = q c e0 + (q-1) d e+": (e0 * c, e0.left_mul(c).scale(q) + ep.left_mul(d).scale(qm1)),
        "e0 d = q^-1 d e0 + (q-1) c e-": (e0 * d, e0.left_mul(d).scale(qi) + em.left_mul(c).scale(qm1)),
    }
    for label, (lhs, rhs) in rel.items():
        run.check(label, "SU_2 module relations", lhs == rhs, f"{lhs} != {rhs}")
    run.family("e+ and e- commute with a, b, c, d", "SU_2 module relations",
               [(s, x) for s in "+-" for x in "abcd"],
               lambda t: (lambda e, g: _neq(e * g, e.left_mul(g)))(
                   ep if t[0] == "+" else em, dict(zip("abcd", (a, b, c, d)))[t[1]]))


def suite_su2_3d(run):
    ctx, F = run.ctx, run.F
    C = calculus(ctx)
    q = F.q
    a, b, c, d = (ctx.u(i, j) for i, j in _gens(ctx))
    one = ctx.one()
    wit = {"(a-1)b": (a - one) * b, "(a-1)c": (a - one) * c,
           "a+q^-2 d-(1+q^-2)": a + d.scale(q ** -2) - one.scale(1 + q ** -2)}
    for label, x in wit.items():
        run.check(f"{label} has nonzero bicovariant coset", "3D calculus comparison",
                  not C.bc_coset(x).is_zero())
        run.check(f"{label} is not in the ideal of the quotient calculus",
                  "3D calculus comparison", any(C.coset(x)))
    for label, x in {"bc": b * c, "b^2": b * b, "c^2": c * c}.items():
        run.check(f"{label} lies in both ideals", "3D calculus comparison", C.in_ideal(x))


# ---------------------------------------------------------------------------
# sphere and bundles

def suite_sphere_relations(run):
    ctx, n, F = run.ctx, run.n, run.F
    q = F.q
    z = [None] + [B.z(ctx, i) for i in range(1, n + 1)]
    zs = [None] + [B.zs(ctx, i) for i in range(1, n + 1)]
    rng = range(1, n + 1)
    run.family("z_i z_j = q z_j z_i for i < j", "sphere relations",
               [(i, j) for i in rng for j in rng if i < j],
               lambda p: _neq(z[p[0]] * z[p[1]], (z[p[1]] * z[p[0]]).scale(q)))
    run.family("z_i z*_j = q z*_j z_i for i != j", "sphere relations",
               [(i, j) for i in rng for j in rng if i != j],
               lambda p: _neq(z[p[0]] * zs[p[1]], (zs[p[1]] * z[p[0]]).scale(q)))

    def third(i):
        x = z[i] * zs[i] - zs[i] * z[i]
        for k in range(i + 1, n + 1):
            x = x + (z[k] * zs[k]).scale(q.invert() * F.nu * q ** (2 * (k - i)))
        return _zero(x)

    run.family("z_i z*_i - z*_i z_i + q^-1 nu sum_{k>i} q^(2(k-i)) z_k z*_k = 0",
               "sphere relations", rng, third)
    total = ctx.zero()
    for i in rng:
        total = total + zs[i] * z[i]
    run.check("sum_i z*_i z_i = 1", "sphere relations", total == ctx.one(), str(total))
    if run.budget.mode != "dimension":
        run.family("z_i and z*_i are coinvariant under beta", "sphere as coinvariants",
                   rng, lambda i: None if B.is_coinvariant(B.BETA, z[i])
                   and B.is_coinvariant(B.BETA, zs[i]) else "not coinvariant")
        run.family("deg z_i = -1 and deg z*_i = 1", "line bundle grading", rng,
                   lambda i: _neq((B.line_bundle_degree(z[i]), B.line_bundle_degree(zs[i])), (-1, 1)))


def _fiber_samples(run, tag):
    ctx = run.ctx
    pi = B.bundle_map(tag, ctx)
    tgt = pi.target
    rnd = run.rng
    out = []
    for _ in range(run.samples(20)):
        if tag == B.GAMMA:
            k = rnd.randint(-2, 2)
            h = tgt.det_power(k) + tgt.det_power(rnd.randint(-2, 2)).scale(rnd.randint(1, 3))
        else:
            h = tgt.random_poly(rnd, 2, 2)
        f = ctx.random_poly(rnd, 1, 2)
        out.append((f, h))
    return out


def suite_hopf_galois(run):
    ctx, n, F = run.ctx, run.n, run.F
    gens = _gens(ctx)
    u = ctx.u
    for tag in (B.ALPHA, B.BETA, B.GAMMA):
        pi = B.bundle_map(tag, ctx)

        def hom(ij, pi=pi):
            x = u(*ij)
            lhs = coproduct(pi(x))
            rhs = coproduct(x).map_legs(pi.monomial, pi.monomial, pi.target, pi.target)
            if lhs != rhs:
                return "coproduct"
            if antipode(pi(x)) != pi(antipode(x)):
                return "antipode"
            if counit(pi(x)) != counit(x):
                return "counit"
            return None

        run.family(f"{tag} commutes with coproduct, counit and antipode", "Hopf algebra maps",
                   gens, hom)
    alpha, beta, gamma = (B.bundle_map(t, ctx) for t in (B.ALPHA, B.BETA, B.GAMMA))
    delta = B.hopf_map_by_tag(B.DELTA, n - 1, n)
    zeta = B.hopf_map_by_tag(B.ZETA, n - 1, n)
    run.family("delta o alpha = beta on generators", "factorisation of the bundle maps", gens,
               lambda ij: _neq(delta(alpha(u(*ij))), beta(u(*ij))))
    run.family("zeta o alpha = gamma on generators", "factorisation of the bundle maps", gens,
               lambda ij: _neq(zeta(alpha(u(*ij))), gamma(u(*ij))))
    run.check("alpha(u11) = det^-1", "generator tables", alpha(u(1, 1)) == alpha.target.det_power(-1))
    run.check("gamma(uNN) = t and gamma(u11) = t^-1", "generator tables",
              gamma(u(n, n)) == gamma.target.det_power(1)
              and gamma(u(1, 1)) == gamma.target.det_power(-1))

    run.family("ver(1, u^i_1) = u^i_1 ⊗ det^-1 under alpha", "canonical map",
               range(1, n + 1),
               lambda i: _neq(B.galois_ver(B.ALPHA, ctx.one(), u(i, 1)),
                              TensorPoly.simple(u(i, 1), alpha.target.det_power(-1))))

    # balanced-tensor argument: insert 1 = sum_l z*_l z_l and move z_kl across
    zz = {(k, l): B.zz(ctx, k, l) for k in range(1, n + 1) for l in range(1, n + 1)}
    run.family("z_kl is coinvariant under alpha", "coinvariants", sorted(zz),
               lambda kl: None if B.is_coinvariant(B.ALPHA, zz[kl]) else "not coinvariant")
    run.family("sum_l z_kl z_l = z_k (insertion of the unit)", "sphere relations",
               range(1, n + 1),
               lambda k: _neq(sum((zz[(k, l)] * u(l, 1) for l in range(1, n + 1)), ctx.zero()),
                              u(k, 1)))
    left_i = {}
    for i in range(2, n + 1):
        for l in range(1, n + 1):
            left_i[(i, l)] = sum((antipode(u(i, k)) * zz[(k, l)] for k in range(1, n + 1)),
                                 ctx.zero())
    right_i = {}
    for i in range(2, n + 1):
        for l in range(1, n + 1):
            right_i[(l, i)] = sum((zz[(l, k)] * u(k, i) for k in range(1, n + 1)), ctx.zero())
    rnd = run.rng
    fs = [ctx.random_poly(rnd, 2, 2) for _ in range(run.samples(100))]

    def v_first(f):
        for i in range(2, n + 1):
            t = TensorPoly(ctx, ctx, {})
            for (f1, f2), c in coproduct(f).terms.items():
                s1 = ctx.antipode_monomial(f1)
                m2 = NCPoly(ctx, {f2: F.one})
                for l in range(1, n + 1):
                    lft = s1 * left_i[(i, l)]
                    if lft.is_zero():
                        continue
                    t = t + TensorPoly.simple(lft, u(l, 1) * m2).scale(c)
            if not t.is_zero():
                return f"i={i}: {t}"
        return None

    def v_second(g):
        for i in range(2, n + 1):
            t = TensorPoly(ctx, ctx, {})
            for (g1, g2), c in coproduct(g).terms.items():
                s1 = ctx.antipode_monomial(g1)
                m2 = NCPoly(ctx, {g2: F.one})
                for l in range(1, n + 1):
                    rgt = right_i[(l, i)] * m2
                    if rgt.is_zero():
                        continue
                    t = t + TensorPoly.simple(s1 * antipode(u(1, l)), rgt).scale(c)
            if not t.is_zero():
                return f"i={i}: {t}"
        return None

    run.family("v(1 ⊗ u^i_1 f) = 0 in the balanced tensor product (i >= 2)",
               "inverse of the canonical map", fs, v_first)
    gs = [ctx.random_poly(rnd, 2, 2) for _ in range(run.samples(100))]
    run.family("v(1 ⊗ u^1_i g) = 0 in the balanced tensor product (i >= 2)",
               "inverse of the canonical map", gs, v_second)

    for tag in (B.ALPHA, B.BETA, B.GAMMA):
        samples = _fiber_samples(run, tag)

        def roundtrip(p, tag=tag):
            f, h = p
            back = B.ver(tag, B.galois_ver_inv(tag, f, h))
            return _neq(back, TensorPoly.simple(f, h))

        run.family(f"ver o ver^-1 = id under {tag}", "inverse of the canonical map",
                   samples, roundtrip)


def _kerQ_samples(ctx, degree):
    K = killing_context(ctx)
    W = []
    for dgr in range(degree + 1):
        W.extend(NCPoly(ctx, {(0, w): ctx.F.one}) for w in ctx.standard_words(dgr))
    vecs = []
    for x in W:
        v = {}
        e = counit(x)
        if e:
            v["e"] = e
        for key, c in K.Q(x).as_vector().items():
            v[key] = c
        vecs.append(v)
    out = []
    for comb in kernel_combinations(vecs, ctx.F.one):
        x = ctx.zero()
        for j, c in comb.items():
            x = x + W[j].scale(c)
        out.append(x)
    return out


def suite_adr(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    K = killing_context(ctx)
    alpha = B.bundle_map(B.ALPHA, ctx)
    from .killing import ad_r

    def lands_in_ideal(x):
        t = ad_r(x).map_legs(fr=alpha.monomial, right=alpha.target)
        for mon, left in sorted(t.right_coefficients().items()):
            if counit(left) or any(C.coset(left)):
                return f"coefficient of {mon} not in the ideal: {left}"
        return None

    run.family("(id⊗alpha)Ad_R(D1) lies in I ⊗ U_{N-1}", "principal homogeneous space",
               C.d1, lands_in_ideal)
    if C.d2:
        run.family("(id⊗alpha)Ad_R(D2) lies in I ⊗ U_{N-1}", "principal homogeneous space",
                   C.d2, lands_in_ideal)
    kq = _kerQ_samples(ctx, 2)
    if run.budget.mode == "sample":
        kq = kq[: run.budget.count]
    run.family("(id⊗alpha)Ad_R(ker(Q)+) lies in I ⊗ U_{N-1} on sampled elements",
               "principal homogeneous space", kq, lands_in_ideal)
    run.family("sampled ker(Q)+ elements have zero Q-image and counit", "Killing representation",
               kq, lambda x: None if K.Q(x).is_zero() and not counit(x) else "not in ker(Q)+")
    hi = range(2, n + 1)

    def q_values(k):
        Qm = K.Q(ctx.u(k, k))
        if Qm[0, 0] != F.s(-2):
            return f"Q11 = {Qm[0, 0]}"
        for l in hi:
            if Qm[l - 1, 0] or Qm[0, l - 1]:
                return f"Q{l}1 or Q1{l} nonzero"
        return None

    run.family("Q11(u^k_k) = q^(-2/N), Ql1(u^k_k) = Q1l(u^k_k) = 0 for k, l >= 2",
               "principal homogeneous space", hi, q_values)

    def lambda_sum(ij):
        i, j = ij
        legs = {k: alpha(antipode(ctx.u(i, k)) * ctx.u(k, j)) for k in hi}
        lam = {}
        for k, leg in legs.items():
            for mon, c in leg.terms.items():
                lam.setdefault(mon, {})[k] = c
        for mon, row in sorted(lam.items()):
            if sum(row.values(), F.zero):
                return f"sum over k of lambda for {mon} is {sum(row.values(), F.zero)}"
            x = sum((ctx.u(k, k).scale(c) for k, c in row.items()), ctx.zero())
            if counit(x) or any(C.coset(x)):
                return f"sum_k lambda u^k_k not in the ideal for {mon}"
        return None

    d2 = [(i, j) for i in hi for j in hi if i != j]
    if d2:
        run.family("sum_k lambda_pk = 0 and sum_k lambda_pk u^k_k in I for D2",
                   "principal homogeneous space", d2, lambda_sum)


def _fiber_checks(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    e0 = n - 1
    su11 = antipode(ctx.u(1, 1))
    one = ctx.one()
    base = C.coset(su11 - one)[e0]
    run.check("coset(S(u11) - 1) = -q^(2/N-2) e0", "fiber calculus",
              C.coset(su11 - one) == [(-F.s(2 - 2 * n)) if b == e0 else F.zero
                                       for b in range(C.dim)])
    lam = F.s(2 - 2 * n)
    run.check("coset(S(u11)^2 - S(u11)) = q^(2/N-2) coset(S(u11) - 1)", "fiber calculus",
              C.coset(su11 * su11 - su11) == [lam * x for x in C.coset(su11 - one)])

    def det_fiber(mj):
        m, j = mj
        val = C.coset((su11 - one) * ctx.u(m + 1, j + 1))[e0]
        want = F.s(-2) * base if m == j else F.zero
        return _neq(val, want)

    rng = range(1, n)
    run.family("d(det) u^m_j = q^(-2/N) delta_mj u d(det) via upstairs cosets", "fiber calculus",
               [(m, j) for m in rng for j in rng], det_fiber)
    run.check("d(det) det^-1 = q^(2-2/N) det^-1 d(det) via upstairs cosets", "fiber calculus",
              C.coset((su11 - one) * ctx.u(1, 1))[e0] == F.s(2 * n - 2) * base)


def suite_fiber(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    _fiber_checks(run)
    bound = run.bound or (4 if n == 2 else 2)
    span = B.fiber_ideal_span(B.GAMMA, ctx, bound)
    U1 = B.bundle_map(B.GAMMA, ctx).target
    t = U1.det_power(1)
    lam = F.s(2 - 2 * n)
    run.check(f"t^2 - t = q^(2/N-2)(t - 1) in the fiber ideal (window {bound})", "fiber calculus",
              B.in_span(span, t * t - t - (t - U1.one()).scale(lam)))
    if n == 2:
        run.check("alpha fiber calculus is one-dimensional (window 4)", "fiber calculus",
                  B.fiber_quotient_dimension(B.ALPHA, ctx, 4) == 1)
        run.check("beta fiber ideal is trivial", "fiber calculus",
                  B.fiber_quotient_dimension(B.BETA, ctx, 4) == 0)

    def block_of(b):
        return "-" if b < n - 1 else ("0" if b == n - 1 else "+")

    def stays(tb):
        tag, b = tb
        out = B.induced_coaction(tag, C.reps[b])
        for mon, coords in out.items():
            for k, v in enumerate(coords):
                if v and block_of(k) != block_of(b):
                    return f"leg {mon} leaks into {C.labels[k]}"
        return None

    run.family("induced coactions preserve the e-, e0, e+ blocks", "block decomposition of coactions",
               [(tag, b) for tag in (B.ALPHA, B.BETA) for b in range(C.dim)], stays)
    beta = B.bundle_map(B.BETA, ctx)

    def beta_formula(i):
        got = B.induced_coaction(B.BETA, ctx.u(i, 1))
        want = {}
        for k in range(2, n + 1):
            img = antipode(beta(ctx.u(i, k)))
            coords = C.coset(ctx.u(k, 1))
            for mon, c in img.terms.items():
                acc = want.setdefault(mon, [F.zero] * C.dim)
                for b, v in enumerate(coords):
                    acc[b] = acc[b] + c * v
        want = {m: v for m, v in want.items() if any(v)}
        return _neq(got, want)

    run.family("coaction of the class of u^i_1 is sum_k class(u^k_1) ⊗ S(beta(u^i_k))",
               "block decomposition of coactions", range(2, n + 1), beta_formula)


def suite_sphere_framing(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    s = F.s
    u = ctx.u
    rng = range(1, n + 1)
    z = {i: B.z(ctx, i) for i in rng}
    zs = {i: B.zs(ctx, i) for i in rng}
    one = ctx.one()
    th = C.theta
    run.family("theta(z_i) = e+_{i-1} for i >= 2", "soldering form", range(2, n + 1),
               lambda i: _neq(th(z[i]), C.ep(i - 1)))
    run.check("theta(z_1 - 1) = e0", "soldering form", th(z[1] - one) == C.e0())
    run.family("theta(z*_i) = -q^(1+4/N-2i) e-_{i-1} for i >= 2", "soldering form",
               range(2, n + 1),
               lambda i: _neq(th(zs[i]), C.em(i - 1).scale(-s(n + 4 - 2 * i * n))))
    run.check("theta(z*_1 - 1) = -q^(2/N-2) e0", "soldering form",
              th(zs[1] - one) == C.e0().scale(-s(2 - 2 * n)))
    rnd = run.rng
    xs = []
    for _ in range(run.samples(30)):
        x = ctx.random_poly(rnd, 2, 3)
        xs.append(x - ctx.scalar(counit(x)))
    run.family("theta(x) is the constant form with the coset coordinates of x",
               "soldering form", xs, lambda x: _neq(th(x), C.from_coords(C.coset(x))))

    def rel62(t):
        i, r = t
        out = []
        for e in (C.ep(i), C.em(i)):
            out.append(_neq(e * z[r], e.left_mul(z[r]).scale(s(n - 2))))
            out.append(_neq(e * zs[r], e.left_mul(zs[r]).scale(s(2 - n))))
        return next((x for x in out if x), None)

    run.family("e±_i z_r = q^(1-2/N) z_r e±_i and e±_i z*_r = q^(2/N-1) z*_r e±_i",
               "module relations", [(i, r) for i in range(1, n) for r in rng], rel62)

    def e0z(r):
        rhs = C.e0().left_mul(z[r]).scale(s(2 * n - 2))
        for k in range(2, n + 1):
            rhs = rhs + C.ep(k - 1).left_mul(u(r, k)).scale(s(2 * n - 2) - 1)
        return _neq(C.e0() * z[r], rhs)

    def e0zs(r):
        rhs = C.e0().left_mul(zs[r]).scale(s(2 - 2 * n))
        for k in range(2, n + 1):
            rhs = rhs + C.em(k - 1).left_mul(antipode(u(k, r))).scale(
                s(n + 2) * (s(2) - s(2 * n)) * s(-2 * k * n))
        return _neq(C.e0() * zs[r], rhs)

    run.family("e0 z_r = q^(2-2/N) z_r e0 + (q^(2-2/N) - 1) sum_k u^r_k e+_{k-1}",
               "module relations", rng, e0z)
    run.family("e0 z*_r = q^(2/N-2) z*_r e0 + q^(1+2/N)(q^(2/N) - q^2) sum_k q^(-2k) S(u^k_r) e-_{k-1}",
               "module relations", rng, e0zs)

    def dz(i):
        rhs = C.e0().left_mul(z[i])
        for k in range(1, n):
            rhs = rhs + C.ep(k).left_mul(u(i, k + 1))
        return _neq(C.ext_d(z[i]), rhs)

    def dzs(i):
        rhs = C.e0().left_mul(zs[i]).scale(-s(2 - 2 * n))
        for k in range(1, n):
            rhs = rhs - C.em(k).left_mul(antipode(u(k + 1, i))).scale(s(n + 4) * s(-2 * (k + 1) * n))
        return _neq(C.ext_d(zs[i]), rhs)

    run.family("dz_i = z_i e0 + sum_k u^i_{k+1} e+_k", "exterior derivative on the sphere", rng, dz)
    run.family("dz*_i = -q^(2/N-2) z*_i e0 - q^(1+4/N) sum_k q^(-2(k+1)) S(u^{k+1}_i) e-_k",
               "exterior derivative on the sphere", rng, dzs)
    run.family("deg(z*_i z_j) = 0", "line bundle grading", [(i, j) for i in rng for j in rng],
               lambda p: _neq(B.line_bundle_degree(zs[p[0]] * z[p[1]]), 0))


def _strongness(run, C, rng_hi):
    ctx, n, F = run.ctx, run.n, run.F
    s = F.s
    u = ctx.u
    dzz = {(k, l): C.ext_d(B.zz(ctx, k, l)) for k in range(1, n + 1) for l in range(1, n + 1)}

    def e71(i):
        lhs = C.zero_form()
        for (k, l), w in dzz.items():
            lhs = lhs + w.left_mul(u(l, 1) * antipode(u(i, k))).scale(s(2 * (l - 1) * n))
        return _neq(lhs, C.ep(i - 1).scale(s(2 - n)))

    def e72(i):
        lhs = C.zero_form()
        for (k, l), w in dzz.items():
            lhs = lhs + w.left_mul(u(l, i) * antipode(u(1, k))).scale(s(2 * (l - i) * n))
        return _neq(lhs, C.em(i - 1).scale(-s(3 * n + 2 - 2 * i * n)))

    run.family("sum_kl q^(2(l-1)) u^l_1 S(u^i_k) dz_kl = q^(2/N-1) e+_{i-1}",
               "soldering expansion", rng_hi, e71)
    run.family("sum_kl q^(2(l-i)) u^l_i S(u^1_k) dz_kl = -q^(3+2/N-2i) e-_{i-1}",
               "soldering expansion", rng_hi, e72)


def _sgn(x):
    return (x > 0) - (x < 0)


def suite_cpn_framing(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    s = F.s
    u = ctx.u
    rng = range(1, n + 1)
    hi = range(2, n + 1)
    Z = {(i, j): B.zz(ctx, i, j) for i in rng for j in rng}
    Dl = {k: B.dolbeault(v, "del") for k, v in Z.items()}
    Db = {k: B.dolbeault(v, "delbar") for k, v in Z.items()}

    def coset_vec(b, val):
        return [val if k == b else F.zero for k in range(C.dim)]

    run.family("coset(z_i1) = q^(2/N-1) e+_{i-1}", "soldering values", hi,
               lambda i: _neq(C.coset(Z[(i, 1)]), coset_vec(n - 1 + i - 1, s(2 - n))))
    run.family("coset(z_1i) = -q^(3+2/N-2i) e-_{i-1}", "soldering values", hi,
               lambda i: _neq(C.coset(Z[(1, i)]), coset_vec(i - 2, -s(3 * n + 2 - 2 * i * n))))
    run.family("coset(z*_i) = -q^(1+4/N-2i) coset(u^1_i)", "soldering values", hi,
               lambda i: _neq(C.coset(B.zs(ctx, i)),
                              [-s(n + 4 - 2 * i * n) * x for x in C.coset(u(1, i))]))
    run.family("z_ij for i, j >= 2 and z_11 - 1 have zero coset", "soldering values",
               [(i, j) for i in rng for j in rng if (i >= 2 and j >= 2) or i == j == 1],
               lambda p: None if not any(C.coset(Z[p] - (ctx.one() if p == (1, 1) else ctx.zero())))
               else "nonzero coset")
    _strongness(run, C, hi)

    def delact(p):
        i, j = p
        rhs = C.zero_form()
        rhs2 = C.zero_form()
        for k in hi:
            rhs = rhs + C.ep(k - 1).left_mul(u(i, k) * antipode(u(1, j)))
            rhs2 = rhs2 + C.em(k - 1).left_mul(u(i, 1) * antipode(u(k, j))).scale(s(-2 * k * n))
        return _neq(Dl[p], rhs.scale(s(2 - n))) or _neq(Db[p], rhs2.scale(-s(3 * n + 2)))

    run.family("del z_ij and delbar z_ij closed formulas", "Dolbeault operators",
               sorted(Z), delact)
    run.family("d z_ij has no e0 component", "Dolbeault operators", sorted(Z),
               lambda p: None if C.ext_d(Z[p]).block("0").is_zero() else "e0 component")

    R = lambda i, k, j, l: r_matrix_entry(F, i, k, j, l)
    Rb = lambda i, k, j, l: r_bar_entry(F, i, k, j, l)
    six = list(itertools.product(rng, repeat=6))

    def del_rel(t):
        i, j, r, s_ = t
        out = C.zero_form()
        for a, b, c, d, e, f in six:
            co = R(j, a, r, b)
            if not co:
                continue
            co = co * Rb(a, i, c, d)
            if not co:
                continue
            co = co * R(e, c, f, s_)
            if not co:
                continue
            lam = 2 * (b - j) + _sgn(b - s_) - 1
            out = out + Dl[(f, b)].left_mul(Z[(d, e)]).scale(co * s(n * lam))
        return _neq(Dl[(i, j)] * Z[(r, s_)], out)

    def delbar_rel(t):
        i, j, r, s_ = t
        out = C.zero_form()
        for a, b, c, d, e, f in six:
            co = R(r, a, j, b)
            if not co:
                continue
            co = co * R(s_, a, c, d)
            if not co:
                continue
            co = co * Rb(i, e, d, f)
            if not co:
                continue
            lam = 2 * (b - r) + _sgn(b - i) + 1
            out = out + Db[(f, c)].left_mul(Z[(b, e)]).scale(co * s(n * lam))
        return _neq(Db[(i, j)] * Z[(r, s_)], out)

    tuples = run.tuples([rng] * 4, cap=None if n == 2 else 200)
    run.family("(del z_ij) z_rs R-matrix relation with lambda_bjs = 2(b-j)+sgn(b-s)-1",
               "del relations", tuples, del_rel)
    run.family("(delbar z_ij) z_rs R-matrix relation with exponent 2(b-r)+sgn(b-i)+1",
               "delbar relations", tuples, delbar_rel)

    keys = sorted(Z)
    pairs = run.tuples([keys, keys], cap=None if n == 2 else 60)

    def leibniz(p):
        # products of coinvariants are coinvariant, so the blocks of d(fg)
        # are the Dolbeault parts without re-checking coinvariance
        f, g = Z[p[0]], Z[p[1]]
        w = C.ext_d(f * g)
        if not w.block("0").is_zero():
            return "e0 component"
        for part, which, ops in (("del", "+", Dl), ("delbar", "-", Db)):
            lhs = w.block(which)
            rhs = ops[p[1]].left_mul(f) + C.right_act(ops[p[0]], g)
            if lhs != rhs:
                return f"{part}: {lhs} != {rhs}"
        return None

    run.family("Leibniz rule for del and delbar on products of z_ij", "Dolbeault operators",
               pairs, leibniz)
    if n == 2:
        U1 = B.bundle_map(B.GAMMA, ctx).target
        for (i, j), k in (((2, 1), -2), ((1, 2), 2)):
            got = B.induced_coaction(B.GAMMA, Z[(i, j)])
            want = {U1.det_power(k).sorted_terms()[0][0]: C.coset(Z[(i, j)])}
            run.check(f"coaction on the class of z_{i}{j} is class ⊗ t^{k}", "projective framing",
                      got == want, str(got))


def suite_podles(run):
    ctx, F = run.ctx, run.F
    q = F.q
    a, b, c, d = (ctx.u(i, j) for i, j in _gens(ctx))
    C = calculus(ctx)
    Z = {k: B.zz(ctx, *k) for k in [(1, 2), (2, 1), (2, 2)]}
    D = {k: B.dolbeault(v, "del") for k, v in Z.items()}
    Db = {k: B.dolbeault(v, "delbar") for k, v in Z.items()}
    ep, em = C.ep(1), C.em(1)
    qi = q.invert()
    examples = {
        "del z12 = -q^-1 b^2 e+": (D[(1, 2)], ep.left_mul(b * b).scale(-qi)),
        "del z21 = d^2 e+": (D[(2, 1)], ep.left_mul(d * d)),
        "del z22 = -q^-2 bd e+": (D[(2, 2)], ep.left_mul(b * d).scale(-qi * qi)),
        "delbar z12 = -a^2 e-": (Db[(1, 2)], em.left_mul(a * a).scale(-1)),
        "delbar z21 = q c^2 e-": (Db[(2, 1)], em.left_mul(c * c).scale(q)),
        "delbar z22 = -q^-1 ac e-": (Db[(2, 2)], em.left_mul(a * c).scale(-qi)),
    }
    for label, (lhs, rhs) in examples.items():
        run.check(label, "Podles example", lhs == rhs, f"{lhs} != {rhs}")
    mu = q ** 2 - q ** -2

    def L(zk, w):
        return w.left_mul(Z[zk])

    z12, z21, z22 = (1, 2), (2, 1), (2, 2)
    rels = {
        "(del z12) z12 = q^-2 z12 del z12": (D[z12] * Z[z12], L(z12, D[z12]).scale(q ** -2)),
        "(del z12) z21 = q^2 z21 del z12": (D[z12] * Z[z21], L(z21, D[z12]).scale(q ** 2)),
        "(del z12) z22 = z22 del z12": (D[z12] * Z[z22], L(z22, D[z12])),
        "(del z21) z12 = q^-2 z12 del z21 - mu z21 del z12":
            (D[z21] * Z[z12], L(z12, D[z21]).scale(q ** -2) - L(z21, D[z12]).scale(mu)),
        "(del z21) z21 = q^-2 z21 del z21":
            (D[z21] * Z[z21], L(z21, D[z21]).scale(q ** -2)),
        "(del z21) z22 = q^-4 z22 del z21":
            (D[z21] * Z[z22], L(z22, D[z21]).scale(q ** -4)),
        "(delbar z12) z12 = q^2 z12 delbar z12":
            (Db[z12] * Z[z12], L(z12, Db[z12]).scale(q ** 2)),
        "(delbar z12) z21 = q^2 z21 delbar z12 + mu z12 delbar z21":
            (Db[z12] * Z[z21], L(z21, Db[z12]).scale(q ** 2) + L(z12, Db[z21]).scale(mu)),
        "(delbar z12) z22 = q^4 z22 delbar z12": (Db[z12] * Z[z22], L(z22, Db[z12]).scale(q ** 4)),
        "(delbar z21) z12 = q^-2 z12 delbar z21": (Db[z21] * Z[z12], L(z12, Db[z21]).scale(q ** -2)),
        "(delbar z21) z21 = q^2 z21 delbar z21": (Db[z21] * Z[z21], L(z21, Db[z21]).scale(q ** 2)),
        "(delbar z21) z22 = z22 delbar z21": (Db[z21] * Z[z22], L(z22, Db[z21])),
    }
    for label, (lhs, rhs) in rels.items():
        run.check(label, "Podles calculus relations", lhs == rhs, f"{lhs} != {rhs}")


def suite_connection(run):
    ctx, n, F = run.ctx, run.n, run.F
    C = calculus(ctx)
    s = F.s
    u = ctx.u
    P = B.connection_project
    run.check("Pi(e0) = e0", "connection", P(C.e0()) == C.e0())
    run.family("Pi(e±_i) = 0", "connection", [(x, i) for x in "+-" for i in range(1, n)],
               lambda t: _zero(P(C.ep(t[1]) if t[0] == "+" else C.em(t[1]))))
    rnd = run.rng
    forms = []
    for _ in range(run.samples(20)):
        forms.append(Omega1(C, [ctx.random_poly(rnd, 2, 2) for _ in range(C.dim)]))
    run.family("Pi is idempotent", "connection", forms, lambda w: _neq(P(P(w)), P(w)))
    fs = [ctx.random_poly(rnd, 2, 2) for _ in range(len(forms))]
    run.family("Pi is left linear", "connection", list(zip(fs, forms)),
               lambda p: _neq(P(p[1].left_mul(p[0])), P(p[1]).left_mul(p[0])))
    _strongness(run, C, range(2, n + 1))
    _fiber_checks(run)
    rng = range(1, n + 1)

    def nabla(i):
        zsi = B.zs(ctx, i)
        w = B.covariant_derivative(zsi)
        first = C.zero_form()
        for k in range(2, n + 1):
            first = first - C.em(k - 1).left_mul(antipode(u(k, i))).scale(s(n + 4) * s(-2 * k * n))
        second = C.zero_form()
        for l in rng:
            second = second + B.dolbeault(B.zz(ctx, l, i), "delbar").left_mul(B.zs(ctx, l))
        return _neq(w, first) or _neq(w, second.scale(s(2 - 2 * n)))

    run.family("nabla(z*_i) = -q^(1+4/N) sum_k q^(-2k) S(u^k_i) e-_{k-1} = q^(2/N-2) sum_l z*_l delbar z_li",
               "covariant derivative", rng, nabla)
    run.check("nabla(1) = 0", "covariant derivative", B.covariant_derivative(ctx.one()).is_zero())
    run.family("nabla lands in the e± blocks", "covariant derivative",
               [(x, i) for x in ("z", "zs") for i in rng],
               lambda t: _zero(B.covariant_derivative(getattr(B, t[0])(ctx, t[1])).block("0")))


# ---------------------------------------------------------------------------
# rewriting oracle

def suite_oracle(run):
    ctx, n, F = run.ctx, run.n, run.F
    M = mat(n)
    rnd = run.rng
    det_terms = M._det_m()

    def lift(p):
        return M.from_free({(0, w): c for (_, w), c in p.terms.items()})

    pairs = []
    for k in range(run.samples(100)):
        f = M.random_free_terms(rnd, 3, 3)
        if k % 2 == 0:
            m1 = tuple(rnd.randrange(M.ngens) for _ in range(rnd.randint(0, 1)))
            m2 = tuple(rnd.randrange(M.ngens) for _ in range(rnd.randint(0, 1)))
            g = dict(f)
            c = F.s(rnd.randint(-2, 2)) * rnd.choice([-2, -1, 1, 2])
            for w, cw in det_terms.items():
                _acc(g, (0, m1 + w + m2), c * cw)
            _acc(g, (0, m1 + m2), -c)
        else:
            g = dict(f)
            w = tuple(rnd.randrange(M.ngens) for _ in range(rnd.randint(1, 2)))
            _acc(g, (0, w), F.one)
        pairs.append((f, g))

    def agree(p):
        f, g = p
        su_equal = ctx.from_free(f) == ctx.from_free(g)
        diff = M.from_free(f) - M.from_free(g)
        bound = max(diff.degree(), n)
        return None if su_equal == oracle_ideal_membership(diff, bound) else \
            f"normal form says {su_equal}"

    run.family("SU equality agrees with the bounded ideal oracle", "determinant relation",
               pairs, agree)
    run.family("SU normal forms of random representatives reduce to zero in M modulo det - 1",
               "determinant relation", [p[0] for p in pairs[:20]],
               lambda f: None if oracle_ideal_membership(
                   M.from_free(f) - lift(ctx.from_free(f)),
                   max(n, max((len(w) for _, w in f), default=0))) else "not in ideal")
    polys = [ctx.random_free_terms(rnd, 5, 3) for _ in range(run.samples(200))]

    def confluent(terms):
        a = ctx.from_free(terms)
        b = rewrite_free(ctx, terms, "leftmost")
        c = rewrite_free(ctx, terms, "rightmost")
        return None if a == b == c else "strategies disagree"

    run.family("normal form is independent of the reduction strategy", "determinant relation",
               polys, confluent)
    run.check("nf(det - 1) = 0", "determinant relation",
              ctx.from_free({**{(0, w): c for w, c in det_terms.items()}}) == ctx.one())


# ---------------------------------------------------------------------------
# registry

SUITES = {
    "hopf-axioms": (suite_hopf_axioms, 3),
    "coquasi-triangular": (suite_coquasi, 3),
    "killing-closed-forms": (suite_killing, 3),
    "lambda-basis-dimension": (suite_lambda_dimension, 5),
    "vd-submodule": (suite_vd_submodule, 3),
    "su2-ideal": (suite_su2_ideal, 2),
    "su2-3d-nonisomorphism": (suite_su2_3d, 2),
    "sphere-relations": (suite_sphere_relations, 4),
    "hopf-galois-ver": (suite_hopf_galois, 3),
    "adr-compatibility": (suite_adr, 3),
    "fiber-calculi": (suite_fiber, 3),
    "sphere-framing": (suite_sphere_framing, 3),
    "cpn-framing": (suite_cpn_framing, 3),
    "podles-recovery": (suite_podles, 2),
    "connection": (suite_connection, 3),
    "oracle-consistency": (suite_oracle, 3),
}

N2_ONLY = {"su2-ideal", "su2-3d-nonisomorphism", "podles-recovery"}
DIMENSION_SUITES = {"lambda-basis-dimension", "sphere-relations"}


def run_suite(name, n, seed=0, budget=None, bound=None):
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    if n < 2:
        raise InvalidElementError("suites need N >= 2")
    fn, max_n = SUITES[name]
    if name in N2_ONLY and n != 2:
        raise InvalidElementError(f"{name} is the N = 2 example")
    if n > max_n:
        raise ResourceGuardError(f"{name} is limited to N <= {max_n}")
    budget = budget or default_budget(n)
    if budget.mode == "dimension" and name not in DIMENSION_SUITES:
        raise ResourceGuardError(f"{name} is not a dimension-only suite; pass an explicit budget")
    run = Runner(n, seed, budget, bound)
    t0 = time.perf_counter()
    fn(run)
    elapsed = time.perf_counter() - t0
    checks = sorted(run.checks, key=lambda c: c.description)
    return SuiteReport(name, n, seed, str(budget), checks, elapsed)


def suite_names():
    return sorted(SUITES)
