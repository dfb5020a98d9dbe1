"""Seeded property suites for the Witt vector and delta-calculus statements.

Every trial draws from its own ``random.Random`` seeded by
(seed, suite, ring label, trial index), so suites never share sampler state
and any failing trial can be replayed on its own with ``replay_trial``.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .config import DEFAULT_RING_SET, RingSetup, resolve_setup
from .delta import (
    DeltaContext,
    candidate_count,
    enumerate_constants,
    exp_delta,
    explicit_sequence,
    frobenius_orbit,
    is_constant,
    lemma_l1_valuation,
    lemma_l2_valuation,
    p_n_explicit,
    taylor_expand,
    term_decomposition,
)
from .errors import BudgetExceeded, IncompatibleRing, UnknownSuite, WittError
from .poly import FrobLift, Poly, PolyAlg, c_pi
from .rings import SLOT
from .witt import (
    _GHOST_OPS,
    ResidueWittVec,
    WittVec,
    evaluate_universal,
    frobenius_F,
    ghost,
    in_ideal_In,
    residue_witt_arith,
    restrict_T,
    teichmuller,
    unghost,
    universal_polys,
    witt_arith,
)

MONOMIAL_CEILING = 10**6


@dataclass(frozen=True)
class Bounds:
    u_degree: int = 2
    t_degree: int = 2
    coeff: int = 3
    terms: int = 3


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    setup: RingSetup
    seed: int = 1
    trials: int = 20
    n_max: int | None = None
    bounds: Bounds = Bounds()
    enum_bounds: tuple | None = None  # ((name, degree), ...) for constants_descent

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n_max is None:
            object.__setattr__(self, "n_max", default_n_max(self.setup))
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        est = estimate_monomials(self.setup, self.bounds, self.n_max)
        if est > MONOMIAL_CEILING:
            raise BudgetExceeded(
                f"estimated {est} monomials per trial at n = {self.n_max} exceeds {MONOMIAL_CEILING}"
            )

    def echo(self) -> dict:
        out = {
            "suite": self.suite,
            "ring": self.setup.to_dict(),
            "seed": self.seed,
            "trials": self.trials,
            "n_max": self.n_max,
            "bounds": asdict(self.bounds),
        }
        if self.enum_bounds is not None:
            out["enum_bounds"] = dict(self.enum_bounds)
        return out


def default_n_max(setup: RingSetup) -> int:
    return 4 if setup.ring.q == 2 else 3


def estimate_monomials(setup: RingSetup, bounds: Bounds, n: int) -> int:
    """Rough monomial count of the largest component handled in one trial.

    Degrees in the generators grow by the degree of the Frobenius images
    (at least q) per level, t-degrees by q per level.
    """
    q = setup.ring.q
    growth = max([q] + [img.degree() for img in setup.frobenius.images])
    per_gen = bounds.u_degree * growth**n + 1
    est = per_gen ** len(setup.generators)
    if setup.ring.kind == "EqualChar":
        t_img = 0
        for img in setup.frobenius.images:
            for m in img.terms:
                t_img = max(t_img, m & ((1 << SLOT) - 1))
        est *= (max(bounds.t_degree, t_img) + 1) * q**n + 1
    return est


@dataclass
class VerifyReport:
    suite: str
    config: dict
    verdict: str
    trials: int = 0
    passes: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict != "FAIL"

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "verdict": self.verdict,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "config": self.config,
            "note": self.note,
            "wall_time": round(self.wall_time, 4),
        }


# sampling


def trial_rng(seed: int, suite: str, label: str, index: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{label}/{index}")


def _random_scalar(rng: random.Random, ring, bounds: Bounds, unit: bool = False):
    kind = ring.kind
    if kind in ("EqualChar", "Residue"):
        return rng.randrange(1, ring.q)
    if kind == "MixedChar":
        while True:
            c = rng.randint(-bounds.coeff, bounds.coeff)
            if c and (not unit or c % ring.p):
                return c
    while True:
        c = (rng.randint(-bounds.coeff, bounds.coeff), rng.randint(-bounds.coeff, bounds.coeff))
        if c != (0, 0) and (not unit or (c[0] + c[1]) % 2):
            return c


def sample_poly(rng: random.Random, alg: PolyAlg, bounds: Bounds = Bounds(), valuation: int | None = None) -> Poly:
    """Random sparse polynomial; with ``valuation = m`` the result has v_pi exactly m.

    The valuation is forced by making one coefficient a unit and multiplying
    by pi^m.
    """
    ring = alg.base
    k = rng.randint(1, bounds.terms)
    terms = {}
    for idx in range(k):
        exps = [rng.randint(0, bounds.u_degree) for _ in range(alg.m)]
        t = rng.randint(0, bounds.t_degree) if alg.offset else 0
        unit = valuation is not None and idx == 0
        if unit and alg.offset:
            t = 0
        mono = alg.pack(exps, t)
        c = _random_scalar(rng, ring, bounds, unit=unit)
        if unit or mono not in terms:
            terms[mono] = c
    f = Poly(alg, terms)
    if valuation is not None:
        f = f.mul_pi(valuation)
    return f


def sample_witt(rng: random.Random, alg: PolyAlg, n: int, bounds: Bounds = Bounds()) -> WittVec:
    comps = []
    for _ in range(n + 1):
        comps.append(alg.zero() if rng.random() < 0.15 else sample_poly(rng, alg, bounds))
    return WittVec(alg, tuple(comps))


def sample_residue_witt(rng: random.Random, alg: PolyAlg, n: int, bounds: Bounds = Bounds()) -> ResidueWittVec:
    comps = []
    for _ in range(n + 1):
        c = alg.zero() if rng.random() < 0.15 else sample_poly(rng, alg, bounds)
        comps.append(alg.to_residue(c))
    return ResidueWittVec(alg.residue_algebra, tuple(comps))


def sample_constant(rng: random.Random, setup: RingSetup, bounds: Bounds = Bounds()) -> Poly:
    """An element with delta = 0 under the configured lift."""
    alg, ring = setup.alg, setup.ring
    if setup.frobenius.is_standard and alg.m:
        if ring.kind == "EqualChar":
            # F_q-polynomials in the generators
            res = sample_poly(rng, alg, Bounds(bounds.u_degree, 0, bounds.coeff, bounds.terms))
            return res
        # Teichmuller-type monomials
        exps = [rng.randint(0, bounds.u_degree) for _ in range(alg.m)]
        sign = -1 if ring.kind == "MixedChar" and ring.p > 2 and rng.random() < 0.5 else 1
        return alg.from_terms({alg.pack(exps): ring.s_from_int(sign)})
    if ring.kind == "EqualChar":
        return alg.const(rng.randrange(ring.q))
    choices = [0, 1] + ([-1] if ring.kind == "MixedChar" and ring.p > 2 else [])
    return alg.from_int(rng.choice(choices))


# trial predicates; each returns None on success or a failure record


def _fail(inputs: dict, expected, actual) -> dict:
    return {
        "inputs": {k: str(v) for k, v in inputs.items()},
        "expected": str(expected),
        "actual": str(actual),
    }


def _pick_n(rng, cfg, low=1):
    return rng.randint(low, cfg.n_max)


def check_ghost_hom(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    x = sample_witt(rng, alg, n, cfg.bounds)
    y = sample_witt(rng, alg, n, cfg.bounds)
    op = rng.choice(["add", "sub", "mul"])
    z = witt_arith(x, y, op)
    gx, gy = ghost(x), ghost(y)
    expect = {"add": gx + gy, "sub": gx - gy, "mul": gx * gy}[op]
    inputs = {"x": x, "y": y, "op": op}
    if ghost(z) != expect:
        return _fail(inputs, expect, ghost(z))
    if unghost(gx) != x:
        return _fail(inputs, x, unghost(gx))
    if ghost(unghost(expect)) != expect:
        return _fail(inputs, expect, ghost(unghost(expect)))
    if alg.base.kind == "EqualChar" and op != "mul":
        comp = WittVec(alg, tuple(_GHOST_OPS[op](a, b) for a, b in zip(x.components, y.components)))
        if comp != z:
            return _fail(inputs, comp, z)
    return None


def check_frobenius_diagram(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    x = sample_witt(rng, alg, n, cfg.bounds)
    y = sample_witt(rng, alg, n, cfg.bounds)
    inputs = {"x": x, "y": y}
    fx = frobenius_F(x)
    if ghost(fx) != ghost(x).shift():
        return _fail(inputs, ghost(x).shift(), ghost(fx))
    if frobenius_F(x * y) != fx * frobenius_F(y):
        return _fail(inputs, fx * frobenius_F(y), frobenius_F(x * y))
    if frobenius_F(x + y) != fx + frobenius_F(y):
        return _fail(inputs, fx + frobenius_F(y), frobenius_F(x + y))
    if n >= 2 and restrict_T(fx) != frobenius_F(restrict_T(x)):
        return _fail(inputs, frobenius_F(restrict_T(x)), restrict_T(fx))
    return None


def check_universal_poly_oracle(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    op = rng.choice(["add", "mul"])
    x = sample_witt(rng, alg, n, cfg.bounds)
    y = sample_witt(rng, alg, n, cfg.bounds)
    polys = universal_polys(alg.base, n, op, bound=max(cfg.n_max, 4))
    got = evaluate_universal(polys, x, y)
    want = witt_arith(x, y, op)
    if got != want:
        return _fail({"x": x, "y": y, "op": op}, want, got)
    return None


def check_lift_independence(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    op = rng.choice(["add", "mul", "sub"])
    X = sample_residue_witt(rng, alg, n, cfg.bounds)
    Y = sample_residue_witt(rng, alg, n, cfg.bounds)
    inputs = {"x": X, "y": Y, "op": op}

    def other_lift(v):
        return WittVec(alg, tuple(alg.lift(c) + sample_poly(rng, alg, cfg.bounds, valuation=1) for c in v.components))

    first = residue_witt_arith(X, Y, op, alg)
    second = residue_witt_arith(X, Y, op, alg, lifts=(other_lift(X), other_lift(Y)))
    if first != second:
        return _fail(inputs, first, second)
    if op != "sub":
        via_polys = evaluate_universal(universal_polys(alg.base, n, op, bound=max(cfg.n_max, 4)), X, Y)
        if via_polys != first:
            return _fail(inputs, via_polys, first)
    if alg.base.kind == "EqualChar" and op == "add":
        comp = ResidueWittVec(X.alg, tuple(a + b for a, b in zip(X.components, Y.components)))
        if comp != first:
            return _fail(inputs, comp, first)
    return None


def check_teichmuller(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    a = sample_poly(rng, alg, cfg.bounds)
    b = sample_poly(rng, alg, cfg.bounds)
    inputs = {"a": a, "b": b, "n": n}
    ta, tb = teichmuller(a, n), teichmuller(b, n)
    if ta * tb != teichmuller(a * b, n):
        return _fail(inputs, teichmuller(a * b, n), ta * tb)
    if alg.base.kind == "EqualChar" and ta + tb != teichmuller(a + b, n):
        return _fail(inputs, teichmuller(a + b, n), ta + tb)
    if restrict_T(ta) != teichmuller(a, n - 1):
        return _fail(inputs, teichmuller(a, n - 1), restrict_T(ta))
    if frobenius_F(ta) != teichmuller(a ** alg.base.q, n - 1):
        return _fail(inputs, teichmuller(a ** alg.base.q, n - 1), frobenius_F(ta))
    if k == 0 and alg.base.kind != "EqualChar":
        one = teichmuller(alg.one(), n)
        if one + one == teichmuller(alg.from_int(2), n):
            return _fail({"a": 1, "b": 1}, "theta(1) + theta(1) != theta(2)", one + one)
    return None


def check_delta_axioms(cfg, rng, k):
    setup = cfg.setup
    ctx = setup.ctx
    alg, q = setup.alg, setup.ring.q
    f = sample_poly(rng, alg, cfg.bounds)
    g = sample_poly(rng, alg, cfg.bounds)
    inputs = {"f": f, "g": g}
    df, dg = ctx.delta(f), ctx.delta(g)
    lhs = ctx.delta(f + g)
    rhs = df + dg + c_pi(f, g)
    if lhs != rhs:
        return _fail(inputs, rhs, lhs)
    lhs = ctx.delta(f * g)
    rhs = f**q * dg + g**q * df + (df * dg).mul_pi(1)
    if lhs != rhs:
        return _fail(inputs, rhs, lhs)
    if alg.to_residue(ctx.phi(f)) != alg.to_residue(f) ** q:
        return _fail(inputs, alg.to_residue(f) ** q, alg.to_residue(ctx.phi(f)))
    # on B the derivation is (r - r^q) / pi
    r = alg.embed(sample_poly(rng, setup.ring.B, cfg.bounds))
    want = (r - r**q).div_pi(1)
    if ctx.delta(r) != want:
        return _fail({"r": r}, want, ctx.delta(r))
    return None


def check_lemma_one(cfg, rng, k):
    alg = cfg.setup.alg
    m = rng.randint(1, cfg.n_max)
    a = sample_poly(rng, alg, cfg.bounds, valuation=m)
    da = cfg.setup.ctx.delta(a)
    if da.is_zero() or da.v_pi() != m - 1:
        return _fail({"a": a, "v(a)": m}, m - 1, da.v_pi())
    return None


def check_explicit_recursion(cfg, rng, k):
    alg = cfg.setup.alg
    n = _pick_n(rng, cfg)
    m = rng.randint(0, 2)
    x = sample_poly(rng, alg, cfg.bounds, valuation=m)
    ctx = cfg.setup.ctx
    ref = exp_delta(ctx, x, n)
    seq = explicit_sequence(ctx, x, n)
    for i in range(n + 1):
        if seq[i] != ref[i]:
            return _fail({"x": x, "index": i}, ref[i], seq[i])
    return None


def check_lij_valuations(cfg, rng, k):
    setup = cfg.setup
    alg, ring, ctx = setup.alg, setup.ring, setup.ctx
    m = rng.randint(1, cfg.n_max)
    n = rng.randint(1, m)
    x = sample_poly(rng, alg, cfg.bounds, valuation=m)
    ref = exp_delta(ctx, x, n)
    inputs = {"x": x, "m": m, "n": n}
    for i in range(n):
        if ref[i].v_pi() != m - i:
            return _fail(inputs, f"v(P_{i}) = {m - i}", ref[i].v_pi())
    table = term_decomposition(ctx, x, n)
    if table.total() != ref[n]:
        return _fail(inputs, ref[n], table.total())
    for i in range(n):
        N = ring.q ** (n - 1 - i)
        s, vs = table.sums[i]
        if vs != lemma_l2_valuation(ring, m, n, i):
            return _fail(inputs, f"v(S_{i}) = {lemma_l2_valuation(ring, m, n, i)}", vs)
        if ring.kind == "EqualChar":
            if s != table.entries[(i, N)][0]:
                return _fail(inputs, f"S_{i} = L_{i},{N}", s)
            continue
        for j in range(1, N + 1):
            v = table.entries[(i, j)][1]
            want = lemma_l1_valuation(ring, m, n, i, j)
            if v != want:
                return _fail(inputs, f"v(L_{i},{j}) = {want}", v)
    return None


def check_thm_val(cfg, rng, k):
    alg, ctx = cfg.setup.alg, cfg.setup.ctx
    m = 1 + k % cfg.n_max
    x = sample_poly(rng, alg, cfg.bounds, valuation=m)
    ref = exp_delta(ctx, x, m)
    for n in range(m + 1):
        if ref[n].is_zero() or ref[n].v_pi() != m - n:
            return _fail({"x": x, "m": m, "n": n}, m - n, ref[n].v_pi())
    return None


def check_modinj(cfg, rng, k):
    alg, ctx = cfg.setup.alg, cfg.setup.ctx
    n = _pick_n(rng, cfg)
    if k % 2 == 0:
        v = n + 1 + rng.randint(0, 1)
    else:
        v = rng.randint(0, n)
    x = sample_poly(rng, alg, cfg.bounds, valuation=v)
    tx = taylor_expand(ctx, x, n)
    if tx.is_zero() != (x.v_pi() >= n + 1):
        return _fail({"x": x, "n": n}, f"zero iff v(x) = {x.v_pi()} >= {n + 1}", tx)
    return None


def check_topology(cfg, rng, k):
    alg, ctx = cfg.setup.alg, cfg.setup.ctx
    n = _pick_n(rng, cfg)
    v = rng.randint(0, n + 1)
    x = sample_poly(rng, alg, cfg.bounds, valuation=v)
    tx = taylor_expand(ctx, x, n)
    for j in range(1, n + 2):
        if in_ideal_In(tx, j) != (v >= j):
            return _fail({"x": x, "n": n, "j": j}, f"in I_{j} iff v(x) = {v} >= {j}", tx)
    return None


def check_allzero(cfg, rng, k):
    setup = cfg.setup
    ctx = setup.ctx
    n = _pick_n(rng, cfg)
    c = sample_constant(rng, setup, cfg.bounds)
    inputs = {"c": c, "n": n}
    if not is_constant(ctx, c):
        return _fail(inputs, "delta(c) = 0", ctx.delta(c))
    want = teichmuller(c, n)
    got = exp_delta(ctx, c, n)
    if got != want:
        return _fail(inputs, want, got)
    pn = p_n_explicit(ctx, c, n)
    if not pn.is_zero():
        return _fail(inputs, 0, pn)
    tx = taylor_expand(ctx, c, n)
    if any(not comp.is_zero() for comp in tx.components[1:]):
        return _fail(inputs, "components 1..n vanish", tx)
    return None


def _modpip_m_max(cfg):
    return max(1, min(3, cfg.n_max - 1))


def check_modpip(cfg, rng, k):
    setup = cfg.setup
    alg, ring = setup.alg, setup.ring
    if not alg.m:
        # A = B: x = t + t^(m+1) has delta(x) = 1 + ... with valuation 0, so use
        # the generator-free witness x = 1 + t^(m+1) g instead
        return _modpip_constant_ring(cfg, rng, k)
    m = 1 + k % _modpip_m_max(cfg)
    g = sample_poly(rng, alg, cfg.bounds, valuation=0)
    q = ring.q
    images = [gen**q for gen in alg.gens()]
    images[0] = images[0] + g.mul_pi(m + 1)
    ctx = DeltaContext(FrobLift(alg, tuple(images)))
    x = alg.gen(0)
    inputs = {"phi(u)": images[0], "m": m}
    if ctx.delta(x).v_pi() != m:
        return _fail(inputs, f"v(delta u) = {m}", ctx.delta(x).v_pi())
    ref = exp_delta(ctx, x, m + 1)
    for n in range(1, m + 2):
        if ref[n].v_pi() != m - n + 1:
            return _fail(dict(inputs, n=n), m - n + 1, ref[n].v_pi())
    return None


def _modpip_constant_ring(cfg, rng, k):
    setup = cfg.setup
    alg, ctx = setup.alg, setup.ctx
    m = 1 + k % _modpip_m_max(cfg)
    g = sample_poly(rng, alg, cfg.bounds, valuation=0)
    x = alg.from_int(1) + g.mul_pi(m + 1)
    dx = ctx.delta(x)
    inputs = {"x": x, "m": m}
    if dx.v_pi() != m:
        # g may itself be a constant; the hypothesis then fails and nothing is claimed
        if dx.is_zero() or dx.v_pi() > m:
            return None
        return _fail(inputs, f"v(delta x) >= {m}", dx.v_pi())
    ref = exp_delta(ctx, x, m + 1)
    for n in range(1, m + 2):
        if ref[n].v_pi() != m - n + 1:
            return _fail(dict(inputs, n=n), m - n + 1, ref[n].v_pi())
    return None


def check_sadhu_finite(cfg, rng, k):
    setup = cfg.setup
    alg, ctx = setup.alg, setup.ctx
    if k % 2 == 0:
        c = sample_constant(rng, setup, cfg.bounds)
        n = cfg.n_max
        tx = taylor_expand(ctx, c, n)
        if any(not comp.is_zero() for comp in tx.components[1:]):
            return _fail({"c": c}, "components 1..n vanish", tx)
        return None
    m_cap = _modpip_m_max(cfg)
    for _ in range(50):
        target = rng.randint(0, m_cap)
        c = sample_constant(rng, setup, cfg.bounds)
        if alg.to_residue(c).is_zero():
            c = alg.one()
        g = sample_poly(rng, alg, cfg.bounds, valuation=0)
        x = c + g.mul_pi(target + 1) if target or rng.random() < 0.5 else c + g.mul_pi(1)
        dx = ctx.delta(x)
        if dx.is_zero() or alg.to_residue(x).is_zero():
            continue
        m = dx.v_pi()
        if m > m_cap:
            continue
        tx = taylor_expand(ctx, x, m + 1)
        if tx[m + 1].is_zero():
            return _fail({"x": x, "m": m}, f"component {m + 1} nonzero", tx)
        return None
    return None


def default_enum_bounds(setup: RingSetup) -> dict:
    q = setup.ring.q
    if not setup.generators:
        return {"t": {2: 8, 3: 5, 4: 4}.get(q, 2)}
    if len(setup.generators) == 1:
        t, u = {2: (2, 2), 3: (1, 2), 4: (1, 1)}.get(q, (1, 1))
        return {"t": t, setup.generators[0]: u}
    return dict({"t": 1}, **{g: 1 for g in setup.generators})


def expected_constant(setup: RingSetup, x: Poly):
    """Known answer for membership in A^delta, or None when not known."""
    if setup.generators and not setup.frobenius.is_standard:
        return None
    # coefficients in F_q, i.e. no positive power of t anywhere
    return all(not m & ((1 << SLOT) - 1) for m in x.terms)


def expected_constant_count(setup: RingSetup, bounds: dict):
    """|A^delta| within the bounds when known: the F_q-polynomials in the generators."""
    if setup.generators and not setup.frobenius.is_standard:
        return None
    slots = 1
    for nm in setup.generators:
        slots *= int(bounds.get(nm, 0)) + 1
    return setup.ring.q**slots


def run_constants_descent(cfg) -> tuple:
    """Exhaustive suite: one trial per constant found plus aggregate checks."""
    setup = cfg.setup
    alg, ctx = setup.alg, setup.ctx
    bounds = dict(cfg.enum_bounds) if cfg.enum_bounds is not None else default_enum_bounds(setup)
    count = candidate_count(ctx, bounds)
    constants = enumerate_constants(ctx, bounds)
    passes, failures = 0, []

    def record(bad):
        nonlocal passes
        if bad is None:
            passes += 1
        else:
            bad["trial"] = passes + len(failures)
            failures.append(bad)

    for x in constants:
        want = expected_constant(setup, x)
        if want is False:
            record(_fail({"x": x}, "coefficients in F_q", "delta(x) = 0"))
        elif not x.is_zero() and x.v_pi() != 0:
            record(_fail({"x": x}, "A^delta meets pi A only in 0", f"v(x) = {x.v_pi()}"))
        else:
            record(None)
    n_want = expected_constant_count(setup, bounds)
    if n_want is not None and n_want != len(constants):
        record(_fail({"bounds": bounds}, f"{n_want} constants", f"{len(constants)} constants"))
    else:
        record(None)
    # constants inject into A_0
    residues = {}
    bad = None
    for c in constants:
        r = alg.to_residue(c)
        if r in residues:
            bad = _fail({"x": residues[r], "y": c}, "distinct residues", str(r))
            break
        residues[r] = c
    record(bad)
    record(_closure_failure(ctx, constants))
    note = f"{len(constants)} constants among {count} candidates: " + ", ".join(str(c) for c in constants[:16])
    if len(constants) > 16:
        note += ", ..."
    return len(constants) + 3, passes, failures, note


def _closure_failure(ctx, constants):
    """In equal characteristic A^delta is a subring."""
    if ctx.alg.base.kind != "EqualChar":
        return None
    sample = constants[:12]
    for a in sample:
        for b in sample:
            for val in (a + b, a * b):
                if not is_constant(ctx, val):
                    return _fail({"a": a, "b": b}, "closed under + and *", val)
    return None


def check_exp_hom(cfg, rng, k):
    alg, ctx = cfg.setup.alg, cfg.setup.ctx
    n = _pick_n(rng, cfg)
    x = sample_poly(rng, alg, cfg.bounds)
    y = sample_poly(rng, alg, cfg.bounds)
    inputs = {"x": x, "y": y, "n": n}
    ex, ey = exp_delta(ctx, x, n), exp_delta(ctx, y, n)
    if exp_delta(ctx, x + y, n) != ex + ey:
        return _fail(inputs, ex + ey, exp_delta(ctx, x + y, n))
    if exp_delta(ctx, x * y, n) != ex * ey:
        return _fail(inputs, ex * ey, exp_delta(ctx, x * y, n))
    lhs = exp_delta(ctx, ctx.phi(x), n - 1)
    rhs = frobenius_F(ex)
    if lhs != rhs:
        return _fail(inputs, rhs, lhs)
    orbit = frobenius_orbit(ctx, x, n)
    if list(ghost(ex).components) != orbit:
        return _fail(inputs, orbit, ghost(ex))
    return None


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable | None
    equal_char_only: bool = False
    exhaustive: Callable | None = None


SUITES = {
    s.name: s
    for s in [
        Suite("ghost_hom", check_ghost_hom),
        Suite("frobenius_diagram", check_frobenius_diagram),
        Suite("universal_poly_oracle", check_universal_poly_oracle),
        Suite("lift_independence", check_lift_independence),
        Suite("teichmuller", check_teichmuller),
        Suite("delta_axioms", check_delta_axioms),
        Suite("lemma_one", check_lemma_one),
        Suite("explicit_recursion", check_explicit_recursion),
        Suite("lij_valuations", check_lij_valuations),
        Suite("thm_val", check_thm_val),
        Suite("modinj", check_modinj),
        Suite("topology", check_topology),
        Suite("allzero", check_allzero),
        Suite("modpip", check_modpip, equal_char_only=True),
        Suite("sadhu_finite", check_sadhu_finite, equal_char_only=True),
        Suite("constants_descent", None, equal_char_only=True, exhaustive=run_constants_descent),
        Suite("exp_hom", check_exp_hom),
    ]
}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def _check_compatible(suite: Suite, setup: RingSetup):
    if suite.equal_char_only and setup.ring.kind != "EqualChar":
        raise IncompatibleRing(f"suite {suite.name} requires an equal-characteristic ring, got {setup.label}")


def run_trial(cfg: SuiteConfig, k: int):
    """Run trial k of a sampled suite; returns None or a failure record."""
    suite = get_suite(cfg.suite)
    rng = trial_rng(cfg.seed, cfg.suite, cfg.setup.label, k)
    try:
        bad = suite.check(cfg, rng, k)
    except (WittError, ArithmeticError, ValueError) as exc:
        bad = _fail({}, "no exception", f"{type(exc).__name__}: {exc}")
    if bad is not None:
        bad["trial"] = k
    return bad


replay_trial = run_trial


def _run_chunk(args):
    cfg, indices = args
    return [(k, run_trial(cfg, k)) for k in indices]


def run_suite(cfg: SuiteConfig, workers: int = 1) -> VerifyReport:
    suite = get_suite(cfg.suite)
    _check_compatible(suite, cfg.setup)
    start = time.perf_counter()
    if suite.exhaustive is not None:
        trials, passes, failures, note = suite.exhaustive(cfg)
    else:
        note = ""
        results = []
        if workers > 1:
            from concurrent.futures import ProcessPoolExecutor

            chunks = [(cfg, list(range(w, cfg.trials, workers))) for w in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                for part in pool.map(_run_chunk, chunks):
                    results.extend(part)
            results.sort(key=lambda kv: kv[0])
        else:
            results = [(k, run_trial(cfg, k)) for k in range(cfg.trials)]
        failures = [bad for _, bad in results if bad is not None]
        trials = cfg.trials
        passes = trials - len(failures)
    return VerifyReport(
        suite=cfg.suite,
        config=cfg.echo(),
        verdict="PASS" if not failures else "FAIL",
        trials=trials,
        passes=passes,
        failures=failures,
        wall_time=time.perf_counter() - start,
        note=note,
    )


# default trial counts for `verify all`; sized to keep the full run well under a minute
DEFAULT_TRIALS = 50


def run_all(rings=DEFAULT_RING_SET, seed: int = 1, trials: int | None = None, n_max: int | None = None,
            suites=None, workers: int = 1) -> list:
    """Every suite on every ring; incompatible pairs are SKIPPED, errors become FAIL."""
    reports = []
    for ring in rings:
        setup = resolve_setup(ring)
        for name in suites or SUITES:
            suite = get_suite(name)
            try:
                cfg = SuiteConfig(name, setup, seed=seed, trials=trials or DEFAULT_TRIALS, n_max=n_max)
                _check_compatible(suite, setup)
            except IncompatibleRing as exc:
                reports.append(VerifyReport(name, {"suite": name, "ring": setup.to_dict(), "seed": seed},
                                            "SKIPPED", note=str(exc)))
                continue
            except WittError as exc:
                reports.append(VerifyReport(name, {"suite": name, "ring": setup.to_dict(), "seed": seed},
                                            "FAIL", failures=[{"error": str(exc)}], note=str(exc)))
                continue
            try:
                reports.append(run_suite(cfg, workers=workers))
            except Exception as exc:  # one broken suite must not abort the batch
                reports.append(VerifyReport(name, cfg.echo(), "FAIL",
                                            failures=[{"error": f"{type(exc).__name__}: {exc}"}],
                                            note="suite raised"))
    return reports


def format_table(reports) -> str:
    rows = [("suite", "ring", "verdict", "passed", "time")]
    for r in reports:
        ring = r.config.get("ring", {}).get("label", "")
        rows.append((r.suite, ring, r.verdict, f"{r.passes}/{r.trials}", f"{r.wall_time:.2f}s"))
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    for r in reports:
        for bad in r.failures[:3]:
            lines.append(f"  FAIL {r.suite}: {bad}")
    return "\n".join(lines)
