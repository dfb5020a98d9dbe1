"""The arithmetic exponential exp_delta and the arithmetic Taylor expansion.

``exp_delta`` un-ghosts (x, phi(x), ..., phi^n(x)).  ``p_n_explicit`` rebuilds
the same components from the closed double-sum recursion in P_i and
delta(P_i) alone, so the two are independent routes to the same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb

from .errors import BudgetExceeded, IncompatibleRing, IntegralityError, NotDivisible
from .poly import INF, FrobLift, Poly, PolyAlg, apply_hom, delta_apply, validate_frob_lift
from .witt import ResidueWittVec, WittVec, reduce_witt, unghost_components


@dataclass(frozen=True)
class DeltaContext:
    """An algebra together with a validated Frobenius lift."""

    frobenius: FrobLift

    def __post_init__(self):
        validate_frob_lift(self.frobenius)

    @property
    def alg(self) -> PolyAlg:
        return self.frobenius.alg

    @classmethod
    def identity(cls, B: PolyAlg) -> DeltaContext:
        return cls(FrobLift(B, ()))

    @classmethod
    def standard(cls, alg: PolyAlg) -> DeltaContext:
        return cls(FrobLift.standard(alg))

    @classmethod
    def from_images(cls, alg: PolyAlg, images) -> DeltaContext:
        return cls(FrobLift(alg, tuple(images)))

    def phi(self, x: Poly) -> Poly:
        return apply_hom(self.frobenius, x)

    def delta(self, x: Poly) -> Poly:
        return delta_apply(self.frobenius, x)


def frobenius_orbit(ctx: DeltaContext, x: Poly, n: int) -> list:
    """[x, phi(x), ..., phi^n(x)]."""
    out = [x]
    for _ in range(n):
        out.append(ctx.phi(out[-1]))
    return out


def exp_delta(ctx: DeltaContext, x: Poly, n: int) -> WittVec:
    """(P_0(x), ..., P_n(x)) with ghost vector (x, phi(x), ..., phi^n(x))."""
    x = ctx.alg.coerce(x)
    q = ctx.alg.base.q
    return WittVec(ctx.alg, tuple(unghost_components(frobenius_orbit(ctx, x, n), q)))


def taylor_expand(ctx: DeltaContext, x: Poly, n: int) -> ResidueWittVec:
    """Reduce exp_delta(x) mod pi: the arithmetic Taylor expansion at (pi)."""
    return reduce_witt(exp_delta(ctx, x, n))


@dataclass
class TermTable:
    """L_ij and S_i for one level n, with their pi-adic valuations."""

    n: int
    entries: dict = field(default_factory=dict)  # (i, j) -> (L_ij, v)
    sums: dict = field(default_factory=dict)  # i -> (S_i, v)

    def total(self) -> Poly:
        vals = [s for s, _ in self.sums.values()]
        out = vals[0]
        for s in vals[1:]:
            out = out + s
        return out

    def rows(self) -> list:
        """Diagnostic rows (i, j, valuation, polynomial); j = None marks S_i."""
        out = []
        for i in sorted(self.sums):
            for (ii, j), (L, v) in sorted(self.entries.items()):
                if ii == i:
                    out.append((i, j, _v(v), str(L)))
            s, v = self.sums[i]
            out.append((i, None, _v(v), str(s)))
        return out


def _v(v):
    return "inf" if v == INF else v


def _level_terms(ctx: DeltaContext, Ps: list, n: int, table: TermTable | None = None) -> Poly:
    """P_n from P_0..P_{n-1} by the double sum; optionally record each term."""
    alg = ctx.alg
    ring = alg.base
    q = ring.q
    total = alg.zero()
    for i in range(n):
        N = q ** (n - 1 - i)
        P = Ps[i]
        dP = ctx.delta(P)
        Pq = P**q
        s_i = alg.zero()
        pq_pow = {0: alg.one()}
        dp_pow = {0: alg.one()}
        for j in range(1, N + 1):
            c = ring.s_from_int(comb(N, j))
            if ring.s_is_zero(c):
                L = alg.zero()
            else:
                a = N - j
                if a not in pq_pow:
                    pq_pow[a] = Pq ** a
                dp_pow[j] = dp_pow[j - 1] * dP if j - 1 in dp_pow else dP**j
                numerator = alg.const(c) * pq_pow[a] * dp_pow[j]
                e = i + j - n
                if e >= 0:
                    L = numerator.mul_pi(e)
                else:
                    try:
                        L = numerator.div_pi(-e)
                    except NotDivisible as exc:
                        raise IntegralityError(
                            f"term (i={i}, j={j}) of P_{n} is not pi-integral: "
                            f"numerator valuation {exc.valuation} < {-e}"
                        ) from None
            if table is not None:
                table.entries[(i, j)] = (L, L.v_pi())
            s_i = s_i + L
        if table is not None:
            table.sums[i] = (s_i, s_i.v_pi())
        total = total + s_i
    return total


def explicit_sequence(ctx: DeltaContext, x: Poly, n: int) -> list:
    """[P_0(x), ..., P_n(x)] using only the double-sum recursion."""
    x = ctx.alg.coerce(x)
    Ps = [x]
    for k in range(1, n + 1):
        Ps.append(_level_terms(ctx, Ps, k))
    return Ps


def p_n_explicit(ctx: DeltaContext, x: Poly, n: int) -> Poly:
    if n < 1:
        raise ValueError("the explicit recursion starts at n = 1")
    return explicit_sequence(ctx, x, n)[n]


def term_decomposition(ctx: DeltaContext, x: Poly, n: int) -> TermTable:
    if n < 1:
        raise ValueError("term decomposition needs n >= 1")
    Ps = explicit_sequence(ctx, x, n - 1)
    table = TermTable(n)
    _level_terms(ctx, Ps, n, table)
    return table


def lemma_l1_valuation(ring, m: int, n: int, i: int, j: int) -> int:
    """Closed form for v(L_ij) when v(P_i) = m - i."""
    q, e, h = ring.q, ring.e, ring.h
    v_j = 0
    jj = j
    while jj % ring.p == 0:
        jj //= ring.p
        v_j += 1
    return i - n + (n - 1 - i) * e * h + (m - i) * q ** (n - i) - (m - i) * (q - 1) * j - e * v_j


def lemma_l2_valuation(ring, m: int, n: int, i: int) -> int:
    """Closed form for v(S_i) when v(P_i) = m - i."""
    return ring.q ** (n - 1 - i) * (m - i) - n + i


def is_constant(ctx: DeltaContext, x: Poly) -> bool:
    return ctx.delta(ctx.alg.coerce(x)).is_zero()


def enumerate_constants(ctx: DeltaContext, degree_bounds: dict, budget: int = 1 << 16) -> list:
    """Every x with bounded degrees and delta(x) = 0, by exhaustive search.

    ``degree_bounds`` maps ``"t"`` and each generator name to a maximal degree.
    Equal characteristic only: the coefficient space must be finite.
    """
    alg = ctx.alg
    ring = alg.base
    if ring.kind != "EqualChar":
        raise IncompatibleRing("constants can only be enumerated in equal characteristic")
    t_max = int(degree_bounds.get("t", 0))
    u_max = [int(degree_bounds.get(nm, 0)) for nm in alg.names]
    monos = []
    for exps in product(*[range(d + 1) for d in u_max]):
        for a in range(t_max + 1):
            monos.append(alg.pack(exps, a))
    count = ring.q ** len(monos)
    if count > budget:
        raise BudgetExceeded(f"{count} candidates exceed the budget {budget}", count)
    out = []
    for coeffs in product(range(ring.q), repeat=len(monos)):
        x = Poly(alg, {mono: c for mono, c in zip(monos, coeffs) if c})
        if ctx.delta(x).is_zero():
            out.append(x)
    return out


def candidate_count(ctx: DeltaContext, degree_bounds: dict) -> int:
    alg = ctx.alg
    slots = int(degree_bounds.get("t", 0)) + 1
    for nm in alg.names:
        slots *= int(degree_bounds.get(nm, 0)) + 1
    return alg.base.q**slots
