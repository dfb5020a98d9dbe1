"""Truncated pi-typical Witt vectors W_n(A) and W_n(A_0).

Over the torsion-free algebras used here the ghost map is injective, so
ring operations, the Frobenius and the universal polynomials are computed by
ghosting, operating componentwise and un-ghosting with exact division.
Vectors over the residue algebra A_0 are handled by lifting to A, computing
there and reducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded, NotDivisible, NotInGhostImage, RingMismatch
from .poly import Poly, PolyAlg, compose

UNIVERSAL_BOUND = 4


@dataclass(frozen=True)
class WittVec:
    """(x_0, ..., x_n) in W_n(A)."""

    alg: PolyAlg
    components: tuple

    def __post_init__(self):
        comps = tuple(self.alg.coerce(c) for c in self.components)
        if not comps:
            raise ValueError("a Witt vector needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return len(self.components) - 1

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other):
        return witt_arith(self, other, "add")

    def __sub__(self, other):
        return witt_arith(self, other, "sub")

    def __mul__(self, other):
        return witt_arith(self, other, "mul")

    def __neg__(self):
        return witt_arith(self, None, "neg")

    def __str__(self):
        return format_vector(self.components)

    def to_json(self) -> dict:
        return {"schema": 1, "kind": "witt", "n": self.n, "components": [str(c) for c in self.components]}


@dataclass(frozen=True)
class GhostVec:
    """(w_0, ..., w_n) in the product ring Pi_n A."""

    alg: PolyAlg
    components: tuple

    def __post_init__(self):
        comps = tuple(self.alg.coerce(c) for c in self.components)
        if not comps:
            raise ValueError("a ghost vector needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return len(self.components) - 1

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __add__(self, other):
        _same(self, other)
        return GhostVec(self.alg, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        _same(self, other)
        return GhostVec(self.alg, tuple(a - b for a, b in zip(self.components, other.components)))

    def __mul__(self, other):
        _same(self, other)
        return GhostVec(self.alg, tuple(a * b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return GhostVec(self.alg, tuple(-a for a in self.components))

    def shift(self) -> GhostVec:
        """F_w: drop w_0."""
        if len(self) < 2:
            raise ValueError("ghost shift needs length >= 2")
        return GhostVec(self.alg, self.components[1:])

    def truncate(self) -> GhostVec:
        """T_w: drop the last component."""
        if len(self) < 2:
            raise ValueError("ghost truncation needs length >= 2")
        return GhostVec(self.alg, self.components[:-1])

    def __str__(self):
        return format_vector(self.components)

    def to_json(self) -> dict:
        return {"schema": 1, "kind": "ghost", "n": self.n, "components": [str(c) for c in self.components]}


@dataclass(frozen=True)
class ResidueWittVec:
    """(x_0, ..., x_n) in W_n(A_0); ``alg`` is the residue algebra A_0."""

    alg: PolyAlg
    components: tuple

    def __post_init__(self):
        if self.alg.base.kind != "Residue":
            raise TypeError("ResidueWittVec needs a residue algebra")
        comps = tuple(self.alg.coerce(c) for c in self.components)
        if not comps:
            raise ValueError("a Witt vector needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return len(self.components) - 1

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __str__(self):
        return format_vector(self.components)

    def to_json(self) -> dict:
        return {"schema": 1, "kind": "witt", "n": self.n, "components": [str(c) for c in self.components]}


def format_vector(components) -> str:
    return "(" + ", ".join(str(c) for c in components) + ")"


def _same(x, y):
    if x.alg != y.alg:
        raise RingMismatch(f"{x.alg!r} is not {y.alg!r}")
    if len(x) != len(y):
        raise RingMismatch(f"length {len(x)} does not match length {len(y)}")


# ghost coordinates


def ghost_components(comps, q: int):
    """w_i = sum_{j <= i} pi^j x_j^{q^{i-j}}, i = 0..n."""
    powers = []
    out = []
    for i, x in enumerate(comps):
        powers = [pw**q for pw in powers]
        powers.append(x)
        w = powers[0]
        for j in range(1, i + 1):
            w = w + powers[j].mul_pi(j)
        out.append(w)
    return out


def unghost_components(ws, q: int):
    """Invert ``ghost_components`` by exact division; NotInGhostImage on failure."""
    xs = []
    powers = []
    for i, w in enumerate(ws):
        powers = [pw**q for pw in powers]
        rest = w
        for j, pw in enumerate(powers):
            rest = rest - pw.mul_pi(j)
        try:
            x = rest.div_pi(i)
        except NotDivisible as exc:
            raise NotInGhostImage(i, exc.valuation, i) from None
        xs.append(x)
        powers.append(x)
    return xs


def ghost(x: WittVec) -> GhostVec:
    return GhostVec(x.alg, tuple(ghost_components(x.components, x.alg.base.q)))


def unghost(w: GhostVec) -> WittVec:
    return WittVec(w.alg, tuple(unghost_components(w.components, w.alg.base.q)))


_GHOST_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def witt_arith(x: WittVec, y: WittVec | None, op: str) -> WittVec:
    """Witt vector ring operation, routed through ghost coordinates."""
    q = x.alg.base.q
    gx = ghost_components(x.components, q)
    if op == "neg":
        gz = [-a for a in gx]
    else:
        if op not in _GHOST_OPS:
            raise ValueError(f"unknown operation {op!r}")
        _same(x, y)
        gy = ghost_components(y.components, q)
        f = _GHOST_OPS[op]
        gz = [f(a, b) for a, b in zip(gx, gy)]
    return WittVec(x.alg, tuple(unghost_components(gz, q)))


def witt_zero(alg: PolyAlg, n: int) -> WittVec:
    return WittVec(alg, tuple(alg.zero() for _ in range(n + 1)))


def witt_one(alg: PolyAlg, n: int) -> WittVec:
    return teichmuller(alg.one(), n)


def restrict_T(x):
    """(x_0, ..., x_n) -> (x_0, ..., x_{n-1})."""
    if len(x) < 2:
        raise ValueError("restriction needs length >= 2")
    return type(x)(x.alg, x.components[:-1])


def frobenius_F(x: WittVec) -> WittVec:
    """W_n(A) -> W_{n-1}(A): the map conjugate to the ghost left shift."""
    if len(x) < 2:
        raise ValueError("Frobenius needs length >= 2")
    q = x.alg.base.q
    return WittVec(x.alg, tuple(unghost_components(ghost_components(x.components, q)[1:], q)))


def teichmuller(a: Poly, n: int) -> WittVec:
    """(a, 0, ..., 0) of length n + 1."""
    return WittVec(a.alg, (a,) + tuple(a.alg.zero() for _ in range(n)))


def verschiebung(x):
    """(x_0, ..., x_n) -> (0, x_0, ..., x_n); works on W(A) and W(A_0)."""
    return type(x)(x.alg, (x.alg.zero(),) + tuple(x.components))


# universal polynomials


def universal_algebra(base, n: int) -> PolyAlg:
    names = [f"x{i}" for i in range(n + 1)] + [f"y{i}" for i in range(n + 1)]
    return PolyAlg(base, names)


@lru_cache(maxsize=64)
def _universal(base, n: int, op: str):
    alg = universal_algebra(base, n)
    g = alg.gens()
    x = WittVec(alg, tuple(g[: n + 1]))
    y = WittVec(alg, tuple(g[n + 1 :]))
    return tuple(witt_arith(x, y, op).components)


def universal_polys(base, n: int, op: str, bound: int = UNIVERSAL_BOUND) -> list:
    """S_0..S_n (op='add') or M_0..M_n (op='mul') in B[x_0..x_n, y_0..y_n]."""
    if op not in ("add", "mul", "sub"):
        raise ValueError(f"unknown operation {op!r}")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the configured bound {bound}")
    return list(_universal(base, n, op))


def evaluate_universal(polys, x, y):
    """Plug the components of x and y into universal polynomials.

    Works for W(A) and for W(A_0); in the latter case the polynomials are
    first reduced mod pi.
    """
    _same(x, y)
    images = list(x.components) + list(y.components)
    if len(images) != 2 * len(polys):
        raise RingMismatch("universal polynomials have the wrong length")
    if x.alg.base.kind == "Residue":
        src = polys[0].alg
        polys = [src.to_residue(f) for f in polys]
    return type(x)(x.alg, tuple(compose(f, images, x.alg) for f in polys))


# W_n(A_0)


def residue_witt_arith(x: ResidueWittVec, y: ResidueWittVec | None, op: str, alg: PolyAlg, lifts=None) -> ResidueWittVec:
    """Lift to W_n(A), operate, reduce.  ``lifts`` may supply explicit lifts (for testing)."""
    if y is not None:
        _same(x, y)
    if lifts is None:
        lx = WittVec(alg, tuple(alg.lift(c) for c in x.components))
        ly = None if y is None else WittVec(alg, tuple(alg.lift(c) for c in y.components))
    else:
        lx, ly = lifts
    z = witt_arith(lx, ly, op)
    return reduce_witt(z)


def reduce_witt(x: WittVec) -> ResidueWittVec:
    """W(u): reduce every component mod pi."""
    return ResidueWittVec(x.alg.residue_algebra, tuple(x.alg.to_residue(c) for c in x.components))


def in_ideal_In(x, n: int) -> bool:
    """True iff the first n components vanish."""
    if n > len(x):
        raise ValueError(f"n = {n} exceeds the vector length {len(x)}")
    return all(c.is_zero() for c in x.components[:n])


def structure_map_R(r: Poly, n: int, target: PolyAlg) -> WittVec:
    """exp_delta of r in W_n(B) (identity lift on B), pushed into W_n(A)."""
    from .delta import DeltaContext, exp_delta

    B = target.base.B
    r = B.coerce(r)
    w = exp_delta(DeltaContext.identity(B), r, n)
    return WittVec(target, tuple(target.embed(c) for c in w.components))


def scalar_action(r: Poly, x: WittVec) -> WittVec:
    """r . x for r in B, via the B-algebra structure of W_n(A)."""
    return structure_map_R(r, x.n, x.alg) * x


def parse_vector(text: str, alg: PolyAlg, kind=WittVec):
    """Parse ``"(a, b, c)"``; components are polynomial strings."""
    from .errors import ParseError

    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("a vector must be written as (x_0, ..., x_n)", 0, text)
    body = s[1:-1]
    parts, depth, start = [], 0, 0
    offset = text.index("(") + 1
    for k, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", offset + k, text)
        elif ch == "," and depth == 0:
            parts.append((start, body[start:k]))
            start = k + 1
    parts.append((start, body[start:]))
    comps = []
    for pos, piece in parts:
        try:
            comps.append(alg.parse(piece))
        except ParseError as exc:
            raise ParseError(exc.message, offset + pos + exc.position, text) from None
    return kind(alg, tuple(comps))
