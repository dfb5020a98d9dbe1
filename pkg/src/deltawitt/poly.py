"""Polynomial algebras A = B[u_1, ..., u_m], Frobenius lifts and the pi-derivation.

``Poly`` values are immutable.  Monomials are packed integers (see
``rings``); in equal characteristic slot 0 holds the power of t and the
generators start at slot 1, otherwise the generators start at slot 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import NotAFrobeniusLift, ParseError, RingMismatch
from .rings import INF, SLOT, SLOT_MASK, CoeffRing, ResidueField

RESERVED = {"t", "z", "i"}
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PolyAlg:
    """Free polynomial algebra over a coefficient ring (or over k for A_0)."""

    def __init__(self, base: CoeffRing, names=("u",)):
        if isinstance(names, str):
            names = (names,)
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        for nm in names:
            if not _NAME_RE.match(nm) or nm in RESERVED:
                raise ValueError(f"invalid generator name {nm!r}")
        self.base = base
        self.names = names
        self.m = len(names)
        self.offset = 1 if base.pi_is_var else 0
        self._hash = hash((base, names))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PolyAlg) and self.base == other.base and self.names == other.names
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyAlg({self.base!r}, {self.names})"

    def describe(self) -> str:
        b = self.base
        if b.kind == "EqualChar":
            core = f"F_{b.q}[t]"
        elif b.kind == "MixedChar":
            core = "Z"
        elif b.kind == "MixedCharRamified":
            core = "Z[i]"
        else:
            core = f"F_{b.q}"
        return core + (f"[{','.join(self.names)}]" if self.names else "")

    # monomials

    def pack(self, exps, t_exp: int = 0) -> int:
        if len(exps) != self.m:
            raise ValueError("exponent vector has the wrong length")
        mono = t_exp if self.offset else 0
        for k, e in enumerate(exps):
            if e < 0:
                raise ValueError("negative exponent")
            mono |= e << (SLOT * (k + self.offset))
        return mono

    def unpack(self, mono: int) -> tuple:
        """Generator exponents of a packed monomial (t excluded)."""
        mono >>= SLOT * self.offset
        out = []
        for _ in range(self.m):
            out.append(mono & SLOT_MASK)
            mono >>= SLOT
        return tuple(out)

    # constructors

    def from_terms(self, terms: dict) -> Poly:
        return Poly(self, terms)

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.from_int(1)

    def from_int(self, k: int) -> Poly:
        c = self.base.s_from_int(k)
        return Poly(self, {} if self.base.s_is_zero(c) else {0: c})

    def const(self, c) -> Poly:
        """Constant from a raw scalar."""
        return Poly(self, {} if self.base.s_is_zero(c) else {0: c})

    def gen(self, which=0) -> Poly:
        k = self.names.index(which) if isinstance(which, str) else which
        return Poly(self, {1 << (SLOT * (k + self.offset)): self.base.s_from_int(1)})

    def gens(self):
        return [self.gen(k) for k in range(self.m)]

    def pi(self) -> Poly:
        return self.one().mul_pi(1)

    def embed(self, b: Poly) -> Poly:
        """Image of an element of B (a constant) in this algebra."""
        if b.alg.base != self.base or b.alg.m:
            raise RingMismatch("only elements of the base ring can be embedded")
        return Poly(self, dict(b.terms))

    def coerce(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.alg == self:
                return value
            if value.alg.m == 0 and value.alg.base == self.base:
                return self.embed(value)
            raise RingMismatch(f"{value.alg!r} is not {self!r}")
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return parse_poly(value, self)
        kind = self.base.kind
        if kind == "MixedCharRamified" and isinstance(value, tuple) and len(value) == 2:
            return self.const((int(value[0]), int(value[1])))
        if kind == "EqualChar" and isinstance(value, (list, tuple)):
            f = self.base.field
            return Poly(self, {a: c for a, c in enumerate(int(x) % f.q for x in value) if c})
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def parse(self, text: str) -> Poly:
        return parse_poly(text, self)

    @cached_property
    def residue_algebra(self) -> PolyAlg:
        """A_0 = A / pi A."""
        if self.base.kind == "Residue":
            raise TypeError("already a residue algebra")
        return PolyAlg(ResidueField(self.base.field), self.names)

    def to_residue(self, f: Poly) -> Poly:
        self._check(f)
        return Poly(self.residue_algebra, self.base.t_residue(f.terms))

    def lift(self, g: Poly) -> Poly:
        if g.alg != self.residue_algebra:
            raise RingMismatch("not an element of this algebra's residue algebra")
        return Poly(self, self.base.t_lift(g.terms))

    def _check(self, f: Poly):
        if f.alg is not self and f.alg != self:
            raise RingMismatch(f"{f.alg!r} is not {self!r}")


class Poly:
    """Immutable sparse polynomial."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: PolyAlg, terms: dict):
        self.alg = alg
        self.terms = terms
        self._hash = None

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.alg is other.alg or self.alg == other.alg) and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self.alg.from_int(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alg, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # arithmetic

    def _other(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.alg is self.alg or other.alg == self.alg:
                return other
            raise RingMismatch(f"{other.alg!r} is not {self.alg!r}")
        if isinstance(other, int) and not isinstance(other, bool):
            return self.alg.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Poly(self.alg, self.alg.base.t_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.alg, self.alg.base.t_neg(self.terms))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Poly(self.alg, self.alg.base.t_sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Poly(self.alg, {})
        return Poly(self.alg, self.alg.base.t_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        ring = self.alg.base
        if k == 0:
            return self.alg.one()
        if k == 1:
            return self
        if ring.characteristic:
            # x^k = prod over base-p digits d_i of (x^{p^i})^{d_i}
            p = ring.p
            result = None
            power = self.terms
            while k:
                k, d = divmod(k, p)
                for _ in range(d):
                    result = power if result is None else ring.t_mul(result, power)
                if k:
                    power = ring.t_pow_p(power)
            return Poly(self.alg, result)
        result = None
        base = self.terms
        while True:
            if k & 1:
                result = base if result is None else ring.t_mul(result, base)
            k >>= 1
            if not k:
                break
            base = ring.t_mul(base, base)
        return Poly(self.alg, result)

    def frobenius(self) -> Poly:
        """x^p, computed coefficientwise; characteristic p only."""
        ring = self.alg.base
        if not ring.characteristic:
            raise TypeError("frobenius() needs characteristic p")
        return Poly(self.alg, ring.t_pow_p(self.terms))

    # pi-adic structure

    def v_pi(self):
        """Content valuation: minimum pi-adic valuation of the coefficients."""
        return self.alg.base.t_v_pi(self.terms)

    def div_pi(self, n: int) -> Poly:
        return Poly(self.alg, self.alg.base.t_div_pi(self.terms, n))

    def mul_pi(self, n: int) -> Poly:
        if n == 0 or not self.terms:
            return self
        return Poly(self.alg, self.alg.base.t_mul_pi(self.terms, n))

    # inspection

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(self.alg.unpack(m)) for m in self.terms)

    def coefficients(self) -> dict:
        """Map generator exponents -> coefficient (an element of B, or of k for A_0)."""
        alg = self.alg
        base_alg = alg.base.B if alg.base.kind != "Residue" else PolyAlg(alg.base, ())
        groups = {}
        for m, c in self.terms.items():
            exps = alg.unpack(m)
            t = m & SLOT_MASK if alg.offset else 0
            groups.setdefault(exps, {})[t] = c
        return {e: Poly(base_alg, g) for e, g in groups.items()}

    @property
    def value(self):
        """Native value of a constant: int, (a, b) for Z[i], or t-coefficients."""
        if self.alg.m:
            raise TypeError("value is only defined for elements of B")
        kind = self.alg.base.kind
        if kind == "MixedChar":
            return self.terms.get(0, 0)
        if kind == "MixedCharRamified":
            return self.terms.get(0, (0, 0))
        if kind == "Residue":
            return self.terms.get(0, 0)
        if not self.terms:
            return ()
        top = max(self.terms)
        return tuple(self.terms.get(a, 0) for a in range(top + 1))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


# formatting


def _has_sum(s: str) -> bool:
    return "+" in s[1:] or "-" in s[1:]


def _format_coeff(alg: PolyAlg, tpart: dict) -> str:
    """Coefficient of one generator monomial: an element of B (or k)."""
    ring = alg.base
    if not alg.offset:
        return ring.s_format(tpart[0])
    parts = []
    for a in sorted(tpart):
        s = ring.s_format(tpart[a])
        if a == 0:
            parts.append(s)
            continue
        mono = "t" if a == 1 else f"t^{a}"
        if s == "1":
            parts.append(mono)
        elif _has_sum(s):
            parts.append(f"({s})*{mono}")
        else:
            parts.append(f"{s}*{mono}")
    return "+".join(parts)


def format_poly(f: Poly) -> str:
    """Canonical text; generator monomials in descending graded-lex order."""
    alg = f.alg
    if not f.terms:
        return "0"
    groups = {}
    for m, c in f.terms.items():
        exps = alg.unpack(m)
        t = m & SLOT_MASK if alg.offset else 0
        groups.setdefault(exps, {})[t] = c
    out = []
    for exps in sorted(groups, key=lambda e: (sum(e), e), reverse=True):
        coeff = _format_coeff(alg, groups[exps])
        mono = "*".join(
            nm if e == 1 else f"{nm}^{e}" for nm, e in zip(alg.names, exps) if e
        )
        if not mono:
            term = coeff
        elif coeff == "1":
            term = mono
        elif coeff == "-1":
            term = "-" + mono
        elif _has_sum(coeff):
            term = f"({coeff})*{mono}"
        else:
            term = f"{coeff}*{mono}"
        if not out:
            out.append(term)
        elif term.startswith("-"):
            out.append(" - " + term[1:])
        else:
            out.append(" + " + term)
    return "".join(out)


# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: PolyAlg):
        self.text = text
        self.alg = alg
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbols = alg.base.symbols()

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind in ("name", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.fail("exponent must be a non-negative integer literal")
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.alg.from_int(int(val))
        if kind == "name":
            if val in self.alg.names:
                return self.alg.gen(val)
            if val in self.symbols:
                return Poly(self.alg, dict(self.symbols[val]))
            self.fail(f"unknown symbol {val!r}", tok)
        if kind == "(":
            value = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return value
        self.fail(f"unexpected {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_poly(text: str, alg: PolyAlg) -> Poly:
    """Parse polynomial text such as ``"t^2*u1 + (1+z)*u2"`` into ``alg``."""
    return _Parser(text, alg).parse()


# homomorphisms


def compose(f: Poly, images, target: PolyAlg | None = None) -> Poly:
    """Substitute ``images[k]`` for the k-th generator; B-coefficients map identically."""
    src = f.alg
    images = list(images)
    if len(images) != src.m:
        raise ValueError(f"need {src.m} images, got {len(images)}")
    if target is None:
        target = images[0].alg if images else src
    for img in images:
        target._check(img)
    if target.base != src.base or target.offset != src.offset:
        raise RingMismatch("compose needs a common coefficient ring")
    ring = target.base
    if not f.terms:
        return target.zero()
    one = ring.s_from_int(1)

    groups = {}
    for m, c in f.terms.items():
        t = m & SLOT_MASK if src.offset else 0
        groups.setdefault(src.unpack(m), {})[t] = c

    # monomial images with unit coefficient: substitute exponents directly
    if all(len(img.terms) == 1 and next(iter(img.terms.values())) == one for img in images):
        monos = [next(iter(img.terms)) for img in images]
        out = {}
        for exps, tpart in groups.items():
            shift = sum(e * mm for e, mm in zip(exps, monos))
            for a, c in tpart.items():
                key = a + shift
                if key in out:
                    c = ring.s_add(out[key], c)
                    if ring.s_is_zero(c):
                        del out[key]
                        continue
                out[key] = c
        return Poly(target, out)

    cache = [{0: {0: one}} for _ in images]

    def power(k, e):
        table = cache[k]
        if e not in table:
            # build from the largest cached exponent below e
            below = max(x for x in table if x < e)
            acc = table[below]
            step = images[k].terms
            for x in range(below + 1, e + 1):
                acc = ring.t_mul(acc, step)
                table[x] = acc
        return table[e]

    acc = {}
    for exps, tpart in groups.items():
        prod = tpart
        for k, e in enumerate(exps):
            if e:
                prod = ring.t_mul(prod, power(k, e))
        acc = ring.t_add(acc, prod) if acc else prod
    return Poly(target, acc)


@dataclass(frozen=True)
class FrobLift:
    """A lift of Frobenius phi on A, given by the images of the generators."""

    alg: PolyAlg
    images: tuple

    def __post_init__(self):
        images = tuple(self.alg.coerce(x) for x in self.images)
        if len(images) != self.alg.m:
            raise ValueError(f"need {self.alg.m} generator images, got {len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def standard(cls, alg: PolyAlg) -> FrobLift:
        """phi(u_k) = u_k^q."""
        q = alg.base.q
        return cls(alg, tuple(g**q for g in alg.gens()))

    @property
    def is_standard(self) -> bool:
        q = self.alg.base.q
        return all(img == g**q for img, g in zip(self.images, self.alg.gens()))

    def validate(self) -> None:
        validate_frob_lift(self)

    def __call__(self, f: Poly) -> Poly:
        return apply_hom(self, f)

    def delta(self, f: Poly) -> Poly:
        return delta_apply(self, f)

    def describe(self) -> dict:
        return {nm: str(img) for nm, img in zip(self.alg.names, self.images)}


def apply_hom(phi: FrobLift, f: Poly) -> Poly:
    phi.alg._check(f)
    if not phi.alg.m:
        return f
    return compose(f, phi.images, phi.alg)


def validate_frob_lift(phi: FrobLift) -> None:
    q = phi.alg.base.q
    for nm, img, g in zip(phi.alg.names, phi.images, phi.alg.gens()):
        diff = img - g**q
        if diff.v_pi() < 1:
            raise NotAFrobeniusLift(nm, str(phi.alg.to_residue(diff)))


def delta_apply(phi: FrobLift, f: Poly) -> Poly:
    """(phi(f) - f^q) / pi."""
    q = phi.alg.base.q
    return (apply_hom(phi, f) - f**q).div_pi(1)


def c_pi(x: Poly, y: Poly) -> Poly:
    """Carry term of the additivity axiom: 0 in equal characteristic,
    (x^q + y^q - (x+y)^q) / pi otherwise."""
    ring = x.alg.base
    if ring.pi_is_var:
        return x.alg.zero()
    q = ring.q
    return (x**q + y**q - (x + y) ** q).div_pi(1)


def to_residue(f: Poly) -> Poly:
    return f.alg.to_residue(f)


def lift(g: Poly, alg: PolyAlg) -> Poly:
    return alg.lift(g)


def reduce_mod(f: Poly, N: int) -> Poly:
    """Canonical representative of f in A_N = A / pi^(N+1) A."""
    return Poly(f.alg, f.alg.base.t_reduce_mod(f.terms, N))


__all__ = [
    "INF",
    "PolyAlg",
    "Poly",
    "FrobLift",
    "apply_hom",
    "validate_frob_lift",
    "delta_apply",
    "c_pi",
    "compose",
    "to_residue",
    "lift",
    "reduce_mod",
    "parse_poly",
    "format_poly",
]
