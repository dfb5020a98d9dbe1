"""Coefficient rings B with a distinguished uniformizer pi.

Three concrete families are supported:

* ``EqualChar``: B = F_q[t], pi = t.
* ``MixedChar``: B = Z, pi = p.
* ``MixedCharRamified``: B = Z[i], pi = 1 + i (p = 2, e = 2).

Polynomials over these rings are sparse dicts ``{monomial: scalar}`` where a
monomial is a packed integer holding one exponent per ``SLOT`` bits.  In
equal characteristic t is an ordinary variable (slot 0) and the scalars are
residue field elements, so pi-adic operations are exponent shifts.  In mixed
characteristic the scalars are integers or Gaussian integers and pi acts on
the scalars.  The ring objects own the inner loops over these dicts.

``ResidueField`` is the coefficient ring of the residue algebra A_0 = A/pi A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import NotDivisible
from .fields import FiniteField

SLOT = 32
SLOT_MASK = (1 << SLOT) - 1

EQUAL = "EqualChar"
MIXED = "MixedChar"
RAMIFIED = "MixedCharRamified"
RESIDUE = "Residue"

INF = math.inf


def v_p_int(c: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if p == 2:
        return (c & -c).bit_length() - 1
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


@dataclass(frozen=True, eq=False)
class CoeffRing:
    """Base class: descriptor plus sparse-term kernels.

    Subclasses set ``kind``, ``p``, ``h``, ``e`` and implement the kernels.
    """

    kind: str = dc_field(init=False)
    p: int = dc_field(init=False)
    h: int = dc_field(init=False, default=1)
    e: int = dc_field(init=False, default=1)

    pi_is_var = False
    characteristic = 0

    @property
    def q(self) -> int:
        return self.p**self.h

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.kind, self.p, self.h)

    @cached_property
    def B(self):
        """The ring B itself, as the polynomial algebra with no generators."""
        from .poly import PolyAlg

        return PolyAlg(self, ())

    def elem(self, value):
        """Build an element of B from a native value or a string."""
        return self.B.coerce(value)

    # generic term kernels; subclasses override the hot ones

    def t_add(self, a: dict, b: dict) -> dict:
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        add, zero = self.s_add, self.s_is_zero
        for m, c in b.items():
            old = out.get(m)
            if old is None:
                out[m] = c
            else:
                s = add(old, c)
                if zero(s):
                    del out[m]
                else:
                    out[m] = s
        return out

    def t_neg(self, a: dict) -> dict:
        neg = self.s_neg
        return {m: neg(c) for m, c in a.items()}

    def t_sub(self, a: dict, b: dict) -> dict:
        return self.t_add(a, self.t_neg(b))

    def t_scale(self, a: dict, c) -> dict:
        if self.s_is_zero(c):
            return {}
        mul, zero = self.s_mul, self.s_is_zero
        out = {}
        for m, x in a.items():
            y = mul(x, c)
            if not zero(y):
                out[m] = y
        return out

    def t_mul(self, a: dict, b: dict) -> dict:
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        add, mul = self.s_add, self.s_mul
        items = list(b.items())
        for ma, ca in a.items():
            for mb, cb in items:
                k = ma + mb
                old = get(k)
                c = mul(ca, cb)
                out[k] = c if old is None else add(old, c)
        zero = self.s_is_zero
        return {k: v for k, v in out.items() if not zero(v)}

    def t_pow_p(self, a: dict) -> dict:
        """a^p via the Frobenius; only valid in characteristic p."""
        p, frob = self.p, self.s_frob
        return {m * p: frob(c) for m, c in a.items()}

    # pi-adic kernels (scalar-pi rings; EqualChar overrides)

    def t_v_pi(self, a: dict):
        best = INF
        for c in a.values():
            v = self.s_v_pi(c)
            if v < best:
                best = v
                if v == 0:
                    break
        return best

    def t_div_pi(self, a: dict, n: int) -> dict:
        if n == 0:
            return dict(a)
        return {m: self.s_div_pi(c, n) for m, c in a.items()}

    def t_mul_pi(self, a: dict, n: int) -> dict:
        if n == 0:
            return dict(a)
        return self.t_scale(a, self.s_pi_pow(n))

    def t_residue(self, a: dict) -> dict:
        res = self.s_residue
        out = {}
        for m, c in a.items():
            r = res(c)
            if r:
                out[m] = r
        return out

    def t_lift(self, a: dict) -> dict:
        sec = self.s_section
        return {m: sec(c) for m, c in a.items()}

    def t_reduce_mod(self, a: dict, N: int) -> dict:
        """Canonical representatives mod pi^(N+1), digit by digit."""
        out = {}
        for m, c in a.items():
            r = self.s_reduce_mod(c, N)
            if not self.s_is_zero(r):
                out[m] = r
        return out

    def s_reduce_mod(self, c, N: int):
        total = self.s_zero()
        for j in range(N + 1):
            d = self.s_section(self.s_residue(c))
            if not self.s_is_zero(d):
                total = self.s_add(total, self.s_mul(d, self.s_pi_pow(j)))
            c = self.s_div_pi(self.s_sub(c, d), 1)
        return total

    def s_sub(self, a, b):
        return self.s_add(a, self.s_neg(b))

    def s_zero(self):
        return self.s_from_int(0)

    # symbols usable in polynomial text: name -> terms dict
    def symbols(self) -> dict:
        return {}


@dataclass(frozen=True, eq=False)
class EqualCharRing(CoeffRing):
    """B = F_q[t], pi = t."""

    pp: int = 2
    hh: int = 1
    modulus: tuple | None = None

    pi_is_var = True

    def __post_init__(self):
        f = FiniteField(self.pp, self.hh, self.modulus)
        object.__setattr__(self, "kind", EQUAL)
        object.__setattr__(self, "p", self.pp)
        object.__setattr__(self, "h", self.hh)
        object.__setattr__(self, "e", 1)
        object.__setattr__(self, "modulus", f.modulus if self.hh > 1 else None)
        object.__setattr__(self, "field", f)

    @property
    def characteristic(self):
        return self.p

    def key(self):
        return (self.kind, self.p, self.h, self.modulus)

    def __repr__(self):
        if self.h == 1:
            return f"EqualCharRing(F_{self.p}[t])"
        return f"EqualCharRing(F_{self.q}[t], modulus={self.modulus})"

    # scalars are F_q elements
    def s_add(self, a, b):
        return self.field.add(a, b)

    def s_neg(self, a):
        return self.field.neg(a)

    def s_mul(self, a, b):
        return self.field.mul(a, b)

    def s_is_zero(self, a):
        return a == 0

    def s_from_int(self, k):
        return k % self.p

    def s_frob(self, a):
        return self.field.frob(a)

    def s_format(self, a):
        return self.field.format(a)

    def symbols(self):
        out = {"t": {1: 1}}
        if self.h > 1:
            out["z"] = {0: self.field.gen}
        return out

    def t_add(self, a, b):
        if self.h > 1:
            return CoeffRing.t_add(self, a, b)
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return out

    def t_mul(self, a, b):
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        items = list(b.items())
        if self.h == 1:
            p = self.p
            for ma, ca in a.items():
                for mb, cb in items:
                    k = ma + mb
                    out[k] = get(k, 0) + ca * cb
            return {k: v % p for k, v in out.items() if v % p}
        add, mul = self.field._add, self.field._mul
        for ma, ca in a.items():
            row = mul[ca]
            for mb, cb in items:
                k = ma + mb
                out[k] = add[get(k, 0)][row[cb]]
        return {k: v for k, v in out.items() if v}

    def t_v_pi(self, a):
        if not a:
            return INF
        return min(m & SLOT_MASK for m in a)

    def t_div_pi(self, a, n):
        if n == 0:
            return dict(a)
        v = self.t_v_pi(a)
        if v < n:
            raise NotDivisible(f"not divisible by t^{n} (valuation {v})", v, n)
        return {m - n: c for m, c in a.items()}

    def t_mul_pi(self, a, n):
        return {m + n: c for m, c in a.items()}

    def t_residue(self, a):
        return {m >> SLOT: c for m, c in a.items() if not m & SLOT_MASK}

    def t_lift(self, a):
        return {m << SLOT: c for m, c in a.items()}

    def t_reduce_mod(self, a, N):
        return {m: c for m, c in a.items() if (m & SLOT_MASK) <= N}


@dataclass(frozen=True, eq=False)
class MixedCharRing(CoeffRing):
    """B = Z, pi = p."""

    pp: int = 2

    def __post_init__(self):
        f = FiniteField(self.pp)
        object.__setattr__(self, "kind", MIXED)
        object.__setattr__(self, "p", self.pp)
        object.__setattr__(self, "h", 1)
        object.__setattr__(self, "e", 1)
        object.__setattr__(self, "field", f)

    def __repr__(self):
        return f"MixedCharRing(Z, p={self.p})"

    def s_add(self, a, b):
        return a + b

    def s_neg(self, a):
        return -a

    def s_sub(self, a, b):
        return a - b

    def s_mul(self, a, b):
        return a * b

    def s_is_zero(self, a):
        return a == 0

    def s_from_int(self, k):
        return k

    def s_format(self, a):
        return str(a)

    def s_v_pi(self, c):
        return INF if c == 0 else v_p_int(c, self.p)

    def s_div_pi(self, c, n):
        d = self.p**n
        qt, r = divmod(c, d)
        if r:
            v = self.s_v_pi(c)
            raise NotDivisible(f"{c} is not divisible by {self.p}^{n}", v, n)
        return qt

    def s_pi_pow(self, n):
        return self.p**n

    def s_residue(self, c):
        return c % self.p

    def s_section(self, r):
        return r

    def s_reduce_mod(self, c, N):
        return c % self.p ** (N + 1)

    def t_add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return out

    def t_neg(self, a):
        return {m: -c for m, c in a.items()}

    def t_scale(self, a, c):
        if c == 0:
            return {}
        return {m: x * c for m, x in a.items()}

    def t_mul(self, a, b):
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        items = list(b.items())
        for ma, ca in a.items():
            for mb, cb in items:
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return {k: v for k, v in out.items() if v}

    def t_v_pi(self, a):
        if not a:
            return INF
        if self.p == 2:
            acc = 0
            for c in a.values():
                acc |= c
            return (acc & -acc).bit_length() - 1
        p = self.p
        best = INF
        for c in a.values():
            if c % p:
                return 0
            v = v_p_int(c, p)
            if v < best:
                best = v
        return best

    def t_div_pi(self, a, n):
        if n == 0:
            return dict(a)
        v = self.t_v_pi(a)
        if v < n:
            raise NotDivisible(f"not divisible by {self.p}^{n} (valuation {v})", v, n)
        d = self.p**n
        return {m: c // d for m, c in a.items()}


@dataclass(frozen=True, eq=False)
class GaussianRing(CoeffRing):
    """B = Z[i], pi = 1 + i; residue field F_2, e = 2.

    Scalars are pairs (a, b) meaning a + b i.
    """

    def __post_init__(self):
        object.__setattr__(self, "kind", RAMIFIED)
        object.__setattr__(self, "p", 2)
        object.__setattr__(self, "h", 1)
        object.__setattr__(self, "e", 2)
        object.__setattr__(self, "field", FiniteField(2))

    def __repr__(self):
        return "GaussianRing(Z[i], pi=1+i)"

    def s_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def s_neg(self, a):
        return (-a[0], -a[1])

    def s_sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def s_mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def s_is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def s_from_int(self, k):
        return (k, 0)

    def s_format(self, a):
        x, y = a
        if y == 0:
            return str(x)
        im = "i" if y == 1 else "-i" if y == -1 else f"{y}*i"
        if x == 0:
            return im
        return f"{x}{im}" if im.startswith("-") else f"{x}+{im}"

    def symbols(self):
        return {"i": {0: (0, 1)}}

    def s_v_pi(self, c):
        a, b = c
        if a == 0 and b == 0:
            return INF
        return v_p_int(a * a + b * b, 2)

    def s_div_pi(self, c, n):
        a, b = c
        # pi^2 = 2i, so strip factors of 2 and powers of i first
        k, r = divmod(n, 2)
        if k:
            d = 1 << k
            if a % d or b % d:
                raise NotDivisible(f"{self.s_format(c)} not divisible by (1+i)^{n}", self.s_v_pi(c), n)
            a, b = a // d, b // d
            # divide by i^k: multiply by (-i)^k
            for _ in range(k % 4):
                a, b = b, -a
        if r:
            if (a + b) % 2:
                raise NotDivisible(f"{self.s_format(c)} not divisible by (1+i)^{n}", self.s_v_pi(c), n)
            a, b = (a + b) // 2, (b - a) // 2
        return (a, b)

    def s_pi_pow(self, n):
        out = (1, 0)
        for _ in range(n):
            out = (out[0] - out[1], out[0] + out[1])
        return out

    def s_residue(self, c):
        return (c[0] + c[1]) % 2

    def s_section(self, r):
        return (r, 0)

    def t_mul(self, a, b):
        if len(a) > len(b):
            a, b = b, a
        re, im = {}, {}
        rget, iget = re.get, im.get
        items = list(b.items())
        for ma, (x, y) in a.items():
            for mb, (u, v) in items:
                k = ma + mb
                re[k] = rget(k, 0) + x * u - y * v
                im[k] = iget(k, 0) + x * v + y * u
        return {k: (r, im[k]) for k, r in re.items() if r or im[k]}

    def t_v_pi(self, a):
        best = INF
        for c in a.values():
            v = self.s_v_pi(c)
            if v < best:
                best = v
                if v == 0:
                    break
        return best

    def t_div_pi(self, a, n):
        if n == 0:
            return dict(a)
        v = self.t_v_pi(a)
        if v < n:
            raise NotDivisible(f"not divisible by (1+i)^{n} (valuation {v})", v, n)
        return {m: self.s_div_pi(c, n) for m, c in a.items()}


@dataclass(frozen=True, eq=False)
class ResidueField(CoeffRing):
    """Coefficients of A_0 = A / pi A: the residue field k = F_q."""

    field: FiniteField = None

    def __post_init__(self):
        object.__setattr__(self, "kind", RESIDUE)
        object.__setattr__(self, "p", self.field.p)
        object.__setattr__(self, "h", self.field.h)
        object.__setattr__(self, "e", 1)

    @property
    def characteristic(self):
        return self.p

    def key(self):
        return (self.kind, self.p, self.h, self.field.modulus)

    def __repr__(self):
        return f"ResidueField(F_{self.q})"

    s_add = EqualCharRing.s_add
    s_neg = EqualCharRing.s_neg
    s_mul = EqualCharRing.s_mul
    s_is_zero = EqualCharRing.s_is_zero
    s_from_int = EqualCharRing.s_from_int
    s_frob = EqualCharRing.s_frob
    s_format = EqualCharRing.s_format
    t_add = EqualCharRing.t_add
    t_mul = EqualCharRing.t_mul

    def symbols(self):
        return {"z": {0: self.field.gen}} if self.h > 1 else {}

    def t_v_pi(self, a):
        raise TypeError("the residue algebra carries no pi-adic valuation")


def ring_from_kind(kind: str, p: int = 2, h: int = 1, modulus=None) -> CoeffRing:
    """Construct a coefficient ring from its descriptor fields."""
    k = kind.lower().replace("_", "").replace("-", "")
    if k in ("equalchar", "equal"):
        return EqualCharRing(p, h, tuple(modulus) if modulus is not None else None)
    if k in ("mixedchar", "mixed"):
        if h != 1:
            raise ValueError("MixedChar requires h = 1")
        return MixedCharRing(p)
    if k in ("mixedcharramified", "ramified"):
        if (p, h) != (2, 1):
            raise ValueError("MixedCharRamified is Z[i] with p = 2, h = 1")
        return GaussianRing()
    raise ValueError(f"unknown ring kind {kind!r}")


# Operations on elements of B.  Elements are Poly values in ring.B.


def v_pi_B(a):
    return a.v_pi()


def exact_div_pi(a, n: int):
    return a.div_pi(n)


def delta_B(a):
    """(a - a^q) / pi, the pi-derivation of B attached to the identity lift."""
    q = a.alg.base.q
    return (a - a**q).div_pi(1)


def residue(a) -> int:
    """Image of an element of B in k, as a packed field element."""
    r = a.alg.base.t_residue(a.terms)
    return r.get(0, 0)


def section(ring: CoeffRing, c: int):
    """Set-theoretic right inverse of ``residue``."""
    if not c:
        return ring.B.zero()
    return ring.B.from_terms(ring.t_lift({0: c}))
