"""Finite fields F_q, q = p^h, with elements packed as integers.

An element with coefficient vector (c_0, ..., c_{h-1}) over F_p, meaning
c_0 + c_1 z + ... + c_{h-1} z^{h-1}, is stored as the integer
sum(c_i * p**i).  For h > 1 the arithmetic goes through precomputed tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

# Irreducible moduli, coefficients low -> high (monic).
MODULI = {
    4: (1, 1, 1),  # z^2 + z + 1
    8: (1, 1, 0, 1),  # z^3 + z + 1
    9: (1, 0, 1),  # z^2 + 1
    16: (1, 1, 0, 0, 1),  # z^4 + z + 1
    25: (2, 0, 1),  # z^2 + 2
    27: (1, 2, 0, 1),  # z^3 + 2z + 1
}

_TABLE_LIMIT = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, m, p):
    """Remainder of a by the monic m over F_p (coefficient lists, low first)."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def is_irreducible(modulus, p: int) -> bool:
    """Brute-force irreducibility of a monic polynomial over F_p."""
    m = _trim(modulus)
    deg = len(m) - 1
    if deg < 1 or m[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod(m, list(low) + [1], p):
                return False
    return True


class FiniteField:
    """The field F_{p^h} = F_p[z]/(modulus)."""

    def __init__(self, p: int, h: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if h < 1:
            raise ValueError("h must be positive")
        self.p = p
        self.h = h
        self.q = p**h
        if h == 1:
            self.modulus = (0, 1)
        else:
            if modulus is None:
                if self.q not in MODULI:
                    raise ValueError(f"no shipped modulus for q = {self.q}; pass one")
                modulus = MODULI[self.q]
            modulus = tuple(int(c) % p for c in _trim(modulus))
            if len(modulus) != h + 1 or not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is not an irreducible degree-{h} polynomial over F_{p}")
            if self.q > _TABLE_LIMIT:
                raise ValueError(f"q = {self.q} too large for table arithmetic")
            self.modulus = modulus
            self._build_tables()

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.h, self.modulus) == (
            other.p,
            other.h,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.h, self.modulus))

    def __repr__(self):
        if self.h == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.h}, {self.modulus})"

    # encoding

    def vector(self, a: int) -> tuple:
        out = []
        for _ in range(self.h):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_vector(self, v) -> int:
        v = [int(c) % self.p for c in v]
        if len(v) > self.h:
            v = _polymod(v, self.modulus, self.p) if self.h > 1 else [sum(v) % self.p]
        return sum(c * self.p**i for i, c in enumerate(v))

    def from_int(self, k: int) -> int:
        return k % self.p

    @property
    def gen(self) -> int:
        """The class of z (for h = 1 there is no z; returns 0)."""
        return self.p if self.h > 1 else 0

    def elements(self):
        return range(self.q)

    # tables for h > 1

    def _build_tables(self):
        q, p = self.q, self.p
        vecs = [self.vector(a) for a in range(q)]
        self._add = [[self.from_vector([x + y for x, y in zip(vecs[a], vecs[b])]) for b in range(q)] for a in range(q)]
        self._neg = [self.from_vector([-x for x in vecs[a]]) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod_ = [0] * (2 * self.h - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prod_[i + j] += x * y
                c = self.from_vector(_polymod(prod_, self.modulus, p))
                mul[a][b] = mul[b][a] = c
        self._mul = mul
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    self._inv[a] = b
                    break

    # arithmetic

    def add(self, a, b):
        if self.h == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.h == 1:
            return -a % self.p
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.h == 1:
            return a * b % self.p
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        if self.h == 1:
            return pow(a, -1, self.p)
        return self._inv[a]

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.h == 1:
            return pow(a, k, self.p)
        r = 1
        while k:
            if k & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            k >>= 1
        return r

    def frob(self, a):
        """a -> a^p."""
        if self.h == 1:
            return a
        return _frob_table(self)[a]

    def format(self, a: int) -> str:
        if self.h == 1:
            return str(a)
        parts = []
        for i, c in enumerate(self.vector(a)):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "+".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _frob_table(field: FiniteField):
    return tuple(field.pow(a, field.p) for a in range(field.q))
