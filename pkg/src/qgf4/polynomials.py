"""Polynomials over GF(2) and GF(4), and the extension fields GF(2^M)
used to split x^n - k into minimal polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .gf4core import SYMBOLS, gf4_conj, gf4_inv, gf4_mul, parse_symbol

# ---------------------------------------------------------------------------
# binary polynomials packed into ints (bit i = coefficient of x^i)


def clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def f2_mod(a: int, b: int) -> int:
    return f2_divmod(a, b)[1]


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, f2_mod(a, b)
    return a


def f2_powmod(a: int, e: int, m: int) -> int:
    out = 1
    a = f2_mod(a, m)
    while e:
        if e & 1:
            out = f2_mod(clmul(out, a), m)
        a = f2_mod(clmul(a, a), m)
        e >>= 1
    return out


@dataclass(frozen=True, order=True)
class F2Poly:
    """Binary polynomial; ``bits`` holds the coefficients, x^0 in bit 0."""

    bits: int

    @classmethod
    def from_string(cls, s: str) -> F2Poly:
        """Coefficient string, lowest degree first (e.g. '1101' = 1 + x + x^3)."""
        bits = 0
        for i, ch in enumerate(s):
            if ch not in "01":
                raise ValueError(f"invalid binary coefficient {ch!r}")
            bits |= (ch == "1") << i
        return cls(bits)

    @classmethod
    def xn_minus_1(cls, n: int) -> F2Poly:
        return cls((1 << n) | 1)

    @property
    def deg(self) -> int:
        return self.bits.bit_length() - 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: F2Poly) -> F2Poly:
        return F2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: F2Poly) -> F2Poly:
        return F2Poly(clmul(self.bits, other.bits))

    def __divmod__(self, other: F2Poly) -> tuple[F2Poly, F2Poly]:
        q, r = f2_divmod(self.bits, other.bits)
        return F2Poly(q), F2Poly(r)

    def __floordiv__(self, other: F2Poly) -> F2Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: F2Poly) -> F2Poly:
        return divmod(self, other)[1]

    def divides(self, other: F2Poly) -> bool:
        return not (other % self).bits

    def gcd(self, other: F2Poly) -> F2Poly:
        return F2Poly(f2_gcd(self.bits, other.bits))

    def cyclic(self, n: int) -> int:
        """Coefficients reduced mod x^n - 1, as an n-bit mask."""
        out = 0
        b = self.bits
        i = 0
        while b:
            if b & 1:
                out ^= 1 << (i % n)
            b >>= 1
            i += 1
        return out

    def star(self, n: int) -> F2Poly:
        """p(x^(n-1)) mod x^n - 1, i.e. the exponents negated mod n."""
        out = 0
        m = self.cyclic(n)
        for i in range(n):
            if (m >> i) & 1:
                out |= 1 << ((-i) % n)
        return F2Poly(out)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.deg + 1))


def cyclic_mul(a: int, b: int, n: int) -> int:
    """Product of two n-bit masks in F2[x]/(x^n - 1)."""
    mask = (1 << n) - 1
    out = 0
    for i in range(n):
        if (b >> i) & 1:
            out ^= ((a << i) | (a >> (n - i))) & mask
    return out


# ---------------------------------------------------------------------------
# GF(4) polynomials


class Gf4Poly:
    """Dense polynomial over GF(4); ``coeffs[i]`` is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_string(cls, s: str) -> Gf4Poly:
        return cls(parse_symbol(ch) for ch in s)

    @classmethod
    def monomial(cls, deg: int, c: int = 3) -> Gf4Poly:
        return cls([0] * deg + [c])

    @classmethod
    def xn_minus_kappa(cls, n: int, kappa: int) -> Gf4Poly:
        return cls([kappa] + [0] * (n - 1) + [3]) if n else cls([kappa ^ 3])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Gf4Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: Gf4Poly) -> bool:
        return (self.deg, self.coeffs) < (other.deg, other.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: Gf4Poly) -> Gf4Poly:
        m = max(len(self.coeffs), len(other.coeffs))
        return Gf4Poly(self[i] ^ other[i] for i in range(m))

    __sub__ = __add__

    def __mul__(self, other: Gf4Poly) -> Gf4Poly:
        if not self.coeffs or not other.coeffs:
            return Gf4Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] ^= gf4_mul(x, y)
        return Gf4Poly(out)

    def scale(self, c: int) -> Gf4Poly:
        return Gf4Poly(gf4_mul(c, x) for x in self.coeffs)

    def conj(self) -> Gf4Poly:
        return Gf4Poly(gf4_conj(x) for x in self.coeffs)

    def __divmod__(self, other: Gf4Poly) -> tuple[Gf4Poly, Gf4Poly]:
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        dq = other.deg
        inv = gf4_inv(other.coeffs[-1])
        q = [0] * max(0, len(r) - dq)
        for i in range(len(r) - 1, dq - 1, -1):
            c = r[i]
            if c:
                f = gf4_mul(c, inv)
                q[i - dq] = f
                for j, y in enumerate(other.coeffs):
                    r[i - dq + j] ^= gf4_mul(f, y)
        return Gf4Poly(q), Gf4Poly(r)

    def __floordiv__(self, other: Gf4Poly) -> Gf4Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Gf4Poly) -> Gf4Poly:
        return divmod(self, other)[1]

    def divides(self, other: Gf4Poly) -> bool:
        return not (other % self).coeffs

    def monic(self) -> Gf4Poly:
        if not self.coeffs:
            return self
        return self.scale(gf4_inv(self.coeffs[-1]))

    def gcd(self, other: Gf4Poly) -> Gf4Poly:
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def __str__(self) -> str:
        return "".join(SYMBOLS[x] for x in self.coeffs) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"Gf4Poly('{self}')"


def product(polys: Iterable[Gf4Poly]) -> Gf4Poly:
    out = Gf4Poly([3])
    for p in polys:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# extension fields


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test for a binary polynomial of degree >= 1."""
    m = f.bit_length() - 1
    if m < 1:
        return False
    x = f2_mod(2, f)  # degree 1 moduli reduce x itself
    if f2_powmod(2, 1 << m, f) != x:
        return False
    for q in _prime_factors(m):
        h = f2_powmod(2, 1 << (m // q), f) ^ x
        if f2_gcd(f, h) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def irreducible(m: int) -> int:
    """Smallest irreducible binary polynomial of degree m."""
    for f in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")


def multiplicative_order(q: int, n: int) -> int:
    """Least e >= 1 with q^e = 1 mod n (n >= 1, gcd(q, n) = 1)."""
    if n == 1:
        return 1
    e, x = 1, q % n
    while x != 1:
        x = x * q % n
        e += 1
        if e > n:
            raise ValueError(f"{q} is not invertible mod {n}")
    return e


class ExtField:
    """GF(2^M) as binary polynomials modulo a fixed irreducible."""

    def __init__(self, m: int) -> None:
        self.m = m
        self.modulus = irreducible(m)
        self.order = (1 << m) - 1

    def mul(self, a: int, b: int) -> int:
        return f2_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return f2_powmod(a, e % self.order, self.modulus)

    def element_of_order(self, n: int) -> int:
        """First element (by integer value) of multiplicative order exactly n."""
        if self.order % n:
            raise ValueError(f"{n} does not divide 2^{self.m} - 1")
        primes = _prime_factors(n)
        for g in range(2, 1 << self.m):
            b = self.pow(g, self.order // n)
            if all(self.pow(b, n // p) != 1 for p in primes):
                return b
        if n == 1:
            return 1
        raise AssertionError("no element of the requested order")


def cyclotomic_cosets(q: int, modulus: int, residues: Sequence[int] | None = None) -> list[list[int]]:
    """Orbits of s -> q s mod modulus, each sorted, ordered by least member."""
    pool = sorted(set(residues)) if residues is not None else list(range(modulus))
    seen: set[int] = set()
    out = []
    for s in pool:
        if s in seen:
            continue
        orbit = []
        t = s
        while t not in orbit:
            orbit.append(t)
            t = t * q % modulus
        seen.update(orbit)
        out.append(sorted(orbit))
    return out
