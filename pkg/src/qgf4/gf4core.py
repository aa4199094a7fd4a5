"""GF(4) scalars and the binary symplectic picture of GF(4)^n.

Elements of GF(4) are stored as 2-bit integers ``a | b << 1`` where ``(a, b)``
is the symplectic pair attached to the element:

    0 <-> (0, 0)    w <-> (1, 0)    W <-> (0, 1)    1 <-> (1, 1)

Here ``w`` is a root of x^2 + x + 1 and ``W`` its conjugate ``w^2``.  With this
encoding field addition is XOR, and the map from ``(a|b)`` to ``w*a + W*b`` is
just a relabelling of bits.

A length-n vector is held as two n-bit integers: bit ``i`` of ``a`` (resp.
``b``) is the a-part (resp. b-part) of coordinate ``i``.  Coordinate 0 is the
leftmost symbol in text.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence


class Gf4(IntEnum):
    ZERO = 0
    W = 1
    WBAR = 2
    ONE = 3

    def __str__(self) -> str:
        return SYMBOLS[self]


SYMBOLS = "0wW1"
_FROM_SYMBOL = {"0": 0, "1": 3, "w": 1, "W": 2}

# discrete log base w of nonzero elements: 1 = w^0, w = w^1, W = w^2
_LOG = {3: 0, 1: 1, 2: 2}
_EXP = (3, 1, 2)


def gf4_add(x: int, y: int) -> int:
    return x ^ y


def gf4_mul(x: int, y: int) -> int:
    if x == 0 or y == 0:
        return 0
    return _EXP[(_LOG[x] + _LOG[y]) % 3]


def gf4_inv(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return _EXP[(-_LOG[x]) % 3]


def gf4_conj(x: int) -> int:
    """Frobenius conjugation x -> x^2 (swaps w and W)."""
    return ((x & 1) << 1) | (x >> 1)


def gf4_trace(x: int) -> int:
    """Tr(x) = x + x^2; equals a XOR b in the symplectic encoding."""
    return (x & 1) ^ (x >> 1)


def parse_symbol(ch: str) -> int:
    try:
        return _FROM_SYMBOL[ch]
    except KeyError:
        raise ValueError(f"invalid GF(4) symbol {ch!r}; expected one of 0 1 w W") from None


def _check_len(u_n: int, v_n: int) -> None:
    if u_n != v_n:
        raise ValueError(f"length mismatch: {u_n} != {v_n}")


@dataclass(frozen=True)
class SymplecticVector:
    """An element (a|b) of the 2n-dimensional binary symplectic space."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        mask = (1 << self.n) - 1
        if self.n < 0 or self.a & ~mask or self.b & ~mask:
            raise ValueError("bit masks exceed the declared length")

    @classmethod
    def zero(cls, n: int) -> SymplecticVector:
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, s: str) -> SymplecticVector:
        a = b = 0
        for i, ch in enumerate(s):
            x = parse_symbol(ch)
            a |= (x & 1) << i
            b |= (x >> 1) << i
        return cls(len(s), a, b)

    def coord(self, i: int) -> int:
        return ((self.a >> i) & 1) | (((self.b >> i) & 1) << 1)

    def __add__(self, other: SymplecticVector) -> SymplecticVector:
        _check_len(self.n, other.n)
        return SymplecticVector(self.n, self.a ^ other.a, self.b ^ other.b)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join(SYMBOLS[self.coord(i)] for i in range(self.n))

    @property
    def packed(self) -> int:
        """Single integer ``a | b << n`` used by the F2 linear algebra."""
        return self.a | (self.b << self.n)

    @classmethod
    def from_packed(cls, n: int, v: int) -> SymplecticVector:
        mask = (1 << n) - 1
        return cls(n, v & mask, (v >> n) & mask)

    def weight(self) -> int:
        return weight(self)


@dataclass(frozen=True)
class Gf4Vector:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c not in (0, 1, 2, 3) for c in self.coords):
            raise ValueError("coordinates must be GF(4) codes 0..3")

    @classmethod
    def from_string(cls, s: str) -> Gf4Vector:
        return cls(tuple(parse_symbol(ch) for ch in s))

    @classmethod
    def of(cls, coords: Iterable[int]) -> Gf4Vector:
        return cls(tuple(int(c) for c in coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: Gf4Vector) -> Gf4Vector:
        _check_len(self.n, other.n)
        return Gf4Vector(tuple(x ^ y for x, y in zip(self.coords, other.coords)))

    def scale(self, c: int) -> Gf4Vector:
        return Gf4Vector(tuple(gf4_mul(c, x) for x in self.coords))

    def conj(self) -> Gf4Vector:
        return Gf4Vector(tuple(gf4_conj(x) for x in self.coords))

    def hamming_weight(self) -> int:
        return sum(1 for x in self.coords if x)

    def __str__(self) -> str:
        return "".join(SYMBOLS[x] for x in self.coords)


def symplectic_inner(u: SymplecticVector, v: SymplecticVector) -> int:
    """a.b' + a'.b mod 2."""
    _check_len(u.n, v.n)
    return ((u.a & v.b).bit_count() + (v.a & u.b).bit_count()) & 1


def trace_inner(u: Gf4Vector, v: Gf4Vector) -> int:
    """Tr(sum_j u_j * conj(v_j)), computed in GF(4) arithmetic."""
    _check_len(u.n, v.n)
    s = 0
    for x, y in zip(u.coords, v.coords):
        s ^= gf4_mul(x, gf4_conj(y))
    return gf4_trace(s)


def hermitian_inner(u: Gf4Vector, v: Gf4Vector) -> int:
    """sum_j u_j * conj(v_j) as a GF(4) element."""
    _check_len(u.n, v.n)
    s = 0
    for x, y in zip(u.coords, v.coords):
        s ^= gf4_mul(x, gf4_conj(y))
    return s


def phi(v: SymplecticVector) -> Gf4Vector:
    return Gf4Vector(tuple(v.coord(i) for i in range(v.n)))


def phi_inv(u: Gf4Vector) -> SymplecticVector:
    a = b = 0
    for i, x in enumerate(u.coords):
        a |= (x & 1) << i
        b |= (x >> 1) << i
    return SymplecticVector(u.n, a, b)


def weight(v: SymplecticVector) -> int:
    return (v.a | v.b).bit_count()


def scale_symplectic(v: SymplecticVector, c: int) -> SymplecticVector:
    """Multiply every coordinate by the scalar ``c``.

    Multiplication by w sends (a, b) to (b, a ^ b); by W to (a ^ b, a).
    """
    if c == 0:
        return SymplecticVector(v.n, 0, 0)
    if c == Gf4.ONE:
        return v
    if c == Gf4.W:
        return SymplecticVector(v.n, v.b, v.a ^ v.b)
    return SymplecticVector(v.n, v.a ^ v.b, v.a)


def parse_vectors(rows: Sequence[str]) -> list[SymplecticVector]:
    return [SymplecticVector.from_string(r) for r in rows]
