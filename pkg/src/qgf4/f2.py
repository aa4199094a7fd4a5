"""Dense linear algebra over F2 with vectors packed into Python integers."""

from __future__ import annotations

from typing import Iterable


class Basis:
    """Incrementally maintained, fully reduced echelon basis.

    Rows are keyed by their pivot, the highest set bit.
    """

    __slots__ = ("rows",)

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        for p, row in self.rows.items():
            if (v >> p) & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = v.bit_length() - 1
        for q, row in self.rows.items():
            if (row >> p) & 1:
                self.rows[q] = row ^ v
        self.rows[p] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[int]:
        """Rows in decreasing pivot order (a canonical basis of the span)."""
        return [self.rows[p] for p in sorted(self.rows, reverse=True)]

    def key(self) -> tuple[int, ...]:
        return tuple(self.vectors())


def rank(vectors: Iterable[int]) -> int:
    return len(Basis(vectors))


def independent(vectors: Iterable[int]) -> list[int]:
    """Greedy maximal independent sublist, original vectors kept."""
    b = Basis()
    return [v for v in vectors if b.add(v)]


def canonical(vectors: Iterable[int]) -> tuple[int, ...]:
    return Basis(vectors).key()


def kernel(rows: Iterable[int], width: int) -> list[int]:
    """Basis of {x in F2^width : popcount(x & r) even for every row r}."""
    b = Basis(rows)
    pivots = set(b.rows)
    out = []
    for f in range(width):
        if f in pivots:
            continue
        x = 1 << f
        for p, row in b.rows.items():
            if (row >> f) & 1:
                x |= 1 << p
        out.append(x)
    return out


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1


def complement(sub: Iterable[int], full: Iterable[int]) -> list[int]:
    """Vectors of ``full`` extending a basis of ``sub`` to one of span(full)."""
    b = Basis(sub)
    return [v for v in full if b.add(v)]


def solve(rows: list[int], target: int) -> int | None:
    """Return a bitmask s with XOR of rows[i] for i in s equal to target."""
    # data shifted above an identity tag so pivots land on data bits
    m = len(rows)
    b = Basis((r << m) | (1 << i) for i, r in enumerate(rows))
    t = target << m
    for p, row in b.rows.items():
        if p >= m and (t >> p) & 1:
            t ^= row
    if t >> m:
        return None
    return t & ((1 << m) - 1)
