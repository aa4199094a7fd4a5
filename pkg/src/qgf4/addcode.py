"""Additive codes over GF(4): duality, weights and quantum parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from . import f2
from .enumeration import all_words, weight_counts
from .gf4core import (
    SYMBOLS,
    Gf4Vector,
    SymplecticVector,
    gf4_inv,
    gf4_mul,
    hermitian_inner,
    phi,
    scale_symplectic,
    symplectic_inner,
)


class NotSelfOrthogonal(ValueError):
    """Raised when a code fails C <= C^perp; carries the offending pair."""

    def __init__(self, i: int, j: int, u: SymplecticVector, v: SymplecticVector):
        super().__init__(f"generators {i} ({u}) and {j} ({v}) have trace inner product 1")
        self.pair = (i, j)


GeneratorLike = SymplecticVector | str | tuple[int, int]


class AdditiveCode:
    """An (n, 2^r) additive code, stored as r independent generators.

    Redundant generators passed to the constructor are dropped; the number
    dropped is kept in ``dropped`` so file readers can report it.
    """

    def __init__(self, n: int, generators: Iterable[GeneratorLike] = (), name: str | None = None):
        self.n = n
        self.name = name
        basis = f2.Basis()
        gens: list[SymplecticVector] = []
        dropped = 0
        for g in generators:
            v = _coerce(n, g)
            if basis.add(v.packed):
                gens.append(v)
            else:
                dropped += 1
        self.generators: tuple[SymplecticVector, ...] = tuple(gens)
        self.dropped = dropped
        self._basis = basis

    @classmethod
    def from_rows(cls, rows: Sequence[str], linear: bool = False, name: str | None = None) -> AdditiveCode:
        """Additive span of the rows; with ``linear`` the GF(4) span instead."""
        vecs = [SymplecticVector.from_string(r) for r in rows]
        if not vecs:
            raise ValueError("from_rows needs at least one row; use AdditiveCode(n) for the zero code")
        if linear:
            vecs = vecs + [scale_symplectic(v, 1) for v in vecs]
        return cls(vecs[0].n, vecs, name=name)

    @classmethod
    def full(cls, n: int) -> AdditiveCode:
        return cls(n, [SymplecticVector(n, 1 << i, 0) for i in range(n)]
                   + [SymplecticVector(n, 0, 1 << i) for i in range(n)])

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.r

    def pairs(self) -> list[tuple[int, int]]:
        return [(g.a, g.b) for g in self.generators]

    def packed(self) -> list[int]:
        return [g.packed for g in self.generators]

    def key(self) -> tuple[int, ...]:
        """Canonical basis of the span; equal codes have equal keys."""
        return self._basis.key()

    def __contains__(self, v: GeneratorLike) -> bool:
        return _coerce(self.n, v).packed in self._basis

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.n == other.n and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.n, self.key()))

    def issubset(self, other: AdditiveCode) -> bool:
        return self.n == other.n and all(g in other for g in self.generators)

    def rows(self) -> list[str]:
        return [str(g) for g in self.generators]

    def words(self, budget: int | None = None) -> list[SymplecticVector]:
        return [SymplecticVector(self.n, a, b) for a, b in all_words(self.pairs(), self.n, budget)]

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<AdditiveCode{label} ({self.n}, 2^{self.r})>"


def _coerce(n: int, g: GeneratorLike) -> SymplecticVector:
    if isinstance(g, SymplecticVector):
        v = g
    elif isinstance(g, str):
        v = SymplecticVector.from_string(g)
    else:
        v = SymplecticVector(n, g[0], g[1])
    if v.n != n:
        raise ValueError(f"generator {v} has length {v.n}, expected {n}")
    return v


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of W(x, y) = sum A_j x^(n-j) y^j."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def total(self) -> int:
        return sum(self.coeffs)

    def min_weight(self) -> int | None:
        """Smallest j > 0 with A_j != 0."""
        return next((j for j in range(1, len(self.coeffs)) if self.coeffs[j]), None)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def support(self) -> dict[int, int]:
        return {j: c for j, c in enumerate(self.coeffs) if c}


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    pure: bool

    def as_tuple(self) -> tuple[int, int, int, bool]:
        return (self.n, self.k, self.d, self.pure)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]] {'pure' if self.pure else 'impure'}"


def dual(C: AdditiveCode) -> AdditiveCode:
    """Trace dual: kernel of the symplectic pairing against C."""
    n = C.n
    mask = (1 << n) - 1
    # <(a|b), x> = a.x_b + b.x_a, i.e. an ordinary dot product with (b|a)
    swapped = [(v >> n) | ((v & mask) << n) for v in C.packed()]
    ker = f2.kernel(swapped, 2 * n)
    return AdditiveCode(n, [SymplecticVector.from_packed(n, v) for v in ker])


def first_nonorthogonal_pair(C: AdditiveCode) -> tuple[int, int] | None:
    g = C.generators
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            if symplectic_inner(g[i], g[j]):
                return i, j
    return None


def is_self_orthogonal(C: AdditiveCode) -> bool:
    return first_nonorthogonal_pair(C) is None


def require_self_orthogonal(C: AdditiveCode) -> None:
    pair = first_nonorthogonal_pair(C)
    if pair is not None:
        i, j = pair
        raise NotSelfOrthogonal(i, j, C.generators[i], C.generators[j])


def is_self_dual(C: AdditiveCode) -> bool:
    return C.r == C.n and is_self_orthogonal(C)


def weight_distribution(C: AdditiveCode, budget: int | None = None) -> WeightEnumerator:
    return WeightEnumerator(weight_counts(C.pairs(), C.n, budget))


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def macwilliams(W: WeightEnumerator | Sequence[int], r: int) -> WeightEnumerator:
    """2^-r W(x + 3y, x - y), expanded exactly (polynomials indexed by y-degree)."""
    A = W.coeffs if isinstance(W, WeightEnumerator) else tuple(W)
    n = len(A) - 1
    if any(a < 0 for a in A):
        raise ValueError("weight enumerator has a negative coefficient")
    if sum(A) != 1 << r:
        raise ValueError(f"coefficients sum to {sum(A)}, not 2^{r}")
    plus = [[1]]
    minus = [[1]]
    for _ in range(n):
        plus.append(_poly_mul(plus[-1], [1, 3]))
        minus.append(_poly_mul(minus[-1], [1, -1]))
    out = [0] * (n + 1)
    for j, a in enumerate(A):
        if a:
            term = _poly_mul(plus[n - j], minus[j])
            for i, c in enumerate(term):
                out[i] += a * c
    scale = 1 << r
    if any(c % scale for c in out):
        raise ValueError(f"transform is not integral: (r={r}, W) is not a valid pair")
    return WeightEnumerator([c // scale for c in out])


def quantum_params(C: AdditiveCode, budget: int | None = None) -> QuantumParams:
    """[[n, n-r, d]] of a self-orthogonal code, with purity.

    Only C (the smaller side) is enumerated; the dual distribution comes from
    the MacWilliams transform.
    """
    require_self_orthogonal(C)
    n, r = C.n, C.r
    k = n - r
    A = weight_distribution(C, budget)
    if k == 0:
        d = A.min_weight()
        return QuantumParams(n, 0, d if d is not None else 0, True)
    Ad = macwilliams(A, r)
    d = next(j for j in range(1, n + 1) if Ad[j] > A[j])
    return QuantumParams(n, k, d, Ad.min_weight() == d)


def dual_distribution(C: AdditiveCode, budget: int | None = None) -> WeightEnumerator:
    return macwilliams(weight_distribution(C, budget), C.r)


# ---------------------------------------------------------------------------
# evenness, linearity


def is_even(C: AdditiveCode) -> bool:
    # wt(u+v) = wt u + wt v + u*v (mod 2): for self-orthogonal codes parity
    # is additive, otherwise fall back to checking every word
    if is_self_orthogonal(C):
        return all(g.weight() % 2 == 0 for g in C.generators)
    return all(v.weight() % 2 == 0 for v in C.words())


def even_subcode(C: AdditiveCode) -> AdditiveCode:
    """Subcode of even-weight words (index 1 or 2 in C).

    Outside self-orthogonal codes the even words need not be closed under
    addition; that case raises ValueError.
    """
    if not is_self_orthogonal(C):
        words = [v for v in C.words() if v.weight() % 2 == 0]
        E = AdditiveCode(C.n, words)
        if (1 << E.r) != len(words) or C.r - E.r > 1:
            raise ValueError("even-weight words of this code do not form a subcode of index <= 2")
        return E
    # weight parity is then an F2-linear functional on C
    odd = [g for g in C.generators if g.weight() % 2]
    even = [g for g in C.generators if g.weight() % 2 == 0]
    if odd:
        even += [odd[0] + g for g in odd[1:]]
    return AdditiveCode(C.n, even)


def is_linear(C: AdditiveCode) -> bool:
    return all(scale_symplectic(g, 1) in C for g in C.generators)


def gf4_basis(C: AdditiveCode) -> list[Gf4Vector]:
    """A GF(4)-basis of a linear code."""
    if not is_linear(C):
        raise ValueError("code is not GF(4)-linear")
    span = f2.Basis()
    out = []
    for g in C.generators:
        if g.packed in span:
            continue
        out.append(phi(g))
        span.add(g.packed)
        span.add(scale_symplectic(g, 1).packed)
    return out


def hermitian_self_orthogonal(C: AdditiveCode) -> bool:
    """Classical check u . conj(v) = 0 on a GF(4)-basis; needs linearity."""
    B = gf4_basis(C)
    return all(hermitian_inner(u, v) == 0 for u in B for v in B)


# ---------------------------------------------------------------------------
# standard generator matrix


@dataclass
class StandardForm:
    """Generator matrix [[I, wB1, A1], [wI, wB2, A2], [0, I, B3]].

    ``perm[i]`` is the original column placed at position i and ``scale[c]``
    the GF(4) multiplier applied to original column c.  ``rows`` are in the
    new coordinates, GF(4) codes per entry.
    """

    k0: int
    k1: int
    perm: list[int]
    scale: list[int]
    rows: list[list[int]] = field(repr=False)

    def _block(self, r0: int, r1: int, c0: int, c1: int) -> list[list[int]]:
        return [row[c0:c1] for row in self.rows[r0:r1]]

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def A1(self):
        return self._block(0, self.k0, self.k0 + self.k1, self.n)

    @property
    def A2(self):
        return self._block(self.k0, 2 * self.k0, self.k0 + self.k1, self.n)

    @property
    def B1(self):
        return [[1 if x else 0 for x in row] for row in self._block(0, self.k0, self.k0, self.k0 + self.k1)]

    @property
    def B2(self):
        return [[1 if x else 0 for x in row] for row in self._block(self.k0, 2 * self.k0, self.k0, self.k0 + self.k1)]

    @property
    def B3(self):
        return self._block(2 * self.k0, 2 * self.k0 + self.k1, self.k0 + self.k1, self.n)

    def matrix_rows(self) -> list[str]:
        return ["".join(SYMBOLS[x] for x in row) for row in self.rows]

    def reassemble(self) -> AdditiveCode:
        return AdditiveCode(self.n, self.matrix_rows()) if self.rows else AdditiveCode(self.n)

    def transform(self, C: AdditiveCode) -> AdditiveCode:
        """Apply this form's column scaling and permutation to C."""
        out = []
        for g in C.generators:
            coords = [gf4_mul(self.scale[c], g.coord(c)) for c in range(C.n)]
            out.append("".join(SYMBOLS[coords[self.perm[i]]] for i in range(C.n)))
        return AdditiveCode(C.n, out)


def standard_form(C: AdditiveCode) -> StandardForm:
    """Bring C to the three-block standard form by F2 row operations,
    column permutations and column scalings.

    Columns are scanned left to right; a column where the remaining rows span
    all of GF(4) yields a (1, w) pivot pair, then columns of rank one yield
    single pivots scaled to 1.
    """
    n = C.n
    rows = [[g.coord(i) for i in range(n)] for g in C.generators]
    scale = [3] * n

    def add_into(dst: list[int], src: list[int]) -> None:
        for i in range(n):
            dst[i] ^= src[i]

    pairs: list[tuple[list[int], list[int]]] = []
    p1_cols: list[int] = []
    rest = rows

    while True:
        found = None
        for c in range(n):
            if c in p1_cols:
                continue
            i1 = next((i for i, row in enumerate(rest) if row[c]), None)
            if i1 is None:
                continue
            x = rest[i1][c]
            i2 = next((i for i, row in enumerate(rest) if row[c] not in (0, x)), None)
            if i2 is not None:
                found = (c, i1, i2)
                break
        if found is None:
            break
        c, i1, i2 = found
        u, v = rest[i1], rest[i2]
        w = [p ^ q for p, q in zip(u, v)]
        by_val = {u[c]: u, v[c]: v, w[c]: w}
        r_one, r_w = list(by_val[3]), list(by_val[1])
        rest = [row for i, row in enumerate(rest) if i not in (i1, i2)]
        for row in rest + [p for pr in pairs for p in pr]:
            z = row[c]
            # z = alpha*1 + beta*w with w-bar = 1 + w
            if z in (3, 2):
                add_into(row, r_one)
            if z in (1, 2):
                add_into(row, r_w)
        pairs.append((r_one, r_w))
        p1_cols.append(c)

    singles: list[list[int]] = []
    p2_cols: list[int] = []
    while True:
        found = None
        for c in range(n):
            if c in p1_cols or c in p2_cols:
                continue
            i1 = next((i for i, row in enumerate(rest) if row[c]), None)
            if i1 is not None:
                found = (c, i1)
                break
        if found is None:
            break
        c, i1 = found
        s = gf4_inv(rest[i1][c])
        scale[c] = gf4_mul(scale[c], s)
        for row in rows_all(pairs, singles, rest):
            row[c] = gf4_mul(row[c], s)
        piv = rest.pop(i1)
        for row in rows_all(pairs, singles, rest):
            if row[c] in (3, 2):
                add_into(row, piv)
        singles.append(piv)
        p2_cols.append(c)

    if any(any(row) for row in rest):
        raise AssertionError("standard form elimination left a nonzero row")
    others = [c for c in range(n) if c not in p1_cols and c not in p2_cols]
    for c in others:
        vals = {row[c] for row in singles} - {0}
        if len(vals) > 1:
            raise AssertionError("non-pivot column has rank 2 on the binary block")
        if vals:
            s = gf4_inv(vals.pop())
            scale[c] = gf4_mul(scale[c], s)
            for row in rows_all(pairs, singles, []):
                row[c] = gf4_mul(row[c], s)
    perm = p1_cols + p2_cols + others
    ordered = [p[0] for p in pairs] + [p[1] for p in pairs] + singles
    new_rows = [[row[perm[i]] for i in range(n)] for row in ordered]
    return StandardForm(len(pairs), len(singles), perm, scale, new_rows)


def rows_all(pairs, singles, rest):
    for a, b in pairs:
        yield a
        yield b
    yield from singles
    yield from rest


def hamming_bound_terms(n: int, t: int) -> int:
    return sum(3**j * comb(n, j) for j in range(t + 1))
