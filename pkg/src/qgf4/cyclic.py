"""Cyclic, constacyclic, conjucyclic and quasicyclic codes over GF(4).

Throughout, ``kappa`` is a GF(4) code (3 = 1, 1 = w, 2 = W) and n is odd.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from . import f2
from .addcode import AdditiveCode, dual, is_self_orthogonal, quantum_params
from .enumeration import BudgetExceeded, check_budget, min_weight_at_least
from .gf4core import SymplecticVector, gf4_conj, gf4_mul, scale_symplectic
from .polynomials import (
    ExtField,
    F2Poly,
    Gf4Poly,
    cyclic_mul,
    cyclotomic_cosets,
    multiplicative_order,
    product,
)

ONE, W, WBAR = 3, 1, 2


class ScaleLimitExceeded(ValueError):
    pass


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n = {n} must be odd")


def _check_kappa(kappa: int) -> None:
    if kappa not in (ONE, W, WBAR):
        raise ValueError("kappa must be 1, w or W")


# ---------------------------------------------------------------------------
# dagger and factorization


def dagger(g: Gf4Poly, n: int, kappa: int = ONE) -> Gf4Poly:
    """kappa * conj(g_0) + sum_{j>=1} conj(g_{n-j}) x^j."""
    if g.deg >= n:
        raise ValueError(f"deg g = {g.deg} must be < n = {n}")
    coeffs = [gf4_mul(kappa, gf4_conj(g[0]))] + [gf4_conj(g[n - j]) for j in range(1, n)]
    return Gf4Poly(coeffs)


def dagger_factor(q: Gf4Poly, n: int, kappa: int = ONE) -> Gf4Poly:
    """The monic divisor of x^n - kappa associated to dagger(q)."""
    return dagger(q, n, kappa).gcd(Gf4Poly.xn_minus_kappa(n, kappa))


@dataclass(frozen=True)
class CyclotomicCoset:
    modulus: int
    representative: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Factor:
    coset: CyclotomicCoset
    poly: Gf4Poly


@dataclass
class Factorization:
    """x^n - kappa split into minimal polynomials, grouped by the dagger."""

    n: int
    kappa: int
    factors: list[Factor]
    self_dagger: list[Factor]
    pairs: list[tuple[Factor, Factor]]

    def product(self) -> Gf4Poly:
        return product(f.poly for f in self.factors)

    def dagger_of(self, f: Factor) -> Factor:
        for p in self.self_dagger:
            if p is f:
                return f
        for a, b in self.pairs:
            if a is f:
                return b
            if b is f:
                return a
        raise KeyError(f)


def _root_setup(n: int, kappa: int) -> tuple[int, list[int]]:
    """Modulus N and admissible exponents s: the roots of x^n - kappa are xi^s
    for a primitive N-th root xi with xi^n identified with w."""
    if kappa == ONE:
        return n, list(range(n))
    N = 3 * n
    want = 1 if kappa == W else 2
    return N, [s for s in range(N) if s % 3 == want]


def _field_data(N: int, kappa: int, n: int):
    m = multiplicative_order(4, N)
    F = ExtField(2 * m)
    xi = F.element_of_order(N)
    if kappa == ONE:
        alpha = F.element_of_order(3)
    else:
        alpha = F.pow(xi, n)
    to_gf4 = {0: 0, 1: ONE, alpha: W, F.mul(alpha, alpha): WBAR}
    return F, xi, to_gf4


def _minimal_poly(F: ExtField, xi: int, members: Iterable[int], to_gf4: dict[int, int]) -> Gf4Poly:
    poly = [1]
    for t in members:
        root = F.pow(xi, t)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= F.mul(c, root)
        poly = nxt
    try:
        return Gf4Poly(to_gf4[c] for c in poly)
    except KeyError:
        raise AssertionError("minimal polynomial has a coefficient outside GF(4)") from None


def factor_xn_minus_kappa(n: int, kappa: int = ONE) -> Factorization:
    _check_odd(n)
    _check_kappa(kappa)
    N, residues = _root_setup(n, kappa)
    F, xi, to_gf4 = _field_data(N, kappa, n)
    cosets = cyclotomic_cosets(4, N, residues)
    factors = [
        Factor(CyclotomicCoset(N, c[0], tuple(c)), _minimal_poly(F, xi, c, to_gf4)) for c in cosets
    ]
    by_members = {f.coset.members: f for f in factors}
    self_dagger, pairs, seen = [], [], set()
    for f in factors:
        if f.coset.members in seen:
            continue
        image = tuple(sorted((-2 * s) % N for s in f.coset.members))
        g = by_members[image]
        seen.update([f.coset.members, image])
        if g is f:
            self_dagger.append(f)
        else:
            pairs.append((f, g))
    return Factorization(n, kappa, factors, self_dagger, pairs)


# ---------------------------------------------------------------------------
# linear constacyclic codes


def _poly_vector(coeffs: Sequence[int], n: int) -> SymplecticVector:
    a = b = 0
    for i, c in enumerate(coeffs):
        a |= (c & 1) << i
        b |= (c >> 1) << i
    return SymplecticVector(n, a, b)


def constacyclic_code(g: Gf4Poly, n: int, kappa: int = ONE) -> AdditiveCode:
    """Linear code of all multiples of g modulo x^n - kappa."""
    _check_kappa(kappa)
    if not g or not g.divides(Gf4Poly.xn_minus_kappa(n, kappa)):
        raise ValueError(f"{g} does not divide x^{n} - kappa")
    gens = []
    for i in range(n - g.deg):
        v = _poly_vector([0] * i + list(g.coeffs), n)
        gens += [v, scale_symplectic(v, W)]
    return AdditiveCode(n, gens)


def is_cc_self_orthogonal(g: Gf4Poly, n: int, kappa: int = ONE) -> bool:
    """g(x) g^dagger(x) = 0 mod x^n - kappa."""
    if not g.divides(Gf4Poly.xn_minus_kappa(n, kappa)):
        raise ValueError(f"{g} does not divide x^{n} - kappa")
    if g.deg == n:
        return True  # g = x^n - kappa generates the zero code
    return not ((g * dagger(g, n, kappa)) % Gf4Poly.xn_minus_kappa(n, kappa))


def constacyclic_shift(C: AdditiveCode, kappa: int) -> AdditiveCode:
    out = []
    for g in C.generators:
        coords = [g.coord(i) for i in range(C.n)]
        out.append(_poly_vector([gf4_mul(kappa, coords[-1])] + coords[:-1], C.n))
    return AdditiveCode(C.n, out)


# ---------------------------------------------------------------------------
# quantum BCH codes


@dataclass
class BchCode:
    """B = <g> contains its dual; the quantum code is C = B^perp."""

    n: int
    kappa: int
    g: Gf4Poly
    design_d: int
    zero_cosets: tuple[int, ...]
    progression: tuple[int, int, int] = field(default=(0, 0, 0))

    @property
    def k(self) -> int:
        return self.n - 2 * self.g.deg

    def classical_code(self) -> AdditiveCode:
        return constacyclic_code(self.g, self.n, self.kappa)

    def stabilizer_code(self) -> AdditiveCode:
        return dual(self.classical_code())

    def promised(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.design_d)


def bch_search(n: int, kappa: int, target_d: int) -> list[BchCode]:
    """Minimal sets of dagger-compatible factors whose zeros contain an
    arithmetic progression of length target_d - 1.

    Progressions use steps coprime to n (times 3 in the constacyclic case,
    so they stay among the roots of x^n - kappa).  Candidates are ranked by
    number of factors, total degree, then coset representatives; every
    distinct generator attaining the best rank is returned, best first.
    """
    if target_d < 2:
        raise ValueError("target_d must be at least 2")
    fz = factor_xn_minus_kappa(n, kappa)
    N = fz.factors[0].coset.modulus
    owner = {s: f for f in fz.factors for s in f.coset.members}
    selfish = {id(f) for f in fz.self_dagger}
    partner = {}
    for a, b in fz.pairs:
        partner[id(a)] = b
        partner[id(b)] = a
    mult = 1 if kappa == ONE else 3
    L = target_d - 1
    best: dict[tuple, BchCode] = {}
    best_rank = None
    for delta in range(1, n):
        if gcd(delta, n) != 1:
            continue
        step = mult * delta
        for start in owner:
            chosen = {}
            ok = True
            for j in range(L):
                f = owner[(start + j * step) % N]
                if id(f) in selfish or id(partner[id(f)]) in chosen:
                    ok = False
                    break
                chosen[id(f)] = f
            if not ok:
                continue
            fs = sorted(chosen.values(), key=lambda f: f.coset.representative)
            reps = tuple(f.coset.representative for f in fs)
            rank = (len(fs), sum(f.poly.deg for f in fs), reps)
            if best_rank is not None and rank[:2] > best_rank[:2]:
                continue
            if best_rank is None or rank[:2] < best_rank[:2]:
                best.clear()
                best_rank = rank
            if reps not in best:
                g = product(f.poly for f in fs)
                best[reps] = BchCode(n, kappa, g, target_d, reps, (start, step, L))
    if not best:
        raise ValueError(f"no dagger-compatible progression of length {L} for n={n}")
    return [best[r] for r in sorted(best)]


def bch_family(n: int, kappa: int, max_d: int) -> list[BchCode]:
    """Best BCH code for each design distance 2..max_d, keeping only the
    largest design distance for each generator degree."""
    out: dict[int, BchCode] = {}
    for d in range(2, max_d + 1):
        try:
            c = bch_search(n, kappa, d)[0]
        except ValueError:
            break
        out[c.g.deg] = c
    return [out[k] for k in sorted(out)]


def hamming_code(m: int) -> AdditiveCode:
    """[[ (4^m-1)/3, n-2m, 3 ]]: cyclic for even m, w-constacyclic for odd m."""
    n = (4**m - 1) // 3
    kappa = ONE if m % 2 == 0 else W
    return bch_search(n, kappa, 3)[0].stabilizer_code()


# ---------------------------------------------------------------------------
# additive cyclic codes <w p + q, r>


def _shifts(v: SymplecticVector) -> list[SymplecticVector]:
    n = v.n
    mask = (1 << n) - 1
    out = []
    a, b = v.a, v.b
    for _ in range(n):
        out.append(SymplecticVector(n, a, b))
        a = ((a << 1) | (a >> (n - 1))) & mask
        b = ((b << 1) | (b >> (n - 1))) & mask
    return out


def cyclic_orbit_code(rows: Sequence[str]) -> AdditiveCode:
    """Code spanned by every cyclic shift of every row."""
    gens = []
    for r in rows:
        gens += _shifts(SymplecticVector.from_string(r))
    return AdditiveCode(len(rows[0]), gens)


def _check_ac(p: F2Poly, q: F2Poly, r: F2Poly, n: int) -> None:
    x = F2Poly.xn_minus_1(n)
    if not p.divides(x) or not r.divides(x):
        raise ValueError("p and r must divide x^n - 1")
    if not r.divides(q * (x // p)):
        raise ValueError("r must divide q (x^n - 1) / p")


def additive_cyclic(p: F2Poly, q: F2Poly, r: F2Poly, n: int) -> AdditiveCode:
    _check_ac(p, q, r, n)
    pm, qm, rm = p.cyclic(n), q.cyclic(n), r.cyclic(n)
    # w p + q has a-part p + q and b-part q
    gen = SymplecticVector(n, pm ^ qm, qm)
    return AdditiveCode(n, _shifts(gen) + _shifts(SymplecticVector(n, rm, rm)))


def ac_self_orthogonal(p: F2Poly, q: F2Poly, r: F2Poly, n: int) -> bool:
    _check_ac(p, q, r, n)
    pm, qm, rm = p.cyclic(n), q.cyclic(n), r.cyclic(n)
    ps, qs, rs = p.star(n).bits, q.star(n).bits, r.star(n).bits
    return (
        cyclic_mul(pm, rs, n) == 0
        and cyclic_mul(ps, rm, n) == 0
        and cyclic_mul(pm, qs, n) == cyclic_mul(ps, qm, n)
    )


def _left_kernel(rows: Sequence[int]) -> list[int]:
    """Masks s with XOR of rows[i] over i in s equal to zero."""
    m = len(rows)
    basis = f2.Basis()
    out = []
    for i, r in enumerate(rows):
        v = (r << m) | (1 << i)
        red = basis.reduce(v)
        if red >> m == 0:
            out.append(red)
        else:
            basis.add(v)
    return out


def cyclic_decompose(C: AdditiveCode) -> tuple[F2Poly, F2Poly, F2Poly]:
    """Canonical (p, q, r) with C = <w p + q, r> and deg q < deg r."""
    n = C.n
    x = F2Poly.xn_minus_1(n)
    traces = [g.a ^ g.b for g in C.generators]
    p = x
    for t in traces:
        p = p.gcd(F2Poly(t))
    kernel_words = []
    for s in _left_kernel(traces):
        a = 0
        for i, g in enumerate(C.generators):
            if (s >> i) & 1:
                a ^= g.a
        kernel_words.append(a)
    r = x
    for w in kernel_words:
        r = r.gcd(F2Poly(w))
    combo = f2.solve(traces, p.cyclic(n))
    if combo is None:
        raise ValueError("code is not cyclic")
    qb = 0
    for i, g in enumerate(C.generators):
        if (combo >> i) & 1:
            qb ^= g.b
    q = F2Poly(qb) % r if r.deg > 0 else F2Poly(0)
    if additive_cyclic(p, q, r, n) != C:
        raise ValueError("code is not cyclic")
    return p, q, r


def binary_divisors(n: int) -> list[F2Poly]:
    """All monic divisors of x^n - 1 over GF(2)."""
    N = n
    m = multiplicative_order(2, N)
    F = ExtField(m)
    xi = F.element_of_order(N)
    irr = []
    for c in cyclotomic_cosets(2, N):
        poly = [1]
        for t in c:
            root = F.pow(xi, t)
            nxt = [0] * (len(poly) + 1)
            for i, cf in enumerate(poly):
                nxt[i + 1] ^= cf
                nxt[i] ^= F.mul(cf, root)
            poly = nxt
        if any(cf not in (0, 1) for cf in poly):
            raise AssertionError("binary minimal polynomial has a non-binary coefficient")
        irr.append(F2Poly(sum(cf << i for i, cf in enumerate(poly))))
    out = []
    for mask in range(1 << len(irr)):
        d = F2Poly(1)
        for i, f in enumerate(irr):
            if (mask >> i) & 1:
                d = d * f
        out.append(d)
    return sorted(out, key=lambda f: (f.deg, f.bits))


def _q_solutions(p: F2Poly, r: F2Poly, n: int) -> list[int]:
    """Basis (as coefficient masks) of the binary q with deg q < deg r,
    r | q (x^n-1)/p and p q* = p* q mod x^n - 1."""
    x = F2Poly.xn_minus_1(n)
    h = x // p
    dr = r.deg
    ps = p.star(n).bits
    pm = p.cyclic(n)
    # linear map q -> (q h mod r, p q* + p* q mod x^n - 1)
    images = []
    for i in range(dr):
        e = F2Poly(1 << i)
        a = ((e * h) % r).bits if dr else 0
        b = cyclic_mul(pm, e.star(n).bits, n) ^ cyclic_mul(ps, e.cyclic(n), n)
        images.append(a | (b << dr))
    return [s for s in _left_kernel(images)]


@dataclass
class CyclicSearchHit:
    p: F2Poly
    q: F2Poly
    r: F2Poly
    code: AdditiveCode
    params: tuple[int, int, int, bool]


def search_additive_cyclic(
    n: int,
    min_d: int,
    rank_range: tuple[int, int] | None = None,
    max_n: int = 30,
    budget: int | None = None,
    limit: int | None = None,
) -> list[CyclicSearchHit]:
    """Self-orthogonal additive cyclic codes of length n whose quantum
    distance is at least min_d.

    r runs over divisors of x^n - 1; p over divisors that are multiples of
    (x^n - 1) / gcd(r*, x^n - 1), which is exactly the condition p r* = 0;
    q over the solution space of the remaining congruences, reduced mod r.
    """
    _check_odd(n)
    if n > max_n:
        raise ScaleLimitExceeded(f"n = {n} exceeds the search limit {max_n}")
    x = F2Poly.xn_minus_1(n)
    divs = binary_divisors(n)
    lo, hi = rank_range if rank_range else (0, n)
    hits: list[CyclicSearchHit] = []
    seen: set = set()
    for r in divs:
        rt = r.star(n).gcd(x)
        base = x // rt
        for p in divs:
            if not base.divides(p):
                continue
            rank = 2 * n - p.deg - r.deg
            if not lo <= rank <= hi or rank > n:
                continue
            sols = _q_solutions(p, r, n)
            if len(sols) > 24:
                raise BudgetExceeded(f"2^{len(sols)} choices of q for p={p}, r={r}")
            for mask in range(1 << len(sols)):
                qb = 0
                for i, s in enumerate(sols):
                    if (mask >> i) & 1:
                        qb ^= s
                q = F2Poly(qb)
                C = additive_cyclic(p, q, r, n)
                if C.key() in seen:
                    continue
                seen.add(C.key())
                if rank == n and not min_weight_at_least(C.pairs(), n, min_d, budget):
                    continue
                qp = quantum_params(C, budget)
                if qp.d >= min_d:
                    hits.append(CyclicSearchHit(p, q, r, C, qp.as_tuple()))
                    if limit is not None and len(hits) >= limit:
                        return hits
    return hits


# ---------------------------------------------------------------------------
# conjucyclic codes


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear code of length n; rows are n-bit masks."""

    n: int
    rows: tuple[int, ...]

    def key(self) -> tuple[int, ...]:
        return f2.canonical(self.rows)

    @property
    def dim(self) -> int:
        return f2.rank(self.rows)

    def is_cyclic(self) -> bool:
        b = f2.Basis(self.rows)
        mask = (1 << self.n) - 1
        return all(((r << 1) | (r >> (self.n - 1))) & mask in b for r in self.rows)

    def is_self_orthogonal(self) -> bool:
        return all(f2.dot(u, v) == 0 for u in self.rows for v in self.rows)


def conjucyclic_shift(C: AdditiveCode) -> AdditiveCode:
    out = []
    for g in C.generators:
        coords = [g.coord(i) for i in range(C.n)]
        out.append(_poly_vector([gf4_conj(coords[-1])] + coords[:-1], C.n))
    return AdditiveCode(C.n, out)


def is_conjucyclic(C: AdditiveCode) -> bool:
    return conjucyclic_shift(C) == C


def conjucyclic_to_binary(C: AdditiveCode) -> BinaryCode:
    """C' = {Tr(w u) | Tr(W u)}; in (a|b) form Tr(w u) = a and Tr(W u) = b."""
    if not is_conjucyclic(C):
        raise ValueError("code is not conjucyclic")
    return BinaryCode(2 * C.n, tuple(g.a | (g.b << C.n) for g in C.generators))


def binary_to_conjucyclic(B: BinaryCode) -> AdditiveCode:
    """Inverse map: u = w Tr(w u) + W Tr(W u)."""
    if B.n % 2:
        raise ValueError("binary length must be even")
    n = B.n // 2
    return AdditiveCode(n, [SymplecticVector.from_packed(n, r) for r in B.rows])


# ---------------------------------------------------------------------------
# quasicyclic codes


def quasicyclic_code(seeds: Sequence[Sequence[str]], linear: bool = True) -> AdditiveCode:
    """Each seed is a list of equal-length blocks; the generators are every
    simultaneous cyclic shift of the blocks (and their w-multiples if linear).
    """
    if not seeds:
        raise ValueError("at least one seed is needed")
    b = len(seeds[0][0])
    n = b * len(seeds[0])
    gens = []
    for seed in seeds:
        if any(len(blk) != b for blk in seed) or b * len(seed) != n:
            raise ValueError("all blocks must have the same length")
        for t in range(b):
            row = "".join(blk[-t:] + blk[:-t] if t else blk for blk in seed)
            v = SymplecticVector.from_string(row)
            gens.append(v)
            if linear:
                gens.append(scale_symplectic(v, W))
    return AdditiveCode(n, gens)
