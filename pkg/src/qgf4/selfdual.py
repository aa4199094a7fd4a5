"""Enumeration and classification of self-dual (n, 2^n) codes at small n."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from . import f2
from .addcode import AdditiveCode, is_even, quantum_params, require_self_orthogonal
from .equivalence import ACTIONS, automorphism_order, generators, group_order
from .gf4core import SymplecticVector

ENUM_LIMIT_N = 6
CLASSIFY_LIMIT_N = 5


class ScaleLimitExceeded(ValueError):
    pass


def selfdual_count(n: int) -> int:
    out = 1
    for j in range(1, n + 1):
        out *= 2**j + 1
    return out


def _rref_subspaces(n: int, r: int) -> Iterator[tuple[list[int], list[int]]]:
    """Every r-dimensional subspace of F2^n once, as (rows, pivots) in
    reduced echelon form: row i has a 1 at pivot i and 0 at other pivots,
    and nothing below its pivot."""
    for pivots in combinations(range(n), r):
        free = []
        for i, p in enumerate(pivots):
            for c in range(p + 1, n):
                if c not in pivots:
                    free.append((i, c))
        for mask in range(1 << len(free)):
            rows = [1 << p for p in pivots]
            for t, (i, c) in enumerate(free):
                if (mask >> t) & 1:
                    rows[i] |= 1 << c
            yield rows, list(pivots)


def enumerate_selfdual(n: int, limit_n: int = ENUM_LIMIT_N) -> Iterator[AdditiveCode]:
    """Every self-dual code of length n exactly once.

    A self-dual code is a maximal isotropic subspace L of F2^2n.  With U
    the projection of L onto the a-part, L = {(u | S u + c) : u in U,
    c in U^perp} for a unique symmetric form S on U.  Writing U in reduced
    echelon form with pivots p_i, the unit vectors e_(p_i) form a dual basis,
    so S is any symmetric r x r binary matrix.
    """
    if n > limit_n:
        raise ScaleLimitExceeded(f"n = {n} exceeds the enumeration limit {limit_n}")
    for r in range(n + 1):
        sym = [(i, j) for i in range(r) for j in range(i, r)]
        for rows, pivots in _rref_subspaces(n, r):
            perp = f2.kernel(rows, n)
            for mask in range(1 << len(sym)):
                b = [0] * r
                for t, (i, j) in enumerate(sym):
                    if (mask >> t) & 1:
                        b[i] |= 1 << pivots[j]
                        if i != j:
                            b[j] |= 1 << pivots[i]
                gens = [SymplecticVector(n, rows[i], b[i]) for i in range(r)]
                gens += [SymplecticVector(n, 0, c) for c in perp]
                yield AdditiveCode(n, gens)


# ---------------------------------------------------------------------------
# orbits under G_n


def _apply_packed(n: int, perm, acts, vecs: tuple[int, ...]) -> list[int]:
    out = []
    mask = (1 << n) - 1
    for v in vecs:
        a, b = v & mask, v >> n
        na = nb = 0
        for i in range(n):
            x, y = ACTIONS[acts[i]]((a >> i) & 1, (b >> i) & 1)
            na |= x << perm[i]
            nb |= y << perm[i]
        out.append(na | (nb << n))
    return out


def orbit_keys(C: AdditiveCode) -> set[tuple[int, ...]]:
    """Canonical keys of every code equivalent to C."""
    n = C.n
    gens = generators(n)
    start = C.key()
    seen = {start}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        for perm, acts in gens:
            img = f2.canonical(_apply_packed(n, perm, acts, key))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


def is_decomposable(C: AdditiveCode) -> bool:
    """True when some split of the coordinates makes C a direct sum."""
    n, r = C.n, C.r
    packed = C.packed()
    for bits in range(1, 1 << (n - 1)):
        S = bits << 1  # coordinate 0 always lies in the complement
        T = ((1 << n) - 1) ^ S
        ms = S | (S << n)
        mt = T | (T << n)
        dim_s = r - f2.rank(v & mt for v in packed)
        dim_t = r - f2.rank(v & ms for v in packed)
        if dim_s + dim_t == r:
            return True
    return False


@dataclass
class SelfDualClass:
    representative: AdditiveCode
    orbit_size: int
    aut_order: int
    indecomposable: bool
    d: int
    even: bool


def classify_selfdual(n: int, limit_n: int = CLASSIFY_LIMIT_N) -> tuple[list[SelfDualClass], int]:
    """Classes of self-dual codes of length n and the total number enumerated.

    |Aut| comes from orbit-stabilizer, |G_n| / orbit size.
    """
    if n > limit_n:
        raise ScaleLimitExceeded(f"n = {n} exceeds the classification limit {limit_n}")
    order = group_order(n)
    seen: set[tuple[int, ...]] = set()
    classes = []
    total = 0
    for C in enumerate_selfdual(n):
        total += 1
        if C.key() in seen:
            continue
        orb = orbit_keys(C)
        seen |= orb
        if order % len(orb):
            raise AssertionError("orbit size does not divide the group order")
        qp = quantum_params(C)
        classes.append(
            SelfDualClass(C, len(orb), order // len(orb), not is_decomposable(C), qp.d, is_even(C))
        )
    if len(seen) != total:
        raise AssertionError("orbits do not cover the enumeration exactly")
    return classes, total


def mass(classes: list[SelfDualClass]) -> Fraction:
    return sum((Fraction(1, c.aut_order) for c in classes), Fraction(0))


def mass_formula_rhs(n: int) -> Fraction:
    return Fraction(selfdual_count(n), group_order(n))


def check_aut_by_search(cls: SelfDualClass) -> bool:
    """Second route to |Aut|: direct backtracking count."""
    return automorphism_order(cls.representative) == cls.aut_order


# ---------------------------------------------------------------------------
# codes generated by weight-2 words


def weight2_decomposition(C: AdditiveCode) -> list[tuple[str, tuple[int, ...]]]:
    """Split a self-orthogonal code generated by weight-2 words into its
    d_2^+ and d_i pieces, returned as (type, coordinates) pairs."""
    require_self_orthogonal(C)
    n = C.n
    support = 0
    for g in C.generators:
        support |= g.a | g.b
    if support != (1 << n) - 1:
        raise ValueError("code has an identically zero coordinate")
    # weight-2 words of C
    w2 = []
    for i in range(n):
        for j in range(i + 1, n):
            for x in ((1, 0), (0, 1), (1, 1)):
                for y in ((1, 0), (0, 1), (1, 1)):
                    v = SymplecticVector(n, (x[0] << i) | (y[0] << j), (x[1] << i) | (y[1] << j))
                    if v in C:
                        w2.append((i, j, v))
    if f2.rank(v.packed for _, _, v in w2) != C.r:
        raise ValueError("code is not generated by its weight-2 words")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in w2:
        parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    out = []
    for coords in sorted(comps.values()):
        mask = sum(1 << i for i in coords)
        dim = f2.rank(v.packed for i, _, v in w2 if (mask >> i) & 1)
        if len(coords) == 1:
            raise ValueError("isolated coordinate: code is not generated by weight-2 words")
        if len(coords) == 2 and dim == 2:
            out.append(("d2+", tuple(coords)))
        elif dim == len(coords) - 1:
            out.append((f"d{len(coords)}", tuple(coords)))
        else:
            raise AssertionError("component is neither d_2^+ nor d_i")
    return out
