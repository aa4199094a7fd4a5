"""The monomial-and-conjugation group G_n of order 6^n n! acting on codes.

An element is ``(perm, acts)``: source coordinate i is sent to position
``perm[i]`` after the S3 action ``acts[i]`` is applied to its symbol.  The
six actions, in their fixed order, are the six invertible 2x2 binary maps on
the pair (a_i, b_i):

    0  identity            (a, b) -> (a, b)
    1  multiply by w       (a, b) -> (b, a^b)
    2  multiply by W       (a, b) -> (a^b, a)
    3  conjugate           (a, b) -> (b, a)
    4  w * conjugate       (a, b) -> (a, a^b)
    5  W * conjugate       (a, b) -> (a^b, b)

Multiplying by a scalar and conjugating both permute {1, w, W}; the six maps
together are all of S3 on the nonzero symbols, so weights and the trace
inner product are preserved.
"""

from __future__ import annotations

import random
from math import factorial
from typing import Sequence

from . import f2
from .addcode import AdditiveCode, weight_distribution
from .gf4core import SymplecticVector

ACTIONS = (
    lambda a, b: (a, b),
    lambda a, b: (b, a ^ b),
    lambda a, b: (a ^ b, a),
    lambda a, b: (b, a),
    lambda a, b: (a, a ^ b),
    lambda a, b: (a ^ b, b),
)

DEFAULT_LIMIT_N = 6


class ScaleLimitExceeded(ValueError):
    pass


def group_order(n: int) -> int:
    return 6**n * factorial(n)


def apply_to_vector(perm: Sequence[int], acts: Sequence[int], v: SymplecticVector) -> SymplecticVector:
    a = b = 0
    for i in range(v.n):
        x, y = ACTIONS[acts[i]]((v.a >> i) & 1, (v.b >> i) & 1)
        a |= x << perm[i]
        b |= y << perm[i]
    return SymplecticVector(v.n, a, b)


def apply(perm: Sequence[int], acts: Sequence[int], C: AdditiveCode) -> AdditiveCode:
    return AdditiveCode(C.n, [apply_to_vector(perm, acts, g) for g in C.generators])


def random_element(n: int, rng: random.Random | None = None) -> tuple[list[int], list[int]]:
    rng = rng or random.Random()
    perm = list(range(n))
    rng.shuffle(perm)
    return perm, [rng.randrange(6) for _ in range(n)]


def _prefix_keys(C: AdditiveCode) -> list[tuple[int, ...]]:
    """Canonical key of the projection of C onto coordinates 0..t-1, for each t."""
    keys = []
    for t in range(C.n + 1):
        proj = []
        for g in C.generators:
            v = 0
            for j in range(t):
                v |= (((g.a >> j) & 1) << (2 * j)) | (((g.b >> j) & 1) << (2 * j + 1))
            proj.append(v)
        keys.append(f2.canonical(proj))
    return keys


def _search(C1: AdditiveCode, C2: AdditiveCode, count_all: bool) -> int:
    """Count maps g in G_n with g(C1) = C2 (stop at the first unless count_all).

    Target positions are filled in order; a partial map survives only while
    the projection of g(C1) onto the filled positions equals that of C2.
    """
    n = C1.n
    target = _prefix_keys(C2)
    gens = C1.generators
    cols = [[((g.a >> i) & 1, (g.b >> i) & 1) for g in gens] for i in range(n)]
    images = [[[ACTIONS[x](a, b) for a, b in cols[i]] for x in range(6)] for i in range(n)]
    used = [False] * n
    found = 0

    def rec(t: int, partial: list[int]) -> bool:
        nonlocal found
        if t == n:
            found += 1
            return not count_all
        for s in range(n):
            if used[s]:
                continue
            used[s] = True
            for x in range(6):
                img = images[s][x]
                nxt = [p | (a << (2 * t)) | (b << (2 * t + 1)) for p, (a, b) in zip(partial, img)]
                if f2.canonical(nxt) == target[t + 1] and rec(t + 1, nxt):
                    used[s] = False
                    return True
            used[s] = False
        return False

    rec(0, [0] * len(gens))
    return found


def _check_limit(n: int, limit_n: int) -> None:
    if n > limit_n:
        raise ScaleLimitExceeded(f"n = {n} exceeds the brute-force limit {limit_n}")


def are_equivalent(C1: AdditiveCode, C2: AdditiveCode, limit_n: int = DEFAULT_LIMIT_N) -> bool:
    if C1.n != C2.n or C1.r != C2.r:
        return False
    _check_limit(C1.n, limit_n)
    if weight_distribution(C1) != weight_distribution(C2):
        return False
    return _search(C1, C2, count_all=False) > 0


def automorphism_order(C: AdditiveCode, limit_n: int = DEFAULT_LIMIT_N) -> int:
    _check_limit(C.n, limit_n)
    return _search(C, C, count_all=True)


def generators(n: int) -> list[tuple[list[int], list[int]]]:
    """A generating set of G_n: w and conjugation on coordinate 0, a
    transposition and an n-cycle."""
    ident = list(range(n))
    zero = [0] * n
    out = []
    for x in (1, 3):
        acts = list(zero)
        if n:
            acts[0] = x
        out.append((ident, acts))
    if n >= 2:
        swap = list(ident)
        swap[0], swap[1] = 1, 0
        out.append((swap, zero))
        out.append(([(i + 1) % n for i in range(n)], zero))
    return out
