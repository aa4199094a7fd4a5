"""Ways of building new self-orthogonal codes from old ones."""

from __future__ import annotations

import random
from typing import Sequence

from . import f2
from .addcode import (
    AdditiveCode,
    dual,
    is_linear,
    is_self_orthogonal,
    quantum_params,
    require_self_orthogonal,
    weight_distribution,
)
from .enumeration import all_words
from .gf4core import SymplecticVector, scale_symplectic, symplectic_inner


class ConstructionError(ValueError):
    """A construction's precondition does not hold."""


def _k(C: AdditiveCode) -> int:
    return C.n - C.r


def _concat(u: SymplecticVector, v: SymplecticVector) -> SymplecticVector:
    return SymplecticVector(u.n + v.n, u.a | (v.a << u.n), u.b | (v.b << u.n))


def _embed(n: int, v: SymplecticVector, offset: int) -> SymplecticVector:
    return SymplecticVector(n, v.a << offset, v.b << offset)


def _restrict(v: SymplecticVector, coords: Sequence[int]) -> SymplecticVector:
    a = b = 0
    for j, i in enumerate(coords):
        a |= ((v.a >> i) & 1) << j
        b |= ((v.b >> i) & 1) << j
    return SymplecticVector(len(coords), a, b)


def permute(C: AdditiveCode, order: Sequence[int]) -> AdditiveCode:
    """New coordinate j carries old coordinate order[j]."""
    return AdditiveCode(len(order), [_restrict(g, order) for g in C.generators])


def _subcode(C: AdditiveCode, functionals) -> list[SymplecticVector]:
    """Words of C killed by every F2-linear functional given (callables
    on SymplecticVector returning a bit), as a generator list."""
    gens = C.generators
    m = len(gens)
    images = []
    for g in gens:
        bits = 0
        for j, fn in enumerate(functionals):
            bits |= fn(g) << j
        images.append(bits)
    basis = f2.Basis()
    out = []
    for i, im in enumerate(images):
        v = (im << m) | (1 << i)
        red = basis.reduce(v)
        if red >> m == 0:
            w = SymplecticVector.zero(C.n)
            for t in range(m):
                if (red >> t) & 1:
                    w = w + gens[t]
            out.append(w)
        else:
            basis.add(v)
    return out


# ---------------------------------------------------------------------------
# direct sums and the modifications of a single code


def direct_sum(C1: AdditiveCode, C2: AdditiveCode) -> AdditiveCode:
    n = C1.n + C2.n
    gens = [_embed(n, g, 0) for g in C1.generators] + [_embed(n, g, C1.n) for g in C2.generators]
    return AdditiveCode(n, gens)


def c1() -> AdditiveCode:
    """The length-1 code {0, 1}."""
    return AdditiveCode.from_rows(["1"])


def lengthen(C: AdditiveCode) -> AdditiveCode:
    """[[n,k,d]] -> impure [[n+1,k,d]] by appending {0,1}; needs k > 0."""
    require_self_orthogonal(C)
    if _k(C) <= 0:
        raise ConstructionError("lengthen needs k > 0")
    return direct_sum(C, c1())


def shorten_pure(C: AdditiveCode, budget: int | None = None) -> AdditiveCode:
    """Pure [[n,k,d]] -> [[n-1,k+1,d-1]]: keep the words of C that vanish on
    coordinate 0, then delete it (the dual is C^perp punctured there)."""
    if C.n < 2:
        raise ConstructionError("shorten_pure needs n >= 2")
    qp = quantum_params(C, budget)
    if not qp.pure:
        raise ConstructionError("shorten_pure needs a pure code")
    sub = _subcode(C, [lambda v: v.a & 1, lambda v: v.b & 1])
    return AdditiveCode(C.n - 1, [_restrict(v, range(1, C.n)) for v in sub])


def reduce_k(C: AdditiveCode, budget: int | None = None) -> AdditiveCode:
    """[[n,k,d]] -> [[n,k-1,d]] by adding the first dual generator not in C."""
    require_self_orthogonal(C)
    k = _k(C)
    if k < 1:
        raise ConstructionError("reduce_k needs k >= 1")
    if k == 1 and not quantum_params(C, budget).pure:
        raise ConstructionError("reduce_k with k = 1 needs a pure code")
    for v in dual(C).generators:
        if v not in C:
            return AdditiveCode(C.n, list(C.generators) + [v])
    raise AssertionError("dual contains no word outside C although k >= 1")


def puncture(C: AdditiveCode) -> AdditiveCode:
    """[[n,k,d]] -> [[n-1,k,d-1]]: B = {u : 0u or 1u in C}."""
    require_self_orthogonal(C)
    if C.n < 2:
        raise ConstructionError("puncture needs n >= 2")
    # first symbol in {0, 1} means a_0 = b_0
    sub = _subcode(C, [lambda v: (v.a ^ v.b) & 1])
    return AdditiveCode(C.n - 1, [_restrict(v, range(1, C.n)) for v in sub])


def drop_weight1(C: AdditiveCode) -> AdditiveCode:
    """[[n,k,d]] -> [[n-1,k,d]] when C holds a weight-1 word: delete the
    coordinate that carries it (the word itself disappears)."""
    require_self_orthogonal(C)
    if C.n < 2:
        raise ConstructionError("drop_weight1 needs n >= 2")
    for i in range(C.n):
        for x in ((1, 0), (0, 1), (1, 1)):
            if SymplecticVector(C.n, x[0] << i, x[1] << i) in C:
                keep = [j for j in range(C.n) if j != i]
                return AdditiveCode(C.n - 1, [_restrict(g, keep) for g in C.generators])
    raise ConstructionError("code has no word of weight 1")


# ---------------------------------------------------------------------------
# deleting the support of a binary dual word


def support_code(C: AdditiveCode, budget: int | None = None) -> list[int]:
    """Basis of the binary code spanned by the supports of all codewords."""
    b = f2.Basis()
    for a, bb in all_words(C.pairs(), C.n, budget):
        b.add(a | bb)
    return b.vectors()


def find_word_of_weight(rows: Sequence[int], n: int, m: int, seed: int = 0, tries: int = 2000) -> int | None:
    """A word of weight exactly m in span(rows), by randomized information-set
    sampling (single rows and pairs after random systematic reduction)."""
    rows = f2.independent(rows)
    if m == 0:
        return 0
    full = (1 << n) - 1
    if full in f2.Basis(rows) and m > n // 2:
        w = find_word_of_weight(rows, n, n - m, seed, tries)
        return None if w is None else w ^ full
    rng = random.Random(seed)
    for _ in range(tries):
        order = list(range(n))
        rng.shuffle(order)
        work = list(rows)
        sys_rows = []
        for c in order:
            piv = next((r for r in work if (r >> c) & 1), None)
            if piv is None:
                continue
            work.remove(piv)
            work = [r ^ piv if (r >> c) & 1 else r for r in work]
            sys_rows = [r ^ piv if (r >> c) & 1 else r for r in sys_rows]
            sys_rows.append(piv)
            if not work:
                break
        for i, r in enumerate(sys_rows):
            if r.bit_count() == m:
                return r
            for s in sys_rows[i + 1:]:
                if (r ^ s).bit_count() == m:
                    return r ^ s
        for _ in range(32):
            w = 0
            for r in sys_rows:
                if rng.random() < 0.5:
                    w ^= r
            if w.bit_count() == m:
                return w
    return None


def shorten_by_support(C: AdditiveCode, target_m: int, seed: int = 0, budget: int | None = None) -> AdditiveCode:
    """Delete the support of a weight-target_m word of the binary dual of the
    support code; the result of a linear [[n,k,d]] is [[n-m, >=k-m, >=d]]."""
    require_self_orthogonal(C)
    if not is_linear(C):
        raise ConstructionError("shorten_by_support needs a linear code")
    S = support_code(C, budget)
    word = find_word_of_weight(f2.kernel(S, C.n), C.n, target_m, seed)
    if word is None:
        raise ConstructionError(f"no binary dual word of weight {target_m} found")
    keep = [i for i in range(C.n) if not (word >> i) & 1]
    return AdditiveCode(len(keep), [_restrict(g, keep) for g in C.generators])


# ---------------------------------------------------------------------------
# pasting and concatenation


def hyperbolic_basis(C: AdditiveCode) -> list[tuple[SymplecticVector, SymplecticVector]]:
    """Pairs (e_i, f_i) spanning dual(C) modulo C with <e_i, f_j> = delta_ij
    and the e's and f's mutually orthogonal.

    When C is linear the pairs are taken as (e, w e), which makes the
    induced map onto GF(4)^k linear.
    """
    require_self_orthogonal(C)
    span = f2.Basis(C.packed())
    rest = [v for v in dual(C).generators if span.add(v.packed)]
    linear = is_linear(C)
    pairs = []
    while rest:
        e = f = None
        if linear:
            for i, v in enumerate(rest):
                wv = scale_symplectic(v, 1)
                if symplectic_inner(v, wv):
                    e, f = v, wv
                    break
        if e is None:
            e = rest[0]
            f = next((v for v in rest[1:] if symplectic_inner(e, v)), None)
            if f is None:
                raise AssertionError("degenerate quotient: no partner for a basis vector")
        pairs.append((e, f))
        quotient = f2.Basis(C.packed() + [e.packed, f.packed])
        nxt = []
        for v in rest:
            w = v
            if symplectic_inner(v, f):
                w = w + e
            if symplectic_inner(v, e):
                w = w + f
            if quotient.add(w.packed):
                nxt.append(w)
        rest = nxt
    return pairs


def rho_map(pairs: Sequence[tuple[SymplecticVector, SymplecticVector]], v: SymplecticVector) -> SymplecticVector:
    """rho(v)_i has a-part <v, f_i> and b-part <v, e_i>, so rho(e_i) = w and rho(f_i) = W."""
    a = b = 0
    for i, (e, f) in enumerate(pairs):
        a |= symplectic_inner(v, f) << i
        b |= symplectic_inner(v, e) << i
    return SymplecticVector(len(pairs), a, b)


def paste(C1: AdditiveCode, C2: AdditiveCode) -> AdditiveCode:
    """{uv : v in C2^perp, u rho(v) in C1}, where rho(v) is matched against
    the last k2 coordinates of C1.  [[n1,k1,d1]] and [[n2,k2,d2]] give
    [[n1+n2-k2, k1, >= min(d1, d1+d2-k2)]]."""
    require_self_orthogonal(C1)
    pairs = hyperbolic_basis(C2)
    k2 = len(pairs)
    if k2 > C1.n:
        raise ConstructionError(f"k2 = {k2} exceeds n1 = {C1.n}")
    head = C1.n - k2
    D2 = dual(C2)
    tail_mask = ((1 << k2) - 1) << head
    items = []
    for g in C1.generators:
        t = ((g.a & tail_mask) >> head) | (((g.b & tail_mask) >> head) << k2)
        items.append((t, _restrict(g, range(head)), SymplecticVector.zero(C2.n)))
    for v in D2.generators:
        r = rho_map(pairs, v)
        items.append((r.a | (r.b << k2), SymplecticVector.zero(head), v))
    m = len(items)
    basis = f2.Basis()
    out = []
    for i, (t, u, v) in enumerate(items):
        w = (t << m) | (1 << i)
        red = basis.reduce(w)
        if red >> m == 0:
            uu, vv = SymplecticVector.zero(head), SymplecticVector.zero(C2.n)
            for j in range(m):
                if (red >> j) & 1:
                    uu = uu + items[j][1]
                    vv = vv + items[j][2]
            out.append(_concat(uu, vv))
        else:
            basis.add(w)
    return AdditiveCode(head + C2.n, out)


def concatenate(outer: AdditiveCode, inner: AdditiveCode) -> AdditiveCode:
    """Encode each m-coordinate block of the outer code with the inner
    [[n2, m, d2]] code by repeated pasting; block i of the result occupies
    coordinates [i n2, (i+1) n2)."""
    m = _k(inner)
    if m < 1 or outer.n % m:
        raise ConstructionError(f"outer length {outer.n} is not a multiple of the inner k = {m}")
    n2 = inner.n
    blocks = outer.n // m
    cur = outer
    for i in range(blocks):
        done = i * n2
        # move block i (right after the finished part) to the end
        order = (
            list(range(done))
            + list(range(done + m, cur.n))
            + list(range(done, done + m))
        )
        cur = paste(permute(cur, order), inner)
        # bring the freshly encoded block back to position i
        tot = cur.n
        new = list(range(tot - n2, tot))
        order = list(range(done)) + new + list(range(done, tot - n2))
        cur = permute(cur, order)
    return cur


def block_distance(C: AdditiveCode, m: int, budget: int | None = None) -> int | None:
    """Least number of nonzero m-coordinate blocks over nonzero words of
    dual(C); None when the dual is too large to enumerate."""
    D = dual(C)
    try:
        words = all_words(D.pairs(), D.n, budget)
    except Exception:
        return None
    masks = [((1 << m) - 1) << (i * m) for i in range(C.n // m)]
    best = None
    for a, b in words:
        s = a | b
        if s:
            t = sum(1 for mk in masks if s & mk)
            best = t if best is None else min(best, t)
    return best


def concatenation_promise(outer: AdditiveCode, inner: AdditiveCode, budget: int | None = None) -> tuple[int | None, bool]:
    """(promised distance d * d2, checked).  checked is False when the
    outer dual or the inner code could not be enumerated."""
    m = _k(inner)
    try:
        d2 = quantum_params(inner, budget).d
    except Exception:
        return None, False
    d = block_distance(outer, m, budget)
    if d is None:
        return None, False
    return d * d2, True


# ---------------------------------------------------------------------------
# binary-code constructions


def _bits(row: int | str) -> int:
    if isinstance(row, str):
        return sum(1 << i for i, ch in enumerate(row) if ch == "1")
    return row


def css(C1: Sequence[int | str], C2: Sequence[int | str], n: int | None = None) -> AdditiveCode:
    """C = w C1 + W C2^perp for binary C1 <= C2 (rows as masks or '0101' strings)."""
    r1 = [_bits(r) for r in C1]
    r2 = [_bits(r) for r in C2]
    if n is None:
        strs = [r for r in list(C1) + list(C2) if isinstance(r, str)]
        if not strs:
            raise ConstructionError("length n is required for integer rows")
        n = len(strs[0])
    b2 = f2.Basis(r2)
    if any(r not in b2 for r in r1):
        raise ConstructionError("C1 is not contained in C2")
    gens = [SymplecticVector(n, c, 0) for c in r1] + [SymplecticVector(n, 0, h) for h in f2.kernel(r2, n)]
    C = AdditiveCode(n, gens)
    require_self_orthogonal(C)
    return C


def hamming_7_4() -> list[str]:
    return ["1101000", "0110100", "0011010", "0001101"]


def simplex_rows(m: int) -> list[int]:
    """Basis of the binary simplex code: row i has bit (x-1) equal to bit i of x."""
    return [sum(((x >> i) & 1) << (x - 1) for x in range(1, 1 << m)) for i in range(m)]


def _mat_vec(F: Sequence[Sequence[int]], u: int, m: int) -> int:
    out = 0
    for i in range(m):
        s = 0
        for j in range(m):
            s ^= F[i][j] & ((u >> j) & 1)
        out |= s << i
    return out


def _invertible(F: Sequence[Sequence[int]], m: int) -> bool:
    rows = [sum(F[i][j] << j for j in range(m)) for i in range(m)]
    return f2.rank(rows) == m


def gottesman_code(m: int, F: Sequence[Sequence[int]]) -> AdditiveCode:
    """(2^m, 2^(m+2)) code from a fixed-point-free simplex automorphism.

    The matrix F acts on messages, f(c_u) = c_(F u).  Generators are
    u + w f(u) with a 0 appended, for u over a simplex basis, plus the
    all-1 and all-w words.
    """
    if m < 2:
        raise ConstructionError("gottesman_code needs m >= 2")
    if len(F) != m or any(len(row) != m for row in F):
        raise ConstructionError(f"f must be an {m} x {m} binary matrix")
    if not _invertible(F, m):
        raise ConstructionError("f is not invertible")
    FI = [[F[i][j] ^ (i == j) for j in range(m)] for i in range(m)]
    if not _invertible(FI, m):
        raise ConstructionError("f has a nonzero fixed point")
    n = 1 << m

    def codeword(u: int) -> int:
        return sum(((bin(u & x).count("1")) & 1) << (x - 1) for x in range(1, n))

    gens = []
    for i in range(m):
        u = codeword(1 << i)
        fu = codeword(_mat_vec(F, 1 << i, m))
        # u + w f(u): binary 1 is (1,1) and w is (1,0)
        gens.append(SymplecticVector(n, u ^ fu, u))
    full = (1 << n) - 1
    gens += [SymplecticVector(n, full, full), SymplecticVector(n, full, 0)]
    return AdditiveCode(n, gens)


def companion(poly_bits: int) -> list[list[int]]:
    """Companion matrix of a binary polynomial given as a bitmask."""
    m = poly_bits.bit_length() - 1
    F = [[0] * m for _ in range(m)]
    for i in range(1, m):
        F[i][i - 1] = 1
    for i in range(m):
        F[i][m - 1] = (poly_bits >> i) & 1
    return F


def block_diag(*blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    m = sum(len(b) for b in blocks)
    F = [[0] * m for _ in range(m)]
    o = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                F[o + i][o + j] = x
        o += len(b)
    return F


def gottesman_matrix(m: int) -> list[list[int]]:
    """Shift-up matrix with a last row of ones; first row complemented for odd m."""
    F = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        F[i][i + 1] = 1
    F[m - 1] = [1] * m
    if m % 2:
        F[0] = [1 - x for x in F[0]]
    return F


def hamming_513() -> AdditiveCode:
    """The (5, 2^4) code with GF(4)-generators 01111 and 101wW."""
    return AdditiveCode.from_rows(["01111", "101wW"], linear=True)


def gottesman_833() -> AdditiveCode:
    return gottesman_code(3, companion(0b1011))


def extend_gottesman(m: int) -> AdditiveCode:
    """[[n, n-m-2, 3]] codes: C_m = {v1 v2 : v1 in C_(m-2), phi(v1) = v2 + G'_m}.

    phi sends the reduced basis of C_(m-2), taken in decreasing pivot order,
    to the generators u + w f(u) of G_m (Gottesman's f) in order.
    """
    if m < 2:
        raise ConstructionError("extend_gottesman needs m >= 2")
    if m == 2:
        return hamming_513()
    if m == 3:
        return gottesman_833()
    prev = extend_gottesman(m - 2)
    G = gottesman_code(m, gottesman_matrix(m))
    quotient_reps = list(G.generators[:m])
    heavy = list(G.generators[m:])
    basis = [SymplecticVector.from_packed(prev.n, v) for v in f2.Basis(prev.packed()).vectors()]
    if len(basis) != m:
        raise AssertionError("C_(m-2) should have dimension m")
    n = prev.n + G.n
    gens = [_concat(v1, v2) for v1, v2 in zip(basis, quotient_reps)]
    gens += [_concat(SymplecticVector.zero(prev.n), h) for h in heavy]
    return AdditiveCode(n, gens)


def _rows_of(F) -> list[int]:
    return [sum(F[i][j] << j for j in range(len(F))) for i in range(len(F))]


def _mat_mul(A: list[int], B: list[int], m: int) -> list[int]:
    # rows as bitmasks, bit j = column j
    out = []
    for r in A:
        acc = 0
        for j in range(m):
            if (r >> j) & 1:
                acc ^= B[j]
        out.append(acc)
    return out


def _mat_inv(A: list[int], m: int) -> list[int] | None:
    aug = [A[i] | (1 << (m + i)) for i in range(m)]
    for c in range(m):
        piv = next((i for i in range(c, m) if (aug[i] >> c) & 1), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        for i in range(m):
            if i != c and (aug[i] >> c) & 1:
                aug[i] ^= aug[c]
    return [r >> m for r in aug]


def _eval_poly(p: int, A: list[int], m: int) -> list[int]:
    ident = [1 << i for i in range(m)]
    out = [0] * m
    power = ident
    while p:
        if p & 1:
            out = [x ^ y for x, y in zip(out, power)]
        power = _mat_mul(power, A, m)
        p >>= 1
    return out


def conjugacy_signature(A: list[int], m: int) -> tuple[int, ...]:
    """Ranks of p(A)^j over irreducible p of degree <= m and j <= m; two
    matrices are conjugate in GL_m(2) exactly when these agree."""
    from .polynomials import is_irreducible

    sig = []
    for p in range(2, 1 << (m + 1)):
        if not is_irreducible(p):
            continue
        base = _eval_poly(p, A, m)
        cur = [1 << i for i in range(m)]
        for _ in range(m):
            cur = _mat_mul(cur, base, m)
            sig.append(f2.rank(cur))
    return tuple(sig)


def _divisor_multisets(m: int) -> list[list[int]]:
    """Elementary-divisor lists p^e (as bitmasks) of total degree m, with
    p irreducible and p not x or x+1."""
    from .polynomials import clmul, is_irreducible

    powers = []
    for p in range(7, 1 << (m + 1)):
        if not is_irreducible(p):
            continue
        q = p
        while q.bit_length() - 1 <= m:
            powers.append(q)
            q = clmul(q, p)
    powers.sort()
    out: list[list[int]] = []

    def rec(start: int, left: int, acc: list[int]) -> None:
        if left == 0:
            out.append(list(acc))
            return
        for i in range(start, len(powers)):
            d = powers[i].bit_length() - 1
            if d <= left:
                acc.append(powers[i])
                rec(i, left - d, acc)
                acc.pop()

    rec(0, m, [])
    return out


def divisor_matrix(divisors: Sequence[int]) -> list[list[int]]:
    """Block-diagonal matrix of companion blocks for the given divisors."""
    return block_diag(*(companion(p) for p in divisors))


def gottesman_classes(m: int) -> list[list[int]]:
    """Elementary divisors of one f per equivalence class of the codes
    gottesman_code(m, f).

    f runs over fixed-point-free elements of GL_m(2) up to conjugation and
    the six maps f, 1-f, 1/f, 1-1/f, 1/(1-f), f/(1-f).
    """
    ident = [1 << i for i in range(m)]
    seen: dict[tuple, list[int]] = {}
    for divs in _divisor_multisets(m):
        A = _rows_of(divisor_matrix(divs))
        inv = _mat_inv(A, m)
        one_minus = [x ^ y for x, y in zip(A, ident)]
        om_inv = _mat_inv(one_minus, m)
        orbit = [
            A,
            one_minus,
            inv,
            [x ^ y for x, y in zip(inv, ident)],
            om_inv,
            _mat_mul(A, om_inv, m),
        ]
        key = min(conjugacy_signature(B, m) for B in orbit)
        seen.setdefault(key, divs)
    return list(seen.values())


def satisfies_f2_f_1(F: Sequence[Sequence[int]]) -> bool:
    """f^2 + f + 1 = 0, the condition for gottesman_code(m, f) to be linear."""
    m = len(F)
    A = _rows_of(F)
    sq = _mat_mul(A, A, m)
    return all((sq[i] ^ A[i] ^ (1 << i)) == 0 for i in range(m))


def uuv(C1: AdditiveCode, C2: AdditiveCode, budget: int | None = None) -> AdditiveCode:
    """{u | u+v : u in C2^perp, v in C1} for pure C1 <= C2 of equal length."""
    if C1.n != C2.n:
        raise ConstructionError("codes must have the same length")
    if not C1.issubset(C2):
        raise ConstructionError("C1 is not contained in C2")
    for C in (C1, C2):
        if not quantum_params(C, budget).pure:
            raise ConstructionError("both codes must be pure")
    n = C1.n
    gens = [_concat(u, u) for u in dual(C2).generators]
    gens += [_concat(SymplecticVector.zero(n), v) for v in C1.generators]
    return AdditiveCode(2 * n, gens)


# ---------------------------------------------------------------------------
# trivial codes and the d_n family


def dn_code(n: int) -> AdditiveCode:
    """Even-weight binary words of length n."""
    if n < 2:
        raise ConstructionError("d_n needs n >= 2")
    return AdditiveCode(n, [SymplecticVector(n, 3 << i, 3 << i) for i in range(n - 1)])


def dn_plus(n: int) -> AdditiveCode:
    """<d_n, ww...w>, self-dual with d = 2."""
    full = (1 << n) - 1
    return AdditiveCode(n, list(dn_code(n).generators) + [SymplecticVector(n, full, 0)])


def trivial_code(n: int, k: int, d: int) -> AdditiveCode:
    if d == 1:
        if not (n >= 1 and 0 <= k <= n):
            raise ConstructionError("[[n,k,1]] needs n >= 1 and 0 <= k <= n")
        return AdditiveCode(n, [SymplecticVector(n, 1 << i, 1 << i) for i in range(n - k)])
    if d != 2:
        raise ConstructionError("trivial codes have d in {1, 2}")
    if n < 2:
        raise ConstructionError("[[n,k,2]] needs n >= 2")
    if k == 0:
        return dn_plus(n)
    if n % 2 == 1:
        if k > n - 3:
            raise ConstructionError("[[n,k,2]] with n odd needs k <= n-3")
        return lengthen(trivial_code(n - 1, k, 2))
    if k > n - 2:
        raise ConstructionError("[[n,k,2]] with n even needs k <= n-2")
    full = (1 << n) - 1
    C = AdditiveCode(n, [SymplecticVector(n, full, full), SymplecticVector(n, full, 0)])
    while _k(C) > k:
        C = reduce_k(C)
    return C
