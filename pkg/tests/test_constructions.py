import random
from itertools import product
from math import comb

import pytest

from conftest import random_self_orthogonal
from qgf4 import catalog
from qgf4.addcode import (
    AdditiveCode,
    dual,
    is_linear,
    is_self_dual,
    is_self_orthogonal,
    quantum_params,
    weight_distribution,
)
from qgf4.bounds import lp_feasible
from qgf4.constructions import (
    ConstructionError,
    c1,
    companion,
    concatenate,
    concatenation_promise,
    css,
    direct_sum,
    dn_code,
    dn_plus,
    drop_weight1,
    extend_gottesman,
    gottesman_code,
    hamming_513,
    hamming_7_4,
    hyperbolic_basis,
    lengthen,
    paste,
    puncture,
    reduce_k,
    shorten_by_support,
    shorten_pure,
    support_code,
    trivial_code,
    uuv,
)
from qgf4.cyclic import hamming_code
from qgf4.enumeration import all_words
from qgf4.equivalence import are_equivalent
from qgf4.gf4core import SymplecticVector, scale_symplectic, symplectic_inner


def params(C):
    return quantum_params(C).as_tuple()


def min_weight(C):
    return weight_distribution(C).min_weight()


def test_direct_sum():
    H = hamming_513()
    assert params(direct_sum(H, H)) == (10, 2, 3, True)
    assert direct_sum(H, AdditiveCode(0)) == H


def test_lengthen_and_friends():
    H = hamming_513()
    assert params(lengthen(H)) == (6, 1, 3, False)
    hexa = catalog.get("hexacode").code
    assert params(shorten_pure(hexa)) == (5, 1, 3, True)
    G = catalog.get("code_8_3_3").code
    assert params(reduce_k(G))[:3] == (8, 2, 3)
    assert params(puncture(G))[:3] == (7, 3, 2)
    with pytest.raises(ConstructionError):
        lengthen(hexa)
    with pytest.raises(ConstructionError):
        shorten_pure(lengthen(H))
    with pytest.raises(ConstructionError):
        reduce_k(hexa)
    with pytest.raises(ConstructionError):
        reduce_k(lengthen(H))  # k = 1 and impure


def test_drop_weight1():
    H = hamming_513()
    C = direct_sum(c1(), H)
    out = drop_weight1(C)
    assert params(out) == (5, 1, 3, True)
    with pytest.raises(ConstructionError):
        drop_weight1(H)


def test_modifications_meet_promises_on_random_codes():
    rng = random.Random(21)
    for _ in range(150):
        n = rng.randint(2, 8)
        C = random_self_orthogonal(rng, n, rng.randint(0, n))
        n, k, d, pure = params(C)
        if k > 0:
            assert params(lengthen(C))[:3] == (n + 1, k, d)
        if pure and d >= 2 and k <= n - 2:
            n2, k2, d2, _ = params(shorten_pure(C))
            assert (n2, k2) == (n - 1, k + 1) and d2 >= d - 1
        if k > 1 or (k == 1 and pure):
            n2, k2, d2, _ = params(reduce_k(C))
            assert (n2, k2) == (n, k - 1) and d2 >= d
        if d < 2:
            continue
        n2, k2, d2, _ = params(puncture(C))
        assert (n2, k2) == (n - 1, k) and d2 >= d - 1


def test_shorten_then_reduce_never_beats_lp():
    rng = random.Random(22)
    seen = 0
    for _ in range(400):
        n = rng.randint(3, 8)
        C = random_self_orthogonal(rng, n, rng.randint(1, n - 1))
        qp = quantum_params(C)
        if not qp.pure or qp.k >= n - 1:
            continue
        S = shorten_pure(C)
        if quantum_params(S).k < 2:
            continue
        R = reduce_k(S)
        out = quantum_params(R)
        if out.d < 2:
            continue
        assert lp_feasible(out.n, out.k, out.d).feasible
        seen += 1
    assert seen > 5


def _binary_dual_distribution(A, n):
    """Binary MacWilliams transform, an independent oracle for the support code."""
    size = sum(A)
    out = []
    for j in range(n + 1):
        s = 0
        for i, a in enumerate(A):
            if a:
                s += a * sum((-1) ** t * comb(i, t) * comb(n - i, j - t) for t in range(j + 1))
        assert s % size == 0
        out.append(s // size)
    return out


def test_support_code_of_the_85_code():
    H = hamming_code(4)
    assert (H.n, H.r) == (85, 8)
    S = support_code(H)
    counts = [0] * 86
    for mask in range(1 << len(S)):
        v = 0
        for i, s in enumerate(S):
            if (mask >> i) & 1:
                v ^= s
        counts[v.bit_count()] += 1
    assert {j: c for j, c in enumerate(counts) if c} == {0: 1, 32: 3570, 40: 38080, 48: 23800, 64: 85}
    B = _binary_dual_distribution(counts, 85)
    present = {j for j, c in enumerate(B) if c}
    assert present == {0, 85} | set(range(5, 81))


def test_shorten_by_support_on_hamming_21():
    H = hamming_code(3)
    assert params(H) == (21, 15, 3, True)
    C = shorten_by_support(H, 9)
    n, k, d, _ = params(C)
    assert n == 12 and k >= 15 - 9 and d >= 3
    assert (n, k, d) == (12, 6, 3)
    assert is_linear(C) and is_self_orthogonal(C)
    with pytest.raises(ConstructionError):
        shorten_by_support(catalog.get("hexacode").code, 2)


def test_paste_examples():
    H = hamming_513()
    one = AdditiveCode.from_rows(["1"])
    assert params(paste(H, one)) == (6, 1, 3, False)
    P = paste(H, AdditiveCode.from_rows(["11"]))
    assert params(P)[:3] == (6, 1, 3)
    assert are_equivalent(P, catalog.get("second_6_1_3").code)
    assert not are_equivalent(P, lengthen(H))


def test_paste_bound_on_random_inputs():
    rng = random.Random(23)
    checked = 0
    for _ in range(80):
        n1 = rng.randint(2, 6)
        n2 = rng.randint(1, 4)
        C1 = random_self_orthogonal(rng, n1, rng.randint(0, n1))
        C2 = random_self_orthogonal(rng, n2, rng.randint(0, n2))
        _, k1, d1, _ = params(C1)
        _, k2, d2, _ = params(C2)
        if k2 > n1:
            with pytest.raises(ConstructionError):
                paste(C1, C2)
            continue
        P = paste(C1, C2)
        out = params(P)
        if k1 == 0:
            # d then means the minimum weight of the code itself, which
            # the words 0v (v in C2) can lower
            continue
        assert out[:2] == (n1 + n2 - k2, k1)
        assert out[2] >= min(d1, d1 + d2 - k2)
        checked += 1
    assert checked > 30


def test_hyperbolic_pairs():
    for C in [hamming_513(), catalog.get("code_8_3_3").code, AdditiveCode.from_rows(["11"])]:
        pairs = hyperbolic_basis(C)
        assert len(pairs) == C.n - C.r
        for i, (e, f) in enumerate(pairs):
            for j, (e2, f2) in enumerate(pairs):
                assert symplectic_inner(e, f2) == (i == j)
                assert symplectic_inner(e, e2) == 0 and symplectic_inner(f, f2) == 0
            assert all(symplectic_inner(e, g) == 0 and symplectic_inner(f, g) == 0 for g in C.generators)


def test_concatenation_examples():
    H = hamming_513()
    C = concatenate(H, H)
    assert C == catalog.get("concat_25_1_9").code
    assert concatenation_promise(H, H) == (9, True)
    assert concatenate(H, AdditiveCode(1)) == H
    with pytest.raises(ConstructionError):
        concatenate(AdditiveCode.from_rows(["1111111"]), catalog.get("code_8_3_3").code)


def _dual_rows(rows, n):
    from qgf4 import f2

    masks = [sum(int(c) << i for i, c in enumerate(r)) for r in rows]
    return f2.kernel(masks, n)


def test_css_examples():
    ham = hamming_7_4()
    simplex = _dual_rows(ham, 7)
    C = css(simplex, ham)
    assert params(C) == (7, 1, 3, True)
    full = ["1000", "0100", "0010", "0001"]
    assert params(css([], full, n=4)) == (4, 4, 1, True)
    e8 = ["11010001", "01101001", "00110101", "00011011"]
    assert params(css(e8, e8)) == (8, 0, 4, True)
    with pytest.raises(ConstructionError):
        css(ham, simplex, n=7)


def _gottesman_support(m):
    return {0: 1, 3 * 2 ** (m - 2): 4 * (2**m - 1), 2**m: 3}


def test_gottesman_every_f_at_m3():
    good = 0
    for entries in product((0, 1), repeat=9):
        F = [list(entries[3 * i:3 * i + 3]) for i in range(3)]
        try:
            C = gottesman_code(3, F)
        except ConstructionError:
            continue
        good += 1
        assert weight_distribution(C).support() == _gottesman_support(3)
        assert params(C) == (8, 3, 3, True)
    # fixed-point-free elements of GL_3(2): both 7-cycle classes, 24 + 24
    assert good == 48


def test_gottesman_companions_at_m4():
    polys = [p for p in range(16, 32) if p & 1 and bin(p).count("1") % 2 == 1]
    assert len(polys) == 4
    for p in polys:
        C = gottesman_code(4, companion(p))
        assert weight_distribution(C).support() == _gottesman_support(4)
        assert params(C)[:3] == (16, 10, 3)
    a = gottesman_code(4, companion(0b10101))  # (x^2+x+1)^2
    b = gottesman_code(4, companion(0b10011))  # x^4+x+1
    assert not is_linear(a) and not is_linear(b)


def test_gottesman_errors():
    with pytest.raises(ConstructionError):
        gottesman_code(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])  # fixes everything
    with pytest.raises(ConstructionError):
        gottesman_code(3, [[0, 0, 0], [0, 1, 0], [0, 0, 1]])  # singular
    with pytest.raises(ConstructionError):
        gottesman_code(1, [[1]])


def test_extend_gottesman():
    assert params(extend_gottesman(3)) == (8, 3, 3, True)
    assert params(extend_gottesman(2)) == (5, 1, 3, True)
    C4 = extend_gottesman(4)
    assert params(C4)[:3] == (21, 15, 3)
    C5 = extend_gottesman(5)
    assert (C5.n, C5.r) == (40, 7)
    assert params(C5)[:3] == (40, 33, 3)
    stored = catalog.get("extended_gottesman_40").code
    assert weight_distribution(C5) == weight_distribution(stored)
    # odd m: words of weight 2^m - 2 and 2^m beside zero
    m = 5
    assert weight_distribution(C5).support() == {0: 1, 30: 2 ** (m + 2) - 2 ** (m - 1), 32: 2 ** (m - 1) - 1}
    with pytest.raises(ConstructionError):
        extend_gottesman(1)


def test_uuv_examples():
    a = catalog.get("quasicyclic_14_8_3").code
    b = catalog.get("quasicyclic_14_0_6").code
    assert params(uuv(a, b)) == (28, 8, 6, True)
    hexa = catalog.get("hexacode").code
    word = next(SymplecticVector(6, x, y) for x, y in all_words(hexa.pairs(), 6)
                if (x | y).bit_count() == 6)
    C1 = AdditiveCode(6, [word, scale_symplectic(word, 1)])
    assert params(C1)[:3] == (6, 4, 2)
    U = uuv(C1, hexa)
    # the stored matrix is a different code with the same distribution
    assert weight_distribution(U) == weight_distribution(catalog.get("uuv_12_8").code)
    assert params(U) == (12, 4, 4, True)
    S = uuv(hexa, hexa)
    assert is_self_dual(S) and params(S) == (12, 0, 4, True)
    with pytest.raises(ConstructionError):
        uuv(hexa, C1)


def test_trivial_codes():
    assert trivial_code(2, 0, 2) == dn_plus(2)
    assert params(trivial_code(4, 2, 2)) == (4, 2, 2, True)
    assert params(trivial_code(5, 2, 2))[:3] == (5, 2, 2)
    for n in range(1, 7):
        for k in range(n + 1):
            assert params(trivial_code(n, k, 1))[:3] == (n, k, 1)
    for n in range(2, 9):
        top = n - 2 if n % 2 == 0 else n - 3
        for k in range(0, top + 1):
            assert params(trivial_code(n, k, 2))[:3] == (n, k, 2)
    with pytest.raises(ConstructionError):
        trivial_code(5, 3, 2)
    with pytest.raises(ConstructionError):
        trivial_code(4, 1, 3)


def test_dn_family():
    for n in range(2, 7):
        assert dn_code(n).r == n - 1
        assert is_self_dual(dn_plus(n)) and params(dn_plus(n))[2] == 2
    with pytest.raises(ConstructionError):
        dn_code(1)


def test_one_extra_generator_buys_nothing():
    rng = random.Random(24)
    for _ in range(100):
        n = rng.randint(2, 7)
        gens = [SymplecticVector(n, rng.getrandbits(n), rng.getrandbits(n)) for _ in range(rng.randint(1, 3))]
        D = AdditiveCode(n, gens + [scale_symplectic(g, 1) for g in gens])
        v = SymplecticVector(n, rng.getrandbits(n), rng.getrandbits(n))
        one = AdditiveCode(n, list(D.generators) + [v])
        both = AdditiveCode(n, list(D.generators) + [v, scale_symplectic(v, 1)])
        assert min_weight(one) == min_weight(both)


def test_outputs_are_self_orthogonal():
    H = hamming_513()
    outs = [lengthen(H), paste(H, AdditiveCode.from_rows(["11"])), concatenate(H, H),
            extend_gottesman(4), dual(dual(H))]
    assert all(is_self_orthogonal(C) for C in outs)
