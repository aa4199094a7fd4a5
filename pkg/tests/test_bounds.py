import random
from fractions import Fraction

import pytest

from conftest import random_self_orthogonal
from qgf4 import catalog
from qgf4.addcode import dual, is_even, macwilliams, quantum_params, weight_distribution
from qgf4.bounds import (
    build_lp,
    clifford_orders,
    divisibility_constant,
    gleason_decompose,
    krawtchouk,
    lp_enumerator_feasible,
    lp_feasible,
    lp_max_distance,
    satisfies,
    selfdual_distance_bound,
    shadow_enumerator,
    singleton_ok,
    sphere_packing_ok,
    witness_consistent,
)


def test_krawtchouk_examples():
    for n in range(1, 8):
        assert all(krawtchouk(0, x, n) == 1 for x in range(n + 1))
        assert krawtchouk(1, 0, n) == 3 * n
        assert krawtchouk(n, 0, n) == 3**n
    with pytest.raises(ValueError):
        krawtchouk(4, 0, 3)


def test_krawtchouk_is_the_macwilliams_kernel():
    # A'_j = 2^-(n-k) * sum_r P_j(r) A_r, with MacWilliams computed separately
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 8)
        C = random_self_orthogonal(rng, n)
        A = weight_distribution(C).coeffs
        via_k = [Fraction(sum(krawtchouk(j, r, n) * A[r] for r in range(n + 1)), 2**C.r) for j in range(n + 1)]
        assert via_k == list(macwilliams(A, C.r).coeffs)
        assert via_k == list(weight_distribution(dual(C)).coeffs)


def test_sphere_packing_examples():
    assert sphere_packing_ok(5, 1, 3) and 1 + 3 * 5 == 2**4
    assert sphere_packing_ok(85, 77, 3) and 1 + 3 * 85 == 2**8
    assert not sphere_packing_ok(4, 1, 3)
    assert sphere_packing_ok(4, 1, 1)


def test_singleton_examples():
    assert singleton_ok(6, 0, 4, pure=True)
    assert not singleton_ok(6, 1, 4, pure=True)
    assert singleton_ok(5, 1, 3) and not singleton_ok(4, 1, 3)
    # every verified catalog entry respects both forms
    for e in catalog.entries():
        if e.claimed is None:
            continue
        n, k, d, pure = e.claimed
        assert singleton_ok(n, k, d, pure), e.name


def test_shadow_examples():
    dodeca = weight_distribution(catalog.get("dodecacode").code)
    S = shadow_enumerator(dodeca, 0)
    assert all(s >= 0 for s in S)
    # an even self-dual code is its own shadow
    assert S == [Fraction(a) for a in dodeca.coeffs]
    for name in ("hexacode", "selfdual_5_3", "c1", "d3_plus", "cyclic_15_0_6", "quasicyclic_14_0_6"):
        S = shadow_enumerator(weight_distribution(catalog.get(name).code), 0)
        assert all(s >= 0 and s.denominator == 1 for s in S), name


def test_shadow_matches_brute_force():
    """S_j counts vectors v of weight j with <v, u> = wt(u) mod 2 for all u in C."""
    from qgf4.gf4core import SymplecticVector, symplectic_inner

    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(1, 6)
        C = random_self_orthogonal(rng, n)
        k = n - C.r
        S = shadow_enumerator(weight_distribution(C), k)
        counts = [0] * (n + 1)
        for a in range(1 << n):
            for b in range(1 << n):
                v = SymplecticVector(n, a, b)
                if all(symplectic_inner(v, g) == g.weight() % 2 for g in C.generators):
                    counts[v.weight()] += 1
        assert S == [Fraction(c) for c in counts]


def test_lp_examples():
    res = lp_feasible(12, 0, 6)
    assert res.feasible and res.verify()
    res = lp_feasible(10, 1, 5)
    assert not res.feasible and res.verify()
    assert lp_feasible(11, 1, 5).feasible
    with pytest.raises(ValueError):
        build_lp(5, 1, 1, False, 1)


def test_lp_soundness_on_verified_codes():
    """Existing codes are never declared infeasible."""
    for e in catalog.entries():
        if e.claimed is None:
            continue
        n, k, d, pure = e.claimed
        if d < 2 or n > 20:
            continue
        e.verify()
        assert e.verified
        res = lp_feasible(n, k, d, pure)
        assert res.feasible, e.name
        assert res.verify()


def test_lp_accepts_actual_distributions():
    """The true distribution of a code satisfies one branch of its own LP."""
    rng = random.Random(43)
    checked = 0
    for _ in range(80):
        n = rng.randint(3, 8)
        C = random_self_orthogonal(rng, n)
        qp = quantum_params(C)
        if qp.d < 2 or C.r == 0:
            continue
        A = [Fraction(a) for a in weight_distribution(C).coeffs]
        if A[1]:
            continue
        branch = 2 if is_even(C) else 1
        prob = build_lp(n, qp.k, qp.d, qp.pure, branch)
        assert satisfies(prob.rows, A[2:])
        assert witness_consistent(prob, A)
        checked += 1
    assert checked > 10


def test_lp_monotone_in_distance():
    for n in range(4, 10):
        for k in range(0, n - 1):
            seen_infeasible = False
            for d in range(2, n + 1):
                f = lp_feasible(n, k, d).feasible
                assert not (seen_infeasible and f), (n, k, d)
                seen_infeasible |= not f


def test_lp_witness_and_certificates_check():
    for n, k, d in [(8, 3, 3), (9, 1, 4), (10, 1, 5), (6, 0, 4), (7, 0, 4), (13, 1, 6)]:
        res = lp_feasible(n, k, d)
        assert res.verify()
        if res.feasible:
            assert witness_consistent(res.problems[res.branch], res.witness)
        else:
            assert set(res.certificates) == {1, 2}


def test_lp_max_distance_examples():
    assert lp_max_distance(5, 1) == 3
    assert lp_max_distance(12, 0) == 6
    assert lp_max_distance(4, 4) == 1


def test_distribution_and_enumerator_forms_agree():
    """Feasibility of the 2^(n-k) distribution LP and of the enumerator LP
    with K = 2^k agree (for k = 0 both forms read d as a minimum weight)."""
    for n in range(2, 7):
        for k in range(n + 1):
            for d in range(2, n + 1):
                for pure in (False, True):
                    a = lp_feasible(n, k, d, pure).feasible
                    b = lp_enumerator_feasible(n, d, Fraction(2**k), pure=pure or k == 0)
                    assert b.verify()
                    assert a == b.feasible, (n, k, d, pure)


def test_enumerator_form_k_override():
    # K need not be a power of two
    res = lp_feasible(5, 0, 3, K_override=Fraction(2))
    assert res.verify()
    assert lp_feasible(5, 0, 3, K_override=Fraction(2)).feasible == lp_enumerator_feasible(5, 3, Fraction(2)).feasible
    with pytest.raises(ValueError):
        lp_enumerator_feasible(5, 3, Fraction(0))
    with pytest.raises(ValueError):
        lp_enumerator_feasible(5, 6, Fraction(1))


def test_gleason_examples():
    dodeca = weight_distribution(catalog.get("dodecacode").code)
    assert gleason_decompose(dodeca, even=True) is not None
    hexa = weight_distribution(catalog.get("hexacode").code)
    assert gleason_decompose(hexa, even=True) is not None
    # x^n alone is not the enumerator of any self-dual code
    for n in (2, 3, 6):
        assert gleason_decompose([1] + [0] * n) is None
    assert gleason_decompose([1, 0, 0, 0], even=True) is None


def test_gleason_holds_for_all_small_selfdual_codes():
    from qgf4.selfdual import enumerate_selfdual

    for n in range(1, 5):
        for C in enumerate_selfdual(n):
            W = weight_distribution(C)
            assert gleason_decompose(W) is not None
            assert (gleason_decompose(W, even=True) is not None) == is_even(C)


def test_selfdual_distance_bound_examples():
    assert selfdual_distance_bound(12, even=True) == 6
    assert selfdual_distance_bound(2) == 2
    assert selfdual_distance_bound(30, even=True) == 12
    for e in catalog.entries():
        if e.claimed and e.claimed[1] == 0:
            C = e.code
            assert e.claimed[2] <= selfdual_distance_bound(C.n, is_even(C)), e.name
    with pytest.raises(ValueError):
        selfdual_distance_bound(0)


def test_divisibility_constant():
    assert divisibility_constant(catalog.get("dodecacode").code) == 2
    assert divisibility_constant(catalog.get("c1").code) == 1
    for name in ("hexacode", "selfdual_5_3", "d4_plus", "cyclic_15_0_6", "cyclic_21_0_8"):
        assert divisibility_constant(catalog.get(name).code) in (1, 2)
    with pytest.raises(ValueError):
        divisibility_constant(catalog.get("hamming_5_1_3").code)


def test_clifford_orders():
    L1, LR1 = clifford_orders(1)
    assert L1 == 192
    L3, LR3 = clifford_orders(3)
    assert LR3 == 5160960
    prev = (0, 0)
    for n in range(1, 7):
        L, LR = clifford_orders(n)
        assert L > prev[0] and LR > prev[1]
        prev = (L, LR)
    # |L| is 8 scalars times 4^n Paulis times |Sp(2n, 2)|
    for n in (1, 2, 3):
        L, _ = clifford_orders(n)
        sp = 2 ** (n * n)
        for j in range(1, n + 1):
            sp *= 4**j - 1
        assert L == 8 * 4**n * sp
    with pytest.raises(ValueError):
        clifford_orders(0)
