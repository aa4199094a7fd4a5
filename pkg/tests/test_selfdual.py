from collections import deque

import pytest

from qgf4 import catalog
from qgf4.addcode import AdditiveCode, dual, is_self_dual
from qgf4.bounds import selfdual_distance_bound
from qgf4.constructions import direct_sum, dn_plus
from qgf4.equivalence import are_equivalent, group_order
from qgf4.selfdual import (
    ScaleLimitExceeded,
    check_aut_by_search,
    classify_selfdual,
    enumerate_selfdual,
    is_decomposable,
    mass,
    mass_formula_rhs,
    selfdual_count,
    weight2_decomposition,
)


@pytest.fixture(scope="module")
def classes5():
    return classify_selfdual(5)[0]


def grow_selfdual_keys(n: int) -> set[tuple[int, ...]]:
    """Every self-dual code, reached by adding one isotropic vector at a time
    from the zero code."""
    seen = {AdditiveCode(n).key()}
    queue = deque([AdditiveCode(n)])
    done = set()
    while queue:
        C = queue.popleft()
        if C.r == n:
            done.add(C.key())
            continue
        for v in dual(C).words():
            if v in C:
                continue
            D = AdditiveCode(n, list(C.generators) + [v])
            if D.key() not in seen:
                seen.add(D.key())
                queue.append(D)
    return done


def test_count_examples():
    assert selfdual_count(1) == 3
    assert selfdual_count(5) == 75735
    assert sum(1 for _ in enumerate_selfdual(1)) == 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_growth(n):
    emitted = [C.key() for C in enumerate_selfdual(n)]
    assert len(emitted) == len(set(emitted)) == selfdual_count(n)
    assert set(emitted) == grow_selfdual_keys(n)


def test_emitted_codes_are_self_dual():
    for n in range(1, 5):
        count = 0
        for C in enumerate_selfdual(n):
            assert C.r == n and is_self_dual(C)
            count += 1
        assert count == selfdual_count(n)


def test_limits():
    with pytest.raises(ScaleLimitExceeded):
        next(enumerate_selfdual(7))
    with pytest.raises(ScaleLimitExceeded):
        classify_selfdual(6)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classes_small(n):
    classes, total = classify_selfdual(n)
    assert total == selfdual_count(n)
    assert sum(c.orbit_size for c in classes) == total
    assert mass(classes) == mass_formula_rhs(n)
    for c in classes:
        assert c.d <= selfdual_distance_bound(n, c.even)
        assert check_aut_by_search(c)
        assert c.indecomposable == (not is_decomposable(c.representative))
    # classes really are distinct
    reps = [c.representative for c in classes]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not are_equivalent(reps[i], reps[j])


def test_indecomposables_match_catalog(classes5):
    small = {n: [c for c in classify_selfdual(n)[0] if c.indecomposable] for n in (1, 2, 3, 4)}
    assert len(small[1]) == 1 and are_equivalent(small[1][0].representative, catalog.get("c1").code)
    for n in (2, 3):
        [only] = small[n]
        assert are_equivalent(only.representative, dn_plus(n))
    named4 = [dn_plus(4), catalog.get("selfdual_4_indecomposable").code]
    assert len(small[4]) == 2
    assert all(any(are_equivalent(c.representative, x) for x in named4) for c in small[4])
    ind5 = [c for c in classes5 if c.indecomposable]
    assert len(ind5) == 4
    named5 = [dn_plus(5), catalog.get("selfdual_5_3").code,
              catalog.get("selfdual_5_indecomposable_a").code,
              catalog.get("selfdual_5_indecomposable_b").code]
    for x in named5:
        assert sum(are_equivalent(c.representative, x) for c in ind5) == 1


def test_classes_five(classes5):
    assert len(classes5) == 11
    assert sum(c.orbit_size for c in classes5) == selfdual_count(5)
    assert mass(classes5) == mass_formula_rhs(5)
    assert max(c.d for c in classes5) == 3
    for c in classes5:
        assert group_order(5) == c.aut_order * c.orbit_size


def test_weight2_decomposition():
    d4 = AdditiveCode.from_rows(["1100", "0110", "0011"])
    assert weight2_decomposition(d4) == [("d4", (0, 1, 2, 3))]
    d2p = AdditiveCode.from_rows(["11", "ww"])
    d2 = AdditiveCode.from_rows(["11"])
    assert weight2_decomposition(direct_sum(d2p, d2)) == [("d2+", (0, 1)), ("d2", (2, 3))]
    with pytest.raises(ValueError):
        weight2_decomposition(catalog.get("hexacode").code)
    with pytest.raises(ValueError):
        weight2_decomposition(AdditiveCode.from_rows(["110"]))
