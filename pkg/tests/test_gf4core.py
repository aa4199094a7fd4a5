import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgf4.gf4core import (
    Gf4,
    Gf4Vector,
    SymplecticVector,
    gf4_conj,
    gf4_inv,
    gf4_mul,
    gf4_trace,
    hermitian_inner,
    phi,
    phi_inv,
    scale_symplectic,
    symplectic_inner,
    trace_inner,
    weight,
)

O, w, W, I = Gf4.ZERO, Gf4.W, Gf4.WBAR, Gf4.ONE


def bits(s: str) -> int:
    """Mask with the leftmost character at coordinate 0."""
    return sum(int(c) << i for i, c in enumerate(s))


@st.composite
def vectors(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 16))
    return SymplecticVector(n, draw(st.integers(0, (1 << n) - 1)), draw(st.integers(0, (1 << n) - 1)))


@st.composite
def triples(draw):
    n = draw(st.integers(1, 12))
    return draw(vectors(n)), draw(vectors(n)), draw(vectors(n))


def test_field_axioms():
    assert gf4_mul(w, w) == W == w ^ I  # w^2 = w + 1
    assert gf4_mul(gf4_mul(w, w), w) == I
    for x in Gf4:
        assert gf4_conj(x) == gf4_mul(x, x)
        if x:
            assert gf4_mul(x, gf4_inv(x)) == I
    assert [gf4_trace(x) for x in (O, I, w, W)] == [0, 0, 1, 1]
    with pytest.raises(ZeroDivisionError):
        gf4_inv(O)


def test_symplectic_examples():
    n = 2
    assert symplectic_inner(SymplecticVector(n, bits("10"), 0), SymplecticVector(n, 0, bits("10"))) == 1
    u = SymplecticVector(3, bits("110"), bits("011"))
    v = SymplecticVector(3, bits("101"), bits("110"))
    assert symplectic_inner(u, v) == 1
    assert weight(u) == 3
    assert weight(SymplecticVector.zero(5)) == 0
    with pytest.raises(ValueError):
        symplectic_inner(SymplecticVector.zero(2), SymplecticVector.zero(3))


def test_trace_examples():
    assert trace_inner(Gf4Vector((w,)), Gf4Vector((W,))) == 1
    assert trace_inner(Gf4Vector((I, w)), Gf4Vector((w, I))) == 0
    with pytest.raises(ValueError):
        trace_inner(Gf4Vector((w,)), Gf4Vector((w, w)))


def test_phi_examples():
    assert phi(SymplecticVector(1, 1, 0)).coords == (w,)
    assert phi(SymplecticVector(1, 1, 1)).coords == (I,)
    assert str(SymplecticVector.from_string("0wW1")) == "0wW1"
    with pytest.raises(ValueError):
        SymplecticVector.from_string("01x")


@given(vectors())
def test_self_pairing_vanishes(v):
    assert symplectic_inner(v, v) == 0
    assert trace_inner(phi(v), phi(v)) == 0


@given(vectors())
def test_phi_round_trip_and_weight(v):
    assert phi_inv(phi(v)) == v
    assert phi(phi_inv(phi(v))) == phi(v)
    assert weight(v) == phi(v).hamming_weight() == v.weight()


@given(triples())
def test_forms_agree_and_are_biadditive(t):
    u, v, x = t
    assert symplectic_inner(u, v) == trace_inner(phi(u), phi(v))
    assert symplectic_inner(u, v) == symplectic_inner(v, u)
    assert trace_inner(phi(u + v), phi(x)) == trace_inner(phi(u), phi(x)) ^ trace_inner(phi(v), phi(x))


@given(triples())
def test_weight_parity_identity_random(t):
    u, v, _ = t
    assert weight(u + v) % 2 == (weight(u) + weight(v) + symplectic_inner(u, v)) % 2
    assert symplectic_inner(u, scale_symplectic(u, w)) == weight(u) % 2


@given(vectors(), st.sampled_from(list(Gf4)))
def test_scaling_matches_field(v, c):
    assert phi(scale_symplectic(v, c)) == phi(v).scale(c)


def test_trace_is_trace_of_hermitian():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 8)
        u = Gf4Vector.of(rng.randrange(4) for _ in range(n))
        v = Gf4Vector.of(rng.randrange(4) for _ in range(n))
        assert trace_inner(u, v) == gf4_trace(hermitian_inner(u, v))


def test_bad_masks_rejected():
    with pytest.raises(ValueError):
        SymplecticVector(2, 4, 0)
