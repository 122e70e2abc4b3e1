import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_aut_order, brute_g_order, rand_affine
from ritt_lab.errors import BadParams, InfiniteGroup, SpecialInput
from ritt_lab.polynomials import AffineMap, Poly, Z, compose, conjugate, iterate
from ritt_lab.symmetry import aut_group, aut_stabilization, g_group, gamma_apply

fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)
nonzero_fractions = fractions.filter(lambda x: x != 0)


@st.composite
def polys(draw, min_degree=2, max_degree=5):
    deg = draw(st.integers(min_degree, max_degree))
    coeffs = [draw(fractions) for _ in range(deg)]
    return Poly(coeffs + [draw(nonzero_fractions)])


def test_aut_orders_frozen():
    assert aut_group(Z**5 + Z**3).order == 2
    assert aut_group(Z**4).order == 3
    assert aut_group(Z**7).order == 6
    assert aut_group(Z**3 + Z**2 + Z).order == 1
    assert aut_group(Z**3 + Z).order == 2
    assert aut_group(Z**4 + Z**2).order == 1  # p(-z) = p(z), not -p(z)
    assert aut_group(Z**5 + Z**3 + 1).order == 1  # nonzero constant kills rotations


def test_aut_twist_is_one():
    assert aut_group(Z**5 + Z).twist == 1


def test_g_orders_frozen():
    g = g_group(Z**4 + Z**2)
    assert (g.order, g.twist) == (2, 0)
    g = g_group(Z**3 + Z)
    assert (g.order, g.twist) == (2, 1)
    g = g_group(Z**5 + Z**2)
    assert (g.order, g.twist) == (3, 2)
    g = g_group(Z**6 + Z**3 + 1)
    assert (g.order, g.twist) == (3, 0)


def test_g_infinite_for_quasi_powers():
    assert g_group(Z**4).is_infinite
    assert g_group(Z**4).order is None
    assert g_group(Z**4).twist == 4
    assert g_group(2 * Z**3 + 5).is_infinite  # centered monomial plus constant
    assert not g_group(Z**4 + Z**2).is_infinite


def test_gamma_apply():
    g = g_group(Z**4 + Z**2)
    assert gamma_apply(g, 1) == 0
    assert gamma_apply(g, 0) == 0
    g = g_group(Z**3 + Z)
    assert gamma_apply(g, 1) == 1
    with pytest.raises(InfiniteGroup):
        gamma_apply(g_group(Z**4), 1)


def test_gamma_is_homomorphism():
    g = g_group(Z**6 + Z)  # order 5, twist 1
    assert g.order == 5
    for j1 in range(5):
        for j2 in range(5):
            assert gamma_apply(g, (j1 + j2) % 5) == (gamma_apply(g, j1) + gamma_apply(g, j2)) % 5


def test_aut_matches_brute_force_small():
    for p in (Z**3 + Z, Z**4 + Z**2, Z**5 + Z**3, Z**4, Z**3 + Z**2 + Z, Z**5 + Z**3 + 1):
        assert aut_group(p).order == brute_aut_order(p)


def test_g_matches_brute_force_small():
    for p in (Z**3 + Z, Z**4 + Z**2, Z**5 + Z**2, Z**6 + Z**3 + 1):
        assert g_group(p).order == brute_g_order(p)
    assert brute_g_order(Z**4) is None


@given(polys(), st.data())
@settings(max_examples=40)
def test_symmetry_orders_invariant_under_conjugation(p, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    lam = rand_affine(rng)
    q = conjugate(p, lam)
    assert aut_group(q).order == aut_group(p).order
    assert g_group(q).order == g_group(p).order


@given(polys())
@settings(max_examples=60)
def test_aut_order_divides_g_order(p):
    a = aut_group(p).order
    g = g_group(p).order
    if g is not None:
        assert g % a == 0


def test_aut_grows_along_iteration_divisibility():
    for p in (Z**3 + Z, Z**4 + Z**2, Z**3 + Z**2):
        l1 = aut_group(p).order
        l2 = aut_group(iterate(p, 2)).order
        assert l2 % l1 == 0


def test_aut_stabilization_reports():
    rep = aut_stabilization(Z**3 + Z, 3)
    assert rep.orders == (2, 2, 2)
    assert rep.settled_at == 1
    rep = aut_stabilization(Z**4 + Z**2, 2)
    assert rep.orders == (1, 1)
    assert rep.settled_at == 1
    rep = aut_stabilization(Z**3 + Z**2 + Z, 2)
    assert rep.orders[0] == 1


def test_aut_stabilization_guards():
    with pytest.raises(SpecialInput):
        aut_stabilization(Z**2, 3)
    with pytest.raises(SpecialInput):
        aut_stabilization(2 * Z**2 - 1, 3)
    with pytest.raises(BadParams):
        aut_stabilization(Z**3 + Z, 0)


def test_frames_expose_centering():
    p = conjugate(Z**4 + Z**2, AffineMap(Fraction(1), Fraction(2)))
    g = g_group(p)
    assert g.frame.centered[p.degree - 1] == 0
    assert g.frame.original() == p
