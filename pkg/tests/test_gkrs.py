from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equalrank.embed import named_embedding
from equalrank.gkrs import (
    dirac_induce,
    euler_restriction,
    gkrs_multiplet,
    induce_agrees,
    induce_truncated,
    mu_grid,
    twisted_spinor_product,
    verify_adjointness,
)
from equalrank.rootdata import add, weyl_elements

from conftest import grid


def test_euler_restriction_a1():
    e = named_embedding("A1>t")
    assert euler_restriction(e, (2,)) == {(3,): 1, (-3,): -1}
    assert euler_restriction(e, (0,)) == {(1,): 1, (-1,): -1}


def test_euler_restriction_a2_trivial():
    e = named_embedding("A2>A1u1")
    r = euler_restriction(e, (0, 0))
    assert len(r) == 3
    assert r == {w: s for s, w in gkrs_multiplet(e, (0, 0)).members}


def test_multiplet_a1():
    e = named_embedding("A1>t")
    assert gkrs_multiplet(e, (2,)).members == ((1, (3,)), (-1, (-3,)))
    assert gkrs_multiplet(e, (0,)).members == ((1, (1,)), (-1, (-1,)))


def test_multiplet_b2_has_two_members():
    e = named_embedding("B2>A1A1")
    for lam in grid(2):
        assert len(gkrs_multiplet(e, lam).members) == 2


def test_gkrs_equals_euler(emb):
    for lam in grid(emb.ambient.dim, 2):
        assert gkrs_multiplet(emb, lam).as_decomposition() == euler_restriction(emb, lam)


def test_multiplet_structure(emb):
    index = len(weyl_elements(emb.ambient)) // len(weyl_elements(emb.sub))
    for lam in grid(emb.ambient.dim, 2):
        m = gkrs_multiplet(emb, lam)
        weights = [w for _, w in m.members]
        assert len(weights) == index == len(set(weights))
        assert all(emb.is_h_dominant(w) for w in weights)
        if emb.complement_roots:
            assert m.signed_dimension(emb) == 0


def test_multiplet_json_order():
    m = gkrs_multiplet(named_embedding("A1>t"), (2,))
    assert m.to_json() == [{"sign": 1, "weight": [3]}, {"sign": -1, "weight": [-3]}]


def test_dirac_examples():
    e = named_embedding("A1>t")
    assert dirac_induce(e, (3,)) == (1, (2,))
    assert dirac_induce(e, (0,)) is None
    assert dirac_induce(e, (-2,)) == (-1, (1,))
    with pytest.raises(ValueError, match="h-dominant"):
        dirac_induce(named_embedding("A2>A1u1"), (-1, 0))


def test_adjointness_examples():
    e = named_embedding("A1>t")
    assert verify_adjointness(e, (3,), (2,)) == (1, 1)
    assert verify_adjointness(e, (3,), (4,)) == (0, 0)
    for lam in range(4):
        assert verify_adjointness(e, (0,), (lam,)) == (0, 0)


def test_twisted_product_is_untwisted():
    e = named_embedding("A2>A1u1")
    assert twisted_spinor_product(e, (2, Fraction(5, 2))).twist.coeffs == ()


def test_mu_grid_coset():
    e = named_embedding("A2>A1u1")
    mus = list(mu_grid(e, 3))
    assert len(mus) == 24
    assert all(m[1].denominator == 2 for m in mus)
    assert len(list(mu_grid(named_embedding("A1>t"), 3))) == 7


def test_induce_a2():
    e = named_embedding("A2>A1u1")
    mu = (2, Fraction(5, 2))
    assert dirac_induce(e, mu) == (1, (2, 1))
    assert induce_truncated(e, mu, 12).terms == {(2, 1): 1}
    assert induce_truncated(e, (1, Fraction(1, 2)), 12).is_zero()


@pytest.mark.parametrize("name", ["A1>t", "A2>A1u1", "B2>A1A1", "G2>A2"])
def test_induce_matches_dirac(name):
    e = named_embedding(name)
    for mu in mu_grid(e, 2):
        assert induce_agrees(e, mu, 10)


@pytest.mark.parametrize("name", ["A2>t", "B2>A1A1", "G2>A1A1"])
def test_dirac_injective_on_regular(name):
    e = named_embedding(name)
    seen = {}
    # fundamental domain for W_g: mu + rho_h in the closed g-chamber
    for mu in mu_grid(e, 3):
        if not e.ambient.is_dominant(add(mu, e.rho_h)):
            continue
        res = dirac_induce(e, mu)
        if res is not None:
            assert res not in seen, (mu, seen.get(res))
            seen[res] = mu


def test_dirac_inverts_multiplet(emb):
    # each multiplet member induces back to +-V_lam with the member's sign
    for lam in grid(emb.ambient.dim, 2):
        for sign, mu in gkrs_multiplet(emb, lam).members:
            assert dirac_induce(emb, mu) == (sign, lam)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3))
def test_adjointness_property(l1, l2, m1, m2):
    e = named_embedding("A2>A1u1")
    mu = add((m1, m2), e.lattice_shift)
    lhs, rhs = verify_adjointness(e, mu, (l1, l2))
    assert lhs == rhs
