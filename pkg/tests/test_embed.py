from fractions import Fraction

import pytest

from equalrank.chars import WeightMultiset
from equalrank.embed import (
    branch,
    build_embedding,
    coset_representatives,
    embedding_from_json,
    named_embedding,
    restrict_character,
    spin_module,
)
from equalrank.rootdata import add, build_root_system, scale, weyl_elements, weyl_orbit

from conftest import grid


def test_torus_in_a1():
    e = named_embedding("A1>t")
    assert e.complement_roots == ((2,),)
    assert e.rho_h == (0,)


def test_a1u1_in_a2():
    e = named_embedding("A2>A1u1")
    assert set(e.complement_roots) == {(-1, 2), (1, 1)}
    assert e.rho_h == scale(Fraction(1, 2), (2, -1))
    assert e.half_integral


def test_a1a1_in_b2_complement_is_short():
    e = named_embedding("B2>A1A1")
    g = e.ambient
    assert len(e.complement_roots) == 2
    assert all(g.inner(b, b) == 1 for b in e.complement_roots)


@pytest.mark.parametrize(
    "g,roots,match",
    [
        ("A2", [[1, 0]], "not a root"),
        ("B2", [[-2, 2]], "not a positive root"),
        ("A2", [[2, -1], [2, -1]], "dependent"),
        ("A2", [[2, -1], [1, 1]], "not a base"),
        ("B2", [[-1, 2], [1, 0]], "not closed"),
        ("A2", [[2, -1, 0]], "length"),
    ],
)
def test_invalid_embeddings(g, roots, match):
    with pytest.raises(ValueError, match=match):
        build_embedding(build_root_system(g), roots)


def test_json_round_trip():
    e = embedding_from_json({"g": "A2", "h_roots": [[2, -1]]})
    assert e.to_json() == {"g": "A2", "h_roots": [[2, -1]]}


def test_rho_shift_is_half_complement_sum(emb):
    total = (0,) * emb.ambient.dim
    for b in emb.complement_roots:
        total = add(total, b)
    assert emb.rho_shift == scale(Fraction(1, 2), total)
    assert emb.dim_g - emb.dim_h == 2 * len(emb.complement_roots)


def test_spin_counts(emb):
    s = spin_module(emb)
    m = len(emb.complement_roots)
    assert s.s0.total() + s.s1.total() == 2**m
    if m:
        assert s.s0.total() == s.s1.total()
    assert emb.rho_shift in s.s0


def test_spin_examples():
    s = spin_module(named_embedding("A1>t"))
    assert s.s0 == {(1,): 1} and s.s1 == {(-1,): 1}
    s = spin_module(named_embedding("A2>A1u1"))
    assert s.s0.total() == s.s1.total() == 2


def test_euler_class_factorizes(emb):
    prod = WeightMultiset({(0,) * emb.ambient.dim: 1})
    for b in emb.complement_roots:
        half = scale(Fraction(1, 2), b)
        prod = prod * WeightMultiset({half: 1, scale(-1, half): -1})
    assert spin_module(emb).euler_class() == prod


def test_restriction_examples():
    e = named_embedding("A1>t")
    assert restrict_character(e, (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    e = named_embedding("A2>A1u1")
    assert restrict_character(e, (1, 0)).total() == 3
    assert branch(e, (1, 0)) == {(1, 0): 1, (0, -1): 1}
    assert branch(e, (0, 0)) == {(0, 0): 1}


def test_branching_preserves_dimension(emb):
    from equalrank.chars import weyl_dimension

    for lam in grid(emb.ambient.dim, 2):
        b = branch(emb, lam)
        assert all(c > 0 for c in b.values())
        assert sum(c * weyl_dimension(emb.sub, mu) for mu, c in b.items()) == weyl_dimension(emb.ambient, lam)


def test_coset_examples():
    assert coset_representatives(named_embedding("A1>t"), (3,)) == [(1, (3,)), (-1, (-3,))]
    a2 = named_embedding("A2>A1u1")
    assert len(coset_representatives(a2, a2.rho_g)) == 3
    b2 = named_embedding("B2>A1A1")
    assert len(coset_representatives(b2, b2.rho_g)) == 2


def test_coset_count_and_distinct(emb):
    wg, wh = len(weyl_elements(emb.ambient)), len(weyl_elements(emb.sub))
    for lam in grid(emb.ambient.dim, 2):
        reps = coset_representatives(emb, add(lam, emb.rho_g))
        weights = [w for _, w in reps]
        assert len(set(weights)) == len(weights)
        assert len(reps) * wh == wg


def test_torus_cosets_cover_orbit():
    e = named_embedding("G2>t")
    xi = add((1, 2), e.rho_g)
    reps = coset_representatives(e, xi)
    assert {w for _, w in reps} == weyl_orbit(e.ambient, xi)


def test_coset_requires_regular():
    with pytest.raises(ValueError, match="regular"):
        coset_representatives(named_embedding("A2>t"), (1, 0))
