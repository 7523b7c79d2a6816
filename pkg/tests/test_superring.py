import json

import pytest
from hypothesis import given, strategies as st

from equalrank.chars import VirtualDecomposition
from equalrank.embed import branch, named_embedding
from equalrank.rootdata import build_root_system
from equalrank.superring import (
    ZERO_TWIST,
    SRElement,
    TwistLabel,
    classify_clifford,
    embedding_twist,
    pushforward_truncated,
    sr_add,
    sr_mul,
    sr_pair,
    sr_pi,
)

A1 = build_root_system("A1")


def el(d, degree=0, twist=ZERO_TWIST):
    return SRElement(degree, twist, VirtualDecomposition(d))


def test_pi_negates():
    assert sr_pi(el({(2,): 1})).terms == {(2,): -1}


def test_add_inverse():
    x = el({(2,): 3, (0,): -1})
    assert (x + (-x)).is_zero()


def test_add_rejects_mismatch():
    with pytest.raises(ValueError, match="degree"):
        sr_add(el({(0,): 1}, 0), el({(0,): 1}, 1))
    with pytest.raises(ValueError, match="twist"):
        sr_add(el({(0,): 1}), el({(0,): 1}, twist=TwistLabel.parse("b")))


def test_unit_and_clebsch_gordan():
    x = el({(3,): 2, (1,): -1})
    assert sr_mul(el({(0,): 1}), x, A1) == x
    assert sr_mul(el({(1,): 1}), el({(1,): 1}), A1).terms == {(2,): 1, (0,): 1}


def test_degree_bookkeeping():
    assert sr_mul(el({(1,): 1}, 1), el({(1,): 1}, 1), A1).degree == 0
    assert sr_mul(el({(1,): 1}, 1), el({(0,): 1}, 0), A1).degree == 1


def test_pairing_examples():
    lam, mu = (2,), (4,)
    assert sr_pair(el({lam: 1}), el({lam: 1})) == 1
    assert sr_pair(el({lam: 1}), el({lam: -1})) == -1
    assert sr_pair(el({lam: 1}), el({mu: 1})) == 0
    assert sr_pair(el({lam: 1}, 0), el({lam: 1}, 1)) == 0


small_el = st.dictionaries(st.tuples(st.integers(0, 3)), st.integers(-2, 2).filter(bool), max_size=3)


@given(small_el, small_el, st.integers(0, 1), st.integers(0, 1))
def test_mul_commutative_on_rank_one(a, b, da, db):
    x, y = el(a, da), el(b, db)
    assert sr_mul(x, y, A1) == sr_mul(y, x, A1)


@given(small_el, small_el)
def test_pairing_bilinear_symmetric(a, b):
    x, y = el(a), el(b)
    assert sr_pair(x, y) == sr_pair(y, x)
    assert sr_pair(x + x, y) == 2 * sr_pair(x, y)
    assert sr_pair(sr_pi(x), y) == -sr_pair(x, y)


def test_json_round_trip():
    x = el({(1, 1): 1, (0, 0): -2}, 1, TwistLabel.parse("τ_H−i*τ_G"))
    text = json.dumps(x.to_json())
    assert SRElement.from_json(json.loads(text)) == x
    assert json.dumps(SRElement.from_json(json.loads(text)).to_json()) == text
    assert el({(1, 1): 1}).to_json() == {"degree": 0, "twist": "0", "terms": [{"weight": [1, 1], "coeff": 1}]}


def test_twist_group():
    t = TwistLabel.parse("τ_H-i*τ_G")
    assert t.name == "τ_H−i*τ_G"
    assert t + (-t) == ZERO_TWIST
    assert TwistLabel.parse("2a+b") + TwistLabel.parse("-a") == TwistLabel.parse("b+a")
    assert TwistLabel.parse("0") == ZERO_TWIST
    with pytest.raises(ValueError):
        TwistLabel.parse("a + + ")


def test_embedding_twist():
    assert embedding_twist(named_embedding("A1>t")) == ZERO_TWIST
    t = embedding_twist(named_embedding("A2>A1u1"))
    assert t.half_lattice and t != ZERO_TWIST


@pytest.mark.parametrize("n", range(0, 13))
def test_classify(n):
    c = classify_clifford(n)
    assert (c.kind, c.rank_of_SR) == (("M-pair", 1) if n % 2 == 0 else ("Q", 0))
    if n <= 10:
        assert classify_clifford(n + 2).rank_of_SR == c.rank_of_SR


def test_classify_range():
    with pytest.raises(ValueError):
        classify_clifford(13)
    with pytest.raises(ValueError):
        classify_clifford(-1)


def test_pushforward_a1_torus():
    e = named_embedding("A1>t")
    assert pushforward_truncated(e, el({(0,): 1}), 3).terms == {(0,): 1, (2,): 1}
    assert pushforward_truncated(e, el({}), 3).is_zero()


@given(st.dictionaries(st.tuples(st.integers(-3, 3)), st.integers(-2, 2).filter(bool), max_size=3), st.integers(0, 4))
def test_pushforward_adjoint_to_restriction(u, lam):
    e = named_embedding("A1>t")
    bound = 8
    push = pushforward_truncated(e, el(u), bound)
    v = el({(lam,): 1})
    assert sr_pair(push, v) == sr_pair(el(u), SRElement(0, ZERO_TWIST, branch(e, (lam,))))
