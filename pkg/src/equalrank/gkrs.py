"""Euler-class restriction, GKRS multiplets and Dirac induction.

Two independent routes to the same h-virtual module: brute force (restrict the
g-character, multiply by the spinor Euler class, peel into h-irreducibles) and
the closed form over W_g/W_h coset representatives.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .chars import VirtualDecomposition, WeightMultiset, decompose_virtual, freudenthal_character, weyl_dimension
from .embed import Embedding, coset_representatives, restrict_character, spin_module
from .rootdata import Weight, add, as_weight, dominant_representative, sub, weight_str
from .superring import ZERO_TWIST, SRElement, embedding_twist, pushforward_truncated, sr_pair


@dataclass(frozen=True)
class Multiplet:
    source: Weight
    members: tuple  # ((sign, h-dominant weight), ...)

    def as_decomposition(self) -> VirtualDecomposition:
        return VirtualDecomposition((w, s) for s, w in self.members)

    def signed_dimension(self, e: Embedding) -> int:
        return sum(s * weyl_dimension(e.sub, w) for s, w in self.members)

    def to_json(self) -> list:
        from .rootdata import format_weight

        return [{"sign": s, "weight": format_weight(w)} for s, w in self.members]


def _g_dominant(e: Embedding, lam: Weight) -> Weight:
    lam = as_weight(lam)
    if len(lam) != e.ambient.dim or not e.ambient.is_dominant(lam):
        raise ValueError(f"{weight_str(lam)} is not a dominant weight of {e.ambient.label}")
    return lam


def euler_restriction(e: Embedding, lam: Weight) -> VirtualDecomposition:
    """i*[V_lam] ([S0] - [S1]) written in h-irreducibles (brute force)."""
    lam = _g_dominant(e, lam)
    product = restrict_character(e, lam).convolve(spin_module(e).euler_class())
    return decompose_virtual(e.sub, product)


def gkrs_multiplet(e: Embedding, lam: Weight) -> Multiplet:
    """Closed form: sign(c) U_{c(lam+rho_g) - rho_h} over coset representatives c."""
    lam = _g_dominant(e, lam)
    xi = add(lam, e.rho_g)
    members = [(s, sub(w, e.rho_h)) for s, w in coset_representatives(e, xi)]
    members.sort(key=lambda p: (-p[0], p[1]))
    return Multiplet(lam, tuple(members))


def dirac_induce(e: Embedding, mu: Weight) -> Optional[tuple[int, Weight]]:
    """Index of the twisted homogeneous Dirac operator for U_mu: (sign, g-highest weight) or None."""
    mu = as_weight(mu)
    if len(mu) != e.ambient.dim or not e.sub.is_dominant(mu):
        raise ValueError(f"{weight_str(mu)} is not h-dominant")
    rep, sign, regular = dominant_representative(e.ambient, add(mu, e.rho_h))
    if not regular:
        return None
    return sign, sub(rep, e.rho_g)


def dirac_as_element(e: Embedding, mu: Weight) -> SRElement:
    res = dirac_induce(e, mu)
    if res is None:
        return SRElement(0, ZERO_TWIST)
    sign, lam = res
    return SRElement.basis(lam, sign)


def _h_char(e: Embedding, mu: Weight) -> WeightMultiset:
    return freudenthal_character(e.sub, mu)


def twisted_spinor_product(e: Embedding, mu: Weight) -> SRElement:
    """[U_mu (x) S0*] - [U_mu (x) S1*] in h-irreducibles, the input of Dirac induction."""
    mu = as_weight(mu)
    dual = spin_module(e).dual()
    ch = _h_char(e, mu).convolve(dual.euler_class())
    twist = embedding_twist(e) + (-embedding_twist(e))
    return SRElement(0, twist, decompose_virtual(e.sub, ch))


def induce_truncated(e: Embedding, mu: Weight, bound: int) -> SRElement:
    """Bott-style induction of U_mu (x) (S0* - S1*), truncated at coordinate sum ``bound``."""
    return pushforward_truncated(e, twisted_spinor_product(e, mu), bound)


def verify_adjointness(e: Embedding, mu: Weight, lam: Weight) -> tuple[int, int]:
    """Both sides of <Ind U_mu, V_lam>_g = <U_mu (x) (S0* - S1*), i* V_lam>_h."""
    lam = _g_dominant(e, lam)
    lhs = sr_pair(dirac_as_element(e, mu), SRElement.basis(lam))
    restricted = SRElement(0, ZERO_TWIST, decompose_virtual(e.sub, restrict_character(e, lam)))
    rhs = sr_pair(twisted_spinor_product(e, mu), restricted)
    return lhs, rhs


def induce_agrees(e: Embedding, mu: Weight, bound: int) -> bool:
    """The truncated pushforward is exactly the Dirac index (one term, or zero when singular)."""
    push = induce_truncated(e, mu, bound)
    expected = dirac_induce(e, mu)
    if expected is None:
        return push.is_zero()
    sign, lam = expected
    return dict(push.terms.items()) == {lam: sign}


def mu_grid(e: Embedding, max_coord: int):
    """h-dominant weights in lattice_shift + Z^n with |coordinates| <= max_coord.

    Off this coset the spinor twist makes Dirac induction vanish identically.
    """
    shift = e.lattice_shift
    n = e.ambient.dim
    for ints in itertools.product(range(-max_coord, max_coord + 1), repeat=n):
        mu = add(ints, shift)
        if all(abs(c) <= max_coord for c in mu) and e.sub.is_dominant(mu):
            yield mu
