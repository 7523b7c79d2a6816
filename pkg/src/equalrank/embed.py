"""Equal-rank subalgebras h of g sharing a Cartan subalgebra.

Everything stays in g's fundamental-weight coordinates.  An h-weight is
h-dominant when it pairs non-negatively with h's simple coroots; directions
along the centre of h are unconstrained.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .chars import WeightMultiset, decompose_virtual, freudenthal_character, VirtualDecomposition
from .rootdata import (
    RootSystem,
    Weight,
    as_weight,
    is_integral,
    scale,
    sub,
    weight_str,
    weyl_elements,
)

# The spinor module's even half contains rho_g - rho_h.
SPIN_PARITY_ANCHOR = "rho_g-rho_h is even"

# Named embeddings; h roots in g fundamental-weight coordinates.
CATALOG = {
    "A2>A1u1": ("A2", [[2, -1]]),
    "B2>A1A1": ("B2", [[2, -2], [0, 2]]),
    "G2>A2": ("G2", [[-3, 2], [3, -1]]),
    "G2>A1A1": ("G2", [[2, -1], [0, 1]]),
}


@dataclass(frozen=True, eq=False)
class Embedding:
    ambient: RootSystem
    h_roots: tuple
    sub: RootSystem
    complement_roots: tuple
    spin_parity_anchor: str = SPIN_PARITY_ANCHOR

    @property
    def g(self) -> RootSystem:
        return self.ambient

    @property
    def h(self) -> RootSystem:
        return self.sub

    @property
    def h_positive_roots(self) -> tuple:
        return self.sub.positive_roots

    @property
    def rho_g(self) -> Weight:
        return self.ambient.rho

    @property
    def rho_h(self) -> Weight:
        return self.sub.rho

    @cached_property
    def rho_shift(self) -> Weight:
        """rho_g - rho_h, the highest weight of the spinor module."""
        return sub(self.rho_g, self.rho_h)

    @property
    def half_integral(self) -> bool:
        """True when spinor weights leave the weight lattice (projective twist present)."""
        return not is_integral(self.rho_shift)

    @cached_property
    def lattice_shift(self) -> Weight:
        """Fractional part of rho_g - rho_h: the coset of twisted h-weights."""
        return as_weight(c - (c.numerator // c.denominator) if isinstance(c, Fraction) else 0 for c in self.rho_shift)

    @property
    def dim_g(self) -> int:
        return self.ambient.dim + 2 * len(self.ambient.positive_roots)

    @property
    def dim_h(self) -> int:
        return self.ambient.dim + 2 * len(self.sub.positive_roots)

    def is_h_dominant(self, w: Weight) -> bool:
        return self.sub.is_dominant(as_weight(w))

    def to_json(self) -> dict:
        from .rootdata import format_weight

        return {"g": self.ambient.label, "h_roots": [format_weight(b) for b in self.h_roots]}


def build_embedding(rs: RootSystem, h_roots: Sequence[Weight]) -> Embedding:
    """Validate designated simple roots of h inside g and derive the complement.

    An empty list designates the Cartan subalgebra.  The designated roots must
    be g-positive (this fixes the compatible positive systems), linearly
    independent, a base of what they generate, and generate a closed subsystem.
    """
    roots = tuple(as_weight(b) for b in h_roots)
    for b in roots:
        if len(b) != rs.dim:
            raise ValueError(f"h root {weight_str(b)} has length {len(b)}, expected {rs.dim}")
    h = rs.subsystem(roots)
    h_pos = set(h.positive_roots)
    complement = tuple(b for b in rs.positive_roots if b not in h_pos)
    e = Embedding(ambient=rs, h_roots=roots, sub=h, complement_roots=complement)
    assert e.dim_g - e.dim_h == 2 * len(complement)
    return e


def named_embedding(name: str) -> Embedding:
    """A catalog name, or "<type>>t" for the Cartan subalgebra of <type>."""
    from .rootdata import build_root_system

    if name in CATALOG:
        g, roots = CATALOG[name]
        return build_embedding(build_root_system(g), roots)
    g, sep, h = name.partition(">")
    if sep and h == "t":
        return build_embedding(build_root_system(g), [])
    raise KeyError(f"unknown embedding name {name!r}")


def embedding_from_json(data: dict) -> Embedding:
    from .rootdata import build_root_system, parse_weight

    rs = build_root_system(data["g"])
    return build_embedding(rs, [parse_weight(b) for b in data.get("h_roots", [])])


@dataclass(frozen=True)
class SpinWeights:
    s0: WeightMultiset
    s1: WeightMultiset
    half_integral: bool

    def euler_class(self) -> WeightMultiset:
        """[S0] - [S1] as a signed weight multiset."""
        return self.s0 - self.s1

    def dual(self) -> "SpinWeights":
        neg = lambda w: scale(-1, w)  # noqa: E731
        return SpinWeights(self.s0.map_weights(neg), self.s1.map_weights(neg), self.half_integral)


def spin_module(e: Embedding) -> SpinWeights:
    """Weights of the spinor supermodule of Cl(g*/h*): rho_g - rho_h minus subset sums of the complement."""
    s0: dict = {}
    s1: dict = {}
    top = e.rho_shift
    m = len(e.complement_roots)
    for k in range(m + 1):
        target = s0 if k % 2 == 0 else s1
        for subset in combinations(e.complement_roots, k):
            w = top
            for b in subset:
                w = sub(w, b)
            target[w] = target.get(w, 0) + 1
    return SpinWeights(WeightMultiset(s0), WeightMultiset(s1), e.half_integral)


def restrict_character(e: Embedding, lam: Weight) -> WeightMultiset:
    """Character of V_lam read as h-weights; the shared Cartan makes this the g-character."""
    return freudenthal_character(e.ambient, lam)


_branch_cache: dict = {}


def branch(e: Embedding, lam: Weight) -> VirtualDecomposition:
    """Branching rule: V_lam restricted to h, in h-irreducibles."""
    lam = as_weight(lam)
    key = (id(e), lam)
    hit = _branch_cache.get(key)
    if hit is not None and hit[0] is e:
        return hit[1]
    result = decompose_virtual(e.sub, restrict_character(e, lam))
    _branch_cache[key] = (e, result)
    return result


def coset_representatives(e: Embedding, xi: Weight) -> list[tuple[int, Weight]]:
    """One (sign(c), c(xi)) per coset, with c(xi) h-dominant.

    ``xi`` must be g-regular; W_g acts freely on its orbit, so each W_h-coset
    contributes exactly one h-dominant image.
    """
    xi = as_weight(xi)
    if not e.ambient.is_regular(xi):
        raise ValueError(f"{weight_str(xi)} is not regular for {e.ambient.label}")
    reps: dict = {}
    for c in weyl_elements(e.ambient):
        img = c.apply(xi)
        if e.sub.is_dominant(img):
            reps.setdefault(img, c.sign)
    return sorted(((s, w) for w, s in reps.items()), key=lambda p: (-p[0], p[1]))

