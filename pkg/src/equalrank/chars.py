"""Characters of irreducible modules as exact weight multisets."""
from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rootdata import (
    RootSystem,
    Weight,
    add,
    as_weight,
    dominant_representative,
    pair,
    sub,
    weight_str,
    weyl_elements,
)

MAX_PEEL_STEPS = 100_000


class NotInvariantError(ValueError):
    """A multiset that should be Weyl-invariant is not; carries the witness."""

    def __init__(self, message: str, reflection: int, weight: Weight):
        super().__init__(message)
        self.reflection = reflection
        self.weight = weight


class WeightMultiset(Mapping):
    """Finite signed association weight -> integer multiplicity.

    Zero multiplicities are never stored.  ``ms[w]`` is 0 for weights outside
    the support.  ``a * b`` between two multisets is convolution (the product
    of characters); ``k * a`` with an integer scales.
    """

    __slots__ = ("_d",)

    def __init__(self, entries: Mapping | Iterable = ()):
        d: dict = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for w, m in items:
            if m:
                w = as_weight(w)
                d[w] = d.get(w, 0) + m
        self._d = {w: m for w, m in d.items() if m}

    def __getitem__(self, w):
        return self._d.get(as_weight(w), 0)

    def __contains__(self, w) -> bool:
        return as_weight(w) in self._d

    def __iter__(self):
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightMultiset):
            return self._d == other._d
        if isinstance(other, Mapping):
            return self._d == WeightMultiset(other)._d
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{weight_str(w)}: {m}" for w, m in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"

    def sorted_items(self) -> list:
        return sorted(self._d.items())

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        d = dict(self._d)
        for w, m in other.items():
            d[w] = d.get(w, 0) + m
        return WeightMultiset(d)

    def __neg__(self) -> "WeightMultiset":
        return WeightMultiset({w: -m for w, m in self._d.items()})

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        return self + (-other)

    def __rmul__(self, k: int) -> "WeightMultiset":
        return WeightMultiset({w: k * m for w, m in self._d.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return self.convolve(other)

    def convolve(self, other: "WeightMultiset") -> "WeightMultiset":
        d: dict = {}
        for w1, m1 in self._d.items():
            for w2, m2 in other.items():
                w = add(w1, w2)
                d[w] = d.get(w, 0) + m1 * m2
        return WeightMultiset(d)

    def shift(self, v: Weight) -> "WeightMultiset":
        return WeightMultiset({add(w, v): m for w, m in self._d.items()})

    def map_weights(self, f) -> "WeightMultiset":
        d: dict = {}
        for w, m in self._d.items():
            fw = as_weight(f(w))
            d[fw] = d.get(fw, 0) + m
        return WeightMultiset(d)

    def total(self) -> int:
        """Sum of multiplicities (the dimension of an honest module)."""
        return sum(self._d.values())


class VirtualDecomposition(WeightMultiset):
    """Coefficients of a virtual module in the basis of irreducibles, keyed by highest weight."""

    __slots__ = ()


def delta(w: Weight, m: int = 1) -> WeightMultiset:
    return WeightMultiset({as_weight(w): m})


def _check_dominant(rs: RootSystem, lam: Weight) -> Weight:
    lam = as_weight(lam)
    if len(lam) != rs.dim:
        raise ValueError(f"weight {weight_str(lam)} has length {len(lam)}, expected {rs.dim}")
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {weight_str(lam)} is not dominant for {rs.label}")
    return lam


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> dict:
    """Dominant weights of V_lam with their depth (height of lam - nu).

    Uses that dominant weights below ``lam`` are linked to it by chains of
    positive-root subtractions staying inside the dominant chamber.
    """
    depth = {lam: 0}
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        for beta, ht in zip(rs.positive_roots, rs.root_heights):
            mu = sub(nu, beta)
            if mu not in depth and rs.is_dominant(mu):
                depth[mu] = depth[nu] + ht
                queue.append(mu)
    return depth


_char_cache: dict = {}


def freudenthal_character(rs: RootSystem, lam: Weight) -> WeightMultiset:
    """Weight multiplicities of the irreducible module with highest weight ``lam``.

    Multiplicities of dominant weights come from Freudenthal's recursion in
    exact rationals; the full character is the union of their Weyl orbits.
    """
    lam = _check_dominant(rs, lam)
    key = (id(rs), lam)
    hit = _char_cache.get(key)
    if hit is not None and hit[0] is rs:
        return hit[1]

    rho = rs.rho
    depth = _dominant_weights_below(rs, lam)
    order = sorted(depth, key=lambda nu: depth[nu])
    lam_rho = add(lam, rho)
    top = rs.inner(lam_rho, lam_rho)
    mult: dict = {lam: 1}
    dom_cache: dict = {}

    def m_of(x: Weight) -> int:
        d = dom_cache.get(x)
        if d is None:
            d = dominant_representative(rs, x)[0]
            dom_cache[x] = d
        return mult.get(d, 0) if d in depth else 0

    for nu in order[1:]:
        total = Fraction(0)
        for beta in rs.positive_roots:
            k = 1
            x = add(nu, beta)
            while True:
                m = m_of(x)
                if m == 0:
                    break
                total += m * rs.inner(x, beta)
                k += 1
                x = add(x, beta)
        nu_rho = add(nu, rho)
        denom = top - rs.inner(nu_rho, nu_rho)
        assert denom != 0, f"Freudenthal divisor vanished at {weight_str(nu)}"
        value = 2 * total / denom
        assert value.denominator == 1 and value > 0, f"bad multiplicity {value} at {weight_str(nu)}"
        mult[nu] = int(value)

    char: dict = {}
    for nu, m in mult.items():
        for w in _orbit(rs, nu):
            char[w] = m
    result = WeightMultiset(char)
    _char_cache[key] = (rs, result)
    return result


def _orbit(rs: RootSystem, w: Weight) -> set:
    orbit, queue = {w}, deque([w])
    while queue:
        x = queue.popleft()
        for b, c in zip(rs.simple_roots, rs.simple_coroots):
            y = rs.reflect_root(b, c, x)
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Product over positive roots of <lam+rho, a^vee> / <rho, a^vee>."""
    lam = _check_dominant(rs, lam)
    lam_rho = add(lam, rs.rho)
    num, den = Fraction(1), Fraction(1)
    for c in rs.positive_coroots:
        num *= pair(lam_rho, c)
        den *= pair(rs.rho, c)
    value = num / den
    assert value.denominator == 1
    return int(value)


def _system(rs: RootSystem, coroots: Optional[Sequence[Weight]]) -> RootSystem:
    return rs.subsystem(coroots) if coroots is not None else rs


def check_invariant(rs: RootSystem, ch: WeightMultiset) -> None:
    """Raise :class:`NotInvariantError` unless ``ch`` is fixed by every simple reflection."""
    for i, (b, c) in enumerate(zip(rs.simple_roots, rs.simple_coroots)):
        for w, m in ch.items():
            r = rs.reflect_root(b, c, w)
            if ch[r] != m:
                raise NotInvariantError(
                    f"multiset not invariant under reflection {i} of {rs.label}: "
                    f"{weight_str(w)} has {m} but its image {weight_str(r)} has {ch[r]}",
                    i,
                    w,
                )


def decompose_virtual(
    rs: RootSystem, ch: WeightMultiset, coroots: Optional[Sequence[Weight]] = None
) -> VirtualDecomposition:
    """Write a Weyl-invariant signed multiset as a combination of irreducible characters.

    Greedy peeling: the weight of largest (total height, coordinates) in what
    remains is a highest weight; subtract that multiple of its character.
    """
    sys_ = _system(rs, coroots)
    check_invariant(sys_, ch)
    remainder = dict(ch.items())
    terms: dict = {}
    for _ in range(MAX_PEEL_STEPS):
        if not remainder:
            return VirtualDecomposition(terms)
        top = max(remainder, key=lambda w: (sys_.height(w), w))
        coeff = remainder[top]
        if not sys_.is_dominant(top):
            raise ValueError(f"peeling reached non-dominant top weight {weight_str(top)}")
        terms[top] = coeff
        for w, m in freudenthal_character(sys_, top).items():
            left = remainder.get(w, 0) - coeff * m
            if left:
                remainder[w] = left
            else:
                remainder.pop(w, None)
    raise RuntimeError(f"decomposition did not terminate within {MAX_PEEL_STEPS} steps")


def character_of(rs: RootSystem, decomposition: Mapping) -> WeightMultiset:
    """Reconstruct sum(coeff * ch(V_lam)) from a decomposition."""
    total = WeightMultiset()
    for lam, c in decomposition.items():
        total = total + c * freudenthal_character(rs, lam)
    return total


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> VirtualDecomposition:
    """Decompose V_lam (x) V_mu by convolving characters and peeling."""
    a = freudenthal_character(rs, lam)
    b = freudenthal_character(rs, mu)
    return decompose_virtual(rs, a.convolve(b))


def alternating_sum(rs: RootSystem, w: Weight) -> WeightMultiset:
    """sum over the Weyl group of sign(x) * delta_{x(w)}."""
    d: dict = {}
    for e in weyl_elements(rs):
        x = e.apply(w)
        d[x] = d.get(x, 0) + e.sign
    return WeightMultiset(d)
