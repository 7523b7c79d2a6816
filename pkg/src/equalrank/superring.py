"""Super representation ring calculus over a reductive Lie algebra.

Elements are finite signed combinations of type-M irreducibles, one basis
element per ``[M], [Pi M]`` pair, with parity reversal acting as negation.
Twistings are formal labels; nothing cohomological is computed.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping

from .chars import VirtualDecomposition, tensor_decompose
from .embed import Embedding, branch
from .rootdata import RootSystem, Weight, as_weight, format_weight, parse_weight

MAX_CLIFFORD_N = 12

_TERM = re.compile(r"\s*([+\-−]?)\s*(\d*)\s*([^\s+\-−]+)")


@dataclass(frozen=True)
class TwistLabel:
    """Element of the free abelian group on symbolic twist names.

    ``parity_shift`` accumulates Clifford degree contributions;
    ``half_lattice`` records a spinor half-weight shift (two shifts cancel).
    """

    coeffs: tuple = ()
    parity_shift: int = 0
    half_lattice: bool = False

    @classmethod
    def parse(cls, text: str, parity_shift: int = 0, half_lattice: bool = False) -> "TwistLabel":
        text = text.strip()
        if text in ("", "0"):
            return cls((), parity_shift, half_lattice)
        coeffs: dict = {}
        pos = 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"malformed twist label {text!r} at offset {pos}")
            sign = -1 if m.group(1) in ("-", "−") else 1
            k = int(m.group(2)) if m.group(2) else 1
            coeffs[m.group(3)] = coeffs.get(m.group(3), 0) + sign * k
            pos = m.end()
        return cls(_clean(coeffs), parity_shift, half_lattice)

    @property
    def name(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i, (n, k) in enumerate(self.coeffs):
            sign = "−" if k < 0 else ("+" if i else "")
            mag = "" if abs(k) == 1 else str(abs(k))
            out += f"{sign}{mag}{n}"
        return out

    def __str__(self) -> str:
        return self.name

    def __add__(self, other: "TwistLabel") -> "TwistLabel":
        d = dict(self.coeffs)
        for n, k in other.coeffs:
            d[n] = d.get(n, 0) + k
        return TwistLabel(_clean(d), self.parity_shift + other.parity_shift, self.half_lattice != other.half_lattice)

    def __neg__(self) -> "TwistLabel":
        return TwistLabel(tuple((n, -k) for n, k in self.coeffs), -self.parity_shift, self.half_lattice)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistLabel):
            return NotImplemented
        return (
            dict(self.coeffs) == dict(other.coeffs)
            and self.parity_shift == other.parity_shift
            and self.half_lattice == other.half_lattice
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.coeffs), self.parity_shift, self.half_lattice))


def _clean(d: dict) -> tuple:
    return tuple((n, k) for n, k in d.items() if k)


ZERO_TWIST = TwistLabel()


def embedding_twist(e: Embedding) -> TwistLabel:
    """Twist carried by h-modules (and by the spinor module) for the embedding.

    Vanishes unless rho_g - rho_h is off the weight lattice.
    """
    if not e.half_integral:
        return ZERO_TWIST
    return TwistLabel((("τ_H", 1), ("i*τ_G", -1)), 0, True)


@dataclass(frozen=True)
class SRElement:
    degree: int
    twist: TwistLabel
    terms: VirtualDecomposition = field(default_factory=VirtualDecomposition)

    def __post_init__(self):
        object.__setattr__(self, "degree", self.degree % 2)
        if not isinstance(self.terms, VirtualDecomposition):
            object.__setattr__(self, "terms", VirtualDecomposition(self.terms))

    @classmethod
    def basis(cls, lam: Weight, coeff: int = 1, degree: int = 0, twist: TwistLabel = ZERO_TWIST) -> "SRElement":
        return cls(degree, twist, VirtualDecomposition({as_weight(lam): coeff}))

    def __add__(self, other: "SRElement") -> "SRElement":
        return sr_add(self, other)

    def __neg__(self) -> "SRElement":
        return sr_negate(self)

    def __sub__(self, other: "SRElement") -> "SRElement":
        return sr_add(self, sr_negate(other))

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "twist": self.twist.name,
            "terms": [{"weight": format_weight(w), "coeff": c} for w, c in self.terms.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SRElement":
        twist = TwistLabel.parse(str(data.get("twist", "0")))
        terms = VirtualDecomposition((parse_weight(t["weight"]), int(t["coeff"])) for t in data.get("terms", []))
        return cls(int(data.get("degree", 0)), twist, terms)


def _check_compatible(x: SRElement, y: SRElement) -> None:
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {y.degree}")
    if x.twist != y.twist:
        raise ValueError(f"twist mismatch: {x.twist} vs {y.twist}")


def sr_add(x: SRElement, y: SRElement) -> SRElement:
    _check_compatible(x, y)
    return SRElement(x.degree, x.twist, VirtualDecomposition(x.terms + y.terms))


def sr_negate(x: SRElement) -> SRElement:
    return SRElement(x.degree, x.twist, VirtualDecomposition(-x.terms))


def sr_pi(x: SRElement) -> SRElement:
    """Parity reversal: [Pi V] = -[V]."""
    return sr_negate(x)


def sr_mul(x: SRElement, y: SRElement, rs: RootSystem) -> SRElement:
    """Interior tensor product, bilinear over irreducible tensor decompositions."""
    total: dict = {}
    for (lam, a), (mu, b) in itertools.product(x.terms.items(), y.terms.items()):
        for nu, c in tensor_decompose(rs, lam, mu).items():
            total[nu] = total.get(nu, 0) + a * b * c
    return SRElement(x.degree + y.degree, x.twist + y.twist, VirtualDecomposition(total))


def sr_pair(x: SRElement, y: SRElement) -> int:
    """Supersymmetric pairing; the irreducible basis is orthonormal."""
    if x.degree != y.degree or x.twist != y.twist:
        return 0
    return sum(c * y.terms[w] for w, c in x.terms.items())


@dataclass(frozen=True)
class CliffordClass:
    n: int
    kind: str  # "M-pair" or "Q"
    rank_of_SR: int


def classify_clifford(n: int) -> CliffordClass:
    """Type of the irreducible Cl(n)-supermodule and the rank of SR(Cl(n))."""
    if not 0 <= n <= MAX_CLIFFORD_N:
        raise ValueError(f"Clifford index n={n} outside the supported range 0..{MAX_CLIFFORD_N}")
    if n % 2 == 0:
        return CliffordClass(n, "M-pair", 1)
    return CliffordClass(n, "Q", 0)


def dominant_weights_up_to(rs: RootSystem, bound: int):
    """g-dominant weights whose fundamental-weight coordinates sum to at most ``bound``."""
    for lam in itertools.product(range(bound + 1), repeat=rs.dim):
        if sum(lam) <= bound:
            yield lam


def pushforward_truncated(e: Embedding, u: SRElement, bound: int) -> SRElement:
    """Induction h -> g as the adjoint of restriction, truncated by coordinate sum.

    The coefficient of V_lam is the pairing of ``u`` with the branching of V_lam.
    """
    out: dict = {}
    if not u.is_zero():
        for lam in dominant_weights_up_to(e.ambient, bound):
            restricted = SRElement(0, ZERO_TWIST, branch(e, lam))
            c = sr_pair(u, restricted)
            if c:
                out[lam] = c
    return SRElement(u.degree, ZERO_TWIST, VirtualDecomposition(out))
