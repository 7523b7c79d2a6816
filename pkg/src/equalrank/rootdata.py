"""Root systems, weight lattices and Weyl groups in exact arithmetic.

Weights are tuples in fundamental-weight coordinates of the ambient algebra.
Entries are ``int`` whenever possible and :class:`fractions.Fraction` otherwise
(half-integral weights appear once a subalgebra's rho enters the picture).

A :class:`RootSystem` may also describe a closed subsystem living in the
lattice of a larger one; in that case ``dim`` (the lattice dimension) exceeds
``rank`` (the number of simple roots).  All the combinatorics below work for
both.
"""
from __future__ import annotations

import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

import sympy

Scalar = Union[int, Fraction]
Weight = tuple  # tuple[Scalar, ...]

DEFAULT_WEYL_BOUND = 10**6

_TOKEN = re.compile(r"([A-Za-z])(\d+)")


class UnsupportedTypeError(ValueError):
    pass


class WeylBoundError(ValueError):
    pass


def _scalar(x) -> Scalar:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def as_weight(coords: Iterable) -> Weight:
    """Normalize a coordinate sequence into a hashable weight tuple."""
    return tuple(_scalar(c) for c in coords)


def add(x: Weight, y: Weight) -> Weight:
    return as_weight(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return as_weight(a - b for a, b in zip(x, y))


def scale(k: Scalar, x: Weight) -> Weight:
    return as_weight(k * a for a in x)


def pair(w: Weight, coroot: Sequence[Scalar]) -> Scalar:
    """Evaluate the coroot functional ``coroot`` on ``w``."""
    return _scalar(sum(a * c for a, c in zip(w, coroot)))


def is_integral(w: Weight) -> bool:
    return all(isinstance(c, int) for c in as_weight(w))


def format_weight(w: Weight) -> list:
    """JSON-friendly coordinates: ints stay ints, fractions become ``"p/q"``."""
    return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in as_weight(w)]


def parse_weight(coords: Iterable) -> Weight:
    return as_weight(Fraction(c) if isinstance(c, str) else c for c in coords)


def weight_str(w: Weight) -> str:
    return "(" + ",".join(str(c) for c in as_weight(w)) + ")"


# --- Cartan data ----------------------------------------------------------------

def _cartan_simple(letter: str, n: int) -> list[list[int]]:
    """Cartan matrix with ``A[i][j] = <alpha_i, alpha_j^vee>``; row i is alpha_i."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if letter == "A" and n >= 1:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
    elif letter in "BC" and n >= 2:
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        # B: last simple root short; C: last simple root long
        long_short, short_long = (-2, -1) if letter == "B" else (-1, -2)
        a[n - 2][n - 1], a[n - 1][n - 2] = long_short, short_long
    elif letter == "D" and n >= 4:
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif letter == "G" and n == 2:
        a[0][1], a[1][0] = -1, -3
    else:
        raise UnsupportedTypeError(f"unsupported simple type {letter}{n}")
    return a


def _weyl_order_simple(letter: str, n: int) -> int:
    if letter == "A":
        return math.factorial(n + 1)
    if letter in "BC":
        return 2**n * math.factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return 12  # G2


def parse_type(label: str) -> list[tuple[str, int]]:
    """Split a descriptor such as ``"A1xA1"`` into its simple factors."""
    parts = re.split(r"\s*[x×*]\s*", label.strip())
    factors = []
    for part in parts:
        m = _TOKEN.fullmatch(part)
        if m is None:
            raise UnsupportedTypeError(f"unsupported type token {part!r} in {label!r}")
        letter, n = m.group(1).upper(), int(m.group(2))
        if letter not in "ABCDG":
            raise UnsupportedTypeError(f"unsupported type token {part!r} in {label!r}")
        _cartan_simple(letter, n)  # validates the rank
        factors.append((letter, n))
    return factors


def _root_lengths(cartan: list[list[int]]) -> list[Fraction]:
    """Half squared lengths d_i with long roots of every component at d=1."""
    n = len(cartan)
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp, queue = [start], deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # A_ij d_j = A_ji d_i
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    comp.append(j)
                    queue.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] /= top
    return d  # type: ignore[return-value]


def _to_fraction_matrix(m: sympy.Matrix) -> tuple:
    return tuple(
        tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in m.row(i))
        for i in range(m.rows)
    )


# --- RootSystem -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root data on a weight lattice written in fundamental-weight coordinates.

    ``simple_coroots`` and ``positive_coroots`` are linear functionals: the
    pairing ``<w, beta^vee>`` is ``pair(w, coroot)``.  ``form`` is the
    invariant symmetric form on the lattice, normalized so that long roots of
    every simple factor of the ambient algebra have squared length 2.
    """

    label: str
    dim: int
    cartan: tuple
    simple_roots: tuple
    simple_coroots: tuple
    positive_roots: tuple
    positive_coroots: tuple
    root_heights: tuple
    rho: Weight
    form: tuple
    height_functional: tuple
    weyl_order: Optional[int] = None
    ambient: Optional["RootSystem"] = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def inner(self, x: Weight, y: Weight) -> Fraction:
        f = self.form
        return sum(
            (x[i] * f[i][j] * y[j] for i in range(self.dim) for j in range(self.dim) if x[i] and y[j]),
            Fraction(0),
        )

    def height(self, w: Weight) -> Scalar:
        """Total height: sum of the coordinates in the ambient simple-root basis."""
        return pair(w, self.height_functional)

    def is_dominant(self, w: Weight, strict: bool = False) -> bool:
        if strict:
            return all(pair(w, c) > 0 for c in self.simple_coroots)
        return all(pair(w, c) >= 0 for c in self.simple_coroots)

    def is_regular(self, w: Weight) -> bool:
        return all(pair(w, c) != 0 for c in self.positive_coroots)

    def reflect_root(self, beta: Weight, coroot: Sequence[Scalar], w: Weight) -> Weight:
        p = pair(w, coroot)
        if p == 0:
            return as_weight(w)
        return as_weight(a - p * b for a, b in zip(w, beta))

    @cached_property
    def roots(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(scale(-1, b) for b in self.positive_roots)

    def coroot_of(self, beta: Weight) -> tuple:
        """Coroot functional of an arbitrary root, computed from the form."""
        beta = as_weight(beta)
        norm = self.inner(beta, beta)
        return as_weight(2 * sum(self.form[j][k] * beta[k] for k in range(self.dim)) / norm for j in range(self.dim))

    def subsystem(self, simple_roots: Sequence[Weight]) -> "RootSystem":
        """Closed subsystem spanned by the given roots, taken as its simple roots."""
        key = tuple(as_weight(b) for b in simple_roots)
        cache = self._subsystems
        if key not in cache:
            cache[key] = _build_subsystem(self, key)
        return cache[key]

    @cached_property
    def _subsystems(self) -> dict:
        return {}


def _close_positive(simple: Sequence[Weight], coroots: Sequence[tuple]):
    """All positive roots from a base by simple-reflection closure.

    Returns ``(roots, coords)`` where coords are coefficients in the base.  For
    a non-base input a mixed-sign coefficient vector is returned as witness via
    ``ValueError``.
    """
    r = len(simple)
    roots = [as_weight(b) for b in simple]
    coords = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    seen = {b: k for k, b in enumerate(roots)}
    queue = deque(range(r))
    while queue:
        k = queue.popleft()
        beta, c = roots[k], coords[k]
        for i in range(r):
            if beta == roots[i]:
                continue
            p = pair(beta, coroots[i])
            if p == 0:
                continue
            gamma = as_weight(a - p * b for a, b in zip(beta, simple[i]))
            gc = tuple(c[j] - (p if j == i else 0) for j in range(r))
            if any(x < 0 for x in gc):
                if any(x > 0 for x in gc):
                    raise ValueError(f"not a base: root {weight_str(gamma)} has mixed coefficients {gc}")
                continue
            if gamma not in seen:
                seen[gamma] = len(roots)
                roots.append(gamma)
                coords.append(gc)
                queue.append(len(roots) - 1)
    return roots, coords


def build_root_system(label: str) -> RootSystem:
    """Build the root system of a (semi)simple type descriptor like ``"B2"`` or ``"A1xA1"``."""
    factors = parse_type(label)
    blocks = [_cartan_simple(letter, n) for letter, n in factors]
    n = sum(len(b) for b in blocks)
    cartan = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                cartan[off + i][off + j] = v
        off += len(b)

    d = _root_lengths(cartan)
    a_inv = sympy.Matrix(cartan).inv()
    form = _to_fraction_matrix(a_inv * sympy.diag(*[sympy.Rational(x.numerator, x.denominator) for x in d]))
    a_inv_f = _to_fraction_matrix(a_inv)
    height_functional = as_weight(sum(row) for row in a_inv_f)

    simple = [as_weight(row) for row in cartan]
    simple_coroots = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots, coords = _close_positive(simple, simple_coroots)

    rs = RootSystem(
        label="x".join(f"{l}{k}" for l, k in factors),
        dim=n,
        cartan=tuple(tuple(r) for r in cartan),
        simple_roots=tuple(simple),
        simple_coroots=tuple(simple_coroots),
        positive_roots=(),
        positive_coroots=(),
        root_heights=(),
        rho=(),
        form=form,
        height_functional=height_functional,
        weyl_order=math.prod(_weyl_order_simple(l, k) for l, k in factors),
    )
    return _finish(rs, roots, coords)


def _finish(rs: RootSystem, roots, coords) -> RootSystem:
    order = sorted(range(len(roots)), key=lambda k: (sum(coords[k]), coords[k]))
    positive = tuple(roots[k] for k in order)
    heights = tuple(sum(coords[k]) for k in order)
    rho = as_weight(sum((Fraction(b[i]) for b in positive), Fraction(0)) / 2 for i in range(rs.dim))
    object.__setattr__(rs, "positive_roots", positive)
    object.__setattr__(rs, "root_heights", heights)
    object.__setattr__(rs, "positive_coroots", tuple(rs.coroot_of(b) for b in positive))
    object.__setattr__(rs, "rho", rho)
    return rs


def _build_subsystem(g: RootSystem, simple: tuple) -> RootSystem:
    g_roots = g.roots
    for b in simple:
        if b not in g_roots:
            raise ValueError(f"{weight_str(b)} is not a root of {g.label}")
        if g.height(b) <= 0:
            raise ValueError(f"{weight_str(b)} is not a positive root of {g.label}")
    if simple:
        rank = sympy.Matrix([list(b) for b in simple]).rank()
        if rank < len(simple):
            raise ValueError(f"designated roots {[weight_str(b) for b in simple]} are linearly dependent")
    coroots = [g.coroot_of(b) for b in simple]
    cartan = tuple(tuple(pair(bi, cj) for cj in coroots) for bi in simple)
    roots, coords = _close_positive(simple, coroots)
    all_h = set(roots) | {scale(-1, b) for b in roots}
    for x in all_h:
        for y in all_h:
            s = add(x, y)
            if s in g_roots and s not in all_h:
                raise ValueError(
                    f"subsystem not closed: {weight_str(x)} + {weight_str(y)} = {weight_str(s)} is a root of {g.label}"
                )
    label = f"{g.label}[" + ",".join(weight_str(b) for b in simple) + "]"
    rs = RootSystem(
        label=label,
        dim=g.dim,
        cartan=cartan,
        simple_roots=simple,
        simple_coroots=tuple(coroots),
        positive_roots=(),
        positive_coroots=(),
        root_heights=(),
        rho=(),
        form=g.form,
        height_functional=g.height_functional,
        ambient=g,
    )
    return _finish(rs, roots, coords)


# --- reflections and orbits -------------------------------------------------------

def reflect(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Simple reflection ``w - <w, alpha_i^vee> alpha_i``."""
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple index {i} out of range for rank {rs.rank}")
    return rs.reflect_root(rs.simple_roots[i], rs.simple_coroots[i], as_weight(w))


def weyl_orbit(rs: RootSystem, w: Weight) -> set:
    w = as_weight(w)
    orbit, queue = {w}, deque([w])
    while queue:
        x = queue.popleft()
        for i in range(rs.rank):
            y = reflect(rs, i, x)
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


def dominant_representative(
    rs: RootSystem, w: Weight, coroots: Optional[Sequence[Weight]] = None
) -> tuple[Weight, int, bool]:
    """Move ``w`` into the closed dominant chamber by simple reflections.

    ``coroots`` optionally names a list of roots of ``rs`` whose closed
    subsystem replaces ``rs`` (dominance for a subalgebra).  Returns the
    chamber representative, the sign of the reflection word applied, and
    whether the representative is regular (strictly dominant).
    """
    sys_ = rs.subsystem(coroots) if coroots is not None else rs
    x, sign = as_weight(w), 1
    while True:
        for i, c in enumerate(sys_.simple_coroots):
            if pair(x, c) < 0:
                x = sys_.reflect_root(sys_.simple_roots[i], c, x)
                sign = -sign
                break
        else:
            break
    regular = all(pair(x, c) > 0 for c in sys_.simple_coroots)
    return x, sign, regular


# --- Weyl group ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    word: tuple
    matrix: tuple
    sign: int

    def apply(self, w: Weight) -> Weight:
        return as_weight(sum(r[j] * w[j] for j in range(len(w))) for r in self.matrix)


def weyl_bound() -> int:
    return int(os.environ.get("GKRS_WEYL_BOUND", DEFAULT_WEYL_BOUND))


def _reflection_matrix(beta: Weight, coroot: tuple) -> tuple:
    n = len(beta)
    return tuple(tuple(_scalar((1 if i == j else 0) - beta[i] * coroot[j]) for j in range(n)) for i in range(n))


def _matmul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    return tuple(tuple(_scalar(sum(a[i][k] * b[k][j] for k in range(n))) for j in range(n)) for i in range(n))


_weyl_cache: dict = {}


def weyl_elements(rs: RootSystem, bound: Optional[int] = None) -> list[WeylElement]:
    """All Weyl group elements with shortest words, by breadth-first closure."""
    bound = weyl_bound() if bound is None else bound
    if rs.weyl_order is not None and rs.weyl_order > bound:
        raise WeylBoundError(f"|W({rs.label})| = {rs.weyl_order} exceeds the enumeration bound {bound}")
    key = id(rs)
    cached = _weyl_cache.get(key)
    if cached is not None and cached[0] is rs:
        return cached[1]
    gens = [_reflection_matrix(b, c) for b, c in zip(rs.simple_roots, rs.simple_coroots)]
    ident = tuple(tuple(1 if i == j else 0 for j in range(rs.dim)) for i in range(rs.dim))
    elements = [WeylElement((), ident, 1)]
    seen = {ident}
    queue = deque(elements)
    while queue:
        e = queue.popleft()
        for i, s in enumerate(gens):
            m = _matmul(s, e.matrix)
            if m not in seen:
                if len(seen) >= bound:
                    raise WeylBoundError(f"|W({rs.label})| exceeds the enumeration bound {bound}")
                seen.add(m)
                new = WeylElement((i,) + e.word, m, -e.sign)
                elements.append(new)
                queue.append(new)
    _weyl_cache[key] = (rs, elements)
    return elements
