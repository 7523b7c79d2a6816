"""Complex Clifford algebras as exact matrices, quantization, and Thom identities.

Matrices are sparse :class:`DomainMatrix` objects over the Gaussian rationals,
so every identity below is checked as an exact equality.  Conventions:
generators square to -1, ``v w + w v = -2 b(v, w)`` in an orthonormal basis,
and the quantization of an antisymmetric ``A`` is ``-1/4 sum_i (A e_i) e_i``.
With generators squaring to -1 this ordering is the one whose commutator
with ``v`` is ``+A v``; the mirrored ordering ``e_i (A e_i)`` differs by sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

Matrix = DomainMatrix
QUARTER = Fraction(-1, 4)

ONE = QQ_I(1, 0)
I_UNIT = QQ_I(0, 1)


# --- matrix helpers ----------------------------------------------------------------

def _gauss(x) -> object:
    if isinstance(x, Fraction):
        return QQ_I.convert(x)
    if isinstance(x, int):
        return QQ_I(x, 0)
    return x


def mat(rows: Sequence[Sequence]) -> Matrix:
    n, m = len(rows), len(rows[0]) if rows else 0
    dod = {i: {j: _gauss(v) for j, v in enumerate(r) if v} for i, r in enumerate(rows)}
    return DomainMatrix.from_dod({i: r for i, r in dod.items() if r}, (n, m), QQ_I)


def eye(n: int) -> Matrix:
    return DomainMatrix.eye(n, QQ_I).to_sparse()


def zeros(n: int) -> Matrix:
    return DomainMatrix.zeros((n, n), QQ_I).to_sparse()


def kron(a: Matrix, b: Matrix) -> Matrix:
    (ra, ca), (rb, cb) = a.shape, b.shape
    da, db = a.to_dod(), b.to_dod()
    out: dict = {}
    for i, row in da.items():
        for j, x in row.items():
            for k, brow in db.items():
                tgt = out.setdefault(i * rb + k, {})
                for l, y in brow.items():
                    tgt[j * cb + l] = x * y
    return DomainMatrix.from_dod(out, (ra * rb, ca * cb), QQ_I)


def comm(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def anticomm(a: Matrix, b: Matrix) -> Matrix:
    return a * b + b * a


def is_zero(a: Matrix) -> bool:
    return a.to_sparse().is_zero_matrix


def equal(a: Matrix, b: Matrix) -> bool:
    return is_zero(a - b)


def trace(a: Matrix):
    return sum((row.get(i, QQ_I(0, 0)) for i, row in a.to_dod().items()), QQ_I(0, 0))


def smul(k, a: Matrix) -> Matrix:
    return a * _gauss(k)


def lin_comb(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    out = zeros(mats[0].shape[0])
    for c, m in zip(coeffs, mats):
        if c:
            out = out + smul(c, m)
    return out


# --- reports ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    identity: str
    status: str  # "pass" | "fail"
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        d = {"identity": self.identity, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


class _Tally:
    def __init__(self):
        self.records: dict = {}

    def check(self, identity: str, ok: bool, witness: str) -> None:
        if identity not in self.records:
            self.records[identity] = CheckRecord(identity, "pass")
        if not ok and self.records[identity].passed:
            self.records[identity] = CheckRecord(identity, "fail", witness)

    def report(self) -> list[CheckRecord]:
        return list(self.records.values())


# --- Clifford algebra ------------------------------------------------------------------

_SX = mat([[0, 1], [1, 0]])
_SY = mat([[0, -I_UNIT], [I_UNIT, 0]])
_SZ = mat([[1, 0], [0, -1]])
_I2 = eye(2)


def _tensor(factors: Sequence[Matrix]) -> Matrix:
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def _gammas(m: int) -> list[Matrix]:
    """2m Hermitian anticommuting involutions of size 2^m (Jordan-Wigner tower)."""
    out = []
    for k in range(m):
        for s in (_SX, _SY):
            out.append(_tensor([_SZ] * k + [s] + [_I2] * (m - k - 1)))
    return out


@dataclass(frozen=True, eq=False)
class CliffordMatrixAlgebra:
    """Irreducible supermodule of Cl(n): generators, grading involution, and a spare odd involution."""

    n: int
    generators: tuple
    grading: Matrix
    spare: Optional[Matrix]

    @property
    def size(self) -> int:
        return self.grading.shape[0]

    def vector(self, coeffs: Sequence) -> Matrix:
        """Image of the vector sum_j coeffs[j] e_j."""
        return lin_comb(coeffs, self.generators)

    def blade(self, mask: int) -> Matrix:
        out = eye(self.size)
        for j in range(self.n):
            if mask >> j & 1:
                out = out * self.generators[j]
        return out

    def blade_coordinates(self, a: Matrix) -> dict:
        """Coefficients of ``a`` in the blade basis, via the normalized trace form."""
        out = {}
        for mask in range(1 << self.n):
            c = trace(_reverse_blade(self, mask) * a) / QQ_I(self.size, 0)
            if c:
                out[mask] = c
        return out


def _reverse_blade(alg: CliffordMatrixAlgebra, mask: int) -> Matrix:
    out = eye(alg.size)
    for j in reversed(range(alg.n)):
        if mask >> j & 1:
            out = out * smul(-1, alg.generators[j])
    return out


MAX_CLIFFORD_MATRIX_N = 6


def build_clifford(n: int) -> CliffordMatrixAlgebra:
    """Cl(n) on its irreducible supermodule of dimension 2^ceil(n/2), with diagonal grading."""
    if not 1 <= n <= MAX_CLIFFORD_MATRIX_N:
        raise ValueError(f"n={n} outside 1..{MAX_CLIFFORD_MATRIX_N}")
    m = (n + 1) // 2
    gam = _gammas(m)
    gens = tuple(smul(I_UNIT, g) for g in gam[:n])
    grading = _tensor([_SZ] * m)
    spare = gam[n] if n < 2 * m else None
    return CliffordMatrixAlgebra(n, gens, grading, spare)


def clifford_relations(alg: CliffordMatrixAlgebra) -> list[CheckRecord]:
    t = _Tally()
    ident = eye(alg.size)
    eps = alg.grading
    t.check("eps^2 = 1", equal(eps * eps, ident), "eps^2")
    for i, e in enumerate(alg.generators):
        t.check("e_i^2 = -1", equal(e * e, smul(-1, ident)), f"i={i}")
        t.check("eps e_i eps = -e_i", equal(eps * e * eps, smul(-1, e)), f"i={i}")
        for j in range(i + 1, alg.n):
            t.check("e_i e_j = -e_j e_i", is_zero(anticomm(e, alg.generators[j])), f"i={i}, j={j}")
    return t.report()


def odd_commutant(alg: CliffordMatrixAlgebra) -> list[Matrix]:
    """Basis of odd endomorphisms T with T a = (-1)^|a| a T for the Clifford action.

    Solved as a linear system in the entries of T: T anticommutes with the
    grading and with every (odd) generator.
    """
    n = alg.size
    blocks = []
    ident = eye(n)
    for m in (alg.grading,) + tuple(alg.generators):
        # vec(T M) = (M^T kron I) vec(T), vec(M T) = (I kron M) vec(T), column-major
        blocks.append(kron(m.transpose(), ident) + kron(ident, m))
    system = blocks[0]
    for b in blocks[1:]:
        system = system.vstack(b)
    null = system.to_sparse().nullspace()
    out = []
    rows = null.to_dod()
    for r in range(null.shape[0]):
        vec = rows.get(r, {})
        dod: dict = {}
        for idx, v in vec.items():
            col, row = divmod(idx, n)
            dod.setdefault(row, {})[col] = v
        out.append(DomainMatrix.from_dod(dod, (n, n), QQ_I))
    return out


def commutant_type(alg: CliffordMatrixAlgebra) -> str:
    """"M" when no odd equivariant endomorphism exists, "Q" when one exists and squares to a nonzero scalar."""
    basis = odd_commutant(alg)
    if not basis:
        return "M"
    if len(basis) == 1:
        t = basis[0]
        sq = t * t
        c = sq.to_dod().get(0, {}).get(0)
        if c and equal(sq, smul(c, eye(alg.size))):
            return "Q"
    raise ArithmeticError(f"odd commutant of dimension {len(basis)} contradicts Schur's lemma")


# --- quantization ---------------------------------------------------------------------

def _check_antisymmetric(a: Sequence[Sequence]) -> None:
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != -a[j][i]:
                raise ValueError(f"matrix not antisymmetric at ({i},{j})")


def act(a: Sequence[Sequence], j: int) -> list:
    """Coordinates of A e_j."""
    return [a[i][j] for i in range(len(a))]


def quantize(alg: CliffordMatrixAlgebra, a: Sequence[Sequence], scale=QUARTER) -> Matrix:
    """scale * sum_i (A e_i) e_i with scale -1/4; other scales serve as negative controls.

    ``scale=+1/4`` reproduces the mirrored ordering -1/4 sum_i e_i (A e_i).
    """
    _check_antisymmetric(a)
    if len(a) != alg.n:
        raise ValueError(f"matrix size {len(a)} does not match n={alg.n}")
    out = zeros(alg.size)
    for i, e in enumerate(alg.generators):
        out = out + alg.vector(act(a, i)) * e
    return smul(scale, out)


def derivation(alg: CliffordMatrixAlgebra, a: Sequence[Sequence], x: Matrix) -> Matrix:
    """Extension of A from vectors to Cl(V) by the Leibniz rule, via the blade expansion of x."""
    out = zeros(alg.size)
    for mask, c in alg.blade_coordinates(x).items():
        idx = [j for j in range(alg.n) if mask >> j & 1]
        for pos in range(len(idx)):
            term = eye(alg.size)
            for q, j in enumerate(idx):
                term = term * (alg.vector(act(a, j)) if q == pos else alg.generators[j])
            out = out + term * c
    return out


def mat_bracket(a, b) -> list:
    n = len(a)
    return [
        [sum(Fraction(a[i][k]) * b[k][j] - Fraction(b[i][k]) * a[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def bracket_coordinates(lie_gens: Sequence, c) -> Optional[list]:
    """Express an n x n matrix in the span of ``lie_gens`` (exact), or None."""
    import sympy

    cols = [sympy.Matrix([sympy.Rational(str(x)) for row in g for x in row]) for g in lie_gens]
    target = sympy.Matrix([sympy.Rational(str(x)) for row in c for x in row])
    if not cols:
        return [] if all(x == 0 for x in target) else None
    a = sympy.Matrix.hstack(*cols)
    try:
        sol, params = a.gauss_jordan_solve(target)
    except ValueError:
        return None
    sol = sol.subs({p: 0 for p in params})
    return [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]


def quantization_check(alg: CliffordMatrixAlgebra, lie_gens: Sequence, scale=QUARTER) -> list[CheckRecord]:
    """[A~, xi] = A(xi) on vectors and on degree-2 words; A -> A~ is a Lie homomorphism."""
    t = _Tally()
    q = [quantize(alg, a, scale) for a in lie_gens]
    for k, a in enumerate(lie_gens):
        for j in range(alg.n):
            t.check("[A~, e_j] = A e_j", equal(comm(q[k], alg.generators[j]), alg.vector(act(a, j))), f"A#{k}, j={j}")
        for i in range(alg.n):
            for j in range(i + 1, alg.n):
                w = alg.generators[i] * alg.generators[j]
                t.check("[A~, w] = A(w) on degree-2 words", equal(comm(q[k], w), derivation(alg, a, w)), f"A#{k}, e_{i}e_{j}")
    for k, a in enumerate(lie_gens):
        for l, b in enumerate(lie_gens):
            c = mat_bracket(a, b)
            t.check("[A~, B~] = [A,B]~", equal(comm(q[k], q[l]), quantize(alg, c, scale)), f"A#{k}, B#{l}")
    return t.report()


# --- Thom isomorphism -------------------------------------------------------------------

@dataclass(frozen=True)
class GModule:
    """A finite-dimensional representation: one matrix per Lie algebra generator."""

    name: str
    matrices: tuple

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]


def so3_generators() -> list:
    """L1: e2 -> e3, L2: e3 -> e1, L3: e1 -> e2; [L1, L2] = L3."""
    gens = []
    for i, j in ((1, 2), (2, 0), (0, 1)):
        a = [[0] * 3 for _ in range(3)]
        a[j][i], a[i][j] = 1, -1
        gens.append(a)
    return gens


def so3_module(kind: str) -> GModule:
    gens = so3_generators()
    if kind == "trivial":
        return GModule("trivial", tuple(zeros(1) for _ in gens))
    if kind == "vector":
        return GModule("vector", tuple(mat(a) for a in gens))
    if kind == "spin1/2":
        half = QQ_I.convert(Fraction(1, 2))
        return GModule("spin1/2", tuple(smul(-I_UNIT * half, s) for s in (_SX, _SY, _SZ)))
    raise ValueError(f"unknown so(3) module {kind!r}")


class _Elem:
    """Element of U(g) (x) Cl(V) of U-degree <= 1: sum_a X_a (x) c_a + 1 (x) c_0."""

    def __init__(self, size: int, lin: Optional[dict] = None, const: Optional[Matrix] = None):
        self.size = size
        self.lin = {a: m for a, m in (lin or {}).items() if not is_zero(m)}
        self.const = const if const is not None else zeros(size)

    def __add__(self, o: "_Elem") -> "_Elem":
        lin = dict(self.lin)
        for a, m in o.lin.items():
            lin[a] = lin[a] + m if a in lin else m
        return _Elem(self.size, lin, self.const + o.const)

    def __neg__(self) -> "_Elem":
        return _Elem(self.size, {a: smul(-1, m) for a, m in self.lin.items()}, smul(-1, self.const))

    def __sub__(self, o: "_Elem") -> "_Elem":
        return self + (-o)

    def __eq__(self, o) -> bool:
        keys = set(self.lin) | set(o.lin)
        z = zeros(self.size)
        return equal(self.const, o.const) and all(equal(self.lin.get(a, z), o.lin.get(a, z)) for a in keys)

    def mul(self, o: "_Elem", rule=None) -> "_Elem":
        """Product; ``rule(a, c)`` gives the derivation r_{X_a}(c) for the semi-direct product."""
        if self.lin and o.lin:
            raise ValueError("product leaves U-degree <= 1")
        lin = {}
        const = self.const * o.const
        for a, m in self.lin.items():
            lin[a] = m * o.const
        for a, m in o.lin.items():
            lin[a] = self.const * m
            if rule is not None:
                # (1 (x) c)(X (x) b) = X (x) c b - 1 (x) r_X(c) b
                const = const - rule(a, self.const) * m
        return _Elem(self.size, lin, const)


def thom_map_check(
    alg: CliffordMatrixAlgebra,
    lie_gens: Sequence,
    module: Optional[GModule] = None,
    scale=QUARTER,
) -> list[CheckRecord]:
    """Check the algebra isomorphism f: U(g) (x)^ Cl(V) -> U(g) (x) Cl(V) on generators.

    f(X (x) v) = X (x) v + 1 (x) r~(X) v and f^{-1}(X (x) v) = X (x) v - 1 (x) r~(X) v.
    """
    t = _Tally()
    n, size = alg.n, alg.size
    q = [quantize(alg, a, scale) if any(any(r) for r in a) else zeros(size) for a in lie_gens]
    ident = eye(size)
    r_vec = lambda k, j: alg.vector(act(lie_gens[k], j))  # noqa: E731

    def f(x: _Elem) -> _Elem:
        out = _Elem(size, dict(x.lin), x.const)
        for a, m in x.lin.items():
            out = out + _Elem(size, {}, q[a] * m)
        return out

    def f_inv(x: _Elem) -> _Elem:
        out = _Elem(size, dict(x.lin), x.const)
        for a, m in x.lin.items():
            out = out - _Elem(size, {}, q[a] * m)
        return out

    def rule(a: int, c: Matrix) -> Matrix:
        return derivation(alg, lie_gens[a], c)

    X = lambda a, c=None: _Elem(size, {a: c if c is not None else ident})  # noqa: E731
    one = lambda c: _Elem(size, {}, c)  # noqa: E731

    # (a) realization on U (x) S
    mod = module or GModule("vector", tuple(mat(a) for a in lie_gens))
    d = mod.dim
    fx = [kron(mod.matrices[a], ident) + kron(eye(d), q[a]) for a in range(len(lie_gens))]
    fv = [kron(eye(d), e) for e in alg.generators]
    for a in range(len(lie_gens)):
        for j in range(n):
            t.check(
                "(a) [f(X), f(v)] = f(r_X v) on U(x)S",
                equal(comm(fx[a], fv[j]), kron(eye(d), r_vec(a, j))),
                f"X#{a}, v=e_{j}, module={mod.name}",
            )
        for b in range(len(lie_gens)):
            coords = bracket_coordinates(lie_gens, mat_bracket(lie_gens[a], lie_gens[b]))
            if coords is None:
                t.check("(a') [f(X), f(Y)] = f([X,Y]) on U(x)S", False, f"X#{a}, Y#{b}: bracket leaves span")
                continue
            rhs = lin_comb(coords, fx) if fx else zeros(d * size)
            t.check("(a') [f(X), f(Y)] = f([X,Y]) on U(x)S", equal(comm(fx[a], fx[b]), rhs), f"X#{a}, Y#{b}")

    # (b) f^{-1} o f and f o f^{-1} on generators
    for a in range(len(lie_gens)):
        gens = [X(a)] + [X(a, e) for e in alg.generators]
        for k, g in enumerate(gens):
            t.check("(b) f^{-1} f = id", f_inv(f(g)) == g, f"X#{a} (x) {'1' if k == 0 else f'e_{k - 1}'}")
            t.check("(b) f f^{-1} = id", f(f_inv(g)) == g, f"X#{a} (x) {'1' if k == 0 else f'e_{k - 1}'}")
    for j, e in enumerate(alg.generators):
        t.check("(b) f^{-1} f = id", f_inv(f(one(e))) == one(e), f"1 (x) e_{j}")

    # (c) mixed products
    for a in range(len(lie_gens)):
        for j, e in enumerate(alg.generators):
            lhs = f(X(a)).mul(f(one(e))) - f(one(e)).mul(f(X(a)))
            t.check("(c) f(X)f(v) - f(v)f(X) = f(r_X v)", lhs == f(one(r_vec(a, j))), f"X#{a}, v=e_{j}")
            # semi-direct relation itself, and its image under f^{-1}
            sd = X(a).mul(one(e), rule) - one(e).mul(X(a), rule)
            t.check("(c') (X)(v) - (v)(X) = r_X v in the semi-direct product", sd == one(r_vec(a, j)), f"X#{a}, v=e_{j}")
            inv = f_inv(X(a)).mul(f_inv(one(e)), rule) - f_inv(one(e)).mul(f_inv(X(a)), rule)
            t.check("(c'') f^{-1}(X) f^{-1}(v) - f^{-1}(v) f^{-1}(X) = 0", inv == one(zeros(size)), f"X#{a}, v=e_{j}")
    return t.report()


# --- twisted supermodule actions ---------------------------------------------------------

def _blade_mul(s: int, t: int) -> tuple[int, int]:
    """e_S e_T = sign * e_{S xor T} with e_i^2 = -1."""
    a, swaps = s >> 1, 0
    while a:
        swaps += bin(a & t).count("1")
        a >>= 1
    swaps += bin(s & t).count("1")
    return (-1 if swaps % 2 else 1), s ^ t


def _regular(n: int, coords: dict, side: str) -> Matrix:
    dim = 1 << n
    dod: dict = {}
    for mask in range(dim):
        for s, c in coords.items():
            sign, res = _blade_mul(s, mask) if side == "left" else _blade_mul(mask, s)
            row = dod.setdefault(res, {})
            row[mask] = row.get(mask, QQ_I(0, 0)) + c * QQ_I(sign, 0)
    return DomainMatrix.from_dod(dod, (dim, dim), QQ_I).to_sparse()


def twisted_action_check(
    alg: CliffordMatrixAlgebra,
    module: GModule,
    lie_gens: Optional[Sequence] = None,
    omit_epsilon: bool = False,
) -> list[CheckRecord]:
    """Actions on U (x) Cl(V): X(u(x)w) = Xu(x)w + u(x)r~(X)w, v(u(x)w) = u(x)vw, f_i(u(x)w) = u(x)eps(w)e_i."""
    t = _Tally()
    n = alg.n
    gens = list(lie_gens) if lie_gens is not None else so3_generators()
    d, dim = module.dim, 1 << n
    ident_u, ident_c = eye(d), eye(dim)
    eps = mat([[(-1) ** bin(m).count("1") if i == m else 0 for i in range(dim)] for m in range(dim)])
    e_left = [_regular(n, {1 << j: ONE}, "left") for j in range(n)]
    e_right = [_regular(n, {1 << j: ONE}, "right") for j in range(n)]

    xs = []
    for k, a in enumerate(gens):
        coords = alg.blade_coordinates(quantize(alg, a))
        xs.append(kron(module.matrices[k], ident_c) + kron(ident_u, _regular(n, coords, "left")))
    vs = [kron(ident_u, m) for m in e_left]
    fs = [kron(ident_u, m if omit_epsilon else m * eps) for m in e_right]
    big = eye(d * dim)

    for k, a in enumerate(gens):
        for j in range(n):
            rv = lin_comb(act(a, j), vs)
            t.check("(a) [X, v] = r_X v", equal(comm(xs[k], vs[j]), rv), f"X#{k}, v=e_{j}")
        for l in range(len(gens)):
            coords = bracket_coordinates(gens, mat_bracket(a, gens[l]))
            ok = coords is not None and equal(comm(xs[k], xs[l]), lin_comb(coords, xs))
            t.check("(a') X-actions form a representation", ok, f"X#{k}, Y#{l}")
    for i in range(n):
        for k in range(len(gens)):
            t.check("(b) [f_i, X] = 0", is_zero(comm(fs[i], xs[k])), f"f_{i}, X#{k}")
        for j in range(n):
            t.check("(c) f_i v + v f_i = 0", is_zero(anticomm(fs[i], vs[j])), f"f_{i}, v=e_{j}")
        t.check("(d) f_i^2 = +1", equal(fs[i] * fs[i], big), f"f_{i}")
        for j in range(i + 1, n):
            t.check("(d') f_i f_j + f_j f_i = 0", is_zero(anticomm(fs[i], fs[j])), f"f_{i}, f_{j}")
    return t.report()
