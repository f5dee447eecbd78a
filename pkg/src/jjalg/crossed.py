"""Crossed systems, crossed products and the morphisms between them.

A crossed data of A by V = k^m is a triple (|>, theta, .V): an action of A
on V, a symmetric V-valued bilinear map on A, and a multiplication on V.
The crossed product lives on k^(n+m), with basis (A basis, V basis) and

    (a, x) * (b, y) = (ab, theta(a, b) + a |> y + b |> x + x .V y).

It is a JJ algebra exactly when the four axioms checked by
:func:`validate_crossed_system` hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import Algebra
from .errors import (
    DimensionMismatch,
    InvalidCrossedSystem,
    InvalidSemidirectSystem,
    NotAlgebraMap,
    NotSection,
)
from .linalg import Matrix, solve_affine
from .modrep import ActionData


class BilinearVMap:
    """A bilinear map k^n x k^n -> k^m stored on basis pairs."""

    __slots__ = ("field", "domain_dim", "codomain_dim", "table")

    def __init__(self, field, domain_dim, codomain_dim, values=None):
        self.field = field
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        zero = field.zeros(codomain_dim)
        table = [[zero] * domain_dim for _ in range(domain_dim)]
        for (i, j), v in (values or {}).items():
            v = field.vec(v)
            if len(v) != codomain_dim:
                raise DimensionMismatch("cocycle values must live in the fiber")
            table[i][j] = v
        self.table = tuple(tuple(r) for r in table)

    @classmethod
    def symmetric(cls, field, n, m, values):
        """Install each listed value on both (i, j) and (j, i)."""
        full = {}
        for (i, j), v in values.items():
            full[(i, j)] = v
            full[(j, i)] = v
        return cls(field, n, m, full)

    @classmethod
    def from_form(cls, field, gram):
        """A k-valued map (m = 1) from its Gram matrix."""
        rows = gram.rows if isinstance(gram, Matrix) else gram
        n = len(rows)
        return cls(field, n, 1, {(i, j): (rows[i][j],) for i in range(n) for j in range(n)})

    def __call__(self, i, j):
        return self.table[i][j]

    def evaluate(self, u, v):
        F = self.field
        out = [F.zero] * self.codomain_dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = F.mul(ui, vj)
                for k, t in enumerate(self.table[i][j]):
                    if t != 0:
                        out[k] = F.add(out[k], F.mul(c, t))
        return tuple(out)

    def is_symmetric(self):
        n = self.domain_dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    def gram(self, k=0) -> Matrix:
        """Gram matrix of the k-th coordinate."""
        return Matrix._raw(self.field, [[v[k] for v in row] for row in self.table], self.domain_dim)

    def items(self):
        n = self.domain_dim
        for i in range(n):
            for j in range(n):
                if any(self.table[i][j]):
                    yield (i, j), self.table[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, BilinearVMap)
            and self.field == other.field
            and self.domain_dim == other.domain_dim
            and self.codomain_dim == other.codomain_dim
            and self.table == other.table
        )

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"BilinearVMap({self.domain_dim}->{self.codomain_dim}, {dict(self.items())})"


@dataclass(frozen=True, eq=False)
class CrossedData:
    base: Algebra
    fiber_dim: int
    action: ActionData
    cocycle: BilinearVMap
    fiber_mult: Algebra

    def __post_init__(self):
        n, m = self.base.dim, self.fiber_dim
        if self.action.space_dim != m or self.action.base.dim != n:
            raise DimensionMismatch("action does not match base and fiber")
        if self.cocycle.domain_dim != n or self.cocycle.codomain_dim != m:
            raise DimensionMismatch("cocycle does not match base and fiber")
        if self.fiber_mult.dim != m:
            raise DimensionMismatch("fiber multiplication has the wrong dimension")

    @classmethod
    def build(cls, A: Algebra, m: int, rho=None, theta=None, fiber=None):
        """Convenience constructor: missing pieces default to zero.

        ``rho`` is a list of m x m matrices (or nested lists), ``theta`` a
        dict {(i, j): vector} that is symmetrized, ``fiber`` an Algebra.
        """
        F = A.field
        if rho is None:
            action = ActionData.trivial(A, m)
        else:
            action = ActionData(A, m, tuple(r if isinstance(r, Matrix) else Matrix(F, r) for r in rho))
        if isinstance(theta, BilinearVMap):
            cocycle = theta
        else:
            cocycle = BilinearVMap.symmetric(F, A.dim, m, theta or {})
        if fiber is None:
            fiber = Algebra.abelian(F, m, [f"x{k + 1}" for k in range(m)])
        return cls(A, m, action, cocycle, fiber)

    @property
    def field(self):
        return self.base.field

    def __eq__(self, other):
        if not isinstance(other, CrossedData):
            return NotImplemented
        return (
            self.base.same_structure(other.base)
            and self.fiber_dim == other.fiber_dim
            and self.action.rho == other.action.rho
            and self.cocycle == other.cocycle
            and self.fiber_mult.table == other.fiber_mult.table
        )

    def __hash__(self):
        return hash((self.fiber_dim, self.action.rho, self.cocycle.table, self.fiber_mult.table))


@dataclass
class CrossedVerdict:
    failures: dict = dc_field(default_factory=dict)

    @property
    def valid(self):
        return not any(self.failures.values())

    def __bool__(self):
        return self.valid


def _vadd(F, *vs):
    out = list(vs[0])
    for v in vs[1:]:
        out = [F.add(a, b) for a, b in zip(out, v)]
    return tuple(out)


def validate_crossed_system(D: CrossedData) -> CrossedVerdict:
    """Check J1-J4 on basis tuples; ``failures`` maps axiom name to witnesses."""
    A, V = D.base, D.fiber_mult
    F = A.field
    n, m = A.dim, D.fiber_dim
    rho = D.action.rho
    th = D.cocycle
    fails = {"J1": [], "J2": [], "J3": [], "J4": []}

    if not V.is_commutative():
        fails["J1"].append(("fiber not commutative",))
    else:
        for d in V.jacobi_defects():
            fails["J1"].append(("fiber Jacobi",) + tuple(d))
    for i in range(n):
        for j in range(i + 1, n):
            if th(i, j) != th(j, i):
                fails["J1"].append(("theta not symmetric", i, j))

    ex = [F.unit(m, k) for k in range(m)]
    # J2: (ab)|>x + a|>(b|>x) + b|>(a|>x) + x.V theta(a, b) = 0
    for i in range(n):
        for j in range(i, n):
            for k in range(m):
                x = ex[k]
                r = _vadd(
                    F,
                    D.action.act(A.table[i][j], x),
                    rho[i].apply(rho[j].apply(x)),
                    rho[j].apply(rho[i].apply(x)),
                    V.multiply(x, th(i, j)),
                )
                if any(r):
                    fails["J2"].append((i, j, k, r))
    # J3: a|>(x.V y) + x.V(a|>y) + y.V(a|>x) = 0
    for i in range(n):
        for k in range(m):
            for l in range(k, m):
                x, y = ex[k], ex[l]
                r = _vadd(
                    F,
                    rho[i].apply(V.table[k][l]),
                    V.multiply(x, rho[i].apply(y)),
                    V.multiply(y, rho[i].apply(x)),
                )
                if any(r):
                    fails["J3"].append((i, k, l, r))
    # J4: cyclic sums of theta(a, bc) and a|>theta(b, c); symmetric in (a, b, c)
    for i in range(n):
        for j in range(i, n):
            for l in range(j, n):
                r = j4_residual(D, i, j, l)
                if any(r):
                    fails["J4"].append((i, j, l, r))
    return CrossedVerdict(fails)


def j4_residual(D: CrossedData, i, j, l):
    A = D.base
    F = A.field
    th = D.cocycle
    e = A.e
    rho = D.action.rho
    return _vadd(
        F,
        th.evaluate(e(i), A.table[j][l]),
        th.evaluate(e(j), A.table[l][i]),
        th.evaluate(e(l), A.table[i][j]),
        rho[i].apply(th(j, l)),
        rho[j].apply(th(l, i)),
        rho[l].apply(th(i, j)),
    )


def _fiber_names(A: Algebra, V: Algebra):
    names = list(V.names)
    if set(names) & set(A.names):
        names = [f"v{k + 1}" for k in range(V.dim)]
        while set(names) & set(A.names):
            names = ["_" + nm for nm in names]
    return names


def crossed_product_unchecked(D: CrossedData) -> Algebra:
    A, V = D.base, D.fiber_mult
    F = A.field
    n, m = A.dim, D.fiber_dim
    N = n + m
    rho = D.action.rho
    table = [[None] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            table[i][j] = A.table[i][j] + D.cocycle(i, j)
        for k in range(m):
            v = F.zeros(n) + rho[i].column(k)
            table[i][n + k] = v
            table[n + k][i] = v
    for k in range(m):
        for l in range(m):
            table[n + k][n + l] = F.zeros(n) + V.table[k][l]
    return Algebra(F, N, table, list(A.names) + _fiber_names(A, V))


def crossed_product(D: CrossedData) -> Algebra:
    verdict = validate_crossed_system(D)
    if not verdict.valid:
        raise InvalidCrossedSystem("crossed data fails the JJ axioms", verdict.failures)
    E = crossed_product_unchecked(D)
    assert E.is_jacobi_jordan()
    return E


def projection_matrix(D: CrossedData) -> Matrix:
    n, m = D.base.dim, D.fiber_dim
    F = D.field
    return Matrix._raw(F, [F.unit(n + m, i) for i in range(n)], n + m)


def canonical_section(D: CrossedData) -> Matrix:
    return projection_matrix(D).T


def semidirect_product(A: Algebra, action: ActionData, fiber_mult: Algebra) -> Algebra:
    """Crossed product with zero cocycle."""
    m = action.space_dim
    D = CrossedData(A, m, action, BilinearVMap(A.field, A.dim, m), fiber_mult)
    verdict = validate_crossed_system(D)
    if not verdict.valid:
        raise InvalidSemidirectSystem("semidirect data fails the JJ axioms", verdict.failures)
    E = crossed_product_unchecked(D)
    s = canonical_section(D)
    assert A.is_homomorphism_to(s, E)
    return E


@dataclass
class Recognition:
    data: CrossedData
    kernel: Matrix
    iso: Matrix  # (a, x) -> s(a) + x, as an (n+m) x (n+m) matrix into E


def recognize_extension(E: Algebra, A: Algebra, pi: Matrix, s: Matrix, full=False):
    """The crossed system of E over A determined by the section s.

    ``pi`` is n x N and ``s`` is N x n.  The kernel of pi gets its canonical
    RREF basis.  With ``full`` the kernel matrix and the isomorphism
    A # V -> E are returned alongside the data.
    """
    F = E.field
    n, N = A.dim, E.dim
    if pi.shape != (n, N) or s.shape != (N, n):
        raise DimensionMismatch("pi must be dim A x dim E and s must be dim E x dim A")
    bad = E.homomorphism_defect(pi, A)
    if bad is not None:
        raise NotAlgebraMap(f"pi does not respect the product of basis pair {bad[:2]}")
    if pi @ s != Matrix.identity(F, n):
        raise NotSection("pi o s is not the identity")
    K = pi.kernel()
    m = K.dim
    if m != N - n:
        raise NotAlgebraMap("pi is not surjective")
    kv = K.basis
    sc = s.columns()

    def coords(v):
        c = K.coords(v)
        assert c is not None
        return c

    rho = []
    for i in range(n):
        cols = [coords(E.multiply(sc[i], kv[k])) for k in range(m)]
        rho.append(Matrix.from_columns(F, cols, m) if m else Matrix.zeros(F, 0, 0))
    theta = {}
    for i in range(n):
        for j in range(n):
            w = E.multiply(sc[i], sc[j])
            w = tuple(F.sub(a, b) for a, b in zip(w, s.apply(A.table[i][j])))
            theta[(i, j)] = coords(w)
    vt = [[coords(E.multiply(kv[k], kv[l])) for l in range(m)] for k in range(m)]
    fiber = Algebra(F, m, vt, [f"x{k + 1}" for k in range(m)])
    D = CrossedData(A, m, ActionData(A, m, tuple(rho)), BilinearVMap(F, n, m, theta), fiber)
    if not full:
        return D
    Km = K.matrix()
    iso = Matrix.from_columns(F, list(sc) + list(kv), N)
    return Recognition(D, Km, iso)


# -- morphisms psi_r -------------------------------------------------------


def _r_matrix(D, r):
    F = D.field
    if not isinstance(r, Matrix):
        r = Matrix(F, r)
    if r.shape != (D.fiber_dim, D.base.dim):
        raise DimensionMismatch("r must be a fiber_dim x base_dim matrix")
    return r


def psi_matrix(D: CrossedData, r: Matrix) -> Matrix:
    """psi_r(a, x) = (a, r(a) + x) as a block matrix [[I, 0], [r, I]]."""
    F = D.field
    n, m = D.base.dim, D.fiber_dim
    rows = []
    for i in range(n):
        rows.append(F.unit(n + m, i))
    for k in range(m):
        rows.append(tuple(r.rows[k]) + F.unit(m, k))
    return Matrix._raw(F, rows, n + m)


@dataclass
class MorphismVerdict:
    failures: dict
    psi: Matrix | None = None
    inverse: Matrix | None = None

    @property
    def morphism(self):
        return not any(self.failures.values())

    iso = morphism

    def __bool__(self):
        return self.morphism


def ch_failures(D: CrossedData, Dp: CrossedData, r: Matrix) -> dict:
    A = D.base
    F = A.field
    n, m = A.dim, D.fiber_dim
    Vp = Dp.fiber_mult
    fails = {"CH1": [], "CH2": [], "CH3": []}
    if D.fiber_mult.table != Vp.table:
        for k in range(m):
            for l in range(m):
                if D.fiber_mult.table[k][l] != Vp.table[k][l]:
                    fails["CH1"].append((k, l))
    rc = r.columns() if n else []
    for i in range(n):
        for k in range(m):
            x = F.unit(m, k)
            lhs = D.action.rho[i].apply(x)
            rhs = _vadd(F, Dp.action.rho[i].apply(x), Vp.multiply(rc[i], x))
            if lhs != rhs:
                fails["CH2"].append((i, k, lhs, rhs))
    for i in range(n):
        for j in range(i, n):
            lhs = _vadd(F, D.cocycle(i, j), r.apply(A.table[i][j]))
            rhs = _vadd(
                F,
                Dp.cocycle(i, j),
                Dp.action.rho[i].apply(rc[j]),
                Dp.action.rho[j].apply(rc[i]),
                Vp.multiply(rc[i], rc[j]),
            )
            if lhs != rhs:
                fails["CH3"].append((i, j, lhs, rhs))
    return fails


def morphism_from_r(D: CrossedData, Dp: CrossedData, r) -> MorphismVerdict:
    """Whether psi_r : A # V -> A #' V is an algebra map (then an isomorphism)."""
    if D.base.dim != Dp.base.dim or D.fiber_dim != Dp.fiber_dim:
        raise DimensionMismatch("crossed data with different dimensions")
    r = _r_matrix(D, r)
    fails = ch_failures(D, Dp, r)
    if any(fails.values()):
        return MorphismVerdict(fails)
    psi = psi_matrix(D, r)
    inv = psi_matrix(D, -r)
    assert psi @ inv == Matrix.identity(D.field, psi.nrows)
    E, Ep = crossed_product_unchecked(D), crossed_product_unchecked(Dp)
    assert E.is_homomorphism_to(psi, Ep)
    return MorphismVerdict(fails, psi, inv)


@dataclass
class CohomologyVerdict:
    status: str  # "yes", "no" or "unknown"
    r: Matrix | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def _compa2_system(D, Dp):
    """Linear system in r (unknown index k*n + i for r(e_i)_k) from compa2."""
    A = D.base
    F = A.field
    n, m = A.dim, D.fiber_dim
    Vp = Dp.fiber_mult
    rows, rhs = [], []
    for i in range(n):
        diff = D.action.rho[i] - Dp.action.rho[i]
        for k in range(m):
            # r(e_i) .V' e_k = sum_t r_{t,i} (e_t .V' e_k)
            for out in range(m):
                row = [F.zero] * (n * m)
                for t in range(m):
                    row[t * n + i] = Vp.table[t][k][out]
                rows.append(tuple(row))
                rhs.append(diff.rows[out][k])
    return rows, rhs


def _compa3_linear_system(D, Dp):
    """compa3 with the quadratic term dropped: the exact system when .V' = 0."""
    A = D.base
    F = A.field
    n, m = A.dim, D.fiber_dim
    rho = Dp.action.rho
    rows, rhs = [], []
    for i in range(n):
        for j in range(i, n):
            target = tuple(F.sub(a, b) for a, b in zip(D.cocycle(i, j), Dp.cocycle(i, j)))
            for out in range(m):
                row = [F.zero] * (n * m)
                for t in range(m):
                    # i |>' r(e_j) + j |>' r(e_i)
                    row[t * n + j] = F.add(row[t * n + j], rho[i].rows[out][t])
                    row[t * n + i] = F.add(row[t * n + i], rho[j].rows[out][t])
                for l, c in enumerate(A.table[i][j]):
                    if c != 0:
                        row[out * n + l] = F.sub(row[out * n + l], c)
                rows.append(tuple(row))
                rhs.append(target[out])
    return rows, rhs


def _r_from_vec(F, vec, n, m):
    return Matrix._raw(F, [tuple(vec[k * n:(k + 1) * n]) for k in range(m)], n)


def are_cohomologous(D: CrossedData, Dp: CrossedData, cap: int = 10**6) -> CohomologyVerdict:
    """Decide D ~ D' (same fiber product and some r relating them)."""
    if D.base.dim != Dp.base.dim or D.fiber_dim != Dp.fiber_dim:
        raise DimensionMismatch("crossed data with different dimensions")
    A = D.base
    F = A.field
    n, m = A.dim, D.fiber_dim
    if D.fiber_mult.table != Dp.fiber_mult.table:
        return CohomologyVerdict("no", reason="fiber products differ")
    nv = n * m
    if D.fiber_mult.is_abelian():
        if D.action.rho != Dp.action.rho:
            return CohomologyVerdict("no", reason="actions differ over an abelian fiber")
        rows, rhs = _compa3_linear_system(D, Dp)
        part, _ = solve_affine(F, rows, rhs, nv)
        if part is None:
            return CohomologyVerdict("no", reason="coboundary equation has no solution")
        r = _r_from_vec(F, part, n, m)
        assert not any(ch_failures(D, Dp, r).values())
        return CohomologyVerdict("yes", r)

    # compa2 is linear in r; compa3 is checked on the affine solution set
    rows, rhs = _compa2_system(D, Dp)
    part, ker = solve_affine(F, rows, rhs, nv)
    if part is None:
        return CohomologyVerdict("no", reason="action equation has no solution")
    if ker.dim == 0:
        r = _r_from_vec(F, part, n, m)
        if any(ch_failures(D, Dp, r).values()):
            return CohomologyVerdict("no", reason="unique action solution fails the cocycle equation")
        return CohomologyVerdict("yes", r)
    if F.modulus is None or F.modulus ** ker.dim > cap:
        return CohomologyVerdict("unknown", reason="quadratic search space beyond cap")
    for coeffs in product(F.elements(), repeat=ker.dim):
        v = _vadd(F, part, ker.combine(coeffs))
        r = _r_from_vec(F, v, n, m)
        if not any(ch_failures(D, Dp, r).values()):
            return CohomologyVerdict("yes", r)
    return CohomologyVerdict("no", reason="exhausted")


def act_by_r(Dp: CrossedData, r: Matrix) -> CrossedData:
    """The system D with D ~ D' via r, read off compa2 and compa3."""
    A = Dp.base
    F = A.field
    n, m = A.dim, Dp.fiber_dim
    Vp = Dp.fiber_mult
    rc = r.columns() if n else []
    rho = []
    for i in range(n):
        cols = [_vadd(F, Dp.action.rho[i].column(k), Vp.multiply(rc[i], F.unit(m, k))) for k in range(m)]
        rho.append(Matrix.from_columns(F, cols, m) if m else Dp.action.rho[i])
    theta = {}
    for i in range(n):
        for j in range(n):
            v = _vadd(
                F,
                Dp.cocycle(i, j),
                Dp.action.rho[i].apply(rc[j]),
                Dp.action.rho[j].apply(rc[i]),
                Vp.multiply(rc[i], rc[j]),
            )
            v = tuple(F.sub(a, b) for a, b in zip(v, r.apply(A.table[i][j])))
            theta[(i, j)] = v
    return CrossedData(A, m, ActionData(A, m, tuple(rho)), BilinearVMap(F, n, m, theta), Vp)
