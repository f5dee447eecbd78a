"""Cocycles, coboundaries and second cohomology for JJ algebras.

Symmetric V-valued bilinear maps on A are coordinatized by the pairs
(i, j) with i <= j, each carrying m fiber coordinates; the coordinate of
theta(e_i, e_j)_k sits at ``pair_index(i, j) * m + k``.

The cocycle condition is the cyclic identity

    sum_cyc theta(a, bc) + sum_cyc a |> theta(b, c) = 0

and the coboundary of r : A -> V is

    (delta r)(a, b) = a |> r(b) + b |> r(a) - r(ab).

For the co-flag case V = k and a |> x = lambda(a) x.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import Algebra
from .crossed import BilinearVMap, CrossedData, act_by_r, validate_crossed_system
from .errors import (
    ActionNotAnticommuting,
    CapExceeded,
    ClassificationCharUnsupported,
    DimensionMismatch,
    InvalidLambda,
    NotAModule,
)
from .linalg import Matrix, Subspace, matrix_of
from .modrep import ActionData, is_jj_module


def sym_pairs(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def pair_index(n):
    idx = {}
    for p, (i, j) in enumerate(sym_pairs(n)):
        idx[(i, j)] = p
        idx[(j, i)] = p
    return idx


def vec_to_map(F, vec, n, m) -> BilinearVMap:
    """Symmetric coordinates -> BilinearVMap."""
    values = {}
    for p, (i, j) in enumerate(sym_pairs(n)):
        v = tuple(vec[p * m:(p + 1) * m])
        values[(i, j)] = v
        values[(j, i)] = v
    return BilinearVMap(F, n, m, values)


def map_to_vec(theta: BilinearVMap):
    out = []
    for i, j in sym_pairs(theta.domain_dim):
        out.extend(theta(i, j))
    return tuple(out)


@dataclass
class CocycleSpace:
    context: str
    algebra: Algebra
    action: ActionData
    Z2: Subspace
    B2: Subspace
    lam: tuple | None = None

    @property
    def h2_dim(self):
        return self.Z2.dim - self.B2.dim

    @property
    def fiber_dim(self):
        return self.action.space_dim

    def cocycle(self, vec) -> BilinearVMap:
        return vec_to_map(self.algebra.field, vec, self.algebra.dim, self.fiber_dim)

    def class_count(self):
        """Number of classes p^h2 (prime fields only)."""
        p = self.algebra.field.modulus
        if p is None:
            return None
        return p ** self.h2_dim

    def class_representative(self, vec):
        """Canonical coset representative of vec modulo B2."""
        F = self.algebra.field
        v = list(vec)
        for b, pc in zip(self.B2.basis, self.B2.pivots()):
            c = v[pc]
            if c != 0:
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, b)]
        return tuple(v)

    def crossed_data(self, vec) -> CrossedData:
        A = self.algebra
        m = self.fiber_dim
        fiber = Algebra.abelian(A.field, m, [f"x{k + 1}" for k in range(m)])
        return CrossedData(A, m, self.action, self.cocycle(vec), fiber)


def cocycle_operator(A: Algebra, action: ActionData) -> Matrix:
    """Linear map from symmetric coordinates to cyclic-sum residuals on i <= j <= l."""
    F = A.field
    n, m = A.dim, action.space_dim
    triples = [(i, j, l) for i in range(n) for j in range(i, n) for l in range(j, n)]
    rho = action.rho
    e = A.e

    def apply(vec):
        th = vec_to_map(F, vec, n, m)
        out = []
        for i, j, l in triples:
            parts = (
                th.evaluate(e(i), A.table[j][l]),
                th.evaluate(e(j), A.table[l][i]),
                th.evaluate(e(l), A.table[i][j]),
                rho[i].apply(th(j, l)),
                rho[j].apply(th(l, i)),
                rho[l].apply(th(i, j)),
            )
            acc = [F.zero] * m
            for v in parts:
                acc = [F.add(a, b) for a, b in zip(acc, v)]
            out.extend(acc)
        return tuple(out)

    npairs = n * (n + 1) // 2
    return matrix_of(F, apply, npairs * m, len(triples) * m)


def coboundary_operator(A: Algebra, action: ActionData, with_product_term=True) -> Matrix:
    """delta : Hom(A, V) -> symmetric maps; r is flattened as r(e_i)_k at k*n + i."""
    F = A.field
    n, m = A.dim, action.space_dim
    rho = action.rho

    def apply(rvec):
        rc = [tuple(rvec[k * n + i] for k in range(m)) for i in range(n)]
        out = []
        for i, j in sym_pairs(n):
            v = [F.add(a, b) for a, b in zip(rho[i].apply(rc[j]), rho[j].apply(rc[i]))]
            if with_product_term:
                for l, c in enumerate(A.table[i][j]):
                    if c != 0:
                        v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, rc[l])]
            out.extend(v)
        return tuple(out)

    return matrix_of(F, apply, n * m, len(sym_pairs(n)) * m)


def _space(context, A, action, with_product_term=True, lam=None):
    Z = cocycle_operator(A, action).kernel()
    B = coboundary_operator(A, action, with_product_term).image()
    assert Z.contains(B), "coboundaries must be cocycles"
    return CocycleSpace(context, A, action, Z, B, lam)


def abelian_cocycles(A: Algebra, action: ActionData) -> CocycleSpace:
    """Z2 and B2 for an abelian fiber with the given module structure."""
    if not is_jj_module(action):
        raise NotAModule("the action does not satisfy the module identity")
    return _space("abelian", A, action)


# -- co-flag data ----------------------------------------------------------


class LambdaList(list):
    """A list of functionals with a completeness flag."""

    complete: bool = True


def lambda_ok(A: Algebra, lam) -> bool:
    """lambda(ab) = -2 lambda(a) lambda(b) on basis pairs.

    For a fixed lambda both sides are bilinear in (a, b), so basis pairs
    decide the identity for all vectors.
    """
    F = A.field
    n = A.dim
    for i in range(n):
        for j in range(i, n):
            lhs = F.dot(lam, A.table[i][j])
            rhs = F.mul(F(-2), F.mul(lam[i], lam[j]))
            if lhs != rhs:
                return False
    return True


def _char_guard(F, allow_small_char):
    p = F.modulus
    if p in (2, 3) and not allow_small_char:
        raise ClassificationCharUnsupported(f"co-flag classification needs characteristic other than 2, 3 (got {p})")


def coflag_lambdas(A: Algebra, allow_small_char: bool = False, cap: int = 10**6) -> LambdaList:
    """All lambda : A -> k with lambda(ab) = -2 lambda(a) lambda(b).

    Over F_p every functional is tried.  Over Q the zero functional is
    returned; the list is flagged complete when A is JJ, because then
    mu = -2 lambda is an algebra map to k and the Jacobi identity gives
    3 mu(a)^3 = 0.
    """
    F = A.field
    _char_guard(F, allow_small_char)
    n = A.dim
    out = LambdaList()
    if F.modulus is None:
        out.append(F.zeros(n))
        out.complete = A.is_jacobi_jordan()
        return out
    if F.modulus ** n > cap:
        raise CapExceeded(f"{F.modulus}^{n} functionals exceed the cap {cap}", partial=None)
    for lam in product(F.elements(), repeat=n):
        if lambda_ok(A, lam):
            out.append(tuple(lam))
    out.complete = True
    return out


def coflag_cohomology(A: Algebra, lam) -> CocycleSpace:
    F = A.field
    lam = F.vec(lam)
    if len(lam) != A.dim:
        raise DimensionMismatch("lambda needs one value per basis vector")
    if not lambda_ok(A, lam):
        raise InvalidLambda("lambda(ab) = -2 lambda(a) lambda(b) fails")
    return _space("coflag", A, ActionData.from_lambda(A, lam), lam=lam)


@dataclass
class GH2Report:
    pieces: list  # (lambda, CocycleSpace)
    complete: bool

    @property
    def class_count(self):
        counts = [cs.class_count() for _, cs in self.pieces]
        if any(c is None for c in counts):
            return None
        return sum(counts)


def gh2_coflag(A: Algebra, allow_small_char: bool = False) -> GH2Report:
    """GH^2(A, k) as the disjoint union over lambda of H^2_lambda(A, k)."""
    lams = coflag_lambdas(A, allow_small_char)
    return GH2Report([(lam, coflag_cohomology(A, lam)) for lam in lams], lams.complete)


# -- metabelian case -------------------------------------------------------


def metabelian_cohomology(n: int, m: int, action: ActionData) -> CocycleSpace:
    """Cohomology for an abelian base k^n acting on k^m by anticommuting operators."""
    A = action.base
    if A.dim != n or action.space_dim != m:
        raise DimensionMismatch("action does not match the stated dimensions")
    if not A.is_abelian():
        raise DimensionMismatch("metabelian cohomology needs an abelian base")
    rho = action.rho
    for i in range(n):
        for j in range(i, n):
            if not (rho[i] @ rho[j] + rho[j] @ rho[i]).is_zero():
                raise ActionNotAnticommuting(f"operators {i} and {j} do not anticommute")
    return _space("metabelian", A, action, with_product_term=False)


def square_zero_endomorphisms(F, m):
    """All m x m matrices f over F_p with f^2 = 0."""
    for entries in product(F.elements(), repeat=m * m):
        f = Matrix._raw(F, [entries[r * m:(r + 1) * m] for r in range(m)], m)
        if (f @ f).is_zero():
            yield f


def codim1_classes(m: int, F) -> int:
    """Number of classes of pairs (f, v0) with f^2 = 0 and v0 in Ker f.

    Two pairs with the same f are identified when v0 - v0' lies in Im f, so
    each f contributes |Ker f / Im f|.
    """
    total = 0
    for f in square_zero_endomorphisms(F, m):
        ker = f.kernel()
        im = f.image()
        total += F.modulus ** ker.quotient_dim(im)
    return total


# -- global H^2 over F_p ---------------------------------------------------


@dataclass
class GlobalH2Report:
    components: list = dc_field(default_factory=list)  # (ActionData, h2_dim)
    nonabelian: list = dc_field(default_factory=list)  # (fiber Algebra, systems, classes)
    complete: bool = True

    @property
    def total_classes(self):
        p = None
        total = 0
        for action, h2 in self.components:
            p = action.field.modulus
            total += p ** h2
        for _, _, classes in self.nonabelian:
            total += classes
        return total


def all_actions(A: Algebra, m: int, jj_only=True):
    """Tuples of m x m matrices over F_p, one per basis vector of A."""
    F = A.field
    n = A.dim
    mats = [Matrix._raw(F, [e[r * m:(r + 1) * m] for r in range(m)], m) for e in product(F.elements(), repeat=m * m)]
    for combo in product(mats, repeat=n):
        D = ActionData(A, m, tuple(combo))
        if not jj_only or is_jj_module(D):
            yield D


def jj_fiber_structures(F, m):
    """Every JJ multiplication on k^m (commutative tables enumerated)."""
    pairs = sym_pairs(m)
    for values in product(product(F.elements(), repeat=m), repeat=len(pairs)):
        table = [[None] * m for _ in range(m)]
        for (i, j), v in zip(pairs, values):
            table[i][j] = v
            table[j][i] = v
        V = Algebra(F, m, table, [f"x{k + 1}" for k in range(m)])
        if V.is_jacobi_jordan():
            yield V


def _system_key(D: CrossedData):
    return (D.action.rho, D.cocycle.table)


def count_nonabelian_classes(A: Algebra, V: Algebra, cap: int):
    """Crossed systems with fiber product V and their classes, by orbit enumeration."""
    F = A.field
    n, m = A.dim, V.dim
    p = F.modulus
    size = p ** (n * m * m) * p ** (len(sym_pairs(n)) * m)
    if size > cap:
        raise CapExceeded(f"{size} candidate systems exceed the cap {cap}", partial=None)
    systems = []
    for action in all_actions(A, m, jj_only=False):
        for vec in product(F.elements(), repeat=len(sym_pairs(n)) * m):
            D = CrossedData(A, m, action, vec_to_map(F, vec, n, m), V)
            if validate_crossed_system(D).valid:
                systems.append(D)
    index = {_system_key(D): k for k, D in enumerate(systems)}
    parent = list(range(len(systems)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rs = [Matrix._raw(F, [e[k * n:(k + 1) * n] for k in range(m)], n) for e in product(F.elements(), repeat=n * m)]
    for k, D in enumerate(systems):
        for r in rs:
            other = index[_system_key(act_by_r(D, r))]
            a, b = find(k), find(other)
            if a != b:
                parent[a] = b
    classes = len({find(k) for k in range(len(systems))})
    return len(systems), classes


def global_h2_abelian(A: Algebra, m: int, cap: int = 10**6, nonabelian: bool = False) -> GlobalH2Report:
    """H^2(A, V0) as the disjoint union over module structures on V = k^m.

    With ``nonabelian`` and m <= 2, JJ fiber products are added by direct
    orbit enumeration of crossed systems.
    """
    F = A.field
    if F.modulus is None:
        raise ClassificationCharUnsupported("global enumeration needs a prime field")
    n = A.dim
    report = GlobalH2Report()
    size = F.modulus ** (n * m * m)
    if size > cap:
        raise CapExceeded(f"{size} candidate actions exceed the cap {cap}", partial=report)
    for action in all_actions(A, m):
        report.components.append((action, abelian_cocycles(A, action).h2_dim))
    if nonabelian and m <= 2:
        for V in jj_fiber_structures(F, m):
            if V.is_abelian():
                continue
            try:
                systems, classes = count_nonabelian_classes(A, V, cap)
            except CapExceeded:
                report.complete = False
                raise CapExceeded("non-abelian fiber enumeration exceeds the cap", partial=report) from None
            report.nonabelian.append((V, systems, classes))
    return report
