"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` stores the products ``e_i * e_j`` of basis vectors as
coordinate vectors.  Every identity is checked on basis tuples, which is
enough for multilinear identities; the Jordan identity is cubic in its first
argument and gets a dedicated coefficient check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .errors import DimensionMismatch, NotCommutative
from .field import FieldSpec, PrimeField
from .linalg import Matrix, Subspace


def default_names(n):
    return tuple(f"b{i + 1}" for i in range(n))


class Algebra:
    """A bilinear multiplication on ``field^dim``.

    ``table[i][j]`` is the coordinate vector of ``e_i * e_j``.
    """

    def __init__(self, field: FieldSpec, dim: int, table=None, names=None):
        self.field = field
        self.dim = dim
        zero = field.zeros(dim)
        if table is None:
            table = [[zero] * dim for _ in range(dim)]
        if len(table) != dim or any(len(row) != dim for row in table):
            raise DimensionMismatch("structure table must be dim x dim")
        self.table = tuple(tuple(field.vec(v) if len(v) == dim else _bad(dim) for v in row) for row in table)
        self.names = tuple(names) if names is not None else default_names(dim)
        if len(self.names) != dim or len(set(self.names)) != dim:
            raise DimensionMismatch("need one distinct name per basis vector")
        self._sparse = [
            [[(k, c) for k, c in enumerate(v) if c != 0] for v in row] for row in self.table
        ]

    @classmethod
    def from_products(cls, field, dim, products, names=None, symmetrize=False):
        """Build from ``{(i, j): vector}``; keys may be indices or basis names.

        Unlisted products are zero.  With ``symmetrize`` each listed product is
        also installed for the swapped pair.
        """
        names = tuple(names) if names is not None else default_names(dim)
        index = {nm: k for k, nm in enumerate(names)}
        zero = field.zeros(dim)
        table = [[zero] * dim for _ in range(dim)]
        for (a, b), v in products.items():
            i = index[a] if isinstance(a, str) else a
            j = index[b] if isinstance(b, str) else b
            v = _as_vector(field, dim, v, index)
            table[i][j] = v
            if symmetrize:
                table[j][i] = v
        return cls(field, dim, table, names)

    @classmethod
    def abelian(cls, field, dim, names=None):
        return cls(field, dim, None, names)

    # -- basic structure -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.table, self.names))

    def same_structure(self, other) -> bool:
        """Equality of field and structure constants, ignoring basis names."""
        return self.field == other.field and self.dim == other.dim and self.table == other.table

    def __repr__(self):
        prods = []
        F = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.table[i][j]
                if any(v):
                    prods.append(f"{self.names[i]}*{self.names[j]}={self.format_vector(v)}")
        return f"Algebra({F}, dim={self.dim}, {', '.join(prods) or 'abelian'})"

    def format_vector(self, v):
        F = self.field
        terms = []
        for c, nm in zip(v, self.names):
            if c == 0:
                continue
            terms.append(nm if c == 1 else f"{F.format(c)}*{nm}")
        return " + ".join(terms) if terms else "0"

    def e(self, i):
        return self.field.unit(self.dim, i)

    def index(self, name):
        return self.names.index(name)

    def product(self, i, j):
        return self.table[i][j]

    def multiply(self, u, v):
        """Bilinear extension of the table to arbitrary vectors."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch("vectors must have the algebra's dimension")
        F = self.field
        acc = [0] * n
        sp = self._sparse
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = sp[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, g in row[j]:
                    acc[k] += c * g
        if isinstance(F, PrimeField):
            p = F.modulus
            return tuple(x % p for x in acc)
        return tuple(F(x) for x in acc)

    def left_matrix(self, u) -> Matrix:
        """Matrix of x -> u * x."""
        cols = [self.multiply(u, self.e(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_matrix(self, u) -> Matrix:
        cols = [self.multiply(self.e(j), u) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def left_op(self, i) -> Matrix:
        return self.left_matrix(self.e(i))

    def transform(self, P: Matrix, names=None) -> "Algebra":
        """The same algebra written in the basis given by the columns of P."""
        Pinv = P.inverse()
        if Pinv is None:
            raise ValueError("change of basis matrix is singular")
        cols = P.columns()
        n = self.dim
        table = [[Pinv.apply(self.multiply(cols[a], cols[b])) for b in range(n)] for a in range(n)]
        return Algebra(self.field, n, table, names)

    def is_homomorphism_to(self, T: Matrix, other: "Algebra") -> bool:
        """Whether T (columns: images of basis vectors) respects products."""
        return self.homomorphism_defect(T, other) is None

    def homomorphism_defect(self, T: Matrix, other: "Algebra"):
        cols = T.columns()
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = T.apply(self.table[i][j])
                rhs = other.multiply(cols[i], cols[j])
                if lhs != rhs:
                    return (i, j, lhs, rhs)
        return None

    # -- axioms ------------------------------------------------------------

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    def _vsum(self, *vs):
        F = self.field
        out = [F.zero] * self.dim
        for v in vs:
            out = [F.add(a, b) for a, b in zip(out, v)]
        return tuple(out)

    def _vsub(self, u, v):
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(u, v))

    def jacobi_residual(self, i, j, l):
        t = self.table
        return self._vsum(
            self.multiply(self.e(i), t[j][l]),
            self.multiply(self.e(j), t[l][i]),
            self.multiply(self.e(l), t[i][j]),
        )

    def jacobi_defects(self):
        """Every basis triple on which the cyclic sum does not vanish."""
        n = self.dim
        commutative = self.is_commutative()
        out = []
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    if commutative and not (i <= j <= l):
                        # the cyclic sum is symmetric for commutative products
                        continue
                    r = self.jacobi_residual(i, j, l)
                    if any(r):
                        out.append((i, j, l, r))
        return out

    def leibniz_witness(self):
        """First basis triple violating (ab)c = a(bc) + (ac)b, else None."""
        n = self.dim
        t = self.table
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    lhs = self.multiply(t[i][j], self.e(l))
                    rhs = self._vsum(self.multiply(self.e(i), t[j][l]), self.multiply(t[i][l], self.e(j)))
                    if lhs != rhs:
                        return (i, j, l, lhs, rhs)
        return None

    def is_leibniz(self) -> bool:
        return self.leibniz_witness() is None

    def _jordan_defect(self, a, b):
        a2 = self.multiply(a, a)
        lhs = self.multiply(self.multiply(a2, b), a)
        rhs = self.multiply(a2, self.multiply(b, a))
        return self._vsub(lhs, rhs)

    def jordan_probes(self):
        n = self.dim
        F = self.field
        probes = [self.e(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                probes.append(tuple(F.one if k in (i, j) else F.zero for k in range(n)))
        return probes

    def jordan_witness(self):
        """A failing instance of (a^2 b) a = a^2 (b a), else None.

        Probes a over basis vectors and pairwise sums first, then compares
        every coefficient of the identity viewed as a cubic polynomial in the
        coordinates of a, which settles it for all a over every extension.
        """
        if not self.is_commutative():
            raise NotCommutative("the Jordan identity is checked for commutative algebras")
        n = self.dim
        for a in self.jordan_probes():
            for l in range(n):
                r = self._jordan_defect(a, self.e(l))
                if any(r):
                    return ("probe", a, self.e(l), r)
        t = self.table
        for l in range(n):
            el = self.e(l)
            for i in range(n):
                for j in range(i, n):
                    for k in range(j, n):
                        acc = self.field.zeros(n)
                        for p, q, s in set(permutations((i, j, k))):
                            ab = t[p][q]
                            term = self._vsub(
                                self.multiply(self.multiply(ab, el), self.e(s)),
                                self.multiply(ab, t[l][s]),
                            )
                            acc = self._vsum(acc, term)
                        if any(acc):
                            return ("monomial", (i, j, k), el, acc)
        return None

    def is_jordan(self) -> bool:
        return self.jordan_witness() is None

    def is_jacobi_jordan(self) -> bool:
        return self.is_commutative() and not self.jacobi_defects()

    # -- subspaces and series ---------------------------------------------

    def full_space(self):
        return Subspace.full(self.field, self.dim)

    def product_space(self, U: Subspace, W: Subspace) -> Subspace:
        vecs = [self.multiply(u, w) for u in U.basis for w in W.basis]
        return Subspace.span(self.field, self.dim, vecs)

    def derived_algebra(self) -> Subspace:
        A = self.full_space()
        return self.product_space(A, A)

    def derived_series(self):
        """A^(1) = A', A^(k+1) = (A^(k))', listed until a term repeats."""
        terms = [self.derived_algebra()]
        while True:
            nxt = self.product_space(terms[-1], terms[-1])
            if nxt == terms[-1]:
                return terms
            terms.append(nxt)

    def lower_central_series(self):
        """A^1 = A, A^(k+1) = sum_i A^i * A^(k+1-i), listed until a term repeats."""
        terms = [self.full_space()]
        while True:
            k = len(terms)
            acc = Subspace.zero(self.field, self.dim)
            for i in range(1, k + 1):
                acc = acc.sum(self.product_space(terms[i - 1], terms[k - i]))
            if acc == terms[-1]:
                return terms
            terms.append(acc)

    def nilpotency_step(self):
        """Least m with A^m = 0, or None when the series stalls above zero.

        The abelian algebra of positive dimension reports 2.
        """
        terms = self.lower_central_series()
        if terms[-1].dim != 0:
            return None
        return len(terms)

    def solvability_step(self):
        terms = self.derived_series()
        if terms[-1].dim != 0:
            return None
        return len(terms)

    def center(self) -> Subspace:
        """Leibniz center {z : z*A = A*z = 0}."""
        n = self.dim
        rows = []
        for i in range(n):
            rows.extend(self.left_op(i).rows)
            rows.extend(self.right_matrix(self.e(i)).rows)
        if not rows:
            return Subspace.full(self.field, n)
        return Matrix._raw(self.field, rows, n).kernel()

    def is_metabelian(self) -> bool:
        D = self.derived_algebra()
        return all(not any(self.multiply(u, w)) for u in D.basis for w in D.basis)

    def is_abelian(self) -> bool:
        return all(not any(v) for row in self.table for v in row)


def _bad(dim):
    raise DimensionMismatch(f"product vectors must have length {dim}")


def _as_vector(field, dim, v, index):
    if isinstance(v, dict):
        out = [field.zero] * dim
        for key, c in v.items():
            k = index[key] if isinstance(key, str) else key
            out[k] = field.add(out[k], field(c))
        return tuple(out)
    if isinstance(v, str):
        return field.unit(dim, index[v])
    v = tuple(field(x) for x in v)
    if len(v) != dim:
        raise DimensionMismatch(f"product vectors must have length {dim}")
    return v


@dataclass
class AlgebraReport:
    commutative: bool
    jacobi_defects: list
    leibniz: bool
    jordan: bool | None
    derived_series_dims: tuple
    lower_central_dims: tuple
    nilpotency_step: int | None
    solvability_step: int | None
    center: Subspace
    metabelian: bool
    extra: dict = field(default_factory=dict)

    @property
    def jacobi_jordan(self):
        return self.commutative and not self.jacobi_defects


def analyze(A: Algebra) -> AlgebraReport:
    commutative = A.is_commutative()
    return AlgebraReport(
        commutative=commutative,
        jacobi_defects=A.jacobi_defects(),
        leibniz=A.is_leibniz(),
        jordan=A.is_jordan() if commutative else None,
        derived_series_dims=tuple(t.dim for t in A.derived_series()),
        lower_central_dims=tuple(t.dim for t in A.lower_central_series()),
        nilpotency_step=A.nilpotency_step(),
        solvability_step=A.solvability_step(),
        center=A.center(),
        metabelian=A.is_metabelian(),
    )


def is_jacobi_jordan(A: Algebra):
    """(commutative, jacobi_defects) for A."""
    return A.is_commutative(), A.jacobi_defects()


def multiply(A: Algebra, u, v):
    return A.multiply(u, v)


def leibniz_center(A: Algebra) -> Subspace:
    return A.center()


def series(A: Algebra) -> dict:
    return {
        "derived_series_dims": tuple(t.dim for t in A.derived_series()),
        "lower_central_dims": tuple(t.dim for t in A.lower_central_series()),
        "solvability_step": A.solvability_step(),
        "nilpotency_step": A.nilpotency_step(),
    }
