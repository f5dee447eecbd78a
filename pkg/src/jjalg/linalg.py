"""Dense exact linear algebra over a :class:`~jjalg.field.FieldSpec`.

Matrices are immutable row tuples.  The low-level helpers (``_rref`` and
friends) work on plain lists of lists and are shared by :class:`Matrix` and
:class:`Subspace`.  Subspaces keep their basis in reduced row echelon form so
that two spans of the same space compare equal and hash alike.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, NotContained
from .field import FieldSpec, PrimeField


def _rref(rows, F: FieldSpec, ncols=None):
    """In-place RREF of a list of row lists.  Returns the pivot columns."""
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    if isinstance(F, PrimeField):
        p = F.modulus
        for c in range(ncols):
            if r >= m:
                break
            piv = None
            for i in range(r, m):
                if rows[i][c] % p:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][c], -1, p)
            prow = [x * inv % p for x in rows[r]]
            rows[r] = prow
            for i in range(m):
                if i != r:
                    f = rows[i][c] % p
                    if f:
                        rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
        return pivots
    for c in range(ncols):
        if r >= m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        prow = [x * inv for x in rows[r]]
        rows[r] = prow
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def _kernel_from_rref(rows, pivots, ncols, F):
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(rows[i][free])
        basis.append(tuple(v))
    return basis


def _matmul(a, b, F):
    bt = list(zip(*b)) if b else []
    if isinstance(F, PrimeField):
        p = F.modulus
        return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]
    return [[F.dot(row, col) for col in bt] for row in a]


class Matrix:
    """Immutable dense matrix with entries in ``field``."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")
        self._hash = None

    @classmethod
    def _raw(cls, field, rows, ncols=None):
        # Trusted constructor: rows already canonical.
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols if ncols is not None else (len(m.rows[0]) if m.rows else 0)
        m._hash = None
        return m

    @classmethod
    def identity(cls, field, n):
        return cls._raw(field, [field.unit(n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls._raw(field, [field.zeros(ncols)] * nrows, ncols)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        columns = [tuple(field(x) for x in c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        rows = [tuple(c[i] for c in columns) for i in range(nrows)]
        return cls._raw(field, rows, len(columns))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.shape, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, [{body}])"

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch in addition")
        F = self.field
        return Matrix._raw(
            F, [[F.add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self):
        F = self.field
        return Matrix._raw(F, [[F.neg(x) for x in r] for r in self.rows], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        c = F(c)
        return Matrix._raw(F, [[F.mul(c, x) for x in r] for r in self.rows], self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            return Matrix._raw(self.field, _matmul(self.rows, other.rows, self.field), other.ncols)
        return self.apply(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length does not match matrix")
        F = self.field
        return tuple(F.dot(r, vec) for r in self.rows)

    @property
    def T(self):
        return Matrix._raw(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def kron(self, other):
        return kron(self, other)

    def rref(self):
        rows = [list(r) for r in self.rows]
        piv = _rref(rows, self.field, self.ncols)
        return Matrix._raw(self.field, rows, self.ncols), piv

    def rank(self):
        return len(self.rref()[1])

    def kernel(self) -> "Subspace":
        return rref_kernel_solve(self).kernel

    def image(self) -> "Subspace":
        return Subspace.span(self.field, self.nrows, self.columns())

    def row_space(self) -> "Subspace":
        return Subspace.span(self.field, self.ncols, self.rows)

    def solve(self, b):
        return rref_kernel_solve(self, b).solution

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("determinant of a non-square matrix")
        F = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = F.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if piv is None:
                return F.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = F.neg(d)
            d = F.mul(d, rows[c][c])
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                f = rows[i][c]
                if f != 0:
                    f = F.mul(f, inv)
                    rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
        return d

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        F = self.field
        n = self.nrows
        rows = [list(r) + list(F.unit(n, i)) for i, r in enumerate(self.rows)]
        piv = _rref(rows, F, n)
        if piv != list(range(n)):
            return None
        return Matrix._raw(F, [r[n:] for r in rows], n)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, row index ``i * b.nrows + k``."""
    a._check(b)
    F = a.field
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append([F.mul(x, y) for x in ra for y in rb])
    return Matrix._raw(F, rows, a.ncols * b.ncols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient_dim`` with a canonical RREF basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        rows = [[field(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch("vector length does not match ambient dimension")
        rows = [r for r in rows if any(x != 0 for x in r)]
        if not rows:
            return cls(field, ambient_dim, ())
        piv = _rref(rows, field, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in rows[: len(piv)]))

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, ())

    @classmethod
    def full(cls, field, n):
        return cls(field, n, tuple(field.unit(n, i) for i in range(n)))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def pivots(self):
        return [next(j for j, x in enumerate(v) if x != 0) for v in self.basis]

    def _same(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def coords(self, v):
        """Coordinates of ``v`` in the canonical basis, or None if v is outside."""
        F = self.field
        v = [F(x) for x in v]
        c = []
        for b, pc in zip(self.basis, self.pivots()):
            coef = v[pc]
            c.append(coef)
            if coef != 0:
                v = [F.sub(x, F.mul(coef, y)) for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            return None
        return tuple(c)

    def combine(self, coeffs):
        F = self.field
        out = [F.zero] * self.ambient_dim
        for c, b in zip(coeffs, self.basis):
            if c != 0:
                out = [F.add(x, F.mul(c, y)) for x, y in zip(out, b)]
        return tuple(out)

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._same(v)
            return all(self.coords(b) is not None for b in v.basis)
        return self.coords(v) is not None

    def __contains__(self, v):
        return self.contains(v)

    def sum(self, other):
        self._same(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def annihilator(self):
        """Vectors w with <w, u> = 0 for every u in the subspace."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        rows = [list(b) for b in self.basis]
        piv = _rref(rows, self.field, self.ambient_dim)
        ker = _kernel_from_rref(rows, piv, self.ambient_dim, self.field)
        return Subspace.span(self.field, self.ambient_dim, ker)

    def intersect(self, other):
        self._same(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def quotient_dim(self, sub):
        if not self.contains(sub):
            raise NotContained("quotient_dim needs the second space inside the first")
        return self.dim - sub.dim

    def complement_basis(self):
        """Unit vectors on the non-pivot coordinates; they span a complement."""
        piv = set(self.pivots())
        return [self.field.unit(self.ambient_dim, j) for j in range(self.ambient_dim) if j not in piv]

    def elements(self):
        """Every vector of the subspace (prime fields only)."""
        from itertools import product

        F = self.field
        for coeffs in product(F.elements(), repeat=self.dim):
            yield self.combine(coeffs)

    def matrix(self):
        """Basis vectors as the columns of an ambient_dim x dim matrix."""
        return Matrix.from_columns(self.field, self.basis, self.ambient_dim) if self.basis else Matrix.zeros(
            self.field, self.ambient_dim, 0
        )

    def __repr__(self):
        body = ", ".join("(" + ",".join(self.field.format(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim} in {self.field}^{self.ambient_dim}: [{body}])"


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    pivots: tuple
    rank: int
    kernel: Subspace
    solution: tuple | None
    consistent: bool


def rref_kernel_solve(M: Matrix, b=None) -> RrefResult:
    """RREF, rank, kernel and (when ``b`` is given) a particular solution of M x = b.

    ``solution`` is None and ``consistent`` False when b is outside the image.
    """
    F = M.field
    n = M.ncols
    if b is not None:
        if len(b) != M.nrows:
            raise DimensionMismatch("right-hand side has the wrong length")
        rows = [list(r) + [F(x)] for r, x in zip(M.rows, b)]
    else:
        rows = [list(r) for r in M.rows]
    piv = _rref(rows, F, n)
    core = [r[:n] for r in rows]
    kernel = Subspace.span(F, n, _kernel_from_rref(core, piv, n, F))
    solution = None
    consistent = True
    if b is not None:
        consistent = all(r[n] == 0 for r in rows[len(piv):])
        if consistent:
            x = [F.zero] * n
            for i, pc in enumerate(piv):
                x[pc] = rows[i][n]
            solution = tuple(x)
    return RrefResult(Matrix._raw(F, core, n), tuple(piv), len(piv), kernel, solution, consistent)


def subspace_ops(op: str, U: Subspace, W: Subspace):
    if op == "sum":
        return U.sum(W)
    if op == "intersect":
        return U.intersect(W)
    if op == "quotient_dim":
        return U.quotient_dim(W)
    if op == "contains":
        return U.contains(W)
    raise ValueError(f"unknown subspace operation {op!r}")


def solve_affine(F: FieldSpec, rows, rhs, nvars):
    """Solve a linear system given as raw coefficient rows.

    Returns (particular, kernel Subspace) or (None, kernel) when inconsistent.
    """
    if not rows:
        return F.zeros(nvars), Subspace.full(F, nvars)
    M = Matrix._raw(F, rows, nvars)
    res = rref_kernel_solve(M, rhs)
    return res.solution, res.kernel


def matrix_of(F: FieldSpec, fn, n_in: int, n_out: int) -> Matrix:
    """Matrix of a linear map given as a Python function on coordinate tuples."""
    cols = [fn(F.unit(n_in, i)) for i in range(n_in)]
    if not cols:
        return Matrix.zeros(F, n_out, 0)
    return Matrix.from_columns(F, cols, n_out)
