"""Invariant bilinear forms and Frobenius certificates.

A form B is invariant when B(ab, c) = B(a, bc).  The invariant forms make a
linear space, solved for in the n^2 coordinates B[p][q] (index p*n + q).
A vector v with B(v, -) = 0 for every invariant B proves that no invariant
form is nondegenerate; a nondegenerate invariant B proves the opposite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import Algebra
from .linalg import Matrix, Subspace


@dataclass
class FormSpace:
    algebra: Algebra
    basis_forms: list
    common_radical: Subspace
    right_radical: Subspace

    @property
    def dim(self):
        return len(self.basis_forms)

    def combine(self, coeffs) -> Matrix:
        F = self.algebra.field
        n = self.algebra.dim
        acc = Matrix.zeros(F, n, n)
        for c, B in zip(coeffs, self.basis_forms):
            if c != 0:
                acc = acc + B.scale(c)
        return acc


def invariance_residuals(A: Algebra, B: Matrix):
    """Triples (i, j, l) with B(e_i e_j, e_l) != B(e_i, e_j e_l)."""
    F = A.field
    n = A.dim
    out = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                lhs = F.dot(A.table[i][j], B.column(l))
                rhs = F.dot(B.rows[i], A.table[j][l])
                if lhs != rhs:
                    out.append((i, j, l))
    return out


def invariant_form_space(A: Algebra) -> FormSpace:
    F = A.field
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [F.zero] * (n * n)
                for k, c in enumerate(A.table[i][j]):
                    if c != 0:
                        row[k * n + l] = F.add(row[k * n + l], c)
                for k, c in enumerate(A.table[j][l]):
                    if c != 0:
                        row[i * n + k] = F.sub(row[i * n + k], c)
                rows.append(tuple(row))
    if rows:
        ker = Matrix._raw(F, rows, n * n).kernel()
        flat = ker.basis
    else:
        flat = [F.unit(n * n, k) for k in range(n * n)]
    forms = [Matrix._raw(F, [v[p * n:(p + 1) * n] for p in range(n)], n) for v in flat]
    # B(v, -) = 0 means v^T B = 0, i.e. v is orthogonal to every column of B
    left = Subspace.span(F, n, [c for B in forms for c in B.columns()]).annihilator()
    right = Subspace.span(F, n, [r for B in forms for r in B.rows]).annihilator()
    return FormSpace(A, forms, left, right)


@dataclass
class FrobeniusVerdict:
    status: str  # "frobenius", "not_frobenius" or "undetermined"
    certificate: Matrix | None = None
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "frobenius"


def is_frobenius(A: Algebra, trials: int = 64, seed: int = 0, exhaustive_cap: int = 10**5) -> FrobeniusVerdict:
    F = A.field
    n = A.dim
    fs = invariant_form_space(A)
    if fs.common_radical.dim:
        return FrobeniusVerdict("not_frobenius", witness=fs.common_radical.basis[0], reason="common radical")
    if fs.right_radical.dim:
        return FrobeniusVerdict("not_frobenius", witness=fs.right_radical.basis[0], reason="common right radical")
    if n == 0:
        return FrobeniusVerdict("frobenius", Matrix.zeros(F, 0, 0))
    d = fs.dim
    if F.modulus is not None and F.modulus ** d <= exhaustive_cap:
        for coeffs in product(F.elements(), repeat=d):
            B = fs.combine(coeffs)
            if B.det() != 0:
                return FrobeniusVerdict("frobenius", B, reason="exhaustive")
        return FrobeniusVerdict("not_frobenius", reason="exhausted")
    rng = random.Random(seed)
    for _ in range(trials):
        B = fs.combine([F.random_int(rng) for _ in range(d)])
        if B.det() != 0:
            return FrobeniusVerdict("frobenius", B, reason="random")
    return FrobeniusVerdict("undetermined", reason=f"{trials} random trials")
