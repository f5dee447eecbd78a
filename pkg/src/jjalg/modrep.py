"""Modules over Jacobi-Jordan algebras and their representations.

An action of A on V = k^m is stored as one m x m matrix per basis vector of
A: ``rho[i]`` is x -> e_i |> x.  The module identity

    (a b) |> x = - a |> (b |> x) - b |> (a |> x)

is bilinear in (a, b), so it is enough to test basis pairs.  The matching
representation is phi(a) = -rho(a), a Jordan morphism into End(V) with the
product f o g + g o f.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .errors import DimensionMismatch, NotJacobiJordan
from .linalg import Matrix, Subspace


@dataclass(frozen=True)
class ActionData:
    base: Algebra
    space_dim: int
    rho: tuple

    def __post_init__(self):
        if len(self.rho) != self.base.dim:
            raise DimensionMismatch("need one operator per basis vector of the base")
        for r in self.rho:
            if r.shape != (self.space_dim, self.space_dim):
                raise DimensionMismatch("action operators must be space_dim x space_dim")

    @classmethod
    def trivial(cls, A: Algebra, m: int):
        return cls(A, m, tuple(Matrix.zeros(A.field, m, m) for _ in range(A.dim)))

    @classmethod
    def from_lambda(cls, A: Algebra, lam):
        """The action of A on k given by a |> x = lambda(a) x."""
        F = A.field
        return cls(A, 1, tuple(Matrix(F, [[F(c)]]) for c in lam))

    @property
    def field(self):
        return self.base.field

    def rho_of(self, u) -> Matrix:
        """Operator of an arbitrary element u of the base."""
        F = self.field
        m = self.space_dim
        acc = Matrix.zeros(F, m, m)
        for c, r in zip(u, self.rho):
            if c != 0:
                acc = acc + r.scale(c)
        return acc

    def act(self, u, x):
        return self.rho_of(u).apply(x)

    def act_basis(self, i, x):
        return self.rho[i].apply(x)

    def is_trivial(self):
        return all(r.is_zero() for r in self.rho)

    def __eq__(self, other):
        if not isinstance(other, ActionData):
            return NotImplemented
        return (
            self.base.same_structure(other.base)
            and self.space_dim == other.space_dim
            and self.rho == other.rho
        )

    def __hash__(self):
        return hash((self.base.table, self.space_dim, self.rho))


def module_defects(D: ActionData):
    """Pairs (i, j) with rho(e_i e_j) != -(rho_i rho_j + rho_j rho_i).

    Each entry is (i, j, lhs, rhs) with lhs = rho(e_i e_j).
    """
    A = D.base
    out = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            lhs = D.rho_of(A.table[i][j])
            rhs = -(D.rho[i] @ D.rho[j] + D.rho[j] @ D.rho[i])
            if lhs != rhs:
                out.append((i, j, lhs, rhs))
    return out


def is_jj_module(D: ActionData) -> bool:
    return not module_defects(D)


@dataclass(frozen=True)
class Representation:
    base: Algebra
    phi: tuple
    defects: tuple

    @property
    def jordan_morphism(self) -> bool:
        return not self.defects


def to_representation(D: ActionData) -> Representation:
    """phi_i = -rho_i together with the Jordan-morphism check."""
    A = D.base
    phi = tuple(-r for r in D.rho)
    m = D.space_dim
    F = A.field
    defects = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            lhs = Matrix.zeros(F, m, m)
            for c, p in zip(A.table[i][j], phi):
                if c != 0:
                    lhs = lhs + p.scale(c)
            rhs = phi[i] @ phi[j] + phi[j] @ phi[i]
            if lhs != rhs:
                defects.append((i, j, lhs, rhs))
    return Representation(A, phi, tuple(defects))


def regular_action(A: Algebra) -> ActionData:
    return ActionData(A, A.dim, tuple(A.left_op(i) for i in range(A.dim)))


def dual_action(A: Algebra) -> ActionData:
    """(a |> f)(x) = f(a x); in dual coordinates the transpose of left multiplication."""
    return ActionData(A, A.dim, tuple(A.left_op(i).T for i in range(A.dim)))


def canonical_actions(A: Algebra) -> dict:
    if not A.is_jacobi_jordan():
        raise NotJacobiJordan("canonical actions are defined for JJ algebras")
    return {"regular": regular_action(A), "dual": dual_action(A)}


def regular_kernel(A: Algebra) -> Subspace:
    """Kernel of a -> left multiplication by a.

    A zero kernel means the regular representation is faithful; a nonzero
    kernel says nothing about other representations.
    """
    n = A.dim
    # column i of the stacked operator is the flattened matrix of L_{e_i}
    cols = [sum(A.left_op(i).rows, ()) for i in range(n)]
    if n == 0:
        return Subspace.zero(A.field, 0)
    rows = [tuple(c[k] for c in cols) for k in range(n * n)]
    return Matrix(A.field, rows).kernel()
