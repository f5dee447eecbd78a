"""The operator R(a (x) b) = alpha b (x) a + c (x) ab and the braid relation.

Tensor coordinates: e_i (x) e_j has index i*n + j.  R12 = R (x) Id and
R23 = Id (x) R on the triple tensor power, and the quantum Yang-Baxter
equation reads R12 R23 R12 = R23 R12 R23.  Everything is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import Algebra
from .errors import NotCentral, ZeroAlpha, ZeroCentral
from .linalg import Matrix, kron


@dataclass(frozen=True)
class YBContext:
    algebra: Algebra
    alpha: object
    central: tuple
    R: Matrix


def build_R(A: Algebra, alpha, central) -> YBContext:
    F = A.field
    alpha = F(alpha)
    central = F.vec(central)
    if alpha == 0:
        raise ZeroAlpha("alpha must be nonzero")
    if not any(central):
        raise ZeroCentral("the central element must be nonzero")
    if not A.center().contains(central):
        raise NotCentral("the given element is not in the center")
    n = A.dim
    N = n * n
    rows = [[F.zero] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            col = i * n + j
            rows[j * n + i][col] = F.add(rows[j * n + i][col], alpha)
            prod = A.table[i][j]
            for a, ca in enumerate(central):
                if ca == 0:
                    continue
                for b, pb in enumerate(prod):
                    if pb != 0:
                        rows[a * n + b][col] = F.add(rows[a * n + b][col], F.mul(ca, pb))
    return YBContext(A, alpha, central, Matrix._raw(F, [tuple(r) for r in rows], N))


@dataclass
class QYBEResult:
    holds: bool
    residual_rank: int


def braid_residual(R: Matrix, n: int) -> Matrix:
    I = Matrix.identity(R.field, n)
    R12 = kron(R, I)
    R23 = kron(I, R)
    return R12 @ R23 @ R12 - R23 @ R12 @ R23


def check_qybe(ctx: YBContext) -> QYBEResult:
    res = braid_residual(ctx.R, ctx.algebra.dim)
    if res.is_zero():
        return QYBEResult(True, 0)
    return QYBEResult(False, res.rank())


@dataclass
class EquivalenceReport:
    vacuous: bool = False
    cases: int = 0
    counterexamples: list = None
    nilpotency_counterexamples: list = None

    @property
    def ok(self):
        return not self.counterexamples and not self.nilpotency_counterexamples


def qybe_leibniz_equivalence(A: Algebra, exhaustive: bool = True, samples: int = 20, seed: int = 0):
    """Compare the braid relation with the Leibniz identity over admissible (alpha, c).

    An algebra with zero center makes the test vacuous and is reported as
    such rather than failed.
    """
    F = A.field
    Z = A.center()
    report = EquivalenceReport(counterexamples=[], nilpotency_counterexamples=[])
    if Z.dim == 0:
        report.vacuous = True
        return report
    leibniz = A.is_leibniz()
    jj = A.is_jacobi_jordan()
    step = A.nilpotency_step() if jj else None
    if exhaustive and F.modulus is not None:
        alphas = list(F.nonzero_elements())
        centrals = [c for c in Z.elements() if any(c)]
        pairs = list(product(alphas, centrals))
    else:
        rng = random.Random(seed)
        pairs = []
        for _ in range(samples):
            a = F.zero
            while a == 0:
                a = F.random(rng)
            c = F.zeros(A.dim)
            while not any(c):
                c = Z.combine([F.random(rng) for _ in range(Z.dim)])
            pairs.append((a, c))
    for alpha, c in pairs:
        holds = check_qybe(build_R(A, alpha, c)).holds
        report.cases += 1
        if holds != leibniz:
            report.counterexamples.append((alpha, c, holds, leibniz))
        if jj and F.modulus != 2:
            expected = step is not None and step <= 3
            if holds != expected:
                report.nilpotency_counterexamples.append((alpha, c, holds, step))
    return report
