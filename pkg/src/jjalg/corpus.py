"""Small test corpora: family samples and exhaustive enumerations over F_p."""

from __future__ import annotations

from itertools import product

from . import families as fam
from .algebra import Algebra


def family_samples(F):
    """(label, algebra) pairs covering every family constructor."""
    out = [
        ("abelian1", fam.abelian(F, 1)),
        ("abelian3", fam.abelian(F, 3)),
        ("heisenberg1", fam.heisenberg(F, 1)),
        ("heisenberg2", fam.heisenberg(F, 2)),
        ("heis_abc1", fam.heis_abc(F, 1, [[1]], [[2]], [[1]])),
        ("heis_abc2", fam.heis_abc(F, 2, [[1, 0], [0, 2]], [[0, 1], [1, 0]], [[1, 1], [1, 0]])),
        ("a_xyz1", fam.a_xyz(F, 1, [[1]], [[2]], [[1]])),
        ("a_xyz2", fam.a_xyz(F, 2, [[1, 1], [1, 0]], [[0, 0], [0, 1]], [[2, 0], [0, 1]])),
        ("a12", fam.a12(F)),
        ("a_theta", fam.a_theta(F, [[1, 2], [2, 0]])),
        ("j_t_3_2", fam.j_t(F, 3, 2)),
        ("j_t_2_1", fam.j_t(F, 2, 1)),
        ("v_f_v0", fam.v_f_v0(F, [[0, 1], [0, 0]], [1, 0])),
        ("v_f_v0_3", fam.v_f_v0(F, [[0, 0, 1], [0, 0, 0], [0, 0, 0]], [1, 1, 0])),
        ("kn_x_v0", fam.kn_x_v0(F, 2, [[0, 1], [0, 0]], [1, 0])),
        ("kn_x_v0_3", fam.kn_x_v0(F, 3, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], [1, 0, 1])),
    ]
    return out


def commutative_algebras(F, n):
    """Every commutative multiplication on F_p^n (p^(n * n(n+1)/2) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    names = [f"b{k + 1}" for k in range(n)]
    for values in product(product(F.elements(), repeat=n), repeat=len(pairs)):
        table = [[None] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            table[i][j] = v
            table[j][i] = v
        yield Algebra(F, n, table, names)


def jj_algebras(F, n):
    for A in commutative_algebras(F, n):
        if not A.jacobi_defects():
            yield A
