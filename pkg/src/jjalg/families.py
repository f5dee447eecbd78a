"""Named families of Jacobi-Jordan algebras.

Basis orders are fixed so that printed files are byte-stable:

==========  ==============================================================
heisenberg  e1..en, f1..fn, z          (n = 1: e, f, z)
heis_abc    e1..en, f1..fn, z, y       (n = 1: e, f, z, y)
a_xyz       e1..en, f1..fn, y, z
a12         e1, e2
a_theta     e1..en, f
j_t         e1..en, f
v_f_v0      p, x1..xm
kn_x_v0     f, e1..en
abelian     b1..bn
truncated   x1..xn                 (nonunital k[x]/(x^(n+1)), not JJ)
==========  ==============================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra
from .errors import BadParameters
from .field import FieldSpec
from .linalg import Matrix


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = dc_field(default_factory=dict)


def _square(F, X, n, what):
    rows = [[F(x) for x in row] for row in X]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise BadParameters(f"{what} must be {n}x{n}")
    return rows


def _symmetric(F, X, n, what):
    rows = _square(F, X, n, what)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise BadParameters(f"{what} must be symmetric")
    return rows


def _ef_names(n):
    if n == 1:
        return ["e"], ["f"]
    return [f"e{i + 1}" for i in range(n)], [f"f{i + 1}" for i in range(n)]


def abelian(F: FieldSpec, n: int, names=None) -> Algebra:
    return Algebra.abelian(F, n, names)


def heisenberg(F: FieldSpec, n: int) -> Algebra:
    """h(2n+1): e_i f_i = f_i e_i = z."""
    if n < 1:
        raise BadParameters("heisenberg needs n >= 1")
    es, fs = _ef_names(n)
    names = es + fs + ["z"]
    prods = {}
    for i in range(n):
        prods[(es[i], fs[i])] = "z"
    return Algebra.from_products(F, 2 * n + 1, prods, names, symmetrize=True)


def heis_abc(F: FieldSpec, n: int, A, B, C, require_symmetric_c: bool = True) -> Algebra:
    """The one-dimensional extension of h(2n+1) by y with e_i e_j = a_ij y,
    f_i f_j = b_ij y and e_i f_j = delta_ij z + c_ij y."""
    A = _symmetric(F, A, n, "A")
    B = _symmetric(F, B, n, "B")
    C = _symmetric(F, C, n, "C") if require_symmetric_c else _square(F, C, n, "C")
    es, fs = _ef_names(n)
    names = es + fs + ["z", "y"]
    N = 2 * n + 2
    iz, iy = 2 * n, 2 * n + 1
    table = [[F.zeros(N) for _ in range(N)] for _ in range(N)]

    def put(i, j, z_coef, y_coef):
        v = [F.zero] * N
        v[iz] = F(z_coef)
        v[iy] = F(y_coef)
        table[i][j] = tuple(v)
        table[j][i] = tuple(v)

    for i in range(n):
        for j in range(n):
            put(i, j, 0, A[i][j])
            put(n + i, n + j, 0, B[i][j])
    for i in range(n):
        for j in range(n):
            v = [F.zero] * N
            v[iz] = F.one if i == j else F.zero
            v[iy] = C[i][j]
            table[i][n + j] = tuple(v)
            table[n + j][i] = tuple(v)
    return Algebra(F, N, table, names)


def a_xyz(F: FieldSpec, n: int, X, Y, Z) -> Algebra:
    """A_{X,Y,Z}: e_i e_j = x_ij y, f_i f_j = y_ij y, e_i f_j = delta_ij z + z_ij y."""
    X = _symmetric(F, X, n, "X")
    Y = _symmetric(F, Y, n, "Y")
    Z = _symmetric(F, Z, n, "Z")
    es, fs = _ef_names(n)
    names = es + fs + ["y", "z"]
    N = 2 * n + 2
    iy, iz = 2 * n, 2 * n + 1
    table = [[F.zeros(N) for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for a, b, ycoef, zcoef in (
                (i, j, X[i][j], 0),
                (n + i, n + j, Y[i][j], 0),
                (i, n + j, Z[i][j], 1 if i == j else 0),
            ):
                v = [F.zero] * N
                v[iy] = F(ycoef)
                v[iz] = F(zcoef)
                table[a][b] = tuple(v)
                table[b][a] = tuple(v)
    return Algebra(F, N, table, names)


def a12(F: FieldSpec) -> Algebra:
    return Algebra.from_products(F, 2, {("e1", "e1"): "e2"}, ["e1", "e2"])


def a_theta(F: FieldSpec, theta) -> Algebra:
    """A_0 # k_0 for a symmetric form theta: (a, x)(b, y) = (0, theta(a, b))."""
    n = len(theta)
    T = _symmetric(F, theta, n, "theta")
    names = [f"e{i + 1}" for i in range(n)] + ["f"]
    prods = {}
    for i in range(n):
        for j in range(n):
            if T[i][j] != 0:
                prods[(i, j)] = {n: T[i][j]}
    return Algebra.from_products(F, n + 1, prods, names)


def j_t(F: FieldSpec, n: int, t: int) -> Algebra:
    """J_t: e_1^2 = ... = e_t^2 = f inside an (n+1)-dimensional space."""
    if not 1 <= t <= n:
        raise BadParameters("j_t needs 1 <= t <= n")
    theta = [[1 if (i == j and i < t) else 0 for j in range(n)] for i in range(n)]
    return a_theta(F, theta)


def v_f_v0(F: FieldSpec, f, v0) -> Algebra:
    """k x V with (p, x)(q, y) = (0, pq v0 + p f(y) + q f(x)); needs f^2 = 0, f v0 = 0."""
    m = len(v0)
    fm = Matrix(F, _square(F, f, m, "f"))
    v0 = F.vec(v0)
    if not (fm @ fm).is_zero():
        raise BadParameters("f must square to zero")
    if any(fm.apply(v0)):
        raise BadParameters("v0 must lie in the kernel of f")
    names = ["p"] + [f"x{i + 1}" for i in range(m)]
    return _k_times_v(F, fm, v0, names)


def kn_x_v0(F: FieldSpec, n: int, X, v0) -> Algebra:
    """k^n_(X, v0): f f = sum v_j e_j, f e_i = sum x_ji e_j; needs X^2 = 0, X v0 = 0."""
    Xm = Matrix(F, _square(F, X, n, "X"))
    v0 = F.vec(v0)
    if len(v0) != n:
        raise BadParameters("v0 must have length n")
    if not (Xm @ Xm).is_zero():
        raise BadParameters("X must square to zero")
    if any(Xm.apply(v0)):
        raise BadParameters("X v0 must vanish")
    names = ["f"] + [f"e{i + 1}" for i in range(n)]
    return _k_times_v(F, Xm, v0, names)


def _k_times_v(F, fm, v0, names):
    m = len(v0)
    N = m + 1
    table = [[F.zeros(N) for _ in range(N)] for _ in range(N)]
    table[0][0] = (F.zero,) + tuple(v0)
    for j in range(m):
        col = (F.zero,) + fm.column(j)
        table[0][j + 1] = col
        table[j + 1][0] = col
    return Algebra(F, N, table, names)


def truncated(F: FieldSpec, n: int) -> Algebra:
    """Nonunital k[x]/(x^(n+1)) on x, x^2, ..., x^n (commutative, associative)."""
    names = [f"x{i + 1}" for i in range(n)]
    prods = {}
    for i in range(n):
        for j in range(n):
            if i + j + 2 <= n:
                prods[(i, j)] = names[i + j + 1]
    return Algebra.from_products(F, n, prods, names)


FAMILIES = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "heis_abc": heis_abc,
    "a_xyz": a_xyz,
    "a12": a12,
    "a_theta": a_theta,
    "j_t": j_t,
    "v_f_v0": v_f_v0,
    "kn_x_v0": kn_x_v0,
    "truncated": truncated,
}


def make(family: FamilySpec | str, field: FieldSpec, **params) -> Algebra:
    if isinstance(family, FamilySpec):
        name, params = family.name, {**family.params, **params}
    else:
        name = family
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise BadParameters(f"unknown family {name!r}") from None
    try:
        return ctor(field, **params)
    except TypeError as exc:
        raise BadParameters(f"bad parameters for {name}: {exc}") from None
