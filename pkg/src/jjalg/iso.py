"""Isomorphisms, automorphisms and homothety of symmetric forms.

Over F_p the search works in an adapted basis of the source algebra: first a
complement of the derived algebra (free choices), then products of earlier
vectors, whose images are forced.  Free images are drawn from target
vectors that share a per-vector invariant with the source vector, and every
product relation is checked as soon as all the vectors it involves have
images.  Over Q only invariant mismatches give verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import Algebra
from .errors import CapExceeded, DimensionMismatch
from .linalg import Matrix, Subspace

DEFAULT_NODE_CAP = 10**7
VECTOR_TABLE_CAP = 10**5


# -- invariants ------------------------------------------------------------


def _level(terms, v):
    lvl = 0
    for t in terms:
        if t.contains(v):
            lvl += 1
        else:
            break
    return lvl


class _Invariants:
    def __init__(self, A: Algebra):
        self.A = A
        self.dseries = A.derived_series()
        self.lcs = A.lower_central_series()[1:]
        self.center = A.center()

    def of(self, u):
        A = self.A
        sq = A.multiply(u, u)
        return (
            A.left_matrix(u).rank(),
            _level(self.dseries, u),
            _level(self.lcs, u),
            self.center.contains(u),
            not any(sq),
            _level(self.dseries, sq) if any(sq) else -1,
        )


@lru_cache(maxsize=64)
def _vector_table(A: Algebra):
    """Map invariant -> list of nonzero vectors of A (prime fields only)."""
    inv = _Invariants(A)
    table = {}
    for u in product(A.field.elements(), repeat=A.dim):
        if any(u):
            table.setdefault(inv.of(u), []).append(u)
    return table


@dataclass(frozen=True)
class InvariantFingerprint:
    dim: int
    derived_series_dims: tuple
    lower_central_dims: tuple
    center_dim: int
    nilpotency_step: int | None
    commutative: bool
    jacobi_jordan: bool
    left_rank_span: int
    vector_histogram: tuple | None

    def diff(self, other):
        """Name of the first differing component, or None."""
        for name in self.__dataclass_fields__:
            if getattr(self, name) != getattr(other, name):
                return name
        return None


def fingerprint(A: Algebra) -> InvariantFingerprint:
    F = A.field
    # dimension of {L_u}: the span of left multiplications is basis independent
    left_span = Subspace.span(F, A.dim * A.dim, [sum(A.left_op(i).rows, ()) for i in range(A.dim)]).dim
    hist = None
    if F.modulus is not None and F.modulus ** A.dim <= VECTOR_TABLE_CAP:
        hist = tuple(sorted((k, len(v)) for k, v in _vector_table(A).items()))
    return InvariantFingerprint(
        A.dim,
        tuple(t.dim for t in A.derived_series()),
        tuple(t.dim for t in A.lower_central_series()),
        A.center().dim,
        A.nilpotency_step(),
        A.is_commutative(),
        A.is_jacobi_jordan(),
        left_span,
        hist,
    )


# -- adapted basis and search ----------------------------------------------


def adapted_basis(A: Algebra):
    """(vectors, kinds): kinds[k] is None for a free vector or (i, j) for v_i v_j."""
    F = A.field
    n = A.dim
    vecs, kinds = [], []
    span = Subspace.zero(F, n)

    def add(v, kind):
        nonlocal span
        vecs.append(v)
        kinds.append(kind)
        span = span.sum(Subspace.span(F, n, [v]))

    for v in A.derived_algebra().complement_basis():
        add(v, None)
    while span.dim < n:
        grew = True
        while grew and span.dim < n:
            grew = False
            for i in range(len(vecs)):
                for j in range(i, len(vecs)):
                    w = A.multiply(vecs[i], vecs[j])
                    if not span.contains(w):
                        add(w, (i, j))
                        grew = True
        if span.dim < n:
            # no new products: extend by a complement vector (non-nilpotent case)
            add(span.complement_basis()[0], None)
    return vecs, kinds


class _Search:
    def __init__(self, A: Algebra, B: Algebra, node_cap):
        self.A, self.B = A, B
        self.F = A.field
        self.n = A.dim
        self.node_cap = node_cap
        self.nodes = 0
        vecs, kinds = adapted_basis(A)
        self.P = Matrix.from_columns(self.F, vecs, self.n)
        self.kinds = kinds
        Aa = A.transform(self.P)
        self.struct = Aa.table
        inv_a = _Invariants(A)
        self.want = [inv_a.of(v) for v in vecs]
        self.inv_b = _Invariants(B)
        self.cands = _vector_table(B)
        # pair (a, b) is checkable once every index it touches has an image
        self.checks = [[] for _ in range(self.n)]
        for a in range(self.n):
            for b in range(a, self.n):
                supp = [k for k, c in enumerate(self.struct[a][b]) if c != 0]
                level = max([a, b] + supp)
                self.checks[level].append((a, b))

    def _combo(self, coeffs, images):
        F = self.F
        out = [F.zero] * self.n
        for c, v in zip(coeffs, images):
            if c != 0:
                out = [F.add(x, F.mul(c, y)) for x, y in zip(out, v)]
        return tuple(out)

    def _consistent(self, k, images):
        B = self.B
        for a, b in self.checks[k]:
            if B.multiply(images[a], images[b]) != self._combo(self.struct[a][b], images):
                return False
        return True

    def run(self, first_only):
        found = []
        images = []
        spans = [Subspace.zero(self.F, self.n)]

        def rec(k):
            if k == self.n:
                found.append(tuple(images))
                return first_only
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise CapExceeded(f"search exceeded {self.node_cap} nodes", partial=list(found))
            kind = self.kinds[k]
            if kind is None:
                pool = self.cands.get(self.want[k], ())
            else:
                w = self.B.multiply(images[kind[0]], images[kind[1]])
                pool = (w,) if self.inv_b.of(w) == self.want[k] else ()
            for v in pool:
                if spans[-1].contains(v):
                    continue
                images.append(v)
                if self._consistent(k, images):
                    spans.append(spans[-1].sum(Subspace.span(self.F, self.n, [v])))
                    if rec(k + 1):
                        return True
                    spans.pop()
                images.pop()
            return False

        rec(0)
        Pinv = self.P.inverse()
        return [Matrix.from_columns(self.F, imgs, self.n) @ Pinv for imgs in found]


# -- public API ------------------------------------------------------------


@dataclass
class IsoVerdict:
    status: str  # "yes", "no" or "unknown"
    matrix: Matrix | None = None
    witness: str | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def isomorphic(A: Algebra, B: Algebra, node_cap: int = DEFAULT_NODE_CAP) -> IsoVerdict:
    if A.field != B.field:
        raise DimensionMismatch("isomorphism test needs a common field")
    if A.dim != B.dim:
        return IsoVerdict("no", witness="dim", reason="invariant")
    if A.same_structure(B):
        return IsoVerdict("yes", Matrix.identity(A.field, A.dim))
    fa, fb = fingerprint(A), fingerprint(B)
    bad = fa.diff(fb)
    if bad is not None:
        return IsoVerdict("no", witness=bad, reason="invariant")
    if A.field.modulus is None:
        return IsoVerdict("unknown", reason="fingerprints agree over Q")
    if A.field.modulus ** A.dim > VECTOR_TABLE_CAP:
        return IsoVerdict("unknown", reason="vector table beyond cap")
    try:
        found = _Search(A, B, node_cap).run(first_only=True)
    except CapExceeded:
        return IsoVerdict("unknown", reason="node cap reached")
    if not found:
        return IsoVerdict("no", reason="exhausted")
    T = found[0]
    assert A.is_homomorphism_to(T, B) and T.is_invertible()
    return IsoVerdict("yes", T)


@dataclass
class AutGroup:
    algebra: Algebra
    elements: list

    @property
    def order(self):
        return len(self.elements)

    def closure_defects(self, limit=None):
        """Products of pairs of elements that fall outside the list."""
        members = set(self.elements)
        els = self.elements if limit is None else self.elements[:limit]
        return [(g, h) for g in els for h in els if g @ h not in members]


def automorphisms(A: Algebra, node_cap: int = DEFAULT_NODE_CAP) -> AutGroup:
    F = A.field
    if F.modulus is None:
        raise CapExceeded("automorphisms are enumerated over prime fields only", partial=None)
    if F.modulus ** A.dim > VECTOR_TABLE_CAP:
        raise CapExceeded("vector table beyond cap", partial=None)
    if A.dim == 0:
        return AutGroup(A, [Matrix.identity(F, 0)])
    els = _Search(A, A, node_cap).run(first_only=False)
    return AutGroup(A, els)


# -- symmetric forms -------------------------------------------------------


def _gram(theta, F):
    if isinstance(theta, Matrix):
        return theta
    if hasattr(theta, "gram"):
        return theta.gram()
    return Matrix(F, theta)


def congruent_image(theta: Matrix, psi: Matrix, s0=1):
    """The form (a, b) -> s0^-1 theta(psi^-1 a, psi^-1 b); returned as psi^-T theta psi^-1 / s0."""
    F = theta.field
    q = psi.inverse()
    return (q.T @ theta @ q).scale(F.inv(F(s0)))


@dataclass
class HomothetyVerdict:
    status: str
    s0: object = None
    psi: Matrix | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def homothetic(theta, theta_p, field) -> HomothetyVerdict:
    """Search (s0, psi) with s0 theta(a, b) = theta'(psi a, psi b)."""
    F = field
    T, Tp = _gram(theta, F), _gram(theta_p, F)
    n = T.nrows
    if Tp.shape != T.shape:
        raise DimensionMismatch("forms of different dimensions")
    if T.rank() != Tp.rank():
        return HomothetyVerdict("no", reason="rank")
    if F.modulus is None:
        for i in range(n):
            for j in range(n):
                if T.rows[i][j] != 0:
                    s0 = F.div(Tp.rows[i][j], T.rows[i][j])
                    if s0 != 0 and T.scale(s0) == Tp:
                        return HomothetyVerdict("yes", s0, Matrix.identity(F, n))
                    return HomothetyVerdict("unknown", reason="only scalar multiples are tested over Q")
        return HomothetyVerdict("yes", F.one, Matrix.identity(F, n))
    vectors = [v for v in product(F.elements(), repeat=n) if any(v)]
    for s0 in F.nonzero_elements():
        target = T.scale(s0)
        cols = []

        def rec(j, span):
            if j == n:
                return True
            for v in vectors:
                if span.contains(v):
                    continue
                tv = Tp.apply(v)
                if F.dot(v, tv) != target.rows[j][j]:
                    continue
                if any(F.dot(cols[i], tv) != target.rows[i][j] for i in range(j)):
                    continue
                cols.append(v)
                if rec(j + 1, span.sum(Subspace.span(F, n, [v]))):
                    return True
                cols.pop()
            return False

        if rec(0, Subspace.zero(F, n)):
            psi = Matrix.from_columns(F, cols, n)
            assert psi.T @ Tp @ psi == target
            return HomothetyVerdict("yes", s0, psi)
    return HomothetyVerdict("no", reason="exhausted")


def symmetric_matrices(F, n):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    for vals in product(F.elements(), repeat=len(pairs)):
        rows = [[F.zero] * n for _ in range(n)]
        for (i, j), c in zip(pairs, vals):
            rows[i][j] = c
            rows[j][i] = c
        yield Matrix._raw(F, rows, n)


def gl_generators(F, n):
    """Diagonal scalings by a generator of F_p^* and elementary transvections."""
    p = F.modulus
    g = next(x for x in range(1, p) if p == 2 or all(pow(x, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1)))
    gens = []
    for i in range(n):
        rows = [list(F.unit(n, k)) for k in range(n)]
        rows[i][i] = g
        gens.append(Matrix._raw(F, [tuple(r) for r in rows], n))
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [list(F.unit(n, k)) for k in range(n)]
                rows[i][j] = 1
                gens.append(Matrix._raw(F, [tuple(r) for r in rows], n))
    return g, gens


def _prime_factors(m):
    out, d = set(), 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def homothety_census(n: int, F) -> list:
    """Orbits of symmetric n x n forms over F_p under scaling and congruence.

    Returns one representative per orbit (the first in enumeration order).
    """
    g, gens = gl_generators(F, n)
    forms = list(symmetric_matrices(F, n))
    index = {f: k for k, f in enumerate(forms)}
    parent = list(range(len(forms)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, f in enumerate(forms):
        images = [P.T @ f @ P for P in gens] + [f.scale(g)]
        for h in images:
            a, b = find(k), find(index[h])
            if a != b:
                parent[max(a, b)] = min(a, b)
    reps = sorted({find(k) for k in range(len(forms))})
    return [forms[k] for k in reps]
