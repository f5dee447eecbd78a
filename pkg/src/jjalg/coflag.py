"""Co-flag data and the algebras A_(lambda, theta).

A co-flag datum of A is a functional lambda with lambda(ab) = -2 lambda(a)
lambda(b) and a symmetric form theta satisfying the lambda-cocycle identity.
The algebra A_(lambda, theta) has basis (A basis, f) and

    e_i * e_j = e_i e_j + theta(e_i, e_j) f,   e_i * f = lambda(e_i) f,   f * f = 0.

Automorphisms of A_(lambda, theta) correspond to triples (s0, psi, r) with
psi in Aut(A); composition is

    (s0, psi, r) * (s0', psi', r') = (s0 s0', psi psi', r psi' + s0 r').
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import Algebra
from .cohomology import (
    coflag_cohomology,
    coflag_lambdas,
    lambda_ok,
    map_to_vec,
    sym_pairs,
)
from .crossed import BilinearVMap
from .errors import DimensionMismatch, InvalidCoflagDatum
from .linalg import Matrix, solve_affine


def _new_name(A: Algebra):
    for nm in ("y", "f", "w"):
        if nm not in A.names:
            return nm
    k = 0
    while f"f{k}" in A.names:
        k += 1
    return f"f{k}"


class CoflagDatum:
    __slots__ = ("base", "lam", "theta")

    def __init__(self, base: Algebra, lam, theta):
        F = base.field
        n = base.dim
        self.base = base
        self.lam = F.vec(lam)
        if len(self.lam) != n:
            raise DimensionMismatch("lambda needs one value per basis vector")
        if isinstance(theta, BilinearVMap):
            self.theta = theta
        elif isinstance(theta, dict):
            self.theta = BilinearVMap.symmetric(F, n, 1, {k: (v,) if not isinstance(v, tuple) else v for k, v in theta.items()})
        else:
            self.theta = BilinearVMap.from_form(F, theta)
        if self.theta.domain_dim != n or self.theta.codomain_dim != 1:
            raise DimensionMismatch("theta must be a k-valued form on A")

    @property
    def field(self):
        return self.base.field

    def gram(self) -> Matrix:
        return self.theta.gram()

    def th(self, i, j):
        return self.theta.table[i][j][0]

    def defects(self):
        """Failures of symmetry, the lambda identity and the cocycle identity."""
        A = self.base
        F = A.field
        n = A.dim
        out = []
        if not self.theta.is_symmetric():
            out.append("theta not symmetric")
        if not lambda_ok(A, self.lam):
            out.append("lambda(ab) != -2 lambda(a) lambda(b)")
        G = self.gram()
        lam = self.lam
        for i in range(n):
            for j in range(i, n):
                for l in range(j, n):
                    s = F.zero
                    for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
                        s = F.add(s, F.dot(G.rows[a], A.table[b][c]))
                        s = F.add(s, F.mul(lam[a], G.rows[b][c]))
                    if s != 0:
                        out.append(("cocycle", i, j, l, s))
        return out

    def is_valid(self):
        return not self.defects()

    def __eq__(self, other):
        return (
            isinstance(other, CoflagDatum)
            and self.base.same_structure(other.base)
            and self.lam == other.lam
            and self.theta == other.theta
        )

    def __hash__(self):
        return hash((self.lam, self.theta.table))

    def __repr__(self):
        return f"CoflagDatum(lam={self.lam}, theta={self.gram().rows})"


def build_coflag_algebra(d: CoflagDatum, name=None) -> Algebra:
    bad = d.defects()
    if bad:
        raise InvalidCoflagDatum(f"not a co-flag datum: {bad[0]}")
    A = d.base
    F = A.field
    n = A.dim
    N = n + 1
    table = [[None] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            table[i][j] = A.table[i][j] + (d.th(i, j),)
        v = F.zeros(n) + (d.lam[i],)
        table[i][n] = v
        table[n][i] = v
    table[n][n] = F.zeros(N)
    E = Algebra(F, N, table, list(A.names) + [name or _new_name(A)])
    assert E.is_jacobi_jordan()
    return E


@dataclass
class Verdict:
    status: str  # "yes", "no" or "unknown"
    witness: object = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def _coboundary_rows(A: Algebra, lam):
    """Row (i, j) of (delta t)(e_i, e_j) = lam_i t_j + lam_j t_i - t(e_i e_j)."""
    F = A.field
    n = A.dim
    rows = []
    for i, j in sym_pairs(n):
        row = [F.zero] * n
        row[j] = F.add(row[j], lam[i])
        row[i] = F.add(row[i], lam[j])
        for l, c in enumerate(A.table[i][j]):
            if c != 0:
                row[l] = F.sub(row[l], c)
        rows.append(tuple(row))
    return rows


def gh2_equivalent(d: CoflagDatum, dp: CoflagDatum) -> Verdict:
    """theta - theta' = delta_lambda t for some t, with lambda = lambda'."""
    if d.lam != dp.lam:
        return Verdict("no", reason="lambda differs")
    A = d.base
    F = A.field
    rhs = [F.sub(a, b) for a, b in zip(map_to_vec(d.theta), map_to_vec(dp.theta))]
    t, _ = solve_affine(F, _coboundary_rows(A, d.lam), rhs, A.dim)
    if t is None:
        return Verdict("no", reason="no linear map t")
    return Verdict("yes", witness=t)


def _apply_form(G: Matrix, psi: Matrix):
    """Gram matrix of (a, b) -> theta(psi a, psi b)."""
    return psi.T @ G @ psi


def _aut_source(A: Algebra, auts):
    if auts is not None:
        return list(auts), False
    if A.field.modulus is not None:
        from .iso import automorphisms

        return automorphisms(A).elements, True
    return [Matrix.identity(A.field, A.dim)], False


def cp_equivalent(d: CoflagDatum, dp: CoflagDatum, auts=None, exhaustive: bool | None = None) -> Verdict:
    """Search (s0, psi, r) relating two data up to plain algebra isomorphism.

    ``auts`` defaults to the full automorphism group over F_p; a user list
    counts as exhaustive only when ``exhaustive`` is set.
    """
    A = d.base
    F = A.field
    n = A.dim
    source, full = _aut_source(A, auts)
    if exhaustive is not None:
        full = exhaustive
    G, Gp = d.gram(), dp.gram()
    pairs = sym_pairs(n)
    cob = _coboundary_rows(A, d.lam)
    for psi in source:
        if psi.T.apply(dp.lam) != d.lam:
            continue
        H = _apply_form(Gp, psi)
        # unknowns (s0, r_0..r_{n-1}): theta s0 - delta_lambda r = theta'(psi, psi)
        rows = [(G.rows[i][j],) + tuple(F.neg(c) for c in cob[k]) for k, (i, j) in enumerate(pairs)]
        rhs = [H.rows[i][j] for i, j in pairs]
        part, ker = solve_affine(F, rows, rhs, n + 1)
        if part is None:
            continue
        sol = part
        if sol[0] == 0:
            for kv in ker.basis:
                if kv[0] != 0:
                    sol = tuple(F.add(a, b) for a, b in zip(part, kv))
                    break
        if sol[0] != 0:
            return Verdict("yes", witness=AutElement(sol[0], psi, tuple(sol[1:])))
    return Verdict("no" if full else "unknown", reason="exhausted" if full else "automorphism list not exhaustive")


@dataclass(frozen=True)
class AutElement:
    s0: object
    psi: Matrix
    r: tuple

    def as_matrix(self) -> Matrix:
        """The automorphism (a, x) -> (psi a, r(a) + s0 x) of A_(lambda, theta)."""
        F = self.psi.field
        n = self.psi.nrows
        rows = [row + (F.zero,) for row in self.psi.rows]
        rows.append(tuple(self.r) + (self.s0,))
        return Matrix._raw(F, rows, n + 1)


def compose(g: AutElement, h: AutElement) -> AutElement:
    F = g.psi.field
    r = tuple(F.add(a, F.mul(g.s0, b)) for a, b in zip(h.psi.T.apply(g.r), h.r))
    return AutElement(F.mul(g.s0, h.s0), g.psi @ h.psi, r)


def identity_element(A: Algebra) -> AutElement:
    F = A.field
    return AutElement(F.one, Matrix.identity(F, A.dim), F.zeros(A.dim))


def inverse(g: AutElement) -> AutElement:
    F = g.psi.field
    si = F.inv(g.s0)
    q = g.psi.inverse()
    r = tuple(F.neg(F.mul(si, c)) for c in q.T.apply(g.r))
    return AutElement(si, q, r)


@dataclass
class CoflagAutGroup:
    datum: CoflagDatum
    elements: list
    exhaustive: bool

    @property
    def order(self):
        return len(self.elements)


def automorphism_group(d: CoflagDatum, auts=None) -> CoflagAutGroup:
    """All triples (s0, psi, r) preserving the datum."""
    A = d.base
    F = A.field
    n = A.dim
    source, full = _aut_source(A, auts)
    G = d.gram()
    pairs = sym_pairs(n)
    cob = _coboundary_rows(A, d.lam)
    neg_cob = [tuple(F.neg(c) for c in row) for row in cob]
    out = []
    s0s = list(F.nonzero_elements()) if F.modulus is not None else [F.one]
    for psi in source:
        if psi.T.apply(d.lam) != d.lam:
            continue
        H = _apply_form(G, psi)
        for s0 in s0s:
            # -delta_lambda r = theta(psi, psi) - s0 theta
            rhs = [F.sub(H.rows[i][j], F.mul(s0, G.rows[i][j])) for i, j in pairs]
            part, ker = solve_affine(F, neg_cob, rhs, n)
            if part is None:
                continue
            if F.modulus is None:
                out.append(AutElement(s0, psi, part))
                continue
            for coeffs in product(F.elements(), repeat=ker.dim):
                r = tuple(F.add(a, b) for a, b in zip(part, ker.combine(coeffs)))
                out.append(AutElement(s0, psi, r))
    return CoflagAutGroup(d, out, full)


def check_group_axioms(elements, assoc_limit: int = 60, samples: int = 2000, seed: int = 0) -> dict:
    """Closure, identity, inverses and associativity of the star law.

    Associativity runs over all triples when the order is at most
    ``assoc_limit`` and over seeded random triples otherwise.
    """
    members = set(elements)
    fails = {"closure": 0, "identity": 0, "inverse": 0, "associativity": 0}
    if not elements:
        fails["identity"] = 1
        return fails
    e = identity_element_like(elements[0])
    if e not in members:
        fails["identity"] = 1
    for g in elements:
        if compose(g, e) != g or compose(e, g) != g:
            fails["identity"] += 1
        gi = inverse(g)
        if gi not in members or compose(g, gi) != e or compose(gi, g) != e:
            fails["inverse"] += 1
    for g in elements:
        for h in elements:
            if compose(g, h) not in members:
                fails["closure"] += 1
    if len(elements) <= assoc_limit:
        triples = product(elements, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(samples))
    for g, h, k in triples:
        if compose(compose(g, h), k) != compose(g, compose(h, k)):
            fails["associativity"] += 1
    return fails


def identity_element_like(g: AutElement) -> AutElement:
    F = g.psi.field
    n = g.psi.nrows
    return AutElement(F.one, Matrix.identity(F, n), F.zeros(n))


def semidirect_classify(A: Algebra, lam, lam_p, auts=None) -> Verdict:
    """A_lambda ~ A_lambda' iff lambda = lambda' o psi for an automorphism psi."""
    F = A.field
    lam, lam_p = F.vec(lam), F.vec(lam_p)
    if lam == lam_p:
        return Verdict("yes", witness=Matrix.identity(F, A.dim))
    source, full = _aut_source(A, auts)
    for psi in source:
        if psi.T.apply(lam_p) == lam:
            return Verdict("yes", witness=psi)
    return Verdict("no" if full else "unknown")


@dataclass
class CensusReport:
    representatives: list  # CoflagDatum per class
    gh2_classes: int

    @property
    def count(self):
        return len(self.representatives)


def coflag_census(A: Algebra, allow_small_char: bool = False, auts=None) -> CensusReport:
    """Classes of co-flag data under plain isomorphism of A_(lambda, theta), over F_p.

    Works on cohomology classes (theta modulo delta_lambda coboundaries) and
    merges them along every (s0, psi).
    """
    F = A.field
    n = A.dim
    lams = coflag_lambdas(A, allow_small_char)
    source, _ = _aut_source(A, auts)
    spaces = {lam: coflag_cohomology(A, lam) for lam in lams}
    nodes = []
    for lam, cs in spaces.items():
        seen = set()
        for z in cs.Z2.elements():
            rep = cs.class_representative(z)
            if rep not in seen:
                seen.add(rep)
                nodes.append((lam, rep))
    index = {nd: k for k, nd in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = sym_pairs(n)

    def gram_of(vec):
        rows = [[F.zero] * n for _ in range(n)]
        for (i, j), c in zip(pairs, vec):
            rows[i][j] = c
            rows[j][i] = c
        return Matrix._raw(F, rows, n)

    inverses = [(psi, psi.inverse()) for psi in source]
    for k, (lam, rep) in enumerate(nodes):
        G = gram_of(rep)
        for psi, q in inverses:
            lam2 = q.T.apply(lam)
            H = q.T @ G @ q
            cs2 = spaces[lam2]
            for s0 in F.nonzero_elements():
                vec = tuple(F.mul(s0, H.rows[i][j]) for i, j in pairs)
                other = index[(lam2, cs2.class_representative(vec))]
                a, b = find(k), find(other)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    roots = sorted({find(k) for k in range(len(nodes))})
    reps = [CoflagDatum(A, nodes[k][0], gram_of(nodes[k][1])) for k in roots]
    return CensusReport(reps, len(nodes))
