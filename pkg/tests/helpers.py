"""Independent brute-force oracles used by the tests.

Nothing here calls the library's linear algebra or search code: ranks are
computed by a separate elimination over F_p and groups are enumerated
directly from GL_n(F_p).
"""

from itertools import product


def rank_mod_p(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def mat_mul(a, b, p):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) % p for j in range(len(b[0]))] for i in range(len(a))]


_GL = {}


def gl(n, p):
    """Every invertible n x n matrix over F_p as a tuple of rows (cached)."""
    if (n, p) not in _GL:
        out = []
        for entries in product(range(p), repeat=n * n):
            m = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
            if rank_mod_p(m, p) == n:
                out.append(tuple(tuple(r) for r in m))
        _GL[(n, p)] = out
    return _GL[(n, p)]


def table_of(A):
    return [[list(v) for v in row] for row in A.table]


def mult(table, u, v, p):
    n = len(u)
    out = [0] * n
    for i in range(n):
        if u[i]:
            for j in range(n):
                if v[j]:
                    c = u[i] * v[j]
                    for k, t in enumerate(table[i][j]):
                        out[k] += c * t
    return [x % p for x in out]


def is_hom(T, ta, tb, p):
    """T given by rows; column i is the image of e_i."""
    n = len(T)
    cols = [[T[r][i] for r in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = [sum(T[r][k] * ta[i][j][k] for k in range(n)) % p for r in range(n)]
            if lhs != mult(tb, cols[i], cols[j], p):
                return False
    return True


def brute_aut_order(A):
    p = A.field.modulus
    t = table_of(A)
    return sum(1 for T in gl(A.dim, p) if is_hom(T, t, t, p))


def brute_stabilizer_order(A, k):
    """Automorphisms of A mapping e_k into span{e_k}."""
    p = A.field.modulus
    t = table_of(A)
    n = A.dim
    return sum(
        1 for T in gl(n, p)
        if all(T[r][k] == 0 for r in range(n) if r != k) and is_hom(T, t, t, p)
    )


def brute_isomorphic(A, B):
    p = A.field.modulus
    ta, tb = table_of(A), table_of(B)
    return any(is_hom(T, ta, tb, p) for T in gl(A.dim, p))


def homothety_orbits(n, p):
    """Orbits of symmetric n x n matrices under theta -> s0 P^T theta P."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    forms = []
    for vals in product(range(p), repeat=len(pairs)):
        m = [[0] * n for _ in range(n)]
        for (i, j), c in zip(pairs, vals):
            m[i][j] = m[j][i] = c
        forms.append(tuple(tuple(r) for r in m))
    group = list(gl(n, p))
    seen, orbits = set(), []
    for f in forms:
        if f in seen:
            continue
        orbit = set()
        for P in group:
            Pt = [list(r) for r in zip(*P)]
            g = mat_mul(mat_mul(Pt, [list(r) for r in f], p), [list(r) for r in P], p)
            for s in range(1, p):
                orbit.add(tuple(tuple(x * s % p for x in r) for r in g))
        seen |= orbit
        orbits.append(f)
    return orbits


def codim1_orbits(m, p):
    """Pairs (f, v0) with f^2 = 0, f v0 = 0, modulo v0 ~ v0 + 2 f(xi)."""
    total = 0
    vectors = list(product(range(p), repeat=m))
    for entries in product(range(p), repeat=m * m):
        f = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
        if any(any(r) for r in mat_mul(f, f, p)):
            continue

        def ap(v):
            return tuple(sum(f[i][k] * v[k] for k in range(m)) % p for i in range(m))

        kernel = [v for v in vectors if not any(ap(v))]
        seen = set()
        for v0 in kernel:
            if v0 in seen:
                continue
            total += 1
            for xi in vectors:
                fx = ap(xi)
                seen.add(tuple((a + 2 * b) % p for a, b in zip(v0, fx)))
    return total


def commutative_tables(n, p):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    for values in product(product(range(p), repeat=n), repeat=len(pairs)):
        t = [[None] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            t[i][j] = list(v)
            t[j][i] = list(v)
        yield t


def jacobi_ok(t, p):
    n = len(t)
    e = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = [0] * n
                for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
                    s = [x + y for x, y in zip(s, mult(t, e[a], t[b][c], p))]
                if any(x % p for x in s):
                    return False
    return True


# -- random crossed systems over F_3 ----------------------------------------

from jjalg import GF  # noqa: E402
from jjalg.crossed import CrossedData, crossed_product_unchecked  # noqa: E402
from jjalg.linalg import Matrix  # noqa: E402
from jjalg.modrep import ActionData  # noqa: E402

_F3 = GF(3)


def solve_mod_p(rows, rhs, p, nvars):
    """Particular solution and null space basis of rows x = rhs over F_p."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] % p for row in aug[r:]):
        return None, []
    part = [0] * nvars
    for i, c in enumerate(piv_cols):
        part[c] = aug[i][-1]
    null = []
    for c in range(nvars):
        if c in piv_cols:
            continue
        v = [0] * nvars
        v[c] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = -aug[i][c] % p
        null.append(v)
    return part, null


def jacobi_vector(E):
    n = E.dim
    out = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                out.extend(int(x) for x in E.jacobi_residual(i, j, l))
    return out


def random_crossed_system(rng, jj1, jj2):
    """A valid crossed system over F_3: random action, cocycle solved for."""
    p = 3
    n, m = rng.choice((1, 2)), rng.choice((1, 2))
    A = rng.choice(jj1 if n == 1 else jj2)
    V = rng.choice(jj1 if m == 1 else jj2)
    V = V.__class__(_F3, m, V.table, [f"x{k + 1}" for k in range(m)])
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    nvars = len(pairs) * m
    for attempt in range(40):
        if attempt == 39:
            rho = [Matrix.zeros(_F3, m, m) for _ in range(n)]
        else:
            rho = [Matrix(_F3, [[rng.choice((0, 0, 1, 2)) for _ in range(m)] for _ in range(m)]) for _ in range(n)]
        action = ActionData(A, m, tuple(rho))

        def build(vec):
            theta = {}
            for t, (i, j) in enumerate(pairs):
                theta[(i, j)] = tuple(vec[t * m:(t + 1) * m])
            return CrossedData.build(A, m, rho, theta, V)

        # the Jacobi defect of the crossed product is affine in theta
        base = jacobi_vector(crossed_product_unchecked(build([0] * nvars)))
        cols = []
        for k in range(nvars):
            e = [0] * nvars
            e[k] = 1
            col = jacobi_vector(crossed_product_unchecked(build(e)))
            cols.append([(a - b) % p for a, b in zip(col, base)])
        rows = [[cols[k][r] for k in range(nvars)] for r in range(len(base))]
        part, null = solve_mod_p(rows, [-b % p for b in base], p, nvars)
        if part is None:
            continue
        vec = list(part)
        for v in null:
            c = rng.randrange(p)
            vec = [(a + c * b) % p for a, b in zip(vec, v)]
        D = build(vec)
        assert action.rho == D.action.rho
        return D
    raise AssertionError("unreachable: the trivial action always admits theta = 0")


def coflag_h2_oracle(A, lam):
    """dim Z^2 - dim B^2 for the action a |> x = lam(a) x on k, by direct elimination.

    Unknowns are theta(e_i, e_j) for i <= j; every triple (i, j, l) is used.
    """
    p = A.field.modulus
    n = A.dim
    t = table_of(A)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {pr: k for k, pr in enumerate(pairs)}

    def slot(i, j):
        return pos[(min(i, j), max(i, j))]

    rows = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [0] * len(pairs)
                for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
                    for k, coef in enumerate(t[b][c]):
                        row[slot(a, k)] += coef
                    row[slot(b, c)] += lam[a]
                rows.append([x % p for x in row])
    z_dim = len(pairs) - rank_mod_p(rows, p)
    # delta r(e_i, e_j) = lam_i r_j + lam_j r_i - r(e_i e_j), one column per r_k
    brows = []
    for i, j in pairs:
        row = [0] * n
        row[j] += lam[i]
        row[i] += lam[j]
        for k, coef in enumerate(t[i][j]):
            row[k] -= coef
        brows.append([x % p for x in row])
    b_dim = rank_mod_p(brows, p) if brows else 0
    return z_dim - b_dim
