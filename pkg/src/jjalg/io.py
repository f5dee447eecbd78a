"""Text formats.

``.jja`` describes an algebra::

    # jja format 1
    field Fp 5
    dim 3
    basis e f z
    mul e f = z
    mul f e = z

Unlisted products are zero and no commutative closure is implied unless
``symmetrize`` is requested.  Terms are ``<scalar>*<name>`` or ``<name>``
joined by ``+``.

``.jjx`` describes crossed data over a base algebra file::

    # jjx format 1
    base h3.jja
    fiber 1
    act e = 0
    theta e f = 1
    vmul x1 x1 = 0

``act`` gives the matrix of e |> - row by row (rows separated by ``;``),
``theta`` and ``vmul`` give fiber vectors and are installed symmetrically.
Fiber basis vectors are called x1..xm.
"""

from __future__ import annotations

import os

from .algebra import Algebra, default_names
from .crossed import BilinearVMap, CrossedData
from .errors import NonPrimeModulus, ParseError, UnknownBasisName
from .field import parse_field
from .linalg import Matrix
from .modrep import ActionData

JJA_HEADER = "# jja format 1"
JJX_HEADER = "# jjx format 1"


def _strip(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def _col(raw, token):
    k = raw.find(token)
    return k + 1 if k >= 0 else 1


def _parse_scalar(F, text, lineno, raw):
    try:
        return F.parse(text)
    except ValueError:
        raise ParseError(f"bad scalar {text!r}", lineno, _col(raw, text)) from None


def _parse_terms(F, rhs, index, lineno, raw):
    dim = len(index)
    vec = [F.zero] * dim
    rhs = rhs.strip()
    if not rhs:
        raise ParseError("empty right-hand side", lineno, len(raw) + 1)
    if rhs == "0":
        return tuple(vec)
    for term in rhs.split("+"):
        term = term.strip()
        if not term:
            raise ParseError("empty term", lineno, _col(raw, "+"))
        if "*" in term:
            coef_text, name = (s.strip() for s in term.split("*", 1))
            coef = _parse_scalar(F, coef_text, lineno, raw)
        else:
            coef, name = F.one, term
        if name not in index:
            raise UnknownBasisName(f"unknown basis name {name!r}", lineno, _col(raw, name))
        k = index[name]
        vec[k] = F.add(vec[k], coef)
    return tuple(vec)


def parse_jja(text: str, symmetrize: bool = False) -> Algebra:
    F = None
    dim = None
    names = None
    products = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw).strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "field":
            if F is not None:
                raise ParseError("field given twice", lineno, 1)
            try:
                F = parse_field(rest)
            except NonPrimeModulus:
                raise
            except ValueError:
                raise ParseError(f"unknown field {rest!r}", lineno, _col(raw, rest)) from None
        elif word == "dim":
            try:
                dim = int(rest)
            except ValueError:
                raise ParseError(f"bad dimension {rest!r}", lineno, _col(raw, rest)) from None
            if dim < 0:
                raise ParseError("negative dimension", lineno, _col(raw, rest))
        elif word == "basis":
            if dim is None:
                raise ParseError("basis before dim", lineno, 1)
            names = rest.split()
            if len(names) != dim or len(set(names)) != dim:
                raise ParseError(f"basis needs {dim} distinct names", lineno, _col(raw, rest))
        elif word == "mul":
            if F is None or dim is None:
                raise ParseError("mul before field and dim", lineno, 1)
            if names is None:
                names = list(default_names(dim))
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise ParseError("expected '='", lineno, len(raw) + 1)
            parts = lhs.split()
            if len(parts) != 2:
                raise ParseError("mul needs two basis names", lineno, _col(raw, lhs.strip() or "mul"))
            index = {nm: k for k, nm in enumerate(names)}
            for nm in parts:
                if nm not in index:
                    raise UnknownBasisName(f"unknown basis name {nm!r}", lineno, _col(raw, nm))
            key = (index[parts[0]], index[parts[1]])
            if key in products:
                raise ParseError(f"product {parts[0]} {parts[1]} given twice", lineno, _col(raw, parts[0]))
            products[key] = _parse_terms(F, rhs, index, lineno, raw)
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, _col(raw, word))
    if F is None:
        raise ParseError("missing field line", None, None)
    if dim is None:
        raise ParseError("missing dim line", None, None)
    if names is None:
        names = list(default_names(dim))
    if symmetrize:
        for (i, j), v in list(products.items()):
            products.setdefault((j, i), v)
    return Algebra.from_products(F, dim, products, names)


def format_vector(A: Algebra, v) -> str:
    F = A.field
    terms = []
    for c, nm in zip(v, A.names):
        if c != 0:
            terms.append(nm if c == 1 else f"{F.format(c)}*{nm}")
    return " + ".join(terms) if terms else "0"


def print_jja(A: Algebra) -> str:
    lines = [JJA_HEADER, f"field {A.field.header()}", f"dim {A.dim}"]
    if A.dim and tuple(A.names) != default_names(A.dim):
        lines.append("basis " + " ".join(A.names))
    for i in range(A.dim):
        for j in range(A.dim):
            v = A.table[i][j]
            if any(v):
                lines.append(f"mul {A.names[i]} {A.names[j]} = {format_vector(A, v)}")
    return "\n".join(lines) + "\n"


def read_jja(path, symmetrize=False) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse_jja(fh.read(), symmetrize)


def write_jja(path, A: Algebra):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(print_jja(A))


# -- crossed data ----------------------------------------------------------


def parse_jjx(text: str, base_dir: str = ".", base: Algebra | None = None) -> CrossedData:
    A = base
    m = None
    acts, theta, vmul = {}, {}, {}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw).strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "base":
            if A is None:
                path = rest if os.path.isabs(rest) else os.path.join(base_dir, rest)
                try:
                    A = read_jja(path, symmetrize=False)
                except OSError as exc:
                    raise ParseError(f"cannot read base {rest!r}: {exc}", lineno, _col(raw, rest)) from None
        elif word == "fiber":
            try:
                m = int(rest)
            except ValueError:
                raise ParseError(f"bad fiber dimension {rest!r}", lineno, _col(raw, rest)) from None
        elif word in ("act", "theta", "vmul"):
            pending.append((word, rest, lineno, raw))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, _col(raw, word))
    if A is None:
        raise ParseError("missing base line", None, None)
    if m is None:
        raise ParseError("missing fiber line", None, None)
    F = A.field
    aidx = {nm: k for k, nm in enumerate(A.names)}
    vidx = {f"x{k + 1}": k for k in range(m)}

    def vec(text, lineno, raw):
        parts = text.split()
        if len(parts) != m:
            raise ParseError(f"expected {m} fiber coordinates", lineno, _col(raw, text))
        return tuple(_parse_scalar(F, p, lineno, raw) for p in parts)

    for word, rest, lineno, raw in pending:
        lhs, eq, rhs = rest.partition("=")
        if not eq:
            raise ParseError("expected '='", lineno, len(raw) + 1)
        keys = lhs.split()
        idx = vidx if word == "vmul" else aidx
        for nm in keys:
            if nm not in idx:
                raise UnknownBasisName(f"unknown name {nm!r}", lineno, _col(raw, nm))
        if word == "act":
            if len(keys) != 1:
                raise ParseError("act needs one base name", lineno, 1)
            rows = [r.split() for r in rhs.split(";")]
            if len(rows) != m or any(len(r) != m for r in rows):
                raise ParseError(f"act needs a {m}x{m} matrix", lineno, _col(raw, rhs.strip()))
            acts[aidx[keys[0]]] = Matrix(F, [[_parse_scalar(F, x, lineno, raw) for x in r] for r in rows])
        else:
            if len(keys) != 2:
                raise ParseError(f"{word} needs two names", lineno, 1)
            target = theta if word == "theta" else vmul
            i, j = idx[keys[0]], idx[keys[1]]
            v = vec(rhs, lineno, raw)
            target[(i, j)] = v
            target[(j, i)] = v
    rho = tuple(acts.get(i, Matrix.zeros(F, m, m)) for i in range(A.dim))
    fiber = Algebra.from_products(F, m, vmul, [f"x{k + 1}" for k in range(m)])
    return CrossedData(A, m, ActionData(A, m, rho), BilinearVMap(F, A.dim, m, theta), fiber)


def print_jjx(D: CrossedData, base_ref: str) -> str:
    A = D.base
    F = A.field
    m = D.fiber_dim
    lines = [JJX_HEADER, f"base {base_ref}", f"fiber {m}"]
    for i, r in enumerate(D.action.rho):
        if not r.is_zero():
            body = " ; ".join(" ".join(F.format(x) for x in row) for row in r.rows)
            lines.append(f"act {A.names[i]} = {body}")
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = D.cocycle(i, j)
            if any(v):
                lines.append(f"theta {A.names[i]} {A.names[j]} = " + " ".join(F.format(x) for x in v))
    for k in range(m):
        for l in range(k, m):
            v = D.fiber_mult.table[k][l]
            if any(v):
                lines.append(f"vmul x{k + 1} x{l + 1} = " + " ".join(F.format(x) for x in v))
    return "\n".join(lines) + "\n"


def parse_vector(A: Algebra, text: str):
    """Parse ``2*y + z`` against the basis names of A."""
    index = {nm: k for k, nm in enumerate(A.names)}
    return _parse_terms(A.field, text, index, 1, text)
