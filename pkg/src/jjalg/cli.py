"""Command line entry point ``jja``.

Every subcommand prints ``key=value`` lines.  With ``--format
json-like-lines`` the values are JSON encoded (quoted strings, arrays,
true/false/null) so each line can be split on the first ``=`` and decoded.

Exit codes: 0 for a positive verdict or success, 1 for a negative verdict,
2 for an undetermined verdict (and usage errors), 3 for input or library
errors.
"""

from __future__ import annotations

import argparse
import ast
import json
import os
import sys
from fractions import Fraction

from . import families
from .algebra import analyze
from .coflag import CoflagDatum, build_coflag_algebra, coflag_census
from .cohomology import (
    abelian_cocycles,
    codim1_classes,
    coflag_cohomology,
    coflag_lambdas,
    global_h2_abelian,
)
from .corpus import jj_algebras
from .crossed import crossed_product_unchecked, validate_crossed_system
from .errors import CapExceeded, JJError, ParseError
from .field import parse_field
from .frobenius import is_frobenius
from .io import parse_jjx, parse_vector, print_jja, read_jja, write_jja
from .iso import automorphisms, homothety_census, isomorphic
from .modrep import ActionData
from .yangbaxter import build_R, check_qybe


class Report:
    def __init__(self, fmt, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def _plain(self, v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if v is None:
            return "none"
        if isinstance(v, (tuple, list)):
            return "(" + ",".join(self._plain(x) for x in v) + ")"
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(v)

    def _json(self, v):
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if isinstance(v, (tuple, list)):
            return [self._json(x) for x in v]
        return v

    def put(self, key, value):
        if self.fmt == "json-like-lines":
            text = json.dumps(self._json(value))
        else:
            text = self._plain(value)
        print(f"{key}={text}", file=self.out)


def _seed(args):
    env = os.environ.get("JJ_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _load(args, path=None):
    return read_jja(path or args.file, symmetrize=getattr(args, "symmetrize", False))


def _matrix_text(M):
    F = M.field
    return ";".join(" ".join(F.format(x) for x in row) for row in M.rows)


def cmd_check(args, rep):
    A = _load(args)
    commutative = A.is_commutative()
    defects = A.jacobi_defects()
    jj = commutative and not defects
    rep.put("commutative", commutative)
    rep.put("jacobi_defects", len(defects))
    for i, j, l, r in defects[:5]:
        rep.put("jacobi_witness", f"{A.names[i]},{A.names[j]},{A.names[l]}")
    rep.put("jacobi_jordan", jj)
    rep.put("leibniz", A.is_leibniz())
    if commutative:
        rep.put("jordan", A.is_jordan())
    return 0 if jj else 1


def cmd_analyze(args, rep):
    A = _load(args)
    r = analyze(A)
    rep.put("dim", A.dim)
    rep.put("commutative", r.commutative)
    rep.put("jacobi_jordan", r.jacobi_jordan)
    rep.put("leibniz", r.leibniz)
    rep.put("jordan", r.jordan)
    rep.put("derived_series_dims", r.derived_series_dims)
    rep.put("lower_central_dims", r.lower_central_dims)
    rep.put("nilpotency_step", r.nilpotency_step)
    rep.put("solvability_step", r.solvability_step)
    rep.put("center_dim", r.center.dim)
    rep.put("center_basis", [A.format_vector(v) for v in r.center.basis])
    rep.put("metabelian", r.metabelian)
    return 0


def cmd_frobenius(args, rep):
    A = _load(args)
    v = is_frobenius(A, trials=args.trials, seed=_seed(args), exhaustive_cap=args.exhaustive_cap)
    rep.put("status", v.status)
    rep.put("reason", v.reason)
    if v.certificate is not None:
        rep.put("certificate", _matrix_text(v.certificate))
    if v.witness is not None:
        rep.put("witness", A.format_vector(v.witness))
    return {"frobenius": 0, "not_frobenius": 1}.get(v.status, 2)


def cmd_qybe(args, rep):
    A = _load(args)
    if args.central is None:
        Z = A.center()
        if not Z.dim:
            rep.put("error", "center is zero; nothing to test")
            return 3
        central = Z.basis[-1]
    else:
        central = parse_vector(A, args.central)
    ctx = build_R(A, A.field.parse(args.alpha), central)
    res = check_qybe(ctx)
    rep.put("alpha", A.field.format(ctx.alpha))
    rep.put("central", A.format_vector(ctx.central))
    rep.put("qybe", res.holds)
    rep.put("residual_rank", res.residual_rank)
    rep.put("leibniz", A.is_leibniz())
    if args.export_r:
        with open(args.export_r, "w", encoding="utf-8") as fh:
            for row in ctx.R.rows:
                fh.write(" ".join(A.field.format(x) for x in row) + "\n")
    return 0 if res.holds else 1


def cmd_crossed(args, rep):
    with open(args.file, encoding="utf-8") as fh:
        D = parse_jjx(fh.read(), os.path.dirname(os.path.abspath(args.file)))
    v = validate_crossed_system(D)
    for axiom in ("J1", "J2", "J3", "J4"):
        rep.put(f"{axiom}_failures", len(v.failures[axiom]))
    rep.put("valid", v.valid)
    if v.valid:
        E = crossed_product_unchecked(D)
        rep.put("product_dim", E.dim)
        if args.output:
            write_jja(args.output, E)
            rep.put("written", args.output)
    return 0 if v.valid else 1


def _lam_text(F, lam):
    return ",".join(F.format(x) for x in lam)


def cmd_cohomology(args, rep):
    A = _load(args)
    F = A.field
    if args.glob is not None:
        try:
            r = global_h2_abelian(A, args.glob, cap=args.cap, nonabelian=args.nonabelian)
        except CapExceeded as exc:
            rep.put("error", str(exc))
            return 3
        rep.put("actions", len(r.components))
        for action, h2 in r.components:
            rep.put("action", [_matrix_text(M) for M in action.rho])
            rep.put("h2_dim", h2)
        for V, systems, classes in r.nonabelian:
            rep.put("fiber", V.format_vector(V.table[0][0]) if V.dim else "")
            rep.put("systems", systems)
            rep.put("classes", classes)
        rep.put("total_classes", r.total_classes)
        return 0
    if args.trivial is not None:
        cs = abelian_cocycles(A, ActionData.trivial(A, args.trivial))
        rep.put("z2_dim", cs.Z2.dim)
        rep.put("b2_dim", cs.B2.dim)
        rep.put("h2_dim", cs.h2_dim)
        return 0
    lams = coflag_lambdas(A, allow_small_char=args.allow_small_char)
    rep.put("lambda_count", len(lams))
    rep.put("lambda_complete", lams.complete)
    for lam in lams:
        cs = coflag_cohomology(A, lam)
        rep.put("lambda", _lam_text(F, lam))
        rep.put("z2_dim", cs.Z2.dim)
        rep.put("b2_dim", cs.B2.dim)
        rep.put("h2_dim", cs.h2_dim)
    return 0


def cmd_coflag(args, rep):
    A = _load(args)
    F = A.field
    lams = coflag_lambdas(A, allow_small_char=args.allow_small_char)
    rep.put("lambda_count", len(lams))
    for lam in lams:
        rep.put("lambda", _lam_text(F, lam))
        rep.put("h2_dim", coflag_cohomology(A, lam).h2_dim)
    reps = []
    if args.census:
        if F.modulus is None:
            rep.put("census", "unavailable over Q")
        else:
            c = coflag_census(A, allow_small_char=args.allow_small_char)
            rep.put("gh2_classes", c.gh2_classes)
            rep.put("cp_classes", c.count)
            reps = c.representatives
    else:
        reps = [CoflagDatum(A, lam, [[F.zero] * A.dim for _ in range(A.dim)]) for lam in lams]
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for k, d in enumerate(reps):
            path = os.path.join(args.out_dir, f"coflag_{k + 1}.jja")
            write_jja(path, build_coflag_algebra(d))
            rep.put("written", path)
    return 0


def cmd_iso(args, rep):
    A, B = _load(args, args.first), _load(args, args.second)
    v = isomorphic(A, B, node_cap=args.node_cap)
    rep.put("isomorphic", v.status)
    if v.witness:
        rep.put("invariant", v.witness)
    if v.reason:
        rep.put("reason", v.reason)
    if v.matrix is not None:
        rep.put("matrix", _matrix_text(v.matrix))
    return {"yes": 0, "no": 1}.get(v.status, 2)


def cmd_aut(args, rep):
    A = _load(args)
    try:
        G = automorphisms(A, node_cap=args.node_cap)
    except CapExceeded as exc:
        rep.put("error", str(exc))
        return 2
    rep.put("order", G.order)
    rep.put("closure_defects", len(G.closure_defects(limit=args.closure_sample)))
    return 0


def _param(text):
    key, eq, value = text.partition("=")
    if not eq:
        raise argparse.ArgumentTypeError(f"parameter {text!r} must look like key=value")
    try:
        return key.strip(), ast.literal_eval(value.strip())
    except (ValueError, SyntaxError):
        raise argparse.ArgumentTypeError(f"cannot read value of {key!r}") from None


def cmd_family(args, rep):
    F = parse_field(args.field)
    A = families.make(args.name, F, **dict(args.param or []))
    text = print_jja(A)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.put("written", args.output)
        rep.put("dim", A.dim)
    else:
        sys.stdout.write(text)
    return 0


def cmd_census(args, rep):
    F = parse_field(args.field)
    if args.kind == "homothety":
        reps = homothety_census(args.n, F)
        rep.put("classes", len(reps))
        for M in reps:
            rep.put("representative", _matrix_text(M))
    elif args.kind == "codim1":
        rep.put("classes", codim1_classes(args.n, F))
    elif args.kind == "jj":
        rep.put("jj_algebras", sum(1 for _ in jj_algebras(F, args.n)))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="jja", description="Exact computations with Jacobi-Jordan algebras.")
    p.add_argument("--format", choices=["text", "json-like-lines"], default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work runs in one process")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file")
        sp.add_argument("--symmetrize", action="store_true")
        return sp

    with_file("check", "commutativity, Jacobi, Leibniz and Jordan checks").set_defaults(fn=cmd_check)
    with_file("analyze", "series, center and nilpotency").set_defaults(fn=cmd_analyze)

    sp = with_file("frobenius", "search for a nondegenerate invariant form")
    sp.add_argument("--trials", type=int, default=64)
    sp.add_argument("--exhaustive-cap", type=int, default=10**5)
    sp.set_defaults(fn=cmd_frobenius)

    sp = with_file("qybe", "quantum Yang-Baxter check of R(a, b) = alpha b(x)a + c(x)ab")
    sp.add_argument("--alpha", default="1")
    sp.add_argument("--central", default=None, help="e.g. '2*y + z'; defaults to the last center basis vector")
    sp.add_argument("--export-r", default=None)
    sp.set_defaults(fn=cmd_qybe)

    sp = sub.add_parser("crossed", help="validate crossed data (.jjx) and build the crossed product")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=cmd_crossed)

    sp = with_file("cohomology", "second cohomology dimensions")
    sp.add_argument("--coflag", action="store_true", help="co-flag cohomology (the default)")
    sp.add_argument("--trivial", type=int, default=None, metavar="M", help="trivial action on k^M")
    sp.add_argument("--global", dest="glob", type=int, default=None, metavar="M", help="all actions on F_p^M")
    sp.add_argument("--nonabelian", action="store_true")
    sp.add_argument("--cap", type=int, default=10**6)
    sp.add_argument("--allow-small-char", action="store_true")
    sp.set_defaults(fn=cmd_cohomology)

    sp = with_file("coflag", "co-flag functionals, cohomology and census")
    sp.add_argument("--census", action="store_true")
    sp.add_argument("--out-dir", default=None)
    sp.add_argument("--allow-small-char", action="store_true")
    sp.set_defaults(fn=cmd_coflag)

    sp = sub.add_parser("iso", help="isomorphism test")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--symmetrize", action="store_true")
    sp.add_argument("--node-cap", type=int, default=10**7)
    sp.set_defaults(fn=cmd_iso)

    sp = with_file("aut", "automorphism group over F_p")
    sp.add_argument("--node-cap", type=int, default=10**7)
    sp.add_argument("--closure-sample", type=int, default=50)
    sp.set_defaults(fn=cmd_aut)

    sp = sub.add_parser("family", help="write a named family member as .jja")
    sp.add_argument("name", choices=sorted(families.FAMILIES))
    sp.add_argument("-p", "--param", type=_param, action="append", help="key=value, value as a Python literal")
    sp.add_argument("--field", default="Q")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=cmd_family)

    sp = sub.add_parser("census", help="brute-force class counts over F_p")
    sp.add_argument("kind", choices=["homothety", "codim1", "jj"])
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--field", default="F5")
    sp.set_defaults(fn=cmd_census)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.format)
    try:
        return args.fn(args, rep)
    except ParseError as exc:
        rep.put("error", type(exc).__name__)
        rep.put("line", exc.line)
        rep.put("column", exc.column)
        rep.put("message", str(exc))
        return 3
    except (JJError, OSError) as exc:
        rep.put("error", type(exc).__name__)
        rep.put("message", str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
