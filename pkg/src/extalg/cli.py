"""Command-line interface: ``extalg <command> ...``.

Exit codes: 0 success, 2 parse error, 3 resource/dimension cap, 4 failed precondition.
``--json`` prints a document with ``"schema": "extalg/1"`` carrying the same data.
"""

import argparse
import json
import sys

from .decompose import (carve_in_complement, carve_minimal_internal, classify_carving,
                        classify_factorization, factor_in_complement, factor_maximal_orthogonal)
from .errors import MAX_DIM, DomainError, ResourceLimitError
from .fermion import (MAX_MATRIX_DIM, basis_state, format_operator, mask_scom_sign,
                      op_annihilate, op_create, operator_matrix, scom_apply, scom_direct,
                      scom_expand, scom_expand_diagonal, scom_matrix)
from .linalg import Subspace
from .multivector import Multivector, lcontr, wedge
from .plucker import FORMS, monomial_histogram, plucker_dedupe, plucker_evaluate, plucker_generate
from .simplicity import DECIDERS, is_simple_by
from .spaces import grade_profile, inner_space, outer_space
from .textfmt import ParseError, format_multivector, format_scalar, parse_index_list, parse_multivector

SCHEMA = "extalg/1"
EXIT_PARSE, EXIT_RESOURCE, EXIT_PRECONDITION = 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"usage error: {message}", EXIT_PARSE)


# -- helpers -------------------------------------------------------------------

def _check_dim(n):
    if not 1 <= n <= MAX_DIM:
        raise CliError(f"dimension {n} outside 1..{MAX_DIM}", EXIT_RESOURCE)


def _mv(args, text, what="--mv"):
    try:
        return parse_multivector(text, args.dim, args.field)
    except ParseError as e:
        raise CliError(f"cannot parse {what}: {e}", EXIT_PARSE) from None


def _fmt(m, args):
    return format_multivector(m, args.field)


def _fmt_space(space, args):
    if space.dim == 0:
        return []
    return [_fmt(Multivector.vector(v), args) for v in space.basis]


def _space_text(vecs):
    return ", ".join(vecs) if vecs else "{0}"


def _vectors(args, text, what):
    parts = [p for p in text.split(";") if p.strip()]
    vecs = []
    for p in parts:
        m = _mv(args, p, what)
        if any(g != 1 for g in m.grades()):
            raise CliError(f"{what} entries must be vectors, got {p.strip()!r}", EXIT_PRECONDITION)
        vecs.append(m.to_vector() if not m.is_zero() else (0,) * args.dim)
    return Subspace(args.dim, vecs)


def _index_list(text, what):
    try:
        r = parse_index_list(text)
    except ParseError as e:
        raise CliError(f"cannot parse {what}: {e}", EXIT_PARSE) from None
    if list(r) != sorted(set(r)):
        raise CliError(f"{what} must be increasing", EXIT_PRECONDITION)
    return r


def _brace(r):
    return "e{" + ",".join(str(k) for k in r) + "}"


def _state_text(coef, r):
    if coef == 0:
        return "0"
    return f"{'-' if coef < 0 else '+'}{abs(coef)} {_brace(r)}"


# -- commands -----------------------------------------------------------------

def cmd_spaces(args):
    m = _mv(args, args.mv)
    inner, outer = _fmt_space(inner_space(m), args), _fmt_space(outer_space(m), args)
    doc = {"inner": inner, "outer": outer, "inner_dim": len(inner), "outer_dim": len(outer)}
    lines = [f"inner: {_space_text(inner)}", f"outer: {_space_text(outer)}",
             f"inner dim: {len(inner)}", f"outer dim: {len(outer)}"]
    if m.is_zero():
        doc["grades"] = None
        doc["note"] = "grades undefined at zero"
        lines.append("grades: undefined at zero")
    else:
        g = grade_profile(m)
        doc["grades"] = {"igrade": g.igrade, "bgrade": g.bgrade, "tgrade": g.tgrade,
                         "ograde": g.ograde}
        lines.append(f"grades: igrade={g.igrade} bgrade={g.bgrade} tgrade={g.tgrade} "
                     f"ograde={g.ograde}")
    return doc, lines


def _flags_lines(doc, names):
    return [f"{k}: {str(doc[k]).lower()}" for k in names]


def cmd_factor(args):
    m = _mv(args, args.mv)
    if args.mode == "maximal-orthogonal":
        if args.blade or args.complement:
            raise CliError("--blade/--complement only apply to --mode in-complement", EXIT_PRECONDITION)
        f = factor_maximal_orthogonal(m)
    else:
        if not args.blade:
            raise CliError("--mode in-complement needs --blade", EXIT_PRECONDITION)
        b = _mv(args, args.blade, "--blade")
        v = _vectors(args, args.complement, "--complement") if args.complement else None
        f = classify_factorization(m, b, factor_in_complement(m, b, v))
    check = wedge(f.B, f.N) == m
    doc = {"B": _fmt(f.B, args), "N": _fmt(f.N, args), "check": check,
           "tight": f.tight, "orthogonal": f.orthogonal, "maximal": f.maximal}
    lines = [f"B: {doc['B']}", f"N: {doc['N']}", f"B ^ N = M: {str(check).lower()}"]
    lines += _flags_lines(doc, ("tight", "orthogonal", "maximal"))
    return doc, lines


def cmd_carve(args):
    m = _mv(args, args.mv)
    if args.mode == "minimal-internal":
        if args.blade or args.complement:
            raise CliError("--blade/--complement only apply to --mode in-complement", EXIT_PRECONDITION)
        c = carve_minimal_internal(m)
    else:
        if not args.blade:
            raise CliError("--mode in-complement needs --blade", EXIT_PRECONDITION)
        b = _mv(args, args.blade, "--blade")
        v = _vectors(args, args.complement, "--complement") if args.complement else None
        c = classify_carving(m, carve_in_complement(m, b, v), b)
    check = lcontr(c.N, c.B) == m
    doc = {"N": _fmt(c.N, args), "B": _fmt(c.B, args), "check": check,
           "tight": c.tight, "internal": c.internal, "minimal": c.minimal}
    lines = [f"N: {doc['N']}", f"B: {doc['B']}", f"N -| B = M: {str(check).lower()}"]
    lines += _flags_lines(doc, ("tight", "internal", "minimal"))
    return doc, lines


def cmd_simple(args):
    m = _mv(args, args.mv)
    if m.is_zero():
        raise CliError("simplicity is not defined for the zero multivector", EXIT_PRECONDITION)
    if args.criterion != "spaces" and not m.is_homogeneous():
        raise CliError(f"criterion {args.criterion} needs a homogeneous multivector", EXIT_PRECONDITION)
    verdict = is_simple_by(m, args.criterion)
    doc = {"criterion": args.criterion, "simple": verdict}
    lines = [f"criterion: {args.criterion}", f"simple: {str(verdict).lower()}"]
    if args.criterion.startswith("plucker") and not verdict:
        p = m.grades()[0]
        rels = plucker_dedupe(plucker_generate(p, m.dim, args.criterion.split("-", 1)[1]))
        for rel in rels:
            val = rel.evaluate(m)
            if val != 0:
                prim = rel.primitive()
                doc["witness"] = {"relation": str(prim), "value": format_scalar(prim.evaluate(m))}
                lines.append(f"witness: {prim}")
                lines.append(f"value: {doc['witness']['value']}")
                break
    return doc, lines


def cmd_plucker(args):
    if not 1 <= args.p <= args.n:
        raise CliError(f"need 1 <= p <= n, got p={args.p}, n={args.n}", EXIT_PRECONDITION)
    _check_dim(args.n)
    rels = plucker_generate(args.p, args.n, args.form)
    if args.dedupe:
        rels = plucker_dedupe(rels)
    hist = monomial_histogram(rels)
    doc = {"p": args.p, "n": args.n, "form": args.form, "dedupe": args.dedupe,
           "count": len(rels), "histogram": {str(k): v for k, v in hist.items()}}
    count_line = ", ".join(f"{k}-term: {v}" for k, v in hist.items()) or "none"
    if args.count_only:
        return doc, [count_line]
    doc["relations"] = [str(r) for r in rels]
    return doc, [str(r) for r in rels]


def _agree_or_die(i, j, n, forms, k=None):
    """Cross-check every requested form against direct composition."""
    direct = (op_create(i), op_annihilate(j))
    if k is not None:
        state = basis_state(n, k)
        ref = scom_apply(*direct, state)
        for name, op in forms.items():
            if op.apply(state) != ref:
                raise RuntimeError(f"internal disagreement: {name} on v_{k}")
        c, b = scom_direct(i, j, k)
        got = Multivector.zero(n) if c == 0 else Multivector.blade(n, b, c)
        if got != ref:
            raise RuntimeError("internal disagreement: closed form")
    if n <= MAX_MATRIX_DIM - 4:     # dense check stays cheap up to 2^8 states
        import numpy as np
        ref = scom_matrix(*direct, n)
        for name, op in forms.items():
            if not np.array_equal(operator_matrix(op, n), ref):
                raise RuntimeError(f"internal disagreement: {name}")


def cmd_fermion(args):
    n = args.dim
    if n is None:
        raise CliError("fermion needs --dim", EXIT_PARSE)
    i = _index_list(args.i, "--i")
    j = _index_list(args.j, "--j")
    k = _index_list(args.apply, "--apply") if args.apply is not None else None
    for r, what in ((i, "--i"), (j, "--j"), (k or (), "--apply")):
        if r and r[-1] > n:
            raise CliError(f"{what} has an index above dim {n}", EXIT_PRECONDITION)
    forms = {"expand7": scom_expand(i, j, "ca"),
             "expand8": scom_expand(j, i, "ac").scale(mask_scom_sign(i, j))}
    if i == j:
        forms["diag"] = scom_expand_diagonal(i, "plain-first")
    if args.form == "diag" and i != j:
        raise CliError("--form diag needs --i equal to --j", EXIT_PRECONDITION)
    if args.form == "direct" and k is None:
        raise CliError("--form direct needs --apply", EXIT_PRECONDITION)
    _agree_or_die(i, j, n, forms, k)
    doc = {"i": list(i), "j": list(j), "form": args.form}
    lines = []
    if args.form != "direct":
        op = forms[args.form]
        doc["operator"] = format_operator(op)
        lines.append(doc["operator"])
    if k is not None:
        c, b = scom_direct(i, j, k)
        doc["apply"] = list(k)
        doc["result"] = {"coefficient": c, "blade": list(b) if b else None}
        lines.append(f"{_state_text(1, k)} -> {_state_text(c, b)}")
    return doc, lines


# -- parser --------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="extalg", description="Exact exterior-algebra kernel.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, dim=True):
        if dim:
            sp.add_argument("--dim", type=int, required=True, help="ambient dimension n")
            sp.add_argument("--field", choices=("rational", "gaussian"), default="rational")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("spaces", help="inner/outer spaces and generalized grades")
    common(sp)
    sp.add_argument("--mv", required=True)
    sp.set_defaults(func=cmd_spaces)

    for name, modes, func in (("factor", ("maximal-orthogonal", "in-complement"), cmd_factor),
                              ("carve", ("minimal-internal", "in-complement"), cmd_carve)):
        sp = sub.add_parser(name, help=f"blade {name}")
        common(sp)
        sp.add_argument("--mv", required=True)
        sp.add_argument("--mode", choices=modes, default=modes[0])
        sp.add_argument("--blade")
        sp.add_argument("--complement", help="';'-separated vectors spanning the complement")
        sp.set_defaults(func=func)

    sp = sub.add_parser("simple", help="decide simplicity")
    common(sp)
    sp.add_argument("--mv", required=True)
    sp.add_argument("--criterion", choices=DECIDERS, default="spaces")
    sp.set_defaults(func=cmd_simple)

    sp = sub.add_parser("plucker", help="list Plücker-type relations")
    common(sp, dim=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--form", choices=FORMS, default="reduced")
    sp.add_argument("--dedupe", action="store_true")
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_plucker)

    sp = sub.add_parser("fermion", help="fermionic operator supercommutators")
    # shared flags are accepted before or after ``scom``
    sp.add_argument("--dim", type=int)
    sp.add_argument("--field", choices=("rational", "gaussian"), default="rational")
    sp.add_argument("--json", action="store_true")
    fsub = sp.add_subparsers(dest="fcommand", required=True, parser_class=_Parser)
    sc = fsub.add_parser("scom", help="[[a+_i, a_j]] in several forms")
    sc.add_argument("--dim", type=int, default=argparse.SUPPRESS)
    sc.add_argument("--field", choices=("rational", "gaussian"), default=argparse.SUPPRESS)
    sc.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sc.add_argument("--i", required=True)
    sc.add_argument("--j", required=True)
    sc.add_argument("--apply", help="basis state v_k to act on")
    sc.add_argument("--form", choices=("expand7", "expand8", "diag", "direct"), default="expand7")
    sc.set_defaults(func=cmd_fermion)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "dim", None) is not None:
            _check_dim(args.dim)
        doc, lines = args.func(args)
    except CliError as e:
        print(f"error: {e}", file=err)
        return e.code
    except ParseError as e:
        print(f"error: {e}", file=err)
        return EXIT_PARSE
    except ResourceLimitError as e:
        print(f"error: {e}", file=err)
        return EXIT_RESOURCE
    except DomainError as e:
        print(f"error: {e}", file=err)
        return EXIT_PRECONDITION
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command, **doc}
        print(json.dumps(doc, sort_keys=True, default=str), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
