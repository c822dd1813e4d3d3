"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from . import bck, braces, butcher, operad, postgroup, postlie, ybe
from .trees import enumerate_trees


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _parsed(path: str, reader: Callable[[str], object]):
    try:
        return reader(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _inline_or_file(arg: str, reader: Callable[[str], object]):
    """A readable path is parsed as a file; otherwise the argument is a single
    basis element with coefficient 1, or failing that ``;``-separated term lines."""
    if os.path.isfile(arg):
        return _parsed(arg, reader)
    if ";" not in arg:
        try:
            return reader(f"1 {arg}")
        except ValueError:
            pass
    try:
        return reader(arg.replace(";", "\n"))
    except ValueError as exc:
        raise InputError(f"argument {arg!r}: {exc}") from None


def _report(rep: postgroup.Report, verbose: bool, out) -> bool:
    print(rep.summary(), file=out)
    if verbose and not rep.ok:
        print(rep.details(), file=out)
    elif not rep.ok:
        axioms = ", ".join(sorted(rep.failed_axioms()))
        print(f"  {len(rep.violations)} violation(s): {axioms}", file=out)
    return rep.ok


# --------------------------------------------------------------------------
# handlers


def cmd_trees(args, out) -> int:
    for t in enumerate_trees(args.nodes, planar=args.planar):
        print(t, file=out)
    return 0


def cmd_hopf(args, out) -> int:
    x = _inline_or_file(args.element, bck.parse_element)
    if args.op == "coproduct":
        text = bck.format_tensor(bck.coproduct(x))
    elif args.op == "reduced":
        text = bck.format_tensor(bck.reduced_coproduct(x))
    else:
        text = bck.format_element(bck.antipode(x))
    if text:
        print(text, file=out)
    return 0


def cmd_butcher(args, out) -> int:
    a = _parsed(args.a, butcher.parse_character)
    if args.op == "inv":
        res = butcher.char_inverse_circ(a)
    else:
        if args.b is None:
            raise InputError(f"butcher {args.op} needs two character files")
        b = _parsed(args.b, butcher.parse_character)
        fn = {"dot": butcher.char_dot, "rhd": butcher.char_rhd, "compose": butcher.char_compose}[args.op]
        try:
            res = fn(a, b)
        except butcher.CharacterError as exc:
            raise InputError(str(exc)) from None
    out.write(butcher.format_character(res))
    return 0


def _load_table(path: str) -> postgroup.PostGroupTable:
    return _parsed(path, postgroup.parse_table)


def cmd_verify(args, out) -> int:
    what = args.what
    if what == "postgroup":
        return 0 if _report(postgroup.verify_postgroup(_load_table(args.table)), args.verbose, out) else 1
    if what == "ybe":
        if args.rmap:
            r = _parsed(args.rmap, ybe.parse_rmap)
        elif args.table:
            r = ybe.postgroup_to_rmap(_require_postgroup(args.table, out)).rmap
        else:
            raise InputError("verify ybe needs --table or --rmap")
        rep = ybe.verify_braid(r)
        square = "R^2=Id" if r.squared_is_identity() else "R^2!=Id"
        print(f"{rep.summary()}, {square}", file=out)
        if args.verbose and not rep.ok:
            print(rep.details(), file=out)
        nondeg = ybe.verify_nondegenerate(r)
        print(f"nondegenerate: {'yes' if nondeg else 'no'}", file=out)
        return 0 if rep.ok and nondeg else 1
    if what == "brace":
        if args.brace:
            b = _parsed(args.brace, braces.parse_brace)
        elif args.table:
            b = braces.postgroup_to_brace(_require_postgroup(args.table, out))
        else:
            raise InputError("verify brace needs --brace or --table")
        return 0 if _report(braces.verify_brace(b), args.verbose, out) else 1
    if what == "matched-pair":
        t = _require_postgroup(_need(args.table, "--table"), out)
        mp = postgroup.rb_to_matched_pair(postgroup.id_as_rb(t))
        return 0 if _report(postgroup.verify_matched_pair(mp), args.verbose, out) else 1
    if what == "rb":
        if args.table:
            t = _load_table(args.table)
            try:
                rb = postgroup.id_as_rb(t)
            except postgroup.GroupError as exc:
                print(f"RRBO: FAIL ({exc})", file=out)
                return 1
            B, action = rb.B, rb.action
        else:
            action = _named_action(_need(args.group, "--group or --table"), args.action)
            B = _parse_map(_need(args.map, "--map"), action)
        rep = postgroup.verify_rrbo(B, action)
        ok = _report(rep, args.verbose, out)
        fact = postgroup.semidirect_factorization_check(B, action)
        print(f"factorization: {'yes' if fact else 'no'}", file=out)
        return 0 if ok else 1
    raise InputError(f"unknown verification {what!r}")


def _need(value, flag: str):
    if value is None:
        raise InputError(f"missing {flag}")
    return value


def _require_postgroup(path: str, out) -> postgroup.PostGroupTable:
    t = _load_table(path)
    rep = postgroup.verify_postgroup(t)
    if not rep.ok:
        raise InputError(f"{path}: not a post-group ({rep.violations[0][0]} at {rep.violations[0][1]})")
    return t


def _named_group(name: str) -> postgroup.GroupTable:
    if name.upper() == "S3":
        return postgroup.GroupTable.symmetric(3)
    if name[:1].upper() in "CZ" and name[1:].isdigit():
        return postgroup.GroupTable.cyclic(int(name[1:]))
    raise InputError(f"unknown group {name!r} (use S3, Cn or Zn)")


def _named_action(name: str, kind: str) -> postgroup.ActionTable:
    g = _named_group(name)
    return postgroup.ActionTable.adjoint(g) if kind == "adjoint" else postgroup.ActionTable.trivial(g, g)


def _parse_map(text: str, action: postgroup.ActionTable) -> tuple[int, ...]:
    try:
        B = tuple(int(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad map {text!r}") from None
    if len(B) != action.H.n or any(not 0 <= v < action.G.n for v in B):
        raise InputError(f"map must list {action.H.n} images in [0, {action.G.n})")
    return B


def cmd_brace(args, out) -> int:
    if args.op == "enum":
        try:
            found = braces.enumerate_braces(args.size)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        print(f"# {len(found)} brace(s) of order {args.size}", file=out)
        for i, b in enumerate(found):
            print(f"# brace {i}", file=out)
            out.write(braces.format_brace(b))
        return 0
    if args.table:
        t = _require_postgroup(args.table, out)
        out.write(braces.format_brace(braces.postgroup_to_brace(t)))
        return 0
    if args.brace:
        b = _parsed(args.brace, braces.parse_brace)
        try:
            out.write(postgroup.format_table(braces.brace_to_postgroup(b)))
        except postgroup.GroupError as exc:
            print(f"brace: FAIL ({exc})", file=out)
            return 1
        return 0
    raise InputError("brace convert needs --table or --brace")


def cmd_operad(args, out) -> int:
    def coeffs(text):
        try:
            return operad.parse_series(text)
        except ValueError as exc:
            raise InputError(f"series {text!r}: {exc}") from None

    ca, cb = coeffs(args.a), coeffs(args.b)
    order = args.order if args.order is not None else max(len(ca), len(cb), 1)
    pad = lambda c: operad.SeriesGroupElem(tuple((c + [0] * order)[:order]))  # noqa: E731
    a, b = pad(ca), pad(cb)
    fn = {"dot": operad.com_dot, "rhd": operad.com_rhd, "circ": operad.com_circ}[args.op]
    print(operad.format_series(fn(a, b)), file=out)
    return 0


def cmd_postlie(args, out) -> int:
    def elem(arg):
        return _inline_or_file(arg, lambda text: postlie.parse_graded(text, args.grade))

    def show(x):
        text = postlie.format_graded(x)
        print(text if text else "0", file=out)

    op = args.op
    unary = {"exp", "log", "magnus"}
    xs = [elem(a) for a in args.elements]
    want = 1 if op in unary else 2
    if len(xs) != want:
        raise InputError(f"postlie {op} takes {want} element(s)")
    try:
        if op == "graft":
            show(postlie.graft(*xs))
        elif op == "rhd":
            show(postlie.extend_rhd(*xs))
        elif op == "gl":
            show(postlie.gl_product(*xs))
        elif op == "exp":
            show(postlie.exp_gl(xs[0]) if args.gl else postlie.exp_dot(xs[0]))
        elif op == "log":
            show(postlie.log_gl(xs[0]) if args.gl else postlie.log_dot(xs[0]))
        elif op == "magnus":
            show(postlie.inverse_magnus(xs[0]) if args.inverse else postlie.magnus(xs[0]))
        elif op == "bch":
            show(postlie.bch(*xs))
        elif op == "integrate":
            dot, rhd = postlie.formal_integration_ops(*xs)
            print("# dot", file=out)
            show(dot)
            print("# rhd", file=out)
            show(rhd)
        elif op == "lb-product":
            show(postlie.lie_butcher_product(*xs))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return 0


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="postalg", description="Exact post-group and post-Lie computations.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("trees", help="rooted tree enumeration")
    t.add_argument("op", choices=["enum"])
    t.add_argument("--nodes", type=int, required=True)
    t.add_argument("--planar", action="store_true")
    t.set_defaults(func=cmd_trees)

    h = sub.add_parser("hopf", help="coproduct and antipode on rooted forests")
    h.add_argument("op", choices=["coproduct", "reduced", "antipode"])
    h.add_argument("element", help="forest string, or a file of '<rational> <forest>' lines")
    h.set_defaults(func=cmd_hopf)

    b = sub.add_parser("butcher", help="operations on truncated characters")
    b.add_argument("op", choices=["dot", "rhd", "compose", "inv"])
    b.add_argument("a")
    b.add_argument("b", nargs="?")
    b.set_defaults(func=cmd_butcher)

    v = sub.add_parser("verify", help="exhaustive axiom checks")
    v.add_argument("what", choices=["postgroup", "ybe", "brace", "matched-pair", "rb"])
    v.add_argument("--table", help="post-group table file")
    v.add_argument("--rmap", help="R-map file (ybe)")
    v.add_argument("--brace", help="brace file")
    v.add_argument("--group", help="S3, Cn or Zn (rb)")
    v.add_argument("--action", choices=["adjoint", "trivial"], default="adjoint")
    v.add_argument("--map", help="images B(0) .. B(n-1) (rb)")
    v.add_argument("--verbose", "-v", action="store_true", help="list every violation")
    v.set_defaults(func=cmd_verify)

    br = sub.add_parser("brace", help="skew-left braces")
    br.add_argument("op", choices=["convert", "enum"])
    br.add_argument("--table", help="post-group table to convert into a brace")
    br.add_argument("--brace", help="brace file to convert into a post-group table")
    br.add_argument("--size", type=int, default=4)
    br.set_defaults(func=cmd_brace)

    o = sub.add_parser("operad", help="the commutative-operad pre-group on series")
    o.add_argument("family", choices=["com"])
    o.add_argument("op", choices=["dot", "rhd", "circ"])
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--order", type=int, default=None)
    o.set_defaults(func=cmd_operad)

    pl = sub.add_parser("postlie", help="free post-Lie algebra on planar trees")
    pl.add_argument("op", choices=["graft", "rhd", "gl", "exp", "log", "bch", "magnus", "integrate", "lb-product"])
    pl.add_argument("elements", nargs="+")
    pl.add_argument("--grade", type=int, default=postlie.DEFAULT_GRADE)
    pl.add_argument("--gl", action="store_true", help="use the Grossman-Larson product for exp/log")
    pl.add_argument("--inverse", action="store_true", help="inverse Magnus expansion")
    pl.set_defaults(func=cmd_postlie)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "grade", None) is not None and not 0 <= args.grade <= postlie.max_grade():
        print(f"error: --grade must lie in 0..{postlie.max_grade()}", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
