"""Command-line interface.

Exit codes: 0 success, 1 negative result (infeasible, not self-orthogonal,
construction impossible), 2 usage or input error, 3 budget or scale limit
exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import catalog, constructions, cyclic, equivalence, selfdual
from .addcode import (
    AdditiveCode,
    NotSelfOrthogonal,
    dual,
    first_nonorthogonal_pair,
    macwilliams,
    quantum_params,
    weight_distribution,
)
from .bounds import format_fraction_vector, lp_feasible
from .catalog import CodeFileError, format_code, read_code
from .enumeration import BudgetExceeded
from .polynomials import F2Poly, Gf4Poly
from .table import build_table, render_records, render_text

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

LIMIT_ERRORS = (
    BudgetExceeded,
    selfdual.ScaleLimitExceeded,
    cyclic.ScaleLimitExceeded,
    equivalence.ScaleLimitExceeded,
)


def _budget(args) -> int | None:
    return 1 << args.budget if args.budget is not None else None


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record(kind: str, **fields) -> str:
    return " ".join([kind] + [f"{k}={v}" for k, v in fields.items()]) + "\n"


def _dist_str(A) -> str:
    return " ".join(str(int(x)) for x in A)


# ---------------------------------------------------------------------------
# verbs


def cmd_verify(args) -> int:
    C = read_code(args.file)
    pair = first_nonorthogonal_pair(C)
    if pair is not None:
        i, j = pair
        g = C.generators
        msg = f"not self-orthogonal: generators {i} ({g[i]}) and {j} ({g[j]}) have trace inner product 1"
        if args.format == "records":
            sys.stdout.write(_record("verify", ok="no", gen_i=i, gen_j=j))
        else:
            print(msg)
        return EXIT_NEGATIVE
    qp = quantum_params(C, _budget(args))
    if args.format == "records":
        sys.stdout.write(_record("verify", ok="yes", n=qp.n, k=qp.k, d=qp.d, pure="yes" if qp.pure else "no"))
    else:
        print(f"n={qp.n} k={qp.k} d={qp.d} {'pure' if qp.pure else 'impure'}")
    return EXIT_OK


def cmd_distance(args) -> int:
    C = read_code(args.file)
    A = weight_distribution(C, _budget(args))
    if args.dual:
        A = macwilliams(A, C.r)
    d = A.min_weight()
    d = 0 if d is None else d
    if args.format == "records":
        sys.stdout.write(_record("distance", side="dual" if args.dual else "code", d=d))
    else:
        print(d)
    return EXIT_OK


def cmd_dual(args) -> int:
    C = read_code(args.file)
    D = dual(C)
    _emit(args, format_code(D, [f"trace dual of {args.file}"]))
    return EXIT_OK


def cmd_macwilliams(args) -> int:
    if args.file:
        C = read_code(args.file)
        A = weight_distribution(C, _budget(args))
        r = C.r
    else:
        if args.r is None or not args.dist:
            raise argparse.ArgumentTypeError("give FILE, or --r R with --dist A0 A1 ...")
        A = args.dist
        r = args.r
    B = macwilliams(A, r)
    if args.format == "records":
        sys.stdout.write(_record("distribution", side="code", A=",".join(str(int(x)) for x in A)))
        sys.stdout.write(_record("distribution", side="dual", A=",".join(str(x) for x in B.coeffs)))
    else:
        print("code: " + _dist_str(A))
        print("dual: " + _dist_str(B.coeffs))
    return EXIT_OK


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {s!r}") from None


def cmd_lp(args) -> int:
    res = lp_feasible(args.n, args.k, args.d, pure=args.pure, K_override=args.K_override)
    if not res.verify():
        raise AssertionError("LP result failed its own check")
    lines = []
    if args.K_override is not None:
        head = f"n={args.n} K={res.K} d={args.d}"
        if res.feasible:
            lines.append(f"FEASIBLE {head}")
            lines.append("A " + format_fraction_vector(res.witness))
        else:
            lines.append(f"INFEASIBLE {head}")
            lines += _farkas_lines(res.certificate.y, res.rows)
    else:
        head = f"n={args.n} k={args.k} d={args.d}" + (" pure" if args.pure else "")
        if res.feasible:
            lines.append(f"FEASIBLE {head} branch={res.branch}")
            lines.append("A " + format_fraction_vector(res.witness))
        else:
            lines.append(f"INFEASIBLE {head}")
            for b in sorted(res.certificates):
                lines.append(f"certificate branch={b}")
                lines += _farkas_lines(res.certificates[b].y, res.problems[b].rows)
    print("\n".join(lines))
    return EXIT_OK if res.feasible else EXIT_NEGATIVE


def _farkas_lines(y, rows) -> list[str]:
    return [f"y {row.label.replace(' ', '_')} {v}" for v, row in zip(y, rows) if v != 0]


# ---------------------------------------------------------------------------
# construct


def _code_arg(path: str) -> AdditiveCode:
    return read_code(path)


def _rows_arg(s: str) -> list[str]:
    return [t for t in s.replace(",", " ").split() if t]


def _construct_table() -> dict[str, tuple[Callable, Callable[[argparse.ArgumentParser], None]]]:
    def one_file(p):
        p.add_argument("file")

    def two_files(p):
        p.add_argument("file1")
        p.add_argument("file2")

    def b_shorten_support(p):
        p.add_argument("file")
        p.add_argument("--m", type=int, required=True, help="weight of the deleted support")

    def b_css(p):
        p.add_argument("c1", help="rows of binary C1, comma separated")
        p.add_argument("c2", help="rows of binary C2 (containing C1), comma separated")

    def b_m(p):
        p.add_argument("--m", type=int, required=True)

    def b_gottesman(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--divisors", default=None,
                       help="elementary divisors of f as binary polynomials, lowest degree first, comma separated")

    def b_trivial(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--d", type=int, required=True, choices=(1, 2))

    def b_constacyclic(p):
        p.add_argument("--g", required=True, help="generator over 0 1 w W, lowest degree first")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--kappa", choices=("1", "w", "W"), default="1")
        p.add_argument("--stabilizer", action="store_true", help="emit the dual of <g> instead of <g>")

    def b_additive_cyclic(p):
        for name in ("p", "q", "r"):
            p.add_argument(f"--{name}", required=True, help="binary coefficients, lowest degree first")
        p.add_argument("--n", type=int, required=True)

    def b_rows(p):
        p.add_argument("rows", nargs="+")

    def b_quasicyclic(p):
        p.add_argument("blocks", nargs="+", help="equal-length blocks of one seed")
        p.add_argument("--additive", action="store_true", help="F2 span only, no w-multiples")

    def b_ds(p):
        p.add_argument("--n", type=int, required=True)

    def gott(a):
        if a.divisors:
            F = constructions.divisor_matrix([F2Poly.from_string(s).bits for s in _rows_arg(a.divisors)])
        else:
            F = constructions.gottesman_matrix(a.m)
        return constructions.gottesman_code(a.m, F)

    def cc(a):
        kappa = {"1": 3, "w": 1, "W": 2}[a.kappa]
        C = cyclic.constacyclic_code(Gf4Poly.from_string(a.g), a.n, kappa)
        return dual(C) if a.stabilizer else C

    return {
        "lengthen": (lambda a: constructions.lengthen(_code_arg(a.file)), one_file),
        "shorten": (lambda a: constructions.shorten_pure(_code_arg(a.file), a.budget_words), one_file),
        "reduce-k": (lambda a: constructions.reduce_k(_code_arg(a.file), a.budget_words), one_file),
        "puncture": (lambda a: constructions.puncture(_code_arg(a.file)), one_file),
        "drop-weight1": (lambda a: constructions.drop_weight1(_code_arg(a.file)), one_file),
        "direct-sum": (lambda a: constructions.direct_sum(_code_arg(a.file1), _code_arg(a.file2)), two_files),
        "paste": (lambda a: constructions.paste(_code_arg(a.file1), _code_arg(a.file2)), two_files),
        "concatenate": (lambda a: constructions.concatenate(_code_arg(a.file1), _code_arg(a.file2)), two_files),
        "uuv": (lambda a: constructions.uuv(_code_arg(a.file1), _code_arg(a.file2), a.budget_words), two_files),
        "shorten-support": (
            lambda a: constructions.shorten_by_support(_code_arg(a.file), a.m, a.seed, a.budget_words),
            b_shorten_support),
        "css": (lambda a: constructions.css(_rows_arg(a.c1), _rows_arg(a.c2)), b_css),
        "gottesman": (gott, b_gottesman),
        "extend-gottesman": (lambda a: constructions.extend_gottesman(a.m), b_m),
        "hamming": (lambda a: cyclic.hamming_code(a.m), b_m),
        "trivial": (lambda a: constructions.trivial_code(a.n, a.k, a.d), b_trivial),
        "dn": (lambda a: constructions.dn_code(a.n), b_ds),
        "dn-plus": (lambda a: constructions.dn_plus(a.n), b_ds),
        "constacyclic": (cc, b_constacyclic),
        "additive-cyclic": (
            lambda a: cyclic.additive_cyclic(F2Poly.from_string(a.p), F2Poly.from_string(a.q),
                                             F2Poly.from_string(a.r), a.n),
            b_additive_cyclic),
        "cyclic-orbit": (lambda a: cyclic.cyclic_orbit_code(a.rows), b_rows),
        "quasicyclic": (lambda a: cyclic.quasicyclic_code([a.blocks], linear=not a.additive), b_quasicyclic),
    }


def _provenance(args) -> list[str]:
    skip = {"verb", "subverb", "func", "output", "budget_words", "format", "budget", "seed"}
    parts = [f"{k}={v}" for k, v in sorted(vars(args).items()) if k not in skip and v is not None]
    out = [f"construction: {args.subverb}"]
    if parts:
        out.append("parameters: " + " ".join(parts))
    if args.subverb == "shorten-support":
        out.append(f"seed: {args.seed}")
    return out


def cmd_construct(args) -> int:
    build = _construct_table()[args.subverb][0]
    args.budget_words = _budget(args)
    try:
        C = build(args)
    except constructions.ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _emit(args, format_code(C, _provenance(args)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# cyclic searches


def cmd_bch(args) -> int:
    kappa = {"1": 3, "w": 1, "W": 2}[args.kappa]
    if args.max_d is not None:
        codes = cyclic.bch_family(args.n, kappa, args.max_d)
    else:
        codes = cyclic.bch_search(args.n, kappa, args.d)
    if not codes:
        print("no code found")
        return EXIT_NEGATIVE
    for c in codes:
        n, k, d = c.promised()
        if args.format == "records":
            sys.stdout.write(_record("bch", n=n, k=k, design_d=d, g=str(c.g), cosets=",".join(map(str, c.zero_cosets))))
        else:
            print(f"[[{n},{k},>={d}]] g={c.g} cosets={list(c.zero_cosets)}")
    return EXIT_OK


def cmd_search_cyclic(args) -> int:
    rr = tuple(args.rank) if args.rank else None
    hits = cyclic.search_additive_cyclic(args.n, args.min_d, rank_range=rr, budget=_budget(args), limit=args.limit)
    if not hits:
        print("no code found")
        return EXIT_NEGATIVE
    for h in hits:
        n, k, d, pure = h.params
        if args.format == "records":
            sys.stdout.write(_record("cyclic", n=n, k=k, d=d, pure="yes" if pure else "no",
                                     p=h.p, q=h.q, r=h.r))
        else:
            print(f"[[{n},{k},{d}]] {'pure' if pure else 'impure'} p={h.p} q={h.q} r={h.r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# self-dual codes, catalog, table


def cmd_enum_selfdual(args) -> int:
    classes, total = selfdual.classify_selfdual(args.n)
    m = selfdual.mass(classes)
    rhs = selfdual.mass_formula_rhs(args.n)
    indec = sum(c.indecomposable for c in classes)
    if args.format == "records":
        sys.stdout.write(_record("selfdual", n=args.n, classes=len(classes), indecomposable=indec,
                                 enumerated=total, expected=selfdual.selfdual_count(args.n),
                                 mass=m, mass_rhs=rhs))
        for i, c in enumerate(classes):
            sys.stdout.write(_record("class", index=i, aut=c.aut_order, orbit=c.orbit_size, d=c.d,
                                     even="yes" if c.even else "no",
                                     indecomposable="yes" if c.indecomposable else "no",
                                     rows=",".join(c.representative.rows())))
    else:
        print(f"n={args.n} classes={len(classes)} indecomposable={indec}")
        print(f"codes enumerated={total} expected={selfdual.selfdual_count(args.n)}")
        print(f"sum 1/|Aut| = {m}; count/|G| = {rhs}; {'equal' if m == rhs else 'NOT EQUAL'}")
        for i, c in enumerate(classes):
            flags = ["even" if c.even else "odd", "indecomposable" if c.indecomposable else "decomposable"]
            print()
            print(format_code(c.representative,
                              [f"class {i}: |Aut|={c.aut_order} orbit={c.orbit_size} d={c.d} " + " ".join(flags)]),
                  end="")
    return EXIT_OK if m == rhs and total == selfdual.selfdual_count(args.n) else EXIT_NEGATIVE


def cmd_catalog(args) -> int:
    if args.name is None:
        for e in catalog.entries():
            claim = "-" if e.claimed is None else "[[{},{},{}]]{}".format(*e.claimed[:3], "" if e.claimed[3] else " impure")
            if args.verify and e.claimed is not None:
                e.verify(_budget(args))
                claim += " verified" if e.verified else " MISMATCH"
            if args.format == "records":
                sys.stdout.write(_record("entry", name=e.name, claim=claim.replace(" ", "_")))
            else:
                print(f"{e.name:30s} {claim:28s} {e.source}")
        return EXIT_OK
    e = catalog.get(args.name)
    comments = [f"catalog entry {e.name}: {e.source}"]
    if e.claimed is not None:
        comments.append("claimed [[{},{},{}]] {}".format(*e.claimed[:3], "pure" if e.claimed[3] else "impure"))
    if args.verify and e.claimed is not None:
        qp = e.verify(_budget(args))
        comments.append(f"computed {qp}")
        _emit(args, format_code(e.code, comments))
        return EXIT_OK if e.verified else EXIT_NEGATIVE
    _emit(args, format_code(e.code, comments))
    return EXIT_OK


def cmd_table(args) -> int:
    cells = build_table(args.max_n, min_n=args.min_n, jobs=args.jobs)
    if args.format == "records":
        sys.stdout.write(render_records(cells))
    else:
        sys.stdout.write(render_text(cells))
    return EXIT_OK if all(c.matches is not False for c in cells) else EXIT_NEGATIVE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def flags(top: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without defaults, so a value
        # given before the verb is not overwritten
        f = argparse.ArgumentParser(add_help=False)
        dflt = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
        f.add_argument("--budget", type=int, default=dflt(None), metavar="LOG2",
                       help="enumeration budget as log2 of the number of codewords (env QGF4_BUDGET)")
        f.add_argument("--seed", type=int, default=dflt(0))
        f.add_argument("--format", choices=("text", "records"), default=dflt("text"))
        return f

    common = flags(False)
    p = argparse.ArgumentParser(prog="qgf4", description="Additive codes over GF(4) and quantum codes.",
                                parents=[flags(True)])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("verify", parents=[common], help="print [[n,k,d]] and purity of a code file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("distance", parents=[common], help="minimum nonzero weight of a code or its dual")
    s.add_argument("file")
    s.add_argument("--dual", action="store_true")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("dual", parents=[common], help="write the trace dual")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("macwilliams", parents=[common], help="weight distribution of a code and of its dual")
    s.add_argument("file", nargs="?")
    s.add_argument("--r", type=int, help="log2 of the code size, with --dist")
    s.add_argument("--dist", type=int, nargs="+", help="A_0 .. A_n")
    s.set_defaults(func=cmd_macwilliams)

    s = sub.add_parser("lp", parents=[common], help="linear programming test for [[n,k,d]]")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--pure", action="store_true")
    s.add_argument("--K-override", dest="K_override", type=_parse_fraction, default=None, metavar="P/Q",
                   help="use the enumerator form with 2^k replaced by P/Q")
    s.set_defaults(func=cmd_lp)

    s = sub.add_parser("construct", parents=[common], help="build a code; see 'construct -h'")
    csub = s.add_subparsers(dest="subverb", required=True)
    for name, (_, add_args) in _construct_table().items():
        c = csub.add_parser(name, parents=[common])
        add_args(c)
        c.add_argument("-o", "--output")
        c.set_defaults(func=cmd_construct)

    s = sub.add_parser("bch", parents=[common], help="quantum BCH codes of length n")
    s.add_argument("n", type=int)
    s.add_argument("--kappa", choices=("1", "w", "W"), default="1")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int, help="design distance")
    g.add_argument("--max-d", type=int, help="best code for each design distance up to this")
    s.set_defaults(func=cmd_bch)

    s = sub.add_parser("search-cyclic", parents=[common], help="self-orthogonal additive cyclic codes")
    s.add_argument("n", type=int)
    s.add_argument("--min-d", type=int, required=True)
    s.add_argument("--rank", type=int, nargs=2, metavar=("LO", "HI"))
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_search_cyclic)

    s = sub.add_parser("enum-selfdual", parents=[common], help="classify self-dual codes of length n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_enum_selfdual)

    s = sub.add_parser("catalog", parents=[common], help="list catalog entries or print one")
    s.add_argument("name", nargs="?")
    s.add_argument("--verify", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("table", parents=[common], help="bounds on the best distance, against the stored table")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--min-n", type=int, default=3)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_table)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("QGF4_BUDGET")
    if args.budget is not None:
        os.environ["QGF4_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except LIMIT_ERRORS as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotSelfOrthogonal as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NEGATIVE
    except (CodeFileError, argparse.ArgumentTypeError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        # main() may be called repeatedly in one process
        if saved is None:
            os.environ.pop("QGF4_BUDGET", None)
        else:
            os.environ["QGF4_BUDGET"] = saved


if __name__ == "__main__":
    sys.exit(main())
