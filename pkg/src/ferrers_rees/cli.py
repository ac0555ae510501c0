"""Command-line front end.

Exit codes: 0 success, 1 verification or regression failure, 2 input or usage
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable

from . import fixtures
from ._kernels import BACKENDS
from .core import GREATER, LimitError, sigma_cmp
from .diagram import (
    is_rectangular,
    is_standardizable,
    load_diagram,
    maximal_points,
)
from .exchange import IdealCollection, exchange_report
from .groebner import (
    DEFAULT_MAX_BASIS,
    DEFAULT_MAX_PAIRS,
    BinomialBasis,
    basis_to_json,
    basis_to_text,
    initial_squarefree,
    inter_reduce,
    is_groebner,
)
from .oracle import (
    DEFAULT_ENUMERATION_BUDGET,
    FIBER,
    REES,
    ToricInstance,
    degree_count,
    kernel_binomials,
    reduced_kernel_gb,
    verify_candidate,
)
from .poly import XLEX, Monomial, MonomialOrder, XVar
from .presentation import fiber_candidate, rees_candidate
from .tableau import format_tableau, is_semi_standard, is_standard, parse_tableau, sort_rows, standardize, support

OK, FAILED, INPUT_ERROR, LIMIT = 0, 1, 2, 3


def _point(p) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def _emit(args: argparse.Namespace, doc: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": 1, **doc}, indent=2))
    else:
        print(text)


def _order(args: argparse.Namespace, map_kind: str = FIBER) -> MonomialOrder:
    t_kind = "sigma" if args.order == "product" else args.order
    if map_kind == REES:
        return MonomialOrder("product", t_kind)
    return MonomialOrder(t_kind)


def _limits(args: argparse.Namespace) -> dict[str, Any]:
    return {"max_basis": args.max_basis, "max_pairs": args.max_pairs}


def _basis_doc(basis: BinomialBasis) -> dict[str, Any]:
    doc = basis_to_json(basis)
    doc.pop("schema")
    return doc


def _basis_text(title: str, basis: BinomialBasis) -> str:
    hist = ", ".join(f"degree {k}: {v}" for k, v in sorted(basis.degree_histogram().items()))
    body = basis_to_text(basis)
    return f"# {title} ({len(basis.elements)} elements; {hist or 'empty'})" + ("\n" + body if body else "")


# -- subcommands -------------------------------------------------------------------------------

def cmd_closure(args: argparse.Namespace) -> int:
    D = load_diagram(args.diagram)
    pts = D.sorted_points()
    maxi = sorted(maximal_points(D))
    doc = {
        "dimension": D.dimension,
        "size": len(pts),
        "points": [list(p) for p in pts],
        "maximal_points": [list(p) for p in maxi],
    }
    text = "\n".join(
        [
            f"dimension: {D.dimension}",
            f"points ({len(pts)}): " + " ".join(_point(p) for p in pts),
            "maximal: " + " ".join(_point(p) for p in maxi),
        ]
    )
    _emit(args, doc, text)
    return OK


def cmd_check(args: argparse.Namespace) -> int:
    D = load_diagram(args.diagram)
    rect = is_rectangular(D)
    ok, bad = is_standardizable(D)
    doc: dict[str, Any] = {"size": len(D), "rectangular": rect, "standardizable": ok, "violation": None}
    lines = [f"size: {len(D)}", f"rectangular: {str(rect).lower()}", f"standardizable: {str(ok).lower()}"]
    if bad is not None:
        doc["violation"] = {"a": list(bad.a), "b": list(bad.b), "k": bad.k, "missing": list(bad.missing)}
        lines.append(f"violation: a={_point(bad.a)} b={_point(bad.b)} k={bad.k} missing={_point(bad.missing)}")
    _emit(args, doc, "\n".join(lines))
    return OK


def cmd_standardize(args: argparse.Namespace) -> int:
    with open(args.tableau, encoding="utf-8") as fh:
        t = parse_tableau(fh.read(), args.tableau)
    if not t:
        raise ValueError(f"{args.tableau}: tableau is empty")
    if args.sort:
        t = sort_rows(t)
    elif not is_semi_standard(t):
        raise ValueError(f"{args.tableau}: rows are not weakly increasing in lex order (use --sort)")
    s = standardize(t)
    _emit(args, {"input": [list(r) for r in t], "standard": [list(r) for r in s]}, format_tableau(s))
    return OK


def _verify(args: argparse.Namespace, candidate: BinomialBasis, instance: ToricInstance, doc: dict, lines: list) -> int:
    report = verify_candidate(
        candidate, instance, args.max_degree, x_degree=getattr(args, "x_degree", 1),
        budget=args.budget, backend=args.backend,
    )
    rdoc = report.to_json()
    rdoc.pop("schema")
    doc["verification"] = rdoc
    lines.append("# verification")
    lines.append(report.to_text())
    return OK if report.passed else FAILED


def cmd_fiber_gb(args: argparse.Namespace) -> int:
    D = load_diagram(args.diagram)
    basis = fiber_candidate(D, args.r).with_order(_order(args))
    if args.reduce:
        basis = inter_reduce(basis, backend=args.backend)
    doc: dict[str, Any] = {"r": args.r, "basis": _basis_doc(basis)}
    lines = [_basis_text("interchange binomials" + (", inter-reduced" if args.reduce else ""), basis)]
    code = OK
    if args.verify:
        code = _verify(args, basis, ToricInstance.uniform(D, args.r, FIBER), doc, lines)
    _emit(args, doc, "\n".join(lines))
    return code


def cmd_rees_gb(args: argparse.Namespace) -> int:
    D = load_diagram(args.diagram)
    cand = rees_candidate(D, args.r)
    basis = cand.rees_candidate.with_order(_order(args, REES))
    doc: dict[str, Any] = {
        "r": args.r,
        "fiber_part": len(cand.fiber_part.elements),
        "linear_part": len(cand.linear_part.elements),
        "basis": _basis_doc(basis),
    }
    lines = [_basis_text(f"Rees candidate: {len(cand.fiber_part.elements)} quadrics, "
                         f"{len(cand.linear_part.elements)} linear relations", basis)]
    code = OK
    if args.verify:
        code = _verify(args, basis, cand.instance, doc, lines)
    _emit(args, doc, "\n".join(lines))
    return code


def _oracle_run(args: argparse.Namespace, instance: ToricInstance) -> int:
    order = _order(args, instance.map_kind)
    doc: dict[str, Any] = {"instance": instance.describe(), "max_t_degree": args.max_degree}
    if args.reduced_gb:
        res = reduced_kernel_gb(
            instance, order, args.max_degree, x_degree=args.x_degree, budget=args.budget,
            backend=args.backend, **_limits(args),
        )
        doc.update(basis=_basis_doc(res.basis), stable=res.stable, squarefree_initial=initial_squarefree(res.basis))
        text = "\n".join([
            _basis_text(f"reduced kernel Groebner basis to T-degree {args.max_degree}", res.basis),
            f"stable at degree {args.max_degree + 1}: {str(res.stable).lower()}",
            f"squarefree initial ideal: {str(initial_squarefree(res.basis)).lower()}",
        ])
    else:
        kb = kernel_binomials(instance, args.max_degree, order, x_degree=args.x_degree, budget=args.budget)
        doc.update(basis=_basis_doc(kb))
        text = _basis_text(f"kernel binomials to T-degree {args.max_degree}", kb)
    _emit(args, doc, text)
    return OK


def cmd_oracle(args: argparse.Namespace) -> int:
    D = load_diagram(args.diagram)
    return _oracle_run(args, ToricInstance.uniform(D, args.r, args.map))


def cmd_multi_oracle(args: argparse.Namespace) -> int:
    diagrams = [load_diagram(p) for p in args.diagrams]
    return _oracle_run(args, ToricInstance.collection(diagrams, FIBER))


def cmd_exchange(args: argparse.Namespace) -> int:
    diagrams = [load_diagram(p) for p in args.diagrams]
    ideals = IdealCollection.from_diagrams(diagrams)
    report = exchange_report(ideals, args.weight_bound)
    report.pop("schema")
    lines = [f"strong exchange up to weight {args.weight_bound}: {str(report['holds']).lower()}"]
    bad = report["counterexample"]
    if bad is not None:
        lines.append(
            f"counterexample: weights={bad['weights']} u={bad['u']['monomial']} "
            f"v={bad['v']['monomial']} q={bad['q']} ({bad['z_q']})"
        )
    _emit(args, report, "\n".join(lines))
    return OK if report["holds"] else FAILED


# -- regression suite --------------------------------------------------------------------------

def _suite_items(args: argparse.Namespace) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    backend = args.backend

    def sigma_pair():
        c = sigma_cmp((1, 2), (2, 1))
        return c == GREATER, f"cmp((1,2),(2,1)) = {c}"

    def xlex_pair():
        x = lambda i, j: Monomial.of(XVar(i, j))  # noqa: E731
        ok = XLEX.cmp(x(1, 1), x(1, 2)) == GREATER and XLEX.cmp(x(1, 9), x(2, 1)) == GREATER
        return ok, "x[1,1] > x[1,2] and x[1,9] > x[2,1]"

    def ex36_check():
        D = fixtures.ex36()
        ok, _ = is_standardizable(D)
        return ok and len(D) == 20 and not is_rectangular(D), f"{len(D)} points, standardizable {ok}"

    def table2_support():
        col = sorted(support(fixtures.TABLE2_A)[4].elements())
        return col == [1, 1, 2, 3, 4, 5, 6, 6, 6, 7, 7, 8], f"column 5 = {col}"

    def table2_semi():
        a, b = is_semi_standard(fixtures.TABLE2_A), is_semi_standard(fixtures.TABLE2_B)
        return a and b, f"A {a}, B {b}"

    def table2_standardize():
        t0 = time.perf_counter()
        out = standardize(fixtures.TABLE2_A)
        ms = 1000 * (time.perf_counter() - t0)
        return out == fixtures.TABLE2_B, f"{ms:.2f} ms"

    def table2_standard():
        a, b = is_standard(fixtures.TABLE2_A), is_standard(fixtures.TABLE2_B)
        return (not a) and b, f"A standard {a}, B standard {b}"

    def ex34_not_standardizable():
        D = fixtures.ex34()
        ok, bad = is_standardizable(D)
        return (not ok) and len(D) == 95, f"{len(D)} points, violation {bad}"

    def ex34_gb():
        inst = ToricInstance.uniform(fixtures.ex34(), 1, FIBER)
        tried = []
        for name in ("sigma", "plain-lex-t"):
            res = reduced_kernel_gb(inst, MonomialOrder(name), 3, backend=backend)
            cubics = degree_count(res.basis, 3)
            tried.append(f"{name}: {cubics} cubics, stable {res.stable}")
            if cubics == 25 and res.stable:
                return True, "; ".join(tried)
        return False, "; ".join(tried)

    def ex34_candidate():
        D = fixtures.ex34()
        cand = fiber_candidate(D, 1)
        gb = is_groebner(cand, backend=backend)
        rep = verify_candidate(cand, ToricInstance.uniform(D, 1, FIBER), 3, max_witnesses=1, backend=backend)
        ok = (not gb.is_groebner) and rep.sound and not rep.complete_at_degree
        return ok, f"is_groebner {gb.is_groebner}, complete at degree 3 {rep.complete_at_degree}"

    def ex511_gb():
        inst = ToricInstance.collection(fixtures.ex511(), FIBER)
        res = reduced_kernel_gb(inst, None, 3, backend=backend)
        cubics = degree_count(res.basis, 3)
        return cubics == 4 and res.stable, f"{cubics} cubics, stable {res.stable}"

    def squarefree_leads():
        cand = fiber_candidate(fixtures.ex36(), 2)
        return initial_squarefree(cand), f"{len(cand.elements)} interchange binomials"

    return [
        ("sigma order on (1,2) and (2,1)", sigma_pair),
        ("xlex order on x-variables", xlex_pair),
        ("20-point diagram is standardizable", ex36_check),
        ("12x5 tableau column support", table2_support),
        ("12x5 tableaux are semi-standard", table2_semi),
        ("12x5 tableau standardization", table2_standardize),
        ("12x5 tableau standardness", table2_standard),
        ("95-point diagram is not standardizable", ex34_not_standardizable),
        ("95-point diagram: 25 cubic kernel generators", ex34_gb),
        ("95-point diagram: interchange quadrics are not a Groebner basis", ex34_candidate),
        ("two planar diagrams: 4 cubic kernel generators", ex511_gb),
        ("interchange binomials have squarefree leads", squarefree_leads),
    ]


def cmd_regression_suite(args: argparse.Namespace) -> int:
    results = []
    for name, fn in _suite_items(args):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except LimitError as exc:
            ok, detail = False, f"limit: {exc}"
        results.append({"name": name, "passed": ok, "detail": detail, "seconds": round(time.perf_counter() - t0, 3)})
    failed = sum(not r["passed"] for r in results)
    if args.format == "json":
        print(json.dumps({"schema": 1, "results": results, "failed": failed}, indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']}  [{r['detail']}]")
        print(f"{len(results) - failed}/{len(results)} passed")
    return FAILED if failed else OK


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--order", choices=("sigma", "plain-lex-t", "product"), default="sigma")
    common.add_argument("--backend", choices=sorted(BACKENDS), default=None,
                        help="reduction kernel (default: compiled when available)")
    common.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET,
                        help="maximum monomials enumerated per degree slice")
    common.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS)
    common.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    p = argparse.ArgumentParser(prog="ferrers-rees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("closure", parents=[common], help="points and maximal points of a diagram")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("check", parents=[common], help="rectangular / standardizable tests")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("standardize", parents=[common], help="standard form of a tableau file")
    s.add_argument("tableau")
    s.add_argument("--sort", action="store_true", help="sort rows first instead of rejecting unsorted input")
    s.set_defaults(func=cmd_standardize)

    def degree_opts(sp, x=False):
        sp.add_argument("--max-degree", type=int, default=3)
        if x:
            sp.add_argument("--x-degree", type=int, default=1, help="x-multiplier degree bound in Rees mode")

    s = sub.add_parser("fiber-gb", parents=[common], help="interchange binomials of D x [r]")
    s.add_argument("diagram")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--reduce", action="store_true")
    s.add_argument("--verify", action="store_true")
    degree_opts(s)
    s.set_defaults(func=cmd_fiber_gb)

    s = sub.add_parser("rees-gb", parents=[common], help="interchange binomials plus linear relations")
    s.add_argument("diagram")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--verify", action="store_true")
    degree_opts(s, x=True)
    s.set_defaults(func=cmd_rees_gb)

    s = sub.add_parser("oracle", parents=[common], help="brute-force toric kernel")
    s.add_argument("diagram")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--map", choices=(FIBER, REES), default=FIBER)
    s.add_argument("--reduced-gb", action="store_true")
    degree_opts(s, x=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("multi-oracle", parents=[common], help="fiber kernel of several diagrams")
    s.add_argument("diagrams", nargs="+")
    s.add_argument("--reduced-gb", action="store_true")
    degree_opts(s, x=True)
    s.set_defaults(func=cmd_multi_oracle)

    s = sub.add_parser("exchange", parents=[common], help="bounded strong exchange check")
    s.add_argument("diagrams", nargs="+")
    s.add_argument("--weight-bound", type=int, default=3)
    s.set_defaults(func=cmd_exchange)

    s = sub.add_parser("paper-suite", parents=[common], help="built-in regressions")
    s.set_defaults(func=cmd_regression_suite)
    return p


def _check_args(args: argparse.Namespace) -> None:
    for name in ("r", "max_degree", "weight_bound", "budget", "max_basis", "max_pairs"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise ValueError(f"--{name.replace('_', '-')} must be positive")
    if getattr(args, "x_degree", 0) < 0:
        raise ValueError("--x-degree must be nonnegative")
    if getattr(args, "max_degree", 2) < 2:
        raise ValueError("--max-degree must be at least 2")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        _check_args(args)
        return args.func(args)
    except LimitError as exc:
        print(f"ferrers-rees: limit reached: {exc}", file=sys.stderr)
        return LIMIT
    except (ValueError, OSError) as exc:
        print(f"ferrers-rees: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
