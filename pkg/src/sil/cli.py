"""Command line interface.

Every subcommand prints a human-readable summary by default and a
byte-deterministic JSON report with --json.  Exit codes: 0 success,
1 computation error (failed predicate, bad arguments), 2 parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from ._version import __version__
from .algebra import (
    AlgebraGenerators,
    algebra_generators_up_to,
    conjecture_experiment,
)
from .closure import (
    ClosureBoundInput,
    closure_algebra_generators,
    closure_membership,
    cone_of,
)
from .decompose import Decomposition, decompose
from .graphs import (
    StructureError,
    bipartite_lower_bound,
    classify_standard_graded,
    graph_from_ideal,
    is_bipartite,
)
from .monomials import ContextMismatchError, Monomial, MonomialIdeal
from .symbolic import powers_coincide, symbolic_membership, symbolic_power, symbolic_witness
from .textio import (
    ParseError,
    ReportDocument,
    emit_json,
    parse_ideal,
    parse_monomial,
    render_ideal,
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--vars", help="comma-separated variable names fixing the context")
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker cap for batch evaluation; output is identical for any value "
        "(SIL_THREADS overrides)",
    )

    parser = argparse.ArgumentParser(
        prog="sil",
        description="Exact symbolic powers of monomial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"sil {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def expr_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("expr", help="ideal expression, or @path to read it from a file")
        return p

    expr_command("decompose", "irreducible and primary decomposition")

    p = expr_command("symbolic", "minimal generators of the k-th symbolic power")
    p.add_argument("-k", type=int, required=True)

    p = expr_command("compare", "ordinary vs symbolic k-th power, with witness")
    p.add_argument("-k", type=int, required=True)

    expr_command("classify", "standard-gradedness classification")

    p = expr_command("gens", "algebra generator table and degree")
    p.add_argument("--max-degree", type=int, default=None)

    p = expr_command("closure-gens", "closure algebra generator table and degree")
    p.add_argument("--max-degree", type=int, default=None)

    p = expr_command("member", "symbolic (or closure) membership of a monomial")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", "--monomial", required=True)
    p.add_argument("--closure", action="store_true")

    expr_command("bounds", "bipartite lower bound and closure upper bound")

    p = sub.add_parser("conjecture", parents=[common], help="weighted-triangle experiment")
    p.add_argument("weights", type=int, nargs=6, metavar=("a", "b", "c", "d", "e", "f"))
    p.add_argument("--max-degree", type=int, default=None)

    return parser


def _thread_cap(args: argparse.Namespace) -> int:
    env = os.environ.get("SIL_THREADS")
    if env is not None:
        value = int(env)
    elif args.threads is not None:
        value = args.threads
    else:
        value = os.cpu_count() or 1
    if value < 1:
        raise ValueError(f"thread cap must be >= 1, got {value}")
    return value


def _load_expression(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def _decomposed(args: argparse.Namespace) -> tuple[str, Decomposition]:
    text = _load_expression(args.expr)
    expression = parse_ideal(text, args.vars)
    return text, decompose(expression.evaluate())


def _vecs(ideal: MonomialIdeal) -> list[list[int]]:
    return [list(g.exponents) for g in ideal.generators]


def _gen_table(found: AlgebraGenerators) -> list[dict]:
    return [
        {"degree": k, "generators": [list(g.exponents) for g in gens]}
        for k, gens in sorted(found.per_degree.items())
    ]


def _cmd_decompose(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    result = {
        "ideal": _vecs(dec.ideal),
        "irreducible": [list(c.a) for c in dec.irreducibles],
        "primary": [
            {
                "support": list(q.radical_support),
                "pieces": [list(p.a) for p in q.pieces],
                "ideal": _vecs(q.ideal),
            }
            for q in dec.primaries
        ],
        "codimension": dec.codimension(),
        "unmixed": dec.is_unmixed(),
        "generically_complete_intersection": dec.is_generically_ci(),
    }
    names = dec.context.names
    lines = [f"ideal: {render_ideal(dec.ideal)}", "irreducible components:"]
    lines += [f"  {c}" for c in dec.irreducibles]
    lines.append("primary components:")
    for q in dec.primaries:
        support = ", ".join(names[i] for i in q.radical_support)
        lines.append(f"  support {{{support}}}: {render_ideal(q.ideal)}")
    lines.append(
        f"codimension: {dec.codimension()}   unmixed: {_yn(dec.is_unmixed())}   "
        f"generically CI: {_yn(dec.is_generically_ci())}"
    )
    return _doc("decompose", text, dec, result), lines


def _cmd_symbolic(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    power = symbolic_power(dec, args.k)
    result = {"k": args.k, "generators": _vecs(power)}
    lines = [f"I^({args.k}) = {render_ideal(power)}"]
    return _doc("symbolic", text, dec, result), lines


def _cmd_compare(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    ordinary = dec.ideal.power(args.k)
    symbolic = symbolic_power(dec, args.k)
    witness = symbolic_witness(dec, args.k)
    coincide = witness is None and ordinary == symbolic
    result = {
        "k": args.k,
        "coincide": coincide,
        "ordinary": _vecs(ordinary),
        "symbolic": _vecs(symbolic),
        "witness": list(witness.exponents) if witness is not None else None,
    }
    lines = [f"I^{args.k} = {render_ideal(ordinary)}", f"I^({args.k}) = {render_ideal(symbolic)}"]
    if coincide:
        lines.append(f"the powers coincide at k = {args.k}")
    else:
        lines.append(f"the powers differ; witness in I^({args.k}) \\ I^{args.k}: {witness}")
    return _doc("compare", text, dec, result), lines


def _cmd_classify(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    outcome = classify_standard_graded(dec)
    certificate = is_bipartite(graph_from_ideal(dec))
    trivial = outcome.trivial_modification
    result = {
        "standard_graded": outcome.standard_graded,
        "bipartite": outcome.bipartite,
        "odd_cycle": list(certificate.odd_cycle) if certificate.odd_cycle else None,
        "trivial_modification": list(trivial.entries) if trivial else None,
        "witness": list(outcome.witness.exponents) if outcome.witness else None,
    }
    lines = [
        f"standard graded: {_yn(outcome.standard_graded)}",
        f"bipartite: {_yn(outcome.bipartite)}",
        "trivial modification: "
        + (str(list(trivial.entries)) if trivial else "none"),
    ]
    if outcome.witness is not None:
        lines.append(f"witness in I^(2) \\ I^2: {outcome.witness}")
    return _doc("classify", text, dec, result), lines


def _search_report(command: str, text: str, dec: Decomposition, found: AlgebraGenerators,
                   extra: dict | None = None) -> tuple[ReportDocument, list[str]]:
    degree = found.degree_result()
    result = {
        "searched_up_to": found.searched_up_to,
        "degree": degree.value,
        "conclusive": degree.conclusive,
        "new_generators": _gen_table(found),
    }
    if extra:
        result.update(extra)
    lines = []
    for k, gens in sorted(found.per_degree.items()):
        shown = ", ".join(str(g) for g in gens) if gens else "-"
        lines.append(f"degree {k}: {shown}")
    lines.append(
        f"highest generator degree: {degree.value} "
        f"({'conclusive' if degree.conclusive else 'inconclusive'}, searched to {found.searched_up_to})"
    )
    return _doc(command, text, dec, result), lines


def _cmd_gens(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    found = algebra_generators_up_to(dec, args.max_degree)
    return _search_report("gens", text, dec, found)


def _cmd_closure_gens(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    found = closure_algebra_generators(dec, args.max_degree)
    bound_input = ClosureBoundInput.from_decomposition(dec)
    extra = {
        "upper_bound": {"n": bound_input.n, "d": bound_input.d, "value": bound_input.bound()}
    }
    doc, lines = _search_report("closure-gens", text, dec, found, extra)
    lines.append(f"closure degree bound: {bound_input.bound()}")
    return doc, lines


def _cmd_member(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    monomial = parse_monomial(args.monomial, dec.context)
    if args.closure:
        verdict = closure_membership(monomial, args.k, cone_of(dec))
        where = f"closure component at degree {args.k}"
    else:
        verdict = symbolic_membership(monomial, dec, args.k)
        where = f"I^({args.k})"
    result = {
        "monomial": list(monomial.exponents),
        "k": args.k,
        "closure": args.closure,
        "member": verdict,
    }
    lines = [f"{monomial} {'lies in' if verdict else 'does not lie in'} {where}"]
    return _doc("member", text, dec, result), lines


def _cmd_bounds(args) -> tuple[ReportDocument, list[str]]:
    text, dec = _decomposed(args)
    lower = None
    reason = None
    try:
        lower = bipartite_lower_bound(graph_from_ideal(dec))
    except StructureError as exc:
        reason = str(exc)
    bound_input = ClosureBoundInput.from_decomposition(dec)
    result = {
        "bipartite_lower_bound": lower,
        "lower_bound_unavailable": reason,
        "upper_bound": {"n": bound_input.n, "d": bound_input.d, "value": bound_input.bound()},
    }
    lines = []
    if lower is not None:
        lines.append(f"bipartite lower bound for the algebra degree: {lower}")
    else:
        lines.append(f"bipartite lower bound not applicable: {reason}")
    lines.append(
        f"closure degree bound (n={bound_input.n}, d={bound_input.d}): {bound_input.bound()}"
    )
    return _doc("bounds", text, dec, result), lines


def _cmd_conjecture(args) -> tuple[ReportDocument, list[str]]:
    report = conjecture_experiment(*args.weights, max_degree=args.max_degree)
    attained = report.bound_attained
    result = {
        "weights": list(report.weights),
        "ideal": _vecs(report.ideal),
        "conjectured_bound": report.conjectured_bound,
        "computed_degree": report.degree.value,
        "conclusive": report.degree.conclusive,
        "bound_attained": attained,
    }
    doc = ReportDocument(
        command="conjecture",
        input_text=" ".join(str(w) for w in report.weights),
        variables=report.ideal.context.names,
        result=result,
    )
    lines = [
        f"ideal: {render_ideal(report.ideal)}",
        f"computed algebra degree: {report.degree.value} "
        f"({'conclusive' if report.degree.conclusive else 'inconclusive'})",
        f"conjectured lower bound max{{a,...,f}}: {report.conjectured_bound}",
    ]
    if attained is True:
        lines.append("observed degree meets the conjectured bound")
    elif attained is False:
        lines.append("observed degree stays below the conjectured bound")
    else:
        lines.append("bound comparison undecided: the search was inconclusive")
    return doc, lines


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _doc(command: str, text: str, dec: Decomposition, result: dict) -> ReportDocument:
    return ReportDocument(
        command=command,
        input_text=text,
        variables=dec.context.names,
        result=result,
    )


_HANDLERS = {
    "decompose": _cmd_decompose,
    "symbolic": _cmd_symbolic,
    "compare": _cmd_compare,
    "classify": _cmd_classify,
    "gens": _cmd_gens,
    "closure-gens": _cmd_closure_gens,
    "member": _cmd_member,
    "bounds": _cmd_bounds,
    "conjecture": _cmd_conjecture,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _thread_cap(args)
        document, lines = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (StructureError, ContextMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        sys.stdout.buffer.write(emit_json(document))
    else:
        print("\n".join(lines))
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
