"""Command line entry point.

Exit status: 0 on success or an accepted proof, 1 when a checker rejects (or a
requested proof does not exist), 2 on usage and format errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import bce as bce_mod
from .core import parse_qdimacs, serialize_qdimacs
from .errors import FormulaFalse, QbfError
from .families import (
    definitions_comment,
    emit_definition_refutation,
    emit_linear_refutation,
    gen_definitions,
    gen_iff,
    iff_comment,
    parse_circuit,
)
from .negation import format_indicator_map, negate
from .oracle import EVAL_BUDGET, evaluate, prove_by_expansion
from .qres import MODES, check_clause_proof, parse_clause_proof, serialize_clause_proof
from .term import check_term_proof, min_universal_literals, parse_term_proof, serialize_term_proof
from .translate import translate


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _formula(path: str | None):
    return parse_qdimacs(_read(path))


def cmd_gen(args) -> int:
    if args.family == "iff":
        f = gen_iff(args.n)
        _write(args.output, serialize_qdimacs(f, [iff_comment(args.n)]))
    elif args.family == "defs":
        c = parse_circuit(_read(args.circuit))
        _write(args.output, serialize_qdimacs(gen_definitions(c), [definitions_comment(c)]))
    else:
        from .corpus import random_qcnf

        f = random_qcnf(random.Random(args.seed), args.vars, args.clauses, args.max_len)
        note = f"generated-by qbfproofs gen random --seed {args.seed} (test tooling)"
        _write(args.output, serialize_qdimacs(f, [note]))
    return 0


def cmd_negate(args) -> int:
    neg = negate(_formula(args.input))
    _write(args.output, serialize_qdimacs(neg.negated))
    if args.map:
        _write(args.map, format_indicator_map(neg))
    return 0


def cmd_bce(args) -> int:
    trace = bce_mod.eliminate_blocked(_formula(args.input))
    _write(args.output, serialize_qdimacs(trace.residual))
    if args.trace:
        _write(args.trace, bce_mod.format_trace(trace))
    return 0


def cmd_eval(args) -> int:
    print("true" if evaluate(_formula(args.input), args.budget) else "false")
    return 0


def cmd_prove_term(args) -> int:
    try:
        p = prove_by_expansion(_formula(args.input), args.budget)
    except FormulaFalse as e:
        print(f"false: {e}", file=sys.stderr)
        return 1
    _write(args.output, serialize_term_proof(p))
    return 0


def cmd_translate(args) -> int:
    f = _formula(args.formula)
    p = parse_term_proof(_read(args.proof), f)
    if not check_term_proof(p).proves:
        print("rejected: input is not a term proof of the formula", file=sys.stderr)
        return 1
    neg = negate(f)
    out, report = translate(f, p, neg)
    _write(args.output, serialize_clause_proof(out))
    if args.negated:
        _write(args.negated, serialize_qdimacs(neg.negated))
    if args.report:
        _write(args.report, report.to_text())
    else:
        sys.stderr.write(report.to_text())
    return 0


def cmd_emit(args) -> int:
    if args.which in ("fig1", "linear"):
        p = emit_linear_refutation(args.n)
    else:
        p = emit_definition_refutation(parse_circuit(_read(args.circuit)))
    _write(args.output, serialize_clause_proof(p))
    return 0


def cmd_check(args) -> int:
    f = _formula(args.formula)
    text = _read(args.proof)
    header = next((l.split() for l in text.splitlines() if l.strip() and not l.startswith("c")), [])
    if header[:2] == ["p", "tpt"]:
        rep = check_term_proof(parse_term_proof(text, f))
        extra = f", leaves={rep.leaves}"
    else:
        rep = check_clause_proof(parse_clause_proof(text, f, args.mode))
        extra = ""
    if rep.proves:
        print(f"accepted, size={rep.size}{extra}")
        return 0
    print("rejected")
    for d in rep.diagnostics[: args.max_diagnostics]:
        print(d, file=sys.stderr)
    if rep.valid:
        print("root is not empty", file=sys.stderr)
    return 1


def cmd_analyze(args) -> int:
    k = min_universal_literals(_formula(args.input), args.cap)
    print(f"min_universal={k}")
    print(f"leaf_lower_bound={2 ** k}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qbfproofs", description="QBF proof systems toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def out(p):
        p.add_argument("-o", "--output", help="output file (default: stdout)")

    p = sub.add_parser("gen", help="generate a formula family")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("iff")
    q.add_argument("--n", type=int, required=True)
    out(q)
    q = fam.add_parser("defs")
    q.add_argument("--circuit", required=True)
    out(q)
    q = fam.add_parser("random", help="random small QCNF (test tooling)")
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--vars", type=int, default=6)
    q.add_argument("--clauses", type=int, default=5)
    q.add_argument("--max-len", type=int, default=3)
    out(q)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("negate", help="negate a QDIMACS formula")
    p.add_argument("input", nargs="?")
    p.add_argument("--map", help="write the clause -> indicator sidecar here")
    out(p)
    p.set_defaults(func=cmd_negate)

    p = sub.add_parser("bce", help="blocked clause elimination")
    p.add_argument("input", nargs="?")
    p.add_argument("--trace", help="write the elimination trace here")
    out(p)
    p.set_defaults(func=cmd_bce)

    p = sub.add_parser("eval", help="brute-force truth value")
    p.add_argument("input", nargs="?")
    p.add_argument("--budget", type=int, default=EVAL_BUDGET)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("prove-term", help="term proof by expansion")
    p.add_argument("input", nargs="?")
    p.add_argument("--budget", type=int, default=EVAL_BUDGET)
    out(p)
    p.set_defaults(func=cmd_prove_term)

    p = sub.add_parser("translate", help="term proof -> refutation of the negation")
    p.add_argument("--formula", required=True)
    p.add_argument("--proof", required=True)
    p.add_argument("--report", help="key=value report file (default: stderr)")
    p.add_argument("--negated", help="also write the negated formula here")
    out(p)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("emit", help="emit an explicit refutation")
    which = p.add_subparsers(dest="which", required=True)
    q = which.add_parser("fig1", aliases=["linear"], help="7N-step refutation of the negated iff formula")
    q.add_argument("--n", type=int, required=True)
    out(q)
    q = which.add_parser("fig2", aliases=["definitions"], help="QU-refutation of negated circuit definitions")
    q.add_argument("--circuit", required=True)
    out(q)
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("check", help="check a qpt/tpt proof trace")
    p.add_argument("proof", nargs="?")
    p.add_argument("--formula", required=True)
    p.add_argument("--mode", choices=MODES, default="q")
    p.add_argument("--max-diagnostics", type=int, default=10)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="model analysis")
    p.add_argument("input", nargs="?")
    p.add_argument("--min-universal", action="store_true", required=True)
    p.add_argument("--cap", type=int, default=14)
    p.set_defaults(func=cmd_analyze)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QbfError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
