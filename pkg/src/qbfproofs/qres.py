"""Q-resolution and QU-resolution: ∀-reduction, resolvents and a refutation checker."""

from __future__ import annotations

from dataclasses import dataclass

from .core import QCNF, Clause, format_literals, make_clause
from .errors import FormatError, InferenceError, UnboundVariableError
from .proof import (
    LEAF,
    REDUCTION,
    RESOLUTION,
    CheckReport,
    Diagnostic,
    Node,
    clashes,
    parse_trace,
    serialize_trace,
    summarize,
    tautological,
    clash_beyond,
    paused_gc,
)

Q = "q"
QU = "qu"
MODES = (Q, QU)


def _lookup(table: dict, lits):
    try:
        return list(map(table.__getitem__, lits))
    except KeyError as e:
        raise UnboundVariableError(f"variable {abs(e.args[0])} is not bound by the prefix") from None


def forall_reduce(f: QCNF, c: Clause) -> Clause:
    """Drop every universal literal not blocked by a higher-level existential in ``c``."""
    c = make_clause(c)
    top = max(_lookup(f.prefix.exist_level, c), default=0)
    ulev = f.prefix.univ_level
    return frozenset(l for l in c if not ulev[l] or ulev[l] < top)


def q_resolvent(f: QCNF, c1: Clause, c2: Clause, pivot: int, mode: str = Q) -> Clause | None:
    """Q-resolvent (or QU-resolvent with ``mode="qu"``) of two clauses on ``pivot``.

    Returns ``None`` when the resolvent is undefined because the merged clause
    is tautological.  Raises :class:`InferenceError` if the pivot does not clash
    or, in Q mode, is universal.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    p = abs(pivot)
    c1, c2 = make_clause(c1), make_clause(c2)
    if not clashes(c1, c2, p):
        raise InferenceError("missing-pivot", f"pivot {p} does not occur with opposite signs")
    if mode == Q and f.is_universal(p):
        raise InferenceError("universal-pivot", f"universal pivot {p} in q-resolution mode")
    cu = (c1 | c2) - {p, -p}
    if tautological(cu):
        return None
    return forall_reduce(f, cu)


@dataclass(frozen=True)
class ClauseProof:
    formula: QCNF
    nodes: tuple[Node, ...]
    mode: str = Q

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def root(self) -> int:
        return self.nodes[-1].id

    def clause(self, nid: int) -> Clause:
        return next(n.literals for n in self.nodes if n.id == nid)


def check_clause_proof(p: ClauseProof) -> CheckReport:
    """Recompute every node of a clause proof and collect diagnostics.

    Input leaves must be matrix clauses, either as given or ∀-reduced.  A
    resolution node may store the plain merged clause or its ∀-reduction; in
    the latter case the silently removed literals count towards the size, like
    explicit single-literal reduction nodes do.
    """
    with paused_gc():
        return _check_clause_proof(p)


def _check_clause_proof(p: ClauseProof) -> CheckReport:
    f, mode = p.formula, p.mode
    pre = f.prefix
    elev, ulev, bound = pre.exist_level, pre.univ_level, pre.literals
    inputs = set(f.matrix)
    for c in f.matrix:
        inputs.add(forall_reduce(f, c))

    diags: list[Diagnostic] = []
    by_id: dict[int, Node] = {}
    implicit: dict[int, int] = {}
    unbound: set[int] = set()
    taut: set[int] = set()  # nodes whose clause holds complementary literals
    last = 0

    def bad(n: Node, code: str, msg: str):
        diags.append(Diagnostic(n.id, code, msg))

    for n in p.nodes:
        if n.id <= last:
            bad(n, "id-order", f"id {n.id} does not increase")
        last = max(last, n.id)
        lits = n.literals
        missing = [a for a in n.antecedents if a not in by_id or a in unbound]
        by_id[n.id] = n
        if not lits <= bound:
            unbound.add(n.id)
            bad(n, "unbound-variable", f"unbound variable in {format_literals(lits)}")
            continue
        if missing:
            bad(n, "bad-antecedent", f"antecedent {missing[0]} does not precede node or is malformed")
            continue
        if n.kind == LEAF:
            if n.antecedents:
                bad(n, "bad-antecedent", "leaf with antecedents")
            elif lits not in inputs:
                bad(n, "not-input", f"clause {format_literals(lits)} is not in the matrix")
            elif tautological(lits):
                taut.add(n.id)
        elif n.kind == REDUCTION:
            child = by_id[n.antecedents[0]].literals
            l = n.removed
            if len(n.antecedents) != 1 or l is None:
                bad(n, "bad-antecedent", "reduction needs one antecedent and a removed literal")
            elif l not in child:
                bad(n, "wrong-result", f"removed literal {l} not in antecedent")
            elif not ulev[l]:
                bad(n, "not-universal", f"reduced literal {l} is existential")
            elif max(map(elev.__getitem__, child)) > ulev[l]:
                bad(n, "blocked-reduction", f"literal {l} is blocked by a higher existential")
            elif lits != child - {l}:
                bad(n, "wrong-result", f"stored clause is not antecedent minus {l}")
            elif n.antecedents[0] in taut and tautological(lits):
                taut.add(n.id)
        elif n.kind == RESOLUTION:
            if len(n.antecedents) != 2 or n.pivot is None:
                bad(n, "bad-antecedent", "resolution needs two antecedents and a pivot")
                continue
            a, b = n.antecedents
            if a == b:
                bad(n, "self-resolution", "antecedents are identical")
                continue
            ca, cb, piv = by_id[a].literals, by_id[b].literals, n.pivot
            if not clashes(ca, cb, piv):
                bad(n, "missing-pivot", f"pivot {piv} does not clash between {a} and {b}")
                continue
            if mode == Q and ulev[piv]:
                bad(n, "universal-pivot", f"universal pivot {piv} in q-resolution mode")
                continue
            cu = (ca | cb) - {piv, -piv}
            if clash_beyond(ca, cb, piv) or ((a in taut or b in taut) and tautological(cu)):
                bad(n, "tautology", "resolvent undefined: complementary literals")
            elif lits != cu:
                if lits == forall_reduce(f, cu):
                    implicit[n.id] = len(cu) - len(lits)
                else:
                    bad(n, "wrong-result", f"stored clause differs from resolvent {format_literals(cu)}")
        else:
            bad(n, "bad-kind", f"unknown node kind {n.kind!r}")

    return summarize(p.nodes, p.root, diags, implicit)


def serialize_clause_proof(p: ClauseProof) -> str:
    return serialize_trace("qpt", p.formula.num_vars, list(p.nodes))


def parse_clause_proof(text: str | bytes, formula: QCNF, mode: str = Q) -> ClauseProof:
    num_vars, nodes = parse_trace(text, "qpt")
    if num_vars != formula.num_vars:
        raise FormatError(f"trace declares {num_vars} variables, formula has {formula.num_vars}")
    return ClauseProof(formula, tuple(nodes), mode)
