"""Term-resolution: ∃-reduction, term resolvents, model leaves and proof checking.

Also holds the analysis tools built on top of checked term proofs: the
agreement walk from the root to a leaf, and the minimum number of universal
literals over all models of a matrix, which bounds the leaf count from below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .core import QCNF, Term, first_unhit_clause, format_literals, is_tautology, make_clause
from .errors import BudgetExceeded, FormatError, InferenceError, UnboundVariableError
from .proof import (
    LEAF,
    REDUCTION,
    RESOLUTION,
    CheckReport,
    Diagnostic,
    Node,
    clashes,
    index_nodes,
    parse_trace,
    serialize_trace,
    summarize,
    tautological,
    clash_beyond,
    paused_gc,
)


def exists_reduce(f: QCNF, t: Term) -> Term:
    """Drop every existential literal not blocked by a higher-level universal in ``t``."""
    t = make_clause(t)
    try:
        top = max(map(f.prefix.univ_level.__getitem__, t), default=0)
    except KeyError as e:
        raise UnboundVariableError(f"variable {abs(e.args[0])} is not bound by the prefix") from None
    elev = f.prefix.exist_level
    return frozenset(l for l in t if not elev[l] or elev[l] < top)


def term_resolvent(f: QCNF, t1: Term, t2: Term, pivot: int) -> Term | None:
    """∃-reduced resolvent of two terms on a universal pivot; ``None`` if undefined."""
    p = abs(pivot)
    t1, t2 = make_clause(t1), make_clause(t2)
    if not clashes(t1, t2, p):
        raise InferenceError("missing-pivot", f"pivot {p} does not occur with opposite signs")
    if not f.is_universal(p):
        raise InferenceError("existential-pivot", f"term resolution on existential {p}")
    tu = (t1 | t2) - {p, -p}
    if tautological(tu):
        return None
    return exists_reduce(f, tu)


@dataclass(frozen=True)
class TermProof:
    formula: QCNF
    nodes: tuple[Node, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @property
    def root(self) -> int:
        return self.nodes[-1].id

    def term(self, nid: int) -> Term:
        return next(n.literals for n in self.nodes if n.id == nid)


def check_term_proof(p: TermProof) -> CheckReport:
    """Check a term proof: model leaves, ∃-reductions and term resolutions.

    ``report.valid`` says every node is correct; ``report.proves`` additionally
    requires the root to be the empty term.  Resolution antecedents must be
    ∃-reduced.
    """
    with paused_gc():
        return _check_term_proof(p)


def _check_term_proof(p: TermProof) -> CheckReport:
    f = p.formula
    pre = f.prefix
    elev, ulev, bound = pre.exist_level, pre.univ_level, pre.literals
    diags: list[Diagnostic] = []
    by_id: dict[int, Node] = {}
    broken: set[int] = set()
    implicit: dict[int, int] = {}
    last = 0

    def bad(n: Node, code: str, msg: str):
        diags.append(Diagnostic(n.id, code, msg))

    def reduced(t: frozenset) -> bool:
        top = max(map(ulev.__getitem__, t), default=0)
        return all(not elev[l] or elev[l] < top for l in t)

    for n in p.nodes:
        if n.id <= last:
            bad(n, "id-order", f"id {n.id} does not increase")
        last = max(last, n.id)
        lits = n.literals
        missing = [a for a in n.antecedents if a not in by_id or a in broken]
        by_id[n.id] = n
        if not lits <= bound:
            broken.add(n.id)
            bad(n, "unbound-variable", f"unbound variable in {format_literals(lits)}")
            continue
        if is_tautology(lits):
            broken.add(n.id)
            bad(n, "inconsistent", f"term {format_literals(lits)} holds complementary literals")
            continue
        if missing:
            bad(n, "bad-antecedent", f"antecedent {missing[0]} does not precede node or is malformed")
            continue
        if n.kind == LEAF:
            i = first_unhit_clause(f.matrix, lits)
            if n.antecedents:
                bad(n, "bad-antecedent", "leaf with antecedents")
            elif i is not None:
                bad(n, "not-model", f"leaf is not a model: clause {i + 1} ({format_literals(f.matrix[i])}) is not hit")
        elif n.kind == REDUCTION:
            child = by_id[n.antecedents[0]].literals
            l = n.removed
            if len(n.antecedents) != 1 or l is None:
                bad(n, "bad-antecedent", "reduction needs one antecedent and a removed literal")
            elif l not in child:
                bad(n, "wrong-result", f"removed literal {l} not in antecedent")
            elif not elev[l]:
                bad(n, "not-existential", f"reduced literal {l} is universal")
            elif max(map(ulev.__getitem__, child)) > elev[l]:
                bad(n, "blocked-reduction", f"literal {l} is blocked by a higher universal")
            elif lits != child - {l}:
                bad(n, "wrong-result", f"stored term is not antecedent minus {l}")
        elif n.kind == RESOLUTION:
            if len(n.antecedents) != 2 or n.pivot is None:
                bad(n, "bad-antecedent", "resolution needs two antecedents and a pivot")
                continue
            a, b = n.antecedents
            if a == b:
                bad(n, "self-resolution", "antecedents are identical")
                continue
            ta, tb, piv = by_id[a].literals, by_id[b].literals, n.pivot
            if not clashes(ta, tb, piv):
                bad(n, "missing-pivot", f"pivot {piv} does not clash between {a} and {b}")
            elif not ulev[piv]:
                bad(n, "existential-pivot", f"existential pivot {piv} in term resolution")
            elif not (reduced(ta) and reduced(tb)):
                bad(n, "unreduced-antecedent", "antecedents must be ∃-reduced")
            else:
                tu = (ta | tb) - {piv, -piv}
                if clash_beyond(ta, tb, piv):
                    bad(n, "tautology", "resolvent undefined: complementary literals")
                elif lits != tu:
                    if lits == exists_reduce(f, tu):
                        implicit[n.id] = len(tu) - len(lits)
                    else:
                        bad(n, "wrong-result", f"stored term differs from resolvent {format_literals(tu)}")
        else:
            bad(n, "bad-kind", f"unknown node kind {n.kind!r}")

    return summarize(p.nodes, p.root, diags, implicit)


def agrees(t: Term, tau: Mapping[int, bool]) -> bool:
    """No literal of ``t`` is falsified by the (partial) assignment ``tau``."""
    for l in t:
        val = tau.get(abs(l))
        if val is not None and val != (l > 0):
            return False
    return True


def find_agreeing_leaf(p: TermProof, tau: Mapping[int, bool]) -> int:
    """Walk from the root towards a leaf, staying on terms that agree with ``tau``.

    ``tau`` must assign every universal variable; the proof must be valid.
    At a resolution the left antecedent is preferred when both agree.
    """
    by_id = index_nodes(p.nodes)
    node = by_id[p.root]
    assert agrees(node.literals, tau), "root disagrees with the assignment"
    while not node.is_leaf:
        if node.kind == REDUCTION:
            node = by_id[node.antecedents[0]]
        else:
            left, right = (by_id[a] for a in node.antecedents)
            node = left if agrees(left.literals, tau) else right
        assert agrees(node.literals, tau), f"no agreeing antecedent below node {node.id}"
    return node.id


def min_universal_literals(f: QCNF, cap: int = 14) -> int:
    """Fewest universal literals in any model of the matrix of ``f``.

    Every term proof of ``f`` then has at least ``2**k`` leaves.  Since adding
    existential literals never costs universal ones, it suffices to try every
    total existential assignment and, for each, the smallest consistent set of
    universal literals hitting the remaining clauses.
    """
    n = len(f.variables)
    if n > cap:
        raise BudgetExceeded(f"{n} variables exceed the enumeration cap of {cap}")
    if any(not c for c in f.matrix):
        raise ValueError("matrix has an empty clause and no models")
    ex = [v for v in f.variables if f.is_existential(v)]
    un = list(f.universals)
    best = None
    for bits in itertools.product((1, -1), repeat=len(ex)):
        chosen = {s * v for s, v in zip(bits, ex)}
        rest = [c for c in f.matrix if c.isdisjoint(chosen)]
        k = _min_hitting(rest, un, best)
        if k is not None and (best is None or k < best):
            best = k
            if best == 0:
                break
    if best is None:
        raise ValueError("matrix has no models")
    return best


def _min_hitting(clauses, universals, bound):
    if not clauses:
        return 0
    limit = len(universals) if bound is None else min(bound - 1, len(universals))
    for k in range(1, limit + 1):
        for vs in itertools.combinations(universals, k):
            for signs in itertools.product((1, -1), repeat=k):
                t = {s * v for s, v in zip(signs, vs)}
                if all(not c.isdisjoint(t) for c in clauses):
                    return k
    return None


def serialize_term_proof(p: TermProof) -> str:
    return serialize_trace("tpt", p.formula.num_vars, list(p.nodes))


def parse_term_proof(text: str | bytes, formula: QCNF) -> TermProof:
    num_vars, nodes = parse_trace(text, "tpt")
    if num_vars != formula.num_vars:
        raise FormatError(f"trace declares {num_vars} variables, formula has {formula.num_vars}")
    return TermProof(formula, tuple(nodes))
