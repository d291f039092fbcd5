"""Brute-force ground truth for small formulas.

Everything here is exponential on purpose and guarded by a variable budget.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .core import EXISTS, QCNF, Clause, Term, make_term
from .errors import BudgetExceeded, FormulaFalse
from .proof import ProofBuilder
from .term import TermProof, exists_reduce

EVAL_BUDGET = 20
ENUM_BUDGET = 14


def _budget(n: int, cap: int):
    if n > cap:
        raise BudgetExceeded(f"{n} variables exceed the budget of {cap}")


def _assign(clauses: list[frozenset], lit: int) -> list[frozenset] | None:
    """Simplify by setting ``lit`` true; ``None`` if a clause becomes empty."""
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def _eval(order: Sequence[tuple[int, str]], i: int, clauses: list[frozenset] | None) -> bool:
    if clauses is None:
        return False
    if not clauses:
        return True
    v, q = order[i]
    if not any(v in c or -v in c for c in clauses):
        return _eval(order, i + 1, clauses)
    branches = (_eval(order, i + 1, _assign(clauses, lit)) for lit in (-v, v))
    return any(branches) if q == EXISTS else all(branches)


def evaluate(f: QCNF, max_vars: int = EVAL_BUDGET) -> bool:
    """Truth value of ``f`` by expanding the prefix outermost first."""
    _budget(len(f.variables), max_vars)
    if f.has_empty_clause:
        return False
    return _eval(f.prefix.sequence(), 0, list(f.matrix))


def prove_by_expansion(f: QCNF, max_vars: int = EVAL_BUDGET, rng: random.Random | None = None) -> TermProof:
    """Build a term proof of a true formula by walking its expansion tree.

    Existential values are tried 0 first; universal branches are ∃-reduced and
    resolved on the branching variable unless one branch already avoids it.
    Leaves take, for each clause, the smallest satisfying literal under the
    total assignment.  Passing ``rng`` randomises value order, branch order,
    witness literals and pads leaves with extra true literals; the result is
    still a valid proof and is used to build fuzz corpora.
    """
    _budget(len(f.variables), max_vars)
    order = f.prefix.sequence()
    if not _eval(order, 0, None if f.has_empty_clause else list(f.matrix)):
        raise FormulaFalse("formula is false; it has no term proof")
    b = ProofBuilder()
    tau: dict[int, bool] = {}

    def reduced(nid: int) -> int:
        t = b.literals(nid)
        keep = exists_reduce(f, t)
        return b.reduce_all(nid, sorted(t - keep, key=abs, reverse=True))

    def leaf() -> int:
        lits = set()
        for c in f.matrix:
            sat = sorted((l for l in c if tau[abs(l)] == (l > 0)), key=abs)
            lits.add(rng.choice(sat) if rng else sat[0])
        if rng:
            for v in f.variables:
                if rng.random() < 0.25:
                    lits.add(v if tau[v] else -v)
        return b.leaf(make_term(lits))

    def prove(i: int, clauses: list[frozenset]) -> int:
        if i == len(order):
            return leaf()
        v, q = order[i]
        vals = [False, True]
        if rng:
            rng.shuffle(vals)
        if q == EXISTS:
            for val in vals:
                sub = _assign(clauses, v if val else -v)
                if _eval(order, i + 1, sub):
                    tau[v] = val
                    return prove(i + 1, sub)
            raise AssertionError("residual became false")
        sides = []
        for val in vals:
            tau[v] = val
            lit = v if val else -v
            nid = reduced(prove(i + 1, _assign(clauses, lit)))
            if lit not in b.literals(nid):
                return nid
            sides.append(nid)
        return b.resolve(sides[0], sides[1], v)

    reduced(prove(0, list(f.matrix)))
    return TermProof(f, tuple(b.nodes))


def enumerate_models(
    matrix: Iterable[Clause], variables: Sequence[int] | None = None, max_vars: int = ENUM_BUDGET
) -> Iterator[Term]:
    """All consistent terms over ``variables`` that hit every clause.

    Order: lexicographic over per-variable choices (absent, positive, negative)
    with variables in ascending id order.
    """
    matrix = [frozenset(c) for c in matrix]
    if variables is None:
        variables = sorted({abs(l) for c in matrix for l in c})
    variables = sorted(variables)
    _budget(len(variables), max_vars)
    for choice in itertools.product((0, 1, -1), repeat=len(variables)):
        t = frozenset(s * v for s, v in zip(choice, variables) if s)
        if all(not c.isdisjoint(t) for c in matrix):
            yield t


def subset_minimal(models: Iterable[Term]) -> list[Term]:
    models = list(models)
    return [m for m in models if not any(o < m for o in models)]
