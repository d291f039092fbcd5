"""Negating a QCNF back into QCNF with one indicator variable per clause.

The prefix is inverted and each indicator ``n_C`` is placed, existentially,
right after the prefix-last variable of its clause ``C``.  The matrix encodes
``n_C`` in one direction only (``C`` true forces ``n_C``) and adds the clause
``¬n_C1 ∨ … ∨ ¬n_Cm`` demanding that some clause be false.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import EXISTS, QCNF, Prefix, sorted_literals
from .errors import FormatError, NegationError


@dataclass(frozen=True)
class NegResult:
    negated: QCNF
    indicators: tuple[int, ...]  # indicators[i] is n_C for clause i of the input
    anchors: dict  # indicator -> variable it was inserted after

    def indicator(self, clause_index: int) -> int:
        return self.indicators[clause_index]


def negate(f: QCNF) -> NegResult:
    if not f.matrix:
        raise NegationError("cannot negate a formula with an empty matrix")
    if f.has_empty_clause:
        raise NegationError("formula contains the empty clause and is trivially false")
    pos = f.prefix.position
    follow: dict[int, list[int]] = defaultdict(list)
    indicators = []
    anchors = {}
    for i, c in enumerate(f.matrix):
        n = f.num_vars + i + 1
        anchor = max((abs(l) for l in c), key=pos.__getitem__)
        follow[anchor].append(n)
        indicators.append(n)
        anchors[n] = anchor
    seq = []
    for v, q in f.prefix.inverted().sequence():
        seq.append((v, q))
        seq.extend((n, EXISTS) for n in follow.get(v, ()))
    matrix = [frozenset((-l, n)) for c, n in zip(f.matrix, indicators) for l in sorted_literals(c)]
    matrix.append(frozenset(-n for n in indicators))
    negated = QCNF(Prefix.from_sequence(seq), tuple(matrix), f.num_vars + len(indicators))
    return NegResult(negated, tuple(indicators), anchors)


def verify_negation_semantics(f: QCNF, neg: NegResult | None = None, cap: int = 10) -> bool:
    """Brute-force check that ``f`` and its negation have opposite truth values."""
    from .oracle import evaluate

    neg = neg or negate(f)
    truth = evaluate(f, max_vars=cap)
    return truth != evaluate(neg.negated, max_vars=cap + len(neg.indicators))


def format_indicator_map(neg: NegResult) -> str:
    """Sidecar text: one ``<clauseIndex> <indicatorVar>`` pair per line, 1-based clause index."""
    return "".join(f"{i} {n}\n" for i, n in enumerate(neg.indicators, 1))


def parse_indicator_map(text: str) -> dict[int, int]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<clauseIndex> <indicatorVar>'")
        out[int(parts[0])] = int(parts[1])
    return out
