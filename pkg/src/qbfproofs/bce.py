"""Quantified blocked clause elimination."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .core import QCNF, Clause, sorted_literals
from .errors import FormatError


@dataclass(frozen=True)
class BceTrace:
    eliminated: tuple[tuple[int, int], ...]  # (0-based clause index, blocking literal)
    residual: QCNF

    def __len__(self) -> int:
        return len(self.eliminated)


def _blocked(f: QCNF, c: Clause, l: int, partners: Iterable[Clause]) -> bool:
    if not f.is_existential(l):
        return False
    lev = f.level(l)
    cands = [k for k in c if abs(k) != abs(l) and f.level(k) <= lev]
    return all(any(-k in d for k in cands) for d in partners)


def is_blocked_literal(f: QCNF, c: Clause, l: int) -> bool:
    """``l`` is existential and every resolvent of ``c`` on ``l`` with a matrix
    clause is tautological on a literal of level at most ``level(l)``."""
    if l not in c:
        raise ValueError(f"literal {l} not in clause")
    return _blocked(f, c, l, (d for d in f.matrix if -l in d and d != c))


def blocking_literal(f: QCNF, c: Clause) -> int | None:
    for l in sorted_literals(c):
        if is_blocked_literal(f, c, l):
            return l
    return None


def eliminate_blocked(f: QCNF, reverse: bool = False) -> BceTrace:
    """Remove blocked clauses until none is left.

    Each round removes the first blocked clause in matrix order (last, with
    ``reverse=True``), so traces are deterministic.
    """
    matrix = f.matrix
    live = list(range(len(matrix)))
    if reverse:
        live.reverse()
    occ: dict[int, set[int]] = defaultdict(set)
    for i, c in enumerate(matrix):
        for l in c:
            occ[l].add(i)
    trace = []
    while True:
        for pos, i in enumerate(live):
            c = matrix[i]
            hit = None
            for l in sorted_literals(c):
                if _blocked(f, c, l, (matrix[j] for j in occ[-l] if j != i)):
                    hit = l
                    break
            if hit is not None:
                trace.append((i, hit))
                del live[pos]
                for l in c:
                    occ[l].discard(i)
                break
        else:
            break
    kept = sorted(live)
    return BceTrace(tuple(trace), f.with_matrix(matrix[i] for i in kept))


def format_trace(trace: BceTrace) -> str:
    """One ``<clauseIndex> <blockingLit>`` line per elimination, 1-based clause index."""
    return "".join(f"{i + 1} {l}\n" for i, l in trace.eliminated)


def parse_trace(text: str) -> list[tuple[int, int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<clauseIndex> <blockingLit>'")
        out.append((int(parts[0]) - 1, int(parts[1])))
    return out


def replay(f: QCNF, eliminated: Iterable[tuple[int, int]]) -> QCNF:
    """Apply a recorded elimination sequence, re-checking each blocking literal."""
    live = dict(enumerate(f.matrix))
    for i, l in eliminated:
        c = live.pop(i)
        partners = [d for d in live.values() if -l in d]
        if not _blocked(f, c, l, partners):
            raise ValueError(f"clause {i + 1} is not blocked on {l}")
    return f.with_matrix(live[i] for i in sorted(live))
