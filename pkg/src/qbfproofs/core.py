"""QCNF data model: literals, clauses, terms, prefixes and QDIMACS I/O.

Literals are DIMACS-style nonzero integers: ``v`` is the positive literal of
variable ``v`` and ``-v`` its complement.  Clauses and terms are frozensets
of literals; canonical (sorted) order is applied only when text is written.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import FormatError, UnboundVariableError

log = logging.getLogger(__name__)

EXISTS = "e"
FORALL = "a"

Literal = int
Clause = frozenset
Term = frozenset
Assignment = Mapping[int, bool]


def var(lit: Literal) -> int:
    return abs(lit)


def complement(lit: Literal) -> Literal:
    return -lit


def lit_key(lit: Literal) -> tuple[int, bool]:
    """Sort key: by variable id, positive literal first."""
    return (abs(lit), lit < 0)


def sorted_literals(lits: Iterable[Literal]) -> list[Literal]:
    return sorted(lits, key=lit_key)


def is_tautology(lits: Iterable[Literal]) -> bool:
    s = set(lits)
    return any(-l in s for l in s)


def make_clause(lits: Iterable[Literal]) -> Clause:
    """Build a clause, dropping duplicate literals.  Tautologies are allowed."""
    c = frozenset(lits)
    if 0 in c:
        raise ValueError("0 is not a literal")
    return c


def make_term(lits: Iterable[Literal]) -> Term:
    """Build a term; raises ``ValueError`` if it holds complementary literals."""
    t = frozenset(lits)
    if 0 in t:
        raise ValueError("0 is not a literal")
    if is_tautology(t):
        raise ValueError(f"inconsistent term {sorted_literals(t)}")
    return t


def negate_literals(lits: Iterable[Literal]) -> frozenset:
    return frozenset(-l for l in lits)


def format_literals(lits: Iterable[Literal]) -> str:
    return " ".join(str(l) for l in sorted_literals(lits))


@dataclass(frozen=True)
class Block:
    quantifier: str
    variables: tuple[int, ...]


@dataclass(frozen=True)
class Prefix:
    """Alternating quantifier blocks; level of a variable is its 1-based block index."""

    blocks: tuple[Block, ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        prev = None
        for b in self.blocks:
            if b.quantifier not in (EXISTS, FORALL):
                raise ValueError(f"bad quantifier {b.quantifier!r}")
            if not b.variables:
                raise ValueError("empty quantifier block")
            if b.quantifier == prev:
                raise ValueError("adjacent blocks share a quantifier; use Prefix.from_blocks")
            prev = b.quantifier
            for v in b.variables:
                if v < 1:
                    raise ValueError(f"bad variable id {v}")
                if v in seen:
                    raise ValueError(f"variable {v} quantified twice")
                seen.add(v)

    @classmethod
    def from_blocks(cls, blocks: Iterable[tuple[str, Iterable[int]]]) -> Prefix:
        """Build a prefix, merging adjacent same-quantifier blocks and dropping empty ones."""
        merged: list[tuple[str, list[int]]] = []
        for q, vs in blocks:
            vs = list(vs)
            if not vs:
                continue
            if merged and merged[-1][0] == q:
                merged[-1][1].extend(vs)
            else:
                merged.append((q, vs))
        return cls(tuple(Block(q, tuple(vs)) for q, vs in merged))

    @classmethod
    def from_sequence(cls, seq: Iterable[tuple[int, str]]) -> Prefix:
        """Build a prefix from a linear ``(variable, quantifier)`` order."""
        return cls.from_blocks((q, [v]) for v, q in seq)

    @cached_property
    def _levels(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks, 1) for v in b.variables}

    @cached_property
    def _quants(self) -> dict[int, str]:
        return {v: b.quantifier for b in self.blocks for v in b.variables}

    @cached_property
    def order(self) -> tuple[int, ...]:
        """All bound variables in prefix order."""
        return tuple(v for b in self.blocks for v in b.variables)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    @cached_property
    def exist_level(self) -> dict[int, int]:
        """Literal -> level if existential, else 0.  Keys cover both polarities."""
        return {s * v: (lv if self._quants[v] == EXISTS else 0) for v, lv in self._levels.items() for s in (1, -1)}

    @cached_property
    def univ_level(self) -> dict[int, int]:
        """Literal -> level if universal, else 0."""
        return {s * v: (lv if self._quants[v] == FORALL else 0) for v, lv in self._levels.items() for s in (1, -1)}

    @cached_property
    def literals(self) -> frozenset:
        return frozenset(self.exist_level)

    def sequence(self) -> list[tuple[int, str]]:
        return [(v, b.quantifier) for b in self.blocks for v in b.variables]

    def level(self, v: int) -> int:
        try:
            return self._levels[abs(v)]
        except KeyError:
            raise UnboundVariableError(f"variable {abs(v)} is not bound by the prefix") from None

    def quantifier(self, v: int) -> str:
        try:
            return self._quants[abs(v)]
        except KeyError:
            raise UnboundVariableError(f"variable {abs(v)} is not bound by the prefix") from None

    def is_universal(self, lit: Literal) -> bool:
        return self.quantifier(lit) == FORALL

    def is_existential(self, lit: Literal) -> bool:
        return self.quantifier(lit) == EXISTS

    def inverted(self) -> Prefix:
        flip = {EXISTS: FORALL, FORALL: EXISTS}
        return Prefix(tuple(Block(flip[b.quantifier], b.variables) for b in self.blocks))

    def __contains__(self, v: int) -> bool:
        return abs(v) in self._levels

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        sym = {EXISTS: "∃", FORALL: "∀"}
        return "".join(sym[b.quantifier] + ",".join(map(str, b.variables)) for b in self.blocks)


@dataclass(frozen=True)
class QCNF:
    """Closed prenex formula with a CNF matrix."""

    prefix: Prefix
    matrix: tuple[Clause, ...]
    num_vars: int

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(make_clause(c) for c in self.matrix))
        for c in self.matrix:
            for l in c:
                if abs(l) not in self.prefix:
                    raise UnboundVariableError(f"variable {abs(l)} occurs in the matrix but is not bound")
        if any(v > self.num_vars for v in self.prefix.order):
            raise ValueError("prefix variable exceeds num_vars")

    @classmethod
    def build(
        cls,
        blocks: Iterable[tuple[str, Iterable[int]]],
        clauses: Iterable[Iterable[Literal]],
        num_vars: int | None = None,
        bind_free: bool = True,
    ) -> QCNF:
        """Convenience constructor; free matrix variables go into an outermost ∃ block."""
        blocks = [(q, list(vs)) for q, vs in blocks]
        matrix = tuple(make_clause(c) for c in clauses)
        bound = {v for _, vs in blocks for v in vs}
        if bind_free:
            free = sorted({abs(l) for c in matrix for l in c} - bound)
            if free:
                blocks.insert(0, (EXISTS, free))
        if num_vars is None:
            num_vars = max([v for _, vs in blocks for v in vs] + [abs(l) for c in matrix for l in c] + [0])
        return cls(Prefix.from_blocks(blocks), matrix, num_vars)

    def level(self, lit: Literal) -> int:
        return self.prefix.level(lit)

    def is_universal(self, lit: Literal) -> bool:
        return self.prefix.is_universal(lit)

    def is_existential(self, lit: Literal) -> bool:
        return self.prefix.is_existential(lit)

    @property
    def has_empty_clause(self) -> bool:
        return any(not c for c in self.matrix)

    @property
    def variables(self) -> tuple[int, ...]:
        return self.prefix.order

    @property
    def universals(self) -> tuple[int, ...]:
        return tuple(v for v, q in self.prefix.sequence() if q == FORALL)

    @property
    def size(self) -> int:
        """Number of literal occurrences in the matrix."""
        return sum(len(c) for c in self.matrix)

    def with_matrix(self, matrix: Iterable[Iterable[Literal]]) -> QCNF:
        return QCNF(self.prefix, tuple(matrix), self.num_vars)


def level(f: QCNF, lit: Literal) -> int:
    """Block index of ``var(lit)`` in the prefix of ``f``."""
    return f.prefix.level(lit)


def is_model(matrix: Iterable[Clause], t: Term) -> bool:
    """True iff ``t`` shares at least one literal with every clause."""
    return all(not c.isdisjoint(t) for c in matrix)


def first_unhit_clause(matrix: Sequence[Clause], t: Term) -> int | None:
    for i, c in enumerate(matrix):
        if c.isdisjoint(t):
            return i
    return None


def parse_qdimacs(text: str | bytes) -> QCNF:
    """Parse QDIMACS text.

    Duplicate literals are dropped, adjacent same-quantifier blocks merged and
    free variables bound in an outermost existential block.  Empty clauses are
    accepted (with a warning); the formula is then trivially false.
    """
    if isinstance(text, bytes):
        text = text.decode()
    num_vars = num_clauses = None
    blocks: list[tuple[str, list[int]]] = []
    quantified: set[int] = set()
    clauses: list[Clause] = []
    current: list[int] = []

    def literal(tok: str, lineno: int) -> int:
        try:
            x = int(tok)
        except ValueError:
            raise FormatError(f"line {lineno}: bad token {tok!r}") from None
        if abs(x) > num_vars:
            raise FormatError(f"line {lineno}: literal {x} out of range 1..{num_vars}")
        return x

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise FormatError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 0 or num_clauses < 0:
                raise FormatError(f"line {lineno}: negative counts in header")
            continue
        if num_vars is None:
            raise FormatError(f"line {lineno}: content before header")
        toks = line.split()
        if toks[0] in (EXISTS, FORALL):
            if clauses or current:
                raise FormatError(f"line {lineno}: quantifier line after clauses")
            if toks[-1] != "0":
                raise FormatError(f"line {lineno}: quantifier line not terminated by 0")
            vs = [literal(t, lineno) for t in toks[1:-1]]
            for v in vs:
                if v <= 0:
                    raise FormatError(f"line {lineno}: bad variable {v} in quantifier line")
                if v in quantified:
                    raise FormatError(f"line {lineno}: variable {v} quantified twice")
                quantified.add(v)
            blocks.append((toks[0], vs))
            continue
        for tok in toks:
            x = literal(tok, lineno)
            if x == 0:
                if not current:
                    log.warning("line %d: empty clause; formula is trivially false", lineno)
                clauses.append(frozenset(current))
                current = []
            else:
                current.append(x)
    if num_vars is None:
        raise FormatError("missing header")
    if current:
        raise FormatError("last clause not terminated by 0")
    if len(clauses) != num_clauses:
        raise FormatError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return QCNF.build(blocks, clauses, num_vars=num_vars)


def serialize_qdimacs(f: QCNF, comments: Iterable[str] = ()) -> str:
    """Canonical QDIMACS: header, one line per block, sorted clause literals, LF endings."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {f.num_vars} {len(f.matrix)}")
    for b in f.prefix.blocks:
        lines.append(" ".join([b.quantifier, *map(str, b.variables), "0"]))
    for c in f.matrix:
        lines.append(" ".join([*map(str, sorted_literals(c)), "0"]))
    return "\n".join(lines) + "\n"
