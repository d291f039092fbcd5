"""Proof DAGs shared by the clause and term calculi, plus the trace text format.

A trace is line oriented::

    p qpt <numvars> <numnodes>        (clause proofs; ``p tpt`` for term proofs)
    <id> <lit>* 0 <antecedent>* 0

Zero antecedents mark a leaf (input clause or model term), one a single-literal
reduction, two a resolution whose pivot is the unique variable occurring with
opposite signs in the antecedents.  The last node is the root.
"""

from __future__ import annotations

import gc
from operator import neg
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import format_literals, make_clause
from .errors import FormatError

LEAF = "leaf"
RESOLUTION = "resolution"
REDUCTION = "reduction"


@dataclass(frozen=True)
class Node:
    id: int
    literals: frozenset
    kind: str = LEAF
    antecedents: tuple[int, ...] = ()
    pivot: int | None = None  # variable, resolution nodes only
    removed: int | None = None  # literal, reduction nodes only

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF


@dataclass(frozen=True)
class Diagnostic:
    node: int
    code: str
    message: str

    def __str__(self) -> str:
        return f"node {self.node}: {self.message}"


@dataclass
class CheckReport:
    valid: bool
    root: frozenset
    size: int = 0
    resolutions: int = 0
    reductions: int = 0
    leaves: int = 0
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def proves(self) -> bool:
        """Valid and the root is empty (⊥ for refutations, ⊤ for term proofs)."""
        return self.valid and not self.root

    def first(self, code: str) -> Diagnostic | None:
        return next((d for d in self.diagnostics if d.code == code), None)


class ProofBuilder:
    """Appends nodes with consecutive ids, computing clause/term contents.

    The builder only does the set algebra; rule side conditions are left to the
    checkers.
    """

    def __init__(self, start: int = 1):
        self.nodes: list[Node] = []
        self._by_id: dict[int, Node] = {}
        self._next = start
        self._leaves: dict[frozenset, int] = {}

    def _add(self, node: Node) -> int:
        self.nodes.append(node)
        self._by_id[node.id] = node
        self._next += 1
        return node.id

    def __getitem__(self, nid: int) -> Node:
        return self._by_id[nid]

    def literals(self, nid: int) -> frozenset:
        return self._by_id[nid].literals

    def leaf(self, lits: Iterable[int], share: bool = True) -> int:
        lits = make_clause(lits)
        if share and lits in self._leaves:
            return self._leaves[lits]
        nid = self._add(Node(self._next, lits))
        self._leaves[lits] = nid
        return nid

    def resolve(self, left: int, right: int, pivot: int) -> int:
        pivot = abs(pivot)
        lits = (self.literals(left) | self.literals(right)) - {pivot, -pivot}
        return self._add(Node(self._next, lits, RESOLUTION, (left, right), pivot=pivot))

    def reduce(self, child: int, lit: int) -> int:
        lits = self.literals(child) - {lit}
        return self._add(Node(self._next, lits, REDUCTION, (child,), removed=lit))

    def reduce_all(self, child: int, lits: Iterable[int]) -> int:
        for l in lits:
            child = self.reduce(child, l)
        return child

    @property
    def root(self) -> int:
        return self.nodes[-1].id


@contextmanager
def paused_gc():
    """Suspend the cyclic collector while building or checking large DAGs.

    Proof nodes hold big frozensets and never form cycles; repeated collector
    passes over them cost more than the set algebra itself.
    """
    was = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was:
            gc.enable()


def index_nodes(nodes: Iterable[Node]) -> dict[int, Node]:
    return {n.id: n for n in nodes}


def reachable(nodes: list[Node], root: int) -> set[int]:
    by_id = index_nodes(nodes)
    seen: set[int] = set()
    stack = [root]
    while stack:
        nid = stack.pop()
        if nid in seen or nid not in by_id:
            continue
        seen.add(nid)
        stack.extend(by_id[nid].antecedents)
    return seen


def iter_leaves(nodes: list[Node], root: int) -> Iterator[Node]:
    keep = reachable(nodes, root)
    return (n for n in nodes if n.id in keep and n.is_leaf)


def clashes(c1: frozenset, c2: frozenset, p: int) -> bool:
    return (p in c1 and -p in c2) or (-p in c1 and p in c2)


def tautological(lits: frozenset) -> bool:
    return len(set(map(abs, lits))) != len(lits)


def clash_beyond(c1: frozenset, c2: frozenset, p: int) -> bool:
    """Do ``c1`` and ``c2`` clash on some variable other than ``p``?"""
    small, big = (c1, c2) if len(c1) <= len(c2) else (c2, c1)
    hits = sum(map(big.__contains__, map(neg, small)))
    return hits > clashes(c1, c2, p)


def summarize(nodes, root: int, diags, implicit) -> CheckReport:
    keep = reachable(list(nodes), root)
    res = red = leaves = 0
    for n in nodes:
        if n.id not in keep:
            continue
        if n.kind == RESOLUTION:
            res += 1
            red += implicit.get(n.id, 0)
        elif n.kind == REDUCTION:
            red += 1
        else:
            leaves += 1
    root_lits = next(n.literals for n in reversed(nodes) if n.id == root)
    return CheckReport(not diags, root_lits, res + red, res, red, leaves, diags)


def serialize_trace(kind: str, num_vars: int, nodes: list[Node]) -> str:
    lines = [f"p {kind} {num_vars} {len(nodes)}"]
    for n in nodes:
        lits = format_literals(n.literals)
        ants = " ".join(map(str, n.antecedents))
        lines.append(" ".join(x for x in (str(n.id), lits, "0", ants, "0") if x))
    return "\n".join(lines) + "\n"


def _infer_pivot(nid: int, a: frozenset, b: frozenset) -> int:
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    found = {abs(l) for l in small if -l in big}
    if len(found) != 1:
        what = "no" if not found else "ambiguous"
        raise FormatError(f"node {nid}: {what} pivot between antecedents")
    return found.pop()


def parse_trace(text: str | bytes, kind: str) -> tuple[int, list[Node]]:
    """Parse a trace with header ``p <kind> ...``; returns ``(num_vars, nodes)``."""
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    nodes: list[Node] = []
    by_id: dict[int, Node] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if header is not None or len(toks) != 4 or toks[1] != kind:
                raise FormatError(f"line {lineno}: expected header 'p {kind} <vars> <nodes>'")
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header") from None
            continue
        if header is None:
            raise FormatError(f"line {lineno}: node before header")
        try:
            nums = [int(t) for t in toks]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token") from None
        if nums.count(0) != 2 or nums[-1] != 0:
            raise FormatError(f"line {lineno}: node line needs '<id> <lit>* 0 <antecedent>* 0'")
        nid = nums[0]
        split = nums.index(0, 1)
        lits, ants = nums[1:split], tuple(nums[split + 1 : -1])
        if nid < 1:
            raise FormatError(f"line {lineno}: bad node id {nid}")
        if nodes and nid <= nodes[-1].id:
            raise FormatError(f"line {lineno}: node ids must strictly increase")
        for l in lits:
            if abs(l) > header[0]:
                raise FormatError(f"line {lineno}: literal {l} out of range")
        for a in ants:
            if a not in by_id:
                raise FormatError(f"line {lineno}: antecedent {a} does not precede node {nid}")
        clause = frozenset(lits)
        if not ants:
            node = Node(nid, clause)
        elif len(ants) == 1:
            missing = by_id[ants[0]].literals - clause
            if len(missing) != 1 or not clause <= by_id[ants[0]].literals:
                raise FormatError(f"line {lineno}: reduction must remove exactly one literal")
            node = Node(nid, clause, REDUCTION, ants, removed=next(iter(missing)))
        elif len(ants) == 2:
            pivot = _infer_pivot(nid, by_id[ants[0]].literals, by_id[ants[1]].literals)
            node = Node(nid, clause, RESOLUTION, ants, pivot=pivot)
        else:
            raise FormatError(f"line {lineno}: at most two antecedents allowed")
        nodes.append(node)
        by_id[nid] = node
    if header is None:
        raise FormatError("missing header")
    if len(nodes) != header[1]:
        raise FormatError(f"header announces {header[1]} nodes, found {len(nodes)}")
    if not nodes:
        raise FormatError("empty proof")
    return header[0], nodes
