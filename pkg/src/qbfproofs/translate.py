"""Compile a term-resolution proof of a QCNF into a Q-resolution refutation of its negation.

Each model leaf ``M`` becomes the clause ``{¬w : w a witness}``: starting
from the long clause ``⋁ ¬n_C`` every ``¬n_C`` is resolved with ``¬w ∨ n_C``
for a witness ``w ∈ C ∩ M``.  Term resolutions on universal ``x`` become
Q-resolutions on ``x`` (existential after negation) and ∃-reductions become
∀-reductions of the complementary literal.  Every mirrored clause is a subset
of the complement of its term; when the literal a step would act on is
missing, the step is skipped and the antecedent's clause is reused.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import QCNF, lit_key
from .negation import NegResult, negate
from .proof import REDUCTION, RESOLUTION, ProofBuilder, clashes, reachable
from .qres import Q, ClauseProof
from .term import TermProof, check_term_proof


@dataclass
class TranslationReport:
    input_size: int
    output_size: int
    formula_size: int
    leaf_chains: dict[int, list[int]] = field(default_factory=dict)
    node_map: dict[int, int] = field(default_factory=dict)

    @property
    def bound(self) -> int:
        return (self.formula_size + self.input_size) ** 2

    @property
    def max_chain(self) -> int:
        return max((len(c) for c in self.leaf_chains.values()), default=0)

    def to_text(self) -> str:
        items = [
            ("input_size", self.input_size),
            ("output_size", self.output_size),
            ("formula_size", self.formula_size),
            ("bound", self.bound),
            ("leaves", len(self.leaf_chains)),
            ("max_chain_resolutions", self.max_chain),
            ("within_bound", str(self.output_size <= self.bound).lower()),
        ]
        return "".join(f"{k}={v}\n" for k, v in items)


def translate(f: QCNF, p: TermProof, neg: NegResult | None = None) -> tuple[ClauseProof, TranslationReport]:
    report = check_term_proof(p)
    if not report.proves:
        raise ValueError("translate needs a valid term proof with an empty root")
    neg = neg or negate(f)
    b = ProofBuilder()
    long = b.leaf(-n for n in neg.indicators)
    keep = reachable(list(p.nodes), p.root)
    mirror: dict[int, int] = {}
    chains: dict[int, list[int]] = {}
    for node in p.nodes:
        if node.id not in keep:
            continue
        if node.is_leaf:
            cur, chain = long, []
            for c, n in zip(f.matrix, neg.indicators):
                w = min(c & node.literals, key=lit_key)
                cur = b.resolve(cur, b.leaf((-w, n)), n)
                chain.append(cur)
            chains[node.id] = chain
        elif node.kind == REDUCTION:
            cur = mirror[node.antecedents[0]]
            if -node.removed in b.literals(cur):
                cur = b.reduce(cur, -node.removed)
        elif node.kind == RESOLUTION:
            left, right = (mirror[a] for a in node.antecedents)
            x = node.pivot
            if not clashes(b.literals(left), b.literals(right), x):
                # a side without its pivot literal already subsumes the result
                cur = right if x in b.literals(left) or -x in b.literals(left) else left
            else:
                cur = b.resolve(left, right, x)
            extra = b.literals(cur) - frozenset(-l for l in node.literals)
            cur = b.reduce_all(cur, sorted(extra, key=lit_key))
        else:
            raise AssertionError(f"unexpected node kind {node.kind}")
        mirror[node.id] = cur
    root = mirror[p.root]
    assert not b.literals(root)
    nodes = tuple(n for n in b.nodes if n.id <= root)
    out = ClauseProof(neg.negated, nodes, Q)
    keep = reachable(list(nodes), root)
    steps = sum(1 for n in nodes if n.id in keep and n.kind in (RESOLUTION, REDUCTION))
    return out, TranslationReport(report.size, steps, f.size, chains, mirror)
