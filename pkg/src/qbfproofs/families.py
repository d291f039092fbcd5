"""Formula families and their explicit negation-refutations.

``gen_iff(n)`` is ``∀x1 ∃y1 … ∀xn ∃yn. ⋀ (¬xi ∨ yi) ∧ (xi ∨ ¬yi)`` with
``xi = 2i-1`` and ``yi = 2i``.  Every model of its matrix carries all ``n``
universal literals, so term proofs need ``2**n`` leaves, while its negation
has a refutation of exactly ``7n`` steps.

Definition formulas come from acyclic NAND circuits: each gate ``o = nand(a, b)``
contributes ``(¬a ∨ ¬b ∨ ¬o) ∧ (a ∨ o) ∧ (b ∨ o)``.  Their negations are
refuted in QU-resolution with a constant number of steps per gate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EXISTS, FORALL, QCNF, Prefix
from .errors import FormatError
from .negation import NegResult, negate
from .proof import ProofBuilder, paused_gc
from .qres import Q, QU, ClauseProof


def gen_iff(n: int) -> QCNF:
    if n < 1:
        raise ValueError("n must be positive")
    blocks = []
    clauses = []
    for i in range(1, n + 1):
        x, y = 2 * i - 1, 2 * i
        blocks += [(FORALL, [x]), (EXISTS, [y])]
        clauses += [(-x, y), (x, -y)]
    return QCNF.build(blocks, clauses, num_vars=2 * n)


def iff_comment(n: int) -> str:
    return f"generated-by qbfproofs gen iff --n {n}: x_i = 2i-1, y_i = 2i"


def emit_linear_refutation(n: int, neg: NegResult | None = None) -> ClauseProof:
    """Q-resolution refutation of ``negate(gen_iff(n))`` with 5 resolutions and
    2 ∀-reductions per pair of indicators, 7n steps in total.

    Indicator ``c_j`` is variable ``2n + j``; the pair ``c_{2i-1}, c_{2i}`` is
    resolved away for ``i = n`` down to ``1``.
    """
    neg = neg or negate(gen_iff(n))
    with paused_gc():
        return _linear_refutation(n, neg)


def _linear_refutation(n: int, neg: NegResult) -> ClauseProof:
    b = ProofBuilder()

    def c(j: int) -> int:
        return 2 * n + j

    running = b.leaf(-c(j) for j in range(1, 2 * n + 1))
    for i in range(n, 0, -1):
        x, y = 2 * i - 1, 2 * i
        r = b.resolve(running, b.leaf((-y, c(2 * i - 1))), c(2 * i - 1))
        r = b.resolve(r, b.leaf((-x, c(2 * i))), c(2 * i))
        r = b.reduce(r, -y)
        l = b.resolve(running, b.leaf((y, c(2 * i))), c(2 * i))
        l = b.resolve(l, b.leaf((x, c(2 * i - 1))), c(2 * i - 1))
        l = b.reduce(l, y)
        running = b.resolve(l, r, x)
    return ClauseProof(neg.negated, tuple(b.nodes), Q)


@dataclass(frozen=True)
class Gate:
    output: int
    in1: int
    in2: int


@dataclass(frozen=True)
class Circuit:
    """NAND netlist.  Gates may only read inputs and earlier gate outputs."""

    inputs: tuple[tuple[int, str], ...]
    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple((int(v), q) for v, q in self.inputs))
        object.__setattr__(self, "gates", tuple(g if isinstance(g, Gate) else Gate(*g) for g in self.gates))
        known: set[int] = set()
        for v, q in self.inputs:
            if v < 1 or v in known:
                raise ValueError(f"bad or repeated input {v}")
            if q not in (EXISTS, FORALL):
                raise ValueError(f"bad quantifier {q!r} for input {v}")
            known.add(v)
        for g in self.gates:
            if g.output < 1 or g.output in known:
                raise ValueError(f"bad or repeated gate output {g.output}")
            for s in (g.in1, g.in2):
                if s not in known:
                    raise ValueError(f"gate {g.output} reads undefined signal {s}")
            known.add(g.output)

    @property
    def num_vars(self) -> int:
        return max([v for v, _ in self.inputs] + [g.output for g in self.gates] + [0])

    def prefix(self) -> Prefix:
        """Inputs in order; each output joins the ∃ block at or right after its latest input."""
        blocks: list[list] = []
        lev: dict[int, int] = {}
        for v, q in self.inputs:
            if not blocks or blocks[-1][0] != q:
                blocks.append([q, []])
            blocks[-1][1].append(v)
            lev[v] = len(blocks) - 1
        for g in self.gates:
            at = max(lev[g.in1], lev[g.in2])
            if blocks[at][0] != EXISTS:
                at += 1
                if at == len(blocks):
                    blocks.append([EXISTS, []])
            blocks[at][1].append(g.output)
            lev[g.output] = at
        return Prefix.from_blocks(blocks)


# ∃x1 ∀x2 ∃x3 with o1 = nand(x1, x2), o2 = nand(x2, x3), o3 = nand(o1, o2)
THREE_GATE_CIRCUIT = Circuit(
    inputs=((1, EXISTS), (2, FORALL), (3, EXISTS)),
    gates=(Gate(4, 1, 2), Gate(5, 2, 3), Gate(6, 4, 5)),
)


def nand_chain(g: int) -> Circuit:
    """``g`` gates over inputs ∀1 ∃2; gate k reads the previous signal and an input."""
    if g < 1:
        raise ValueError("need at least one gate")
    gates = []
    prev = 1
    for k in range(1, g + 1):
        out = 2 + k
        gates.append(Gate(out, prev, 2 if k % 2 else 1))
        prev = out
    return Circuit(((1, FORALL), (2, EXISTS)), tuple(gates))


def gen_definitions(c: Circuit) -> QCNF:
    clauses = []
    for g in c.gates:
        a, b, o = g.in1, g.in2, g.output
        clauses += [(-a, -b, -o), (a, o), (b, o)]
    return QCNF(c.prefix(), tuple(frozenset(x) for x in clauses), c.num_vars)


def definitions_comment(c: Circuit) -> str:
    return "generated-by qbfproofs gen defs: gate k contributes clauses 3k-2..3k (nand, a|o, b|o)"


def emit_definition_refutation(c: Circuit, neg: NegResult | None = None) -> ClauseProof:
    """QU-resolution refutation of ``negate(gen_definitions(c))``.

    Gates are processed from the prefix-last output backwards (prefix order of
    outputs is a topological order).  For ``o = nand(a, b)`` with indicators
    ``n1, n2, n3`` and remaining indicators ``D`` the steps are::

        D ∨ ¬a ∨ ¬b   from the long clause via (o∨n1) (¬a∨n2) (¬b∨n3), reduce o
        D ∨ ¬n1 ∨ ¬o  via (¬o∨n2) (¬o∨n3)
        D ∨ b         via (b∨n1), reduce ¬o
        D ∨ ¬a        resolve on b (universal when b is an ∃-output: QU)
        D ∨ a         via (a∨n1), reduce ¬o
        D             resolve on a

    12 steps per gate, 9 when both inputs coincide.
    """
    f = gen_definitions(c)
    neg = neg or negate(f)
    with paused_gc():
        return _definition_refutation(c, f, neg)


def _definition_refutation(c: Circuit, f: QCNF, neg: NegResult) -> ClauseProof:
    pos = f.prefix.position
    b = ProofBuilder()
    running = b.leaf(-n for n in neg.indicators)
    order = sorted(range(len(c.gates)), key=lambda k: pos[c.gates[k].output], reverse=True)
    for k in order:
        g = c.gates[k]
        a, bb, o = g.in1, g.in2, g.output
        n1, n2, n3 = neg.indicators[3 * k : 3 * k + 3]
        x1 = b.resolve(running, b.leaf((o, n1)), n1)
        x1 = b.resolve(x1, b.leaf((-a, n2)), n2)
        x1 = b.resolve(x1, b.leaf((-bb, n3)), n3)
        x1 = b.reduce(x1, o)
        y = b.resolve(running, b.leaf((-o, n2)), n2)
        y = b.resolve(y, b.leaf((-o, n3)), n3)
        if a != bb:
            x2 = b.reduce(b.resolve(y, b.leaf((bb, n1)), n1), -o)
            x1 = b.resolve(x1, x2, bb)
        x4 = b.reduce(b.resolve(y, b.leaf((a, n1)), n1), -o)
        running = b.resolve(x4, x1, a)
    return ClauseProof(neg.negated, tuple(b.nodes), QU)


def parse_circuit(text: str) -> Circuit:
    inputs, gates = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "input" and len(parts) == 3 and parts[2] in (EXISTS, FORALL) and parts[1].isdigit():
            inputs.append((int(parts[1]), parts[2]))
        elif parts[0] == "gate" and len(parts) == 4 and all(p.isdigit() for p in parts[1:]):
            gates.append(Gate(*map(int, parts[1:])))
        else:
            raise FormatError(f"line {lineno}: expected 'input <var> e|a' or 'gate <out> <in1> <in2>'")
    try:
        return Circuit(tuple(inputs), tuple(gates))
    except ValueError as e:
        raise FormatError(str(e)) from None


def serialize_circuit(c: Circuit) -> str:
    lines = [f"input {v} {q}" for v, q in c.inputs]
    lines += [f"gate {g.output} {g.in1} {g.in2}" for g in c.gates]
    return "\n".join(lines) + "\n"
