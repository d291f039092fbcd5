import dataclasses

import pytest

from qbfproofs.core import EXISTS, FORALL, serialize_qdimacs
from qbfproofs.errors import FormatError
from qbfproofs.families import (
    THREE_GATE_CIRCUIT,
    Circuit,
    Gate,
    emit_definition_refutation,
    emit_linear_refutation,
    gen_definitions,
    gen_iff,
    nand_chain,
    parse_circuit,
    serialize_circuit,
)
from qbfproofs.negation import negate
from qbfproofs.oracle import evaluate
from qbfproofs.qres import Q, check_clause_proof


def test_gen_iff_text():
    assert serialize_qdimacs(gen_iff(2)) == "p cnf 4 4\na 1 0\ne 2 0\na 3 0\ne 4 0\n-1 2 0\n1 -2 0\n-3 4 0\n3 -4 0\n"
    with pytest.raises(ValueError):
        gen_iff(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_iff_is_true_and_negation_false(n):
    f = gen_iff(n)
    assert evaluate(f)
    assert not evaluate(negate(f).negated)


@pytest.mark.parametrize("n", [1, 2, 3, 10])
def test_linear_refutation_counts(n):
    rep = check_clause_proof(emit_linear_refutation(n))
    assert rep.proves
    assert (rep.resolutions, rep.reductions, rep.size) == (5 * n, 2 * n, 7 * n)
    # one long clause plus four distinct indicator clauses per pair
    assert rep.leaves == 1 + 4 * n


def test_linear_refutation_uses_only_existential_pivots():
    p = emit_linear_refutation(3)
    g = p.formula
    assert all(g.is_existential(n.pivot) for n in p.nodes if n.pivot)


def test_circuit_prefix():
    assert str(THREE_GATE_CIRCUIT.prefix()) == "∃1∀2∃3,4,5,6"
    assert str(nand_chain(3).prefix()) == "∀1∃2,3,4,5"


def test_definition_clauses():
    f = gen_definitions(Circuit(((1, EXISTS), (2, FORALL)), (Gate(3, 1, 2),)))
    assert f.matrix == (frozenset({-1, -2, -3}), frozenset({1, 3}), frozenset({2, 3}))


def test_definitions_are_true():
    assert evaluate(gen_definitions(THREE_GATE_CIRCUIT))
    assert evaluate(gen_definitions(nand_chain(5)))


def test_three_gate_circuit_refutation_modes():
    p = emit_definition_refutation(THREE_GATE_CIRCUIT)
    rep = check_clause_proof(p)
    assert rep.proves and rep.size == 36
    bad = check_clause_proof(dataclasses.replace(p, mode=Q))
    d = bad.first("universal-pivot")
    assert d is not None
    outputs = {g.output for g in THREE_GATE_CIRCUIT.gates}
    pivot = next(n.pivot for n in p.nodes if n.id == d.node)
    assert pivot in outputs


def test_repeated_input_gate_saves_steps():
    c = Circuit(((1, FORALL),), (Gate(2, 1, 1),))
    rep = check_clause_proof(emit_definition_refutation(c))
    assert rep.proves and rep.size == 9


@pytest.mark.parametrize("g", [1, 2, 7, 20])
def test_nand_chain_is_twelve_steps_per_gate(g):
    rep = check_clause_proof(emit_definition_refutation(nand_chain(g)))
    assert rep.proves
    assert rep.size == 12 * g


def test_circuit_validation():
    with pytest.raises(ValueError):
        Circuit(((1, EXISTS),), (Gate(2, 1, 3),))
    with pytest.raises(ValueError):
        Circuit(((1, EXISTS), (1, FORALL)), ())
    with pytest.raises(ValueError):
        nand_chain(0)


def test_circuit_text_round_trip():
    text = serialize_circuit(THREE_GATE_CIRCUIT)
    assert text == "input 1 e\ninput 2 a\ninput 3 e\ngate 4 1 2\ngate 5 2 3\ngate 6 4 5\n"
    assert parse_circuit("c comment\n" + text) == THREE_GATE_CIRCUIT
    with pytest.raises(FormatError):
        parse_circuit("gate 4 1\n")
    with pytest.raises(FormatError):
        parse_circuit("input 1 e\ngate 3 1 2\n")
