import random

import pytest

from qbfproofs.corpus import random_true_qcnf
from qbfproofs.families import gen_iff
from qbfproofs.negation import negate
from qbfproofs.oracle import prove_by_expansion
from qbfproofs.proof import Node
from qbfproofs.qres import check_clause_proof
from qbfproofs.term import TermProof, check_term_proof
from qbfproofs.translate import translate


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_iff_translation_size_formula(n):
    # expansion proof: 2**n leaves and 3 * (2**n - 1) steps; each leaf chain
    # resolves away all 2n indicators
    f = gen_iff(n)
    p = prove_by_expansion(f)
    assert check_term_proof(p).size == 3 * (2**n - 1)
    out, rep = translate(f, p)
    checked = check_clause_proof(out)
    assert checked.proves
    assert checked.size == rep.output_size == n * 2 ** (n + 1) + 3 * (2**n - 1)
    assert rep.output_size <= rep.bound
    assert len(rep.leaf_chains) == 2**n
    assert all(len(c) == 2 * n for c in rep.leaf_chains.values())


def test_mirrored_nodes_hold_complements():
    f = gen_iff(2)
    p = prove_by_expansion(f)
    out, rep = translate(f, p)
    terms = {n.id: n.literals for n in p.nodes}
    clauses = {n.id: n.literals for n in out.nodes}
    for tid, cid in rep.node_map.items():
        assert clauses[cid] == frozenset(-l for l in terms[tid])


def test_padded_leaves_give_subsumed_mirrors():
    rng = random.Random(9)
    for _ in range(20):
        f = random_true_qcnf(rng, num_vars=6, num_clauses=4, max_len=3)
        p = prove_by_expansion(f, rng=rng)
        out, rep = translate(f, p)
        assert check_clause_proof(out).proves
        terms = {n.id: n.literals for n in p.nodes}
        clauses = {n.id: n.literals for n in out.nodes}
        for tid, cid in rep.node_map.items():
            assert clauses[cid] <= frozenset(-l for l in terms[tid])


def test_report_text():
    f = gen_iff(1)
    _, rep = translate(f, prove_by_expansion(f))
    assert rep.to_text() == (
        "input_size=3\noutput_size=7\nformula_size=4\nbound=49\nleaves=2\n"
        "max_chain_resolutions=2\nwithin_bound=true\n"
    )


def test_rejects_invalid_term_proof():
    f = gen_iff(1)
    with pytest.raises(ValueError):
        translate(f, TermProof(f, (Node(1, frozenset({1})),)))


def test_random_true_formulas_translate_within_bound():
    rng = random.Random(77)
    for _ in range(30):
        f = random_true_qcnf(rng, num_vars=rng.randint(2, 8), num_clauses=rng.randint(1, 6), max_len=3)
        p = prove_by_expansion(f, rng=rng)
        neg = negate(f)
        out, rep = translate(f, p, neg)
        assert out.formula == neg.negated
        assert check_clause_proof(out).proves
        assert rep.output_size <= rep.bound
        assert all(len(c) == len(f.matrix) for c in rep.leaf_chains.values())
