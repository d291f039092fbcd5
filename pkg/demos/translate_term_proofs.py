"""
From term proofs to refutations
===============================

A term proof of a true formula is compiled node by node into a Q-resolution
refutation of its negation.  The output stays below ``(|Φ| + |π|)**2``.
"""

import random

from qbfproofs import check_clause_proof, negate, prove_by_expansion, serialize_qdimacs, translate
from qbfproofs.corpus import random_true_qcnf

rng = random.Random(11)
f = random_true_qcnf(rng, num_vars=6, num_clauses=5, max_len=3)
print(serialize_qdimacs(f))

neg = negate(f)
print(serialize_qdimacs(neg.negated))

p = prove_by_expansion(f)
out, report = translate(f, p, neg)
print(report.to_text())
print("accepted:", check_clause_proof(out).proves)
