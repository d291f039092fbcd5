"""
Blocked clause elimination
==========================

Every clause of the iff family is blocked, so elimination empties the matrix.
On random formulas it keeps the truth value.
"""

import random

from qbfproofs import eliminate_blocked, evaluate, gen_iff
from qbfproofs.bce import format_trace
from qbfproofs.corpus import random_qcnf

t = eliminate_blocked(gen_iff(3))
print(format_trace(t))
print("clauses left:", len(t.residual.matrix))

rng = random.Random(0)
for _ in range(5):
    f = random_qcnf(rng, num_vars=6, num_clauses=6)
    t = eliminate_blocked(f)
    print(len(f.matrix), "->", len(t.residual.matrix), evaluate(f) == evaluate(t.residual))
