"""Random small QCNFs for property tests (not a benchmark family)."""

from __future__ import annotations

import random

from .core import EXISTS, FORALL, QCNF
from .oracle import evaluate


def random_qcnf(
    rng: random.Random,
    num_vars: int = 6,
    num_clauses: int = 5,
    max_len: int = 3,
    tautologies: bool = False,
) -> QCNF:
    """Random prefix (shuffled variables, random alternating blocks) and random clauses."""
    vs = list(range(1, num_vars + 1))
    rng.shuffle(vs)
    q = rng.choice((EXISTS, FORALL))
    blocks = []
    i = 0
    while i < len(vs):
        k = rng.randint(1, max(1, min(3, len(vs) - i)))
        blocks.append((q, vs[i : i + k]))
        q = FORALL if q == EXISTS else EXISTS
        i += k
    clauses = []
    for _ in range(num_clauses):
        k = rng.randint(1, min(max_len, num_vars))
        chosen = rng.sample(range(1, num_vars + 1), k)
        c = [v if rng.random() < 0.5 else -v for v in chosen]
        if tautologies and rng.random() < 0.1:
            c.append(-c[0])
        clauses.append(c)
    return QCNF.build(blocks, clauses, num_vars=num_vars)


def random_true_qcnf(rng: random.Random, tries: int = 1000, **kw) -> QCNF:
    for _ in range(tries):
        f = random_qcnf(rng, **kw)
        if evaluate(f):
            return f
    raise RuntimeError("no true formula found")


def corpus(seed: int, count: int, max_vars: int = 10, max_clauses: int = 8) -> list[QCNF]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vars)
        m = rng.randint(1, max_clauses)
        out.append(random_qcnf(rng, num_vars=n, num_clauses=m, max_len=min(4, n)))
    return out
