import itertools
import random

import pytest

from qbfproofs.core import QCNF, lit_key
from qbfproofs.corpus import corpus
from qbfproofs.proof import ProofBuilder
from qbfproofs.qres import Q, QU, ClauseProof, forall_reduce


def saturate(f: QCNF, mode: str = Q, cap: int = 4000) -> ClauseProof | None:
    """Small Q/QU-resolution saturation refuter, used as a test oracle.

    Every derived clause is ∀-reduced with explicit reduction nodes.  Returns a
    refutation or ``None`` when saturation ends (or hits ``cap`` clauses)
    without the empty clause.
    """
    b = ProofBuilder()
    known: dict[frozenset, int] = {}
    queue = []

    def add(nid: int):
        c = b.literals(nid)
        red = forall_reduce(f, c)
        if red != c:
            nid = b.reduce_all(nid, sorted(c - red, key=lit_key))
        if red in known:
            return None
        known[red] = nid
        queue.append(red)
        return nid

    for c in f.matrix:
        if len(set(map(abs, c))) != len(c):
            continue
        nid = add(b.leaf(c))
        if nid is not None and not b.literals(nid):
            return ClauseProof(f, tuple(b.nodes), mode)
    done = []
    while queue and len(known) < cap:
        c = queue.pop(0)
        for d in done:
            for l in c:
                if -l not in d or (mode == Q and f.is_universal(l)):
                    continue
                cu = (c | d) - {l, -l}
                if len(set(map(abs, cu))) != len(cu) or forall_reduce(f, cu) in known:
                    continue
                nid = add(b.resolve(known[c], known[d], abs(l)))
                if nid is not None and not b.literals(nid):
                    return _trim(f, b, nid, mode)
        done.append(c)
    return None


def _trim(f, b, root, mode):
    # drop nodes after the root so that the last node is the root
    nodes = [n for n in b.nodes if n.id <= root]
    return ClauseProof(f, tuple(nodes), mode)


def all_assignments(variables):
    variables = list(variables)
    for bits in itertools.product((False, True), repeat=len(variables)):
        yield dict(zip(variables, bits))


@pytest.fixture(scope="session")
def random_corpus():
    """200 random QCNFs with at most 10 variables (fixed seed)."""
    return corpus(seed=20261015, count=200, max_vars=10, max_clauses=8)


@pytest.fixture
def rng():
    return random.Random(1234)


__all__ = ["saturate", "all_assignments", "Q", "QU"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
