"""
Circuit definitions need universal pivots
=========================================

Negating NAND definitions turns gate outputs into universal variables.  The
emitted refutation resolves on them, so QU-resolution accepts it and plain
Q-resolution does not.  The size grows by 12 steps per gate.
"""

import dataclasses

from qbfproofs import (
    THREE_GATE_CIRCUIT,
    check_clause_proof,
    emit_definition_refutation,
    gen_definitions,
    nand_chain,
    negate,
)

print(negate(gen_definitions(THREE_GATE_CIRCUIT)).negated.prefix)

p = emit_definition_refutation(THREE_GATE_CIRCUIT)
print("qu:", check_clause_proof(p).proves)
q = check_clause_proof(dataclasses.replace(p, mode="q"))
print("q:", q.proves, q.first("universal-pivot"))

for g in (1, 5, 25, 50):
    print(g, check_clause_proof(emit_definition_refutation(nand_chain(g))).size)
