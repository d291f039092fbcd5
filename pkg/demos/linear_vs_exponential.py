"""
Short refutations of the negation, exponential term proofs
==========================================================

The iff family ``∀x1 ∃y1 … ∀xn ∃yn. ⋀ (xi ↔ yi)`` is true.  Any term proof
of it needs ``2**n`` model leaves, while its negation has a Q-resolution
refutation with exactly ``7n`` steps.
"""

from qbfproofs import (
    check_clause_proof,
    check_term_proof,
    emit_linear_refutation,
    gen_iff,
    min_universal_literals,
    prove_by_expansion,
)

# every model of the matrix carries all n universal literals
for n in range(1, 6):
    f = gen_iff(n)
    k = min_universal_literals(f)
    term = check_term_proof(prove_by_expansion(f))
    ref = check_clause_proof(emit_linear_refutation(n))
    print(f"n={n}: min universal literals {k}, term proof leaves {term.leaves}, "
          f"term proof size {term.size}, refutation size {ref.size}")

# the refutation scales linearly
for n in (10, 100, 1000):
    print(n, check_clause_proof(emit_linear_refutation(n)).size)
