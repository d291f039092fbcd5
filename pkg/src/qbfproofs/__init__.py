"""Q-resolution, term-resolution and negation-refutation for QCNF formulas."""

from .bce import BceTrace, eliminate_blocked, is_blocked_literal
from .core import (
    EXISTS,
    FORALL,
    QCNF,
    Prefix,
    is_model,
    level,
    make_clause,
    make_term,
    parse_qdimacs,
    serialize_qdimacs,
)
from .errors import BudgetExceeded, FormatError, FormulaFalse, InferenceError, NegationError, QbfError
from .families import (
    THREE_GATE_CIRCUIT,
    Circuit,
    Gate,
    emit_definition_refutation,
    emit_linear_refutation,
    gen_definitions,
    gen_iff,
    nand_chain,
)
from .negation import NegResult, negate, verify_negation_semantics
from .oracle import enumerate_models, evaluate, prove_by_expansion
from .proof import CheckReport, Node
from .qres import Q, QU, ClauseProof, check_clause_proof, forall_reduce, q_resolvent
from .term import (
    TermProof,
    agrees,
    check_term_proof,
    exists_reduce,
    find_agreeing_leaf,
    min_universal_literals,
    term_resolvent,
)
from .translate import TranslationReport, translate

__version__ = "0.1.0"
