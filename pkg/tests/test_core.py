import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qbfproofs.core import (
    EXISTS,
    FORALL,
    QCNF,
    Prefix,
    is_model,
    is_tautology,
    level,
    lit_key,
    make_clause,
    make_term,
    parse_qdimacs,
    serialize_qdimacs,
    sorted_literals,
)
from qbfproofs.errors import FormatError, UnboundVariableError


def test_literal_order_puts_positive_first():
    assert sorted_literals([-2, 3, 2, -1]) == [-1, 2, -2, 3]
    assert lit_key(-4) > lit_key(4)


def test_make_clause_and_term():
    assert make_clause([1, 1, -2]) == frozenset({1, -2})
    with pytest.raises(ValueError):
        make_clause([0])
    assert is_tautology([1, -1])
    with pytest.raises(ValueError):
        make_term([3, -3])


def test_prefix_levels_and_merging():
    p = Prefix.from_blocks([(EXISTS, [1]), (EXISTS, [2]), (FORALL, []), (FORALL, [3]), (EXISTS, [4])])
    assert [b.variables for b in p.blocks] == [(1, 2), (3,), (4,)]
    assert p.level(-2) == 1 and p.level(3) == 2 and p.level(4) == 3
    assert p.is_universal(-3) and p.is_existential(4)
    assert p.order == (1, 2, 3, 4)
    with pytest.raises(UnboundVariableError):
        p.level(9)


def test_prefix_rejects_bad_blocks():
    with pytest.raises(ValueError):
        Prefix.from_blocks([(EXISTS, [1]), (FORALL, [1])])
    with pytest.raises(ValueError):
        Prefix.from_blocks([("x", [1])])


def test_inverted_prefix_swaps_quantifiers():
    p = Prefix.from_blocks([(FORALL, [1]), (EXISTS, [2, 3])])
    inv = p.inverted()
    assert [(b.quantifier, b.variables) for b in inv.blocks] == [(EXISTS, (1,)), (FORALL, (2, 3))]


def test_build_binds_free_variables_outermost():
    f = QCNF.build([(FORALL, [2])], [[1, 2], [-3]])
    assert f.prefix.blocks[0].quantifier == EXISTS
    assert set(f.prefix.blocks[0].variables) == {1, 3}
    assert level(f, 2) == 2
    with pytest.raises(UnboundVariableError):
        QCNF.build([(FORALL, [2])], [[1, 2]], bind_free=False)


def test_is_model():
    m = (frozenset({1, 2}), frozenset({-1, 3}))
    assert is_model(m, frozenset({2, 3}))
    assert not is_model(m, frozenset({1}))


EXAMPLE = """c a comment
p cnf 3 2
a 1 0
e 2 3 0
-1 2 0
1 3 0
"""


def test_parse_and_serialize_example():
    f = parse_qdimacs(EXAMPLE)
    assert f.num_vars == 3
    assert f.universals == (1,)
    assert f.matrix == (frozenset({-1, 2}), frozenset({1, 3}))
    assert serialize_qdimacs(f, ["a comment"]) == EXAMPLE


def test_parse_accepts_bytes_and_multiline_clauses():
    f = parse_qdimacs(b"p cnf 2 2\ne 1 2 0\n1\n2 0 -1 0\n")
    assert f.matrix == (frozenset({1, 2}), frozenset({-1}))


@pytest.mark.parametrize(
    "text",
    [
        "1 2 0\n",
        "p cnf 2\n",
        "p dnf 2 1\n1 0\n",
        "p cnf 2 1\n3 0\n",
        "p cnf 2 2\n1 0\n",
        "p cnf 2 1\n1 2\n",
        "p cnf 2 1\n1 0\ne 2 0\n",
        "p cnf 2 1\ne 1 0\na 1 0\n1 0\n",
        "p cnf 2 1\ne 1\n1 0\n",
        "p cnf 2 1\nx 0\n",
        "p cnf 2 1\np cnf 2 1\n1 0\n",
        "",
    ],
)
def test_parse_rejects_malformed_input(text):
    with pytest.raises(FormatError):
        parse_qdimacs(text)


def test_empty_clause_is_accepted_with_warning(caplog):
    f = parse_qdimacs("p cnf 1 1\ne 1 0\n0\n")
    assert f.has_empty_clause
    assert "empty clause" in caplog.text


clauses = st.lists(
    st.lists(st.integers(1, 8).flatmap(lambda v: st.sampled_from([v, -v])), min_size=1, max_size=4),
    min_size=0,
    max_size=6,
)


@settings(max_examples=100, deadline=None)
@given(order=st.permutations(list(range(1, 9))), cuts=st.lists(st.booleans(), min_size=8, max_size=8), cs=clauses)
def test_qdimacs_round_trip(order, cuts, cs):
    blocks, q = [], EXISTS
    for v, cut in zip(order, cuts):
        if cut or not blocks:
            q = FORALL if blocks and q == EXISTS else EXISTS
            blocks.append((q, []))
        blocks[-1][1].append(v)
    f = QCNF.build(blocks, cs, num_vars=8)
    text = serialize_qdimacs(f)
    g = parse_qdimacs(text)
    assert g == f
    assert serialize_qdimacs(g) == text
