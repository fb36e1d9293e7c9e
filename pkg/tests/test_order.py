import pytest
from hypothesis import given, settings, strategies as st

from orderlab.errors import CycleError, UnknownElement
from orderlab.order import (
    divisibility,
    descending_chain_search,
    finite_quasi_order,
    natural_equality,
    natural_order,
    quasi_from_poset,
    seq_less,
    seq_less_by,
    transitive_closure,
    validate_poset,
)


def chain3():
    return validate_poset([(2, 1), (1, 0)], [0, 1, 2])


def test_transitive_closure_adds_composites():
    closed = transitive_closure([(2, 1), (1, 0)])
    assert (2, 0) in closed
    assert closed == frozenset({(2, 1), (1, 0), (2, 0)})


def test_validate_poset_closes_and_rejects():
    po = chain3()
    assert po.less(2, 0)
    assert not po.less(0, 2)
    with pytest.raises(CycleError):
        validate_poset([(0, 1), (1, 0)], [0, 1])
    with pytest.raises(UnknownElement):
        validate_poset([(0, 5)], [0, 1])


def test_seq_less_divergence_and_prefix():
    po = chain3()
    assert seq_less((2,), (1,), po)
    assert seq_less((1, 2), (1, 0), po)
    # a proper prefix is not below its extension
    assert not seq_less((1,), (1, 2), po)
    assert not seq_less((1, 2), (1,), po)
    assert not seq_less((), (0,), po)
    # incomparable first divergence
    anti = validate_poset([], [0, 1])
    assert not seq_less((0,), (1,), anti)
    assert not seq_less((1,), (0,), anti)


def test_seq_less_checks_membership():
    with pytest.raises(UnknownElement):
        seq_less((7,), (0,), chain3())


def test_builtin_quasi_orders():
    leq = natural_order()
    assert leq.leq(2, 5) and not leq.leq(5, 2)
    eq = natural_equality()
    assert eq.leq(3, 3) and not eq.leq(3, 4)
    div = divisibility()
    assert div.leq(3, 12)
    assert not div.leq(12, 3)
    assert div.leq(5, 0) and not div.leq(0, 5) and div.leq(0, 0)
    assert div.contains(0) and not div.contains(-1) and not div.contains(True)


def test_finite_quasi_order_enforces_axioms():
    q = finite_quasi_order((0, 1), [(0, 0), (1, 1), (0, 1)], "chain2")
    assert q.leq(0, 1) and not q.leq(1, 0)
    assert q.strictly_less(0, 1)
    with pytest.raises(ValueError):
        finite_quasi_order((0, 1), [(0, 0)], "broken")
    with pytest.raises(ValueError):
        finite_quasi_order(
            (0, 1, 2), [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)], "broken"
        )
    with pytest.raises(UnknownElement):
        finite_quasi_order((0,), [(0, 0), (0, 9)])


def test_quasi_from_poset_is_reflexive():
    q = quasi_from_poset(chain3())
    assert q.leq(1, 1)
    assert q.leq(2, 0)
    assert not q.leq(0, 2)
    assert q.elements == (0, 1, 2)


def test_descending_chain_search():
    div = divisibility()
    chain = descending_chain_search(div, range(1, 13), 3, 13)
    assert chain is not None and len(chain) == 3
    assert all(div.strictly_less(chain[i + 1], chain[i]) for i in range(2))
    assert descending_chain_search(natural_equality(), range(5), 2, 5) is None
    with pytest.raises(ValueError):
        descending_chain_search(div, range(3), 0, 3)


@settings(derandomize=True, max_examples=60)
@given(st.lists(st.integers(0, 3), max_size=5), st.lists(st.integers(0, 3), max_size=5))
def test_seq_less_by_is_a_strict_order(a, b):
    lt = int.__lt__
    assert not seq_less_by(a, a, lt)
    assert not (seq_less_by(a, b, lt) and seq_less_by(b, a, lt))
