import pytest

from orderlab.errors import BadLetter, InvalidWitness, WellFounded
from orderlab.order import validate_poset
from orderlab.trees import (
    LassoPath,
    automaton,
    canonical_lasso,
    challenger_check,
    lasso_in_tree,
    leftmost_path,
    live_states,
    minimal_path,
    node_in_tree,
    path_left_of,
)


def loop_and_branch():
    # state 0 branches: letter 0 leads to state 1 (self loop on 1),
    # letter 1 loops back to 0
    return automaton(2, 2, 0, [(0, 0, 1), (0, 1, 0), (1, 1, 1)])


def test_automaton_validation():
    with pytest.raises(ValueError):
        automaton(1, 0, 0, [])
    with pytest.raises(ValueError):
        automaton(1, 1, 1, [])
    with pytest.raises(BadLetter):
        automaton(1, 1, 0, [(0, 3, 0)])
    with pytest.raises(ValueError):
        automaton(2, 1, 0, [(0, 0, 0), (0, 0, 5)])


def test_node_membership():
    aut = loop_and_branch()
    assert node_in_tree(aut, ())
    assert node_in_tree(aut, (1, 1, 0, 1))
    assert not node_in_tree(aut, (0, 0))


def test_live_states_fixpoint():
    dead = automaton(1, 3, 0, [(0, 0, 1), (1, 0, 2)])
    assert live_states(dead) == frozenset()
    alive = automaton(1, 3, 0, [(0, 0, 1), (1, 0, 2), (2, 0, 2)])
    assert live_states(alive) == frozenset({0, 1, 2})
    mixed = automaton(2, 2, 0, [(0, 0, 0), (0, 1, 1)])
    assert live_states(mixed) == frozenset({0})


def test_lasso_validation_and_expansion():
    with pytest.raises(ValueError):
        LassoPath((), ())
    l = LassoPath((2,), (0, 1))
    assert l.take(5) == (2, 0, 1, 0, 1)
    assert l.description_size() == 3


def test_canonical_lasso():
    assert canonical_lasso(LassoPath((0, 1), (1,))) == LassoPath((0,), (1,))
    assert canonical_lasso(LassoPath((), (1, 0, 1, 0))) == LassoPath((), (1, 0))
    # rotating a trailing repeat back into the cycle
    assert canonical_lasso(LassoPath((1, 0), (1, 0))) == LassoPath((), (1, 0))


def test_lasso_in_tree():
    aut = loop_and_branch()
    assert lasso_in_tree(aut, LassoPath((0,), (1,)))
    assert lasso_in_tree(aut, LassoPath((), (1,)))
    assert not lasso_in_tree(aut, LassoPath((0,), (0,)))
    assert not lasso_in_tree(aut, LassoPath((0, 0), (1,)))


def test_leftmost_path():
    aut = loop_and_branch()
    assert leftmost_path(aut) == LassoPath((0,), (1,))
    dead = automaton(1, 2, 0, [(0, 0, 1)])
    with pytest.raises(WellFounded):
        leftmost_path(dead)


def test_leftmost_skips_dead_branches():
    # letter 0 from the start dies after one step; the leftmost live
    # choice is letter 1
    aut = automaton(2, 3, 0, [(0, 0, 1), (0, 1, 2), (2, 0, 2)])
    assert leftmost_path(aut) == LassoPath((1,), (0,))


def test_path_left_of():
    po = validate_poset([(1, 0)], [0, 1])
    ones = LassoPath((), (1,))
    zeros = LassoPath((), (0,))
    assert path_left_of(ones, zeros, po)
    assert not path_left_of(zeros, ones, po)
    assert not path_left_of(ones, ones, po)
    anti = validate_poset([], [0, 1])
    assert not path_left_of(ones, zeros, anti)
    # same infinite word under different descriptions
    a = LassoPath((), (0, 1))
    b = LassoPath((0,), (1, 0))
    assert not path_left_of(a, b, po) and not path_left_of(b, a, po)
    # divergence past both descriptions
    c = LassoPath((0, 1, 0), (0,))
    assert path_left_of(a, c, po)
    assert not path_left_of(c, a, po)


def test_minimal_path_unary():
    aut = automaton(1, 1, 0, [(0, 0, 0)])
    po = validate_poset([], [0])
    assert minimal_path(aut, po) == LassoPath((), (0,))


def test_minimal_path_prefers_order_not_ids():
    # 1 is below 0, so the least path repeats letter 1 forever
    aut = automaton(2, 1, 0, [(0, 0, 0), (0, 1, 0)])
    po = validate_poset([(1, 0)], [0, 1])
    assert minimal_path(aut, po) == LassoPath((), (1,))
    anti = validate_poset([], [0, 1])
    assert minimal_path(aut, anti) == LassoPath((), (0,))


def test_minimal_path_requires_matching_alphabet():
    aut = automaton(2, 1, 0, [(0, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        minimal_path(aut, validate_poset([], [0, 1, 2]))
    with pytest.raises(WellFounded):
        minimal_path(automaton(1, 1, 0, []), validate_poset([], [0]))


def test_challenger_check():
    aut = automaton(2, 1, 0, [(0, 0, 0), (0, 1, 0)])
    po = validate_poset([(1, 0)], [0, 1])
    witness = LassoPath((), (1,))
    report = challenger_check(
        aut, witness, [LassoPath((), (0,)), LassoPath((0, 0), (1,))], po
    )
    assert report.minimal
    assert [e.in_tree for e in report.entries] == [True, True]
    assert [e.left_of_witness for e in report.entries] == [False, False]
    beaten = challenger_check(aut, LassoPath((), (0,)), [witness], po)
    assert not beaten.minimal
    with pytest.raises(InvalidWitness):
        challenger_check(automaton(2, 1, 0, [(0, 0, 0)]), witness, [], po)
