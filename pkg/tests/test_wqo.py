import pytest
from hypothesis import given, settings, strategies as st

from orderlab import oracles
from orderlab.errors import InvalidNode, PreconditionViolation
from orderlab.order import (
    divisibility,
    finite_quasi_order,
    natural_equality,
    natural_order,
)
from orderlab.wqo import (
    KTree,
    compose_ktree,
    decompose_ktree,
    higman_leq,
    higman_lift,
    is_bad,
    ktree_key,
    ktree_leq,
    min_bad_sequence,
    nash_williams_step,
    ramsey_pairs_homogeneous,
    subtree,
    tree_meet,
)


def test_higman_basics():
    leq = natural_order()
    assert higman_leq((), (4, 2), leq)
    assert higman_leq((1, 2), (0, 1, 3), leq)
    assert not higman_leq((3, 1), (1, 3), leq)
    assert not higman_leq((0, 0), (0,), leq)
    div = divisibility()
    assert higman_leq((2, 3), (4, 2, 9), div)


def test_higman_lift_is_a_quasi_order():
    lifted = higman_lift(natural_equality())
    assert lifted.leq((1, 2), (0, 1, 0, 2))
    assert not lifted.leq((1, 2), (2, 1))
    assert lifted.contains((0, 5)) and not lifted.contains([0])


def test_is_bad_divisibility_chain():
    div = divisibility()
    assert is_bad((12, 6, 3), div) is None
    assert is_bad((12, 6, 3, 12), div) == (0, 3)
    assert is_bad((), div) is None


def test_min_bad_sequence_frozen():
    assert min_bad_sequence(natural_equality(), int.__lt__, 5, 3) == (0, 1, 2)
    assert min_bad_sequence(natural_order(), int.__lt__, 5, 3) == (2, 1, 0)
    assert min_bad_sequence(natural_order(), int.__lt__, 5, 6) is None


def test_nash_williams_step_frozen():
    eq = natural_equality()
    seqs = ((0, 1, 1), (2, 1), (3, 1))
    assert nash_williams_step(seqs, {1, 2}, eq) == ((0, 1, 1), (2,), (3,))
    assert nash_williams_step(seqs, {0, 1, 2}, eq) == ((0, 1), (2,), (3,))


def test_nash_williams_step_clauses():
    eq = natural_equality()
    good = ((0, 1, 1), (2, 1), (3, 1))
    cases = [
        (good, (), "s-non-empty"),
        (good, {5}, "s-in-window"),
        (((0, 1), (), (3, 1)), {0}, "entries-non-empty"),
        (((1,), (1, 2)), {0}, "input-bad"),
        (((0, 2), (1, 3)), {0, 1}, "perfect-on-s"),
    ]
    for seqs, s, clause in cases:
        with pytest.raises(PreconditionViolation) as err:
            nash_williams_step(seqs, s, eq)
        assert err.value.clause == clause


def chain2():
    return finite_quasi_order((0, 1), [(0, 0), (1, 1), (0, 1)], "chain2")


def anti2():
    return finite_quasi_order((0, 1), [(0, 0), (1, 1)], "anti2")


def test_ktree_validation():
    with pytest.raises(ValueError):
        KTree((0, -1), (0, 0))
    with pytest.raises(InvalidNode):
        KTree((-1, 5), (0, 0))
    with pytest.raises(ValueError):
        KTree((-1,), (0, 0))
    with pytest.raises(ValueError):
        KTree((-1, -1), (0, 0))
    t = KTree((-1, 0, 0), (0, 1, 0))
    assert t.size == 3 and t.root == 0
    assert t.children(0) == (1, 2)


def test_tree_meet():
    star = KTree((-1, 0, 0), (0, 0, 0))
    assert tree_meet(star, 1, 2) == 0
    assert tree_meet(star, 1, 1) == 1
    chain = KTree((-1, 0, 1), (0, 0, 0))
    assert tree_meet(chain, 2, 1) == 1


def test_ktree_leq_directions():
    single = KTree((-1,), (0,))
    pair = KTree((-1, 0), (0, 1))
    assert ktree_leq(single, pair, chain2())
    assert not ktree_leq(pair, single, chain2())
    # the antichain forbids mapping label 0 onto label 1
    low_child = KTree((-1, 0), (1, 0))
    assert ktree_leq(single, low_child, anti2())
    assert not ktree_leq(single, KTree((-1, 0), (1, 1)), anti2())


def test_ktree_leq_needs_meet_preservation():
    # a 2-chain embeds into a 3-chain but a 3-star does not: images of the
    # star's two leaves would meet at the image of the root or below it
    chain3 = KTree((-1, 0, 1), (0, 0, 0))
    star3 = KTree((-1, 0, 0), (0, 0, 0))
    q = anti2()
    assert ktree_leq(KTree((-1, 0), (0, 0)), chain3, q)
    assert not ktree_leq(star3, chain3, q)
    assert ktree_leq(chain3, chain3, q)


def test_decompose_compose_subtree():
    t = KTree((-1, 0, 0, 2), (3, 1, 4, 1))
    label, subs = decompose_ktree(t)
    assert label == 3 and len(subs) == 2
    rebuilt = compose_ktree(label, subs)
    assert ktree_key(rebuilt) == ktree_key(t)
    assert subtree(t, 2).labels == (4, 1)


def test_ktree_key_is_isomorphism_invariant():
    a = KTree((-1, 0, 0), (0, 1, 2))
    b = KTree((-1, 0, 0), (0, 2, 1))
    assert ktree_key(a) == ktree_key(b)
    assert ktree_key(a) != ktree_key(KTree((-1, 0, 1), (0, 1, 2)))


def test_ramsey_pairs_homogeneous():
    parity = lambda i, j: (i + j) % 2
    assert ramsey_pairs_homogeneous(6, parity, 3) == ((0, 2, 4), 0)
    assert ramsey_pairs_homogeneous(2, parity, 3) is None
    subset, color = ramsey_pairs_homogeneous(4, lambda i, j: 7, 2)
    assert subset == (0, 1) and color == 7


@settings(derandomize=True, max_examples=40)
@given(
    st.lists(st.integers(0, 2), max_size=4),
    st.lists(st.integers(0, 2), max_size=4),
)
def test_higman_matches_injection_search(sigma, tau):
    leq = natural_order()
    assert higman_leq(sigma, tau, leq) == oracles.brute_higman(sigma, tau, leq)
