import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orderlab import lexcode
from orderlab.errors import MalformedCode
from orderlab.order import seq_less_by, validate_poset
from orderlab.trees import automaton, node_in_tree


def antichain3():
    return validate_poset([], [0, 1, 2])


def chain3():
    # 2 below 1 below 0
    return validate_poset([(2, 1), (1, 0)], [0, 1, 2])


def test_antichain_table():
    code = lexcode.encode_order(antichain3())
    assert code.table == {0: (1,), 1: (3,), 2: (5,)}
    assert code.processing_order == (0, 1, 2)


def test_two_element_table():
    code = lexcode.encode_order(validate_poset([(1, 0)], [0, 1]))
    assert code.table == {0: (1,), 1: (0, 1)}


def test_chain_table():
    code = lexcode.encode_order(chain3())
    assert code.table == {0: (1,), 1: (0, 1), 2: (0, 0, 1)}
    for below, above in [(2, 1), (1, 0), (2, 0)]:
        assert seq_less_by(code.table[below], code.table[above], int.__lt__)


def test_anchor_must_be_least_word():
    # 2 sits below both roots; anchoring on the higher word (3,) would
    # produce (2,1), which is not below (1,)
    po = validate_poset([(2, 0), (2, 1)], [0, 1, 2])
    for tie in lexcode.TIE_BREAKS:
        assert lexcode.encode_order(po, tie).table[2] == (0, 1)
    # deeper case: the anchored word (0,1) beats both roots
    po = validate_poset([(2, 0), (3, 1), (3, 2)], [0, 1, 2, 3])
    for tie in lexcode.TIE_BREAKS:
        table = lexcode.encode_order(po, tie).table
        assert table[3] == (0, 0, 1)
        assert seq_less_by(table[3], table[2], int.__lt__)


def test_tie_break_validation():
    with pytest.raises(ValueError):
        lexcode.encode_order(antichain3(), "middle-id")


def test_word_shape_and_injectivity():
    for lt in [[], [(1, 0)], [(2, 1), (1, 0)], [(2, 0), (2, 1)], [(3, 1), (3, 2), (2, 0)]]:
        elems = sorted({x for p in lt for x in p} | {0, 1, 2})
        code = lexcode.encode_order(validate_poset(lt, elems))
        words = list(code.table.values())
        assert len(set(words)) == len(words)
        for w in words:
            assert all(d % 2 == 0 for d in w[:-1])
            assert w[-1] % 2 == 1


def test_encode_element_appends_id():
    code = lexcode.encode_order(antichain3())
    assert lexcode.encode_element(code, 0) == (1, 0)
    chain = lexcode.encode_order(chain3())
    assert lexcode.encode_element(chain, 2) == (0, 0, 1, 2)


def test_encode_seq_concatenates():
    code = lexcode.encode_order(chain3())
    assert lexcode.encode_seq(code, ()) == ()
    assert lexcode.encode_seq(code, (0, 1)) == (1, 0, 0, 1, 1)
    anti = lexcode.encode_order(antichain3())
    assert lexcode.encode_seq(anti, (2,)) == (5, 2)


def test_decode_path_roundtrip_and_errors():
    code = lexcode.encode_order(chain3())
    assert lexcode.decode_path(code, (1, 0, 0, 1, 1)) == (0, 1)
    assert lexcode.decode_path(code, ()) == ()
    with pytest.raises(MalformedCode):
        lexcode.decode_path(code, (0, 0))
    with pytest.raises(MalformedCode):
        lexcode.decode_path(code, (1,))
    with pytest.raises(MalformedCode):
        # odd terminator followed by an id whose code is different
        lexcode.decode_path(code, (1, 2))


def test_converse_witness_on_small_posets():
    # whenever one word extends another's decremented stem, the owner of
    # the extension sits strictly below the stem's owner
    for lt in [[(2, 1), (1, 0)], [(2, 0), (2, 1)], [(3, 1), (3, 2), (2, 0)], []]:
        elems = sorted({x for p in lt for x in p} | {0, 1, 2})
        po = validate_poset(lt, elems)
        code = lexcode.encode_order(po)
        for x, y in itertools.permutations(elems, 2):
            wx, wy = code.table[x], code.table[y]
            stem = wx[:-1] + (wx[-1] - 1,)
            if len(wy) > len(stem) and wy[: len(stem)] == stem:
                assert po.less(y, x)


def test_prefix_freeness_with_ids():
    code = lexcode.encode_order(antichain3())
    full = {x: lexcode.encode_element(code, x) for x in (0, 1, 2)}
    for x, y in itertools.permutations((0, 1, 2), 2):
        assert full[y][: len(full[x])] != full[x]


def test_lift_tree_accepts_coded_nodes():
    po = chain3()
    code = lexcode.encode_order(po)
    aut = automaton(3, 2, 0, [(0, 0, 1), (0, 1, 0), (1, 2, 1)])
    lifted = lexcode.lift_tree(code, aut)
    for word in [(), (0,), (1,), (0, 2), (1, 0), (1, 1, 0, 2)]:
        if node_in_tree(aut, word):
            assert node_in_tree(lifted, lexcode.encode_seq(code, word))
    # prefixes of coded nodes are nodes of the lift
    coded = lexcode.encode_seq(code, (0, 2))
    for i in range(len(coded) + 1):
        assert node_in_tree(lifted, coded[:i])


def test_lift_tree_unary_loop():
    po = validate_poset([], [0])
    code = lexcode.encode_order(po)
    lifted = lexcode.lift_tree(code, automaton(1, 1, 0, [(0, 0, 0)]))
    assert lifted.alphabet_size == 2
    assert node_in_tree(lifted, (1, 0, 1, 0))
    assert node_in_tree(lifted, (1, 0, 1))
    assert not node_in_tree(lifted, (0,))


def test_lift_tree_rejects_mismatched_alphabet():
    code = lexcode.encode_order(validate_poset([], [0, 1]))
    with pytest.raises(ValueError):
        lexcode.lift_tree(code, automaton(3, 1, 0, []))


@settings(derandomize=True, max_examples=60)
@given(st.lists(st.integers(0, 2), max_size=6), st.sampled_from(lexcode.TIE_BREAKS))
def test_roundtrip_random_sequences(seq, tie):
    code = lexcode.encode_order(chain3(), tie)
    assert lexcode.decode_path(code, lexcode.encode_seq(code, seq)) == tuple(seq)
