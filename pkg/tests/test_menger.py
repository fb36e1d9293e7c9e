"""Path systems, separators, waves, and the wave coding."""

import pytest

from orderlab.errors import InvalidSequence, InvalidWarp, MalformedLabel, NotAWave
from orderlab.menger import (
    MengerSystem,
    Warp,
    decode_wave,
    encode_wave,
    enumerate_ab_paths,
    enumerate_waves,
    graph,
    is_separator,
    is_wave,
    label_less,
    maximal_wave,
    menger_solve,
    terminals,
    validate_warp,
    warp_of,
    wave_leq,
    wave_seq_valid,
)


def path3():
    return graph(3, [(0, 1), (1, 2)], [0], [2])


def bowtie():
    # two sources and two sinks all forced through vertex 2
    return graph(5, [(0, 2), (1, 2), (2, 3), (2, 4)], [0, 1], [3, 4])


def diamond():
    return graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)], [0], [3])


def test_graph_validation():
    with pytest.raises(ValueError):
        graph(2, [(0, 2)], [0], [1])
    with pytest.raises(ValueError):
        graph(2, [(1, 1)], [0], [1])
    with pytest.raises(ValueError):
        graph(2, [(0, 1)], [0], [5])
    g = graph(3, [(2, 1), (1, 2)], [0], [2])
    assert g.edges == frozenset({(1, 2)})


def test_enumerate_ab_paths():
    assert enumerate_ab_paths(path3()) == (((0, 1, 2),), False)
    shared = graph(1, [], [0], [0])
    assert enumerate_ab_paths(shared).paths == ((0,),)
    full = enumerate_ab_paths(diamond())
    assert full.paths == ((0, 1, 3), (0, 2, 3))
    capped = enumerate_ab_paths(diamond(), cap=1)
    assert capped == (((0, 1, 3),), True)


def test_is_separator():
    g = path3()
    assert is_separator(g, {1})
    assert is_separator(g, {0})
    assert is_separator(g, {2})
    assert not is_separator(g, set())
    d = diamond()
    assert not is_separator(d, {1})
    assert is_separator(d, {1, 2})


def test_menger_solve_single_edge():
    g = graph(2, [(0, 1)], [0], [1])
    # the residual cut sits as close to the sources as possible
    assert menger_solve(g) == MengerSystem(((0, 1),), frozenset({0}))


def test_menger_solve_path():
    assert menger_solve(path3()) == MengerSystem(((0, 1, 2),), frozenset({0}))


def test_menger_solve_bottleneck():
    system = menger_solve(bowtie())
    assert system == MengerSystem(((0, 2, 3),), frozenset({2}))


def test_menger_solve_two_disjoint():
    g = graph(4, [(0, 2), (1, 3)], [0, 1], [2, 3])
    system = menger_solve(g)
    assert system.paths == ((0, 2), (1, 3))
    assert system.separator == frozenset({0, 1})
    assert is_separator(g, system.separator)
    for p in system.paths:
        assert len(system.separator & set(p)) == 1


def test_validate_warp_errors():
    g = path3()
    with pytest.raises(InvalidWarp):
        validate_warp(g, warp_of([(1, 2)]))
    with pytest.raises(InvalidWarp):
        validate_warp(g, warp_of([(0, 2)]))
    with pytest.raises(InvalidWarp):
        validate_warp(g, Warp(((0,), (0, 1))))
    two = graph(4, [(0, 2), (1, 3)], [0, 1], [2, 3])
    with pytest.raises(InvalidWarp):
        validate_warp(two, warp_of([(0, 2)]))
    touchy = graph(2, [(0, 1)], [0, 1], [1])
    with pytest.raises(InvalidWarp):
        validate_warp(touchy, warp_of([(0, 1), (1,)]))


def test_waves_and_order():
    g = path3()
    tiny = warp_of([(0,)])
    mid = warp_of([(0, 1)])
    full = warp_of([(0, 1, 2)])
    for w in (tiny, mid, full):
        assert is_wave(g, w)
    assert terminals(mid) == frozenset({1})
    assert wave_leq(tiny, mid) and wave_leq(mid, full) and wave_leq(tiny, full)
    assert not wave_leq(full, mid) and not wave_leq(mid, tiny)
    assert enumerate_waves(g).waves == (tiny, mid, full)
    assert maximal_wave(g) == full


def test_warp_need_not_be_wave():
    g = graph(3, [(0, 1), (1, 2), (0, 2)], [0], [2])
    stub = warp_of([(0, 1)])
    validate_warp(g, stub)
    assert not is_wave(g, stub)
    with pytest.raises(NotAWave):
        encode_wave(g, stub)


def test_encode_wave_frozen():
    g = path3()
    seq = encode_wave(g, warp_of([(0, 1)]))
    assert seq == (
        (1, (0,)),
        (2, frozenset({0, 1})),
        (1, (0, 1)),
        (0, 0),
        (0, 0),
        (0, 0),
    )
    assert decode_wave(g, seq) == warp_of([(0, 1)])


def test_wave_seq_valid_prefixes():
    g = path3()
    seq = encode_wave(g, warp_of([(0, 1)]))
    for k in range(len(seq) + 1):
        assert wave_seq_valid(g, seq[:k])
    # a source left blank is never valid once its slot is present
    assert not wave_seq_valid(g, ((0, 0),))
    # a meet-set may only name covered vertices
    assert not wave_seq_valid(
        g,
        ((1, (0,)), (2, frozenset({2})), (0, 0), (0, 0), (0, 0), (0, 0)),
    )
    # complete sequences must put a warp terminal in every meet-set
    assert not wave_seq_valid(
        g,
        ((1, (0,)), (2, frozenset({0})), (1, (0, 1)), (0, 0), (0, 0), (0, 0)),
    )
    assert not wave_seq_valid(g, seq + ((0, 0),) * 2)


def test_decode_rejects_incomplete():
    g = path3()
    seq = encode_wave(g, warp_of([(0, 1)]))
    with pytest.raises(InvalidSequence):
        decode_wave(g, seq[:4])


def test_label_less():
    assert label_less((1, (0,)), (0, 0))
    assert not label_less((0, 0), (1, (0,)))
    assert label_less((2, frozenset({0, 1})), (2, frozenset({0})))
    assert not label_less((2, frozenset({0})), (2, frozenset({0, 1})))
    assert not label_less((2, frozenset({0})), (3, frozenset({0})))
    assert not label_less((1, (0,)), (1, (0, 1)))
    with pytest.raises(MalformedLabel):
        label_less((5,), (0, 0))
    with pytest.raises(MalformedLabel):
        label_less((1, 3), (0, 0))
