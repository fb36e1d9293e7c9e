"""Vertex-disjoint path systems, waves, and their sequence coding in
finite undirected graphs.

A warp is a family of vertex-disjoint paths starting at the sources and
covering them, with source vertices allowed only as first elements.  A wave
is a warp whose terminals separate the sources from the sinks.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    InvalidSequence,
    InvalidWarp,
    MalformedLabel,
    NotAWave,
)

Path = tuple[int, ...]
Label = tuple[int, object]


@dataclass(frozen=True)
class MengerGraph:
    """Finite undirected graph with source set ``A`` and sink set ``B``."""

    n: int
    edges: frozenset[tuple[int, int]]
    A: frozenset[int]
    B: frozenset[int]


def graph(
    n: int, edges: Iterable[Sequence[int]], a: Iterable[int], b: Iterable[int]
) -> MengerGraph:
    """Validated graph; edges are unordered pairs of distinct vertices."""
    norm = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) leaves the vertex set")
        if u == v:
            raise ValueError(f"loop at {u} is not allowed")
        norm.add((min(u, v), max(u, v)))
    aset, bset = frozenset(a), frozenset(b)
    for side, name in ((aset, "A"), (bset, "B")):
        for v in side:
            if not 0 <= v < n:
                raise ValueError(f"{name} contains {v}, outside the vertex set")
    return MengerGraph(n, frozenset(norm), aset, bset)


def adjacency(g: MengerGraph) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return {v: tuple(sorted(ws)) for v, ws in adj.items()}


class PathEnumeration(NamedTuple):
    paths: tuple[Path, ...]
    truncated: bool


def enumerate_ab_paths(g: MengerGraph, cap: Optional[int] = None) -> PathEnumeration:
    """All simple paths from a source to a sink, sorted by length then
    lexicographically, optionally truncated at ``cap``."""
    adj = adjacency(g)
    found: list[Path] = []

    def dfs(path: list[int], seen: set[int]) -> None:
        v = path[-1]
        if v in g.B:
            found.append(tuple(path))
        for w in adj[v]:
            if w not in seen:
                path.append(w)
                seen.add(w)
                dfs(path, seen)
                seen.discard(w)
                path.pop()

    for a in sorted(g.A):
        dfs([a], {a})
    found.sort(key=lambda p: (len(p), p))
    if cap is not None and len(found) > cap:
        return PathEnumeration(tuple(found[:cap]), True)
    return PathEnumeration(tuple(found), False)


def is_separator(g: MengerGraph, c: Iterable[int]) -> bool:
    """Whether every source-to-sink path meets ``c``.

    Equivalent to: no sink is reachable from a source once the vertices of
    ``c`` are removed.
    """
    blocked = set(c)
    adj = adjacency(g)
    queue = deque(v for v in sorted(g.A) if v not in blocked)
    seen = set(queue)
    while queue:
        v = queue.popleft()
        if v in g.B:
            return False
        for w in adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return True


@dataclass(frozen=True)
class Warp:
    """Vertex-disjoint paths from the sources, one per source vertex."""

    paths: tuple[Path, ...]


def warp_of(paths: Iterable[Sequence[int]]) -> Warp:
    """Canonical form: paths sorted by their starting vertex."""
    return Warp(tuple(sorted(tuple(p) for p in paths)))


def warp_vertices(w: Warp) -> frozenset[int]:
    return frozenset(v for p in w.paths for v in p)


def warp_edges(w: Warp) -> frozenset[tuple[int, int]]:
    return frozenset(
        (min(p[i], p[i + 1]), max(p[i], p[i + 1]))
        for p in w.paths
        for i in range(len(p) - 1)
    )


def validate_warp(g: MengerGraph, w: Warp) -> None:
    """Raise `InvalidWarp` unless ``w`` is a warp of ``g``."""
    starts = []
    seen_all: set[int] = set()
    for p in w.paths:
        if not p:
            raise InvalidWarp("warp paths are non-empty")
        if p[0] not in g.A:
            raise InvalidWarp(f"path {p} does not start at a source")
        for v in p:
            if not 0 <= v < g.n:
                raise InvalidWarp(f"path {p} leaves the vertex set")
        for v in p[1:]:
            if v in g.A:
                raise InvalidWarp(f"path {p} revisits the source set")
        for i in range(len(p) - 1):
            e = (min(p[i], p[i + 1]), max(p[i], p[i + 1]))
            if e not in g.edges:
                raise InvalidWarp(f"path {p} uses the missing edge {e}")
        if len(set(p)) != len(p):
            raise InvalidWarp(f"path {p} repeats a vertex")
        if seen_all & set(p):
            raise InvalidWarp("warp paths must be vertex-disjoint")
        seen_all |= set(p)
        starts.append(p[0])
    if set(starts) != set(g.A) or len(starts) != len(g.A):
        raise InvalidWarp("warp paths must cover each source exactly once")


def terminals(w: Warp) -> frozenset[int]:
    """Final vertices of the warp's paths."""
    return frozenset(p[-1] for p in w.paths)


def is_wave(g: MengerGraph, w: Warp) -> bool:
    validate_warp(g, w)
    return is_separator(g, terminals(w))


def wave_leq(w: Warp, y: Warp) -> bool:
    """Subgraph order: every vertex and edge of ``w`` appears in ``y``."""
    return warp_vertices(w) <= warp_vertices(y) and warp_edges(w) <= warp_edges(y)


def _source_paths(g: MengerGraph, a: int) -> list[Path]:
    """Simple paths from ``a`` whose later vertices avoid the sources."""
    adj = adjacency(g)
    out: list[Path] = []

    def dfs(path: list[int], seen: set[int]) -> None:
        out.append(tuple(path))
        for w in adj[path[-1]]:
            if w not in seen and w not in g.A:
                path.append(w)
                seen.add(w)
                dfs(path, seen)
                seen.discard(w)
                path.pop()

    dfs([a], {a})
    return out


def enumerate_warps(g: MengerGraph) -> list[Warp]:
    sources = sorted(g.A)
    choices = [_source_paths(g, a) for a in sources]
    out: list[Warp] = []

    def rec(i: int, used: set[int], acc: list[Path]) -> None:
        if i == len(sources):
            out.append(Warp(tuple(acc)))
            return
        for p in choices[i]:
            if used & set(p):
                continue
            acc.append(p)
            rec(i + 1, used | set(p), acc)
            acc.pop()

    rec(0, set(), [])
    return out


class WaveEnumeration(NamedTuple):
    waves: tuple[Warp, ...]
    truncated: bool


def enumerate_waves(g: MengerGraph, cap: Optional[int] = None) -> WaveEnumeration:
    """All waves in canonical order, optionally truncated at ``cap``."""
    waves = [w for w in enumerate_warps(g) if is_separator(g, terminals(w))]
    waves.sort(key=lambda w: w.paths)
    if cap is not None and len(waves) > cap:
        return WaveEnumeration(tuple(waves[:cap]), True)
    return WaveEnumeration(tuple(waves), False)


def maximal_wave(g: MengerGraph) -> Warp:
    """The canonically greatest wave among those with no strictly larger wave.

    The trivial warp of singleton source paths is always a wave, so a
    maximal one exists.
    """
    waves = enumerate_waves(g).waves
    maximal = [
        w
        for w in waves
        if not any(y != w and wave_leq(w, y) for y in waves)
    ]
    return max(maximal, key=lambda w: w.paths)


@dataclass(frozen=True)
class MengerSystem:
    """Disjoint source-sink paths and a separator of the same size, with the
    separator meeting each path exactly once."""

    paths: tuple[Path, ...]
    separator: frozenset[int]


def menger_solve(g: MengerGraph) -> MengerSystem:
    """Maximum vertex-disjoint path system and matching minimum separator.

    Vertex-splitting max-flow; the separator is read off the residual
    reachability cut, which is the unique minimum cut closest to the
    sources.
    """
    inf = g.n + 1
    source, sink = 2 * g.n, 2 * g.n + 1
    cap: dict[tuple[int, int], int] = {}

    def arc(u: int, v: int, c: int) -> None:
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, 1)
    for u, v in sorted(g.edges):
        arc(2 * u + 1, 2 * v, inf)
        arc(2 * v + 1, 2 * u, inf)
    for a in sorted(g.A):
        arc(source, 2 * a, inf)
    for b in sorted(g.B):
        arc(2 * b + 1, sink, inf)
    neighbours: dict[int, list[int]] = {}
    for u, v in cap:
        neighbours.setdefault(u, []).append(v)
    for vs in neighbours.values():
        vs.sort()
    flow: dict[tuple[int, int], int] = {k: 0 for k in cap}

    def bfs_augment() -> int:
        prev: dict[int, int] = {source: source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for v in neighbours.get(u, ()):
                if v not in prev and cap[(u, v)] - flow[(u, v)] > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            return 0
        path = [sink]
        while path[-1] != source:
            path.append(prev[path[-1]])
        path.reverse()
        bottleneck = min(
            cap[(path[i], path[i + 1])] - flow[(path[i], path[i + 1])]
            for i in range(len(path) - 1)
        )
        for i in range(len(path) - 1):
            flow[(path[i], path[i + 1])] += bottleneck
            flow[(path[i + 1], path[i])] -= bottleneck
        return bottleneck

    while bfs_augment():
        pass

    reachable = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in neighbours.get(u, ()):
            if v not in reachable and cap[(u, v)] - flow[(u, v)] > 0:
                reachable.add(v)
                queue.append(v)
    separator = frozenset(
        v for v in range(g.n) if 2 * v in reachable and 2 * v + 1 not in reachable
    )

    paths: list[Path] = []
    for a in sorted(g.A):
        if flow[(source, 2 * a)] <= 0:
            continue
        walk = [a]
        v = a
        while True:
            out = 2 * v + 1
            if flow.get((out, sink), 0) > 0:
                flow[(out, sink)] -= 1
                break
            for w in neighbours.get(out, ()):
                if w != sink and w % 2 == 0 and flow[(out, w)] > 0:
                    flow[(out, w)] -= 1
                    v = w // 2
                    walk.append(v)
                    break
            else:
                raise AssertionError("flow decomposition lost a unit")
        paths.append(tuple(walk))
    paths.sort()
    return MengerSystem(tuple(paths), separator)


def _path_prefixes(w: Warp) -> dict[int, Path]:
    """Each warp vertex mapped to the unique warp path prefix ending there."""
    out: dict[int, Path] = {}
    for p in w.paths:
        for i, v in enumerate(p):
            out[v] = p[: i + 1]
    return out


def encode_wave(
    g: MengerGraph, wave: Warp, paths: Optional[Sequence[Path]] = None
) -> tuple[Label, ...]:
    """Labelled sequence describing a wave against the path enumeration.

    Even slot ``2i`` tells how vertex ``i`` is covered; odd slot ``2i+1``
    records which wave vertices meet enumerated path ``i``.  Slots past the
    shorter enumeration are filled with ``(0, 0)``.
    """
    if paths is None:
        paths = enumerate_ab_paths(g).paths
    if not is_wave(g, wave):
        raise NotAWave("only waves are encoded")
    covered = warp_vertices(wave)
    prefixes = _path_prefixes(wave)
    top = max(g.n, len(paths))
    out: list[Label] = []
    for i in range(top):
        if i < g.n and i in covered:
            out.append((1, prefixes[i]))
        else:
            out.append((0, 0))
        if i < len(paths):
            out.append((i + 2, frozenset(paths[i]) & covered))
        else:
            out.append((0, 0))
    return tuple(out)


def _label_shape(label: Label) -> str:
    if not isinstance(label, tuple) or len(label) != 2:
        raise MalformedLabel(f"{label!r} is not a pair")
    kind, payload = label
    if kind == 0 and payload == 0:
        return "blank"
    if kind == 1 and isinstance(payload, tuple):
        return "cover"
    if isinstance(kind, int) and kind >= 2 and isinstance(payload, (set, frozenset)):
        return "meet"
    raise MalformedLabel(f"{label!r} has an unrecognised shape")


def label_less(d: Label, e: Label) -> bool:
    """Strict label order: covering beats blank at the same vertex slot, and
    strictly shrinking meet-sets grow at the same path slot."""
    ds, es = _label_shape(d), _label_shape(e)
    if ds == "cover" and es == "blank":
        return True
    if ds == "meet" and es == "meet" and d[0] == e[0]:
        return set(e[1]) < set(d[1])
    return False


def _check_path_label(g: MengerGraph, q: Path, end: int) -> bool:
    if not q or q[-1] != end or len(set(q)) != len(q):
        return False
    if q[0] not in g.A or any(v in g.A for v in q[1:]):
        return False
    if any(not 0 <= v < g.n for v in q):
        return False
    return all(
        (min(q[i], q[i + 1]), max(q[i], q[i + 1])) in g.edges for i in range(len(q) - 1)
    )


def wave_seq_valid(
    g: MengerGraph, seq: Sequence[Label], paths: Optional[Sequence[Path]] = None
) -> bool:
    """Whether ``seq`` is a node of the wave-coding tree (a valid prefix).

    Checks every condition that mentions only the positions present; the
    terminal-vertex condition on the meet-sets applies to complete
    sequences only.
    """
    if paths is None:
        paths = enumerate_ab_paths(g).paths
    m = len(paths)
    top = max(g.n, m)
    if len(seq) > 2 * top:
        return False
    covers: dict[int, Path] = {}
    meets: dict[int, frozenset[int]] = {}
    for k, label in enumerate(seq):
        shape = _label_shape(label)
        if k % 2 == 0:
            i = k // 2
            if shape == "blank":
                continue
            if shape != "cover" or i >= g.n:
                return False
            if not _check_path_label(g, label[1], i):
                return False
            covers[i] = label[1]
        else:
            i = k // 2
            if i >= m:
                if shape != "blank":
                    return False
                continue
            if shape != "meet" or label[0] != i + 2:
                return False
            chosen = frozenset(label[1])
            if not chosen or not chosen <= set(paths[i]):
                return False
            meets[i] = chosen
    # pairwise coherence of the covering paths
    for i, j in itertools.combinations(sorted(covers), 2):
        qi, qj = covers[i], covers[j]
        if set(qi) & set(qj):
            if qi != qj[: len(qi)] and qj != qi[: len(qj)]:
                return False
    defined = len(seq)
    for i, q in covers.items():
        for v in q:
            fellow = 2 * v
            if fellow < defined and seq[fellow] == (0, 0):
                return False
    for v in sorted(g.A):
        if 2 * v < defined and v < g.n and seq[2 * v] == (0, 0):
            return False
    for i, chosen in meets.items():
        for v in chosen:
            fellow = 2 * v
            if fellow < defined and seq[fellow] == (0, 0):
                return False
    if len(seq) == 2 * top:
        for i, chosen in meets.items():
            if not any(
                v in covers
                and not any(
                    len(covers[j]) > len(covers[v])
                    and covers[j][: len(covers[v])] == covers[v]
                    for j in covers
                )
                for v in chosen
            ):
                return False
    return True


def decode_wave(
    g: MengerGraph, seq: Sequence[Label], paths: Optional[Sequence[Path]] = None
) -> Warp:
    """Rebuild the wave from a complete valid coding sequence."""
    if paths is None:
        paths = enumerate_ab_paths(g).paths
    top = max(g.n, len(paths))
    if len(seq) != 2 * top or not wave_seq_valid(g, seq, paths):
        raise InvalidSequence("not a complete valid wave coding")
    covers = {k // 2: label[1] for k, label in enumerate(seq) if k % 2 == 0 and label != (0, 0)}
    maximal = [
        q
        for v, q in covers.items()
        if not any(len(r) > len(q) and r[: len(q)] == q for r in covers.values())
    ]
    wave = warp_of(set(maximal))
    if not is_wave(g, wave):
        raise InvalidSequence("decoded warp is not a wave")
    return wave
