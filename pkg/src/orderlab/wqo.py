"""Subsequence and labelled-tree embeddings, bad sequences, and the
minimal-bad-sequence step.

Sequences over a quasi-order embed by strictly increasing index maps with
pointwise domination; finite rooted labelled trees embed by injective,
meet-preserving, label-dominating node maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .errors import InvalidNode, PreconditionViolation, UnknownElement
from .order import QuasiOrder, seq_less_by


def higman_leq(sigma: Sequence, tau: Sequence, q: QuasiOrder) -> bool:
    """Subsequence embedding: a strictly increasing index map with
    ``sigma[i] <= tau[f(i)]`` pointwise.

    The greedy earliest-match scan is complete: any embedding can be pushed
    left one position at a time.
    """
    contains = q.contains
    for item in sigma:
        if not contains(item):
            raise UnknownElement(f"{item!r} is outside the universe of {q.name}")
    for item in tau:
        if not contains(item):
            raise UnknownElement(f"{item!r} is outside the universe of {q.name}")
    leq = q.leq
    j, m = 0, len(tau)
    for x in sigma:
        while j < m and not leq(x, tau[j]):
            j += 1
        if j == m:
            return False
        j += 1
    return True


def higman_lift(q: QuasiOrder) -> QuasiOrder:
    """Finite sequences over ``q`` quasi-ordered by subsequence embedding."""
    return QuasiOrder(
        f"seqs({q.name})",
        lambda s, t: higman_leq(s, t, q),
        lambda s: isinstance(s, tuple) and all(q.contains(x) for x in s),
    )


def is_bad(seq: Sequence, q: QuasiOrder) -> Optional[tuple[int, int]]:
    """First good pair ``i < j`` with ``seq[i] <= seq[j]``, or None if bad."""
    for item in seq:
        q.require(item)
    leq = q.leq
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if leq(seq[i], seq[j]):
                return (i, j)
    return None


def min_bad_sequence(
    q: QuasiOrder,
    size_less: Callable[[Hashable, Hashable], bool],
    universe_bound: int,
    length: int,
) -> Optional[tuple[int, ...]]:
    """A bad sequence of the given length that no other bad sequence of the
    same length undercuts in the sequence order induced by ``size_less``.

    Depth-first search in ascending item order finds an initial bad
    sequence; repeated searches for a strictly smaller one (pruned at the
    first divergence from the incumbent) converge because the sequence
    order is well founded on a finite space.
    """
    universe = [x for x in range(universe_bound) if q.contains(x)]
    leq = q.leq

    def find(incumbent: Optional[tuple[int, ...]]) -> Optional[tuple[int, ...]]:
        # When chasing an incumbent, a prefix is viable while it equals the
        # incumbent so far or already went below it at the divergence point.
        def dfs(prefix: tuple[int, ...], undecided: bool) -> Optional[tuple[int, ...]]:
            if len(prefix) == length:
                return None if undecided else prefix
            pos = len(prefix)
            for v in universe:
                if any(leq(p, v) for p in prefix):
                    continue
                if incumbent is None:
                    nxt = False
                elif undecided:
                    if v == incumbent[pos]:
                        nxt = True
                    elif size_less(v, incumbent[pos]):
                        nxt = False
                    else:
                        continue
                else:
                    nxt = False
                found = dfs(prefix + (v,), nxt)
                if found is not None:
                    return found
            return None

        return dfs((), incumbent is not None)

    incumbent = find(None)
    if incumbent is None:
        return None
    while True:
        better = find(incumbent)
        if better is None:
            return incumbent
        incumbent = better


def nash_williams_step(
    seqs: Sequence[Sequence], s: Iterable[int], q: QuasiOrder
) -> tuple[tuple, ...]:
    """One minimal-bad-sequence refinement step.

    Given a bad sequence of non-empty sequences and an index set ``s`` on
    which the final items are pairwise dominated in order, copy the entries
    below ``min(s)`` and re-enumerate the ``s`` entries with their final
    items dropped.  The result is bad again and strictly below the input in
    the length order at position ``min(s)``.
    """
    entries = [tuple(x) for x in seqs]
    s_sorted = sorted(set(s))
    if not s_sorted:
        raise PreconditionViolation("s-non-empty", "the index set is empty")
    if s_sorted[0] < 0 or s_sorted[-1] >= len(entries):
        raise PreconditionViolation("s-in-window", f"indices {s_sorted} exceed the window")
    for i, entry in enumerate(entries):
        if not entry:
            raise PreconditionViolation("entries-non-empty", f"entry {i} is empty")
    lifted = higman_lift(q)
    witness = is_bad(entries, lifted)
    if witness is not None:
        i, j = witness
        raise PreconditionViolation("input-bad", f"entry {i} embeds into entry {j}")
    for i, j in itertools.combinations(s_sorted, 2):
        if not q.leq(entries[i][-1], entries[j][-1]):
            raise PreconditionViolation(
                "perfect-on-s", f"final items of entries {i} and {j} are not ordered"
            )
    i0 = s_sorted[0]
    return tuple(entries[i] for i in range(i0)) + tuple(entries[k][:-1] for k in s_sorted)


@dataclass(frozen=True)
class KTree:
    """Finite rooted tree with labelled nodes, as a parent array.

    ``parent[i]`` is the parent of node ``i``; exactly one node is the root,
    marked with ``-1``.  Node order below any node is the ancestor chain, so
    meets (deepest common ancestors) always exist.
    """

    parent: tuple[int, ...]
    labels: tuple[Hashable, ...]

    def __post_init__(self):
        n = len(self.parent)
        if len(self.labels) != n:
            raise ValueError("labels and parent array must have equal length")
        roots = [i for i, p in enumerate(self.parent) if p == -1]
        if len(roots) != 1:
            raise ValueError("a tree has exactly one root")
        for i, p in enumerate(self.parent):
            if p != -1 and not 0 <= p < n:
                raise InvalidNode(f"parent of node {i} is out of range")
        for i in range(n):
            seen = set()
            v = i
            while v != -1:
                if v in seen:
                    raise ValueError("parent array contains a cycle")
                seen.add(v)
                v = self.parent[v]

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    def children(self, v: int) -> tuple[int, ...]:
        self.require(v)
        return tuple(i for i, p in enumerate(self.parent) if p == v)

    def require(self, v: int) -> None:
        if not 0 <= v < len(self.parent):
            raise InvalidNode(f"node {v} is outside the tree")


def tree_meet(tree: KTree, t: int, u: int) -> int:
    """Deepest common ancestor of ``t`` and ``u``."""
    tree.require(t)
    tree.require(u)
    chain = set()
    v = t
    while v != -1:
        chain.add(v)
        v = tree.parent[v]
    v = u
    while v not in chain:
        v = tree.parent[v]
    return v


def ktree_leq(s_tree: KTree, t_tree: KTree, q: QuasiOrder) -> bool:
    """Tree embedding: an injective meet-preserving map with dominated labels.

    Such a map sends the source root to some node ``v`` with a dominating
    label and the root's child subtrees into distinct child subtrees of
    ``v``; the search recurses on that shape with memoisation, using
    augmenting-path matching for the child assignment.
    """
    for lab in s_tree.labels:
        q.require(lab)
    for lab in t_tree.labels:
        q.require(lab)
    s_children = {v: s_tree.children(v) for v in range(s_tree.size)}
    t_children = {v: t_tree.children(v) for v in range(t_tree.size)}
    memo: dict[tuple[int, int], bool] = {}

    def embed(sv: int, tv: int) -> bool:
        key = (sv, tv)
        cached = memo.get(key)
        if cached is not None:
            return cached
        result = rooted(sv, tv) or any(embed(sv, tc) for tc in t_children[tv])
        memo[key] = result
        return result

    def rooted(sv: int, tv: int) -> bool:
        if not q.leq(s_tree.labels[sv], t_tree.labels[tv]):
            return False
        left = s_children[sv]
        right = t_children[tv]
        if len(left) > len(right):
            return False
        assign: dict[int, int] = {}

        def augment(l: int, seen: set[int]) -> bool:
            for r in right:
                if r in seen or not embed(l, r):
                    continue
                seen.add(r)
                if r not in assign or augment(assign[r], seen):
                    assign[r] = l
                    return True
            return False

        return all(augment(l, set()) for l in left)

    return embed(s_tree.root, t_tree.root)


def decompose_ktree(tree: KTree) -> tuple[Hashable, tuple[KTree, ...]]:
    """Root label and the child subtrees in ascending node-id order."""
    r = tree.root
    return tree.labels[r], tuple(subtree(tree, c) for c in tree.children(r))


def subtree(tree: KTree, v: int) -> KTree:
    """Subtree rooted at ``v``, renumbered in preorder (children by id)."""
    tree.require(v)
    order: list[int] = []

    def visit(node: int) -> None:
        order.append(node)
        for c in tree.children(node):
            visit(c)

    visit(v)
    index = {old: new for new, old in enumerate(order)}
    parent = tuple(
        -1 if old == v else index[tree.parent[old]] for old in order
    )
    return KTree(parent, tuple(tree.labels[old] for old in order))


def compose_ktree(label: Hashable, subtrees: Sequence[KTree]) -> KTree:
    """Rebuild a tree from a root label and child subtrees."""
    parent: list[int] = [-1]
    labels: list[Hashable] = [label]
    for st in subtrees:
        offset = len(parent)
        for i, p in enumerate(st.parent):
            parent.append(0 if p == -1 else offset + p)
            labels.append(st.labels[i])
    return KTree(tuple(parent), tuple(labels))


def ktree_key(tree: KTree):
    """Canonical structure key; equal keys mean isomorphic labelled trees."""

    def key(v: int):
        return (repr(tree.labels[v]), tuple(sorted(key(c) for c in tree.children(v))))

    return key(tree.root)


def ramsey_pairs_homogeneous(
    n: int, coloring: Callable[[int, int], int], target: int
) -> Optional[tuple[tuple[int, ...], Optional[int]]]:
    """First ``target``-subset of ``range(n)`` (in lexicographic order) on
    which the pair colouring is constant, with its colour."""
    if target > n:
        return None
    for subset in itertools.combinations(range(n), target):
        colors = {coloring(i, j) for i, j in itertools.combinations(subset, 2)}
        if len(colors) <= 1:
            return subset, colors.pop() if colors else None
    return None
