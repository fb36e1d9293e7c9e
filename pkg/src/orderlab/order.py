"""Finite strict orders, decidable quasi-orders, and sequence comparison.

Elements are hashable values; the bundled constructions use natural-number
ids so that searches can be bounded explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .errors import CycleError, UnknownElement

Pair = tuple[int, int]


def transitive_closure(pairs: Iterable[Pair]) -> frozenset[Pair]:
    """Transitive closure of a binary relation given as a set of pairs."""
    succ: dict[int, set[int]] = {}
    for x, y in pairs:
        succ.setdefault(x, set()).add(y)
    changed = True
    while changed:
        changed = False
        for ys in succ.values():
            extra: set[int] = set()
            for y in ys:
                more = succ.get(y)
                if more is not None and not more <= ys:
                    extra |= more
            if extra - ys:
                ys |= extra
                changed = True
    return frozenset((x, y) for x, ys in succ.items() for y in ys)


@dataclass(frozen=True)
class Poset:
    """Strict partial order over a finite set of natural-number ids.

    ``lt`` is transitively closed and irreflexive.  Build instances with
    :func:`validate_poset`, which closes and checks an arbitrary pair set.
    """

    elements: frozenset[int]
    lt: frozenset[Pair]

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.lt

    def require(self, x: int) -> None:
        if x not in self.elements:
            raise UnknownElement(f"element {x!r} is not declared")

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


def validate_poset(pairs: Iterable[Pair], elements: Iterable[int]) -> Poset:
    """Close ``pairs`` transitively and reject cycles and stray elements."""
    elems = frozenset(elements)
    raw = set()
    for x, y in pairs:
        for v in (x, y):
            if v not in elems:
                raise UnknownElement(f"element {v!r} is not declared")
        raw.add((x, y))
    closed = transitive_closure(raw)
    for x, y in closed:
        if x == y:
            raise CycleError(f"relation has a cycle through {x!r}")
    return Poset(elems, closed)


@dataclass(frozen=True)
class QuasiOrder:
    """Decidable reflexive-transitive ``leq`` over a universe of values.

    ``contains`` decides universe membership; ``elements`` lists the
    universe when it is finite (used by exhaustive searches and checks).
    """

    name: str
    leq: Callable[[Hashable, Hashable], bool]
    contains: Callable[[Hashable], bool]
    elements: Optional[tuple] = None

    def require(self, x: Hashable) -> None:
        if not self.contains(x):
            raise UnknownElement(f"{x!r} is outside the universe of {self.name}")

    def strictly_less(self, x: Hashable, y: Hashable) -> bool:
        return self.leq(x, y) and not self.leq(y, x)


def _is_natural(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def natural_order() -> QuasiOrder:
    """The usual total order on the naturals."""
    return QuasiOrder("natural-leq", lambda x, y: x <= y, _is_natural)


def natural_equality() -> QuasiOrder:
    """Equality on the naturals; the canonical infinite antichain."""
    return QuasiOrder("natural-eq", lambda x, y: x == y, _is_natural)


def divisibility() -> QuasiOrder:
    """Divisibility on the naturals.  Everything divides 0; 0 divides only 0."""
    return QuasiOrder(
        "divides",
        lambda x, y: y == 0 if x == 0 else y % x == 0,
        _is_natural,
    )


def finite_quasi_order(
    elements: Iterable[Hashable], leq_pairs: Iterable[tuple], name: str = "finite"
) -> QuasiOrder:
    """Explicit finite quasi-order; reflexivity and transitivity are enforced."""
    elems = tuple(dict.fromkeys(elements))
    universe = frozenset(elems)
    rel = set()
    for x, y in leq_pairs:
        for v in (x, y):
            if v not in universe:
                raise UnknownElement(f"{v!r} is not declared in {name}")
        rel.add((x, y))
    for x in elems:
        if (x, x) not in rel:
            raise ValueError(f"{name} is not reflexive at {x!r}")
    for x, y in rel:
        for z in elems:
            if (y, z) in rel and (x, z) not in rel:
                raise ValueError(f"{name} is not transitive: {x!r},{y!r},{z!r}")
    rel_frozen = frozenset(rel)
    return QuasiOrder(name, lambda x, y: (x, y) in rel_frozen, universe.__contains__, elems)


def quasi_from_poset(poset: Poset, name: str = "poset") -> QuasiOrder:
    """Reflexive closure of a strict order, viewed as a quasi-order."""
    return QuasiOrder(
        name,
        lambda x, y: x == y or (x, y) in poset.lt,
        poset.elements.__contains__,
        poset.sorted_elements(),
    )


def seq_less_by(a: Sequence, b: Sequence, less: Callable[[Hashable, Hashable], bool]) -> bool:
    """Strict sequence comparison: shared prefix, then a strictly smaller item.

    A proper prefix is never below its extension; incomparable items at the
    first divergence make the sequences incomparable.
    """
    for x, y in zip(a, b):
        if x != y:
            return less(x, y)
    return False


def seq_less(a: Sequence[int], b: Sequence[int], order: Poset) -> bool:
    """`seq_less_by` specialised to a validated finite strict order."""
    for seq in (a, b):
        for x in seq:
            order.require(x)
    return seq_less_by(a, b, order.less)


def descending_chain_search(
    order: QuasiOrder, start: Iterable[int], max_len: int, universe_bound: int
) -> Optional[tuple[int, ...]]:
    """Depth-first search for a strictly descending chain of length ``max_len``.

    Start points are tried in ascending id order; successors in descending
    order, so the first chain found is reproducible.  Only ids below
    ``universe_bound`` that lie in the universe are explored.  Absence of a
    chain is a valid answer, not an error.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    universe = [x for x in range(universe_bound) if order.contains(x)]

    def extend(chain: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if len(chain) == max_len:
            return chain
        head = chain[-1]
        for nxt in sorted(
            (x for x in universe if order.strictly_less(x, head)), reverse=True
        ):
            found = extend(chain + (nxt,))
            if found is not None:
                return found
        return None

    for s in sorted(set(start)):
        if not order.contains(s) or not 0 <= s < universe_bound:
            continue
        found = extend((s,))
        if found is not None:
            return found
    return None
