"""Embedding a finite strict order into integer sequences.

Each element receives a code word (even digits, then a single odd digit)
whose lexicographic order refines the element order; appending the element
id makes the code table prefix free, so coded sequences decode uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import MalformedCode
from .order import Poset
from .trees import TreeAutomaton

TIE_BREAKS = ("smallest-id", "largest-id")


@dataclass(frozen=True)
class LexCode:
    """Code table for a finite strict order.

    ``table`` maps each element to its code word; ``processing_order`` is
    the ascending id order in which the words were assigned.
    """

    order: Poset
    table: Mapping[int, tuple[int, ...]]
    processing_order: tuple[int, ...]


def encode_order(order: Poset, tie_break: str = "smallest-id") -> LexCode:
    """Assign code words so that ``x < y`` in the order forces a
    lexicographically smaller word.

    Elements are processed in ascending id order.  An element below some
    already-processed element anchors on the one with the least assigned
    word; decrementing that word's final digit then stays below every
    other candidate's word, which is what the order-embedding argument
    needs.  The least-word candidate is automatically minimal among the
    candidates, and since words are never reused, the id tie-break is a
    formal secondary key only.  Fresh words take the smallest unused odd
    final digit.
    """
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
    sign = 1 if tie_break == "smallest-id" else -1
    elems = order.sorted_elements()
    table: dict[int, tuple[int, ...]] = {}
    used: set[tuple[int, ...]] = set()
    for y in elems:
        anchors = [x for x in elems if x < y and order.less(y, x)]
        if anchors:
            word = table[min(anchors, key=lambda x: (table[x], sign * x))]
            stem = word[:-1] + (word[-1] - 1,)
        else:
            stem = ()
        digit = 1
        while stem + (digit,) in used:
            digit += 2
        code = stem + (digit,)
        used.add(code)
        table[y] = code
    return LexCode(order, table, elems)


def encode_element(code: LexCode, x: int) -> tuple[int, ...]:
    """Code word of ``x`` with the element id appended (prefix-free form)."""
    code.order.require(x)
    return code.table[x] + (x,)


def encode_seq(code: LexCode, seq: Sequence[int]) -> tuple[int, ...]:
    """Concatenation of the prefix-free element codes along ``seq``."""
    out: tuple[int, ...] = ()
    for x in seq:
        out += encode_element(code, x)
    return out


def decode_path(code: LexCode, coded: Sequence[int]) -> tuple[int, ...]:
    """Invert `encode_seq`; raises `MalformedCode` on any non-image input.

    A block is a run of even digits, one odd digit, then the element id,
    and must equal that element's prefix-free code exactly.
    """
    coded = tuple(coded)
    table = code.table
    out: list[int] = []
    i, n = 0, len(coded)
    while i < n:
        j = i
        while j < n and coded[j] % 2 == 0:
            j += 1
        if j >= n:
            raise MalformedCode("ran out of digits before an odd block terminator")
        if j + 1 >= n:
            raise MalformedCode("block terminator is not followed by an element id")
        elem = coded[j + 1]
        if table.get(elem) != coded[i : j + 1]:
            raise MalformedCode(f"digits {coded[i:j + 2]} are not a coded element")
        out.append(elem)
        i = j + 2
    return tuple(out)


def lift_tree(code: LexCode, aut: TreeAutomaton) -> TreeAutomaton:
    """Automaton for the prefix closure of the coded image of the tree.

    Original states keep their ids; fresh intermediate states trace partial
    code blocks, sharing common prefixes per source state.  The alphabet
    covers every digit that occurs in a prefix-free code.
    """
    if frozenset(range(aut.alphabet_size)) != code.order.elements:
        raise ValueError("tree alphabet must equal the coded order's elements")
    words = {a: code.table[a] + (a,) for a in range(aut.alphabet_size)}
    alphabet = max((d for w in words.values() for d in w), default=-1) + 1
    delta: dict[tuple[int, int], int] = {}
    fresh = aut.states
    for s in range(aut.states):
        for a in range(aut.alphabet_size):
            target = aut.delta.get((s, a))
            if target is None:
                continue
            cur = s
            word = words[a]
            for d in word[:-1]:
                nxt = delta.get((cur, d))
                if nxt is None:
                    nxt = fresh
                    fresh += 1
                    delta[(cur, d)] = nxt
                cur = nxt
            # codes are prefix free, so the final digit slot is never shared
            delta[(cur, word[-1])] = target
    return TreeAutomaton(alphabet, fresh, aut.start, delta)
