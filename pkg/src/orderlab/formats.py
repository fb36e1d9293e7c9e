"""JSON document parsing for the CLI, and canonical serialisation.

One parse layer with uniform errors: every loader raises `ParseError` with
the offending location.  Named poset elements are interned to dense ids in
declaration order.
"""

from __future__ import annotations

import itertools
import json
from typing import Optional, Sequence

from .barrier import BarrierFragment, PartialArray, array_of, fragment, uniform_fragment
from .errors import OrderlabError, ParseError
from .menger import MengerGraph, Warp, graph, warp_of
from .order import Poset, QuasiOrder, quasi_from_poset, validate_poset
from .trees import LassoPath, TreeAutomaton, automaton


def read_json(path: str) -> object:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def canonical_dumps(obj: object) -> str:
    """Stable serialisation: sorted keys, no whitespace drift."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _expect(doc: object, key: str, kind: type, where: str):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}: key {key!r} must be {kind.__name__}")
    return value


def _int_list(value: object, where: str) -> list[int]:
    if not isinstance(value, list) or any(
        not isinstance(x, int) or isinstance(x, bool) for x in value
    ):
        raise ParseError(f"{where}: expected a list of integers")
    return value


class NamedPoset:
    """A poset together with its declared element names."""

    def __init__(self, poset: Poset, names: Sequence):
        self.poset = poset
        self.names = tuple(names)
        self.ids = {name: i for i, name in enumerate(self.names)}

    def to_id(self, name, where: str = "element") -> int:
        if name not in self.ids:
            raise ParseError(f"{where}: {name!r} is not a declared element")
        return self.ids[name]

    def to_name(self, i: int):
        return self.names[i]


def raw_poset_from_doc(doc: object, where: str = "poset"):
    """Shape-check only: declared names and lt pairs as dense ids."""
    elements = _expect(doc, "elements", list, where)
    if len(set(map(str, elements))) != len(elements):
        raise ParseError(f"{where}: element names must be distinct")
    ids = {name: i for i, name in enumerate(elements)}
    lt = _expect(doc, "lt", list, where)
    pairs = []
    for entry in lt:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"{where}: each lt entry is a pair")
        for name in entry:
            if name not in ids:
                raise ParseError(f"{where}: {name!r} is not a declared element")
        pairs.append((ids[entry[0]], ids[entry[1]]))
    return tuple(elements), pairs


def poset_from_doc(doc: object, where: str = "poset") -> NamedPoset:
    elements, pairs = raw_poset_from_doc(doc, where)
    try:
        poset = validate_poset(pairs, range(len(elements)))
    except OrderlabError as exc:
        raise ParseError(f"{where}: {exc}") from exc
    return NamedPoset(poset, elements)


BUILTIN_ORDERS = ("nat-leq", "nat-eq", "divides")


class QuasiSpec:
    """A quasi-order plus the element codec the CLI uses with it.

    Built-in orders work on plain naturals; a poset file yields its
    reflexive closure over interned names.
    """

    def __init__(self, q: QuasiOrder, named: Optional[NamedPoset]):
        self.q = q
        self.named = named

    def parse_item(self, token: str, where: str = "item"):
        if self.named is not None:
            return self.named.to_id(token, where)
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"{where}: {token!r} is not a natural number") from None
        if value < 0:
            raise ParseError(f"{where}: {token!r} is not a natural number")
        return value

    def parse_json_item(self, value, where: str = "item"):
        if self.named is not None:
            return self.named.to_id(value, where)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ParseError(f"{where}: {value!r} is not a natural number")
        return value

    def show_item(self, item):
        if self.named is not None:
            return self.named.to_name(item)
        return item


def quasi_from_spec(spec: str) -> QuasiSpec:
    from .order import divisibility, natural_equality, natural_order

    if spec == "nat-leq":
        return QuasiSpec(natural_order(), None)
    if spec == "nat-eq":
        return QuasiSpec(natural_equality(), None)
    if spec == "divides":
        return QuasiSpec(divisibility(), None)
    named = poset_from_doc(read_json(spec), where=spec)
    return QuasiSpec(quasi_from_poset(named.poset, name=spec), named)


def ktree_from_doc(doc: object, spec: QuasiSpec, where: str = "tree"):
    from .wqo import KTree

    parent = _int_list(_expect(doc, "parent", list, where), f"{where}.parent")
    labels = _expect(doc, "labels", list, where)
    if not parent or parent[0] != -1:
        raise ParseError(f"{where}: the root is index 0, marked with -1")
    if len(labels) != len(parent):
        raise ParseError(f"{where}: labels and parent must have equal length")
    interned = tuple(spec.parse_json_item(lab, f"{where}.labels") for lab in labels)
    try:
        return KTree(tuple(parent), interned)
    except (OrderlabError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def fragment_from_doc(doc: object, where: str = "fragment") -> BarrierFragment:
    window = _expect(doc, "window", int, where)
    if isinstance(doc, dict) and "uniform" in doc:
        k = _expect(doc, "uniform", int, where)
        try:
            return uniform_fragment(k, window)
        except (OrderlabError, ValueError) as exc:
            raise ParseError(f"{where}: {exc}") from exc
    blocks = _expect(doc, "blocks", list, where)
    parsed = [tuple(_int_list(b, f"{where}.blocks")) for b in blocks]
    try:
        return fragment(parsed, window)
    except (OrderlabError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def raw_fragment_from_doc(doc: object, where: str = "fragment"):
    """Window and block list without invariant validation (for checking)."""
    window = _expect(doc, "window", int, where)
    if isinstance(doc, dict) and "uniform" in doc:
        k = _expect(doc, "uniform", int, where)
        return list(itertools.combinations(range(window), k)), window
    blocks = _expect(doc, "blocks", list, where)
    return [tuple(_int_list(b, f"{where}.blocks")) for b in blocks], window


def array_from_doc(
    doc: object, spec: QuasiSpec, sequences: bool, where: str = "array"
) -> PartialArray:
    entries = _expect(doc, "entries", list, where)
    parsed = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"{where}: each entry is a [block, value] pair")
        block = tuple(_int_list(entry[0], f"{where}.block"))
        if sequences:
            if not isinstance(entry[1], list):
                raise ParseError(f"{where}: values must be sequences")
            value = tuple(
                spec.parse_json_item(v, f"{where}.value") for v in entry[1]
            )
        else:
            value = spec.parse_json_item(entry[1], f"{where}.value")
        parsed.append((block, value))
    try:
        return array_of(parsed)
    except (OrderlabError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def automaton_from_doc(doc: object, where: str = "automaton") -> TreeAutomaton:
    alphabet = _expect(doc, "alphabet", int, where)
    states = _expect(doc, "states", int, where)
    start = _expect(doc, "start", int, where)
    delta = _expect(doc, "delta", list, where)
    triples = []
    for entry in delta:
        trip = _int_list(entry, f"{where}.delta")
        if len(trip) != 3:
            raise ParseError(f"{where}: each delta entry is [state, letter, state]")
        triples.append(tuple(trip))
    try:
        return automaton(alphabet, states, start, triples)
    except (OrderlabError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def graph_from_doc(doc: object, where: str = "graph") -> MengerGraph:
    n = _expect(doc, "vertices", int, where)
    edges = _expect(doc, "edges", list, where)
    pairs = []
    for entry in edges:
        pair = _int_list(entry, f"{where}.edges")
        if len(pair) != 2:
            raise ParseError(f"{where}: each edge is a pair")
        pairs.append(tuple(pair))
    a = _int_list(_expect(doc, "A", list, where), f"{where}.A")
    b = _int_list(_expect(doc, "B", list, where), f"{where}.B")
    try:
        return graph(n, pairs, a, b)
    except (OrderlabError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def warp_from_doc(doc: object, where: str = "warp") -> Warp:
    paths = _expect(doc, "paths", list, where)
    return warp_of(tuple(_int_list(p, f"{where}.paths")) for p in paths)


def labels_from_doc(doc: object, where: str = "labels"):
    entries = _expect(doc, "labels", list, where)
    out = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"{where}: each label is a pair")
        kind, payload = entry
        if not isinstance(kind, int) or isinstance(kind, bool):
            raise ParseError(f"{where}: label kinds are integers")
        if kind == 0:
            if payload != 0:
                raise ParseError(f"{where}: blank labels are [0, 0]")
            out.append((0, 0))
        elif kind == 1:
            out.append((1, tuple(_int_list(payload, where))))
        else:
            out.append((kind, frozenset(_int_list(payload, where))))
    return tuple(out)


def labels_to_doc(labels) -> list:
    out = []
    for kind, payload in labels:
        if kind == 0:
            out.append([0, 0])
        elif kind == 1:
            out.append([1, list(payload)])
        else:
            out.append([kind, sorted(payload)])
    return out


def seqs_from_doc(doc: object, spec: QuasiSpec, where: str = "seqs") -> tuple:
    entries = _expect(doc, "seqs", list, where)
    out = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, list):
            raise ParseError(f"{where}[{i}]: expected a sequence")
        out.append(tuple(spec.parse_json_item(v, f"{where}[{i}]") for v in entry))
    return tuple(out)


def lassos_from_doc(doc: object, where: str = "challengers") -> list[LassoPath]:
    entries = _expect(doc, "challengers", list, where)
    out = []
    for i, entry in enumerate(entries):
        prefix = _int_list(_expect(entry, "prefix", list, f"{where}[{i}]"), where)
        cycle = _int_list(_expect(entry, "cycle", list, f"{where}[{i}]"), where)
        if not cycle:
            raise ParseError(f"{where}[{i}]: cycle must be non-empty")
        out.append(LassoPath(tuple(prefix), tuple(cycle)))
    return out


def lasso_to_doc(lasso: LassoPath) -> dict:
    return {"prefix": list(lasso.prefix), "cycle": list(lasso.cycle)}
