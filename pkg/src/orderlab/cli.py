"""Command-line interface.

Every command prints one canonical JSON report on stdout and a one-line
summary on stderr.  Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage
error, 65 malformed input.  Reports are byte-deterministic: inputs are
recorded as content digests and all sets are emitted sorted.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from typing import Optional

from . import barrier, formats, lexcode, menger, trees, wqo
from .errors import (
    CycleError,
    MalformedCode,
    OrderlabError,
    ParseError,
    PreconditionViolation,
    UnknownElement,
    WellFounded,
)
from .order import seq_less, validate_poset
from .trees import LassoPath

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

_EXITS = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _digest(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()[:16]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _csv(text: str) -> list[str]:
    text = text.strip()
    if not text:
        return []
    return [tok.strip() for tok in text.split(",")]


def _csv_ints(text: str, where: str) -> tuple[int, ...]:
    out = []
    for tok in _csv(text):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"{where}: {tok!r} is not an integer") from None
    return tuple(out)


def _csv_items(text: str, spec: formats.QuasiSpec, where: str) -> tuple:
    return tuple(spec.parse_item(tok, where) for tok in _csv(text))


def _report(command, inputs, verdict, details, checked=1, failures=0):
    return {
        "command": command,
        "inputs": inputs,
        "verdict": verdict,
        "details": details,
        "counters": {"checked": checked, "failures": failures},
    }


def _lasso_doc(lasso: LassoPath) -> dict:
    return {"prefix": list(lasso.prefix), "cycle": list(lasso.cycle)}


# ---------------------------------------------------------------- order


def _cmd_order_validate(args):
    inputs = {"poset": _digest(args.poset)}
    doc = formats.read_json(args.poset)
    names, pairs = formats.raw_poset_from_doc(doc, args.poset)
    try:
        poset = validate_poset(pairs, range(len(names)))
    except (CycleError, UnknownElement) as exc:
        return _report(
            "order validate",
            inputs,
            "fail",
            {"error": type(exc).__name__, "message": str(exc)},
            failures=1,
        )
    return _report(
        "order validate",
        inputs,
        "pass",
        {"elements": len(names), "strict_pairs": len(poset.lt)},
    )


def _cmd_order_seq_less(args):
    inputs = {"poset": _digest(args.poset), "left": args.left, "right": args.right}
    named = formats.poset_from_doc(formats.read_json(args.poset), args.poset)
    left = tuple(named.to_id(tok, "left") for tok in _csv(args.left))
    right = tuple(named.to_id(tok, "right") for tok in _csv(args.right))
    less = seq_less(left, right, named.poset)
    return _report(
        "order seq-less",
        inputs,
        "pass" if less else "fail",
        {"less": less},
        failures=0 if less else 1,
    )


# ---------------------------------------------------------------- lexcode


def _load_code(args):
    named = formats.poset_from_doc(formats.read_json(args.poset), args.poset)
    tie = getattr(args, "tie_break", "smallest-id")
    return named, lexcode.encode_order(named.poset, tie)


def _cmd_lexcode_encode(args):
    inputs = {"poset": _digest(args.poset), "tie_break": args.tie_break}
    named, code = _load_code(args)
    table = {str(named.to_name(x)): list(code.table[x]) for x in sorted(code.table)}
    return _report(
        "lexcode encode",
        inputs,
        "pass",
        {"table": table, "processing_order": [named.to_name(x) for x in code.processing_order]},
    )


def _cmd_lexcode_decode(args):
    inputs = {"poset": _digest(args.poset), "coded": args.coded}
    named, code = _load_code(args)
    coded = _csv_ints(args.coded, "coded")
    try:
        seq = lexcode.decode_path(code, coded)
    except MalformedCode as exc:
        return _report(
            "lexcode decode",
            inputs,
            "fail",
            {"error": "MalformedCode", "message": str(exc)},
            failures=1,
        )
    return _report(
        "lexcode decode", inputs, "pass", {"seq": [named.to_name(x) for x in seq]}
    )


def _cmd_lexcode_check_claims(args):
    import itertools

    inputs = {"poset": _digest(args.poset), "tie_break": args.tie_break}
    named, code = _load_code(args)
    poset = named.poset
    elems = poset.sorted_elements()
    problems = []
    checked = 0

    for x, y in poset.lt:
        checked += 1
        from .order import seq_less_by

        if not seq_less_by(code.table[x], code.table[y], int.__lt__):
            problems.append(
                {"claim": "monotone", "below": named.to_name(x), "above": named.to_name(y)}
            )

    images = {x: lexcode.encode_element(code, x) for x in elems}
    for x, y in itertools.permutations(elems, 2):
        checked += 1
        if images[y][: len(images[x])] == images[x]:
            problems.append(
                {"claim": "prefix-free", "prefix": named.to_name(x), "word": named.to_name(y)}
            )

    space = itertools.chain.from_iterable(
        itertools.product(elems, repeat=r) for r in range(3)
    )
    for seq in itertools.islice(space, 300):
        checked += 1
        if lexcode.decode_path(code, lexcode.encode_seq(code, seq)) != seq:
            problems.append({"claim": "roundtrip", "seq": [named.to_name(x) for x in seq]})

    verdict = "pass" if not problems else "fail"
    return _report(
        "lexcode check-claims",
        inputs,
        verdict,
        {"problems": problems[:8]},
        checked=checked,
        failures=len(problems),
    )


# ---------------------------------------------------------------- wqo


def _cmd_wqo_higman(args):
    inputs = {"q": args.q, "left": args.left, "right": args.right}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    left = _csv_items(args.left, spec, "left")
    right = _csv_items(args.right, spec, "right")
    ok = wqo.higman_leq(left, right, spec.q)
    return _report(
        "wqo higman", inputs, "pass" if ok else "fail", {"embeds": ok}, failures=0 if ok else 1
    )


def _cmd_wqo_kruskal(args):
    inputs = {"q": args.q, "left": _digest(args.left), "right": _digest(args.right)}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    s_tree = formats.ktree_from_doc(formats.read_json(args.left), spec, args.left)
    t_tree = formats.ktree_from_doc(formats.read_json(args.right), spec, args.right)
    ok = wqo.ktree_leq(s_tree, t_tree, spec.q)
    return _report(
        "wqo kruskal", inputs, "pass" if ok else "fail", {"embeds": ok}, failures=0 if ok else 1
    )


def _cmd_wqo_bad(args):
    inputs = {"q": args.q, "seq": args.seq}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    seq = _csv_items(args.seq, spec, "seq")
    pair = wqo.is_bad(seq, spec.q)
    if pair is None:
        return _report("wqo bad", inputs, "pass", {"bad": True})
    i, j = pair
    return _report(
        "wqo bad",
        inputs,
        "fail",
        {
            "bad": False,
            "good_pair": [i, j],
            "items": [spec.show_item(seq[i]), spec.show_item(seq[j])],
        },
        failures=1,
    )


def _cmd_wqo_min_bad(args):
    inputs = {"q": args.q, "bound": args.bound, "length": args.length}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    bound = args.bound
    if spec.named is not None:
        bound = min(bound, len(spec.named.names))
    seq = wqo.min_bad_sequence(spec.q, int.__lt__, bound, args.length)
    if seq is None:
        return _report(
            "wqo min-bad", inputs, "fail", {"found": False, "message": "no bad sequence"},
            failures=1,
        )
    return _report(
        "wqo min-bad",
        inputs,
        "pass",
        {"found": True, "seq": [spec.show_item(x) for x in seq]},
    )


def _cmd_wqo_nw_step(args):
    inputs = {"q": args.q, "seqs": _digest(args.seqs), "s": args.s}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    seqs = formats.seqs_from_doc(formats.read_json(args.seqs), spec, args.seqs)
    s = frozenset(_csv_ints(args.s, "s"))
    try:
        out = wqo.nash_williams_step(seqs, s, spec.q)
    except PreconditionViolation as exc:
        return _report(
            "wqo nw-step",
            inputs,
            "fail",
            {"error": "PreconditionViolation", "clause": exc.clause, "message": str(exc)},
            failures=1,
        )
    return _report(
        "wqo nw-step",
        inputs,
        "pass",
        {"seqs": [[spec.show_item(x) for x in entry] for entry in out]},
    )


# ---------------------------------------------------------------- barrier


def _cmd_barrier_check(args):
    inputs = {"frag": _digest(args.frag)}
    blocks, window = formats.raw_fragment_from_doc(formats.read_json(args.frag), args.frag)
    result = barrier.check_fragment(blocks, window)
    return _report(
        "barrier check",
        inputs,
        result.verdict,
        {
            "problems": list(result.problems),
            "uncovered": [list(seq) for seq in result.uncovered],
        },
        failures=len(result.problems),
    )


def _cmd_barrier_tri(args):
    inputs = {"left": args.left, "right": args.right}
    b = _csv_ints(args.left, "left")
    c = _csv_ints(args.right, "right")
    ok = barrier.block_tri(b, c)
    details = {"tri": ok}
    if ok:
        details["union"] = list(barrier.union_block(b, c))
    return _report(
        "barrier tri", inputs, "pass" if ok else "fail", details, failures=0 if ok else 1
    )


def _cmd_barrier_star(args):
    inputs = {"frag": _digest(args.frag)}
    frag = formats.fragment_from_doc(formats.read_json(args.frag), args.frag)
    starred = barrier.star_fragment(frag)
    return _report(
        "barrier star",
        inputs,
        "pass",
        {"window": starred.window, "blocks": [list(b) for b in starred.sorted_blocks()]},
    )


def _load_array_command(args, sequences: bool):
    inputs = {"frag": _digest(args.frag), "array": _digest(args.array), "q": args.q}
    spec = formats.quasi_from_spec(args.q)
    if spec.named is not None:
        inputs["q"] = _digest(args.q)
    frag = formats.fragment_from_doc(formats.read_json(args.frag), args.frag)
    arr = formats.array_from_doc(formats.read_json(args.array), spec, sequences, args.array)
    return inputs, spec, frag, arr


def _cmd_barrier_classify(args):
    inputs, spec, frag, arr = _load_array_command(args, sequences=False)
    labels = barrier.classify_array(arr, frag, spec.q)
    return _report("barrier classify", inputs, "pass", {"labels": sorted(labels)})


def _cmd_barrier_array_check(args):
    inputs, spec, frag, arr = _load_array_command(args, sequences=True)
    violations = barrier.bad_array_violations(arr, frag, wqo.higman_lift(spec.q))
    return _report(
        "barrier array-check",
        inputs,
        "pass" if not violations else "fail",
        {"violations": list(violations)[:8]},
        checked=max(1, len(arr.entries)),
        failures=len(violations),
    )


def _cmd_barrier_nwt_step(args):
    inputs, spec, frag, arr = _load_array_command(args, sequences=True)
    inputs["s"] = args.s
    s = frozenset(_csv_ints(args.s, "s"))
    try:
        out = barrier.nwt_improvement_step(arr, s, frag, spec.q)
    except PreconditionViolation as exc:
        return _report(
            "barrier nwt-step",
            inputs,
            "fail",
            {"error": "PreconditionViolation", "clause": exc.clause, "message": str(exc)},
            failures=1,
        )
    entries = [
        [list(block), [spec.show_item(x) for x in value]] for block, value in out.entries
    ]
    return _report("barrier nwt-step", inputs, "pass", {"entries": entries})


# ---------------------------------------------------------------- tree


def _load_automaton(args):
    return formats.automaton_from_doc(formats.read_json(args.aut), args.aut)


def _cmd_tree_live(args):
    inputs = {"aut": _digest(args.aut)}
    aut = _load_automaton(args)
    live = trees.live_states(aut)
    return _report(
        "tree live",
        inputs,
        "pass",
        {"live": sorted(live), "start_live": aut.start in live},
    )


def _cmd_tree_leftmost(args):
    inputs = {"aut": _digest(args.aut)}
    aut = _load_automaton(args)
    try:
        lasso = trees.leftmost_path(aut)
    except WellFounded as exc:
        return _report(
            "tree leftmost",
            inputs,
            "fail",
            {"error": "WellFounded", "message": str(exc)},
            failures=1,
        )
    return _report("tree leftmost", inputs, "pass", {"lasso": _lasso_doc(lasso)})


def _alphabet_order(args, aut):
    named = formats.poset_from_doc(formats.read_json(args.order), args.order)
    if len(named.names) != aut.alphabet_size:
        raise ParseError(
            f"{args.order}: order has {len(named.names)} elements, "
            f"alphabet has {aut.alphabet_size}"
        )
    return named


def _cmd_tree_minimal(args):
    inputs = {"aut": _digest(args.aut), "order": _digest(args.order)}
    aut = _load_automaton(args)
    named = _alphabet_order(args, aut)
    try:
        lasso = trees.minimal_path(aut, named.poset)
    except WellFounded as exc:
        return _report(
            "tree minimal",
            inputs,
            "fail",
            {"error": "WellFounded", "message": str(exc)},
            failures=1,
        )
    return _report("tree minimal", inputs, "pass", {"lasso": _lasso_doc(lasso)})


def _cmd_tree_challenge(args):
    inputs = {
        "aut": _digest(args.aut),
        "order": _digest(args.order),
        "prefix": args.prefix,
        "cycle": args.cycle,
        "challengers": _digest(args.challengers),
    }
    aut = _load_automaton(args)
    named = _alphabet_order(args, aut)
    cycle = _csv_ints(args.cycle, "cycle")
    if not cycle:
        raise ParseError("cycle: must be non-empty")
    witness = LassoPath(_csv_ints(args.prefix, "prefix"), cycle)
    challengers = formats.lassos_from_doc(
        formats.read_json(args.challengers), args.challengers
    )
    try:
        report = trees.challenger_check(aut, witness, challengers, named.poset)
    except OrderlabError as exc:
        return _report(
            "tree challenge",
            inputs,
            "fail",
            {"error": type(exc).__name__, "message": str(exc)},
            failures=1,
        )
    entries = [
        {
            "challenger": formats.lasso_to_doc(e.challenger),
            "in_tree": e.in_tree,
            "left_of_witness": e.left_of_witness,
        }
        for e in report.entries
    ]
    beaten = sum(1 for e in report.entries if e.in_tree and e.left_of_witness)
    return _report(
        "tree challenge",
        inputs,
        "pass" if report.minimal else "fail",
        {"minimal": report.minimal, "entries": entries},
        checked=max(1, len(entries)),
        failures=beaten,
    )


# ---------------------------------------------------------------- menger


def _load_graph(args):
    return formats.graph_from_doc(formats.read_json(args.graph), args.graph)


def _cmd_menger_solve(args):
    inputs = {"graph": _digest(args.graph)}
    g = _load_graph(args)
    system = menger.menger_solve(g)
    return _report(
        "menger solve",
        inputs,
        "pass",
        {
            "size": len(system.paths),
            "paths": [list(p) for p in system.paths],
            "separator": sorted(system.separator),
        },
    )


def _cmd_menger_waves(args):
    inputs = {"graph": _digest(args.graph), "cap": args.cap}
    g = _load_graph(args)
    enum = menger.enumerate_waves(g, cap=args.cap)
    return _report(
        "menger waves",
        inputs,
        "pass",
        {
            "count": len(enum.waves),
            "truncated": enum.truncated,
            "waves": [[list(p) for p in w.paths] for w in enum.waves],
        },
        checked=max(1, len(enum.waves)),
    )


def _cmd_menger_max_wave(args):
    inputs = {"graph": _digest(args.graph)}
    g = _load_graph(args)
    wave = menger.maximal_wave(g)
    return _report(
        "menger max-wave",
        inputs,
        "pass",
        {
            "paths": [list(p) for p in wave.paths],
            "terminals": sorted(menger.terminals(wave)),
        },
    )


def _cmd_menger_encode(args):
    inputs = {"graph": _digest(args.graph), "wave": _digest(args.wave)}
    g = _load_graph(args)
    warp = formats.warp_from_doc(formats.read_json(args.wave), args.wave)
    try:
        labels = menger.encode_wave(g, warp)
    except OrderlabError as exc:
        return _report(
            "menger encode",
            inputs,
            "fail",
            {"error": type(exc).__name__, "message": str(exc)},
            failures=1,
        )
    return _report(
        "menger encode", inputs, "pass", {"labels": formats.labels_to_doc(labels)}
    )


def _cmd_menger_decode(args):
    inputs = {"graph": _digest(args.graph), "seq": _digest(args.seq)}
    g = _load_graph(args)
    labels = formats.labels_from_doc(formats.read_json(args.seq), args.seq)
    try:
        wave = menger.decode_wave(g, labels)
    except OrderlabError as exc:
        return _report(
            "menger decode",
            inputs,
            "fail",
            {"error": type(exc).__name__, "message": str(exc)},
            failures=1,
        )
    return _report(
        "menger decode", inputs, "pass", {"paths": [list(p) for p in wave.paths]}
    )


# ---------------------------------------------------------------- oracle


def _cmd_oracle(args):
    from . import suites

    inputs = {"suite": args.suite, "seed": args.seed}
    if args.suite == "all":
        names = list(suites.SUITES)
    else:
        names = [args.suite]
    results = [suites.SUITES[name](args.seed) for name in names]
    worst = "pass"
    for r in results:
        if r.verdict == "fail":
            worst = "fail"
        elif r.verdict == "inconclusive" and worst == "pass":
            worst = "inconclusive"
    details = {
        "suites": [
            {
                "name": r.name,
                "verdict": r.verdict,
                "checked": r.checked,
                "failures": list(r.failures)[:8],
                "notes": r.notes,
            }
            for r in results
        ]
    }
    return _report(
        "oracle",
        inputs,
        worst,
        details,
        checked=sum(r.checked for r in results),
        failures=sum(len(r.failures) for r in results),
    )


# ---------------------------------------------------------------- wiring


def build_parser() -> _Parser:
    from . import suites

    parser = _Parser(prog="orderlab", description=__doc__)
    top = parser.add_subparsers(dest="group", parser_class=_Parser)

    def sub(group, name, handler, **arguments):
        p = group.add_parser(name)
        for arg, kwargs in arguments.items():
            p.add_argument(f"--{arg.replace('_', '-')}", **kwargs)
        p.set_defaults(handler=handler)
        return p

    req = {"required": True}
    order_g = top.add_parser("order").add_subparsers(dest="cmd")
    sub(order_g, "validate", _cmd_order_validate, poset=req)
    sub(order_g, "seq-less", _cmd_order_seq_less, poset=req, left=req, right=req)

    tie = {"default": "smallest-id", "choices": list(lexcode.TIE_BREAKS)}
    lex_g = top.add_parser("lexcode").add_subparsers(dest="cmd")
    sub(lex_g, "encode", _cmd_lexcode_encode, poset=req, tie_break=tie)
    sub(lex_g, "decode", _cmd_lexcode_decode, poset=req, coded=req, tie_break=tie)
    sub(lex_g, "check-claims", _cmd_lexcode_check_claims, poset=req, tie_break=tie)

    wqo_g = top.add_parser("wqo").add_subparsers(dest="cmd")
    sub(wqo_g, "higman", _cmd_wqo_higman, q=req, left=req, right=req)
    sub(wqo_g, "kruskal", _cmd_wqo_kruskal, q=req, left=req, right=req)
    sub(wqo_g, "bad", _cmd_wqo_bad, q=req, seq=req)
    sub(
        wqo_g,
        "min-bad",
        _cmd_wqo_min_bad,
        q=req,
        bound={"required": True, "type": int},
        length={"required": True, "type": int},
    )
    sub(wqo_g, "nw-step", _cmd_wqo_nw_step, q=req, seqs=req, s=req)

    bar_g = top.add_parser("barrier").add_subparsers(dest="cmd")
    sub(bar_g, "check", _cmd_barrier_check, frag=req)
    sub(bar_g, "tri", _cmd_barrier_tri, left=req, right=req)
    sub(bar_g, "star", _cmd_barrier_star, frag=req)
    sub(bar_g, "classify", _cmd_barrier_classify, frag=req, array=req, q=req)
    sub(bar_g, "array-check", _cmd_barrier_array_check, frag=req, array=req, q=req)
    sub(bar_g, "nwt-step", _cmd_barrier_nwt_step, frag=req, array=req, q=req, s=req)

    tree_g = top.add_parser("tree").add_subparsers(dest="cmd")
    sub(tree_g, "live", _cmd_tree_live, aut=req)
    sub(tree_g, "leftmost", _cmd_tree_leftmost, aut=req)
    sub(tree_g, "minimal", _cmd_tree_minimal, aut=req, order=req)
    sub(
        tree_g,
        "challenge",
        _cmd_tree_challenge,
        aut=req,
        order=req,
        prefix={"default": ""},
        cycle=req,
        challengers=req,
    )

    men_g = top.add_parser("menger").add_subparsers(dest="cmd")
    sub(men_g, "solve", _cmd_menger_solve, graph=req)
    sub(men_g, "waves", _cmd_menger_waves, graph=req, cap={"type": int, "default": None})
    sub(men_g, "max-wave", _cmd_menger_max_wave, graph=req)
    sub(men_g, "encode", _cmd_menger_encode, graph=req, wave=req)
    sub(men_g, "decode", _cmd_menger_decode, graph=req, seq=req)

    oracle_p = top.add_parser("oracle")
    oracle_p.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    oracle_p.add_argument("--seed", type=int, default=0)
    oracle_p.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handler = getattr(args, "handler", None)
    if handler is None:
        print(parser.format_usage(), file=sys.stderr, end="")
        return EXIT_USAGE
    try:
        report = handler(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OrderlabError, ValueError) as exc:
        report = _report(
            f"{args.group}", {}, "fail",
            {"error": type(exc).__name__, "message": str(exc)}, failures=1,
        )
    print(formats.canonical_dumps(report))
    print(f"{report['command']}: {report['verdict']}", file=sys.stderr)
    return _EXITS[report["verdict"]]


if __name__ == "__main__":
    sys.exit(main())
