"""Command-line interface: gb, reduce, member, syz, resolve.

Reads a problem file in the DSL, runs the requested computation, and
prints either human-readable text or a line-delimited JSON-like record
stream (`--format json-like`). `--trace` mirrors structured events to
standard error. Exit codes: 0 on success (mathematical "no" answers
included), 2 on usage or parse errors, 3 on broken internal invariants.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import (
    format_lt_module,
    format_vector,
    order_from_names,
    parse_problem,
    parse_vector_literal,
)
from .errors import GuardExceeded, InternalError, ParseError, UsageError
from .groebner import GroebnerBasis, divide, divide_valuation, module_member
from .poly import reorder
from .syzygy import (
    FreeTail,
    PeriodicTail,
    _buchberger_level0,
    _pseudo_reduce_labeled,
    free_resolution,
    schreyer_syzygies,
    verify_resolution,
)

_NORMALIZATION_NOTE = (
    "coefficients are canonical associates; bases print in descending leading-term order"
)


def _build_argparser():
    ap = argparse.ArgumentParser(
        prog="gbsyz",
        description="Groebner bases, syzygies, and free resolutions over Z, Z/N, F2[y]/y^r, Z_(p).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, order_flag=True):
        p.add_argument("file", help="problem file (use '-' for stdin)")
        p.add_argument("--format", choices=["text", "json-like"], default="text")
        p.add_argument("--trace", action="store_true", help="structured events on stderr")
        if order_flag:
            p.add_argument("--order", help="lex priority override, e.g. 'X,Y'")

    p = sub.add_parser("gb", help="Groebner basis of the generators")
    common(p)
    _reduce_flags(p)

    p = sub.add_parser("reduce", help="divide a target vector by the generators")
    common(p)
    p.add_argument("target", help="vector literal to reduce")
    p.add_argument("--valuation-division", action="store_true")

    p = sub.add_parser("member", help="module membership of a target vector")
    common(p)
    p.add_argument("target", help="vector literal to test")
    p.add_argument("--valuation-division", action="store_true")

    p = sub.add_parser("syz", help="Schreyer syzygy basis of the Groebner basis")
    common(p)
    _reduce_flags(p)

    p = sub.add_parser("resolve", help="free resolution of the generated module")
    common(p, order_flag=False)
    p.add_argument("--max-levels", type=int, default=32)
    p.add_argument("--unsafe-order", help="non-default order (termination not guaranteed)")
    p.add_argument("--order", help=argparse.SUPPRESS)
    return ap


def _reduce_flags(p):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pseudo-reduce", dest="pseudo_reduce", action="store_true")
    group.add_argument("--no-pseudo-reduce", dest="pseudo_reduce", action="store_false")
    p.set_defaults(pseudo_reduce=False)


def _read_problem(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_problem(text)


def _pick_order(args, problem):
    spec = getattr(args, "order", None)
    if args.command == "resolve":
        if spec:
            raise UsageError("resolve refuses --order; use --unsafe-order (termination is only covered for the default TOP-lex order)")
        spec = getattr(args, "unsafe_order", None)
    if spec:
        return order_from_names(problem, spec)
    return problem.order


def _trace_sink(args):
    if not args.trace:
        return None

    def sink(event):
        print(json.dumps(event, default=str), file=sys.stderr)

    return sink


def _header(args, problem, order):
    names = problem.var_names
    priority = " > ".join(names[i] for i in order.priority)
    return {
        "kind": "header",
        "command": args.command,
        "ring": problem.ring.descriptor(),
        "vars": list(names),
        "rank": problem.rank,
        "order": f"top-lex {priority}",
        "note": _NORMALIZATION_NOTE,
    }


def _gens(problem, order):
    if not problem.generators:
        raise UsageError("problem file declares no generators")
    names = [n for n, _ in problem.generators]
    vecs = [reorder(v, order) for _, v in problem.generators]
    return names, vecs


def cmd_gb(args, problem):
    order = _pick_order(args, problem)
    names, vecs = _gens(problem, order)
    trace = _trace_sink(args)
    basis, labels = _buchberger_level0(vecs, order, names, guard=10_000, trace=trace)
    if args.pseudo_reduce:
        gbr, labels = _pseudo_reduce_labeled(basis, order, labels, guard=10_000)
        basis = gbr.elements
    records = [_header(args, problem, order)]
    for lab, v in zip(labels, basis):
        records.append(
            {"kind": "basis", "name": lab, "rank": v.ambient.rank, "value": format_vector(v, problem.var_names)}
        )
    records.append({"kind": "lt_module", "value": format_lt_module(list(basis), problem.var_names)})
    return records


def _divide_for(args, target, divisors, order, trace):
    if getattr(args, "valuation_division", False):
        return divide_valuation(target, divisors, order, trace=trace)
    return divide(target, divisors, order, trace=trace)


def cmd_reduce(args, problem):
    order = _pick_order(args, problem)
    names, vecs = _gens(problem, order)
    target = reorder(parse_vector_literal(args.target, problem), order)
    res = _divide_for(args, target, vecs, order, _trace_sink(args))
    records = [_header(args, problem, order)]
    records.append({"kind": "target", "rank": target.ambient.rank, "value": format_vector(target, problem.var_names)})
    for name, q in zip(names, res.quotients):
        records.append({"kind": "quotient", "name": name, "rank": 1, "value": format_vector(q, problem.var_names)})
    records.append(
        {"kind": "remainder", "rank": res.remainder.ambient.rank, "value": format_vector(res.remainder, problem.var_names)}
    )
    return records


def cmd_member(args, problem):
    order = _pick_order(args, problem)
    names, vecs = _gens(problem, order)
    target = reorder(parse_vector_literal(args.target, problem), order)
    trace = _trace_sink(args)
    basis, labels = _buchberger_level0(vecs, order, names, guard=10_000, trace=trace)
    gb = GroebnerBasis(tuple(basis), order, pseudo_reduced=False)
    if getattr(args, "valuation_division", False):
        res = divide_valuation(target, list(basis), order, trace=trace)
        quotients = res.quotients if res.remainder.is_zero() else None
    else:
        quotients = module_member(target, gb)
    records = [_header(args, problem, order)]
    records.append({"kind": "target", "rank": target.ambient.rank, "value": format_vector(target, problem.var_names)})
    records.append({"kind": "member", "value": "yes" if quotients is not None else "no"})
    if quotients is not None:
        for lab, q in zip(labels, quotients):
            records.append({"kind": "certificate", "name": lab, "rank": 1, "value": format_vector(q, problem.var_names)})
        for lab, v in zip(labels, basis):
            records.append(
                {"kind": "basis", "name": lab, "rank": v.ambient.rank, "value": format_vector(v, problem.var_names)}
            )
    return records


def cmd_syz(args, problem):
    order = _pick_order(args, problem)
    names, vecs = _gens(problem, order)
    trace = _trace_sink(args)
    basis, labels = _buchberger_level0(vecs, order, names, guard=10_000, trace=trace)
    syz = schreyer_syzygies(GroebnerBasis(tuple(basis), order, False), labels=labels, trace=trace)
    relations, rel_labels = syz.relations, syz.labels
    if args.pseudo_reduce:
        gbr, rel_labels = _pseudo_reduce_labeled(relations, syz.order, rel_labels, guard=10_000)
        relations = gbr.elements
    records = [_header(args, problem, order)]
    for lab, v in zip(labels, basis):
        records.append(
            {"kind": "basis", "name": lab, "rank": v.ambient.rank, "value": format_vector(v, problem.var_names)}
        )
    for lab, v in zip(rel_labels, relations):
        records.append(
            {"kind": "syzygy", "name": lab, "rank": v.ambient.rank, "value": format_vector(v, problem.var_names)}
        )
    records.append(
        {"kind": "lt_module", "value": format_lt_module(list(relations), problem.var_names) if relations else "<0>"}
    )
    return records


def cmd_resolve(args, problem):
    order = _pick_order(args, problem)
    names, vecs = _gens(problem, order)
    trace = _trace_sink(args)
    unsafe = order if getattr(args, "unsafe_order", None) else None
    res = free_resolution(
        vecs,
        max_levels=args.max_levels,
        labels=names,
        trace=trace,
        unsafe_order=unsafe,
    )
    records = [_header(args, problem, order)]
    for k, level in enumerate(res.levels):
        records.append({"kind": "level", "index": k, "rank": len(level.basis)})
        for lab, v in zip(level.labels, level.basis):
            records.append(
                {
                    "kind": "relation",
                    "level": k,
                    "name": lab,
                    "rank": v.ambient.rank,
                    "value": format_vector(v, problem.var_names),
                }
            )
        records.append(
            {
                "kind": "lt_module",
                "level": k,
                "value": format_lt_module(list(level.basis), problem.var_names),
            }
        )
    ranks = [len(level.basis) for level in res.levels]
    chain = ["0"] if isinstance(res.tail, FreeTail) else ["..."]
    for r in reversed(ranks):
        chain.append(f"R^{r}")
    chain.append("U")
    chain.append("0")
    if isinstance(res.tail, FreeTail):
        records.append({"kind": "chain", "value": " -> ".join(chain), "length": res.length})
    else:
        records.append(
            {
                "kind": "chain",
                "value": " -> ".join(chain),
                "length": "infinite",
                "explicit_levels": len(res.levels),
            }
        )
    if isinstance(res.tail, PeriodicTail):
        ring = problem.ring
        records.append(
            {
                "kind": "tail",
                "value": "periodic",
                "stable_level": res.tail.stable_index,
                "b": [ring.format(x) for x in res.tail.b],
                "ann_b": [ring.format(x) for x in res.tail.ann_b],
                "ann_ann_b": [ring.format(x) for x in res.tail.ann_ann_b],
            }
        )
    else:
        records.append({"kind": "tail", "value": "free", "length": res.length})
    report = verify_resolution(res)
    records.append(
        {
            "kind": "verification",
            "value": "ok" if report.ok else "failed",
            "checks": len(report.checks),
        }
    )
    if not report.ok:
        raise InternalError(f"resolution verification failed: {report.failures()}")
    return records


_COMMANDS = {
    "gb": cmd_gb,
    "reduce": cmd_reduce,
    "member": cmd_member,
    "syz": cmd_syz,
    "resolve": cmd_resolve,
}


def _render_text(records):
    lines = []
    for rec in records:
        kind = rec["kind"]
        if kind == "header":
            lines.append(f"# {rec['command']} over {rec['ring']}[{', '.join(rec['vars'])}]^{rec['rank']}")
            lines.append(f"# order: {rec['order']}")
            lines.append(f"# note: {rec['note']}")
        elif kind == "level":
            lines.append(f"level {rec['index']} (rank {rec['rank']}):")
        elif kind in ("quotient", "certificate"):
            lines.append(f"q({rec['name']}) = {rec['value']}")
        elif kind in ("basis", "syzygy", "relation"):
            prefix = "  " if "level" in rec else ""
            lines.append(f"{prefix}{rec['name']} = {rec['value']}")
        elif kind == "lt_module":
            prefix = "  " if "level" in rec else ""
            lines.append(f"{prefix}LT = {rec['value']}")
        elif kind == "target":
            lines.append(f"target = {rec['value']}")
        elif kind == "remainder":
            lines.append(f"remainder = {rec['value']}")
        elif kind == "member":
            lines.append(f"member: {rec['value']}")
        elif kind == "chain":
            lines.append(f"resolution: {rec['value']} (length {rec['length']})")
        elif kind == "tail":
            if rec["value"] == "periodic":
                lines.append(
                    f"tail: periodic from level {rec['stable_level']}; b = ({', '.join(rec['b'])}); "
                    f"Ann(b) = ({', '.join(rec['ann_b'])}); Ann(Ann(b)) = ({', '.join(rec['ann_ann_b'])})"
                )
            else:
                lines.append("tail: free")
        elif kind == "verification":
            lines.append(f"verification: {rec['value']} ({rec['checks']} checks)")
        else:
            lines.append(json.dumps(rec))
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        problem = _read_problem(args)
        records = _COMMANDS[args.command](args, problem)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalError, GuardExceeded) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.format == "json-like":
        out = "\n".join(json.dumps(rec) for rec in records) + "\n"
    else:
        out = _render_text(records)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
