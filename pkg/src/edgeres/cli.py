"""Command-line entry point: ``edgeres <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import BettiTable, hochster_betti, index_via_cycles, resolution_stats
from .evenconn import even_connection_graph
from .families import FamilySpec, all_specs, build_family, recognize_family
from .field import parse_field
from .graph import SizeGuardError, complement, format_graph, graph_to_json, parse_graph
from .monomial import (
    OrderedGenerators,
    banerjee_order,
    betti_of_monomial_ideal,
    check_linear_quotients,
    edge_ideal,
    ideal_from_strings,
    ideal_power,
    parse_ideal,
)
from .verify import (
    verify_char_independence,
    verify_classification,
    verify_power_linearity,
    verify_regularity_bounds,
)


class InputError(Exception):
    """Bad user input; exit code 2."""


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str):
    try:
        return parse_graph(_read(path))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _field(text: str):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _table(args) -> BettiTable:
    g = _graph(args.graph)
    field = _field(args.field)
    if args.power == 1:
        return hochster_betti(g, field, args.threads)
    if args.power < 1:
        raise InputError("--power must be at least 1")
    return betti_of_monomial_ideal(ideal_power(edge_ideal(g), args.power), field, args.threads)


def cmd_betti(args) -> int:
    t = _table(args)
    _emit(args, t.to_json(), t.to_tsv())
    return 0


def cmd_stats(args) -> int:
    stats = resolution_stats(_table(args))
    data = stats.to_json()
    text = "".join(f"{k}\t{str(v).lower() if isinstance(v, bool) else v}\n" for k, v in data.items())
    _emit(args, data, text)
    return 0


def cmd_index(args) -> int:
    value = index_via_cycles(_graph(args.graph))
    _emit(args, {"index": str(value) if not isinstance(value, int) else value}, f"{value}\n")
    return 0


def _spec(kind: str, t: int) -> FamilySpec:
    try:
        return FamilySpec(kind, t if kind.upper() in ("A1", "A2", "A3", "B") else 1)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_family(args) -> int:
    g = build_family(_spec(args.kind, args.t))
    if args.complement:
        g = complement(g)
    _emit(args, graph_to_json(g), format_graph(g))
    return 0


def cmd_classify(args) -> int:
    spec = recognize_family(complement(_graph(args.graph)))
    if spec is None:
        _emit(args, {"family": None}, "none\n")
    else:
        label = spec.kind if spec.kind in ("C", "D1", "D2") else f"{spec.kind} t={spec.t}"
        _emit(args, {"family": spec.kind, "t": spec.t}, label + "\n")
    return 0


def _parse_edges(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise InputError(f"bad edge {item!r}; expected u-v") from None
        out.append((u, v))
    if not out:
        raise InputError("--edges is empty")
    return out


def cmd_evenconn(args) -> int:
    g = _graph(args.graph)
    try:
        h = even_connection_graph(g, _parse_edges(args.edges))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, graph_to_json(h), format_graph(h))
    return 0


def _ordered_from_file(text: str) -> OrderedGenerators:
    try:
        ideal = parse_ideal(text)
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        gens = [ln for ln in lines if ln and not ln.startswith("vars:")]
        if text.strip().startswith("{"):
            gens = json.loads(text)["generators"]
        listed = [ideal_from_strings([g], ideal.variables).gens[0] for g in gens]
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None
    if set(listed) != set(ideal.gens) or len(listed) != len(ideal.gens):
        raise InputError("generators in the file must form a minimal generating set")
    return OrderedGenerators(ideal.variables, tuple(listed))


def cmd_linquo(args) -> int:
    text = _read(args.ideal)
    if args.banerjee:
        t, s = args.banerjee
        try:
            order = banerjee_order(parse_ideal(text), t + 3, s)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        order = _ordered_from_file(text)
    report = check_linear_quotients(order)
    payload = {"order": order.describe(), **report.to_json(order.variables)}
    lines = ["ok" if report.ok else "fail"]
    if report.witness:
        w = payload["witness"]
        lines.append(f"witness q={w['q']} l={w['l']} quotient={w['quotient']}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0 if report.ok else 1


def _report_out(args, report) -> int:
    if args.json:
        sys.stdout.write(report.dumps() + "\n")
    else:
        status = "PASS" if report.passed else "FAIL"
        sys.stdout.write(f"{report.theorem}\t{status}\t{len(report.instances)} instances\t{len(report.failures)} failures\n")
        for r in report.failures:
            sys.stdout.write(f"  failed: {r['instance']}\n")
            if "graph" in r["data"]:
                sys.stdout.write("".join("    " + ln + "\n" for ln in r["data"]["graph"].splitlines()))
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    field = _field(args.field)
    if args.check == "classification":
        if args.n == 7 and not args.extended:
            raise InputError("n=7 is an extended run; pass --extended")
        report = verify_classification(args.n, field, args.threads)
    elif args.check == "powers":
        if not args.kind:
            raise InputError("verify powers needs --kind")
        report = verify_power_linearity(_spec(args.kind, args.t), args.smax, field, args.threads)
    elif args.check == "bounds":
        if args.graph:
            g = _graph(args.graph)
        elif args.kind:
            g = complement(build_family(_spec(args.kind, args.t)))
        else:
            raise InputError("verify bounds needs a graph file or --kind")
        report = verify_regularity_bounds(g, args.s, field, args.threads)
    else:
        fields = [_field(f) for f in args.fields.split(",")]
        report = verify_char_independence(all_specs(args.tmax), fields, args.threads)
    return _report_out(args, report)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    fieldopt = argparse.ArgumentParser(add_help=False)
    fieldopt.add_argument("--field", default="q", help="q, 2, 3, or p:<prime>")

    p = argparse.ArgumentParser(prog="edgeres", description="Betti numbers and index of edge ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("betti", cmd_betti, "graded Betti table"),
                            ("stats", cmd_stats, "index, pd, reg and almost-maximal flag")):
        q = sub.add_parser(name, parents=[common, fieldopt], help=help_)
        q.add_argument("graph")
        q.add_argument("--power", type=int, default=1)
        q.set_defaults(func=fn)

    q = sub.add_parser("index", parents=[common], help="index from the shortest induced cycle of the complement")
    q.add_argument("graph")
    q.set_defaults(func=cmd_index)

    q = sub.add_parser("family", parents=[common], help="emit a family graph")
    q.add_argument("--kind", required=True)
    q.add_argument("--t", type=int, default=1)
    q.add_argument("--complement", action="store_true", help="emit G instead of its complement")
    q.set_defaults(func=cmd_family)

    q = sub.add_parser("classify", parents=[common], help="recognize the complement as a family member")
    q.add_argument("graph")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("evenconn", parents=[common], help="graph of the polarized colon ideal")
    q.add_argument("graph")
    q.add_argument("--edges", required=True, help='edge multiset, e.g. "1-2,3-4"')
    q.set_defaults(func=cmd_evenconn)

    q = sub.add_parser("linquo", parents=[common], help="linear-quotients check")
    q.add_argument("ideal")
    q.add_argument("--banerjee", type=int, nargs=2, metavar=("T", "S"),
                   help="use the block order for the cycle of length T+3 and exponent S")
    q.set_defaults(func=cmd_linquo)

    q = sub.add_parser("verify", parents=[common, fieldopt], help="run a verification sweep")
    q.add_argument("check", choices=["classification", "powers", "bounds", "chars"])
    q.add_argument("graph", nargs="?")
    q.add_argument("--n", type=int, default=5)
    q.add_argument("--extended", action="store_true", help="allow the n=7 classification sweep")
    q.add_argument("--kind")
    q.add_argument("--t", type=int, default=1)
    q.add_argument("--smax", type=int, default=2)
    q.add_argument("--s", type=int, default=1)
    q.add_argument("--tmax", type=int, default=3)
    q.add_argument("--fields", default="q,2,3")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is not None and args.threads < 1:
        print("edgeres: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"edgeres: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"edgeres: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"edgeres: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
