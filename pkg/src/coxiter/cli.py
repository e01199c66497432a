"""Command line front end.

Exit codes: 0 success, 1 selfcheck failure, 2 parse or usage error,
3 invalid datum, 4 non-rational iteration step, 5 unclassifiable chain.
"""

import argparse
import json
import sys
from itertools import groupby

from .checks import run_checks
from .documents import (
    analysis_report,
    chain_to_json,
    datum_to_json,
    dumps,
    loads_datum,
    table,
)
from .errors import (
    CoxIterError,
    DatumError,
    NonRationalStep,
    ParseError,
    UnclassifiableChain,
    WrongType,
)
from .iteration import A_PRIME_NOTICE, enumerate_bpt_chains, iterate_chain, type1_to_type2

EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_NONRATIONAL = 4
EXIT_UNCLASSIFIABLE = 5


class CommandError(Exception):
    def __init__(self, code, payload):
        super().__init__(payload.get("message", ""))
        self.code = code
        self.payload = payload


def _read_datum(args):
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return loads_datum(text)
    except ParseError as e:
        raise CommandError(EXIT_PARSE, {"error": "ParseError", "message": e.message, "path": e.path})
    except (DatumError, WrongType, TypeError) as e:
        raise CommandError(EXIT_INVALID, {"error": type(e).__name__, "message": str(e)})


def _fmt(seq):
    return "(" + ",".join(map(str, seq)) + ")"


def _fmt_blocks(blocks):
    """Exponent vectors with runs of equal vectors written as ``[1]x4``."""
    parts = []
    for key, run in groupby(blocks):
        text = "[" + ",".join(map(str, key)) + "]"
        n = len(list(run))
        parts.append(text if n == 1 else f"{text}x{n}")
    return " ".join(parts)


def cmd_analyze(args) -> str:
    d = _read_datum(args)
    report = analysis_report(d)
    if args.format == "json":
        return dumps(report)
    rows = [
        ("type", d.ring_type),
        ("block gcds", _fmt(report["block_gcds"])),
        ("rationality case", report["rationality_case"]),
        ("factorial", report["factorial"]),
        ("hyperplatonic", "-" if report["hyperplatonic"] is None else report["hyperplatonic"]),
        ("bpt", "-" if report["bpt"] is None else _fmt(report["bpt"])),
        ("class group K0", report["class_group"]["text"]),
        ("admits iteration", report["admits_iteration"]),
    ]
    rows += [(f"deg {k}", _fmt(v)) for k, v in report["degrees"].items()]
    rows += [(f"g{i}", rel) for i, rel in enumerate(report["relations"])]
    return table(rows, ("property", "value"))


def cmd_iterate(args) -> str:
    d = _read_datum(args)
    try:
        chain = iterate_chain(d, max_steps=args.max_steps)
        doc = chain_to_json(chain)
    except NonRationalStep as e:
        payload = {"error": "NonRationalStep", "step": e.step, "message": str(e)}
        if e.datum is not None:
            payload["datum"] = datum_to_json(e.datum)
        raise CommandError(EXIT_NONRATIONAL, payload)
    except UnclassifiableChain as e:
        raise CommandError(EXIT_UNCLASSIFIABLE, {"error": "UnclassifiableChain", "message": str(e)})
    if args.format == "json":
        return dumps(doc)
    rows = []
    for i, s in enumerate(doc["steps"]):
        rows.append((
            i,
            _fmt_blocks(s["datum"]["blocks"]),
            "-" if s["bpt"] is None else _fmt(s["bpt"]),
            s["class_group"]["text"],
            s["rationality_case"],
        ))
    out = table(rows, ("step", "exponent vectors", "bpt", "class group", "case"))
    out += f"family: {doc['family']}\n"
    out += "".join(f"note: {w}\n" for w in doc["warnings"])
    return out


def cmd_enumerate(args) -> str:
    try:
        chains = enumerate_bpt_chains(args.max_x)
    except UnclassifiableChain as e:
        raise CommandError(EXIT_UNCLASSIFIABLE, {"error": "UnclassifiableChain", "message": str(e)})
    items = sorted(
        ([list(t) for t in seq], str(fam)) for seq, fam in chains.items()
    )
    if args.format == "json":
        return dumps([{"sequence": s, "family": f} for s, f in items])
    rows = [(" -> ".join(_fmt(t) for t in s), f) for s, f in items]
    return table(rows, ("bpt sequence (input first)", "family"))


def cmd_convert(args) -> str:
    d = _read_datum(args)
    try:
        out = type1_to_type2(d)
    except WrongType as e:
        raise CommandError(EXIT_INVALID, {"error": "WrongType", "message": str(e)})
    doc = datum_to_json(out, {"source": "type1_to_type2", "warnings": A_PRIME_NOTICE})
    if args.format == "json":
        return dumps(doc)
    rows = [(i, _fmt(b), _fmt(a)) for i, (b, a) in enumerate(zip(doc["blocks"], doc["A"]))]
    return table(rows, ("block", "exponents", "A column"))


def cmd_selfcheck(args) -> str:
    results = run_checks()
    lines = [
        f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else "")
        for name, ok, detail in results
    ]
    text = "\n".join(lines) + "\n"
    if not all(ok for _, ok, _ in results):
        raise CommandError(1, {"error": "SelfCheckFailed", "message": text})
    return text


def _positive_int(minimum):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxiter",
        description="Cox ring iteration for trinomial rings of Type 1 and Type 2.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--output", metavar="FILE", help="write here instead of stdout")
    with_input = argparse.ArgumentParser(add_help=False)
    with_input.add_argument("--input", metavar="FILE", help="datum JSON (default: stdin)")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common, with_input], help="report invariants of a datum")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("iterate", parents=[common, with_input], help="run the Cox ring iteration")
    p.add_argument("--max-steps", type=_positive_int(1), default=8)
    p.set_defaults(func=cmd_iterate)
    p = sub.add_parser("enumerate", parents=[common], help="classify chains of all platonic triples")
    p.add_argument("--max-x", type=_positive_int(2), required=True)
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("convert", parents=[common, with_input], help="embed a Type 1 datum as Type 2")
    p.set_defaults(func=cmd_convert)
    p = sub.add_parser("selfcheck", parents=[common], help="run invariant checks on built-in fixtures")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CommandError as e:
        sys.stderr.write(json.dumps(e.payload, sort_keys=True) + "\n")
        return e.code
    except OSError as e:
        sys.stderr.write(json.dumps({"error": "IOError", "message": str(e)}, sort_keys=True) + "\n")
        return EXIT_PARSE
    except CoxIterError as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}, sort_keys=True) + "\n")
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
