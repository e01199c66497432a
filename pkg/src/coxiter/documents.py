"""JSON interchange for ring data, analysis reports and chains."""

import json
from fractions import Fraction
from typing import Any, Dict, Optional

from .classgroup import class_group, variable_degrees
from .criteria import (
    admits_iteration,
    basic_platonic_triple,
    is_factorial,
    is_hyperplatonic,
    rationality_case,
)
from .errors import NotHyperplatonic, ParseError
from .iteration import A_PRIME_NOTICE, IterationChain, classify_chain
from .linalg import AbelianGroupInvariants
from .ring import RingDatum, render_relations, validate_datum


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(value, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"expected a rational string like \"p/q\", got {value!r}", path)
    try:
        if isinstance(value, str) and ("." in value or "e" in value.lower()):
            raise ValueError
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {value!r}", path) from None


def _int(value, path: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", path)
    if value < minimum:
        raise ParseError(f"must be at least {minimum}, got {value}", path)
    return value


def datum_from_json(doc: Any) -> RingDatum:
    """Parse a datum document.

    Raises :class:`ParseError` for malformed documents and a
    :class:`~coxiter.errors.DatumError` subclass for well-formed documents
    describing an invalid datum. ``A`` and ``m`` may be omitted, in which
    case the canonical coefficients and ``m = 0`` are used.
    """
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if "type" not in doc:
        raise ParseError("missing field", "type")
    ring_type = doc["type"]
    if ring_type not in (1, 2) or isinstance(ring_type, bool):
        raise ParseError(f"must be 1 or 2, got {ring_type!r}", "type")
    blocks = doc.get("blocks")
    if not isinstance(blocks, list):
        raise ParseError("expected a list of exponent lists", "blocks")
    parsed_blocks = []
    for i, b in enumerate(blocks):
        if not isinstance(b, list):
            raise ParseError("expected a list of exponents", f"blocks[{i}]")
        parsed_blocks.append([_int(x, f"blocks[{i}][{j}]", 1) for j, x in enumerate(b)])
    m = _int(doc.get("m", 0), "m", 0)

    A = doc.get("A")
    if A is None:
        parsed_A = None
    elif not isinstance(A, list):
        raise ParseError("expected a list", "A")
    elif ring_type == 2:
        parsed_A = []
        for i, col in enumerate(A):
            if not isinstance(col, list) or len(col) != 2:
                raise ParseError("expected a pair of rationals", f"A[{i}]")
            parsed_A.append(tuple(parse_rational(x, f"A[{i}][{k}]") for k, x in enumerate(col)))
    else:
        parsed_A = [parse_rational(x, f"A[{i}]") for i, x in enumerate(A)]

    meta = doc.get("metadata", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise ParseError("expected a map of strings", "metadata")

    if ring_type == 2:
        return RingDatum.type2(parsed_blocks, parsed_A, m)
    return RingDatum.type1(parsed_blocks, parsed_A, m)


def datum_to_json(d: RingDatum, metadata: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    if d.ring_type == 2:
        A = [[format_rational(a), format_rational(b)] for a, b in d.A]
    else:
        A = [format_rational(a) for a in d.A]
    doc = {"type": d.ring_type, "blocks": [list(b) for b in d.blocks], "m": d.m, "A": A}
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def loads_datum(text: str) -> RingDatum:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    return validate_datum(datum_from_json(doc))


def dumps(obj) -> str:
    """Key-sorted, newline-terminated JSON."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def group_to_json(g: AbelianGroupInvariants) -> Dict[str, Any]:
    return {"rank": g.rank, "torsion": list(g.torsion), "text": str(g)}


def analysis_report(d: RingDatum) -> Dict[str, Any]:
    case = rationality_case(d)
    grading = variable_degrees(d)
    report = {
        "datum": datum_to_json(d),
        "block_gcds": list(d.gcds()),
        "rationality_case": str(case),
        "rational": case.is_rational,
        "factorial": is_factorial(d),
        "hyperplatonic": None,
        "bpt": None,
        "class_group": group_to_json(grading.group),
        "degrees": {k: list(v) for k, v in grading.degrees.items()},
        "relations": render_relations(d),
        "admits_iteration": admits_iteration(d),
    }
    if d.ring_type == 2:
        report["hyperplatonic"] = is_hyperplatonic(d)
        try:
            report["bpt"] = list(basic_platonic_triple(d))
        except NotHyperplatonic:
            pass
    return report


def chain_to_json(chain: IterationChain) -> Dict[str, Any]:
    steps = []
    for d, bpt, grp, case in zip(
        chain.steps, chain.bpts(), chain.class_groups(), chain.rationality_cases()
    ):
        steps.append({
            "datum": datum_to_json(d),
            "bpt": list(bpt) if bpt is not None else None,
            "class_group": group_to_json(grp),
            "rationality_case": str(case),
        })
    warnings = list(chain.notices)
    if A_PRIME_NOTICE not in warnings:
        warnings.insert(0, A_PRIME_NOTICE)
    return {
        "steps": steps,
        "family": str(classify_chain(chain)),
        "warnings": warnings,
    }


def table(rows, headers) -> str:
    """Left-aligned plain-text table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
