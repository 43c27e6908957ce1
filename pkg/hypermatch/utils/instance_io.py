"""Instance documents: a JSON object describing a weight or an edge sublist.

    {
      "default_weight": 0.5,
      "entries": [
        {"edge": [0, 1], "w": 0.25}
      ],
      "k": 2,
      "kind": "complete-uniform",
      "m": 2
    }

A sublist document carries "sublist_members" (a list of edges) instead of
"default_weight" and "entries".
"""

import json
import logging
import math
from collections import Counter
from typing import Tuple, Union

import numpy as np

from ..core.errors import HypermatchError, ParseError
from ..core.hypergraph import EdgeSublist, HypergraphSpec, edge_index, index_edge
from ..core.weights import WeightVector
from .helpers import format_number

logger = logging.getLogger(__name__)

TOP_LEVEL_FIELDS = {"kind", "k", "m", "default_weight", "entries", "sublist_members"}
ENTRY_FIELDS = {"edge", "w"}

Payload = Union[WeightVector, EdgeSublist]


def _number(value, locus) -> float:
    if isinstance(value, bool):
        raise ParseError("Expected a number, got a boolean", locus)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str) and value in ("inf", "-inf", "nan"):
        return float(value)
    raise ParseError(f"Expected a number, got {value!r}", locus)


def _integer(value, locus) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"Expected an integer, got {value!r}", locus)
    return value


def _edge(spec: HypergraphSpec, value, locus) -> int:
    if not isinstance(value, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in value
    ):
        raise ParseError(f"Expected a list of vertex ids, got {value!r}", locus)
    try:
        return edge_index(spec, value)
    except HypermatchError as exc:
        raise ParseError(str(exc), locus) from exc


def parse_instance(data: Union[str, bytes]) -> Tuple[HypergraphSpec, Payload]:
    """Parse an instance document into its spec and a weight or a sublist."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("Instance is not valid UTF-8", f"byte {exc.start}") from exc
    try:
        document = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(document, dict):
        raise ParseError("Instance must be a JSON object", "document")

    unknown = sorted(set(document) - TOP_LEVEL_FIELDS)
    if unknown:
        logger.debug("rejecting unknown fields %s", unknown)
        raise ParseError(f"Unknown field '{unknown[0]}'", unknown[0])
    for name in ("kind", "k", "m"):
        if name not in document:
            raise ParseError(f"Missing field '{name}'", name)
    if not isinstance(document["kind"], str):
        raise ParseError(f"Expected a string, got {document['kind']!r}", "kind")
    try:
        spec = HypergraphSpec(
            document["kind"], _integer(document["k"], "k"), _integer(document["m"], "m")
        )
    except ParseError:
        raise
    except HypermatchError as exc:
        raise ParseError(str(exc), "kind/k/m") from exc

    if "sublist_members" in document:
        for name in ("entries", "default_weight"):
            if name in document:
                raise ParseError(f"'{name}' cannot appear with 'sublist_members'", name)
        return spec, _parse_sublist(spec, document["sublist_members"])
    return spec, _parse_weight(spec, document)


def _parse_sublist(spec: HypergraphSpec, members) -> EdgeSublist:
    if not isinstance(members, list):
        raise ParseError("Expected a list of edges", "sublist_members")
    seen = set()
    for i, value in enumerate(members):
        locus = f"sublist_members[{i}]"
        index = _edge(spec, value, locus)
        if index in seen:
            raise ParseError(f"Duplicate edge {index_edge(spec, index)}", locus)
        seen.add(index)
    return EdgeSublist(spec, frozenset(seen))


def _parse_weight(spec: HypergraphSpec, document) -> WeightVector:
    entries = document.get("entries", [])
    if not isinstance(entries, list):
        raise ParseError("Expected a list of entries", "entries")
    values = np.full(spec.edge_count, math.nan)
    if "default_weight" in document:
        values[:] = _number(document["default_weight"], "default_weight")
    seen = set()
    for i, entry in enumerate(entries):
        locus = f"entries[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("Expected an object with 'edge' and 'w'", locus)
        unknown = sorted(set(entry) - ENTRY_FIELDS)
        if unknown:
            raise ParseError(f"Unknown field '{unknown[0]}'", f"{locus}.{unknown[0]}")
        for name in ENTRY_FIELDS:
            if name not in entry:
                raise ParseError(f"Missing field '{name}'", f"{locus}.{name}")
        index = _edge(spec, entry["edge"], f"{locus}.edge")
        if index in seen:
            raise ParseError(f"Duplicate edge {index_edge(spec, index)}", f"{locus}.edge")
        seen.add(index)
        values[index] = _number(entry["w"], f"{locus}.w")
    if "default_weight" not in document and len(seen) < spec.edge_count:
        raise ParseError(
            f"Entries cover {len(seen)} of {spec.edge_count} edges and no default_weight is given",
            "default_weight",
        )
    try:
        return WeightVector(spec, values)
    except HypermatchError as exc:
        raise ParseError(str(exc), "entries") from exc


def _edge_text(edge) -> str:
    return "[" + ", ".join(str(v) for v in edge) + "]"


def serialize_instance(spec: HypergraphSpec, payload: Payload) -> str:
    """Canonical document for a weight or sublist; inverse of parse_instance.

    Keys are sorted, numbers carry 17 significant digits and the most common
    weight value becomes default_weight (the smallest one on ties).
    """
    fields = {"k": str(spec.k), "kind": json.dumps(spec.kind.value), "m": str(spec.m)}
    if isinstance(payload, EdgeSublist):
        rows = [_edge_text(edge) for edge in payload.edges()]
        fields["sublist_members"] = _block(rows)
    elif isinstance(payload, WeightVector):
        tally = Counter(payload.values.tolist())
        default = min(tally, key=lambda value: (-tally[value], value))
        fields["default_weight"] = format_number(default)
        rows = []
        for i in np.flatnonzero(payload.values != default):
            edge = _edge_text(index_edge(spec, int(i)))
            rows.append(f'{{"edge": {edge}, "w": {format_number(payload[int(i)])}}}')
        fields["entries"] = _block(rows)
    else:
        raise TypeError(f"Cannot serialize {type(payload).__name__}")
    body = ",\n".join(f"  {json.dumps(key)}: {fields[key]}" for key in sorted(fields))
    return "{\n" + body + "\n}\n"


def _block(rows) -> str:
    if not rows:
        return "[]"
    return "[\n" + ",\n".join(f"    {row}" for row in rows) + "\n  ]"
