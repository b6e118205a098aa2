"""JSON file formats: loading with line-anchored errors, schemas, and document output.

Every document carries ``"format_version": 1``; inputs may omit it.
"""

from __future__ import annotations

import json
import os
import re
from json.decoder import scanstring

import jsonschema

from .covering import GraphMorphism, check_morphism
from .errors import InvalidInput
from .finite import finite_group_from_table, finite_subgroup
from .freegroup import FreeGroup, stallings_graph
from .fundamental import Labelling
from .graph import Graph, validate_graph
from .skewprod import validate_action

FORMAT_VERSION = 1

_STR = {"type": "string"}
_STR_MAP = {"type": "object", "additionalProperties": _STR}
_VERSION = {"const": FORMAT_VERSION}

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["vertices", "edges"],
    "properties": {
        "format_version": _VERSION,
        "vertices": {"type": "array", "items": _STR},
        "edges": {"type": "array", "items": {
            "type": "object", "required": ["id", "src", "dst"],
            "properties": {"id": _STR, "src": _STR, "dst": _STR}}},
    },
}
_GRAPH_REF = {"oneOf": [_STR, GRAPH_SCHEMA]}

FINITE_GROUP_SCHEMA = {
    "type": "object",
    "required": ["elements", "table"],
    "properties": {
        "format_version": _VERSION,
        "elements": {"type": "array", "items": _STR, "minItems": 1},
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "identity": {"type": "integer"},
    },
}

GROUP_SCHEMA = {
    "oneOf": [
        {"type": "object", "required": ["free"],
         "properties": {"free": {"type": "array", "items": _STR}}},
        {"type": "object", "required": ["finite"], "properties": {"finite": FINITE_GROUP_SCHEMA}},
    ]
}

LABELLING_SCHEMA = {
    "type": "object",
    "required": ["group", "values"],
    "properties": {"format_version": _VERSION, "graph": _GRAPH_REF, "group": GROUP_SCHEMA,
                   "values": _STR_MAP},
}

SUBGROUP_SCHEMA = {
    "type": "object",
    "required": ["group"],
    "properties": {"format_version": _VERSION, "group": GROUP_SCHEMA,
                   "generators": {"type": "array", "items": _STR},
                   "elements": {"type": "array", "items": _STR}},
    "anyOf": [{"required": ["generators"]}, {"required": ["elements"]}],
}

MORPHISM_SCHEMA = {
    "type": "object",
    "required": ["domain", "codomain", "vertex_map", "edge_map"],
    "properties": {"format_version": _VERSION, "domain": _GRAPH_REF, "codomain": _GRAPH_REF,
                   "vertex_map": _STR_MAP, "edge_map": _STR_MAP},
}

ACTION_SCHEMA = {
    "type": "object",
    "required": ["group", "vertex_action", "edge_action"],
    "properties": {"format_version": _VERSION, "group": FINITE_GROUP_SCHEMA,
                   "vertex_action": {"type": "object", "additionalProperties": _STR_MAP},
                   "edge_action": {"type": "object", "additionalProperties": _STR_MAP}},
}

_MAPS = {"type": "object", "required": ["vertex_map", "edge_map"],
         "properties": {"vertex_map": _STR_MAP, "edge_map": _STR_MAP}}
_COSETS = {"type": "object", "required": ["names", "identity", "action"],
           "properties": {"names": {"type": "array", "items": _STR}, "identity": _STR,
                          "action": {"type": "object", "additionalProperties": _STR_MAP}}}


def _doc(kind, required, properties):
    props = {"format_version": _VERSION, "kind": {"const": kind}}
    props.update(properties)
    return {"type": "object", "required": ["format_version", "kind"] + required, "properties": props}


SKEW_SCHEMA = _doc("skew_product", ["base", "labelling", "cosets", "product", "projection"], {
    "base": GRAPH_SCHEMA, "labelling": LABELLING_SCHEMA, "cosets": _COSETS,
    "product": GRAPH_SCHEMA, "projection": _MAPS})

OUTPUT_SCHEMAS = {
    "graph": GRAPH_SCHEMA,
    "labelling": LABELLING_SCHEMA,
    "subgroup": SUBGROUP_SCHEMA,
    "skew_product": SKEW_SCHEMA,
    "validation": _doc("validation", ["valid", "violations"], {
        "valid": {"type": "boolean"}, "violations": {"type": "array", "items": _STR}}),
    "pi1": _doc("pi1", ["base", "tree_edges", "generators", "loops"], {
        "base": _STR, "tree_edges": {"type": "array", "items": _STR},
        "generators": {"type": "array", "items": _STR}, "loops": _STR_MAP}),
    "covering_check": _doc("covering_check", ["covering"], {"covering": {"type": "boolean"}}),
    "lift": _doc("lift", ["walk", "lift"], {"walk": _STR, "lift": _STR}),
    "sheets": _doc("sheets", ["sheets"], {"sheets": {"type": "integer", "minimum": 1}}),
    "quotient": _doc("quotient", ["quotient", "quotient_map", "covering"], {
        "quotient": GRAPH_SCHEMA, "quotient_map": _MAPS, "covering": {"type": "boolean"}}),
    "gross_tucker": _doc("gross_tucker", ["quotient", "d", "skew_product", "phi", "isomorphism",
                                          "equivariant"], {
        "quotient": GRAPH_SCHEMA, "d": LABELLING_SCHEMA, "skew_product": GRAPH_SCHEMA, "phi": _MAPS,
        "isomorphism": {"type": "boolean"}, "equivariant": {"type": "boolean"}}),
    "reconstruction": _doc("reconstruction", ["labelling", "subgroup", "cosets", "skew", "phi",
                                              "tau", "theta", "checks"], {
        "labelling": LABELLING_SCHEMA, "subgroup": SUBGROUP_SCHEMA, "cosets": _COSETS,
        "phi": _MAPS, "tau": _STR_MAP, "theta": _STR_MAP}),
    "skeleton_check": _doc("skeleton_check", ["passed", "violations"], {
        "passed": {"type": "boolean"}, "violations": {"type": "array", "items": _STR}}),
    "selftest": _doc("selftest", ["passed", "criteria"], {
        "passed": {"type": "boolean"}, "criteria": {"type": "array"}}),
}


class InputError(InvalidInput):
    """Malformed or schema-violating input file, with a ``path:line:col`` prefix."""


# ---- JSON with source positions -------------------------------------------

_WS = re.compile(r"[ \t\n\r]*")
_NUMBER = re.compile(r"-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][-+]?\d+)?")


def _parse_positions(text):
    """Offsets of every JSON value, keyed by path tuple. Assumes ``text`` is valid JSON."""
    positions = {}

    def value(i, path):
        i = _WS.match(text, i).end()
        positions[path] = i
        ch = text[i]
        if ch == "{":
            i = _WS.match(text, i + 1).end()
            if text[i] == "}":
                return i + 1
            while True:
                i = _WS.match(text, i).end()
                key, i = scanstring(text, i + 1)
                i = _WS.match(text, i).end() + 1  # colon
                i = value(i, path + (key,))
                i = _WS.match(text, i).end()
                if text[i] == "}":
                    return i + 1
                i += 1
        if ch == "[":
            i = _WS.match(text, i + 1).end()
            if text[i] == "]":
                return i + 1
            k = 0
            while True:
                i = value(i, path + (k,))
                i = _WS.match(text, i).end()
                k += 1
                if text[i] == "]":
                    return i + 1
                i += 1
        if ch == '"':
            return scanstring(text, i + 1)[1]
        for lit in ("true", "false", "null"):
            if text.startswith(lit, i):
                return i + len(lit)
        return _NUMBER.match(text, i).end()

    value(0, ())
    return positions


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class Document:
    """A parsed JSON file that can point back at the line of any value."""

    def __init__(self, path, text):
        self.path = path
        self.text = text
        try:
            self.data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
        self._positions = None

    def where(self, json_path=()) -> str:
        if self._positions is None:
            self._positions = _parse_positions(self.text)
        path = tuple(json_path)
        while path not in self._positions and path:
            path = path[:-1]
        line, col = _line_col(self.text, self._positions.get(path, 0))
        return f"{self.path}:{line}:{col}"

    def validate(self, schema, what):
        errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(self.data),
                        key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
        if errors:
            err = errors[0]
            loc = "/".join(str(p) for p in err.absolute_path) or "<root>"
            raise InputError(f"{self.where(err.absolute_path)}: invalid {what} at {loc}: {err.message}")
        return self

    def fail(self, json_path, message):
        raise InputError(f"{self.where(json_path)}: {message}")


def load_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from None
    return Document(path, text)


def document_from_text(text: str, name: str = "<input>") -> Document:
    return Document(name, text)


# ---- domain objects from JSON ----------------------------------------------

def _guard(doc, json_path, fn, *args):
    try:
        return fn(*args)
    except InputError:
        raise
    except InvalidInput as exc:
        doc.fail(json_path, str(exc))


def graph_from_data(doc: Document, data, json_path=()) -> Graph:
    if isinstance(data, str):
        base = os.path.dirname(doc.path) if doc.path and not doc.path.startswith("<") else ""
        return read_graph(os.path.join(base, data))
    return _guard(doc, json_path, validate_graph, data)


def read_graph(path: str) -> Graph:
    doc = load_document(path).validate(GRAPH_SCHEMA, "graph")
    return graph_from_data(doc, doc.data)


def group_from_data(doc: Document, data, json_path=()):
    if "free" in data:
        return _guard(doc, json_path + ("free",), FreeGroup, tuple(data["free"]))
    return _guard(doc, json_path + ("finite",), finite_group_from_table, data["finite"])


def read_labelling(path: str, graph: Graph = None) -> Labelling:
    doc = load_document(path).validate(LABELLING_SCHEMA, "labelling")
    return labelling_from_data(doc, doc.data, graph)


def labelling_from_data(doc: Document, data, graph: Graph = None, json_path=()) -> Labelling:
    if "graph" in data:
        own = graph_from_data(doc, data["graph"], json_path + ("graph",))
        if graph is not None and own != graph:
            doc.fail(json_path + ("graph",), "labelling's graph differs from the graph given")
        graph = own
    if graph is None:
        doc.fail(json_path, "labelling needs a graph (inline, by path, or on the command line)")
    group = group_from_data(doc, data["group"], json_path + ("group",))
    values = {}
    for e, text in data["values"].items():
        values[e] = _guard(doc, json_path + ("values", e), group.parse, text)
    return _guard(doc, json_path + ("values",), Labelling, graph, group, values)


def read_subgroup(path: str):
    """A free-group ``SubgroupGraph`` or a ``FiniteSubgroup``."""
    doc = load_document(path).validate(SUBGROUP_SCHEMA, "subgroup")
    return subgroup_from_data(doc, doc.data)


def subgroup_from_data(doc: Document, data, json_path=()):
    group = group_from_data(doc, data["group"], json_path + ("group",))
    if isinstance(group, FreeGroup):
        if "generators" not in data:
            doc.fail(json_path, "free-group subgroups are given by 'generators'")
        words = [_guard(doc, json_path + ("generators", i), group.parse, w)
                 for i, w in enumerate(data["generators"])]
        return stallings_graph(words, group=group)
    if "elements" in data:
        elems = [_guard(doc, json_path + ("elements", i), group.parse, x)
                 for i, x in enumerate(data["elements"])]
        return _guard(doc, json_path + ("elements",), finite_subgroup, group, elems)
    from .finite import generated_subgroup
    gens = [_guard(doc, json_path + ("generators", i), group.parse, x)
            for i, x in enumerate(data["generators"])]
    return generated_subgroup(group, gens)


def read_morphism(path: str) -> GraphMorphism:
    doc = load_document(path).validate(MORPHISM_SCHEMA, "morphism")
    F = graph_from_data(doc, doc.data["domain"], ("domain",))
    E = graph_from_data(doc, doc.data["codomain"], ("codomain",))
    return _guard(doc, ("edge_map",), check_morphism, doc.data["vertex_map"], doc.data["edge_map"], F, E)


def read_action(path: str, graph: Graph, require_free: bool = False):
    doc = load_document(path).validate(ACTION_SCHEMA, "action")
    G = _guard(doc, ("group",), finite_group_from_table, doc.data["group"])
    va, ea = {}, {}
    for key, store in (("vertex_action", va), ("edge_action", ea)):
        for name, m in doc.data[key].items():
            store[_guard(doc, (key, name), G.parse, name)] = m
    return _guard(doc, (), validate_action, G, graph, va, ea, require_free)


# ---- output -----------------------------------------------------------------

def document(kind: str, body: dict) -> dict:
    out = {"format_version": FORMAT_VERSION, "kind": kind}
    out.update(body)
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def check_output(doc: dict):
    """Validate an emitted document against the schema of its kind."""
    kind = doc.get("kind")
    schema = OUTPUT_SCHEMAS.get(kind)
    if schema is None:
        raise KeyError(f"no schema for document kind {kind!r}")
    jsonschema.Draft202012Validator(schema).validate(doc)
