"""Document grammar for complexes and weight systems.

Both document kinds are JSON objects.  A complex document:

    {"name": "t2_7", "vertex_count": 7, "maximal_simplices": [[0,1,3], ...]}

All faces are generated on load; arrays must be strictly increasing.  A weight
document is either an explicit edge map or an integral class with a base:

    {"edges": {"0-1": "3/2", "0-2": 1}}
    {"integral": {"edges": {"0-1": 1, "0-2": 0}, "base": 2}}

Rational literals are written "p/q" (or a plain integer); floats are rejected.
"""

from __future__ import annotations

import json

from .complexes import Complex
from .linalg import QQ, format_rational, rational
from .weights import WeightCocycle, from_integral_class


class DocumentError(ValueError):
    """Raised for unparsable or invalid documents (CLI exit code 2)."""


def _load_json(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "%s: invalid JSON at line %d column %d: %s"
            % (path, exc.lineno, exc.colno, exc.msg))


def parse_complex_document(data, source="<complex>"):
    if not isinstance(data, dict):
        raise DocumentError("%s: expected a JSON object" % source)
    try:
        vertex_count = int(data["vertex_count"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or non-integer vertex_count" % source)
    simplices = data.get("maximal_simplices")
    if not isinstance(simplices, list):
        raise DocumentError("%s: maximal_simplices must be a list" % source)
    for k, entry in enumerate(simplices):
        if (not isinstance(entry, list)
                or not all(isinstance(v, int) for v in entry)):
            raise DocumentError(
                "%s: entry %d (%r) is not an integer array" % (source, k, entry))
        if entry != sorted(set(entry)):
            raise DocumentError(
                "%s: entry %d (%r) is not strictly increasing" % (source, k, entry))
        if entry and (entry[0] < 0 or entry[-1] >= vertex_count):
            raise DocumentError(
                "%s: entry %d (%r) has a vertex out of range" % (source, k, entry))
    name = data.get("name")
    try:
        return Complex(vertex_count, simplices, name=name)
    except ValueError as exc:
        raise DocumentError("%s: %s" % (source, exc))


def read_complex(path):
    return parse_complex_document(_load_json(path), source=path)


def _parse_edge_key(key, source):
    parts = key.split("-")
    if len(parts) != 2:
        raise DocumentError("%s: edge key %r is not of the form i-j" % (source, key))
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise DocumentError("%s: edge key %r is not of the form i-j" % (source, key))
    if i >= j:
        raise DocumentError("%s: edge key %r must have i < j" % (source, key))
    return i, j


def _parse_rational(value, source, context):
    if isinstance(value, float):
        raise DocumentError(
            "%s: %s is a float; write rationals as \"p/q\"" % (source, context))
    try:
        return rational(value)
    except (ValueError, TypeError) as exc:
        raise DocumentError("%s: %s: %s" % (source, context, exc))


def parse_weight_document(data, complex_, source="<weights>"):
    if not isinstance(data, dict):
        raise DocumentError("%s: expected a JSON object" % source)
    if "edges" in data and "integral" not in data:
        weight = {}
        for key, value in data["edges"].items():
            edge = _parse_edge_key(key, source)
            weight[edge] = _parse_rational(value, source, "edge %s" % key)
        try:
            return WeightCocycle(complex_, weight).require_valid()
        except ValueError as exc:
            raise DocumentError("%s: %s" % (source, exc))
    if "integral" in data:
        section = data["integral"]
        if not isinstance(section, dict) or "edges" not in section:
            raise DocumentError("%s: integral form needs an edges map" % source)
        exponents = {}
        for key, value in section["edges"].items():
            edge = _parse_edge_key(key, source)
            if not isinstance(value, int):
                raise DocumentError(
                    "%s: integral exponent for %s must be an integer" % (source, key))
            exponents[edge] = value
        base = _parse_rational(section.get("base", 2), source, "base")
        try:
            return from_integral_class(complex_, exponents, base)
        except ValueError as exc:
            raise DocumentError("%s: %s" % (source, exc))
    raise DocumentError("%s: expected an \"edges\" or \"integral\" section" % source)


def read_weights(path, complex_):
    return parse_weight_document(_load_json(path), complex_, source=path)


def maximal_simplices(complex_):
    """Simplices with no coface, sorted by (dimension, lex)."""
    proper_faces = set()
    for p in range(1, complex_.dim + 1):
        for t in complex_.faces(p):
            for i in range(len(t)):
                proper_faces.add(t[:i] + t[i + 1:])
    return [list(s) for p in range(complex_.dim + 1)
            for s in complex_.faces(p) if s not in proper_faces]


def complex_to_document(complex_):
    doc = {"vertex_count": complex_.vertex_count,
           "maximal_simplices": maximal_simplices(complex_)}
    if complex_.name:
        doc["name"] = complex_.name
    return doc


def weights_to_document(w):
    edges = {}
    for (i, j), value in sorted(w.weight.items()):
        if value.denominator == 1:
            edges["%d-%d" % (i, j)] = int(value)
        else:
            edges["%d-%d" % (i, j)] = format_rational(value)
    return {"edges": edges}


def write_complex(complex_, path):
    with open(path, "w") as handle:
        json.dump(complex_to_document(complex_), handle, indent=1)
        handle.write("\n")


def write_weights(w, path):
    with open(path, "w") as handle:
        json.dump(weights_to_document(w), handle, indent=1)
        handle.write("\n")
