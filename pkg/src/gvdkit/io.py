"""JSON ingestion for ideals, graphs and complexes with located error messages."""

from __future__ import annotations

import json
from typing import Any

from .groebner import Ideal
from .polynomial import ParseError, PolynomialRing, UnknownVariableError
from .simplicial import ComplexError, SimplicialComplex
from .toric import Graph, GraphError


class InputError(ValueError):
    """Malformed input file; the message carries the path and position."""


def read_json(path: str) -> Any:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from exc


def ideal_from_json(data: Any, where: str = "<ideal>") -> Ideal:
    if not isinstance(data, dict) or "ring" not in data or "generators" not in data:
        raise InputError(f"{where}: expected an object with 'ring' and 'generators'")
    try:
        ring = PolynomialRing(data["ring"])
    except (ValueError, TypeError) as exc:
        raise InputError(f"{where}: ring: {exc}") from exc
    gens = []
    for k, text in enumerate(data["generators"]):
        if not isinstance(text, str):
            raise InputError(f"{where}: generators[{k}]: expected a string")
        try:
            gens.append(ring.parse(text))
        except (ParseError, UnknownVariableError) as exc:
            off = getattr(exc, "offset", None)
            pos = f" at offset {off}" if off is not None else ""
            raise InputError(f"{where}: generators[{k}]{pos}: {exc}") from exc
    return Ideal(ring, gens)


def ideal_to_json(I: Ideal) -> dict:
    return {"ring": list(I.ring.variables), "generators": [str(g) for g in I.generators]}


def load_ideal(path: str) -> Ideal:
    return ideal_from_json(read_json(path), path)


def load_graph(path: str) -> Graph:
    try:
        return Graph.from_json(read_json(path))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_complex(path: str) -> SimplicialComplex:
    try:
        return SimplicialComplex.from_json(read_json(path))
    except (ComplexError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
