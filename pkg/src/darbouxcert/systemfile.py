"""Loading and validation of JSON system files.

A system file is a single JSON document:

    {
      "variables": ["x", "y"],
      "parameters": ["t"],
      "derivation": ["x", "t*y"],
      "darboux_candidates": ["x", "y"]          // optional
    }

Names must match [A-Za-z][A-Za-z0-9_]* and be pairwise distinct; the
derivation list is parallel to the variables.  Parse errors carry the file
and field they came from.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .derivation import Derivation
from .expressions import ParseError, parse_expression
from .laurent import LaurentPoly


class InputError(ValueError):
    """A system file failed validation; the message carries its origin."""


_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class LoadedSystem:
    variables: tuple[str, ...]
    parameters: tuple[str, ...]
    derivation: Derivation
    candidates: tuple[tuple[str, LaurentPoly], ...]


def _require_names(values, field: str, origin: str) -> tuple[str, ...]:
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise InputError(f"{origin}: {field} must be a list of strings")
    for name in values:
        if not _NAME_RE.match(name):
            raise InputError(f"{origin}: invalid name {name!r} in {field}")
    return tuple(values)


def parse_system_data(data, origin: str = "<memory>") -> LoadedSystem:
    if not isinstance(data, dict):
        raise InputError(f"{origin}: the system file must be a JSON object")
    for key in ("variables", "derivation"):
        if key not in data:
            raise InputError(f"{origin}: missing required field {key!r}")
    variables = _require_names(data["variables"], "variables", origin)
    parameters = _require_names(data.get("parameters", []), "parameters", origin)
    if not variables:
        raise InputError(f"{origin}: at least one variable is required")
    names = variables + parameters
    if len(set(names)) != len(names):
        raise InputError(f"{origin}: variable and parameter names must be distinct")
    exprs = data["derivation"]
    if not isinstance(exprs, list) or not all(isinstance(e, str) for e in exprs):
        raise InputError(f"{origin}: derivation must be a list of expression strings")
    if len(exprs) != len(variables):
        raise InputError(
            f"{origin}: derivation has {len(exprs)} entries for {len(variables)} variables"
        )
    coefficients = []
    for i, text in enumerate(exprs):
        try:
            poly = parse_expression(text, variables, parameters)
        except ParseError as exc:
            raise InputError(f"{origin}: derivation[{i}]: {exc}") from exc
        if not poly.is_polynomial():
            raise InputError(f"{origin}: derivation[{i}]: negative exponents are not allowed")
        coefficients.append(poly)
    try:
        derivation = Derivation(tuple(coefficients))
    except ValueError as exc:
        raise InputError(f"{origin}: {exc}") from exc
    candidates = []
    raw_candidates = data.get("darboux_candidates")
    if raw_candidates is not None:
        if not isinstance(raw_candidates, list) or not all(
            isinstance(e, str) for e in raw_candidates
        ):
            raise InputError(f"{origin}: darboux_candidates must be a list of strings")
        for i, text in enumerate(raw_candidates):
            try:
                candidates.append((text, parse_expression(text, variables, parameters)))
            except ParseError as exc:
                raise InputError(f"{origin}: darboux_candidates[{i}]: {exc}") from exc
    return LoadedSystem(variables, parameters, derivation, tuple(candidates))


def load_system(path) -> LoadedSystem:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return parse_system_data(data, origin=str(path))
