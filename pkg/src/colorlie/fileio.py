"""The algebra file format: one self-contained JSON document per algebra.

Shape:

    {"group": {"orders": [2, 2]},
     "bicharacter": {"exponents": [[0, 1], [1, 0]]},
     "basis": [{"name": "x", "degree": [1, 0]}, ...],
     "brackets": [{"left": "x", "right": "y", "result": {"z": "1"}}, ...]}

Scalars use the text format of the scalars module, read against the
group's exponent. Brackets use names, not indices, and only pairs with
i < j or i = j need be listed; the rest is filled in by eps-antisymmetry,
and explicitly listed redundant pairs are cross-checked. Unknown fields
are rejected everywhere. Serialization is canonical (sorted keys, fixed
indentation), so serialize(parse(f)) is byte-identical for canonical f.
"""

from __future__ import annotations

import json

from .algebra import ColorAlgebra, structure_constants_from_table
from .errors import ArityMismatch, ParseError, ValidationError
from .grading import Bicharacter, GradingGroup
from .scalars import format_scalar, parse_scalar

_TOP_KEYS = {"group", "bicharacter", "basis", "brackets"}


def _expect_keys(obj, keys, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be an object")
    extra = set(obj) - keys
    if extra:
        raise ParseError(f"unknown field(s) {sorted(extra)} in {where}")
    missing = keys - set(obj)
    if missing:
        raise ParseError(f"missing field(s) {sorted(missing)} in {where}")


def algebra_from_dict(doc: dict) -> ColorAlgebra:
    _expect_keys(doc, _TOP_KEYS, "algebra document")
    _expect_keys(doc["group"], {"orders"}, "group")
    orders = doc["group"]["orders"]
    if not isinstance(orders, list) or not all(isinstance(n, int) for n in orders):
        raise ParseError("group.orders must be a list of integers")
    try:
        group = GradingGroup(orders)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

    _expect_keys(doc["bicharacter"], {"exponents"}, "bicharacter")
    exponents = doc["bicharacter"]["exponents"]
    if not isinstance(exponents, list) or not all(
        isinstance(row, list) and all(isinstance(k, int) for k in row)
        for row in exponents
    ):
        raise ParseError("bicharacter.exponents must be a matrix of integers")
    try:
        bichar = Bicharacter(group, exponents)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    bc_report = bichar.validate()
    if not bc_report.ok:
        raise ValidationError(
            "invalid bicharacter: " + "; ".join(bc_report.messages()),
            location="bicharacter",
        )

    basis = doc["basis"]
    if not isinstance(basis, list):
        raise ParseError("basis must be a list")
    names, degrees = [], []
    for idx, entry in enumerate(basis):
        _expect_keys(entry, {"name", "degree"}, f"basis[{idx}]")
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise ParseError(f"basis[{idx}].name must be a nonempty string")
        if name in names:
            raise ParseError(f"duplicate basis name {name!r}")
        deg = entry["degree"]
        if not isinstance(deg, list) or not all(isinstance(r, int) for r in deg):
            raise ParseError(f"basis[{idx}].degree must be a list of integers")
        try:
            degrees.append(group.element(deg))
        except ArityMismatch as exc:
            raise ParseError(f"basis[{idx}].degree: {exc}") from exc
        names.append(name)
    index = {name: i for i, name in enumerate(names)}
    d = len(names)

    brackets = doc["brackets"]
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list")
    table = {}
    for idx, entry in enumerate(brackets):
        _expect_keys(entry, {"left", "right", "result"}, f"brackets[{idx}]")
        for side in ("left", "right"):
            if entry[side] not in index:
                raise ParseError(
                    f"brackets[{idx}].{side}: unknown basis name {entry[side]!r}"
                )
        i, j = index[entry["left"]], index[entry["right"]]
        result = entry["result"]
        if not isinstance(result, dict):
            raise ParseError(f"brackets[{idx}].result must be an object")
        parsed = {}
        for name, text in result.items():
            if name not in index:
                raise ParseError(
                    f"brackets[{idx}].result: unknown basis name {name!r}"
                )
            if not isinstance(text, str):
                raise ParseError(f"brackets[{idx}].result[{name!r}] must be a string")
            try:
                parsed[index[name]] = parse_scalar(text, group.exponent)
            except ParseError as exc:
                raise ParseError(f"brackets[{idx}].result[{name!r}]: {exc}") from exc
        if (i, j) in table:
            raise ValidationError(
                f"bracket [{entry['left']}, {entry['right']}] listed twice",
                location=f"brackets[{idx}]",
            )
        table[(i, j)] = parsed

    constants = structure_constants_from_table(group, bichar, degrees, table, d)

    # grading-support invariant, with the offending indices in the message
    for i in range(d):
        for j in range(d):
            target = degrees[i] + degrees[j]
            for k in range(d):
                if constants[i][j][k] and degrees[k] != target:
                    raise ValidationError(
                        f"bracket [{names[i]}, {names[j]}] has a component on "
                        f"{names[k]} outside the degree-sum component",
                        location=(i, j, k),
                    )
    return ColorAlgebra(group, bichar, degrees, constants, names=tuple(names))


def parse_algebra(text: str) -> ColorAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return algebra_from_dict(doc)


def algebra_to_dict(a: ColorAlgebra) -> dict:
    brackets = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            row = a.constants[i][j]
            result = {
                a.names[k]: format_scalar(c) for k, c in enumerate(row) if c
            }
            if result:
                brackets.append(
                    {"left": a.names[i], "right": a.names[j], "result": result}
                )
    return {
        "group": {"orders": list(a.group.orders)},
        "bicharacter": {"exponents": [list(r) for r in a.bichar.exponents]},
        "basis": [
            {"name": a.names[i], "degree": list(a.degrees[i].residues)}
            for i in range(a.dim)
        ],
        "brackets": brackets,
    }


def serialize_algebra(a: ColorAlgebra) -> str:
    return json.dumps(algebra_to_dict(a), indent=2, sort_keys=True) + "\n"
