"""JSON encodings of monoids, groups, categories and congruences."""

from __future__ import annotations

import json
from pathlib import Path

from .category import FiniteCategory, category_from_json, category_to_json
from .core import Congruence, FiniteMonoid, monoid_from_table
from .errors import IndexOutOfRange, ParseError
from .groups import FiniteGroup, group_from_table


def monoid_to_json(M: FiniteMonoid) -> dict:
    out = {"size": M.size, "identity": M.identity, "table": [list(r) for r in M.table]}
    if M.labels is not None:
        out["labels"] = list(M.labels)
    return out


def _table_fields(data):
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object")
    try:
        table = [[int(v) for v in row] for row in data["table"]]
        identity = data.get("identity")
        identity = None if identity is None else int(identity)
        labels = data.get("labels")
        size = int(data.get("size", len(table)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed monoid JSON: {exc}") from None
    if size != len(table):
        raise IndexOutOfRange(f"size {size} differs from table height {len(table)}")
    return table, identity, labels


def monoid_from_json(data: dict) -> FiniteMonoid:
    table, identity, labels = _table_fields(data)
    return monoid_from_table(table, identity, labels)


def group_from_json(data: dict) -> FiniteGroup:
    """Monoid JSON whose table must be a group; inverses are synthesized."""
    table, identity, labels = _table_fields(data)
    return group_from_table(table, identity, labels)


def congruence_to_json(c: Congruence) -> dict:
    return {"classes": list(c.class_of)}


def congruence_from_json(data) -> Congruence:
    """Accepts ``{"classes": [...]}`` or a bare list of class labels."""
    if isinstance(data, dict):
        data = data.get("classes")
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ParseError("congruence must be a list of integer class labels")
    return Congruence.from_labels(data)


def is_category_json(data) -> bool:
    return isinstance(data, dict) and "arrows" in data and "compose" in data


def to_json(obj) -> dict:
    if isinstance(obj, FiniteCategory):
        return category_to_json(obj)
    if isinstance(obj, FiniteMonoid):
        return monoid_to_json(obj)
    if isinstance(obj, Congruence):
        return congruence_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json(data):
    """Category or monoid, decided by the keys present."""
    if is_category_json(data):
        return category_from_json(data)
    return monoid_from_json(data)


def read_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj) -> str:
    return json.dumps(obj if isinstance(obj, (dict, list)) else to_json(obj))
