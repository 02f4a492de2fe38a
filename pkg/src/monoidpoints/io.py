"""JSON reading and writing for monoids, transformation generators and M-sets."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .monoid import FiniteMonoid, from_transformations, validate_monoid
from .msets import MSet, validate_action


def dumps(obj) -> str:
    # fixed layout so identical input gives identical bytes
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def monoid_to_json(m: FiniteMonoid) -> dict:
    out = {"size": m.size, "identity": m.identity, "table": [list(r) for r in m.table]}
    if m.names is not None:
        out["names"] = list(m.names)
    return out


def _int_matrix(raw, what: str) -> list[list[int]]:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ParseError(f"{what} must be a list of lists")
    for r in raw:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"{what} entries must be integers, got {v!r}")
    return raw


def monoid_from_json(obj, validate: bool = True) -> FiniteMonoid:
    """Accepts the table format or the transformation-generator format."""
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "degree" in obj:
        degree = obj["degree"]
        gens = _int_matrix(obj.get("generators", []), "generators")
        if not isinstance(degree, int) or degree < 0:
            raise ParseError("degree must be a non-negative integer")
        if any(len(g) != degree or any(not 0 <= v < degree for v in g) for g in gens):
            raise ParseError(f"every generator needs {degree} images in range(0, {degree})")
        return from_transformations(degree, gens)
    if "table" not in obj:
        raise ParseError("monoid JSON needs a 'table' (or 'degree' and 'generators')")
    table = _int_matrix(obj["table"], "table")
    size = obj.get("size", len(table))
    if size != len(table):
        raise ParseError(f"size {size} does not match the {len(table)} table rows")
    identity = obj.get("identity", 0)
    names = obj.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != size):
        raise ParseError("names must be a list with one entry per element")
    if validate:
        # raises the relevant ValidationError
        return validate_monoid(table, identity, names)
    return FiniteMonoid(table, identity, names)


def mset_to_json(a: MSet) -> dict:
    return {"monoid": monoid_to_json(a.monoid), "side": a.side, "size": a.size, "action": [list(r) for r in a.table]}


def mset_from_json(obj, base: Path | None = None) -> MSet:
    if not isinstance(obj, dict) or "action" not in obj or "monoid" not in obj:
        raise ParseError("M-set JSON needs 'monoid' and 'action'")
    ref = obj["monoid"]
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        m = load_monoid(path)
    else:
        m = monoid_from_json(ref)
    side = obj.get("side", "left")
    if side not in ("left", "right"):
        raise ParseError(f"side must be 'left' or 'right', got {side!r}")
    action = _int_matrix(obj["action"], "action")
    # the left layout is [m][a]; right is [a][m]
    size = obj.get("size", len(action[0]) if side == "left" and action else len(action))
    a = validate_action(m, action, side)
    if a.size != size:
        raise ParseError(f"size {size} does not match the action table")
    return a


def _read(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_monoid(path, validate: bool = True) -> FiniteMonoid:
    return monoid_from_json(_read(path), validate)


def load_mset(path) -> MSet:
    return mset_from_json(_read(path), Path(path).parent)


def save_json(obj, path) -> None:
    Path(path).write_text(dumps(obj))
