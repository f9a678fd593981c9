"""JSON encoding of algebras, forms, invariants and descriptors.

Rationals travel as strings "p/q" (or "p").
"""

from __future__ import annotations

import dataclasses
import enum
import json
import re
from fractions import Fraction

from .algebra import NAMES, Algebra, Covector, LinMap
from .arith import NormClass, SquareClass, fmt_rat
from .cubics import BinaryCubic, BinaryQuadratic, SplittingDescriptor
from .invariants import InvariantBundle, ModuliPoint, TwistedScalar

SCHEMA_VERSION = 1

_RAT = re.compile(r"[+-]?\d+(/\d+)?")


class InputError(ValueError):
    """Malformed request payload."""


def parse_rat(value, where: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RAT.fullmatch(value.strip()):
        raise InputError(f"{where}: {value!r} is not a rational of the form p or p/q")
    num, _, den = value.strip().partition("/")
    if den and int(den) == 0:
        raise InputError(f"{where}: zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den else 1)


def _require(obj: dict, keys, where: str) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise InputError(f"{where}: missing field(s) {', '.join(missing)}")


def parse_algebra(obj, where: str = "algebra") -> Algebra:
    _require(obj, NAMES, where)
    return Algebra(*(parse_rat(obj[k], f"{where}.{k}") for k in NAMES))


def parse_fields(obj, keys, where: str) -> list[Fraction]:
    _require(obj, keys, where)
    return [parse_rat(obj[k], f"{where}.{k}") for k in keys]


def loads(text: str, where: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def to_json(obj):
    """Plain JSON-compatible structure for any library value."""
    if isinstance(obj, Fraction):
        return fmt_rat(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, SquareClass):
        return obj.rep
    if isinstance(obj, NormClass):
        return {"delta": fmt_rat(obj.delta), "rep": fmt_rat(obj.rep)}
    if isinstance(obj, Algebra):
        return {k: fmt_rat(v) for k, v in zip(NAMES, obj.constants)}
    if isinstance(obj, BinaryCubic):
        return {"coeffs": [fmt_rat(c) for c in obj.coeffs], "weight": obj.weight}
    if isinstance(obj, BinaryQuadratic):
        return {"qa": fmt_rat(obj.qa), "qb": fmt_rat(obj.qb), "qc": fmt_rat(obj.qc)}
    if isinstance(obj, LinMap):
        return [[fmt_rat(x) for x in row] for row in ((obj.m11, obj.m12), (obj.m21, obj.m22))]
    if isinstance(obj, Covector):
        return {"t1": fmt_rat(obj.t1), "t2": fmt_rat(obj.t2)}
    if isinstance(obj, TwistedScalar):
        return {"value": fmt_rat(obj.value), "weight": obj.weight}
    if isinstance(obj, ModuliPoint):
        return {"p3": fmt_rat(obj.p3), "p2": fmt_rat(obj.p2)}
    if isinstance(obj, SplittingDescriptor):
        return {
            "degree": obj.degree,
            "disc_class": obj.disc_class.rep,
            "roots": [[fmt_rat(x), fmt_rat(y)] for x, y in obj.roots],
            "defining_cubic": to_json(obj.defining_cubic),
            "repeated": obj.repeated,
        }
    if isinstance(obj, InvariantBundle):
        return {f.name: to_json(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if dataclasses.is_dataclass(obj):
        out = {}
        tag = getattr(type(obj), "tag", None)
        if tag is not None:
            out["stratum"] = tag
        for f in dataclasses.fields(obj):
            out[f.name] = to_json(getattr(obj, f.name))
        if hasattr(obj, "heuristic"):
            out["heuristic"] = obj.heuristic
        return out
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2, ensure_ascii=False)
