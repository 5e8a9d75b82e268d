"""JSON parameter files.

Schema (all scalars exact, floats rejected):

    {
      "kind": "degenerate" | "nondegenerate",
      "field": {"type": "rational"}
             | {"type": "prime", "p": 5}
             | {"type": "binary", "k": 4},
      "u": [scalar, ...],
      "rho": scalar, "q": scalar,            # nondegenerate only
      "omega": {"from_u": true, "order": 20}
             | {"prefix": [scalar, ...], "closure": [scalar, ...]},
      "n": int, "d": int                     # optional, for count queries
    }

Scalar encoding by field type: rationals as "numerator/denominator" strings
(plain integer strings allowed), prime-field elements as integers, binary
field elements as 0/1 coefficient lists (constants 0 and 1 also allowed).
Parse failures carry the JSON path of the offending entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .fields import QQ, BinaryField, Field, FieldCoercionError, field_from_descriptor
from .omega import (OmegaSeq, ParamSet, ParameterError, degenerate_params,
                    nondegenerate_params)


class ParamFileError(ValueError):
    """Malformed parameter file; the message carries the JSON path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class ParamFile:
    """Parsed parameter document plus the optional count-query fields."""

    params: ParamSet
    n: Optional[int] = None
    d: Optional[int] = None


def parse_scalar(field: Field, value, path: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise ParamFileError(path, f"floating point or boolean {value!r} rejected; "
                                   "use exact encodings")
    try:
        if isinstance(value, str):
            if field == QQ:
                return field(Fraction(value))
            return field(int(value))
        if isinstance(value, int):
            if isinstance(field, BinaryField) and value not in (0, 1):
                raise ParamFileError(
                    path, f"binary field elements are coefficient lists; "
                          f"got bare integer {value}")
            return field(value)
        if isinstance(value, list):
            return field(value)
    except (ValueError, ZeroDivisionError) as ex:
        if isinstance(ex, ParamFileError):
            raise
        raise ParamFileError(path, str(ex)) from ex
    raise ParamFileError(path, f"cannot parse scalar {value!r}")


def format_scalar(field: Field, element) -> object:
    if field == QQ:
        return str(element.raw)
    if isinstance(field, BinaryField):
        raw = element.raw
        return [raw >> i & 1 for i in range(field.k)]
    return element.raw


def parse_paramfile(doc, default_order=20) -> ParamFile:
    if not isinstance(doc, dict):
        raise ParamFileError("$", "top level must be an object")
    kind = doc.get("kind")
    if kind not in ("degenerate", "nondegenerate"):
        raise ParamFileError("kind", f"expected degenerate|nondegenerate, got {kind!r}")
    fdesc = doc.get("field")
    if not isinstance(fdesc, dict):
        raise ParamFileError("field", "missing field descriptor")
    try:
        field = field_from_descriptor(fdesc)
    except (ValueError, KeyError) as ex:
        raise ParamFileError("field", str(ex)) from ex
    uraw = doc.get("u")
    if not isinstance(uraw, list) or not uraw:
        raise ParamFileError("u", "need a nonempty root list")
    u = [parse_scalar(field, v, f"u[{i}]") for i, v in enumerate(uraw)]

    rho = q = None
    if kind == "nondegenerate":
        if "rho" not in doc or "q" not in doc:
            raise ParamFileError("rho", "non-degenerate parameters need rho and q")
        rho = parse_scalar(field, doc["rho"], "rho")
        q = parse_scalar(field, doc["q"], "q")
    elif "rho" in doc or "q" in doc:
        raise ParamFileError("rho", "degenerate parameters carry no rho or q")

    omega = doc.get("omega", {"from_u": True})
    if not isinstance(omega, dict):
        raise ParamFileError("omega", "omega must be an object")
    try:
        if omega.get("from_u"):
            order = omega.get("order", default_order)
            if not isinstance(order, int) or order < len(u):
                raise ParamFileError("omega.order",
                                     f"order must be an int >= r, got {order!r}")
            if kind == "degenerate":
                params = degenerate_params(field, u, order=order)
            else:
                params = nondegenerate_params(field, u, rho, q, order=order)
        elif "prefix" in omega:
            prefix = [parse_scalar(field, v, f"omega.prefix[{i}]")
                      for i, v in enumerate(omega["prefix"])]
            closure = None
            if "closure" in omega:
                closure = tuple(
                    parse_scalar(field, v, f"omega.closure[{i}]")
                    for i, v in enumerate(omega["closure"]))
            seq = OmegaSeq(field, tuple(prefix), closure)
            if kind == "degenerate":
                params = ParamSet(kind, field, tuple(u), seq)
            else:
                params = ParamSet(kind, field, tuple(u), seq, rho=rho, q=q)
        else:
            raise ParamFileError("omega", "need from_u: true or a prefix list")
    except (ParameterError, FieldCoercionError) as ex:
        raise ParamFileError("omega", str(ex)) from ex

    n = doc.get("n")
    d = doc.get("d")
    for name, val in (("n", n), ("d", d)):
        if val is not None and not isinstance(val, int):
            raise ParamFileError(name, f"expected int, got {val!r}")
    return ParamFile(params, n, d)


def load_paramfile(path, default_order=20) -> ParamFile:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as ex:
            raise ParamFileError("$", f"invalid JSON: {ex}") from ex
    return parse_paramfile(doc, default_order=default_order)


def dump_params(params: ParamSet, n=None, d=None) -> dict:
    """Serialize a ParamSet back to the document schema."""
    field = params.field
    if field == QQ:
        fdesc = {"type": "rational"}
    elif isinstance(field, BinaryField):
        fdesc = {"type": "binary", "k": field.k}
    else:
        fdesc = {"type": "prime", "p": field.p}
    doc = {
        "kind": params.kind,
        "field": fdesc,
        "u": [format_scalar(field, x) for x in params.u],
        "omega": {
            "prefix": [format_scalar(field, c) for c in params.omega.prefix],
        },
    }
    if params.omega.closure is not None:
        doc["omega"]["closure"] = [format_scalar(field, c)
                                   for c in params.omega.closure]
    if params.kind == "nondegenerate":
        doc["rho"] = format_scalar(field, params.rho)
        doc["q"] = format_scalar(field, params.q)
    if n is not None:
        doc["n"] = n
    if d is not None:
        doc["d"] = d
    return doc
