"""JSON encoding of fields, elements, twisted polynomials and point clouds.

Conventions
-----------
* finite field: ``{"p": 2, "m": 2, "modulus": [1, 1, 1]}`` (constant term first)
* Puiseux field: ``{"type": "puiseux", "base": <finite field>}``
* finite-field element: coefficient list over F_p, constant term first
* Puiseux element: ``[{"num": 1, "pdenom": 1, "coeff": [...]}, ...]`` meaning
  sum coeff * t^(num / p^pdenom)
* twisted polynomial: ``{"q": 2, "field": {...}, "terms": [{"n": -1, "coeff": ...}]}``
* point cloud: ``[{"e_num": 1, "e_pdenom": 0, "v_num": 0, "v_den": 1}, ...]``

Every document produced by the CLI carries ``"schema": "ore-pair/1"``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import PreconditionError
from .fields import FFElem, FiniteField, restrict
from .puiseux import PuiseuxElem, PuiseuxField, make_exponent, split_exponent
from .twisted import TwistedPoly

SCHEMA_TAG = "ore-pair/1"

# ---------------------------------------------------------------- schemas

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

FINITE_FIELD_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "m": {"type": "integer", "minimum": 1},
        "modulus": _INT_LIST,
        "type": {"const": "finite"},
    },
    "required": ["p"],
    "anyOf": [{"required": ["m"]}, {"required": ["modulus"]}],
}

FIELD_SCHEMA = {
    "oneOf": [
        FINITE_FIELD_SCHEMA,
        {
            "type": "object",
            "properties": {"type": {"const": "puiseux"}, "base": FINITE_FIELD_SCHEMA},
            "required": ["type", "base"],
        },
    ]
}

PUISEUX_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "num": {"type": "integer"},
            "pdenom": {"type": "integer", "minimum": 0},
            "coeff": {"oneOf": [{"type": "integer"}, _INT_LIST]},
        },
        "required": ["num", "pdenom", "coeff"],
    },
}

ELEMENT_SCHEMA = {"oneOf": [{"type": "integer"}, _INT_LIST, PUISEUX_SCHEMA]}

POLY_SCHEMA = {
    "type": "object",
    "properties": {
        "q": {"type": "integer", "minimum": 2},
        "field": FIELD_SCHEMA,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"n": {"type": "integer"}, "coeff": ELEMENT_SCHEMA},
                "required": ["n", "coeff"],
            },
        },
    },
    "required": ["q", "field", "terms"],
}

CLOUD_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "properties": {
            "e_num": {"type": "integer", "minimum": 0},
            "e_pdenom": {"type": "integer", "minimum": 0},
            "v_num": {"type": "integer"},
            "v_den": {"type": "integer", "minimum": 1},
        },
        "required": ["e_num", "e_pdenom", "v_num", "v_den"],
    },
}

A_POLY_SCHEMA = {"type": "array", "items": {"oneOf": [{"type": "integer"}, _INT_LIST]}}


# ---------------------------------------------------------------- fields

def field_to_json(field) -> dict:
    if isinstance(field, PuiseuxField):
        return {"type": "puiseux", "base": field_to_json(field.base)}
    return {"p": field.p, "m": field.m, "modulus": list(field.modulus)}


def field_from_json(doc: dict):
    if doc.get("type") == "puiseux":
        return PuiseuxField(field_from_json(doc["base"]))
    return FiniteField(int(doc["p"]), doc.get("m"), doc.get("modulus"))


# ---------------------------------------------------------------- elements

def ff_to_json(x: FFElem) -> list[int]:
    return x.to_list()


def ff_from_json(field: FiniteField, doc) -> FFElem:
    if isinstance(doc, int):
        return field(doc)
    if len(doc) > field.m:
        raise PreconditionError(f"element {doc} has more than {field.m} coefficients")
    return field(list(doc))


def puiseux_to_json(x: PuiseuxElem) -> list[dict]:
    out = []
    for e, c in x.terms.items():
        num, s = split_exponent(e, x.field.p)
        out.append({"num": num, "pdenom": s, "coeff": c.to_list()})
    return out


def puiseux_from_json(field: PuiseuxField, doc) -> PuiseuxElem:
    if isinstance(doc, int) or (isinstance(doc, list) and all(isinstance(c, int) for c in doc)):
        return field(ff_from_json(field.base, doc))
    terms: dict[Fraction, FFElem] = {}
    for item in doc:
        e = make_exponent(item["num"], item["pdenom"], field.p)
        c = ff_from_json(field.base, item["coeff"])
        terms[e] = terms[e] + c if e in terms else c
    return PuiseuxElem(field, terms)


def element_to_json(x):
    if isinstance(x, PuiseuxElem):
        return puiseux_to_json(x)
    return ff_to_json(x)


def element_from_json(field, doc):
    if isinstance(field, PuiseuxField):
        return puiseux_from_json(field, doc)
    return ff_from_json(field, doc)


def fq_to_json(x: FFElem, e: int | None = None):
    """A value known to lie in F_q (q = p^e): an int when e = 1, else coordinates in F_{p^e}."""
    field = x.field
    if e is None:
        if not x.in_subfield(1):
            raise PreconditionError("fq_to_json needs the degree of F_q for non-prime values")
        e = 1
    small = FiniteField(field.p, e)
    y = restrict(x, small)
    return int(y.vec[0]) if e == 1 else y.to_list()


def fq_from_json(ambient: FiniteField, e: int, doc) -> FFElem:
    small = FiniteField(ambient.p, e)
    return ff_from_json(small, doc).embed(ambient)


# ------------------------------------------------------------ polynomials

def poly_to_json(f: TwistedPoly) -> dict:
    return {
        "q": f.q,
        "field": field_to_json(f.field),
        "terms": [{"n": n, "coeff": element_to_json(c)} for n, c in f.items()],
    }


def poly_from_json(doc: dict) -> TwistedPoly:
    field = field_from_json(doc["field"])
    coeffs: dict[int, Any] = {}
    for term in doc["terms"]:
        n = int(term["n"])
        c = element_from_json(field, term["coeff"])
        coeffs[n] = coeffs[n] + c if n in coeffs else c
    return TwistedPoly(field, int(doc["q"]), coeffs)


# ------------------------------------------------------------------ clouds

def cloud_to_json(points, p: int) -> list[dict]:
    """``points``: iterable of (e, v) rationals with p-power exponent denominators."""
    out = []
    for e, v in points:
        num, s = split_exponent(Fraction(e), p)
        v = Fraction(v)
        out.append({"e_num": num, "e_pdenom": s, "v_num": v.numerator, "v_den": v.denominator})
    return out


def cloud_points_from_json(doc: list[dict], p: int) -> list[tuple[Fraction, Fraction]]:
    return [
        (make_exponent(item["e_num"], item["e_pdenom"], p), Fraction(item["v_num"], item["v_den"]))
        for item in doc
    ]


def fraction_to_json(x) -> Any:
    """Exact rationals as ``"a/b"`` strings (integers stay ints); infinity as ``"inf"``."""
    if x == float("inf"):
        return "inf"
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fraction_from_json(doc) -> Fraction | float:
    if doc == "inf":
        return float("inf")
    return Fraction(doc)
