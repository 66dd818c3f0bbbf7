"""Command-line front end: JSON in, JSON out.

Exit codes: 0 success, 1 acceptance failures in ``verify``, 2 malformed input
(JSON or schema), 3 mathematical precondition violated, 4 internal invariant
breached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any

import jsonschema

from . import serialize as ser
from .drinfeld import APoly, DrinfeldModule, perfectness, tate_compat
from .errors import InvariantError, OrePairError
from .kernels import DEFAULT_MAX_EXTENSION, KernelPairing, kernel_basis, pairing_table
from .newton import (
    PolygonPointCloud,
    annihilator_by_product,
    build_annihilator,
    build_polygon,
    ell_r,
    origin_atom,
    total_measure,
)
from .twisted import TwistedPoly

EXIT_OK, EXIT_FAILED, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3, 4

_TAG = {"schema": {"const": ser.SCHEMA_TAG}}


def _obj(required: list[str], **props) -> dict:
    return {"type": "object", "properties": {**_TAG, **props}, "required": required}


SCHEMAS: dict[str, dict] = {
    "compose": _obj(["f", "g"], f=ser.POLY_SCHEMA, g=ser.POLY_SCHEMA),
    "adjoint": _obj(["f"], f=ser.POLY_SCHEMA),
    "kernel": _obj(["f"], f=ser.POLY_SCHEMA, adjoint={"type": "boolean"}),
    "pair": _obj(
        ["f"],
        f=ser.POLY_SCHEMA,
        ambient=ser.FINITE_FIELD_SCHEMA,
        alpha=ser.ELEMENT_SCHEMA,
        beta=ser.ELEMENT_SCHEMA,
    ),
    "newton": _obj(
        ["p", "cloud"],
        p={"type": "integer", "minimum": 2},
        cloud=ser.CLOUD_SCHEMA,
        s_cut={"type": ["integer", "string"]},
    ),
    "annihilator": _obj(
        ["q", "field", "lambdas"],
        q={"type": "integer", "minimum": 2},
        field=ser.FIELD_SCHEMA,
        lambdas={"type": "array", "items": ser.PUISEUX_SCHEMA},
    ),
    "drinfeld-pair": _obj(
        ["field", "q", "phi_t", "a"],
        field=ser.FINITE_FIELD_SCHEMA,
        q={"type": "integer", "minimum": 2},
        phi_t={"type": "array", "minItems": 2, "items": ser.ELEMENT_SCHEMA},
        a=ser.A_POLY_SCHEMA,
        level={"type": "integer", "minimum": 1},
    ),
}


# ------------------------------------------------------------ commands

def _poly(doc) -> TwistedPoly:
    return ser.poly_from_json(doc)


def cmd_compose(doc: dict, args) -> dict:
    f, g = _poly(doc["f"]), _poly(doc["g"])
    return {"result": ser.poly_to_json(f * g)}


def cmd_adjoint(doc: dict, args) -> dict:
    return {"result": ser.poly_to_json(_poly(doc["f"]).adjoint())}


def cmd_kernel(doc: dict, args) -> dict:
    f = _poly(doc["f"])
    if doc.get("adjoint"):
        f = f.adjoint()
    kb = kernel_basis(f, max_extension=args.max_extension)
    return {
        "ambient": ser.field_to_json(kb.ambient),
        "dim": kb.dim,
        "basis": [ser.ff_to_json(z) for z in kb.basis],
    }


def _fq_json(x, e: int):
    return ser.fq_to_json(x, e)


def cmd_pair(doc: dict, args) -> dict:
    f = _poly(doc["f"])
    if "alpha" in doc or "beta" in doc:
        if not ("alpha" in doc and "beta" in doc and "ambient" in doc):
            raise jsonschema.ValidationError("alpha, beta and ambient must be given together")
        ambient = ser.field_from_json(doc["ambient"])
        alpha = ser.ff_from_json(ambient, doc["alpha"])
        beta = ser.ff_from_json(ambient, doc["beta"])
        value = KernelPairing(f, ambient)(alpha, beta)
        return {"value": _fq_json(value, f.e)}
    table = pairing_table(f, max_extension=args.max_extension)
    out = {
        "ambient": ser.field_to_json(table.rows.ambient),
        "rows": [ser.ff_to_json(z) for z in table.rows.basis],
        "cols": [ser.ff_to_json(z) for z in table.cols.basis],
        "gram": [[_fq_json(x, f.e) for x in row] for row in table.gram],
        "perfect": table.is_perfect(),
    }
    if not out["perfect"]:
        raise InvariantError("Gram matrix is singular")
    if args.format == "text":
        out["_text"] = table.text()
    return out


def polygon_svg(poly, cloud: PolygonPointCloud, size: int = 400) -> str:
    pts = list(cloud.points)
    xs = [float(e) for e, _ in pts]
    ys = [float(v) for _, v in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 20

    def sx(x):
        return pad + (x - x0) / ((x1 - x0) or 1) * (size - 2 * pad)

    def sy(y):
        return size - pad - (y - y0) / ((y1 - y0) or 1) * (size - 2 * pad)

    hull = " ".join(f"{sx(float(e)):.2f},{sy(float(v)):.2f}" for e, v in poly.vertices)
    dots = "".join(
        f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3" fill="black"/>' for x, y in zip(xs, ys)
    )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
        f'<polyline points="{hull}" fill="none" stroke="steelblue" stroke-width="2"/>'
        f"{dots}</svg>\n"
    )


def polygon_csv(poly) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["e", "v"])
    for e, v in poly.vertices:
        writer.writerow([str(e), str(v)])
    return buf.getvalue()


def cmd_newton(doc: dict, args) -> dict:
    p = int(doc["p"])
    cloud = PolygonPointCloud(tuple(ser.cloud_points_from_json(doc["cloud"], p)), p)
    poly = build_polygon(cloud)
    frac = ser.fraction_to_json
    out: dict[str, Any] = {
        "vertices": ser.cloud_to_json(poly.vertices, p),
        "segments": [
            {"slope": frac(s.slope), "length": frac(s.length), "zero_valuation": frac(-s.slope)}
            for s in poly.segments
        ],
        "origin_atom": frac(origin_atom(poly)),
        "total_measure": frac(total_measure(poly)),
    }
    if "s_cut" in doc:
        out["ell_r"] = frac(ell_r(poly, Fraction(doc["s_cut"])))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(polygon_svg(poly, cloud))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(polygon_csv(poly))
    return out


def cmd_annihilator(doc: dict, args) -> dict:
    field = ser.field_from_json(doc["field"])
    if not hasattr(field, "base"):
        raise jsonschema.ValidationError("annihilator needs a Puiseux field")
    q = int(doc["q"])
    lambdas = [ser.puiseux_from_json(field, x) for x in doc["lambdas"]]
    res = build_annihilator(lambdas, q, field)
    frac = ser.fraction_to_json
    return {
        "h": ser.poly_to_json(res.h),
        "bounds": [frac(b) for b in res.bounds],
        "difference_norms": [frac(d) for d in res.diff_norms],
        "bounds_monotone": res.bounds_monotone(),
        "growth_partial_sums": [frac(g) for g in res.growth],
        "matches_product": res.h == annihilator_by_product(lambdas, q, field),
    }


def cmd_drinfeld_pair(doc: dict, args) -> dict:
    L = ser.field_from_json(doc["field"])
    q = int(doc["q"])
    phi = DrinfeldModule.from_coeffs(L, q, [ser.ff_from_json(L, c) for c in doc["phi_t"]])
    fq = phi.fq
    a = APoly(fq, [ser.ff_from_json(fq, c) for c in doc["a"]])
    res = perfectness(phi, a, max_extension=args.max_extension)
    e = phi.phi_t.e
    level = int(doc.get("level", 1))
    compat = tate_compat(phi, a, level, max_extension=args.max_extension)
    return {
        "rank": phi.rank,
        "characteristic": phi.characteristic().to_json(),
        "a": a.to_json(),
        "ambient": ser.field_to_json(res.tors.basis.ambient),
        "torsion_basis": [ser.ff_to_json(z) for z in res.tors.basis],
        "adjoint_torsion_basis": [ser.ff_to_json(z) for z in res.dual.basis],
        "dual_basis": "monomial: entry k is the value at t^k, 0 <= k < deg a",
        "gram": [[[_fq_json(x, e) for x in cell] for cell in row] for row in res.gram],
        "perfectness": res.report.to_dict(),
        "compatibility": compat.to_dict(),
    }


def cmd_verify(doc, args) -> dict:
    from .verify import run_suite

    only = [int(k) for k in args.only.split(",")] if args.only else None
    results = run_suite(args.seed, jobs=args.jobs, only=only)
    out = {"seed": args.seed, "passed": all(r["passed"] for r in results), "results": results}
    if args.format == "text":
        from .verify import format_table

        out["_text"] = format_table(results)
    return out


COMMANDS = {
    "compose": cmd_compose,
    "adjoint": cmd_adjoint,
    "kernel": cmd_kernel,
    "pair": cmd_pair,
    "newton": cmd_newton,
    "annihilator": cmd_annihilator,
    "drinfeld-pair": cmd_drinfeld_pair,
    "verify": cmd_verify,
}


# ------------------------------------------------------------ plumbing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orepair", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", "-i", default="-", help="input JSON file ('-' for stdin)")
        sp.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
        sp.add_argument("--max-extension", type=int, default=DEFAULT_MAX_EXTENSION,
                        help="largest field degree over F_p the kernel search may build")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        if name == "newton":
            sp.add_argument("--svg", help="also write the hull as SVG")
            sp.add_argument("--csv", help="also write the hull vertices as CSV")
        if name == "verify":
            sp.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def _read_input(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = None
        if args.command != "verify":
            doc = _read_input(args.input)
            jsonschema.validate(doc, SCHEMAS[args.command])
        out = COMMANDS[args.command](doc, args)
    except InvariantError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OrePairError as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (json.JSONDecodeError, jsonschema.ValidationError, ValueError, OSError) as exc:
        print(f"error: invalid input: {getattr(exc, 'message', exc)}", file=sys.stderr)
        return EXIT_SCHEMA
    text = out.pop("_text", None)
    if args.format == "text" and text is not None:
        _write_output(args.output, text + "\n")
    else:
        payload = {"schema": ser.SCHEMA_TAG, "command": args.command, **out}
        _write_output(args.output, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    if args.command == "verify" and not out["passed"]:
        return EXIT_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
