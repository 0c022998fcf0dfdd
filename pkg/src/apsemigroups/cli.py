"""Command-line front end: parse a family, run analyses, emit reports.

Subcommands: analyze, ideal, groebner, hilbert, resolution, extend, verify.
Output is deterministic (no timings), text by default or canonical JSON with
--format json; integers beyond 2^53 are serialized as decimal strings so
non-arbitrary-precision consumers cannot lose digits.

Exit codes: 0 all checks passed, 1 some check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .closed_forms import (
    apery_extended,
    extended_betti,
    generating_set,
    gluing_data,
    hilbert_numerator,
    regularity,
    resolution,
)
from .errors import FamilyError, UnsupportedK
from .lattice import Vec2
from .polynomials import Polynomial, buchberger, family_ring, grevlex
from .semigroup import (
    SemigroupFamily,
    apery_bruteforce,
    apery_closed_form,
    build_family,
    cm_type,
    quasi_frobenius,
)
from .verify import EnumerationBox, Report, VerifyOptions, full_report

_BIG = 2**53


def _jint(v: int):
    return v if -_BIG < v < _BIG else str(v)


def _jvec(v: Vec2) -> list:
    return [_jint(v.x), _jint(v.y)]


def _jpoly(p: Polynomial) -> dict:
    order = grevlex(p.ring.nvars)
    terms = sorted(p.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    out_terms = []
    for mono, coeff in terms:
        c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        enc = _jint(int(c)) if c.denominator == 1 else str(c)
        out_terms.append([enc, [_jint(e) for e in mono]])
    return {"text": str(p), "terms": out_terms}


def _family_section(f: SemigroupFamily) -> dict:
    out = {
        "a": _jvec(f.a),
        "d": _jvec(f.d),
        "k": f.k,
        "generators": [_jvec(g) for g in f.generators],
    }
    if f.is_extended:
        out["b"] = _jvec(f.extension)
    return out


def _apery_section(f: SemigroupFamily, cap: Optional[int]) -> dict:
    closed = apery_extended(f) if f.is_extended else apery_closed_form(f)
    brute = apery_bruteforce(f, cap=cap)
    out = {
        "base": [_jvec(v) for v in closed.base],
        "closed_form": [_jvec(v) for v in closed.sorted_elements()],
        "bruteforce": [_jvec(v) for v in brute.sorted_elements()],
    }
    if closed.elements != brute.elements:
        out["reconciliation"] = (
            "closed form and brute-force enumeration disagree; the brute-force "
            "set follows the definition"
        )
    return out


def _ideal_section(f: SemigroupFamily, with_groebner: bool) -> dict:
    ring = family_ring(f)
    gens = list(generating_set(f.k, ring).G)
    if f.is_extended:
        gens.append(gluing_data(f).extra_generator)
    out = {"generators": [_jpoly(g) for g in gens], "mu": len(gens)}
    if with_groebner:
        gb = buchberger(gens, grevlex(ring.nvars))
        out["groebner"] = [_jpoly(g) for g in gb.elements]
    return out


def _hilbert_section(f: SemigroupFamily) -> dict:
    form = hilbert_numerator(f)
    return {
        "numerator_terms": [[_jint(c), _jvec(deg)] for c, deg in form.numerator],
        "denominator": [_jvec(g) for g in form.denominator_factors],
    }


def _resolution_section(f: SemigroupFamily) -> dict:
    res = resolution(f)
    return {
        "betti": list(res.betti),
        "shifts": [
            [[mult, _jvec(deg)] for mult, deg in layer] for layer in res.shifts
        ],
    }


def _extension_section(f: SemigroupFamily, cap: Optional[int]) -> dict:
    data = gluing_data(f)
    closed = apery_extended(f)
    brute = apery_bruteforce(f, cap=cap)
    out = {
        "b": _jvec(f.extension),
        "mu": data.mu,
        "lambda": [_jint(c) for c in data.lam],
        "glue_degree": _jvec(data.glue_degree),
        "extra_generator": _jpoly(data.extra_generator),
        "apery": [_jvec(v) for v in closed.sorted_elements()],
        "apery_bruteforce": [_jvec(v) for v in brute.sorted_elements()],
        "qf": [_jvec(v) for v in sorted(quasi_frobenius(f))],
    }
    if closed.elements != brute.elements:
        out["reconciliation"] = (
            "closed form and brute-force enumeration disagree; the brute-force "
            "set follows the definition"
        )
    try:
        out["betti"] = list(extended_betti(f.k))
    except UnsupportedK:
        pass
    return out


def _checks_section(report: Report) -> list:
    return [
        {"name": c.name, "passed": c.passed, "witness": c.witness}
        for c in report.checks
    ]


def _render_text(doc: dict) -> str:
    lines = []
    fam = doc["family"]
    gens = ", ".join(f"({g[0]},{g[1]})" for g in fam["generators"])
    lines.append(f"family: a=({fam['a'][0]},{fam['a'][1]}) d=({fam['d'][0]},{fam['d'][1]}) k={fam['k']}")
    lines.append(f"generators: {gens}")
    if "b" in fam:
        lines.append(f"extension b: ({fam['b'][0]},{fam['b'][1]})")
    if "apery" in doc:
        ap = doc["apery"]
        lines.append("apery (closed form): " + ", ".join(f"({v[0]},{v[1]})" for v in ap["closed_form"]))
        lines.append("apery (brute force): " + ", ".join(f"({v[0]},{v[1]})" for v in ap["bruteforce"]))
        if "reconciliation" in ap:
            lines.append("note: " + ap["reconciliation"])
    if "qf" in doc:
        lines.append("quasi-Frobenius: " + ", ".join(f"({v[0]},{v[1]})" for v in doc["qf"]))
    if "cm_type" in doc:
        lines.append(f"Cohen-Macaulay type: {doc['cm_type']}")
    if "flags" in doc:
        flags = doc["flags"]
        rendered = ", ".join(
            f"{name}={'yes' if val else 'no' if val is False else 'unknown'}"
            for name, val in flags.items()
        )
        lines.append("flags: " + rendered)
    if "ideal" in doc:
        lines.append(f"ideal generators ({doc['ideal']['mu']}):")
        for g in doc["ideal"]["generators"]:
            lines.append("  " + g["text"])
        if "groebner" in doc["ideal"]:
            lines.append("groebner basis:")
            for g in doc["ideal"]["groebner"]:
                lines.append("  " + g["text"])
    if "hilbert" in doc:
        terms = doc["hilbert"]["numerator_terms"]
        body = " ".join(
            f"{'+' if int(c) > 0 else '-'} {abs(int(c))}*t^({d[0]},{d[1]})"
            for c, d in terms
        )
        lines.append("hilbert numerator: " + body)
        dens = " ".join(f"(1 - t^({g[0]},{g[1]}))" for g in doc["hilbert"]["denominator"])
        lines.append("hilbert denominator: " + dens)
    if "resolution" in doc:
        lines.append(f"betti numbers: {doc['resolution']['betti']}")
        for i, layer in enumerate(doc["resolution"]["shifts"]):
            pretty = ", ".join(f"{m}x({d[0]},{d[1]})" for m, d in layer)
            lines.append(f"  C_{i}: {pretty}")
    if "regularity" in doc:
        lines.append(f"regularity of the ideal: {doc['regularity']}")
    if "extension" in doc:
        ext = doc["extension"]
        lines.append(f"gluing: mu={ext['mu']} lambda=({', '.join(str(c) for c in ext['lambda'])})")
        lines.append("extra generator: " + ext["extra_generator"]["text"])
        if "betti" in ext:
            lines.append(f"extended betti numbers: {ext['betti']}")
        if "reconciliation" in ext:
            lines.append("note: " + ext["reconciliation"])
    if "checks" in doc:
        lines.append("checks:")
        for c in doc["checks"]:
            status = "pass" if c["passed"] else "FAIL"
            suffix = "" if c["witness"] is None else f" ({c['witness']})"
            lines.append(f"  [{status}] {c['name']}{suffix}")
    return "\n".join(lines)


def _parse_vec(text: str) -> Vec2:
    try:
        sx, sy = text.split(",")
        return Vec2(int(sx), int(sy))
    except ValueError as exc:
        raise FamilyError(f"expected a vector 'x,y', got {text!r}") from exc


def _add_family_args(p: argparse.ArgumentParser, with_b: str = "optional") -> None:
    p.add_argument("--a", required=True, help="first generator, as 'x,y'")
    p.add_argument("--d", required=True, help="common difference, as 'x,y'")
    p.add_argument("--k", required=True, type=int, help="number of steps (>= 2)")
    if with_b == "required":
        p.add_argument("--b", required=True, help="extension vector, as 'x,y'")
    elif with_b == "optional":
        p.add_argument("--b", help="optional extension vector, as 'x,y'")
    p.add_argument("--mu-bound", type=int, default=64, help="search bound for mu")
    p.add_argument("--apery-cap", type=int, default=None, help="brute-force Apery cap")
    p.add_argument("--box-x", type=int, default=None, help="truncation box width")
    p.add_argument("--box-y", type=int, default=None, help="truncation box height")
    p.add_argument("--skip-toric", action="store_true", help="skip the elimination cross-check")
    p.add_argument("--format", choices=("text", "json"), default="text")


def _build(args) -> SemigroupFamily:
    b = _parse_vec(args.b) if getattr(args, "b", None) else None
    return build_family(
        _parse_vec(args.a), _parse_vec(args.d), args.k, b, mu_bound=args.mu_bound
    )


def _box(args, f) -> Optional[EnumerationBox]:
    if args.box_x is None and args.box_y is None:
        return None
    from .verify import default_box

    base = default_box(f)
    return EnumerationBox(args.box_x or base.cap_x, args.box_y or base.cap_y)


def _report_doc(f, args, *, include_toric: bool, include_truncation: bool) -> tuple[dict, Report]:
    opts = VerifyOptions(
        box=_box(args, f),
        include_toric=include_toric and not args.skip_toric,
        include_truncation=include_truncation,
        apery_cap=args.apery_cap,
    )
    report = full_report(f, opts)
    doc = {"family": _family_section(f)}
    doc["apery"] = _apery_section(f, args.apery_cap)
    doc["qf"] = [_jvec(v) for v in sorted(quasi_frobenius(f))]
    doc["cm_type"] = cm_type(f)
    doc["flags"] = report.flags
    doc["ideal"] = _ideal_section(f, with_groebner=True)
    if f.k in (2, 3, 4):
        doc["hilbert"] = _hilbert_section(f)
        if not f.is_extended:
            doc["resolution"] = _resolution_section(f)
    if not f.is_extended:
        doc["regularity"] = regularity(f)
    if f.is_extended:
        doc["extension"] = _extension_section(f, args.apery_cap)
    doc["checks"] = _checks_section(report)
    return doc, report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="apsemigroups",
        description="Exact invariants of plane affine semigroups generated by "
        "arithmetic progressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "analyze": "closed-form invariants plus the fast consistency checks",
        "ideal": "minimal generators of the defining ideal",
        "groebner": "reduced Groebner basis of the defining ideal",
        "hilbert": "closed-form Hilbert numerator (k = 2, 3, 4)",
        "resolution": "stored minimal free resolution (k = 2, 3, 4)",
        "extend": "gluing data for a family with an extension vector",
        "verify": "every check, including elimination and truncation oracles",
    }
    for name, desc in specs.items():
        p = sub.add_parser(name, help=desc)
        _add_family_args(p, with_b="required" if name == "extend" else "optional")

    args = parser.parse_args(argv)
    try:
        f = _build(args)
        if args.command in ("analyze", "extend"):
            doc, report = _report_doc(
                f, args, include_toric=False, include_truncation=False
            )
        elif args.command == "verify":
            doc, report = _report_doc(
                f, args, include_toric=True, include_truncation=True
            )
        elif args.command == "ideal":
            doc = {"family": _family_section(f), "ideal": _ideal_section(f, False)}
            report = None
        elif args.command == "groebner":
            doc = {"family": _family_section(f), "ideal": _ideal_section(f, True)}
            report = None
        elif args.command == "hilbert":
            doc = {"family": _family_section(f), "hilbert": _hilbert_section(f)}
            report = None
        else:  # resolution
            doc = {
                "family": _family_section(f),
                "resolution": _resolution_section(f),
            }
            report = None
    except (FamilyError, UnsupportedK, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_render_text(doc))
    if report is not None and not report.ok:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
