"""Command-line workbench: axiom reports, hom-spaces, spectra, the analytic line.

Results go to standard output (or --out) as JSON validating against the
schemas shipped under /schemas; diagnostics go to standard error.  Exit codes:
0 success, 1 mathematical failure (with a machine-readable reason on stdout),
2 parse/usage errors.  Identical config and seed give byte-identical output.

The config file is a small key-value format with repeatable sections,
documented in docs/config.md together with the ring descriptor grammar
zmod(n) | product(d1,d2,...) | polyquot(p,[c0,c1,...]) | quotient(ring,[units]).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from hyperalg import berkline, finring, homspace, topofin
from hyperalg.hypercore import (
    GAMMA_Q,
    GAMMA_Z2LEX,
    KRASNER,
    NEG_INF,
    PHASE,
    SIGNS,
    TROPICAL,
    check_doubly_distributive,
    check_hyperfield,
    check_hypergroup,
    check_hyperring,
)
from hyperalg.polyq import PolyQ, poly_from_string

NAMED_STRUCTURES = {
    "K": KRASNER,
    "S": SIGNS,
    "T": TROPICAL,
    "P": PHASE,
    "GammaQ": GAMMA_Q,
    "GammaZ2": GAMMA_Z2LEX,
}


class CliError(ValueError):
    """Bad descriptors, config, or flags: exits with code 2."""


# ---------------------------------------------------------------------------
# config file parsing (small key-value grammar, see docs/config.md)

_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


def _parse_scalar(text):
    text = text.strip()
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    if text in ("true", "false"):
        return text == "true"
    if text == "-inf":
        return NEG_INF
    if _SCALAR_RE.match(text):
        return Fraction(text)
    raise CliError(f"cannot parse config value {text!r}")


def _parse_value(text):
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_parse_scalar(part) for part in inner.split(",")]
    return _parse_scalar(text)


def load_config(path):
    """Parse the workbench config format into nested dicts and lists."""
    top = {}
    current = top
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[[") and line.endswith("]]"):
                name = line[2:-2].strip()
                current = {}
                top.setdefault(name, []).append(current)
            elif line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip()
                current = top.setdefault(name, {})
                if not isinstance(current, dict):
                    raise CliError(f"section {name!r} clashes with a list section")
            elif "=" in line:
                key, _, value = line.partition("=")
                current[key.strip()] = _parse_value(value)
            else:
                raise CliError(f"cannot parse config line {raw.strip()!r}")
    return top


# ---------------------------------------------------------------------------
# small parsers for flags


def parse_probe_grid(spec, structure):
    """Probe values separated by ';', each in the structure's value syntax.

    Rational carriers also accept the range form lo..hi:step.
    """
    out = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.match(r"^(-?\d+(?:/\d+)?)\.\.(-?\d+(?:/\d+)?):(-?\d+(?:/\d+)?)$", chunk)
        if m:
            lo, hi, step = (Fraction(m.group(k)) for k in (1, 2, 3))
            if step <= 0:
                raise CliError("probe-grid step must be positive")
            v = lo
            while v <= hi:
                out.append(v)
                v += step
            continue
        if hasattr(structure, "parse_value"):
            out.append(structure.parse_value(chunk))
        elif chunk == "-inf":
            out.append(NEG_INF)
        else:
            out.append(int(chunk))
    if not out:
        raise CliError("empty probe grid")
    return out


def parse_poly_arg(text):
    """A polynomial: either a coefficient list [c0,c1,...] or a string form."""
    text = text.strip()
    try:
        if text.startswith("["):
            coeffs = [Fraction(c) for c in text[1:-1].split(",") if c.strip()]
            return PolyQ(coeffs)
        return poly_from_string(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse polynomial {text!r}: {exc}") from exc


def parse_analytic_point(text):
    """delta | ray:R | branch:B:V | limit:B"""
    bits = text.strip().split(":")
    try:
        if bits[0] == "delta":
            return berkline.trivial_point()
        if bits[0] == "ray":
            return berkline.generic_ray(Fraction(bits[1]))
        if bits[0] == "branch":
            return berkline.branch_point(Fraction(bits[1]), Fraction(bits[2]))
        if bits[0] == "limit":
            return berkline.branch_limit(Fraction(bits[1]))
    except (IndexError, ValueError) as exc:
        raise CliError(f"cannot parse point {text!r}: {exc}") from exc
    raise CliError(f"unknown point kind {bits[0]!r}")


def parse_krasner_point(text):
    """generic | prime:POLY"""
    text = text.strip()
    if text == "generic":
        return berkline.KrasnerLinePoint(None)
    if text.startswith("prime:"):
        return berkline.KrasnerLinePoint(parse_poly_arg(text[len("prime:"):]).monic())
    raise CliError(f"cannot parse Krasner point {text!r}")


def parse_structure_arg(text):
    text = text.strip()
    if text in NAMED_STRUCTURES:
        return NAMED_STRUCTURES[text]
    try:
        return finring.parse_structure(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def parse_factored(roots_text, unit):
    """Root multiset 'b:m,b:m,...' for the factored form c prod (T+b)^m."""
    if roots_text.strip() in ("", "1"):
        return berkline.factored([], unit=unit)
    d = {}
    try:
        for part in roots_text.split(","):
            b, _, m = part.partition(":")
            d[Fraction(b)] = d.get(Fraction(b), 0) + (int(m) if m else 1)
    except ValueError as exc:
        raise CliError(f"cannot parse roots {roots_text!r}: {exc}") from exc
    return berkline.factored(d, unit=unit)


# ---------------------------------------------------------------------------
# output plumbing


def _emit(payload, args):
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(payload, args):
    _emit(payload, args)
    return 1


# ---------------------------------------------------------------------------
# commands


def cmd_axioms(args):
    s = parse_structure_arg(args.structure)
    if hasattr(s, "as_hyperring"):
        s = s.as_hyperring()
    probe = None
    if args.probe_grid:
        probe = parse_probe_grid(args.probe_grid, s)
    check = {
        "hypergroup": check_hypergroup,
        "hyperring": check_hyperring,
        "hyperfield": check_hyperfield,
        "doubly-distributive": check_doubly_distributive,
    }[args.check]
    rep = check(s, probe=probe)
    payload = rep.to_json(value_str=s.value_str)
    if rep.passed:
        _emit(payload, args)
        return 0
    return _fail(payload, args)


def cmd_homs(args):
    R = parse_structure_arg(args.ring)
    if not hasattr(R, "as_hyperring") and not hasattr(R, "add_raw"):
        raise CliError("homs needs a finite ring or quotient descriptor")
    target = NAMED_STRUCTURES[args.target]
    homs = homspace.enumerate_homs(R, target)
    payload = {
        "schema": "hom_list.v1",
        "domain": R.descriptor if hasattr(R, "descriptor") else R.name,
        "target": args.target,
        "count": len(homs),
        "homs": [h.to_json(target) for h in homs],
    }
    _emit(payload, args)
    return 0


def cmd_spec(args):
    R = parse_structure_arg(args.ring)
    res = finring.primes(R)
    topo = homspace.spec_space(R, res.primes)
    H = R.as_hyperring() if hasattr(R, "as_hyperring") else R
    payload = {
        "schema": "points_topology.v1",
        "kind": "spec",
        "structure": H.name,
        "points": [sorted(H.label(a) for a in p) for p in topo.points],
        "topology": topo.to_json(),
    }
    if res.notice:
        payload["notice"] = res.notice
    if args.format == "dot":
        _emit(topo.to_dot(), args)
    else:
        _emit(payload, args)
    return 0


def cmd_sper(args):
    f = parse_poly_arg(args.poly)
    try:
        points = homspace.sper_points(f)
    except homspace.SquarefreeError as exc:
        return _fail({"schema": "error.v1", "status": "fail", "reason": str(exc)}, args)
    topo = homspace.spectral_topology(f, points=points)
    payload = {
        "schema": "points_topology.v1",
        "kind": "sper",
        "structure": f"Q[x]/({f!r})",
        "points": [d.to_json() for d in points],
        "topology": topo.to_json(),
    }
    if args.format == "dot":
        _emit(topo.to_dot(), args)
    else:
        _emit(payload, args)
    return 0


def cmd_compare(args):
    if args.correspondence == "spec-K":
        R = parse_structure_arg(args.structure)
        verdict, spec, aff = homspace.compare_spec_affine(R)
        points = len(spec.points)
    elif args.correspondence == "sper-S":
        f = parse_poly_arg(args.structure)
        verdict, spectral, affine = homspace.compare_sper_affine(f)
        points = len(spectral.points)
    else:
        raise CliError(f"unknown correspondence {args.correspondence!r}")
    payload = verdict.to_json()
    payload["correspondence"] = args.correspondence
    payload["points"] = points
    _emit(payload, args)
    return 0 if verdict.homeomorphic else 1


def cmd_berk(args):
    if args.berk_command == "eval":
        point = parse_analytic_point(args.point)
        if args.roots is None and args.poly is None:
            raise CliError("eval needs --roots or --poly")
        f = parse_factored(args.roots, Fraction(args.unit)) if args.roots is not None else parse_poly_arg(args.poly)
        value = berkline.evaluate(point, f)
        payload = {
            "schema": "berk_value.v1",
            "point": point.to_json(),
            "poly": f.label() if hasattr(f, "label") else repr(f),
            "value": "-inf" if value is NEG_INF else str(value),
        }
        _emit(payload, args)
        return 0
    if args.berk_command == "hypersum":
        x, y = Fraction(args.x), Fraction(args.y)
        s = berkline.berk_hypersum(berkline.branch_point(0, x), berkline.branch_point(0, y))
        _emit(s.to_json(), args)
        return 0
    if args.berk_command == "witness":
        vals = [NEG_INF if v == "-inf" else Fraction(v) for v in (args.x, args.y, args.z)]
        try:
            w = berkline.make_witness(*vals)
        except berkline.WitnessError as exc:
            return _fail(
                {"schema": "error.v1", "status": "fail", "reason": str(exc)}, args
            )
        payload = {"schema": "berk_witness.v1", **w.to_json()}
        payload["hom_check"] = berkline.check_witness_hom(w).passed
        _emit(payload, args)
        return 0
    if args.berk_command == "cc-check":
        if args.target == "K":
            h, f, g = (parse_krasner_point(t) for t in (args.h, args.f, args.g))
        else:
            h, f, g = (parse_analytic_point(t) for t in (args.h, args.f, args.g))
        verdict = berkline.cc_membership(h, f, g, degree_bound=args.degree_bound)
        _emit(verdict.to_json(), args)
        return 0 if verdict.consistent else 1
    if args.berk_command == "tree":
        labels = [Fraction(b) for b in args.labels.split(",")] if args.labels else (0, 1, -1, 2, -2)
        _emit(berkline.tree_dot(labels), args)
        return 0
    raise CliError(f"unknown berk subcommand {args.berk_command!r}")


def _chart_from_config(entry):
    if "ring" not in entry:
        raise CliError("chart section is missing 'ring'")
    ring = finring.parse_structure(str(entry["ring"]))
    target = str(entry.get("target", "K"))
    if target != "K":
        raise CliError("glue charts currently target K")
    res = finring.primes(ring)
    return ring, homspace.spec_space(ring, res.primes)


def _open_from_config(ring, topo, text):
    text = str(text)
    m = re.match(r"^D\((\d+)\)$", text.strip())
    if not m:
        raise CliError(f"gluing opens use the form D(a); got {text!r}")
    a = int(m.group(1))
    return [p for p in topo.points if a not in p]


def cmd_glue(args):
    if not args.config:
        raise CliError("glue needs --config with chart and gluing sections")
    cfg = load_config(args.config)
    charts = [_chart_from_config(entry) for entry in cfg.get("chart", [])]
    if not charts:
        raise CliError("no [[chart]] sections in config")
    gluings = []
    for entry in cfg.get("gluing", []):
        for key in ("left", "right", "left_open", "right_open"):
            if key not in entry:
                raise CliError(f"gluing section is missing {key!r}")
        i, j = int(entry["left"]), int(entry["right"])
        if not (0 <= i < len(charts) and 0 <= j < len(charts)):
            raise CliError("gluing chart indices out of range")
        ring_i, topo_i = charts[i]
        ring_j, topo_j = charts[j]
        left_open = _open_from_config(ring_i, topo_i, entry["left_open"])
        right_open = _open_from_config(ring_j, topo_j, entry["right_open"])
        left_sorted = sorted(left_open, key=sorted)
        right_sorted = sorted(right_open, key=sorted)
        if len(left_sorted) != len(right_sorted):
            raise CliError("gluing opens have different sizes")
        mapping = dict(zip(left_sorted, right_sorted))
        gluings.append(homspace.Gluing(i, j, mapping))
    try:
        glued = homspace.glue_hom_spaces([topo for _, topo in charts], gluings)
    except homspace.GluingError as exc:
        return _fail({"schema": "error.v1", "status": "fail", "reason": str(exc)}, args)
    if args.format == "dot":
        _emit(glued.to_dot(), args)
    else:
        _emit(glued.to_json(), args)
    return 0


# ---------------------------------------------------------------------------
# entry point


def _add_common_flags(parser, suppress):
    # defined on the top parser with real defaults and on every subparser with
    # SUPPRESS, so the flags work both before and after the subcommand
    d = (lambda v: argparse.SUPPRESS if suppress else v)
    parser.add_argument("--config", default=d(None), help="config file (see docs/config.md)")
    parser.add_argument("--out", default=d(None), help="write the result here instead of stdout")
    parser.add_argument("--format", choices=["json", "dot"], default=d("json"))
    parser.add_argument("--degree-bound", type=int, default=d(4))
    parser.add_argument("--probe-grid", default=d(None), help="probe values separated by ';'")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for sampled checks")


def build_parser():
    top = argparse.ArgumentParser(
        prog="hyperalg",
        description="workbench for hyperfields, hom-spaces, and the analytic line",
    )
    _add_common_flags(top, suppress=False)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="axiom report for a structure")
    _add_common_flags(p, suppress=True)
    p.add_argument("structure", help="K | S | T | P | GammaQ | GammaZ2 | ring descriptor")
    p.add_argument(
        "--check",
        choices=["hypergroup", "hyperring", "hyperfield", "doubly-distributive"],
        default="hyperfield",
    )
    p.set_defaults(fn=cmd_axioms)

    p = sub.add_parser("homs", help="all homomorphisms of a finite ring into K or S")
    _add_common_flags(p, suppress=True)
    p.add_argument("ring")
    p.add_argument("--target", choices=["K", "S"], default="K")
    p.set_defaults(fn=cmd_homs)

    p = sub.add_parser("spec", help="prime spectrum with its topology")
    _add_common_flags(p, suppress=True)
    p.add_argument("ring")
    p.set_defaults(fn=cmd_spec)

    p = sub.add_parser("sper", help="real spectrum of Q[x]/(f)")
    _add_common_flags(p, suppress=True)
    p.add_argument("poly", help="polynomial: string form or [c0,c1,...]")
    p.set_defaults(fn=cmd_sper)

    p = sub.add_parser("compare", help="verify a correspondence homeomorphism")
    _add_common_flags(p, suppress=True)
    p.add_argument("--correspondence", choices=["spec-K", "sper-S"], required=True)
    p.add_argument("structure", help="ring descriptor (spec-K) or polynomial (sper-S)")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("berk", help="the analytic affine line")
    bsub = p.add_subparsers(dest="berk_command", required=True)
    q = bsub.add_parser("eval")
    _add_common_flags(q, suppress=True)
    q.add_argument("--point", required=True, help="delta | ray:R | branch:B:V | limit:B")
    q.add_argument("--roots", help="factored poly roots b:m,b:m,...")
    q.add_argument("--unit", default="1")
    q.add_argument("--poly", help="plain polynomial instead of --roots")
    q.set_defaults(fn=cmd_berk)
    q = bsub.add_parser("hypersum")
    _add_common_flags(q, suppress=True)
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(fn=cmd_berk)
    q = bsub.add_parser("witness")
    _add_common_flags(q, suppress=True)
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("z")
    q.set_defaults(fn=cmd_berk)
    q = bsub.add_parser("cc-check")
    _add_common_flags(q, suppress=True)
    q.add_argument("--target", choices=["T", "K"], default="T")
    q.add_argument("--h", required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--g", required=True)
    q.set_defaults(fn=cmd_berk)
    q = bsub.add_parser("tree")
    _add_common_flags(q, suppress=True)
    q.add_argument("--labels", help="comma-separated branch labels")
    q.set_defaults(fn=cmd_berk)

    p = sub.add_parser("glue", help="glue spec charts along open identifications")
    _add_common_flags(p, suppress=True)
    p.set_defaults(fn=cmd_glue)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
