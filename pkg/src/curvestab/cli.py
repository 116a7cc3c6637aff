"""Command line interface.

Every subcommand prints a single JSON object to stdout (the disk
sampler prints CSV instead), with sorted keys and fixed separators so
identical invocations produce identical bytes.  Failures print a
structured {"code", "message", "context"} object to stderr and exit
with status 1; argparse usage errors keep their native status 2.

Inputs that are structured values (points, objects, group elements)
are passed as inline JSON, or as "-" to read the JSON from stdin.
Scalar shorthands: complex numbers are "re,im", classes are "r,d",
matrices are "a,b,c,d" row major, exact thresholds use the
"p/q [+|-] p/q*sqrt:n" / "inf" grammar.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import CurvestabError
from .exact import parse_exact
from .geometry import gldim, pm_boundary_limit, pm_embed, slicing_distance
from .group import (
    GroupElement,
    act,
    act_c,
    act_tensor,
    chart_fwd,
    chart_inv,
    compose,
    solve_transitive,
)
from .jsonio import (
    class_to_json,
    complex_from_json,
    complex_to_json,
    distance_to_json,
    gldim_to_json,
    group_from_json,
    group_to_json,
    matrix_to_json,
    object_from_json,
    object_to_json,
    phase_to_json,
    pm_to_json,
    point_from_json,
    point_to_json,
    verdict_to_json,
)
from .numclass import CurveContext, NumClass
from .stability import (
    Boundary,
    Geometric,
    Variant,
    central_charge,
    classify,
    geometric,
    hn,
    mass,
    phase,
)
from .weak import check_clsy, check_regular, check_strict_weak, enumerate_ses


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    re_, im = parts
    return complex(float(re_), float(im))


def _class_arg(text: str) -> NumClass:
    r, d = text.split(",")
    return NumClass(int(r), int(d))


def _matrix_arg(text: str):
    a, b, c, d = (float(x) for x in text.split(","))
    return ((a, b), (c, d))


def _json_arg(text: str):
    if text == "-":
        return json.load(sys.stdin)
    return json.loads(text)


def _build_point(args):
    if getattr(args, "point", None):
        return point_from_json(_json_arg(args.point))
    if args.genus is None:
        raise ValueError("--genus is required when no --point JSON is given")
    ctx = CurveContext(args.genus)
    lam = _complex_arg(args.lam) if args.lam else complex(0.0)
    if args.tau is not None:
        return Geometric(lam, _complex_arg(args.tau), ctx)
    if args.beta is not None:
        beta = parse_exact(args.beta)
        t = Fraction(args.t) if args.t is not None else None
        if args.variant:
            variant = Variant(args.variant)
        else:
            variant = Variant.UPPER if t == 0 else Variant.LOWER
        return Boundary(beta, variant, t, lam, ctx)
    raise ValueError("give either --tau (geometric) or --beta (boundary)")


def _point_flags(p: argparse.ArgumentParser, prefix: str = "") -> None:
    p.add_argument(f"--{prefix}point" if prefix else "--point", help="point as JSON, or - for stdin")
    if not prefix:
        p.add_argument("--genus", type=int)
        p.add_argument("--tau", help="re,im")
        p.add_argument("--beta", help="exact threshold, e.g. 1/2, sqrt:2, inf")
        p.add_argument("--variant", choices=["lower", "upper"])
        p.add_argument("--t", help="phase label p/q for the wall classes")
        p.add_argument("--lam", help="re,im scalar parameter (default 0)")


def _emit(args, payload: dict) -> None:
    if getattr(args, "version_tag", None):
        payload = dict(payload)
        payload["version"] = args.version_tag
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


# -- subcommand handlers -----------------------------------------------------------


def _cmd_phase(args):
    point = _build_point(args)
    pv = phase(point, args.shift, _class_arg(args.cls))
    _emit(args, phase_to_json(pv))


def _cmd_charge(args):
    point = _build_point(args)
    z = central_charge(point, _class_arg(args.cls))
    _emit(args, {"z": complex_to_json(z)})


def _cmd_hn(args):
    point = _build_point(args)
    obj = object_from_json(_json_arg(args.object), point.genus)
    result = hn(point, obj)
    _emit(
        args,
        {
            "factors": [
                {
                    "phase": phase_to_json(f.phase),
                    "r": f.cls.r,
                    "d": f.cls.d,
                    "shift": f.shift,
                }
                for f in result.factors
            ]
        },
    )


def _cmd_mass(args):
    point = _build_point(args)
    obj = object_from_json(_json_arg(args.object), point.genus)
    _emit(args, {"mass": mass(point, obj)})


def _cmd_classify(args):
    beta = parse_exact(args.beta)
    _emit(args, {"verdict": classify(args.genus, beta).value})


def _cmd_act_c(args):
    point = _build_point(args)
    _emit(args, point_to_json(act_c(point, _complex_arg(args.scalar))))


def _cmd_act_group(args):
    point = _build_point(args)
    g = group_from_json(_json_arg(args.g))
    _emit(args, point_to_json(act(point, g)))


def _cmd_act_tensor(args):
    e = args.e
    if args.cls is not None:
        out = act_tensor(_class_arg(args.cls), e)
        _emit(args, class_to_json(out))
        return
    if args.object is not None:
        if args.genus is None:
            raise ValueError("--genus is required to tensor an object")
        obj = object_from_json(_json_arg(args.object), args.genus)
        _emit(args, object_to_json(act_tensor(obj, e)))
        return
    point = _build_point(args)
    _emit(args, point_to_json(act_tensor(point, e)))


def _cmd_compose(args):
    g1 = group_from_json(_json_arg(args.g1))
    g2 = group_from_json(_json_arg(args.g2))
    _emit(args, group_to_json(compose(g1, g2)))


def _cmd_chart_fwd(args):
    c, w = chart_fwd(_matrix_arg(args.matrix))
    _emit(args, {"c": complex_to_json(c), "w": complex_to_json(w)})


def _cmd_chart_inv(args):
    m = chart_inv(_complex_arg(args.c), _complex_arg(args.w))
    _emit(args, {"m": matrix_to_json(m)})


def _cmd_solve(args):
    p1 = point_from_json(_json_arg(args.p1))
    p2 = point_from_json(_json_arg(args.p2))
    _emit(args, group_to_json(solve_transitive(p1, p2)))


def _cmd_dist(args):
    p1 = point_from_json(_json_arg(args.p1))
    p2 = point_from_json(_json_arg(args.p2))
    _emit(args, distance_to_json(slicing_distance(p1, p2)))


def _cmd_pm_embed(args):
    point = _build_point(args)
    _emit(args, pm_to_json(pm_embed(point)))


def _cmd_pm_boundary(args):
    beta = parse_exact(args.beta)
    _emit(args, pm_to_json(pm_boundary_limit(beta, args.genus)))


def _frange(spec: str) -> list[float]:
    start, stop, step = (float(x) for x in spec.split(":"))
    if step <= 0:
        raise ValueError("range step must be positive")
    out = []
    i = 0
    while True:
        v = start + i * step
        if v > stop + step * 1e-9:
            return out
        out.append(v)
        i += 1


def _cmd_pm_sample(args):
    lam = _complex_arg(args.lam) if args.lam else complex(0.0)
    rows = ["beta,alpha,m0,m1,m2"]
    for beta in _frange(args.beta_range):
        for alpha in _frange(args.alpha_range):
            point = geometric(lam, complex(beta, alpha), args.genus)
            m0, m1, m2 = pm_embed(point).coords
            rows.append(f"{beta},{alpha},{m0},{m1},{m2}")
    sys.stdout.write("\n".join(rows) + "\n")


def _cmd_gldim(args):
    point = _build_point(args)
    _emit(args, gldim_to_json(gldim(point)))


def _cmd_check(args):
    point = _build_point(args)
    if args.axiom == "regular":
        verdict = check_regular(point)
    else:
        corpus = enumerate_ses(point, args.rank_bound, args.deg_bound)
        checker = check_clsy if args.axiom == "clsy" else check_strict_weak
        verdict = checker(point, corpus)
    _emit(args, verdict_to_json(verdict))


# -- parser ------------------------------------------------------------------------


def _error_code(exc: BaseException) -> str:
    if isinstance(exc, json.JSONDecodeError):
        return "invalid_json"
    if isinstance(exc, KeyError):
        return "missing_field"
    if not isinstance(exc, CurvestabError):
        return "invalid_value"
    name = re.sub(r"Error$", "", type(exc).__name__)
    return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower() or "error"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--version-tag", help="echoed back in the response")

    parser = argparse.ArgumentParser(
        prog="curvestab",
        description="stability points on a curve: phases, actions, distances, checks",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phase", parents=[common], help="phase of a shifted class")
    _point_flags(p)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--cls", required=True, help="r,d")
    p.set_defaults(func=_cmd_phase)

    p = sub.add_parser("charge", parents=[common], help="central charge of a class")
    _point_flags(p)
    p.add_argument("--cls", required=True, help="r,d")
    p.set_defaults(func=_cmd_charge)

    p = sub.add_parser("hn", parents=[common], help="filtration phases of an object")
    _point_flags(p)
    p.add_argument("--object", required=True, help="object as JSON, or - for stdin")
    p.set_defaults(func=_cmd_hn)

    p = sub.add_parser("mass", parents=[common], help="total charge mass of an object")
    _point_flags(p)
    p.add_argument("--object", required=True, help="object as JSON, or - for stdin")
    p.set_defaults(func=_cmd_mass)

    p = sub.add_parser("classify", parents=[common], help="what the pair at a threshold is")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("act", help="group, scalar, and twist actions")
    act_sub = p.add_subparsers(dest="mode", required=True)
    q = act_sub.add_parser("c", parents=[common], help="scalar action on a point")
    _point_flags(q)
    q.add_argument("--scalar", required=True, help="re,im")
    q.set_defaults(func=_cmd_act_c)
    q = act_sub.add_parser("group", parents=[common], help="lifted matrix action on a geometric point")
    _point_flags(q)
    q.add_argument("--g", required=True, help="group element as JSON, or - for stdin")
    q.set_defaults(func=_cmd_act_group)
    q = act_sub.add_parser("tensor", parents=[common], help="twist by a degree-e line bundle")
    _point_flags(q)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--cls", help="r,d (act on a bare class)")
    q.add_argument("--object", help="object as JSON (needs --genus)")
    q.set_defaults(func=_cmd_act_tensor)

    p = sub.add_parser("compose", parents=[common], help="product of two lifted elements")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("chart", help="chart to C* x H and back")
    chart_sub = p.add_subparsers(dest="direction", required=True)
    q = chart_sub.add_parser("fwd", parents=[common])
    q.add_argument("--matrix", required=True, help="a,b,c,d row major")
    q.set_defaults(func=_cmd_chart_fwd)
    q = chart_sub.add_parser("inv", parents=[common])
    q.add_argument("--c", required=True, help="re,im")
    q.add_argument("--w", required=True, help="re,im")
    q.set_defaults(func=_cmd_chart_inv)

    p = sub.add_parser("solve", parents=[common], help="element carrying one geometric point to another")
    p.add_argument("--p1", required=True, help="point as JSON")
    p.add_argument("--p2", required=True, help="point as JSON")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("dist", parents=[common], help="slicing distance between two points")
    p.add_argument("--p1", required=True, help="point as JSON")
    p.add_argument("--p2", required=True, help="point as JSON")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("pm", help="projective mass coordinates")
    pm_sub = p.add_subparsers(dest="mode", required=True)
    q = pm_sub.add_parser("embed", parents=[common], help="mass coordinates of a point")
    _point_flags(q)
    q.set_defaults(func=_cmd_pm_embed)
    q = pm_sub.add_parser("boundary", parents=[common], help="closed-form wall masses (genus 1)")
    q.add_argument("--beta", required=True)
    q.add_argument("--genus", type=int, default=1)
    q.set_defaults(func=_cmd_pm_boundary)
    q = pm_sub.add_parser("sample-disk", parents=[common], help="CSV of masses over a grid")
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--beta-range", required=True, help="start:stop:step")
    q.add_argument("--alpha-range", required=True, help="start:stop:step")
    q.add_argument("--lam", help="re,im scalar parameter (default 0)")
    q.set_defaults(func=_cmd_pm_sample)

    p = sub.add_parser("gldim", parents=[common], help="global dimension at a point")
    _point_flags(p)
    p.set_defaults(func=_cmd_gldim)

    p = sub.add_parser("check", help="weak axiom checks over an SES corpus")
    check_sub = p.add_subparsers(dest="axiom", required=True)
    for axiom, blurb in [
        ("clsy", "see-saw comparisons"),
        ("weak", "strict trichotomy"),
        ("regular", "zero class not in the heart"),
    ]:
        q = check_sub.add_parser(axiom, parents=[common], help=blurb)
        _point_flags(q)
        q.add_argument("--rank-bound", type=int, default=3)
        q.add_argument("--deg-bound", type=int, default=6)
        q.set_defaults(func=_cmd_check, axiom=axiom)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (CurvestabError, ValueError, KeyError, json.JSONDecodeError) as exc:
        payload = {
            "code": _error_code(exc),
            "message": str(exc),
            "context": {"command": args.command},
        }
        sys.stderr.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
