"""Codecs between the public dataclasses and their JSON wire shapes.

Complex numbers travel as two-element [re, im] arrays, rationals as
"p/q" strings, exact quadratic scalars as {"a", "b", "n"} with "inf"
for the infinite threshold.  Stability points carry their genus inline;
formal objects do not, so decoding one takes the genus alongside.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import INFINITY, ExactReal
from .geometry import DistanceResult, GldimResult, ProjectiveMassPoint
from .group import GroupElement
from .numclass import CurveContext, NumClass
from .objects import FormalObject, canonicalize
from .stability import Boundary, Geometric, PhaseValue, StabilityPoint, Variant
from .weak import AxiomVerdict, NumericalSES


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v, 0.0)
    re, im = v
    return complex(float(re), float(im))


def fraction_to_str(q: Fraction) -> str:
    return str(Fraction(q))


def exact_to_json(x):
    if x is INFINITY:
        return "inf"
    x = x if isinstance(x, ExactReal) else ExactReal(x)
    return {"a": str(x.a), "b": str(x.b), "n": x.n}


def exact_from_json(v):
    if v == "inf":
        return INFINITY
    if isinstance(v, str):
        return ExactReal(Fraction(v))
    if isinstance(v, (int, float)):
        return ExactReal(Fraction(v))
    return ExactReal(Fraction(v["a"]), Fraction(v.get("b", 0)), int(v.get("n", 0)))


def point_to_json(p: StabilityPoint) -> dict:
    if isinstance(p, Geometric):
        return {
            "kind": "geometric",
            "lambda": complex_to_json(p.lam),
            "tau": complex_to_json(p.tau),
            "genus": p.genus,
        }
    return {
        "kind": "boundary",
        "beta": exact_to_json(p.beta),
        "variant": p.variant.value,
        "t": None if p.t is None else fraction_to_str(p.t),
        "lambda": complex_to_json(p.lam),
        "genus": p.genus,
    }


def point_from_json(d: dict) -> StabilityPoint:
    ctx = CurveContext(int(d["genus"]))
    lam = complex_from_json(d.get("lambda", [0.0, 0.0]))
    if d["kind"] == "geometric":
        return Geometric(lam, complex_from_json(d["tau"]), ctx)
    if d["kind"] != "boundary":
        raise ValueError(f"unknown point kind {d['kind']!r}")
    t = d.get("t")
    if t is not None:
        t = Fraction(t)
    return Boundary(
        exact_from_json(d["beta"]),
        Variant(d.get("variant", "lower")),
        t,
        lam,
        ctx,
    )


def object_to_json(obj: FormalObject) -> dict:
    return {
        "factors": [
            {"shift": k, "r": c.r, "d": c.d} for k, c in obj.factors
        ]
    }


def object_from_json(d: dict, genus: int) -> FormalObject:
    return canonicalize(
        [
            (int(f["shift"]), NumClass(int(f["r"]), int(f["d"])))
            for f in d["factors"]
        ],
        genus,
    )


def class_to_json(c: NumClass) -> dict:
    return {"r": c.r, "d": c.d}


def group_to_json(g: GroupElement) -> dict:
    return {"m": [list(g.m[0]), list(g.m[1])], "winding": g.winding}


def group_from_json(d: dict) -> GroupElement:
    (a, b), (c, e) = d["m"]
    return GroupElement(((float(a), float(b)), (float(c), float(e))), int(d.get("winding", 0)))


def matrix_to_json(m) -> list:
    return [list(m[0]), list(m[1])]


def matrix_from_json(v):
    (a, b), (c, d) = v
    return ((float(a), float(b)), (float(c), float(d)))


def phase_to_json(pv: PhaseValue) -> dict:
    return {"value": pv.value, "exact_integer": pv.exact_integer}


def distance_to_json(res: DistanceResult) -> dict:
    direction = "inf" if res.direction is INFINITY else float(res.direction)
    return {"d": res.value, "witness_direction": direction}


def pm_to_json(p: ProjectiveMassPoint) -> dict:
    return {"coords": list(p.coords)}


def gldim_to_json(res: GldimResult) -> dict:
    if res.exact:
        return {"value": res.lower, "exact": True}
    return {"lower": res.lower, "upper": res.upper, "exact": False}


def ses_to_json(s: NumericalSES) -> dict:
    return {
        "sub": class_to_json(s.sub),
        "total": class_to_json(s.total),
        "quot": class_to_json(s.quot),
    }


def verdict_to_json(v: AxiomVerdict) -> dict:
    return {
        "passed": v.passed,
        "witness": None if v.witness is None else ses_to_json(v.witness),
        "rule": None if v.violated_rule is None else v.violated_rule.value,
    }
