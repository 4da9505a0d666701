"""Command-line front end.

::

    emcalc eval      SCENE --field F --at x,y,z [--at ...]
    emcalc integrate SCENE --kind dottedLineIntegral --field F --domain D [--n N]
    emcalc check     SCENE --theorem stokes --field F --domain D [--step d] [--n N]
    emcalc plot      SCENE --field F --slice S --n N --out field.svg [--scale cbrt]
    emcalc run       SCENE

Numbers are printed with 17 significant digits. Exit codes: 0 success,
2 usage or scene error, 3 theorem check above threshold, 4 singularity,
evaluation or I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .calculus import (
    DEFAULT_CURVE_N,
    DEFAULT_STEP,
    DEFAULT_SURFACE_N,
    DEFAULT_VOLUME_N,
    INTEGRALS,
    curve_sample,
    surface_sample,
    volume_sample,
)
from .fields import FieldEvaluationError
from .geometry import DomainError
from .scene import THEOREMS, SceneError, SceneModel, load_scene
from .theorems import check_divergence_theorem, check_gradient_theorem, check_stokes
from .viz import SCALES, RenderSpec, render_vector_field

EXIT_OK, EXIT_USAGE, EXIT_CHECK, EXIT_RUNTIME = 0, 2, 3, 4

REPORT_FORMAT_VERSION = 1

_SAMPLERS = {"curve": curve_sample, "surface": surface_sample, "volume": volume_sample}
_DEFAULT_N = {"curve": DEFAULT_CURVE_N, "surface": DEFAULT_SURFACE_N, "volume": DEFAULT_VOLUME_N}


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".17g")


def fmt_value(v) -> str:
    a = np.atleast_1d(np.asarray(tuple(v) if hasattr(v, "x") else v, dtype=float))
    return " ".join(fmt(c) for c in a)


def parse_point(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    try:
        if len(parts) != 3:
            raise ValueError
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        v = 0.0
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


# the commands; each takes a SceneModel and plain arguments and returns an exit code


def _field(model: SceneModel, name: str):
    if name not in model.scene.fields:
        raise UsageError(f"undefined field {name!r}")
    return model.field(name)


def _domain(model: SceneModel, name: str):
    if name not in model.scene.shapes:
        raise UsageError(f"undefined shape {name!r}")
    return model.shape(name)


def do_eval(model: SceneModel, field: str, at, out) -> int:
    F = _field(model, field)
    points = np.array(at, dtype=float).reshape(-1, 3)
    values = F.evaluate(points)
    for p, v in zip(points, values):
        out.write(f"{fmt_value(p)} : {fmt_value(v)}\n")
    return EXIT_OK


def do_integrate(model: SceneModel, kind: str, field: str, domain: str, n, out) -> int:
    if kind not in INTEGRALS:
        raise UsageError(f"unknown integral {kind!r}; expected one of {', '.join(INTEGRALS)}")
    fn, field_kind, domain_kind, _ = INTEGRALS[kind]
    F = _field(model, field)
    D = _domain(model, domain)
    got_f, got_d = model.field_kind(field), model.shape_kind(domain)
    if (got_f, got_d) != (field_kind, domain_kind):
        raise UsageError(f"{kind} needs a {field_kind} field and a {domain_kind}; "
                         f"got a {got_f} field {field!r} and a {got_d} {domain!r}")
    result = fn(_SAMPLERS[domain_kind](n or _DEFAULT_N[domain_kind]), F, D)
    out.write(fmt_value(result) + "\n")
    return EXIT_OK


def do_check(model: SceneModel, theorem: str, field: str, domain: str, step=None, n=None, curve_n=None,
             surface_n=None, volume_n=None, threshold=None, out=sys.stdout) -> int:
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    field_kind, domain_kind = THEOREMS[theorem]
    F = _field(model, field)
    D = _domain(model, domain)
    got_f, got_d = model.field_kind(field), model.shape_kind(domain)
    if (got_f, got_d) != (field_kind, domain_kind):
        raise UsageError(f"the {theorem} theorem needs a {field_kind} field and a {domain_kind}; "
                         f"got a {got_f} field {field!r} and a {got_d} {domain!r}")
    # --n sets the resolution of the domain itself
    res = {"curve": curve_n, "surface": surface_n, "volume": volume_n}
    if n and not res[domain_kind]:
        res[domain_kind] = n
    res = {k: v or _DEFAULT_N[k] for k, v in res.items()}
    d = step or DEFAULT_STEP
    if theorem == "gradient":
        report = check_gradient_theorem(F, D, d, curve_sample(res["curve"]))
    elif theorem == "stokes":
        report = check_stokes(F, D, d, surface_sample(res["surface"]), curve_sample(res["curve"]))
    else:
        report = check_divergence_theorem(F, D, d, volume_sample(res["volume"]), surface_sample(res["surface"]))
    out.write(" ".join([fmt_value(report.lhs), fmt_value(report.rhs), fmt(report.absolute_residual),
                        fmt(report.relative_residual)]) + "\n")
    return EXIT_OK if report.passed(threshold or 1e-2) else EXIT_CHECK


def do_plot(model: SceneModel, field: str, slice_name: str, n: int, out_path: str, scale: str = "cbrt",
            out=sys.stdout, err=sys.stderr) -> int:
    if scale not in SCALES:
        raise UsageError(f"unknown scale {scale!r}; expected one of {', '.join(SCALES)}")
    if slice_name not in model.scene.slices:
        raise UsageError(f"undefined slice {slice_name!r}")
    F = _field(model, field)
    if model.field_kind(field) != "vector":
        raise UsageError(f"plot needs a vector field; {field!r} is scalar")
    if n < 2:
        raise UsageError("--n must be at least 2")
    result = render_vector_field(RenderSpec(SCALES[scale], n, out_path), model.slice(slice_name), F)
    for w in result.warnings:
        err.write(f"emcalc: warning: {w}\n")
    out.write(f"{result.path}\n")
    out.write(f"max_magnitude {fmt(result.max_magnitude)}\n")
    return EXIT_OK


def do_run(model: SceneModel, out=sys.stdout, err=sys.stderr) -> int:
    """Execute the scene's queries in order; the exit code is the worst seen."""
    code = EXIT_OK
    for i, q in enumerate(model.scene.queries):
        out.write(f"# query {i}: {q['command']}\n")
        cmd = q["command"]
        if cmd == "eval":
            rc = do_eval(model, q["field"], q["at"], out)
        elif cmd == "integrate":
            rc = do_integrate(model, q["kind"], q["field"], q["domain"], q.get("n"), out)
        elif cmd == "check":
            rc = do_check(model, q["theorem"], q["field"], q["domain"], q.get("step"), q.get("n"),
                          q.get("curve_n"), q.get("surface_n"), q.get("volume_n"), q.get("threshold"), out)
        else:
            rc = do_plot(model, q["field"], q["slice"], q.get("n", 20), q["out"], q.get("scale", "cbrt"), out, err)
        code = max(code, rc)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="emcalc", description="Vector calculus and electro/magnetostatics on scene files.")
    p.add_argument("--version", action="version", version=f"emcalc {__version__} (report format {REPORT_FORMAT_VERSION})")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a field at probe points")
    e.add_argument("scene")
    e.add_argument("--field", required=True)
    e.add_argument("--at", action="append", type=parse_point, required=True, metavar="X,Y,Z",
                   help="probe point (repeatable); write --at=-1,0,0 for negative leading coordinates")

    g = sub.add_parser("integrate", help="compute one of the nine integrals")
    g.add_argument("scene")
    g.add_argument("--kind", required=True, choices=list(INTEGRALS), metavar="KIND")
    g.add_argument("--field", required=True)
    g.add_argument("--domain", required=True)
    g.add_argument("--n", type=_positive_int)

    c = sub.add_parser("check", help="check the gradient, Stokes or divergence theorem")
    c.add_argument("scene")
    c.add_argument("--theorem", required=True, choices=list(THEOREMS))
    c.add_argument("--field", required=True)
    c.add_argument("--domain", required=True)
    c.add_argument("--step", type=_positive_float)
    c.add_argument("--n", type=_positive_int, help="resolution of the domain's own sampler")
    c.add_argument("--curve-n", type=_positive_int)
    c.add_argument("--surface-n", type=_positive_int)
    c.add_argument("--volume-n", type=_positive_int)
    c.add_argument("--threshold", type=_positive_float, default=1e-2)

    pl = sub.add_parser("plot", help="render a vector field on a plane slice as SVG")
    pl.add_argument("scene")
    pl.add_argument("--field", required=True)
    pl.add_argument("--slice", required=True)
    pl.add_argument("--n", type=_positive_int, default=20)
    pl.add_argument("--out", required=True)
    pl.add_argument("--scale", choices=list(SCALES), default="cbrt")

    r = sub.add_parser("run", help="execute the queries listed in the scene")
    r.add_argument("scene")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        model = SceneModel(load_scene(args.scene))
        if args.command == "eval":
            return do_eval(model, args.field, args.at, out)
        if args.command == "integrate":
            return do_integrate(model, args.kind, args.field, args.domain, args.n, out)
        if args.command == "check":
            return do_check(model, args.theorem, args.field, args.domain, args.step, args.n, args.curve_n,
                            args.surface_n, args.volume_n, args.threshold, out)
        if args.command == "plot":
            return do_plot(model, args.field, args.slice, args.n, args.out, args.scale, out, err)
        return do_run(model, out, err)
    except SceneError as exc:
        err.write(f"emcalc: error: invalid scene {args.scene}:\n")
        for e in exc.errors:
            err.write(f"  {e}\n")
        return EXIT_USAGE
    except UsageError as exc:
        err.write(f"emcalc: error: {exc}\n")
        return EXIT_USAGE
    except (FieldEvaluationError, DomainError) as exc:
        err.write(f"emcalc: error: {exc}\n")
        return EXIT_RUNTIME
    except OSError as exc:
        err.write(f"emcalc: error: {exc}\n")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
