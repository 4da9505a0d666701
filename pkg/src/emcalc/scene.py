"""JSON scene files: sources, shapes, fields, slices and queries.

`parse_scene` validates a document and returns a `Scene` holding the
normalized records; `serialize_scene` writes it back so that
``parse_scene(serialize_scene(s)) == s``. `SceneModel` turns the records
into live domains, distributions and fields. The schema is described in
``docs/scene-schema.md``.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

from . import domains as dom
from .calculus import INTEGRALS
from .em import (
    EPSILON_0,
    MU_0,
    LineCharge,
    LineCurrent,
    MultipleCharges,
    MultipleCurrents,
    PointCharge,
    SurfaceCharge,
    VolumeCharge,
    b_field,
    e_field,
)
from .expr import Expression, ExpressionSyntaxError
from .fields import ScalarField, VectorField
from .geometry import DomainError, Position
from .viz import SCALES, PlaneSlice

__all__ = ["SceneError", "Scene", "SceneModel", "parse_scene", "serialize_scene", "load_scene",
           "SHAPE_KINDS", "THEOREMS"]

SECTIONS = ("constants", "charges", "currents", "shapes", "fields", "slices", "queries")

SHAPE_KINDS = {
    "segment": "curve",
    "circle": "curve",
    "helix": "curve",
    "curve": "curve",
    "boundary": "curve",
    "rectangle": "surface",
    "disk": "surface",
    "sphere": "surface",
    "surface": "surface",
    "ball": "volume",
    "cylinder": "volume",
    "box": "volume",
    "volume": "volume",
}

THEOREMS = {"gradient": ("scalar", "curve"), "stokes": ("vector", "surface"), "divergence": ("vector", "volume")}


class SceneError(ValueError):
    """Invalid scene; `errors` lists every problem with its location."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("\n".join(self.errors))


@dataclass
class Scene:
    constants: dict = field(default_factory=dict)
    charges: list = field(default_factory=list)
    currents: list = field(default_factory=list)
    shapes: dict = field(default_factory=dict)
    fields: dict = field(default_factory=dict)
    slices: dict = field(default_factory=dict)
    queries: list = field(default_factory=list)


def serialize_scene(scene: Scene) -> str:
    return json.dumps(asdict(scene), indent=2) + "\n"


def load_scene(path) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


# validation helpers; each appends to `errs` and returns a cleaned value


class _Checker:
    def __init__(self):
        self.errors: list[str] = []

    def err(self, where: str, msg: str):
        self.errors.append(f"{where}: {msg}")

    def number(self, rec, key, where, required=True, default=None, positive=False):
        if key not in rec:
            if required:
                self.err(where, f"missing required key {key!r}")
            return default
        v = rec[key]
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            self.err(f"{where}.{key}", f"expected a finite number, got {v!r}")
            return default
        if positive and not v > 0:
            self.err(f"{where}.{key}", f"must be positive, got {v!r}")
        return v

    def integer(self, rec, key, where, required=False, default=None, minimum=1):
        if key not in rec:
            if required:
                self.err(where, f"missing required key {key!r}")
            return default
        v = rec[key]
        if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
            self.err(f"{where}.{key}", f"expected an integer >= {minimum}, got {v!r}")
            return default
        return v

    def vector(self, rec, key, where, required=True):
        if key not in rec:
            if required:
                self.err(where, f"missing required key {key!r}")
            return None
        v = rec[key]
        if (not isinstance(v, list) or len(v) != 3
                or any(isinstance(c, bool) or not isinstance(c, (int, float)) for c in v)):
            self.err(f"{where}.{key}", f"expected [x, y, z], got {v!r}")
            return None
        return v

    def expression(self, value, where, variables, kind=None):
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            value = repr(float(value))
        if not isinstance(value, str):
            self.err(where, f"expected an expression string, got {value!r}")
            return None
        try:
            e = Expression(value, variables)
        except ExpressionSyntaxError as exc:
            self.err(where, str(exc))
            return None
        if kind and e.kind != kind:
            self.err(where, f"expected a {kind} expression, got a {e.kind} one: {value!r}")
        return e

    def keys(self, rec, where, allowed):
        for k in rec:
            if k not in allowed:
                self.err(where, f"unknown key {k!r}")

    def name_list(self, rec, key, where):
        v = rec.get(key)
        if v is None:
            return None
        if not isinstance(v, list) or not all(isinstance(s, str) for s in v):
            self.err(f"{where}.{key}", "expected a list of names")
            return None
        return v


_SHAPE_KEYS = {
    "segment": {"from", "to"},
    "circle": {"radius", "center", "axis"},
    "helix": {"radius", "pitch", "turns", "center", "axis"},
    "rectangle": {"corner", "edge1", "edge2"},
    "disk": {"radius", "center", "axis"},
    "sphere": {"radius", "center"},
    "ball": {"radius", "center"},
    "cylinder": {"radius", "height", "center", "axis"},
    "box": {"corner", "edge1", "edge2", "edge3"},
    "curve": {"position", "t"},
    "surface": {"position", "s", "t"},
    "volume": {"position", "s", "t", "u"},
    "boundary": {"of"},
}

_PARAM_LIMIT_VARS = {"s": (), "t": ("s",), "u": ("s", "t")}


def _check_shape(ck: _Checker, name: str, rec) -> None:
    where = f"shapes.{name}"
    if not isinstance(rec, dict):
        ck.err(where, "expected an object")
        return
    kind = rec.get("type")
    if kind not in _SHAPE_KEYS:
        ck.err(f"{where}.type", f"unknown shape type {kind!r}; expected one of {sorted(_SHAPE_KEYS)}")
        return
    ck.keys(rec, where, _SHAPE_KEYS[kind] | {"type"})
    for key in ("radius", "height", "turns"):
        if key in _SHAPE_KEYS[kind]:
            ck.number(rec, key, where, required=key != "turns", positive=True)
    if kind == "helix":
        ck.number(rec, "pitch", where)
    for key in ("from", "to", "center", "axis", "corner", "edge1", "edge2", "edge3"):
        if key in _SHAPE_KEYS[kind]:
            ck.vector(rec, key, where, required=key in ("from", "to") or (kind == "rectangle" and key != "center"))
    if kind in ("curve", "surface", "volume"):
        params = {"curve": ("t",), "surface": ("s", "t"), "volume": ("s", "t", "u")}[kind]
        pos = rec.get("position")
        if not isinstance(pos, list) or len(pos) != 3:
            ck.err(f"{where}.position", "expected three coordinate expressions [x, y, z]")
        else:
            for i, p in enumerate(pos):
                ck.expression(p, f"{where}.position[{i}]", params, "scalar")
        for i, param in enumerate(params):
            lim = rec.get(param)
            if not isinstance(lim, list) or len(lim) != 2:
                ck.err(f"{where}.{param}", "expected limits [lo, hi]")
                continue
            outer = ("t",)[:0] if kind == "curve" else _PARAM_LIMIT_VARS[param]
            for j, e in enumerate(lim):
                ck.expression(e, f"{where}.{param}[{j}]", outer, "scalar")
    if kind == "boundary" and not isinstance(rec.get("of"), str):
        ck.err(f"{where}.of", "expected the name of a surface shape")


_CHARGE_KEYS = {
    "point": {"q", "at"},
    "line": {"density", "along", "n"},
    "surface": {"density", "on", "n"},
    "volume": {"density", "in", "n"},
    "multiple": {"members"},
}
_CHARGE_DOMAIN = {"line": ("along", "curve"), "surface": ("on", "surface"), "volume": ("in", "volume")}


def _check_charge(ck: _Checker, where: str, rec, shape_kinds: dict) -> None:
    if not isinstance(rec, dict):
        ck.err(where, "expected an object")
        return
    kind = rec.get("type")
    if kind not in _CHARGE_KEYS:
        ck.err(f"{where}.type", f"unknown charge type {kind!r}; expected one of {sorted(_CHARGE_KEYS)}")
        return
    ck.keys(rec, where, _CHARGE_KEYS[kind] | {"type", "name"})
    if kind == "point":
        ck.number(rec, "q", where)
        ck.vector(rec, "at", where)
    elif kind == "multiple":
        members = rec.get("members")
        if not isinstance(members, list):
            ck.err(f"{where}.members", "expected a list of charge records")
        else:
            for i, m in enumerate(members):
                _check_charge(ck, f"{where}.members[{i}]", m, shape_kinds)
    else:
        key, want = _CHARGE_DOMAIN[kind]
        if "density" not in rec:
            ck.err(where, "missing required key 'density'")
        else:
            ck.expression(rec["density"], f"{where}.density", ("x", "y", "z"), "scalar")
        _check_domain_ref(ck, f"{where}.{key}", rec.get(key), want, shape_kinds)
        ck.integer(rec, "n", where)


def _check_current(ck: _Checker, where: str, rec, shape_kinds: dict) -> None:
    if not isinstance(rec, dict):
        ck.err(where, "expected an object")
        return
    kind = rec.get("type")
    if kind == "line":
        ck.keys(rec, where, {"type", "name", "current", "along", "n"})
        ck.number(rec, "current", where)
        _check_domain_ref(ck, f"{where}.along", rec.get("along"), "curve", shape_kinds)
        ck.integer(rec, "n", where)
    elif kind == "multiple":
        ck.keys(rec, where, {"type", "name", "members"})
        members = rec.get("members")
        if not isinstance(members, list):
            ck.err(f"{where}.members", "expected a list of current records")
        else:
            for i, m in enumerate(members):
                _check_current(ck, f"{where}.members[{i}]", m, shape_kinds)
    else:
        ck.err(f"{where}.type", f"unknown current type {kind!r}; expected 'line' or 'multiple'")


def _check_domain_ref(ck: _Checker, where: str, name, want: str | None, shape_kinds: dict) -> None:
    if not isinstance(name, str):
        ck.err(where, "expected a shape name")
    elif name not in shape_kinds:
        ck.err(where, f"undefined shape {name!r}")
    elif want and shape_kinds[name] and shape_kinds[name] != want:
        ck.err(where, f"shape {name!r} is a {shape_kinds[name]}, expected a {want}")


def _normalize_field(value):
    """Expand string shorthands into field records."""
    if not isinstance(value, str):
        return value
    text = value.strip()
    for kind, key in (("eField", "charges"), ("bField", "currents")):
        if text == kind:
            return {"type": kind}
        if text.startswith(kind + " of "):
            names = [n.strip() for n in text[len(kind) + 4:].split(",") if n.strip()]
            return {"type": kind, key: names}
    return {"type": "expression", "expr": value}


def _check_field(ck: _Checker, name: str, rec, charge_names: set, current_names: set):
    where = f"fields.{name}"
    if not isinstance(rec, dict):
        ck.err(where, "expected an object or a string")
        return None
    kind = rec.get("type")
    if kind == "expression":
        ck.keys(rec, where, {"type", "expr"})
        e = ck.expression(rec.get("expr"), f"{where}.expr", ("x", "y", "z"))
        return e.kind if e else None
    if kind in ("eField", "bField"):
        key, known = ("charges", charge_names) if kind == "eField" else ("currents", current_names)
        ck.keys(rec, where, {"type", key})
        for n in ck.name_list(rec, key, where) or []:
            if n not in known:
                ck.err(f"{where}.{key}", f"undefined {key[:-1]} {n!r}")
        return "vector"
    ck.err(f"{where}.type", f"unknown field type {kind!r}; expected expression, eField or bField")
    return None


def _check_slice(ck: _Checker, name: str, rec) -> None:
    where = f"slices.{name}"
    if not isinstance(rec, dict):
        ck.err(where, "expected an object")
        return
    ck.keys(rec, where, {"plane", "offset", "origin", "u_axis", "v_axis", "u", "v"})
    if "plane" in rec:
        if rec["plane"] not in ("xy", "yz", "xz"):
            ck.err(f"{where}.plane", f"expected xy, yz or xz, got {rec['plane']!r}")
        ck.number(rec, "offset", where, required=False)
    else:
        for key in ("origin", "u_axis", "v_axis"):
            ck.vector(rec, key, where)
    for key in ("u", "v"):
        lim = rec.get(key, [-2.0, 2.0])
        if (not isinstance(lim, list) or len(lim) != 2
                or any(isinstance(c, bool) or not isinstance(c, (int, float)) for c in lim)
                or not lim[0] < lim[1]):
            ck.err(f"{where}.{key}", f"expected a range [lo, hi] with lo < hi, got {lim!r}")


_QUERY_KEYS = {
    "eval": ({"field", "at"}, set()),
    "integrate": ({"kind", "field", "domain"}, {"n"}),
    "check": ({"theorem", "field", "domain"}, {"step", "n", "curve_n", "surface_n", "volume_n", "threshold"}),
    "plot": ({"field", "slice", "out"}, {"n", "scale"}),
}


def _check_query(ck: _Checker, i: int, rec, field_kinds: dict, shape_kinds: dict, slices: dict) -> None:
    where = f"queries[{i}]"
    if not isinstance(rec, dict):
        ck.err(where, "expected an object")
        return
    cmd = rec.get("command")
    if cmd not in _QUERY_KEYS:
        ck.err(f"{where}.command", f"unknown command {cmd!r}; expected one of {sorted(_QUERY_KEYS)}")
        return
    required, optional = _QUERY_KEYS[cmd]
    ck.keys(rec, where, required | optional | {"command"})
    for key in sorted(required):
        if key not in rec:
            ck.err(where, f"missing required key {key!r}")
    fname = rec.get("field")
    if "field" in rec and fname not in field_kinds:
        ck.err(f"{where}.field", f"undefined field {fname!r}")
    if "domain" in rec:
        _check_domain_ref(ck, f"{where}.domain", rec["domain"], None, shape_kinds)
    if cmd == "eval" and "at" in rec:
        at = rec["at"]
        if not isinstance(at, list) or not at or not all(
                isinstance(p, list) and len(p) == 3 and all(isinstance(c, (int, float)) and not isinstance(c, bool)
                                                            for c in p) for p in at):
            ck.err(f"{where}.at", "expected a non-empty list of [x, y, z] points")
    if cmd == "integrate" and rec.get("kind") not in INTEGRALS and "kind" in rec:
        ck.err(f"{where}.kind", f"unknown integral {rec['kind']!r}")
    if cmd == "check" and rec.get("theorem") not in THEOREMS and "theorem" in rec:
        ck.err(f"{where}.theorem", f"unknown theorem {rec['theorem']!r}; expected one of {sorted(THEOREMS)}")
    if cmd == "plot":
        if "slice" in rec and rec["slice"] not in slices:
            ck.err(f"{where}.slice", f"undefined slice {rec['slice']!r}")
        if "scale" in rec and rec["scale"] not in SCALES:
            ck.err(f"{where}.scale", f"unknown scale {rec['scale']!r}; expected one of {sorted(SCALES)}")
        ck.integer(rec, "n", where, minimum=2)
    for key in ("n", "curve_n", "surface_n", "volume_n"):
        if cmd != "plot":
            ck.integer(rec, key, where)
    for key in ("step", "threshold"):
        if key in rec:
            ck.number(rec, key, where, positive=True)


def _shape_kinds(ck: _Checker, shapes: dict) -> dict:
    """Domain kind of every shape; boundary shapes resolve through their target."""
    kinds = {}
    for name, rec in shapes.items():
        t = rec.get("type") if isinstance(rec, dict) else None
        kinds[name] = SHAPE_KINDS.get(t)
    for name, rec in shapes.items():
        if isinstance(rec, dict) and rec.get("type") == "boundary":
            target = rec.get("of")
            if isinstance(target, str):
                if target not in shapes:
                    ck.err(f"shapes.{name}.of", f"undefined shape {target!r}")
                elif kinds.get(target) != "surface":
                    ck.err(f"shapes.{name}.of", f"boundary needs a surface; {target!r} is a {kinds.get(target)}")
    return kinds


def _named(records: list) -> set:
    names = set()
    for rec in records:
        if isinstance(rec, dict) and isinstance(rec.get("name"), str):
            names.add(rec["name"])
    return names


def parse_scene(text: str) -> Scene:
    """Parse and validate a scene document; raises `SceneError` listing every problem."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None
    if not isinstance(doc, dict):
        raise SceneError(["(document): expected a JSON object"])
    ck = _Checker()
    for key in doc:
        if key not in SECTIONS:
            ck.err("(document)", f"unknown section {key!r}")
    doc = copy.deepcopy(doc)
    scene = Scene(
        constants=doc.get("constants", {}),
        charges=doc.get("charges", []),
        currents=doc.get("currents", []),
        shapes=doc.get("shapes", {}),
        fields=doc.get("fields", {}),
        slices=doc.get("slices", {}),
        queries=doc.get("queries", []),
    )
    for sec, typ in (("constants", dict), ("charges", list), ("currents", list), ("shapes", dict),
                     ("fields", dict), ("slices", dict), ("queries", list)):
        if not isinstance(getattr(scene, sec), typ):
            ck.err(sec, f"expected a JSON {'object' if typ is dict else 'array'}")
            setattr(scene, sec, typ())

    ck.keys(scene.constants, "constants", {"epsilon0", "mu0"})
    for key in ("epsilon0", "mu0"):
        ck.number(scene.constants, key, "constants", required=False, positive=True)

    for name, rec in scene.shapes.items():
        _check_shape(ck, name, rec)
    shape_kinds = _shape_kinds(ck, scene.shapes)
    for i, rec in enumerate(scene.charges):
        _check_charge(ck, f"charges[{i}]", rec, shape_kinds)
    for i, rec in enumerate(scene.currents):
        _check_current(ck, f"currents[{i}]", rec, shape_kinds)

    scene.fields = {name: _normalize_field(rec) for name, rec in scene.fields.items()}
    charge_names, current_names = _named(scene.charges), _named(scene.currents)
    field_kinds = {name: _check_field(ck, name, rec, charge_names, current_names)
                   for name, rec in scene.fields.items()}
    for name, rec in scene.slices.items():
        _check_slice(ck, name, rec)
    for i, rec in enumerate(scene.queries):
        _check_query(ck, i, rec, field_kinds, shape_kinds, scene.slices)

    if not ck.errors:
        # sampled validation of the domain invariants
        model = SceneModel(scene)
        for name in scene.shapes:
            try:
                model.shape(name)
            except (DomainError, ValueError, ArithmeticError) as exc:
                ck.err(f"shapes.{name}", str(exc))
    if ck.errors:
        raise SceneError(ck.errors)
    return scene


def _param_func(exprs, params):
    def func(*args):
        env = dict(zip(params, args))
        return tuple(e.evaluate(**env) for e in exprs)

    return func


def _limit(value, params):
    e = Expression(repr(float(value)) if isinstance(value, (int, float)) else value, params)
    if not e.names:
        return float(e.evaluate())
    return lambda *args: e.evaluate(**dict(zip(params, args)))


class SceneModel:
    """Live objects built from a validated `Scene`, constructed on demand."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.epsilon0 = float(scene.constants.get("epsilon0", EPSILON_0))
        self.mu0 = float(scene.constants.get("mu0", MU_0))
        self._shapes: dict[str, Any] = {}
        self._fields: dict[str, Any] = {}

    # shapes

    def shape_kind(self, name: str) -> str:
        return SHAPE_KINDS[self.scene.shapes[name]["type"]]

    def shape(self, name: str):
        if name not in self._shapes:
            self._shapes[name] = self._build_shape(name, self.scene.shapes[name])
        return self._shapes[name]

    def _build_shape(self, name: str, rec: dict):
        kind = rec["type"]
        origin = [0.0, 0.0, 0.0]
        zaxis = [0.0, 0.0, 1.0]
        if kind == "segment":
            return dom.segment(rec["from"], rec["to"])
        if kind == "circle":
            return dom.circle(rec["radius"], rec.get("center", origin), rec.get("axis", zaxis))
        if kind == "helix":
            return dom.helix(rec["radius"], rec["pitch"], rec.get("turns", 1.0), rec.get("center", origin),
                             rec.get("axis", zaxis))
        if kind == "rectangle":
            return dom.rectangle(rec["corner"], rec["edge1"], rec["edge2"])
        if kind == "disk":
            return dom.disk(rec["radius"], rec.get("center", origin), rec.get("axis", zaxis))
        if kind == "sphere":
            return dom.sphere(rec["radius"], rec.get("center", origin))
        if kind == "ball":
            return dom.ball(rec["radius"], rec.get("center", origin))
        if kind == "cylinder":
            return dom.cylinder(rec["radius"], rec["height"], rec.get("center", origin), rec.get("axis", zaxis))
        if kind == "box":
            return dom.box(rec.get("corner", origin), rec.get("edge1", [1, 0, 0]), rec.get("edge2", [0, 1, 0]),
                           rec.get("edge3", [0, 0, 1]))
        if kind == "boundary":
            return dom.boundary_of_surface(self.shape(rec["of"]))
        if kind == "curve":
            exprs = [Expression(str(e), ("t",)) for e in rec["position"]]
            return dom.Curve(_param_func(exprs, ("t",)), _limit(rec["t"][0], ()), _limit(rec["t"][1], ()), name=name)
        if kind == "surface":
            exprs = [Expression(str(e), ("s", "t")) for e in rec["position"]]
            return dom.Surface(_param_func(exprs, ("s", "t")), _limit(rec["s"][0], ()), _limit(rec["s"][1], ()),
                               _limit(rec["t"][0], ("s",)), _limit(rec["t"][1], ("s",)), name=name)
        if kind == "volume":
            exprs = [Expression(str(e), ("s", "t", "u")) for e in rec["position"]]
            return dom.Volume(_param_func(exprs, ("s", "t", "u")), _limit(rec["s"][0], ()), _limit(rec["s"][1], ()),
                              _limit(rec["t"][0], ("s",)), _limit(rec["t"][1], ("s",)),
                              _limit(rec["u"][0], ("s", "t")), _limit(rec["u"][1], ("s", "t")), name=name)
        raise AssertionError(kind)

    # sources

    def _charge(self, rec: dict):
        kind = rec["type"]
        if kind == "point":
            return PointCharge(float(rec["q"]), Position(*map(float, rec["at"])))
        if kind == "multiple":
            return MultipleCharges(tuple(self._charge(m) for m in rec["members"]))
        density = _scalar(rec["density"])
        if kind == "line":
            return LineCharge(density, self.shape(rec["along"]), rec.get("n", 1000))
        if kind == "surface":
            return SurfaceCharge(density, self.shape(rec["on"]), rec.get("n", 200))
        return VolumeCharge(density, self.shape(rec["in"]), rec.get("n", 40))

    def _current(self, rec: dict):
        if rec["type"] == "line":
            return LineCurrent(float(rec["current"]), self.shape(rec["along"]), rec.get("n", 1000))
        return MultipleCurrents(tuple(self._current(m) for m in rec["members"]))

    def charges(self, names=None) -> MultipleCharges:
        recs = [r for r in self.scene.charges if names is None or r.get("name") in names]
        return MultipleCharges(tuple(self._charge(r) for r in recs))

    def currents(self, names=None) -> MultipleCurrents:
        recs = [r for r in self.scene.currents if names is None or r.get("name") in names]
        return MultipleCurrents(tuple(self._current(r) for r in recs))

    # fields

    def field_kind(self, name: str) -> str:
        rec = self.scene.fields[name]
        if rec["type"] == "expression":
            return Expression(str(rec["expr"])).kind
        return "vector"

    def field(self, name: str):
        if name not in self._fields:
            rec = self.scene.fields[name]
            if rec["type"] == "eField":
                f = e_field(self.charges(rec.get("charges")), self.epsilon0)
            elif rec["type"] == "bField":
                f = b_field(self.currents(rec.get("currents")), self.mu0)
            else:
                f = _scalar(rec["expr"]) if self.field_kind(name) == "scalar" else _vector(rec["expr"])
            f.name = name
            self._fields[name] = f
        return self._fields[name]

    def slice(self, name: str) -> PlaneSlice:
        rec = self.scene.slices[name]
        u = tuple(rec.get("u", (-2.0, 2.0)))
        v = tuple(rec.get("v", (-2.0, 2.0)))
        if "plane" in rec:
            return getattr(PlaneSlice, rec["plane"])(u, v, float(rec.get("offset", 0.0)))
        return PlaneSlice.plane(rec["origin"], rec["u_axis"], rec["v_axis"], u, v)


def _scalar(value) -> ScalarField:
    from .expr import scalar_field

    return scalar_field(repr(float(value)) if isinstance(value, (int, float)) else value)


def _vector(value) -> VectorField:
    from .expr import vector_field

    return vector_field(value)
