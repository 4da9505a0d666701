import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emcalc.fields import VectorField
from emcalc.geometry import Position, Vec3
from emcalc.scene import Scene, SceneError, SceneModel, parse_scene, serialize_scene

SCENES = Path(__file__).resolve().parent.parent / "scenes"


def errors_of(doc) -> list[str]:
    text = doc if isinstance(doc, str) else json.dumps(doc)
    with pytest.raises(SceneError) as info:
        parse_scene(text)
    return info.value.errors


def test_minimal_scene():
    s = parse_scene('{"charges":[{"type":"point","q":1e-9,"at":[0,0,0]}]}')
    assert len(s.charges) == 1
    assert len(SceneModel(s).charges().members) == 1


def test_dangling_reference_named():
    errs = errors_of({"currents": [{"type": "line", "current": 1, "along": "loopX"}]})
    assert any("loopX" in e and e.startswith("currents[0].along") for e in errs)


def test_homework_scene():
    s = parse_scene((SCENES / "homework.json").read_text())
    m = SceneModel(s)
    F = m.field("F")
    assert isinstance(F, VectorField)
    assert F(Position(1, 2, 3)) == Vec3(0, -3, 2)
    rect = m.shape("rect")
    assert (rect.s_lo, rect.s_hi) == (0, 2)
    assert m.shape("edge")(0.0) == Position(0, 0, -4)
    assert m.shape("edge")(2.0) == Position(0, 2, 4)


def test_syntax_error_location():
    errs = errors_of('{\n  "shapes": {\n    "a": \n  }\n}')
    assert errs[0].startswith("line 4 column 3")


@pytest.mark.parametrize("doc,where", [
    ({"charges": [{"type": "blob"}]}, "charges[0].type"),
    ({"shapes": {"c": {"type": "circle", "radius": -1}}}, "shapes.c.radius"),
    ({"shapes": {"c": {"type": "circle"}}}, "shapes.c"),
    ({"shapes": {"c": {"type": "circle", "radius": 1, "colour": 2}}}, "shapes.c"),
    ({"fields": {"f": "x +"}}, "fields.f.expr"),
    ({"fields": {"E": "eField of q9"}}, "fields.E.charges"),
    ({"fields": {"f": {"type": "magic"}}}, "fields.f.type"),
    ({"slices": {"s": {"plane": "ab"}}}, "slices.s.plane"),
    ({"slices": {"s": {"plane": "xy", "u": [1, 0]}}}, "slices.s.u"),
    ({"queries": [{"command": "dance"}]}, "queries[0].command"),
    ({"queries": [{"command": "eval", "field": "nope", "at": [[0, 0, 0]]}]}, "queries[0].field"),
    ({"shapes": {"r": {"type": "rectangle", "corner": [0, 0, 0], "edge1": [1, 0, 0], "edge2": [2, 0, 0]}}},
     "shapes.r"),
    ({"shapes": {"c": {"type": "curve", "position": ["1/t", "0", "0"], "t": [0, 1]}}}, "shapes.c"),
    ({"shapes": {"c": {"type": "circle", "radius": 1}, "b": {"type": "boundary", "of": "c"}}}, "shapes.b.of"),
    ({"shapes": {"c": {"type": "circle", "radius": 1}},
      "charges": [{"type": "surface", "density": "1", "on": "c"}]}, "charges[0].on"),
    ({"extra": 1}, "(document)"),
    ({"constants": {"mu0": 0}}, "constants.mu0"),
])
def test_errors_have_locations(doc, where):
    errs = errors_of(doc)
    assert any(e.startswith(where) for e in errs), errs


def test_all_errors_reported_together():
    errs = errors_of({"shapes": {"a": {"type": "circle", "radius": -1}}, "fields": {"f": "x +"}})
    assert len(errs) == 2


def test_shorthand_normalized():
    s = parse_scene(json.dumps({"charges": [{"type": "point", "name": "q1", "q": 1, "at": [0, 0, 0]},
                                            {"type": "point", "name": "q2", "q": 1, "at": [1, 0, 0]}],
                                "fields": {"E": "eField of q1, q2", "all": "eField", "g": "x*y"}}))
    assert s.fields == {"E": {"type": "eField", "charges": ["q1", "q2"]}, "all": {"type": "eField"},
                        "g": {"type": "expression", "expr": "x*y"}}


def test_field_selects_named_sources():
    s = parse_scene(json.dumps({"charges": [{"type": "point", "name": "a", "q": 1e-9, "at": [0, 0, 0]},
                                            {"type": "point", "name": "b", "q": 5e-9, "at": [0, 0, 9]}],
                                "fields": {"Ea": "eField of a", "E": "eField"}}))
    m = SceneModel(s)
    assert m.field("Ea")(Position(1, 0, 0)).z == 0
    assert m.field("E")(Position(1, 0, 0)).z != 0


def test_inline_shapes_and_densities():
    s = parse_scene(json.dumps({
        "shapes": {
            "tri": {"type": "surface", "position": ["s", "t", "0"], "s": [0, 1], "t": [0, "s"]},
            "tet": {"type": "volume", "position": ["s", "t", "u"], "s": [0, 1], "t": [0, "1 - s"],
                    "u": [0, "1 - s - t"]},
        },
        "charges": [{"type": "surface", "density": "2", "on": "tri", "n": 10},
                    {"type": "volume", "density": 6, "in": "tet", "n": 10}],
    }))
    from emcalc.em import total_charge

    m = SceneModel(s)
    assert total_charge(m.charges()) == pytest.approx(2.0, rel=2e-2)


@pytest.mark.parametrize("name", ["homework.json", "loop.json", "point_charge.json"])
def test_example_scenes_round_trip(name):
    s = parse_scene((SCENES / name).read_text())
    assert parse_scene(serialize_scene(s)) == s


# random valid scenes for the round-trip property

num = st.floats(-5, 5, allow_nan=False).map(lambda x: round(x, 6))
pos = st.floats(0.1, 5).map(lambda x: round(x, 6))
vec = st.lists(num, min_size=3, max_size=3)
shape = st.one_of(
    st.builds(lambda r, c: {"type": "circle", "radius": r, "center": c}, pos, vec),
    st.builds(lambda a, b: {"type": "segment", "from": a, "to": [a[0] + 1, a[1], a[2]]}, vec, vec),
    st.builds(lambda r: {"type": "sphere", "radius": r}, pos),
    st.builds(lambda r, h: {"type": "cylinder", "radius": r, "height": h}, pos, pos),
    st.just({"type": "box"}),
    st.just({"type": "curve", "position": ["cos(t)", "sin(t)", "t/3"], "t": [0, "2*pi"]}),
)
expr = st.sampled_from(["x*y", "-z*yhat + y*zhat", "sin(x)*xhat", "1", "x^2 + y^2"])


@st.composite
def scenes(draw):
    shapes = draw(st.dictionaries(st.sampled_from(["a", "b", "c", "d"]), shape, max_size=4))
    charges = draw(st.lists(st.builds(lambda q, at: {"type": "point", "q": q, "at": at}, num, vec), max_size=3))
    fields = draw(st.dictionaries(st.sampled_from(["f", "g", "h"]), expr, max_size=3))
    doc = {"shapes": shapes, "charges": charges, "fields": fields,
           "slices": {"s": {"plane": draw(st.sampled_from(["xy", "yz", "xz"]))}}}
    if fields and shapes:
        doc["queries"] = [{"command": "integrate", "kind": "scalarLineIntegral",
                           "field": sorted(fields)[0], "domain": sorted(shapes)[0]}]
    return json.dumps(doc)


@settings(max_examples=40, deadline=None)
@given(scenes())
def test_round_trip_property(text):
    s = parse_scene(text)
    assert isinstance(s, Scene)
    assert parse_scene(serialize_scene(s)) == s
    assert serialize_scene(parse_scene(serialize_scene(s))) == serialize_scene(s)
