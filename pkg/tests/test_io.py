"""JSON schemas: round trips, scalar rules, error paths, builtin references.

Every serializer is checked against its parser byte-for-byte, and every
rejection carries a $.path so a bad entry can be found in a large file.
"""

import json
from fractions import Fraction

import pytest

from hopfforge import fixtures, io
from hopfforge.errors import ParseError, SchemaError, UsageError
from hopfforge.yd import projection_yd


# -- scalars ---------------------------------------------------------------


def test_scalar_forms():
    assert io.parse_scalar(3, "$") == Fraction(3)
    assert io.parse_scalar("-2/7", "$") == Fraction(-2, 7)
    assert io.scalar_to_json(Fraction(3, 2)) == "3/2"
    assert io.scalar_to_json(Fraction(4, 2)) == 2


def test_scalar_rejects_floats():
    with pytest.raises(ParseError, match="inexact"):
        io.parse_scalar(0.5, "$.mul[0][0]")


def test_scalar_rejects_bools():
    with pytest.raises(ParseError):
        io.parse_scalar(True, "$")


def test_scalar_rejects_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        io.parse_scalar("1/0", "$")


# -- round trips -------------------------------------------------------------


def _roundtrip(obj, kind):
    doc = io.serialize(obj)
    s1 = io.dump_json(doc)
    parsed = io.parse_definition(s1)
    assert parsed.kind == kind
    assert io.dump_json(io.serialize(parsed.value)) == s1
    return parsed.value


def test_hopf_roundtrip(sweedler):
    h = _roundtrip(sweedler, "hopf")
    assert h.space.labels == sweedler.space.labels
    assert h.mul == sweedler.mul and h.antipode == sweedler.antipode


def test_group_roundtrip():
    g = _roundtrip(fixtures.builtin_raw("s3"), "group")
    assert g.labels == fixtures.builtin_raw("s3").labels


def test_projection_roundtrip(proj_sweedler):
    p = _roundtrip(proj_sweedler, "projection")
    assert p.proj.lin == proj_sweedler.proj.lin


def test_yd_roundtrip(proj_sweedler):
    v = projection_yd(proj_sweedler)
    w = _roundtrip(v, "yd_module")
    # parsed carriers get fresh v0..vn labels; content must survive
    assert w.action.to_rows() == v.action.to_rows()
    assert w.coaction.to_rows() == v.coaction.to_rows()


def test_crossed_module_roundtrip():
    _roundtrip(fixtures.crossed_module("c2-id"), "crossed_module")


def test_simplicial_roundtrip(nerve_c2_id):
    t = _roundtrip(nerve_c2_id, "simplicial")
    assert [l.dim for l in t.levels] == [2, 4, 8, 16]


def test_parse_definition_accepts_dict_text_and_path(tmp_path, sweedler):
    doc = io.serialize(sweedler)
    text = io.dump_json(doc)
    f = tmp_path / "h.json"
    f.write_text(text)
    for source in (doc, text, str(f)):
        assert io.parse_definition(source).kind == "hopf"


def test_dump_json_deterministic(sweedler):
    doc = io.serialize(sweedler)
    a, b = io.dump_json(doc), io.dump_json(doc)
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == doc


# -- kind detection -----------------------------------------------------------


def test_detect_kind_by_distinguishing_key():
    assert io.detect_kind({"mul": []}) == "hopf"
    assert io.detect_kind({"table": []}) == "group"
    assert io.detect_kind({"proj": []}) == "projection"
    assert io.detect_kind({"coaction": []}) == "yd_module"
    assert io.detect_kind({"boundary": []}) == "crossed_module"
    assert io.detect_kind({"levels": []}) == "simplicial"


def test_unrecognised_document_rejected():
    with pytest.raises((SchemaError, ParseError)):
        io.parse_definition({"frobnicate": 1})


# -- error paths ----------------------------------------------------------


def _sweedler_doc():
    return io.serialize(fixtures.builtin_raw("sweedler"))


def test_bad_rational_reports_exact_path():
    doc = _sweedler_doc()
    doc["mul"][0][0] = "1/0"
    with pytest.raises(ParseError, match=r"\$\.mul\[0\]\[0\]"):
        io.parse_definition(doc)


def test_wrong_matrix_shape_reports_path():
    doc = _sweedler_doc()
    doc["comul"] = doc["comul"][:-1]
    with pytest.raises(SchemaError, match=r"\$\.comul"):
        io.parse_definition(doc)


def test_missing_field_rejected():
    doc = _sweedler_doc()
    del doc["counit"]
    with pytest.raises((SchemaError, ParseError)):
        io.parse_definition(doc)


def test_wrong_field_marker_rejected():
    doc = _sweedler_doc()
    doc["field"] = "R"
    with pytest.raises(SchemaError):
        io.parse_definition(doc)


# -- builtin references --------------------------------------------------------


def test_builtin_reference_in_projection_slot(proj_sweedler):
    doc = io.serialize(proj_sweedler)
    doc["big"] = {"builtin": "sweedler"}
    p = io.parse_definition(doc).value
    assert p.big.space.labels == proj_sweedler.big.space.labels


def test_group_builtin_coerced_in_hopf_slot(proj_sign_s3):
    doc = io.serialize(proj_sign_s3)
    doc["big"] = {"builtin": "s3"}
    doc["small"] = {"builtin": "c2"}
    p = io.parse_definition(doc).value
    assert p.big.dim == 6 and p.small.dim == 2


def test_unknown_builtin_lists_the_registry():
    doc = io.serialize(fixtures.builtin_raw("proj-sweedler"))
    doc["big"] = {"builtin": "atlantis"}
    with pytest.raises(UsageError, match="sweedler"):
        io.parse_definition(doc)


def test_builtin_registry_kinds():
    kinds = {name: fixtures.builtin_kind(name) for name in fixtures.BUILTIN_NAMES}
    assert kinds["sweedler"] == "hopf"
    assert kinds["s3"] == "group"
    assert kinds["proj-sign-s3"] == "projection"
    assert kinds["nerve-s3-id"] == "simplicial"
    assert fixtures.builtin_is_large("nerve-s3-id")
    assert not fixtures.builtin_is_large("nerve-c2-id")
    with pytest.raises(UsageError):
        fixtures.builtin_kind("atlantis")
