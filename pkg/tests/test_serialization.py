"""test_serialization.py - Test cases for reading and writing workbench
documents."""

# Get packages.
import copy
import json
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.closed import self_enriched_duals
from enriched_workbench.enriched_core import (
    structure_tables, verify_vcategory)
from enriched_workbench.errors import ParseError
from enriched_workbench.module_correspondence import superalgebra_tensoring
from enriched_workbench.serialization import (
    dumps, duals_from_json, load_json, morphism_from_json, tensoring_from_json,
    tensoring_to_json, vcat_from_json, vcat_to_json, vmonoidal_from_json,
    vmonoidal_to_json, window_from_json, write_atomic)

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def cliff_json(cliff):
    """The Clifford category as a document."""
    return vcat_to_json(cliff)


#####################################################################
# Test functions.
def test_vcat_read_back(cliff, cliff_json):
    """A written category reads back to identical tables."""
    C = vcat_from_json(json.loads(dumps(cliff_json)))
    assert structure_tables(C) == structure_tables(cliff)
    assert verify_vcategory(C).passed


def test_vcat_name(cliff_json):
    """The optional name field labels the category."""
    assert vcat_from_json(dict(cliff_json, name="Cliff")).name == "Cliff"
    assert vcat_from_json(cliff_json, name="A").name == "A"


def test_missing_entries(cliff_json):
    """Incomplete tables are rejected with the missing keys."""
    data = copy.deepcopy(cliff_json)
    data["composition"] = []
    with pytest.raises(ParseError, match="composition"):
        vcat_from_json(data)


def test_unknown_object(cliff_json):
    """Labels must be declared objects; the path points at the field."""
    data = copy.deepcopy(cliff_json)
    data["hom"][0]["from"] = "nowhere"
    with pytest.raises(ParseError) as error:
        vcat_from_json(data)
    assert error.value.path == "$.hom[0].from"


def test_duplicate_objects(cliff_json):
    """Object labels are unique."""
    with pytest.raises(ParseError):
        vcat_from_json(dict(cliff_json, objects=["*", "*"]))


def test_morphism_scalar_order(svec):
    """Scalars must live in the base's cyclotomic field."""
    data = {"domain": [0], "codomain": [0],
            "blocks": [{"grade": 0,
                        "matrix": [[{"m": 4, "coeffs": {"1": "1/1"}}]]}]}
    with pytest.raises(ParseError):
        morphism_from_json(svec, data)


def test_morphism_grade_absent(svec):
    """A block needs summands of its grade on both sides."""
    data = {"domain": [0], "codomain": [0],
            "blocks": [{"grade": 1,
                        "matrix": [[{"m": 2, "coeffs": {"0": "1/1"}}]]}]}
    with pytest.raises(ParseError) as error:
        morphism_from_json(svec, data)
    assert error.value.path == "$.blocks[0]"


def test_morphism_bad_scalar(svec):
    """Malformed rationals name their matrix entry."""
    data = {"domain": [0], "codomain": [0],
            "blocks": [{"grade": 0,
                        "matrix": [[{"m": 2, "coeffs": {"0": "x/y"}}]]}]}
    with pytest.raises(ParseError):
        morphism_from_json(svec, data)


def test_tensoring_read_back(cliff, cliff_json):
    """Witnesses read back against the category they belong to."""
    C = vcat_from_json(cliff_json)
    data = tensoring_to_json(superalgebra_tensoring(cliff))
    T = tensoring_from_json(C, data)
    assert len(T.scope) == 2
    assert T.validate().passed


def test_tensoring_unknown_target(cliff, cliff_json):
    """A target outside the category is rejected."""
    C = vcat_from_json(cliff_json)
    data = tensoring_to_json(superalgebra_tensoring(cliff))
    data[1]["target"] = "elsewhere"
    with pytest.raises(ParseError) as error:
        tensoring_from_json(C, data)
    assert error.value.path == "$[1].target"


def test_window(triv, svec):
    """Windows list a base object and a nonzero weight."""
    window = window_from_json(triv, [{"base": "*", "weight": [1]},
                                     {"base": "*", "weight": {"0": 1,
                                                              "1": 1}}])
    assert [str(x) for x in window] == ["*◀d1", "*◀d0+d1"]
    with pytest.raises(ParseError):
        window_from_json(triv, [{"base": "*", "weight": []}])


def test_vmonoidal_with_duals(vhat_monoidal):
    """Monoidal documents carry their duals."""
    data = json.loads(dumps(vmonoidal_to_json(
        vhat_monoidal, self_enriched_duals(vhat_monoidal))))
    M = vmonoidal_from_json(data)
    assert M.unit == "d0"
    assert M.tensor_obj("d1", "d1") == "d0"
    assert duals_from_json(M, data["duals"]).verify().passed


def test_load_json_syntax_error(tmp_path):
    """Syntax errors carry file, line and column."""
    path = tmp_path / "bad.json"
    path.write_text('{\n  "objects": [\n', encoding="utf-8")
    with pytest.raises(ParseError) as error:
        load_json(path)
    assert error.value.path.startswith("bad.json:")


def test_load_json_missing_file(tmp_path):
    """Unreadable files are parse errors."""
    with pytest.raises(ParseError):
        load_json(tmp_path / "absent.json")


def test_write_atomic(tmp_path):
    """Writes land in one piece, newline-terminated, with no leftovers."""
    path = tmp_path / "out" / "doc.json"
    write_atomic(path, dumps({"b": 1, "a": 2}))
    assert path.read_text(encoding="utf-8") == \
        '{\n  "a": 2,\n  "b": 1\n}\n'
    assert [p.name for p in path.parent.iterdir()] == ["doc.json"]


if __name__ == "__main__":
    pytest.main()
