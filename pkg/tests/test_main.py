"""test_main.py - End-to-end tests of the vcwb command line."""

# Get packages.
import json
from pathlib import Path
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.closed import self_enriched_duals
from enriched_workbench.config import WorkbenchConfig, set_config
from enriched_workbench.main import SEARCH_CAVEAT, main
from enriched_workbench.module_correspondence import (
    canonical_tensoring, superalgebra_tensoring)
from enriched_workbench.reports import RunReport
from enriched_workbench.serialization import (
    dumps, tensoring_to_json, vcat_to_json, vmonoidal_to_json)

# Load environment variables
load_dotenv()

GOLDEN = Path(__file__).parent / "golden"


#####################################################################
# Test fixtures.
@pytest.fixture
def write(tmp_path):
    """Write a JSON document into the temporary directory."""
    def _write(name, document):
        path = tmp_path / name
        path.write_text(dumps(document), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def run(capsys):
    """Run vcwb and parse the report it prints."""
    def _run(*argv):
        code = main([str(arg) for arg in argv])
        out = capsys.readouterr().out
        report = RunReport.from_json(out) if out.startswith("{") else None
        return code, report, out
    return _run


@pytest.fixture
def triv_files(write, triv):
    """The trivial category and the window *◀1, *◀Π."""
    return (write("triv.json", vcat_to_json(triv)),
            write("window.json", [{"base": "*", "weight": [0]},
                                  {"base": "*", "weight": [1]}]))


@pytest.fixture
def classify_files(write, svec, vhat_monoidal):
    """V̂ with its duals and the canonical tensoring."""
    M = write("vhat.json", vmonoidal_to_json(
        vhat_monoidal, self_enriched_duals(vhat_monoidal)))
    T = write("tensoring.json", tensoring_to_json(
        canonical_tensoring(vhat_monoidal.vcat, svec.simples())))
    return M, T


def _golden(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


def _read(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


#####################################################################
# Test functions.
def test_complete_matches_golden(run, triv_files, tmp_path):
    """The completion of the trivial category is stable."""
    out = tmp_path / "out.json"
    code, report, _ = run("complete", *triv_files, "--output", out)
    assert code == 0
    assert report.verdict == "pass"
    assert _read(out) == _golden("complete_triv.json")


def test_complete_bless(run, triv_files, tmp_path):
    """--bless writes the same document as --output."""
    out, blessed = tmp_path / "out.json", tmp_path / "blessed.json"
    code, _, _ = run("complete", *triv_files, "--output", out,
                     "--bless", blessed)
    assert code == 0
    assert out.read_text(encoding="utf-8") == \
        blessed.read_text(encoding="utf-8")


def test_complete_deterministic(run, triv_files, tmp_path):
    """Two runs give byte-identical documents."""
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    run("complete", *triv_files, "--output", first)
    run("complete", *triv_files, "--output", second)
    assert first.read_bytes() == second.read_bytes()


def test_complete_threads(run, triv_files, tmp_path):
    """Worker threads do not change the output."""
    serial, threaded = tmp_path / "a.json", tmp_path / "b.json"
    run("complete", *triv_files, "--output", serial)
    set_config(WorkbenchConfig(threads=2))
    run("complete", *triv_files, "--output", threaded)
    assert serial.read_bytes() == threaded.read_bytes()


def test_complete_over_cap(run, write, triv_files):
    """A requested weight above the cap is a coverage failure."""
    weights = write("weights.json", [[0, 1]])
    code, report, _ = run("complete", *triv_files, "--weights", weights,
                          "--dim-cap", 1)
    assert code == 1
    assert [c.law for c in report.checks if c.status == "fail"] == \
        ["coverage"]


def test_classify_matches_golden(run, classify_files, tmp_path):
    """The center functor of V̂ is stable."""
    out = tmp_path / "center.json"
    code, report, _ = run("classify", *classify_files, "--output", out)
    assert code == 0
    assert report.verdict == "pass"
    assert "F is strong monoidal" in report.notes
    assert _read(out) == _golden("classify_svec.json")


def test_validate_base(run, write, svec):
    """The base category satisfies its laws."""
    code, report, _ = run("validate", "base",
                          write("base.json", svec.to_json()))
    assert code == 0
    assert report.verdict == "pass"


def test_validate_vmonoidal(run, classify_files):
    """A monoidal document and its duals validate."""
    code, report, _ = run("validate", "vmonoidal", classify_files[0],
                          "--sample", 3)
    assert code == 0
    assert report.verdict == "pass"


def test_validate_corrupted_identity(run, write, vhat):
    """A scaled identity is a law failure."""
    data = vcat_to_json(vhat)
    entry = data["identity"][1]["morphism"]["blocks"][0]
    entry["matrix"] = [[{"m": 2, "coeffs": {"0": "-1/1"}}]]
    code, report, _ = run("validate", "vcat", write("vcat.json", data))
    assert code == 1
    assert report.verdict == "fail"
    assert any(c.status == "fail" for c in report.checks)


def test_validate_syntax_error(run, tmp_path):
    """Unreadable JSON exits with 2 and prints nothing."""
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    code, _, out = run("validate", "vcat", path)
    assert code == 2
    assert out == ""


def test_validate_unknown_object(run, write, triv, cliff):
    """Tensoring witnesses naming an unknown object exit with 2."""
    data = tensoring_to_json(superalgebra_tensoring(cliff))
    data[0]["target"] = "nowhere"
    code, _, _ = run("validate", "tensoring", write("t.json", data),
                     "--category", write("triv.json", vcat_to_json(triv)))
    assert code == 2


def test_validate_tensoring_needs_category(run, write, cliff):
    """Tensoring validation without its category exits with 2."""
    data = tensoring_to_json(superalgebra_tensoring(cliff))
    code, _, _ = run("validate", "tensoring", write("t.json", data))
    assert code == 2


def test_search_tensoring_caveat(run, write, triv):
    """Unfound pairs are undetermined and carry the caveat."""
    code, report, _ = run("search-tensoring",
                          write("triv.json", vcat_to_json(triv)),
                          "--weights", write("w.json", [[1]]))
    assert code == 1
    assert report.verdict == "undetermined"
    assert SEARCH_CAVEAT in report.notes


@pytest.mark.parametrize("fixture, code", [("cliff", 0), ("ext", 1)])
def test_check_tensored(run, write, request, fixture, code):
    """The Clifford category is tensored and the exterior one is not."""
    C = request.getfixturevalue(fixture)
    result, _, _ = run(
        "check-tensored", write("c.json", vcat_to_json(C)),
        write("t.json", tensoring_to_json(superalgebra_tensoring(C))))
    assert result == code


def test_text_report(run, write, svec):
    """The text report states the verdict."""
    _, _, out = run("validate", "base", write("base.json", svec.to_json()),
                    "--report", "text")
    assert "verdict: pass" in out


if __name__ == "__main__":
    pytest.main()
