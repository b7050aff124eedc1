import contextlib
import io
import json
from pathlib import Path

import pytest

from quatdyn import FieldSpec, OctSpec, ParseError, QQ, QuatSpec
from quatdyn.cli import main, parse_algebra, parse_field
from quatdyn.parsing import parse_element

GOLDEN = sorted(Path(__file__).parent.glob("golden/*.json"))


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("Q(s5)") == FieldSpec(5)
    with pytest.raises(ParseError):
        parse_field("R")
    with pytest.raises(ParseError):
        parse_field("Q(s4)")  # not squarefree


def test_parse_algebra():
    spec = parse_algebra("quat:-1,-1@Q")
    assert spec == QuatSpec.standard()
    spec5 = parse_algebra("quat:-1,-1@Q(s5)")
    assert spec5 == QuatSpec.standard(FieldSpec(5))
    oct_spec = parse_algebra("oct:-1,-1,-1@Q")
    assert oct_spec == OctSpec.standard()
    generic = parse_algebra("quat:2,1/3@Q")
    assert generic.alpha == QQ.scalar(2)
    for bad in ("quat:-1@Q", "tri:-1,-1@Q", "quat:-1,-1", "oct:-1,-1@Q"):
        with pytest.raises(ParseError):
            parse_algebra(bad)


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden_corpus(path):
    case = json.loads(path.read_text())
    code, out = run_cli(case["argv"])
    assert code == case["exit_code"]
    assert json.loads(out) == case["expected"]


def test_output_is_byte_stable():
    argv = ["fixed-points", "--poly", "x^2+(i+1)*x+1+i*j"]
    _, first = run_cli(argv)
    _, second = run_cli(argv)
    assert first == second


def test_numeric_roots_payload():
    code, out = run_cli(["roots", "--poly", "x^2+i*x+1", "--mode", "numeric"])
    assert code == 0
    payload = json.loads(out)
    assert payload["inputs"]["precision"] == 128
    assert payload["inputs"]["tolerance"] == 1e-9
    sols = payload["result"]
    assert len(sols) == 2
    H = QuatSpec.standard()
    for sol in sols:
        assert sol["variant"] == "point"
        assert sol["approx"] is True
        assert sol["residual"] <= 1e-9
        assert sol["class"]["exact"] is False
        # coordinates are exact strings that parse back into the algebra
        point = parse_element(sol["point"], H)
        assert not point.is_zero


def test_exit_codes():
    code, out = run_cli(["roots", "--poly", "x^2+i*x+1"])  # irrational classes
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ClassSearchIncompleteError"

    code, out = run_cli(["fixed-points", "--poly", "x"])
    assert code == 1

    code, out = run_cli(["roots", "--poly", "x +"])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "ParseError"

    code, out = run_cli(["compose", "--poly", "i*x^2", "--n", "20"])
    assert code == 1
    assert json.loads(out)["error"]["type"] == "DegreeCapError"

    code, _ = run_cli(["roots", "--nonsense"])
    assert code == 2

    code, _ = run_cli(["--version"])
    assert code == 0


def test_degree_cap_flag():
    code, out = run_cli(
        ["compose", "--poly", "i*x^2", "--n", "5", "--degree-cap", "32"]
    )
    assert code == 0
    assert json.loads(out)["result"]["degree"] == 32


def test_point_with_radical_coordinates():
    argv = [
        "check-periodic",
        "--algebra",
        "quat:-1,-1@Q(s5)",
        "--poly",
        "x^2+(i+1)*x+1+i*j",
        "--point=-1 + (133/362*s5 - 333/362)*i - (14/181*s5 + 165/181)*j"
        " - (26/181*s5 + 22/181)*k",
        "--r",
        "2",
        "--n-max",
        "2",
    ]
    code, out = run_cli(argv)
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["status"] == "refuted_at"
    assert payload["result"]["refuted_at"] == 2


def test_octonion_solver_rejected():
    code, out = run_cli(
        ["roots", "--algebra", "oct:-1,-1,-1@Q", "--poly", "x^2+1"]
    )
    assert code == 1
    assert json.loads(out)["error"]["type"] == "UnsupportedAlgebraError"


def test_orbit_eval_semantics_flag():
    code, out = run_cli(
        ["orbit", "--poly", "i*x^2", "--point", "j+1", "--n-max", "2",
         "--semantics", "eval"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["points"] == ["2*k", "-4*i"]
    assert payload["result"]["commutes_with_start"] == [False, False]
