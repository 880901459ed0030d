import io
import json

import pytest

from skewlin import Matrix, witness_matrix
from skewlin.cli import run
from skewlin.jsonio import matrix_to_json


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def doc(obj) -> str:
    return json.dumps(obj)


W = matrix_to_json(witness_matrix())
A = matrix_to_json(Matrix([[1, 2], [3, 4]]))


def test_solve_nonsingular_system(tmp_path):
    path = tmp_path / "system.json"
    path.write_text(doc({"A": A, "b": ["1", "1"]}))
    code, out, _ = call("solve", "--product", "rc", str(path))
    assert code == 0
    assert json.loads(out) == {"outcome": "unique", "product": "rc", "side": "right", "solution": ["-1", "1"]}


def test_solve_text_and_inconsistent():
    code, out, _ = call("solve", "--format", "text", "-", stdin=doc({"A": A, "b": ["1", "1"]}))
    assert (code, out) == (0, "unique solution (-1, 1)\n")
    bad = matrix_to_json(Matrix([[1, 2], [2, 4]]))
    code, out, _ = call("solve", stdin=doc({"A": bad, "b": ["1", "3"]}))
    assert code == 1 and json.loads(out)["outcome"] == "inconsistent"


def test_solve_parametric_witness():
    code, out, _ = call("solve", stdin=doc({"A": W, "b": ["0", "0"], "side": "left"}))
    assert code == 0
    result = json.loads(out)
    assert result["outcome"] == "parametric" and result["free"] == [1] and result["scalar_side"] == "left"


def test_inverse_verb():
    code, out, _ = call("inverse", "--product", "cr", "--format", "text", stdin=doc(W))
    assert code == 0
    assert out == "[ 1/2+1/2k  1/2i-1/2j ]\n[    -1/2k      -1/2i ]\n"
    code, out, _ = call("inverse", stdin=doc(W))
    assert code == 1 and json.loads(out) == {"invertible": False, "product": "rc"}


def test_rank_and_singular_check():
    code, out, _ = call("rank", stdin=doc(W))
    report = json.loads(out)
    assert code == 0 and report["rank"] == 1 and report["row_dependencies"] == {"1": [["0", "0", "1", "0"]]}
    assert call("singular-check", stdin=doc(W))[0] == 1
    assert call("singular-check", "--product", "cr", stdin=doc(W))[0] == 0


def test_quasidet_verb():
    code, out, _ = call("quasidet", "-i", "1", "-j", "1", "--product", "cr", "--format", "text", stdin=doc(W))
    assert (code, out) == (0, "|A|_11 = 2i\n")
    code, out, _ = call("quasidet", "--format", "text", stdin=doc(W))
    assert code == 0 and out.count("\n") == 4
    ident = matrix_to_json(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    code, out, _ = call("quasidet", "-i", "0", "-j", "1", stdin=doc(ident))
    assert code == 1 and json.loads(out)["quasideterminants"][0]["defined"] is False
    assert call("quasidet", "-i", "5", stdin=doc(W))[0] == 2


def test_space_verbs():
    fam = matrix_to_json(Matrix([[1, "1+k"]], "quaternion"))
    code, out, _ = call("span", stdin=doc({"family": fam, "vector": ["j", "i+j"]}))
    assert code == 0 and json.loads(out)["coefficients"] == [["0", "0", "1", "0"]]
    assert call("span", stdin=doc({"family": fam, "vector": ["1", "0"]}))[0] == 1
    assert call("independent", "--space", "rcd", stdin=doc({"family": W}))[0] == 1
    assert call("independent", "--space", "crd", stdin=doc(W))[0] == 0
    code, out, _ = call("coords", stdin=doc({"basis": A, "vector": ["1", "0"]}))
    assert code == 0 and json.loads(out)["coordinates"] == ["-2", "1"]
    assert call("coords", stdin=doc({"basis": W, "vector": ["1", "0"]}))[0] == 1


def test_demo():
    code, out, _ = call("demo", "--format", "text")
    assert code == 0
    assert "[ 1  1+k ]\n[ j  i+j ]" in out
    assert "RC rank: 1" in out and "CR rank: 2" in out
    for name in ("rcd", "crd", "drc", "dcr"):
        assert f"  {name}: " in out
    assert "FAIL" not in out
    code, out, _ = call("demo")
    report = json.loads(out)
    assert report["cr_quasidet_11"]["value"] == ["0", "2", "0", "0"]
    assert all(report["checks"].values())


def test_malformed_json_exits_two(tmp_path):
    path = tmp_path / "badfile.json"
    path.write_text('{"ring": "quaternion", "rows": 1,')
    code, out, err = call("rank", str(path))
    assert code == 2 and out == ""
    assert "invalid JSON" in err and "position" in err


@pytest.mark.parametrize(
    "argv, stdin",
    [
        ([], ""),
        (["frobnicate"], ""),
        (["rank", "--product", "xr"], ""),
        (["span", "--space", "abc"], ""),
        (["rank", "/nonexistent/file.json"], ""),
        (["inverse"], doc(matrix_to_json(Matrix([[1, 2]])))),
        (["solve"], doc({"A": A})),
        (["coords"], doc({"basis": A})),
    ],
)
def test_usage_errors_exit_two(argv, stdin):
    code, _, err = call(*argv, stdin=stdin)
    assert code == 2 and err


def test_output_is_deterministic():
    runs = [call("demo")[1] for _ in range(2)] + [call("demo", "--format", "text")[1] for _ in range(2)]
    assert runs[0] == runs[1] and runs[2] == runs[3]
    assert call("rank", stdin=doc(W)) == call("rank", stdin=doc(W))


def test_selftest(monkeypatch):
    monkeypatch.setenv("SKEWLIN_SEED", "11")
    code, out, _ = call("selftest")
    assert code == 0 and json.loads(out)["seed"] == 11
    monkeypatch.setenv("SKEWLIN_SEED", "eleven")
    assert call("selftest")[0] == 2
