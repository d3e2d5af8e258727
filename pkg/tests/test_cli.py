import json
import subprocess
import sys

import pytest

from conftest import EXAMPLE_ROWS, EXAMPLE_ROWS_A31_POSITIVE
from tropeig.cli import RunConfig, main, run
from tropeig.matrix import TropMatrix, load_matrix, matrix_to_csv, matrix_to_json


@pytest.fixture
def example_json(tmp_path):
    path = tmp_path / "example.json"
    path.write_text(matrix_to_json(TropMatrix(EXAMPLE_ROWS)))
    return str(path)


@pytest.fixture
def fixed_json(tmp_path):
    path = tmp_path / "fixed.json"
    path.write_text(matrix_to_json(TropMatrix(EXAMPLE_ROWS_A31_POSITIVE)))
    return str(path)


def run_json(**kw):
    status, out = run(RunConfig(output="json", **kw))
    return status, json.loads(out)


def test_eig_text(example_json, fixed_json):
    assert run(RunConfig("eig", example_json)) == (0, "1/2, 1/2, 4, 5")
    assert run(RunConfig("eig", fixed_json)) == (0, "0, 2, 4, 5")


def test_eig_json(example_json):
    status, doc = run_json(command="eig", input_path=example_json)
    assert status == 0 and doc["schema"] == 1
    assert doc["eigenvalues"] == ["1/2", "1/2", "4", "5"]
    assert doc["roots"][0] == {"root": "1/2", "multiplicity": 2}


def test_charpoly(example_json):
    status, doc = run_json(command="charpoly", input_path=example_json)
    assert doc["coefficients"] == ["10", "9", "9", "5", "0"]


def test_numrange(example_json):
    assert run(RunConfig("numrange", example_json)) == (0, "[0, 5]")


def test_geneig_all(example_json):
    status, doc = run_json(command="geneig", input_path=example_json)
    assert status == 0
    assert [p["lambda"] for p in doc["pairs"]] == ["1/2", "4", "5"]
    assert all(p["verified"] for p in doc["pairs"])
    assert doc["pairs"][2] == {"lambda": "5", "vector": ["-inf", "0", "-inf", "0"], "case": "SECOND_CASE2", "p": 2, "q": 4, "verified": True}


def test_geneig_single(fixed_json, example_json):
    status, doc = run_json(command="geneig", input_path=fixed_json, lam="2")
    assert status == 0 and doc["verified"] and doc["lambda"] == "2"
    status, doc = run_json(command="geneig", input_path=example_json, lam="2")
    assert status == 1 and doc["error"] == "NotAnEigenvalue"


def test_verify(example_json):
    status, doc = run_json(command="verify", input_path=example_json, lam="0", vector="-inf,-inf,0,-3")
    assert status == 0 and doc["verified"] is True
    status, doc = run_json(command="verify", input_path=example_json, lam="5", vector="-inf,-inf,0,-3")
    assert status == 1 and doc["verified"] is False
    assert run(RunConfig("verify", example_json, lam="0"))[0] == 2
    assert run(RunConfig("verify", example_json, lam="0", vector="0,0"))[0] == 2


def test_rayleigh(example_json):
    status, doc = run_json(command="rayleigh", input_path=example_json, k=1, samples=300, seed=4)
    assert status == 0 and doc["holds"] and doc["min_observed"] == doc["lambda_k"] == "1/2"
    assert run(RunConfig("rayleigh", example_json))[0] == 2
    assert run(RunConfig("rayleigh", example_json, k=9))[0] == 2


def test_oracle_check(example_json):
    status, doc = run_json(command="oracle-check", input_path=example_json)
    assert status == 0 and doc["equal"]


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows": [[1, "x"]]}')
    assert run(RunConfig("eig", str(bad)))[0] == 2
    assert run(RunConfig("eig", str(tmp_path / "missing.json")))[0] == 2
    big = tmp_path / "big.json"
    big.write_text(matrix_to_json(TropMatrix([[0] * 11] * 11)))
    assert run(RunConfig("eig", str(big)))[0] == 2
    assert run(RunConfig("eig", str(big), size_cap=11))[0] == 0
    assert run(RunConfig("oracle-check", str(big), size_cap=None))[0] == 2


def test_csv_input(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text(matrix_to_csv(TropMatrix(EXAMPLE_ROWS)))
    assert run(RunConfig("eig", str(path)))[1] == "1/2, 1/2, 4, 5"
    other = tmp_path / "m.txt"
    other.write_text(path.read_text())
    assert run(RunConfig("numrange", str(other), format="csv")) == (0, "[0, 5]")


def test_matrix_round_trip(tmp_path):
    A = TropMatrix([["-7/3", "-inf"], ["0", "11/2"]])
    path = tmp_path / "a.json"
    path.write_text(matrix_to_json(A))
    assert load_matrix(path) == A
    assert matrix_to_json(load_matrix(path)) == path.read_text()


def test_deterministic_json(example_json):
    a = run(RunConfig("rayleigh", example_json, output="json", k=2, samples=200, seed=9))
    b = run(RunConfig("rayleigh", example_json, output="json", k=2, samples=200, seed=9))
    assert a == b


def test_main_argv(example_json, capsys):
    assert main(["eig", example_json]) == 0
    assert capsys.readouterr().out.strip() == "1/2, 1/2, 4, 5"
    assert main(["verify", "--lambda", "0", example_json, "--", "-inf,-inf,0,-3"]) == 0
    assert main(["geneig", "--lambda=4", "--output", "json", example_json]) == 0
    assert json.loads(capsys.readouterr().out.splitlines()[-1])["case"] == "SECOND_CASE2"
    with pytest.raises(SystemExit):
        main(["rayleigh", example_json])


def test_module_entry_point(example_json):
    out = subprocess.run([sys.executable, "-m", "tropeig.cli", "numrange", example_json], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "[0, 5]"
