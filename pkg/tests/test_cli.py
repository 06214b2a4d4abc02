import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from brauer_blocks.cli import run
from brauer_blocks.kl import kl_polynomials, parse_table_csv

GOLDEN = Path(__file__).parent / "data" / "kl_delta1.csv"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_blocks_trivial():
    code, text = call("blocks", "--delta", "1", "--weight", "0", "--max-degree", "0")
    assert code == 0
    assert json.loads(text)["members"] == ["0"]


def test_blocks_text_and_exponent_notation():
    code, text = call("blocks", "--delta", "1", "--weight", "521^3", "--max-degree", "10", "--format", "text")
    assert code == 0
    assert text.split() == ["0", "2,2", "3,2,1", "4,2,1,1", "3,3,2", "5,2,1,1,1", "4,3,2,1"]


def test_kl_table_golden_bytes():
    code, text = call("kl-table", "--delta", "1", "--max-degree", "16", "--format", "csv")
    assert code == 0
    assert text == GOLDEN.read_text()


def test_kl_table_json_round_trip():
    code, text = call("kl-table", "--delta", "2", "--max-degree", "10", "--format", "json")
    data = json.loads(text)
    table = kl_polynomials(2, 10)
    assert data == json.loads(table.to_json())
    _, csv_text = call("kl-table", "--delta", "2", "--max-degree", "10")
    cols, entries = parse_table_csv(csv_text)
    assert cols == table.weights
    assert entries == {k: v for k, v in table.entries.items() if v}


def test_facet():
    code, text = call("facet", "--delta", "-2", "--weight", "0")
    data = json.loads(text)
    assert code == 0 and data["singularity_degree"] == 1 and not data["alcove"]
    code, text = call("facet", "--delta", "1", "--weight", "21", "--format", "text")
    assert text.splitlines()[1] == "singularity degree 0"


@pytest.mark.parametrize("kind", ["mbs", "orbit", "par-e"])
def test_graph_formats(kind):
    code, dot = call("graph", "--kind", kind, "--delta", "1", "--max-degree", "8", "--format", "dot")
    assert code == 0 and dot.startswith("digraph")
    code, js = call("graph", "--kind", kind, "--delta", "1", "--max-degree", "8")
    assert json.loads(js)["root"] == "0"


def test_predict():
    code, text = call("predict", "--delta", "1", "--standard", "0", "--simple", "22")
    assert json.loads(text)["multiplicity"] == 1
    code, text = call("predict", "--delta", "1", "--standard", "0", "--simple", "321", "--format", "text")
    assert text.strip() == "0"


def test_gram():
    code, text = call("gram", "--delta", "3", "--n", "4", "--partition", "0", "--format", "csv")
    assert text == "9,3,3\n3,9,3\n3,3,9\n"
    code, text = call("gram", "--delta", "1", "--n", "4", "--partition", "0")
    assert json.loads(text)["rank"] == 1


def test_verify_small():
    code, text = call("verify", "--delta", "1", "--n", "6", "--weight", "0")
    reports = json.loads(text)
    assert code == 0 and [r["lambda"] for r in reports] == ["0", "2,2", "3,2,1"]
    assert all(r["pass"] for r in reports)
    assert set(reports[0]) == {"n", "delta", "lambda", "dim_delta", "predicted_sum", "factors", "pass"}


@pytest.mark.parametrize("argv", [
    ["blocks", "--delta", "0", "--weight", "0", "--max-degree", "2"],
    ["blocks", "--weight", "0", "--max-degree", "2"],
    ["blocks", "--delta", "1", "--weight", "1,3", "--max-degree", "2"],
    ["predict", "--delta", "1", "--standard", "0", "--simple", "1"],
    ["gram", "--delta", "1", "--n", "5", "--partition", "2"],
    ["kl-table", "--delta", "-2", "--max-degree", "4"],
    ["facet", "--delta", "1", "--weight", "0", "--format", "dot"],
    ["nonsense"],
])
def test_validation_errors_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_output_is_deterministic():
    argv = ["graph", "--kind", "orbit", "--delta", "1", "--max-degree", "12", "--format", "dot"]
    assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brauer_blocks.cli", "blocks", "--delta", "1",
                           "--weight", "0", "--max-degree", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["members"] == ["0", "2,2"]
