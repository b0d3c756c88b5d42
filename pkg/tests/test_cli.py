"""Golden-file tests: every subcommand's output is byte-identical for
fixed inputs, and exit codes follow the contract (0 / 2 domain / 64 usage)."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from interlace.cli import main

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
FIXTURES = HERE / "fixtures"

GOLDEN_CASES = [
    ("construct_8_3_4.json", ["construct", "--n", "8", "--l", "3", "--k", "4", "--slice", "standard"]),
    ("construct_prime_8_3_4.json", ["construct", "--n", "8", "--l", "3", "--k", "4", "--slice", "standard", "--prime"]),
    ("check_c4.json", ["check", "--file", str(FIXTURES / "c4_t1.json")]),
    ("slice_standard_8_3.json", ["slice", "standard", "--n", "8", "--l", "3"]),
    ("slice_check_t2.json", ["slice", "check", "--file", str(FIXTURES / "t2.json")]),
    ("mutate_1356.json", ["mutate", "--dir", "+", "--element", "1,3,5,6", "--file", str(FIXTURES / "c4_t1.json")]),
    ("probe_1246.json", ["mutate", "--probe", "--dir", "+", "--element", "1,2,4,6", "--file", str(FIXTURES / "c4_t1.json")]),
    ("path_135_4.json", ["path", "--standard", "--n", "8", "--l", "3", "--element", "1,3,5", "--k", "4"]),
    ("quiver_a_4_2.json", ["quiver", "a", "--m", "4", "--d", "2"]),
    ("quiver_a_4_2.dot", ["quiver", "a", "--m", "4", "--d", "2", "--format", "dot"]),
    ("quiver_tensor_8_4_3.json", ["quiver", "tensor", "--n", "8", "--k", "4", "--l", "3"]),
    ("quiver_tensor_8_4_3.dot", ["quiver", "tensor", "--n", "8", "--k", "4", "--l", "3", "--format", "dot"]),
    ("quiver_gamma_8_4_3.json", ["quiver", "gamma", "--n", "8", "--k", "4", "--l", "3"]),
    ("quiver_gamma_8_4_3.dot", ["quiver", "gamma", "--n", "8", "--k", "4", "--l", "3", "--format", "dot"]),
    ("quiver_strip_8_4_3.json", ["quiver", "strip", "--n", "8", "--k", "4", "--l", "3"]),
    ("quiver_apr_8_4_3.json", ["quiver", "apr", "--n", "8", "--k", "4", "--l", "3"]),
    ("enum_maximal_6_2.json", ["enum", "maximal", "--n", "6", "--l", "2"]),
    ("enum_subs_maximal_6_3_2.json", ["enum", "subs-maximal", "--n", "6", "--k", "3", "--l", "2"]),
    ("enum_slice_census_6_2.json", ["enum", "slice-census", "--n", "6", "--l", "2"]),
    ("cross_validate_6.json", ["enum", "cross-validate", "--n-max", "6"]),
]


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("golden_name,argv", GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
def test_golden(golden_name, argv):
    code, out = run_cli(argv)
    assert code == 0
    assert out == (GOLDEN / golden_name).read_text()


def test_output_stable_across_runs():
    _, first = run_cli(["quiver", "gamma", "--n", "8", "--k", "4", "--l", "3", "--format", "dot"])
    _, second = run_cli(["quiver", "gamma", "--n", "8", "--k", "4", "--l", "3", "--format", "dot"])
    assert first == second


def test_known_values_in_golden_output():
    doc = json.loads((GOLDEN / "construct_8_3_4.json").read_text())
    assert len(doc["members"]) == 9
    assert [1, 3, 5, 6] in doc["members"]
    mut = json.loads((GOLDEN / "mutate_1356.json").read_text())
    assert mut["ok"] is True
    assert [2, 4, 6, 7] in mut["result"]["members"]
    assert [1, 3, 4, 7] in mut["result"]["members"]


def test_domain_error_exit_code():
    code, _ = run_cli(["construct", "--n", "8", "--l", "3", "--k", "8", "--slice", "standard"])
    assert code == 2


def test_usage_error_exit_code():
    code, _ = run_cli(["no-such-command"])
    assert code == 64
    code, _ = run_cli(["quiver", "bogus-kind"])
    assert code == 64


def test_json_errors_flag(capsys):
    code = main(["--json-errors", "mutate", "--dir", "+", "--element", "1,2,4,6",
                 "--file", str(FIXTURES / "c4_t1.json")])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "intertwining-pair"
    assert err["pair"] == [[1, 3, 4, 6], [2, 3, 5, 7]]


def test_console_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "interlace.cli", "slice", "standard", "--n", "6", "--l", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["members"] == [[1, 3], [1, 4], [1, 5]]


def test_stdin_pipeline():
    proc = subprocess.run(
        [sys.executable, "-m", "interlace.cli", "mutate", "--dir", "+", "--element", "1,3,5,6"],
        input=(FIXTURES / "c4_t1.json").read_text(),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "mutate_1356.json").read_text()
