import io
import json
import subprocess
import sys

import pytest

from suzukihopf import __version__
from suzukihopf.algebra import AlgebraParams
from suzukihopf.cache import cache_path, load_algebra
from suzukihopf.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    text = out.getvalue()
    return code, text, (json.loads(text) if text else None)


BASE = ("-N", "1", "-n", "2", "--mu", "+1", "--lambda", "-1")


def test_envelope_and_determinism():
    code, text, doc = call("algebra-build", *BASE)
    assert code == 0
    assert doc["tool_version"] == __version__ and doc["command"] == "algebra-build"
    assert doc["params"] == {"N": 1, "n": 2, "mu": 1, "lambda": -1}
    assert doc["payload"]["dim"] == 8
    assert call("algebra-build", *BASE)[1] == text


@pytest.mark.parametrize("command", [
    "algebra-verify", "algebra-export", "coalgebra-grouplikes", "coalgebra-decompose", "aut-list", "aut-table",
])
def test_commands_succeed(command):
    code, text, doc = call(command, *BASE)
    assert code == 0, doc
    assert call(command, *BASE)[1] == text


def test_algebra_verify_seeded():
    code, _, doc = call("algebra-verify", *BASE, "--seed", "7")
    assert code == 0 and doc["payload"]["randomized"]["seed"] == 7


def test_aut_table_h8():
    _, _, doc = call("aut-table", *BASE)
    assert doc["payload"]["group"]["order"] == 4
    assert doc["payload"]["invariants"]["candidates"] == ["C2xC2"]


def test_aut_table_open_closure_exits_1():
    code, _, doc = call("aut-table", "-N", "2", "-n", "2", "--mu", "+1", "--lambda", "+1")
    assert code == 1
    assert doc["payload"]["group"]["closed"] is False
    assert doc["payload"]["generated_group_order"] == 48


def test_aut_verify_identity_and_failure():
    code, _, doc = call("aut-verify", *BASE, "--variant", "Psi", "--s", "1", "--t", "1", "--xi", "1")
    assert code == 0 and doc["payload"]["is_identity"]
    assert doc["payload"]["residuals"]["all_zero"]
    code, _, doc = call("aut-verify", *BASE, "--variant", "Gamma", "--s", "1", "--theta1", "-1")
    assert code == 1 and not doc["payload"]["conditions_hold"]


def test_comodule_twist():
    code, _, doc = call("comodule-twist", "-N", "2", "-n", "3", "--mu", "+1", "--lambda", "+1")
    assert code == 0
    assert all(r["twisted_support"] is not None for r in doc["payload"]["twists"])


@pytest.mark.parametrize("backend", ["python", "auto"])
def test_aut_search_h8(backend):
    code, _, doc = call("aut-search", *BASE, "--backend", backend)
    assert code == 0
    assert doc["payload"]["equal"] and doc["payload"]["found"] == 4


def test_aut_search_extra_maps_exit_1():
    code, _, doc = call("aut-search", "-N", "1", "-n", "2", "--mu", "-1", "--lambda", "+1")
    assert code == 1
    p = doc["payload"]
    assert p["found_contains_classified"] and not p["equal"]
    assert len(p["extra_in_search"]) == 4


@pytest.mark.parametrize("argv", [
    ("algebra-build", "-N", "0", "-n", "2", "--mu", "+1", "--lambda", "+1"),
    ("algebra-build", "-N", "1", "-n", "1", "--mu", "+1", "--lambda", "+1"),
    ("algebra-build", "-N", "1", "-n", "2", "--mu", "2", "--lambda", "+1"),
    ("algebra-build", "-N", "1", "-n", "2", "--mu", "+1"),
    ("no-such-command", *BASE),
    ("algebra-build", "-N", "20", "-n", "5", "--mu", "+1", "--lambda", "+1"),
    ("aut-verify", *BASE, "--variant", "Psi", "--s", "3"),
    ("aut-verify", *BASE, "--variant", "Psi", "--s", "1", "--xi", "2*"),
    ("aut-verify", *BASE, "--variant", "Psi", "--s", "1", "--xi", "0"),
    ("comodule-twist", *BASE, "--t", "5"),
])
def test_bad_arguments_exit_2(argv, capsys):
    code, text, _ = call(*argv)
    assert code == 2 and text == ""


def test_max_dim_override():
    code, _, _ = call("algebra-build", "-N", "2", "-n", "2", "--mu", "+1", "--lambda", "+1", "--max-dim", "15")
    assert code == 2


def test_out_file(tmp_path):
    target = tmp_path / "out.json"
    code, text, _ = call("algebra-export", *BASE, "--out", str(target))
    assert code == 0 and text == ""
    assert json.loads(target.read_text())["command"] == "algebra-export"


def test_cache_round_trip_and_corruption(tmp_path):
    params = AlgebraParams(1, 3, -1, 1)
    fresh = load_algebra(params)
    first = load_algebra(params, str(tmp_path))
    path = cache_path(tmp_path, params)
    assert path.exists()
    cached = load_algebra(params, str(tmp_path))
    assert cached.tables.mono == fresh.tables.mono == first.tables.mono
    doc = json.loads(path.read_text())
    doc["payload"]["mono"][3] = [0, -1]
    path.write_text(json.dumps(doc))
    rebuilt = load_algebra(params, str(tmp_path))
    assert rebuilt.tables.mono == fresh.tables.mono
    path.write_text("not json")
    assert load_algebra(params, str(tmp_path)).tables.mono == fresh.tables.mono
    code, text, _ = call("algebra-export", "-N", "1", "-n", "3", "--mu", "-1", "--lambda", "+1", "--cache-dir", str(tmp_path))
    assert code == 0 and text == call("algebra-export", "-N", "1", "-n", "3", "--mu", "-1", "--lambda", "+1")[1]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "suzukihopf", "algebra-build", *BASE], capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["payload"]["dim"] == 8
