import json

import pytest

from gradedalg.cli import run_cli

RING_KX = {"char": 2, "vars": [{"name": "x", "codegree": 1}], "relations": []}
RING_KX2 = {"char": 2, "vars": [{"name": "x", "codegree": 1}],
            "relations": ["x^2"]}


@pytest.fixture
def ring_file(tmp_path):
    def write(data, name="ring.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def test_missing_file_is_a_usage_error(capsys):
    assert run_cli(["hilbert", "/nonexistent/ring.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_preset_is_a_usage_error(capsys):
    assert run_cli(["preset", "run", "no_such_preset"]) == 2


def test_malformed_series_is_a_usage_error(capsys):
    assert run_cli(["functional-eq", "--series", "1/(1-t", "--dim", "1",
                    "--shift", "0"]) == 2


def test_hilbert_prints_dimensions(ring_file, capsys):
    assert run_cli(["hilbert", ring_file(RING_KX), "--nmax", "4"]) == 0
    out = capsys.readouterr().out
    assert "1, 1, 1, 1, 1" in out


def test_hilbert_series_comparison_pass_and_fail(ring_file, capsys):
    path = ring_file(RING_KX)
    assert run_cli(["hilbert", path, "--series", "1/(1-t)"]) == 0
    assert run_cli(["hilbert", path, "--series", "1/(1-t)^2"]) == 1
    assert "fail" in capsys.readouterr().out


def test_functional_eq_reports_cm_pass(capsys):
    assert run_cli(["functional-eq", "--series", "1/(1-t)", "--dim", "1",
                    "--shift", "0"]) == 0
    assert "CM: pass" in capsys.readouterr().out


def test_functional_eq_reports_almost_cm_correction(capsys):
    assert run_cli(["functional-eq",
                    "--series", "(1+t^3)/((1-t)*(1+t^2))",
                    "--dim", "2", "--shift", "0"]) == 0
    out = capsys.readouterr().out
    assert "CM: fail" in out
    assert "almost-CM: pass, q =" in out


def test_localcoh_methods_agree_on_a_free_module(ring_file, capsys):
    assert run_cli(["localcoh", ring_file(RING_KX), "--ideal", "x",
                    "--window=-6..2", "--method", "both"]) == 0
    assert "methods agree" in capsys.readouterr().out


def test_localcoh_json_output_parses(ring_file, capsys):
    assert run_cli(["localcoh", ring_file(RING_KX), "--ideal", "x",
                    "--window=-4..1", "--method", "cech", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [-1, 1] in data["cech"]["H^1"]


def test_koszul_zero_divisor_detected(ring_file, capsys):
    assert run_cli(["koszul", ring_file(RING_KX2), "--elements", "x"]) == 1


def test_resolution_of_the_residue_field(ring_file, capsys):
    assert run_cli(["resolution", ring_file(RING_KX2), "--hmax", "12"]) == 0
    out = capsys.readouterr().out
    assert "bounded" in out


def test_hypersurface_matrix_factorization(ring_file, capsys):
    assert run_cli(["hypersurface", ring_file(RING_KX), "--f", "x^2",
                    "--mf", "--hmax", "8"]) == 0
    out = capsys.readouterr().out
    assert "matrix factorization" in out


def test_squeezed_homology_of_a4(capsys):
    assert run_cli(["squeezed", "--group", "a4", "--char", "2",
                    "--field-degree", "2", "--steps", "6"]) == 0
    out = capsys.readouterr().out
    assert "1, 1, 2, 2, 2, 2, 2" in out


def test_preset_list_names_every_entry(capsys):
    assert run_cli(["preset", "list"]) == 0
    out = capsys.readouterr().out
    for name in ("c2r1", "q8", "d8", "sd16", "g32n7", "rational_x",
                 "a4_squeezed", "a4_ring"):
        assert name in out


def test_preset_run_c2r1_passes(capsys):
    assert run_cli(["preset", "run", "c2r1"]) == 0


def test_preset_run_json_is_valid(capsys):
    assert run_cli(["preset", "run", "c2r1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pass"] is True
    assert any(c["check"] == "hilbert_prefix" for c in data["checks"])


def test_shift_ledger_passes(capsys):
    assert run_cli(["shift-ledger"]) == 0
    assert "hold" in capsys.readouterr().out
    assert run_cli(["shift-ledger", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["violations"] == []
