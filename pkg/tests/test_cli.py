import csv
import io
import json
import subprocess
import sys

import pytest

from coulomb_momentum.cli import main
from coulomb_momentum.poly import PolyField


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestState:
    def test_ground_state(self, capsys):
        code, out, _ = run(capsys, "state", "--n", "1", "--l", "0", "--m", "0")
        assert code == 0
        assert "a (unit-radius): [(1)] / (1+p^2)^2" in out
        assert "b (unit-radius): [(1)] / (1+p^2)^0" in out

    def test_physical_json(self, capsys):
        code, out, _ = run(capsys, "state", "--n", "2", "--l", "0", "--physical", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["schemaVersion"] == 1
        phys = next(s for s in data["states"] if s["space"] == "a" and s["scale"] == 2)
        inv = PolyField(1, 1, scale=2)
        assert PolyField.from_json(phys["field"]) == inv * inv * (1 - inv * 2)

    def test_invalid_quantum_numbers(self, capsys):
        code, _, err = run(capsys, "state", "--n", "2", "--l", "2", "--m", "0")
        assert code == 2 and "l" in err and "usage" in err


class TestVerify:
    def test_rotation(self, capsys):
        code, out, _ = run(capsys, "verify", "rotation", "--degree", "3")
        assert code == 0 and "3/3 checks passed" in out

    def test_integral_single_state_json(self, capsys):
        code, out, _ = run(capsys, "verify", "integral", "--n", "1", "--l", "0", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["passed"] and data["schemaVersion"] == 1
        assert data["reports"][0]["name"] == "integral n=1 l=0"
        assert data["reports"][0]["residual"] <= 1e-6

    def test_eigen_lists_eigenvalues(self, capsys):
        code, out, _ = run(capsys, "verify", "eigen", "--max-n", "3", "--format", "json")
        data = json.loads(out)
        eig = {r["name"]: r["metadata"]["measured_eigenvalue"] for r in data["reports"] if r["name"].startswith("eigen ")}
        assert code == 0 and eig["eigen n=3 l=1 m=-1"] == "8"

    def test_injected_failure_flips_status(self, capsys):
        code, out, _ = run(capsys, "verify", "gegenbauer", "--max-n", "2", "--inject-failure")
        assert code == 1 and "FAIL  injected failure" in out

    def test_tolerance_override_fails(self, capsys):
        code, _, _ = run(capsys, "verify", "kernel", "--tol-kernel", "1e-30")
        assert code == 1

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "everything")
        assert code == 2 and "unknown suite" in err

    def test_bad_flags(self, capsys):
        assert run(capsys, "verify", "eigen", "--max-n", "0")[0] == 2
        assert run(capsys, "verify", "integral", "--n", "2")[0] == 2
        assert run(capsys, "verify", "kernel", "--tol-kernel", "-1")[0] == 2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        code, out, _ = run(capsys, "verify", "gegenbauer", "--max-n", "2", "--format", "json", "--out", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["suite"] == "gegenbauer"

    def test_deterministic(self, capsys):
        a = run(capsys, "verify", "kernel", "--format", "json")[1]
        b = run(capsys, "verify", "kernel", "--format", "json")[1]
        assert a == b


class TestSample:
    def rows(self, text):
        return list(csv.reader(io.StringIO(text)))

    def test_ground_state_monotone(self, capsys):
        code, out, _ = run(capsys, "sample", "--n", "1", "--l", "0", "--p-max", "5", "--step", "0.05")
        rows = self.rows(out)
        assert code == 0 and rows[0] == ["p", "density", "sphere_weight"]
        dens = [float(r[1]) for r in rows[1:]]
        assert len(dens) == 101 and all(a > b for a, b in zip(dens, dens[1:]))
        assert float(rows[1][2]) == 8.0

    def test_p_state_vanishes_at_origin(self, capsys):
        _, out, _ = run(capsys, "sample", "--n", "2", "--l", "1")
        assert float(self.rows(out)[1][1]) == 0.0

    @pytest.mark.parametrize("grid", [["--step", "0"], ["--step", "-1"], ["--p-max", "-2"], ["--p-max", "0.1", "--step", "1"]])
    def test_invalid_grid(self, capsys, grid):
        assert run(capsys, "sample", "--n", "1", "--l", "0", *grid)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coulomb_momentum", "state", "--n", "1", "--l", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and "k=0" in proc.stdout


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
