import json
import subprocess
import sys
from pathlib import Path

import pytest

from gammaspin import cli
from gammaspin.annihilation import ConservationReport

GOLDEN = Path(__file__).parent / "golden"

# name -> argv; golden/<name>.<ext> holds the expected stdout
GOLDEN_CASES = {
    "constants": ["constants"],
    "expectations_phi_a_prime": ["expectations", "--state", "phi_a_prime"],
    "expectations_psi_i": ["expectations", "--state", "psi_i"],
    "expectations_psi_f_minus": ["expectations", "--state", "psi_f", "--sign", "minus"],
    "annihilate_default": ["annihilate"],
    "annihilate_minus_plus": ["annihilate", "--sign-initial", "minus", "--sign-final", "plus"],
    "photon_511_rh": ["photon", "--energy-kev", "511", "--helicity", "rh"],
    "photon_511_lh": ["photon", "--energy-kev", "511", "--helicity", "lh"],
    "sge_annihilation": ["sge", "--gradient", "100", "--length", "1", "--drift", "1"],
    "sge_zero_gradient": ["sge", "--gradient", "0", "--length", "1", "--drift", "1", "--omega", "1e20"],
    "sge_rows_csv": ["sge", "--gradient", "100", "--length", "1", "--omega", "1e20", "--output", "csv"],
    "sge_sweep": ["sge", "--gradient", "100", "--length", "1", "--drift", "1", "--sweep", "1e20", "1e21",
                  "--steps", "6"],
}


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv)
    return code, json.loads(out)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, update_golden, name):
    argv = GOLDEN_CASES[name]
    code, out, _ = run(capsys, argv)
    assert code == 0
    ext = "csv" if out.startswith(("omega", "helicity")) else "json"
    path = GOLDEN / f"{name}.{ext}"
    if update_golden:
        path.write_text(out)
    assert out == path.read_text()


def test_deterministic(capsys):
    first = run(capsys, GOLDEN_CASES["sge_sweep"])
    assert run(capsys, GOLDEN_CASES["sge_sweep"]) == first


class TestConstants:
    def test_values(self, capsys, k):
        _, doc = run_json(capsys, ["constants"])
        res = doc["results"]
        assert res["Phi_0_T_m2"] == pytest.approx(4.1357e-15, rel=1e-4)
        assert res["mu_B_J_per_T"] == pytest.approx(9.2740100783e-24, rel=1e-9)
        assert res["h_J_s"] == pytest.approx(2 * 3.141592653589793 * res["hbar_J_s"], rel=1e-11)

    def test_envelope_shape(self, capsys):
        _, doc = run_json(capsys, ["constants"])
        assert list(doc) == ["command", "inputs", "results", "references"]
        assert doc["command"] == "constants"


class TestExpectations:
    def test_phi_a_prime(self, capsys):
        _, doc = run_json(capsys, ["expectations", "--state", "phi_a_prime"])
        assert doc["results"]["sz_hbar"] == 0.0
        assert doc["results"]["mu_over_mu_B"] == pytest.approx(2.0, rel=1e-11)

    def test_psi_i(self, capsys):
        _, doc = run_json(capsys, ["expectations", "--state", "psi_i"])
        assert doc["results"]["sz_hbar"] == 0.0 and doc["results"]["mu_over_mu_B"] == 0.0

    def test_bogus_state(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expectations", "--state", "bogus"])
        assert exc.value.code == cli.EXIT_USAGE


class TestAnnihilate:
    @pytest.mark.parametrize("si", ["plus", "minus"])
    @pytest.mark.parametrize("sf", ["plus", "minus"])
    def test_sign_combinations(self, capsys, si, sf):
        code, doc = run_json(capsys, ["annihilate", "--sign-initial", si, "--sign-final", sf])
        res = doc["results"]
        assert code == 0
        assert [res[key] for key in ("sz_initial_hbar", "sz_final_hbar", "mu_initial_J_per_T", "mu_final_J_per_T")] == [0.0] * 4
        assert res["spin_conserved_flag"] and res["moment_conserved_flag"]

    @pytest.mark.parametrize("tol", ["0", "-1e-12", "nan"])
    def test_bad_tolerance(self, capsys, tol):
        with pytest.raises(SystemExit) as exc:
            cli.main(["annihilate", "--tolerance", tol])
        assert exc.value.code == cli.EXIT_USAGE

    def test_violation_exit_code(self, capsys, monkeypatch):
        broken = ConservationReport(0.0, 1.0, 0.0, 0.0, False, True, 1e-12, 1.0)
        monkeypatch.setattr(cli.annihilation, "annihilate", lambda *a, **kw: broken)
        code, doc = run_json(capsys, ["annihilate"])
        assert code == cli.EXIT_NOT_CONSERVED
        assert doc["results"]["spin_conserved_flag"] is False


class TestPhoton:
    @pytest.mark.parametrize("helicity, ratio", [("rh", 2.0), ("lh", -2.0)])
    def test_511_kev(self, capsys, helicity, ratio):
        _, doc = run_json(capsys, ["photon", "--energy-kev", "511", "--helicity", helicity])
        res = doc["results"]
        assert res["mu_over_mu_B"] == pytest.approx(ratio, rel=1e-3)
        assert res["spin_z_hbar"] == 0.0
        assert res["flux_over_Phi_0"] == (1.0 if helicity == "rh" else -1.0)

    def test_omega_input(self, capsys):
        _, doc = run_json(capsys, ["photon", "--omega", "1e20"])
        assert doc["results"]["omega_rad_per_s"] == 1e20
        assert doc["results"]["spin_z_hbar"] == 0.0

    @pytest.mark.parametrize("argv", [["photon"], ["photon", "--omega", "1", "--energy-kev", "1"]])
    def test_frequency_usage(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == cli.EXIT_USAGE

    @pytest.mark.parametrize("argv", [["photon", "--omega", "0"], ["photon", "--energy-kev", "-5"]])
    def test_non_positive(self, capsys, argv):
        code, out, err = run(capsys, argv)
        assert code == cli.EXIT_DOMAIN
        assert out == "" and "error" in err


class TestSge:
    def test_zero_gradient(self, capsys):
        _, doc = run_json(capsys, GOLDEN_CASES["sge_zero_gradient"])
        assert doc["results"]["separation_m"] == 0.0

    def test_symmetric_rows(self, capsys):
        _, doc = run_json(capsys, ["sge", "--gradient", "10", "--length", "0.5", "--omega", "1e19"])
        rh, lh = doc["results"]["deflections"]
        assert (rh["helicity"], lh["helicity"]) == ("rh", "lh")
        assert rh["displacement_m"] == -lh["displacement_m"] != 0
        assert doc["results"]["separation_m"] == pytest.approx(2 * rh["displacement_m"], rel=1e-11)

    def test_sweep_decade_decreasing(self, capsys):
        code, out, _ = run(capsys, ["sge", "--gradient", "1", "--length", "1", "--sweep", "1e19", "1e20",
                                    "--steps", "12"])
        lines = out.split("\n")
        assert code == 0 and lines[0] == "omega_rad_per_s,separation_m" and lines[-1] == ""
        seps = [float(line.split(",")[1]) for line in lines[1:-1]]
        assert len(seps) == 12
        assert all(a > b for a, b in zip(seps, seps[1:]))
        assert not any(line.endswith(",") for line in lines)

    def test_sweep_json(self, capsys):
        _, doc = run_json(capsys, ["sge", "--gradient", "1", "--length", "1", "--sweep", "1e19", "2e19",
                                   "--steps", "2", "--output", "json"])
        rows = doc["results"]["rows"]
        assert rows[0]["separation_m"] / rows[1]["separation_m"] == pytest.approx(4.0, rel=1e-10)

    @pytest.mark.parametrize(
        "argv",
        [
            ["sge", "--gradient", "1", "--length", "0"],
            ["sge", "--gradient", "1", "--length", "1", "--drift", "-1"],
            ["sge", "--gradient", "1", "--length", "1", "--sweep", "1e20", "1e20"],
            ["sge", "--gradient", "1", "--length", "1", "--sweep", "1e20", "1e21", "--steps", "1"],
            ["sge", "--gradient", "1", "--length", "1", "--beam", "rh,xx"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == cli.EXIT_USAGE


def test_fmt():
    assert cli.fmt(-0.0) == "0.00000000000e+00"
    assert cli.fmt(1.8548020156e-23) == "1.85480201560e-23"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gammaspin", "constants"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "constants.json").read_text()
