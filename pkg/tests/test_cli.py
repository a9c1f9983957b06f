import pytest

from tai_welfare.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pdoom_headline_numbers(capsys):
    code, out, _ = run_cli(
        capsys, "pdoom", "--p1", "0.9", "--p2", "0.8", "--p3", "0.3", "--p4", "0.3"
    )
    assert code == 0
    assert "p_doom,0.3672" in out
    assert "doom_immediate,0.216" in out


def test_table_runs_are_byte_identical(capsys):
    _, first, _ = run_cli(capsys, "table", "t2")
    _, second, _ = run_cli(capsys, "table", "t2")
    assert first == second


def test_table_t1_reference_cell(capsys):
    code, out, _ = run_cli(capsys, "table", "t1")
    assert code == 0
    assert "62.6285" in out


def test_solve_single_cell(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--target", "extinction-time",
        "--theta", "2", "--g-ai", "0.05", "--rho", "0.05",
    )
    assert code == 0
    assert float(out.strip()) == pytest.approx(243.64, rel=2e-3)


def test_solve_sentinel_output(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--target", "p4-delayed",
        "--theta", "1", "--g-ai", "0.3", "--rho", "0.03", "--p3", "3e-5", "--T", "50",
    )
    assert code == 0
    assert out.strip() == "TAI_PREFERRED"


def test_ev_panel_b(capsys):
    code, out, _ = run_cli(
        capsys, "ev", "--panel", "b", "--g-ai", "0.05", "--rho", "0.05",
        "--p3", "0.1",
    )
    assert code == 0
    assert "ev,0.308575" in out


def test_et_constant(capsys):
    code, out, _ = run_cli(capsys, "et", "--hazard", "constant", "--m", "0.01")
    assert code == 0
    assert float(out.strip()) == pytest.approx(100.0)


def test_et_mounting(capsys):
    code, out, _ = run_cli(
        capsys, "et", "--hazard", "mounting", "--epsilon", "2e-4", "--g-ai", "0.2"
    )
    assert code == 0
    assert float(out.strip()) == pytest.approx(198.17, abs=0.01)


def test_simulate_growth_csv(capsys):
    code, out, _ = run_cli(
        capsys, "simulate-growth", "--horizon", "5", "--dt", "0.5",
        "--saving-rate", "0.3", "--delta", "0.05",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,K,Y,C"
    assert len(lines) == 12


def test_calibrate_c0(capsys):
    code, out, _ = run_cli(capsys, "calibrate-c0")
    assert code == 0
    assert float(out.strip()) == pytest.approx(4.70e4, rel=2e-3)


def test_config_file_and_flag_override(tmp_path, capsys):
    path = tmp_path / "run.cfg"
    path.write_text("p3=0.5\np4=0.25\nT=40\n", encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "solve", "--target", "p3-delayed", "--theta", "1",
        "--g-ai", "0.05", "--rho", "0.002", "--config", str(path),
        "--p4", "3e-5", "--T", "50",
    )
    assert code == 0
    # flag values override the file: this is the (p4=3e-5, T=50) cell
    assert float(out.strip()) == pytest.approx(0.454429, rel=1e-4)


def test_bad_config_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("c0=0.5\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "table", "t1", "--config", str(path))
    assert code == 2
    assert "c0" in err


def test_unknown_key_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("nonsense=1\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "table", "t1", "--config", str(path))
    assert code == 2
    assert "line 1" in err


def test_domain_error_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "solve", "--target", "extinction-time",
        "--theta", "1", "--g-ai", "0.05", "--rho", "0.05", "--c0", "0.2",
    )
    assert code == 2


def test_non_convergence_exits_3(capsys):
    # an unreachable quadrature tolerance exhausts the subdivision budget
    code, _, err = run_cli(
        capsys, "solve", "--target", "epsilon",
        "--theta", "1.0001", "--g-ai", "0.2", "--rho", "0.05",
        "--quad-tol", "1e-30",
    )
    assert code == 3
    assert "non-convergence" in err
