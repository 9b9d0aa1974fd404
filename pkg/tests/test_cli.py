import pytest

from gravcats import analysis, cli
from gravcats.correlations import Branch


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_kv(text):
    values = {}
    for line in text.strip().splitlines():
        key, _, value = line.partition(" = ")
        values[key] = value
    return values


def read_csv(path):
    with open(path, "rb") as handle:
        raw = handle.read()
    assert b"\r" not in raw  # LF line endings
    lines = raw.decode().strip().split("\n")
    assert lines[0] == "T,concurrence,l1_norm,g1,g2,branch"
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        rows.append([float(x) for x in cells[:5]] + [cells[5]])
    return rows


def test_state_decoupled_hot(capsys):
    code, out, _ = run_cli(
        capsys, "state", "--w", "1", "--delta", "0", "--t", "1e9"
    )
    assert code == 0
    values = parse_kv(out)
    assert float(values["rho11"]) == pytest.approx(0.25, abs=1e-8)
    assert float(values["rho14"]) == 0.0
    assert float(values["rho22"]) == pytest.approx(0.25, abs=1e-8)
    assert float(values["rho23"]) == 0.0
    assert float(values["rho44"]) == pytest.approx(0.25, abs=1e-8)
    assert float(values["concurrence"]) == 0.0
    assert values["branch"] == "zero"


def test_state_requires_temperature(capsys):
    code, _, err = run_cli(capsys, "state", "--w", "1", "--delta", "0")
    assert code == 1
    assert "temperature" in err


def test_state_oracle_check_passes(capsys):
    code, _, _ = run_cli(
        capsys, "state", "--w", "1", "--delta", "0.2", "--t", "0.5", "--oracle-check"
    )
    assert code == 0


def test_mixed_parameter_blocks_rejected(capsys):
    code, _, err = run_cli(
        capsys, "threshold", "--w", "1", "--delta", "0.2", "--mass", "1e-12"
    )
    assert code == 1
    assert "not both" in err


def test_threshold_krisnanda_values(capsys):
    code, out, _ = run_cli(
        capsys, "threshold", "--w", "0.015", "--delta", "17.0072"
    )
    assert code == 0
    values = parse_kv(out)
    assert values["status"] == "found"
    assert float(values["t_th"]) == pytest.approx(2.485053, rel=1e-3)


def test_threshold_from_physical_block(capsys):
    code, out, _ = run_cli(
        capsys,
        "threshold",
        "--mass",
        "1e-7",
        "--d",
        "3e-4",
        "--L",
        "1.5e-4",
        "--w-over-kb",
        "0.015",
    )
    assert code == 0
    assert float(parse_kv(out)["t_th"]) == pytest.approx(2.485053, rel=1e-3)


def test_coherence_max_command(capsys):
    code, out, _ = run_cli(capsys, "coherence-max", "--w", "1", "--delta", "0.2")
    assert code == 0
    values = parse_kv(out)
    assert values["status"] == "interior"
    assert float(values["l1_max"]) == pytest.approx(0.2339468, abs=1e-6)


def test_params_logs_both_conventions(capsys):
    code, out, _ = run_cli(
        capsys,
        "params",
        "--mass",
        "1e-12",
        "--d",
        "1e-6",
        "--L",
        "5e-7",
        "--w-over-kb",
        "0.015",
    )
    assert code == 0
    values = parse_kv(out)
    numbers = float(values["delta_over_kB_paper_numbers"])
    text = float(values["delta_over_kB_paper_text"])
    assert numbers == pytest.approx(0.5101e-6, rel=1e-3)
    assert text == pytest.approx(0.5 * numbers, rel=1e-15)
    assert values["convention"] == "paper-numbers"
    assert float(values["delta_over_kB"]) == numbers


def test_params_convention_override(capsys):
    code, out, _ = run_cli(
        capsys,
        "params",
        "--mass",
        "1e-12",
        "--d",
        "1e-6",
        "--L",
        "5e-7",
        "--w-over-kb",
        "0.015",
        "--delta-convention",
        "paper-text",
    )
    assert code == 0
    values = parse_kv(out)
    assert values["convention"] == "paper-text"
    assert float(values["delta_over_kB"]) == pytest.approx(
        0.5 * float(values["delta_over_kB_paper_numbers"]), rel=1e-15
    )


def test_sweep_csv_output(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep",
        "--w",
        "1",
        "--delta",
        "0.2",
        "--t-min",
        "0.05",
        "--t-max",
        "0.1",
        "--n-points",
        "2",
        "--out",
        str(out),
    )
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 2
    assert rows[0][0] == 0.05 and rows[1][0] == 0.1
    # l1 = g1 + g2 survives the round trip exactly (repr round-trips doubles)
    for row in rows:
        assert row[2] == row[3] + row[4]


def test_sweep_missing_grid_is_usage_error(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--w", "1", "--delta", "0.2", "--out", str(tmp_path / "x.csv")
    )
    assert code == 1
    assert "missing" in err


def test_config_file_and_flag_override(tmp_path, capsys):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# sweep configuration\n"
        "w = 1.0\n"
        "delta = 0.2\n"
        "t_min = 0.05\n"
        "t_max = 0.1\n"
        "n_points = 2\n"
        f"out = {tmp_path / 'from_config.csv'}\n"
    )
    code, _, _ = run_cli(capsys, "sweep", "--config", str(config))
    assert code == 0
    assert (tmp_path / "from_config.csv").exists()

    # flags override the file: same config, different delta and output
    override = tmp_path / "override.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep",
        "--config",
        str(config),
        "--delta",
        "0.0",
        "--out",
        str(override),
    )
    assert code == 0
    rows = read_csv(override)
    assert all(row[1] == 0.0 for row in rows)  # decoupled: zero concurrence


def test_sweep_linear_spacing_from_config(tmp_path, capsys):
    config = tmp_path / "linear.cfg"
    out = tmp_path / "linear.csv"
    config.write_text(
        "w = 1.0\ndelta = 0.2\nt_min = 1.0\nt_max = 2.0\n"
        f"n_points = 3\nspacing = linear\nout = {out}\n"
    )
    code, _, _ = run_cli(capsys, "sweep", "--config", str(config))
    assert code == 0
    assert [row[0] for row in read_csv(out)] == [1.0, 1.5, 2.0]


def test_config_unknown_key(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("nonsense = 1\n")
    code, _, err = run_cli(capsys, "state", "--config", str(config), "--t", "1")
    assert code == 1
    assert "unknown key" in err


def test_config_missing_file(capsys):
    code, _, err = run_cli(capsys, "state", "--config", "/nonexistent.cfg", "--t", "1")
    assert code == 1
    assert "cannot read config" in err


def test_figure_2_emits_four_csvs(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "figure", "2", "--out-dir", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.glob("*.csv"))
    assert names == [
        "fig2_w0.1_delta0.01.csv",
        "fig2_w1.0_delta0.3.csv",
        "fig2_w2.0_delta1.2.csv",
        "fig2_w3.0_delta3.0.csv",
    ]
    for name in names:
        assert len(read_csv(tmp_path / name)) == 400


def test_figure_8_low_temperature_row_and_crossing(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "figure", "8", "--out-dir", str(tmp_path))
    assert code == 0
    rows = read_csv(tmp_path / "fig8_w0.015_delta5.101e-07.csv")
    assert rows[0][0] == 1e-5
    assert rows[0][1] == pytest.approx(3.4e-5, rel=0.03)  # published C(T -> 0)
    last_positive = max(row[0] for row in rows if row[1] > 0.0)
    assert last_positive == pytest.approx(0.0013658, rel=0.05)  # published T_th


def test_figure_determinism(tmp_path, capsys):
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    for directory in (dir_a, dir_b):
        code, _, _ = run_cli(capsys, "figure", "8", "--out-dir", str(directory))
        assert code == 0
    name = "fig8_w0.015_delta5.101e-07.csv"
    assert (dir_a / name).read_bytes() == (dir_b / name).read_bytes()


def test_figure_5_prints_threshold(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "figure", "5", "--out-dir", str(tmp_path))
    assert code == 0
    values = parse_kv("\n".join(l for l in out.splitlines() if "=" in l))
    assert float(values["threshold_t"]) == pytest.approx(0.4179166, rel=1e-4)


def test_figure_3_requires_delta_list(tmp_path, capsys):
    code, _, err = run_cli(capsys, "figure", "3", "--out-dir", str(tmp_path))
    assert code == 1
    assert "--delta-list" in err

    code, _, err = run_cli(
        capsys, "figure", "3", "--out-dir", str(tmp_path), "--delta-list", "0.1,0.5"
    )
    assert code == 1  # needs exactly three values

    code, _, err = run_cli(
        capsys,
        "figure",
        "3",
        "--out-dir",
        str(tmp_path),
        "--delta-list",
        "0.005,0.5,2.0",
    )
    assert code == 1  # first value violates delta > w
    assert "delta > w" in err

    code, _, _ = run_cli(
        capsys,
        "figure",
        "3",
        "--out-dir",
        str(tmp_path),
        "--delta-list",
        "0.05,0.5,2.0",
    )
    assert code == 0
    assert len(list(tmp_path.glob("fig3_*.csv"))) == 3


def test_unknown_figure(capsys):
    code, _, err = run_cli(capsys, "figure", "12")
    assert code == 1
    assert "unknown figure" in err


def test_figure_9_variants_same_data(tmp_path, capsys):
    run_cli(capsys, "figure", "9a", "--out-dir", str(tmp_path))
    run_cli(capsys, "figure", "9b", "--out-dir", str(tmp_path))
    a = (tmp_path / "fig9a_w0.015_delta17.0072.csv").read_bytes()
    b = (tmp_path / "fig9b_w0.015_delta17.0072.csv").read_bytes()
    assert a.split(b"\n", 1)[1] == b.split(b"\n", 1)[1]


def test_oracle_check_rejects_tampered_rows():
    params = cli.ModelParams(w=1.0, delta=0.2)
    spec = analysis.SweepSpec(params=params, t_min=0.1, t_max=1.0, n_points=5)
    rows = analysis.sweep(spec)
    cli._check_rows_against_oracle(params, rows)  # genuine rows pass
    bad = rows[2]._replace(concurrence=rows[2].concurrence + 1e-6)
    with pytest.raises(cli.OracleMismatch):
        cli._check_rows_against_oracle(params, rows[:2] + [bad] + rows[3:])


def test_sweep_oracle_check_exit_code(tmp_path, capsys, monkeypatch):
    def broken_reference(params, temperature):
        return 0.5, 0.5, 0.25, 0.25

    monkeypatch.setattr(cli, "_oracle_reference", broken_reference)
    code, _, err = run_cli(
        capsys,
        "sweep",
        "--w",
        "1",
        "--delta",
        "0.2",
        "--t-min",
        "0.1",
        "--t-max",
        "1",
        "--n-points",
        "3",
        "--out",
        str(tmp_path / "x.csv"),
        "--oracle-check",
    )
    assert code == 2
    assert "oracle mismatch" in err
    assert not (tmp_path / "x.csv").exists()  # aborted before writing


def test_csv_floats_round_trip(tmp_path, capsys):
    out = tmp_path / "rt.csv"
    run_cli(
        capsys,
        "sweep",
        "--w",
        "0.015",
        "--delta",
        "17.0072",
        "--t-min",
        "1e-5",
        "--t-max",
        "100",
        "--n-points",
        "7",
        "--out",
        str(out),
    )
    rows = read_csv(out)
    spec = analysis.SweepSpec(
        params=cli.ModelParams(w=0.015, delta=17.0072),
        t_min=1e-5,
        t_max=100.0,
        n_points=7,
    )
    for row, reference in zip(rows, analysis.sweep(spec)):
        assert row[0] == reference.temperature  # exact: repr round-trips
        assert row[1] == reference.concurrence
        assert row[5] == reference.branch.value


def test_branch_column_values(tmp_path, capsys):
    out = tmp_path / "branch.csv"
    run_cli(
        capsys,
        "sweep",
        "--w",
        "1",
        "--delta",
        "0.2",
        "--t-min",
        "0.01",
        "--t-max",
        "100",
        "--n-points",
        "40",
        "--out",
        str(out),
    )
    branches = {row[5] for row in read_csv(out)}
    assert branches == {Branch.RHO_BLOCK_14.value, Branch.ZERO.value}
