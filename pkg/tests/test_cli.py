import json
from fractions import Fraction

import pytest

from rootcover.cli import _CSV_COLUMNS, _load_config, build_parser, main, run_sweep
from rootcover.errors import ConfigError


def write_config(tmp_path, **overrides):
    cfg = {
        "preset": "planes_p3",
        "r": 3,
        "n_min": 7,
        "n_max": 7,
        "partition": "1,2,4",
    }
    cfg.update(overrides)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    return path


def test_hj_command(capsys):
    assert main(["hj", "7", "5"]) == 0
    out = capsys.readouterr().out
    assert "[2, 2, 3]" in out and "q' = 3" in out


def test_dedekind_command(capsys):
    assert main(["dedekind", "1", "5", "7", "--check"]) == 0
    out = capsys.readouterr().out
    assert "-1/14" in out and "agrees" in out


def test_girstmair_command(capsys):
    assert main(["girstmair", "17"]) == 0
    assert "|O_17| = 15" in capsys.readouterr().out


def test_partition_command(capsys):
    assert main(["partition", "101", "3", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("nu =")


def test_resolve_command(capsys):
    assert main(["resolve", "7", "5", "3", "--table"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "rootcover-resolve/1"
    assert doc["resolution"]["walls"]["13"]["ks"] == [3, 2, 2]
    assert doc["intersections"]["F3"] == "7/1"


def test_resolve_degenerate_exits_nonzero(capsys):
    assert main(["resolve", "7", "3", "3"]) == 1
    assert "Degenerate" in capsys.readouterr().err


def test_invariants_command(capsys):
    assert main([
        "invariants", "--preset", "planes_p3", "--params", "3",
        "--n", "7", "--nu", "1,2,4",
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["chi"] == "1/1" and doc["k3"] == "-14/1" and doc["euler"] == "18/1"
    assert doc["slopes"] == ["7/12", "3/4"]


def test_sweep_fixture_row(tmp_path, capsys):
    path = write_config(tmp_path)
    assert main(["sweep", "--config", str(path)]) == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(_CSV_COLUMNS)
    row = lines[1].split(",")
    assert row[:5] == ["7", "1", "3", "1+2+4", "ok"]
    cols = dict(zip(_CSV_COLUMNS, row))
    assert cols["chi_rat"] == "1/1" and cols["K3_rat"] == "-14/1"
    assert cols["slope1_rat"] == "7/12" and cols["slope2_rat"] == "3/4"
    assert cols["chi"] == "1.000000"
    # exact twins round-trip losslessly
    num, den = cols["chi_err_bound_rat"].split("/")
    assert Fraction(int(num), int(den)) > 0


def test_sweep_deterministic(tmp_path):
    path = write_config(
        tmp_path, n_min=17, n_max=31, partition="asymptotic", seed=5
    )
    first = run_sweep(_load_config(str(path)))
    second = run_sweep(_load_config(str(path)))
    assert first == second


def test_sweep_partial_failure_exit_code(tmp_path, capsys):
    # sum(nu) != 0 mod 11 makes the n = 11 row incompatible
    path = write_config(tmp_path, n_min=7, n_max=11)
    assert main(["sweep", "--config", str(path)]) == 2
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert len(lines) == 3
    assert "incompatible" in lines[2]


def test_sweep_json_envelope(tmp_path, capsys):
    path = write_config(tmp_path, format="json")
    assert main(["sweep", "--config", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "rootcover-report/1"
    assert doc["rows"][0]["status"] == "ok"
    assert doc["rows"][0]["report"]["k3"] == "-14/1"


def test_sweep_output_file(tmp_path):
    out_file = tmp_path / "rows.csv"
    path = write_config(tmp_path, output=str(out_file))
    assert main(["sweep", "--config", str(path)]) == 0
    assert out_file.read_text().startswith(",".join(_CSV_COLUMNS))


def test_sweep_csv_golden(tmp_path):
    # byte-for-byte regression of the CSV surface
    from pathlib import Path

    path = write_config(tmp_path, n_min=7, n_max=13, partition="1,2,4")
    text, code = run_sweep(_load_config(str(path)))
    assert code == 2  # 11 and 13 reject the explicit partition
    golden = Path(__file__).parent / "data" / "sweep_planes3_7_13.csv"
    assert text == golden.read_text()


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"preset": "planes_p3", "r": 3, "n_min": 7, "n_max": 7, "zzz": 1}')
    assert main(["sweep", "--config", str(bad)]) == 1
    with pytest.raises(ConfigError):
        _load_config(str(bad))
    bad.write_text('{"preset": "planes_p3", "r": 3, "n_min": 9, "n_max": 7}')
    assert main(["sweep", "--config", str(bad)]) == 1
    bad.write_text('{"r": 3, "n_min": 7, "n_max": 7}')
    assert main(["sweep", "--config", str(bad)]) == 1
    bad.write_text("not json")
    assert main(["sweep", "--config", str(bad)]) == 1


def test_invariants_from_pair_json(tmp_path, capsys):
    from rootcover.logchern import base_pair_to_json, make_preset

    path = tmp_path / "pair.json"
    path.write_text(base_pair_to_json(make_preset("planes_p3", 3)))
    assert main([
        "invariants", "--pair-json", str(path), "--n", "7", "--nu", "1,2,4",
    ]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["k3"] == "-14/1"


def test_sweep_digits_flag(tmp_path, capsys):
    path = write_config(tmp_path)
    assert main(["sweep", "--config", str(path), "--digits", "2"]) == 0
    out = capsys.readouterr().out
    assert "1.00,-14.00,18.00" in out


def test_sweep_worker_pool(tmp_path):
    path = write_config(
        tmp_path, n_min=7, n_max=31, partition="asymptotic", seed=5, workers=2
    )
    cfg = _load_config(str(path))
    parallel = run_sweep(cfg)
    cfg["workers"] = 1
    assert run_sweep(cfg) == parallel


def test_parser_builds():
    parser = build_parser()
    args = parser.parse_args(["hj", "7", "5"])
    assert args.n == 7 and args.q == 5
