"""End-to-end tests of the command-line surface."""

import json

from trilog.app import main
from trilog.field import cyc_pow, fp2_mul


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


# ---------------------------------------------------------------------------
# Tables and strategy
# ---------------------------------------------------------------------------


def test_tables_sike434(capsys):
    code, out = run(capsys, "tables", "--params", "SIKEp434")
    assert code == 0
    assert out["w4_ell2_kib"] == 47.25
    assert out["w3_ell3_kib"] == 63.98
    assert out["bit_length"] == 434


def test_tables_dump_needs_ell(capsys, tmp_path):
    code, out = run(capsys, "tables", "--dump", str(tmp_path / "t.bin"))
    assert code == 2
    assert out["kind"] == "UsageError"


def test_tables_dump(capsys, tmp_path):
    path = tmp_path / "t.bin"
    code, out = run(capsys, "tables", "--dump", str(path), "--ell", "3", "--w", "1")
    assert code == 0
    assert out["dump"]["bytes"] == path.stat().st_size


def test_strategy_explicit_weights(capsys):
    code, out = run(capsys, "strategy", "--n", "2", "--left", "1", "--right", "1")
    assert code == 0
    assert out["splits"] == [1]
    assert out["cost"] == 2.0


def test_strategy_partial_weights(capsys):
    code, out = run(capsys, "strategy", "--n", "5")
    assert code == 2


def test_strategy_non_numeric_weight(capsys):
    code, out = run(capsys, "strategy", "--n", "3", "--left", "abc", "--right", "1")
    assert code == 2
    assert out["kind"] == "UsageError"
    assert "abc" in out["error"]


def test_strategy_from_params(capsys):
    code, out = run(capsys, "strategy", "--params", "SIKEp434", "--ell", "2", "--w", "4")
    assert code == 0
    assert out["n"] == 54
    assert len(out["splits"]) == 53


# ---------------------------------------------------------------------------
# Solve and compress
# ---------------------------------------------------------------------------


def test_solve(capsys, g27):
    code, out = run(
        capsys, "solve", "--ell", "3",
        "--base", g27.to_hex(), "--challenge", cyc_pow(g27, 5).to_hex(),
    )
    assert code == 0
    assert out["value"] == 5
    assert out["op_counts"]["zmod_inv"] == 0


def test_solve_rejects_base_outside_subgroup(capsys, g27, g16):
    mixed = fp2_mul(g16, g27)
    code, out = run(capsys, "solve", "--ell", "2", "--base", mixed.to_hex(), "--challenge", mixed.to_hex())
    assert code == 1
    assert out["kind"] == "DegenerateInputError"


def test_compress_synthetic(capsys):
    code, out = run(capsys, "compress", "--ell", "3", "--w", "1", "--synthetic", "5,7,11,2")
    assert code == 0
    assert (out["t0"], out["t1"], out["t2"], out["flag"]) == (10, 8, 16, 0)
    assert out["expected"] == {"t0": 10, "t1": 8, "t2": 16, "flag": 0}
    assert out["base_label"] == 1


def test_compress_from_hex_values(capsys):
    _, synth = run(capsys, "compress", "--ell", "3", "--synthetic", "0,1,1,3", "--seed", "2")
    flags = [f"--{name}={value}" for name, value in synth["tuple"].items()]
    code, out = run(capsys, "compress", "--ell", "3", *flags)
    assert code == 0
    assert (out["t0"], out["t1"], out["t2"], out["flag"]) == (24, 1, 0, 1)


def test_compress_four_dlogs(capsys):
    code, out = run(capsys, "compress", "--ell", "3", "--synthetic", "5,7,11,2", "--four-dlogs")
    assert code == 0
    assert out["method"] == "four_dlogs"
    assert out["op_counts"]["zmod_inv"] == 1


def test_compress_missing_values(capsys):
    code, out = run(capsys, "compress", "--ell", "3")
    assert code == 2
    assert "missing pairing values" in out["error"]


def test_compress_singular(capsys):
    code, out = run(capsys, "compress", "--ell", "3", "--synthetic", "1,1,1,1")
    assert code == 1
    assert out["kind"] == "ParameterError"


# ---------------------------------------------------------------------------
# Bench, selftest, errors
# ---------------------------------------------------------------------------


def test_bench_quick(capsys):
    code, out = run(capsys, "bench", "--ell", "3", "--w-set", "1,3", "--trials", "2")
    assert code == 0
    assert set(out["per_w"]) == {"1", "3"}
    assert out["argmin_w"] in (1, 3)


def test_selftest(capsys):
    code, out = run(capsys, "selftest", "--trials", "5")
    assert code == 0
    assert out["failures"] == 0


def test_unknown_params(capsys):
    code, out = run(capsys, "tables", "--params", "SIKEp999")
    assert code == 1
    assert out["kind"] == "UnknownParamsError"


def test_bad_flag(capsys):
    assert main(["tables", "--bogus"]) == 2


def test_out_and_save(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TRILOG_DATA_DIR", str(tmp_path / "store"))
    out_file = tmp_path / "r.json"
    code, out = run(capsys, "tables", "--out", str(out_file), "--save", "toy")
    assert code == 0
    assert json.loads(out_file.read_text()) == out
    assert json.loads((tmp_path / "store" / "tables" / "toy.json").read_text()) == out


def test_version(capsys):
    assert main(["--version"]) == 0
    assert "trilog" in capsys.readouterr().out
