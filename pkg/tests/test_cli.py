import json

import pytest

from lcseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# compute


def test_compute_gcd_fixture(capsys):
    # fixture value produced by the gcd oracle (s^6(x) = x^4+x^3+1 is
    # irreducible and coprime to x^6+1, so the full x^6+1 remains)
    rep = run_json(capsys, "compute", "--seq", "100110", "--format", "bits", "--algorithm", "gcd")
    assert rep["complexity"] == 6
    assert rep["min_poly_bits"] == "1000001"
    assert rep["algorithm"] == "GcdMethod"
    assert rep["n"] == 6


def test_compute_auto_all_ones(capsys):
    rep = run_json(capsys, "compute", "--seq", "111", "--algorithm", "auto")
    assert rep["complexity"] == 1
    assert rep["min_poly_human"] == "x+1"
    assert rep["within_bound"] is True


def test_compute_fast_fixture(capsys):
    rep = run_json(capsys, "compute", "--seq", "000101", "--algorithm", "fast")
    assert rep["complexity"] == 4
    assert rep["min_poly_bits"] == "10101"  # (x^2+x+1)^2 = x^4+x^2+1
    assert rep["min_poly_human"] == "(x^2+x+1)^2"
    assert rep["algorithm"] == "Fast3x2n"
    assert rep["within_bound"] is True


def test_compute_hex_input(capsys):
    rep = run_json(
        capsys, "compute", "--seq", "a1", "--format", "hex", "--len", "8",
        "--algorithm", "gcd",
    )
    assert rep["n"] == 8
    assert rep["input_format"] == "hex"
    bits_rep = run_json(
        capsys, "compute", "--seq", "01011000", "--algorithm", "gcd"
    )
    assert rep["complexity"] == bits_rep["complexity"]


def test_compute_from_file(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("10011010\n")
    rep = run_json(capsys, "compute", "--in", str(path), "--algorithm", "games-chan")
    assert rep["complexity"] == 7
    assert rep["ops"]["total"] <= rep["bound"] == 8 + 3


def test_compute_plain_output(capsys):
    code, out, err = run(capsys, "compute", "--seq", "111", "--plain")
    assert code == 0
    assert "complexity : 1" in out


def test_compute_malformed_input_exit_2(capsys):
    code, out, err = run(capsys, "compute", "--seq", "10x1")
    assert code == 2 and err
    code, out, err = run(capsys, "compute", "--seq", "a1", "--format", "hex")
    assert code == 2  # missing --len
    code, out, err = run(capsys, "compute", "--seq", "111", "--algorithm", "ppp")
    assert code == 2  # missing --poly
    code, out, err = run(capsys, "compute")
    assert code == 2  # neither --seq nor --in


def test_compute_unsupported_exit_3(capsys):
    code, out, err = run(capsys, "compute", "--seq", "000101", "--algorithm", "games-chan")
    assert code == 3 and err
    code, out, err = run(capsys, "compute", "--seq", "0011010", "--algorithm", "fast")
    assert code == 3  # N=7 has no fast family
    code, out, err = run(capsys, "compute", "--seq", "0011010", "--algorithm", "general")
    assert code == 3


def test_compute_ppp_with_poly(capsys):
    rep = run_json(
        capsys, "compute", "--seq", "000101", "--algorithm", "ppp", "--poly", "111"
    )
    assert rep["complexity"] == 4
    assert rep["algorithm"] == "PPP"


def test_stdout_carries_only_json(capsys):
    code, out, err = run(capsys, "compute", "--seq", "111")
    assert code == 0
    json.loads(out)  # no diagnostics interleaved


def test_compute_byte_stable_given_same_flags(capsys):
    outs = []
    for _ in range(2):
        code, out, err = run(capsys, "compute", "--seq", "100110", "--algorithm", "gcd")
        assert code == 0
        rep = json.loads(out)
        rep["elapsed_ns"] = 0  # timing is the only run-dependent field
        outs.append(json.dumps(rep, indent=2))
    assert outs[0] == outs[1]


# ---------------------------------------------------------------------------
# verify


def test_verify_exhaustive_n12(capsys):
    rep = run_json(capsys, "verify", "--n", "12", "--exhaustive")
    assert rep["checked"] == 4096
    assert rep["mismatches"] == 0
    assert rep["bound_violations"] == 0


def test_verify_exhaustive_n9(capsys):
    rep = run_json(capsys, "verify", "--n", "9", "--exhaustive")
    assert rep["checked"] == 512
    assert rep["mismatches"] == 0


def test_verify_family_campaign(capsys):
    rep = run_json(
        capsys, "verify", "--family", "3x2n", "--n-max", "6", "--trials", "40",
        "--seed", "7",
    )
    assert rep["mismatches"] == 0
    assert rep["bound_violations"] == 0
    assert rep["checked"] == 7 * 40


def test_verify_reproducible(capsys):
    outs = []
    for _ in range(2):
        code, out, err = run(
            capsys, "verify", "--family", "5x2n", "--n-max", "4", "--trials", "25",
            "--seed", "99",
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_flag_validation(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 2
    code, out, err = run(capsys, "verify", "--n", "8", "--family", "pow2")
    assert code == 2


# ---------------------------------------------------------------------------
# bench


def test_bench_bound_columns(capsys):
    rows = run_json(
        capsys, "bench", "--family", "pow2", "--n-max", "10", "--trials", "5",
        "--seed", "1",
    )
    row = next(r for r in rows if r["N"] == 1024)
    assert row["bound"] == 1024 + 10
    assert row["ops_max"] <= row["bound"]

    rows = run_json(
        capsys, "bench", "--family", "3x2n", "--n-max", "10", "--trials", "5",
        "--seed", "1",
    )
    row = next(r for r in rows if r["N"] == 3 * 1024)
    assert row["bound"] == 7 * 1024 + 20

    rows = run_json(
        capsys, "bench", "--family", "5x2n", "--n-max", "10", "--trials", "5",
        "--seed", "1",
    )
    row = next(r for r in rows if r["N"] == 5 * 1024)
    assert row["bound"] == 16.75 * 1024 + 20
    assert row["beta_max"] <= row["bound"] / row["N"]


def test_bench_csv(capsys):
    code, out, err = run(
        capsys, "bench", "--family", "pow2", "--n-max", "3", "--trials", "3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,")
    assert len(lines) == 4


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_x2x1(capsys):
    rep = run_json(capsys, "enumerate", "--poly", "111", "--max-power", "2")
    rows = {r["l"]: r for r in rep["rows"]}
    assert rows[1] == {"l": 1, "i": 0, "period": 3, "formula": 1, "brute_force": 1, "pass": True}
    assert rows[2]["formula"] == 2 and rows[2]["brute_force"] == 2 and rows[2]["pass"]
    assert rep["all_pass"] is True


def test_enumerate_cubic(capsys):
    rep = run_json(capsys, "enumerate", "--poly", "1101", "--max-power", "2")
    rows = {r["l"]: r for r in rep["rows"]}
    assert rows[2]["formula"] == 4 and rows[2]["brute_force"] == 4


def test_enumerate_rejects_non_primitive(capsys):
    code, out, err = run(capsys, "enumerate", "--poly", "11111", "--max-power", "2")
    assert code == 2 and err


def test_enumerate_infeasible_exit_4(capsys):
    code, out, err = run(capsys, "enumerate", "--poly", "111", "--max-power", "11")
    assert code == 4 and err
