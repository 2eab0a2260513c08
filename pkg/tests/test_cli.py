import json

import pytest

from setfam.cli import main
from setfam.errors import ParamRangeError
from setfam.search.verify import parse_grid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound_plain_and_json(capsys):
    code, out, _ = run(capsys, "bound", "main1", "--n", "7", "--k", "3", "--t", "0", "--r", "2")
    assert code == 0 and out.strip() == "30"
    code, out, _ = run(capsys, "bound", "main1", "--n", "7", "--k", "3", "--t", "0", "--r", "2", "--json")
    obj = json.loads(out)
    assert obj == {
        "which": "main1",
        "params": {"n": 7, "k": 3, "t": 0, "r": 2},
        "regime": "i",
        "value": "30",
    }


def test_bound_usage_error(capsys):
    code, _, err = run(capsys, "bound", "w23", "--n", "6", "--k", "2", "--t", "0")
    assert code == 2
    assert "k >= 3" in err


def test_bound_unchecked(capsys):
    code, out, _ = run(
        capsys, "bound", "f16", "--n", "4", "--k", "1", "--t", "1", "--unchecked", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == "3" and "unchecked" in obj["regime"]


def test_construct_check_roundtrip(tmp_path, capsys):
    out_f = tmp_path / "star.fam"
    code, out, _ = run(capsys, "construct", "full_star", "--n", "7", "--k", "3", "--out", str(out_f))
    assert code == 0 and "size 15" in out
    code, out, _ = run(capsys, "check", "--pred", "shifted", "--family", str(out_f))
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "check", "--pred", "t-intersecting", "--t", "1", "--family", str(out_f))
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "check", "--pred", "diversity", "--family", str(out_f))
    assert out.strip() == "max_degree=15 diversity=0"
    code, out, _ = run(
        capsys, "check", "--pred", "cross", "--family", str(out_f), "--family2", str(out_f)
    )
    assert code == 0 and out.strip() == "true"


def test_construct_pair_files(tmp_path, capsys):
    f1, f2 = tmp_path / "F.fam", tmp_path / "G.fam"
    code, out, _ = run(
        capsys, "construct", "main1_pair_r_sets", "--n", "7", "--k", "3", "--t", "0",
        "--r", "2", "--out", str(f1), "--out2", str(f2),
    )
    assert code == 0 and "size 30" in out
    code, out, _ = run(capsys, "check", "--pred", "cross", "--family", str(f1), "--family2", str(f2))
    assert out.strip() == "true"
    # pair construction without --out2 is a usage error
    code, _, err = run(
        capsys, "construct", "main1_pair_r_sets", "--n", "7", "--k", "3", "--t", "0",
        "--r", "2", "--out", str(f1),
    )
    assert code == 2 and "out2" in err


def test_check_malformed_family(tmp_path, capsys):
    bad = tmp_path / "bad.fam"
    bad.write_text("{1,2}\n")
    code, _, err = run(capsys, "check", "--pred", "shifted", "--family", str(bad))
    assert code == 2 and "header" in err


def test_search_json_schema(capsys):
    code, out, _ = run(
        capsys, "search", "hemibundled_max", "--n", "5", "--k", "2", "--t", "0", "--r", "1",
        "--engine", "brute", "--json", "--no-timing",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "hemibundled_max"
    assert obj["optimum"] == "8" and obj["bound"] == "8"
    assert obj["matches_bound"] is True
    assert obj["maximizer_count"] == 15
    assert {"representative", "partner", "size"} <= set(obj["classes"][0])
    assert "elapsed_ms" not in obj


def test_search_json_is_byte_identical(capsys):
    argv = (
        "search", "s_union_max", "--n", "6", "--s", "4",
        "--engine", "clique", "--json", "--no-timing",
    )
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_search_infeasible_exit_code(capsys):
    code, _, err = run(capsys, "search", "s_union_max", "--n", "8", "--s", "4")
    assert code == 3 and "infeasible" in err


def test_search_timeout_exit_code(capsys):
    code, _, err = run(
        capsys, "search", "cross_pair_max", "--n", "8", "--k", "3", "--r", "2",
        "--engine", "brute", "--backend", "python", "--max-seconds", "0.01",
    )
    assert code == 4 and "timeout" in err


def test_verify_ok_and_json(capsys):
    code, out, _ = run(
        capsys, "verify", "f16", "--grid", "k=2;t=0,1;n=2k+t..2k+t+2", "--engine", "brute"
    )
    assert code == 0
    assert out.strip().endswith("verified")
    code, out, _ = run(
        capsys, "verify", "katona", "--grid", "n=5;s=2..3", "--json", "--no-timing"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] is True
    assert [row["status"] for row in obj["rows"]] == ["ok", "ok"]


def test_verify_skips_out_of_range_rows(capsys):
    code, out, _ = run(
        capsys, "verify", "main1", "--grid", "k=2;t=0;n=5;r=1..5", "--engine", "brute"
    )
    # r <= n-k-t+1 = 4; the r=5 row is skipped, everything else verified
    assert code == 0
    assert "SKIP" in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import setfam.cli as cli_mod
    from setfam.bounds import Params
    from setfam.search import Problem, solve
    from setfam.search.verify import VerifyResult, VerifyRow

    report = solve(Problem("hemibundled_max", Params(n=5, k=2, t=0, r=1), "brute"))
    row = VerifyRow(report.params, None, report, False, None)

    def fake_verify(*a, **k):
        return VerifyResult("f16", [row])

    monkeypatch.setattr(cli_mod, "verify_grid", fake_verify)
    code = main(["verify", "f16", "--grid", "k=2;t=0;n=5"])
    assert code == 1


def test_bound_union_accepts_s_or_d(capsys):
    code, out, _ = run(capsys, "bound", "katona_odd", "--n", "7", "--s", "5")
    assert code == 0 and out.strip() == "44"
    code, out, _ = run(capsys, "bound", "katona_odd", "--n", "7", "--d", "2")
    assert code == 0 and out.strip() == "44"
    code, _, err = run(capsys, "bound", "main5_even", "--n", "7", "--s", "5", "--r", "1")
    assert code == 2 and "parity" in err


def test_threads_default_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SETFAM_THREADS", "3")
    from setfam.cli import build_parser

    args = build_parser().parse_args(["verify", "katona", "--grid", "n=5;s=2"])
    assert args.threads == 3
    args = build_parser().parse_args(
        ["verify", "katona", "--grid", "n=5;s=2", "--threads", "2"]
    )
    assert args.threads == 2


def test_grid_parser():
    rows = parse_grid("k=2;t=0,1;n=2k+t..2k+t+1")
    assert {"k": 2, "t": 0, "n": 4} in rows and {"k": 2, "t": 1, "n": 6} in rows
    assert len(rows) == 4
    assert parse_grid("n=7;s=4,5") == [{"n": 7, "s": 4}, {"n": 7, "s": 5}]
    with pytest.raises(ParamRangeError):
        parse_grid("k=2;n=2q..3")
    with pytest.raises(ParamRangeError):
        parse_grid("nn=4")
    with pytest.raises(ParamRangeError):
        parse_grid("k=;n=4")


def test_threads_flag_gives_identical_results(capsys):
    argv = ("verify", "katona", "--grid", "n=4..6;s=2..2", "--json", "--no-timing")
    _, out1, _ = run(capsys, *argv, "--threads", "1")
    _, out2, _ = run(capsys, *argv, "--threads", "4")
    assert out1 == out2
