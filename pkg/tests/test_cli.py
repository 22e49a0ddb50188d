"""Command-line behavior: outputs, determinism, exit codes."""

import json

import pytest

from maclab.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestCompute:
    def test_E_json(self, capsys):
        rc, out, _ = run(
            capsys, "E", "--n", "3", "--mu", "2,1,0", "--format", "json"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["schema"] == "macdonald-lab/1"
        assert doc["mu"] == [2, 1, 0]
        exps = [t["x"] for t in doc["terms"]]
        assert [1, 1, 1] in exps and [2, 1, 0] in exps

    def test_E_latex_mentions_t_not_v(self, capsys):
        rc, out, _ = run(
            capsys, "E", "--n", "3", "--mu", "2,1,0", "--format", "latex"
        )
        assert rc == 0
        assert "t" in out and "v" not in out

    def test_relative_E(self, capsys):
        rc, out, _ = run(
            capsys, "E", "--n", "3", "--mu", "1,0,0", "--z", "2,1,3",
            "--format", "json",
        )
        assert rc == 0
        assert json.loads(out)["z"] == [2, 1, 3]

    def test_count(self, capsys):
        rc, out, _ = run(
            capsys, "count", "--n", "10", "--mu", "4,3,3,3,2,2,1,1,0,0",
            "--what", "naf",
        )
        assert rc == 0
        assert out.strip() == "3189375"

    def test_word_and_inv(self, capsys):
        rc, out, _ = run(capsys, "word", "--n", "3", "--mu", "2,1,0")
        assert rc == 0
        assert out.strip() == "pi pi s1 pi"
        rc, out, _ = run(
            capsys, "inv", "--n", "5", "--mu", "0,4,5,1,4", "--format", "json"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["length"] == 23
        assert len(doc["inversions"]) == 23

    def test_fillings_and_walks(self, capsys):
        rc, out, _ = run(
            capsys, "fillings", "--n", "3", "--mu", "2,2,0", "--format", "json"
        )
        assert rc == 0
        assert json.loads(out)["count"] == 4
        rc, out, _ = run(capsys, "walks", "--n", "2", "--mu", "3,0")
        assert rc == 0
        assert out.splitlines() == [
            "pi s1 pi s1 pi",
            "pi s1 pi 1 pi",
            "pi 1 pi s1 pi",
            "pi 1 pi 1 pi",
        ]

    def test_P_and_cst_agree(self, capsys):
        rc1, out1, _ = run(
            capsys, "P", "--n", "3", "--lam", "2,1,0", "--format", "json"
        )
        rc2, out2, _ = run(
            capsys, "P", "--n", "3", "--lam", "2,1,0", "--method", "cst",
            "--format", "json",
        )
        assert rc1 == rc2 == 0
        assert json.loads(out1)["terms"] == json.loads(out2)["terms"]


class TestDeterminism:
    def test_byte_identical_repeats(self, capsys):
        a = run(capsys, "E", "--n", "3", "--mu", "0,2,1", "--format", "json")
        b = run(capsys, "E", "--n", "3", "--mu", "0,2,1", "--format", "json")
        assert a == b
        a = run(capsys, "walks", "--n", "3", "--mu", "1,2,0", "--format", "json")
        b = run(capsys, "walks", "--n", "3", "--mu", "1,2,0", "--format", "json")
        assert a == b


class TestExitCodes:
    def test_malformed_length(self, capsys):
        rc, _, err = run(capsys, "E", "--n", "3", "--mu", "2,1")
        assert rc == 2
        assert "length" in err

    def test_malformed_value(self, capsys):
        rc, _, err = run(capsys, "E", "--n", "3", "--mu", "2,-1,0")
        assert rc == 2

    def test_verify_pass(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "golden", "--n", "3")
        assert rc == 0
        assert "checks passed" in out

    def test_verify_all_small(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "all", "--n", "2")
        assert rc == 0
        total = out.strip().split("/")
        assert total[0] == total[1].split()[0]

    def test_latex_fails_loudly_on_odd_half_powers(self, capsys):
        # F_mu carries t^(1/2) factors, which have no q,t rendering
        rc, _, err = run(
            capsys, "F", "--n", "2", "--mu", "1,0", "--format", "latex"
        )
        assert rc == 2
        assert err.strip() != ""

    def test_verify_failure_exits_one(self, capsys, monkeypatch):
        from maclab import cli

        monkeypatch.setattr(
            cli.verify, "run_suite", lambda name, n: [("made-up", False, "boom")]
        )
        rc, out, err = run(capsys, "verify", "--suite", "eigen", "--n", "2")
        assert rc == 1
        assert "FAIL made-up" in err
        assert "0/1" in out

    def test_thread_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MACLAB_THREADS", "banana")
        rc, _, err = run(capsys, "count", "--n", "2", "--mu", "1,0", "--what", "naf")
        assert rc == 2
        monkeypatch.setenv("MACLAB_THREADS", "2")
        rc, out, _ = run(capsys, "count", "--n", "2", "--mu", "1,0", "--what", "naf")
        assert rc == 0 and out.strip() == "1"
