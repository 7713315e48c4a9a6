import csv
import io
import json

import pytest

from occlib.cli import main, parse_rational


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestParsing:
    def test_no_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_rational_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "skew", "--plo", "bogus"])
        assert exc.value.code == 2

    def test_parse_rational(self):
        from fractions import Fraction
        assert parse_rational("31/125") == Fraction(31, 125)
        assert parse_rational("0.25") == Fraction(1, 4)


class TestCutstat:
    def test_builtin_text(self, capsys):
        rc, out, _ = run(capsys, "cutstat", "--builtin")
        assert rc == 0
        assert "triangle" in out and "l1=-1/7" in out

    def test_stdin_csv(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\nC}\n"))
        rc, out, _ = run(capsys, "cutstat", "--format", "csv")
        assert rc == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["q"] == "1/4 0 3/4 0"
        assert rows[0]["lambda1"] == "-1/7"
        assert rows[1]["name"] == "C}"
        assert rows[1]["combined"] == "-67/476"

    def test_file_json(self, capsys, tmp_path):
        src = tmp_path / "graphs.g6"
        src.write_text("DhC\n")
        rc, out, _ = run(capsys, "cutstat", "--format", "json", str(src))
        assert rc == 0
        rows = json.loads(out)
        assert rows[0]["edges"] == 4
        assert rows[0]["lambda2"] == "1/16"

    def test_missing_file(self, capsys):
        rc, _, err = run(capsys, "cutstat", "/no/such/file.g6")
        assert rc == 2
        assert "occ:" in err

    def test_bad_graph6(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("!!!\n"))
        rc, _, err = run(capsys, "cutstat")
        assert rc == 2
        assert "occ:" in err

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "table.txt"
        rc, out, _ = run(capsys, "cutstat", "--builtin", "--out", str(dest))
        assert rc == 0
        assert out == ""
        assert "triangle" in dest.read_text()


class TestVerify:
    def test_smallp_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "smallp")
        assert rc == 0
        assert "certificates: 99/99 pass" in out
        assert "result: PASS (118 checks)" in out

    def test_skew_below_threshold_fails(self, capsys):
        rc, out, _ = run(capsys, "verify", "skew", "--plo", "6/25",
                         "--phi", "31/125")
        assert rc == 1
        assert "FAIL certificate:odd:3-forest" in out
        assert "certificates: 50/51 pass" in out

    def test_schur_json(self, capsys):
        rc, out, _ = run(capsys, "verify", "schur", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["campaign"] == "oldc-claims"
        assert len(payload["report"]["checks"]) == 22

    def test_uniform_with_workers(self, capsys):
        rc, out, _ = run(capsys, "verify", "uniform", "--workers", "2")
        assert rc == 0
        assert "result: PASS (27 checks)" in out


class TestFamiliesCommand:
    def test_max_independent(self, capsys):
        rc, out, _ = run(capsys, "families", "max-independent",
                         "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["alpha"] == 8
        assert payload["maximum_sets"] == 32
        assert payload["triangle_intersecting"] == 4
        assert all(len(s) == 8 for s in payload["sets"])

    def test_max_independent_seeded_rerun(self, capsys):
        _, out1, _ = run(capsys, "families", "max-independent",
                         "--seed", "9", "--format", "json")
        _, out2, _ = run(capsys, "families", "max-independent",
                         "--seed", "9", "--format", "json")
        assert out1 == out2

    def test_bound_check_k4(self, capsys):
        rc, out, _ = run(capsys, "families", "bound-check", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["lambda_min"] == "-1/7"
        assert payload["nu"] == "1/8"
        assert payload["family_size_bound"] == "8"
        assert len(payload["umvirate_audits"]) == 4
        assert all(a["ok"] for a in payload["umvirate_audits"])

    def test_bound_check_k5(self, capsys):
        rc, out, _ = run(capsys, "families", "bound-check", "--n", "5",
                         "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["family_size_bound"] == "128"
        assert len(payload["umvirate_audits"]) == 10
        assert all(a["mu"] == "1/8" for a in payload["umvirate_audits"])


class TestHoffman:
    def test_stability_coefficient(self, capsys):
        rc, out, _ = run(capsys, "hoffman", "--lambda-min=-1/7",
                         "--gap", "1/952")
        assert rc == 0
        assert "nu: 1/8" in out
        assert "stability_coefficient: 136" in out

    def test_cube_bias(self, capsys):
        rc, out, _ = run(capsys, "hoffman", "--lambda-min=-27/485",
                         "--format", "json")
        assert rc == 0
        assert json.loads(out)["nu"] == "27/512"

    def test_domain_error(self, capsys):
        rc, _, err = run(capsys, "hoffman", "--lambda-min=-2")
        assert rc == 2
        assert "occ:" in err


class TestDeterminism:
    def test_json_identical_after_runtime_exclusion(self, capsys):
        _, out1, _ = run(capsys, "verify", "schur", "--format", "json")
        _, out2, _ = run(capsys, "verify", "schur", "--format", "json")
        a, b = json.loads(out1), json.loads(out2)
        a.pop("runtime_seconds"), b.pop("runtime_seconds")
        assert json.dumps(a) == json.dumps(b)

    def test_csv_byte_identical(self, capsys):
        args = ("verify", "families", "--campaign-size", "120",
                "--format", "csv")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        rows = list(csv.DictReader(io.StringIO(out1)))
        assert all(r["ok"] == "pass" for r in rows)
