import subprocess
import sys

from shipat.cli import main

TV5_LINE = "1 2 5 14 42 131 413 1294 4007 12272 37277 112622 339152 1019457\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCovers:
    def test_upper_brute(self, capsys):
        code, out, _ = run_cli(capsys, "covers", "--path", "UD",
                               "--dir", "upper", "--method", "brute")
        assert code == 0
        assert out == "UDUD\nUUDD\n"

    def test_lower_both_agree(self, capsys):
        code, out, _ = run_cli(capsys, "covers", "--path", "UDUDUD",
                               "--dir", "lower", "--method", "both")
        assert code == 0
        assert out == "count_closed,1\ncount_brute,1\nAGREE\n"

    def test_closed_count(self, capsys):
        code, out, _ = run_cli(capsys, "covers", "--path", "UUUUDDUDDD",
                               "--dir", "upper", "--method", "closed")
        assert code == 0
        assert out == "11\n"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "covers", "--path", "UDDU",
                               "--dir", "lower", "--method", "brute")
        assert code == 2
        assert "error" in err

    def test_alias_input(self, capsys):
        code, out, _ = run_cli(capsys, "covers", "--path", "1010",
                               "--dir", "lower", "--method", "brute")
        assert code == 0
        assert out == "UD\n"


class TestCountAvoiders:
    def test_closed_csv(self, capsys):
        code, out, _ = run_cli(capsys, "count-avoiders", "--family", "te",
                               "--k", "2", "--n-max", "4", "--method", "closed")
        assert code == 0
        assert out == "n,count\n0,1\n1,2\n2,4\n3,8\n4,16\n"

    def test_both_agree(self, capsys):
        code, out, _ = run_cli(capsys, "count-avoiders", "--family", "te",
                               "--k", "2", "--n-max", "5", "--method", "both")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,count,count_brute,agree"
        assert all(line.endswith("AGREE") for line in lines[1:])

    def test_tv5_oeis_line(self, capsys):
        code, out, _ = run_cli(capsys, "count-avoiders", "--family", "tv",
                               "--k", "5", "--n-max", "13",
                               "--method", "closed", "--format", "oeis")
        assert code == 0
        assert out == TV5_LINE

    def test_brute_catalan_when_pattern_too_big(self, capsys):
        code, out, _ = run_cli(capsys, "count-avoiders", "--family", "tf",
                               "--k", "9", "--n-max", "3", "--method", "brute")
        assert code == 0
        assert out == "n,count\n0,1\n1,2\n2,5\n3,14\n"

    def test_bad_k(self, capsys):
        code, _, err = run_cli(capsys, "count-avoiders", "--family", "te",
                               "--k", "1", "--n-max", "3")
        assert code == 2


class TestOthers:
    def test_zeta(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--path", "UDUDUD")
        assert code == 0
        assert out == "UUUDDD\n"

    def test_region(self, capsys):
        code, out, _ = run_cli(capsys, "region", "--area", "0,0,0")
        assert code == 0
        assert out == "x1-x3>1\nx2-x3>1\nx1-x2>1\n"

    def test_region_trivial(self, capsys):
        code, out, _ = run_cli(capsys, "region", "--area", "0,1,2")
        assert code == 0
        assert all(line.startswith("0<") for line in out.strip().splitlines())

    def test_region_bad_area(self, capsys):
        code, _, err = run_cli(capsys, "region", "--area", "0,7")
        assert code == 2

    def test_poset_dot(self, capsys):
        code, out, _ = run_cli(capsys, "poset", "--max-size", "2")
        assert code == 0
        assert out.startswith("digraph")
        assert '"UUDD" -> "UD";' in out

    def test_poset_node_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SHIPAT_MAX_NODES", "3")
        code, _, err = run_cli(capsys, "poset", "--max-size", "4")
        assert code == 1
        assert "exceed" in err

    def test_poset_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SHIPAT_MAX_NODES", "3")
        code, out, _ = run_cli(capsys, "poset", "--max-size", "3",
                               "--max-nodes", "100")
        assert code == 0

    def test_verify_core(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "core", "--n-max", "5")
        assert code == 0
        assert "checks passed" in out
        assert "FAIL" not in out

    def test_determinism(self, capsys):
        outputs = set()
        for _ in range(2):
            _, out, _ = run_cli(capsys, "count-avoiders", "--family", "tv",
                                "--k", "3", "--n-max", "6", "--method", "closed")
            outputs.add(out)
        assert len(outputs) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "shipat.cli", "zeta", "--path", "UDUD"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "UUDD\n"
