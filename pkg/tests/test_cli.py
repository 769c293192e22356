"""CLI behaviour: outputs, formats, exit codes, determinism."""

import json

import pytest

from skewdyck.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestCount:
    def test_single_length(self, capsys):
        rc, out, _ = run(capsys, "count", "--t", "2", "--n", "9")
        assert rc == 0
        assert out.splitlines()[-1].split() == ["9", "19"]

    def test_parity_zero(self, capsys):
        rc, out, _ = run(capsys, "count", "--t", "2", "--n", "8")
        assert rc == 0
        assert out.splitlines()[-1].split() == ["8", "0"]

    def test_t3_length8(self, capsys):
        # exhaustively confirmed count (see test_automaton): five words
        rc, out, _ = run(capsys, "count", "--t", "3", "--n", "8")
        assert rc == 0
        assert out.splitlines()[-1].split() == ["8", "5"]

    def test_range_csv(self, capsys):
        rc, out, _ = run(capsys, "count", "--n", "0:6", "--format", "csv")
        assert rc == 0
        assert out.splitlines()[0] == "length,count"
        assert out.splitlines()[-1] == "6,4"

    def test_json_format(self, capsys):
        rc, out, _ = run(capsys, "count", "--n", "3:3", "--format", "json")
        data = json.loads(out)
        assert data == [{"length": "3", "count": "1"}]

    def test_bad_t_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "--t", "1", "--n", "3"])
        assert exc.value.code == 2


class TestSeries:
    def test_g0_text(self, capsys):
        rc, out, _ = run(capsys, "series", "g0", "--order", "22")
        assert rc == 0
        assert "12921*z^21" in out

    def test_s4_laurent(self, capsys):
        rc, out, _ = run(capsys, "series", "s4", "--order", "27")
        assert rc == 0
        assert out.startswith("z^-1 - z^2")
        assert "280250*z^26" in out

    def test_r_series(self, capsys):
        rc, out, _ = run(capsys, "series", "R", "--order", "8")
        assert rc == 0
        assert "562*z^5" in out and "20071*z^7" in out

    def test_prefix_selector(self, capsys):
        rc, out, _ = run(capsys, "series", "prefix:F:1", "--order", "8")
        assert rc == 0
        assert out.startswith("z + z^4")

    def test_json_exact_strings(self, capsys):
        rc, out, _ = run(capsys, "series", "s1", "--order", "9", "--format", "json")
        data = json.loads(out)
        assert data["valuation"] == 2
        assert data["coeffs"][0] == "1/2"

    def test_s6_selector(self, capsys):
        rc, out, _ = run(capsys, "series", "s6", "--order", "16")
        assert rc == 0
        assert out.startswith("z^-1 - z^3")

    def test_rl_g0_selector(self, capsys):
        rc, out, _ = run(capsys, "series", "rl-g0", "--order", "16")
        assert rc == 0
        assert "19*z^9" in out

    def test_unknown_selector(self, capsys):
        rc, _, err = run(capsys, "series", "g7")
        assert rc == 1
        assert "unknown series selector" in err

    def test_order_floor(self, capsys):
        with pytest.raises(SystemExit):
            main(["series", "g0", "--order", "4"])


class TestRender:
    def test_stdout_svg(self, capsys):
        rc, out, _ = run(capsys, "render", "--t", "2", "--n", "9", "--mode", "plain")
        assert rc == 0
        assert out.count('class="diagram"') == 12

    def test_skew_tikz_to_file(self, tmp_path, capsys):
        target = tmp_path / "fig.tex"
        rc, out, _ = run(
            capsys, "render", "--t", "2", "--n", "9", "--mode", "skew",
            "--format", "tikz", "--out", str(target),
        )
        assert rc == 0
        assert str(target) in out
        assert target.read_text().count("\\begin{tikzpicture}") == 19

    def test_cap_exceeded(self, capsys):
        rc, _, err = run(capsys, "render", "--t", "2", "--n", "27")
        assert rc == 1
        assert "cap" in err


class TestVerify:
    def test_small_order_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "--order", "12", "--t", "2")
        assert rc == 0
        assert "result: PASS" in out
        assert "reduced" in out  # the coverage note

    def test_minimum_order_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "--order", "8", "--t", "2")
        assert rc == 0
        assert "reduced" in out

    def test_adjudication_line_present(self, capsys):
        rc, out, _ = run(capsys, "verify", "--order", "16", "--t", "2,3")
        assert rc == 0
        [line] = [l for l in out.splitlines() if "adjudication" in l]
        assert "563" in line and "562" in line

    def test_json_format(self, capsys):
        rc, out, _ = run(capsys, "verify", "--order", "12", "--t", "2", "--format", "json")
        assert rc == 0
        data = json.loads(out)
        assert data["passed"] is True


class TestOeis:
    def test_offline_bundled(self, tmp_path, capsys):
        rc, out, _ = run(
            capsys, "oeis", "A007564", "--n-max", "6", "--offline",
            "--cache-dir", str(tmp_path),
        )
        assert rc == 0
        lines = out.splitlines()
        assert lines[0].split() == ["n", "oeis", "table(3n)", "R", "oeis=table", "oeis=R"]
        assert lines[5].split() == ["4", "100", "100", "100", "yes", "yes"]
        assert lines[6].split() == ["5", "562", "563", "562", "NO", "yes"]

    def test_unknown_id(self, tmp_path, capsys):
        rc, _, err = run(capsys, "oeis", "X123", "--offline", "--cache-dir", str(tmp_path))
        assert rc == 1
        assert "unknown sequence id" in err

    def test_unbundled_offline_errors(self, tmp_path, capsys):
        rc, _, err = run(
            capsys, "oeis", "A000108", "--offline", "--cache-dir", str(tmp_path)
        )
        assert rc == 1
        assert "no cached or bundled" in err

    def test_cache_is_used_when_present(self, tmp_path, capsys):
        (tmp_path / "A000002.txt").write_text("# fake sequence\n0 1\n1 1\n2 4\n3 19\n")
        rc, out, _ = run(
            capsys, "oeis", "A000002", "--n-max", "3", "--offline",
            "--cache-dir", str(tmp_path),
        )
        assert rc == 0
        assert out.splitlines()[-1].split()[:2] == ["3", "19"]

    def test_markdown_format(self, tmp_path, capsys):
        rc, out, _ = run(
            capsys, "oeis", "A007564", "--n-max", "2", "--offline",
            "--cache-dir", str(tmp_path), "--format", "markdown",
        )
        assert rc == 0
        assert out.splitlines()[0].startswith("| n |")


class TestDeterminism:
    def test_identical_invocations_identical_bytes(self, capsys):
        _, out1, _ = run(capsys, "series", "total", "--order", "24")
        _, out2, _ = run(capsys, "series", "total", "--order", "24")
        assert out1 == out2
