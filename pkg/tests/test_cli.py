"""Command dispatch, exit codes, golden outputs, JSON determinism."""

import io
import json
import sys

import pytest

from apolarity.cli import run


def go(argv, capsys):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_monomial_golden(capsys):
    code, out, _ = go(["rank", "x0*x1^4*x2^5"], capsys)
    assert code == 0
    assert out == "rank = 30 (monomial, certified)\n"


def test_lb_golden_bound_eight(capsys):
    code, out, _ = go(["lb", "w*(x^3+y^3+z^3)", "--ideal", "W", "--t", "W"],
                      capsys)
    assert code == 0
    assert "lower bound = 8 (unconditional)" in out
    assert "0: 1\n1: 3\n2: 3\n3: 1\n4: 0\n5: 0" in out
    assert "ideal = (W)" in out


def test_strassen_golden_total_seven(capsys):
    code, out, _ = go(["strassen", "x0^2*x1 + y0*y1*y2"], capsys)
    assert code == 0
    assert "verdict: certified" in out
    assert "total rank = 7" in out
    assert "shared e = 1" in out


def test_hf_rows(capsys):
    code, out, _ = go(["hf", "x0^2*x1"], capsys)
    assert code == 0
    assert out == "0: 1\n1: 2\n2: 2\n3: 1\n4: 0\n"


def test_gens_uppercase_rendering(capsys):
    code, out, _ = go(["gens", "x0^3 + x1^3"], capsys)
    assert code == 0
    assert out == "deg 2: X0*X1\ndeg 3: X0^3 - X1^3\n"


def test_perp_lists_slice_bases(capsys):
    code, out, _ = go(["perp", "x0*x1"], capsys)
    assert code == 0
    assert "degree 2: dim 2" in out
    assert "  X0^2" in out and "  X1^2" in out


def test_cat_reports_rank(capsys):
    code, out, _ = go(["cat", "x0^2*x1", "--e", "1"], capsys)
    assert code == 0
    assert out == "catalecticant C_1: 3 x 2, rank 2\n"
    code, _, err = go(["cat", "x0^2*x1"], capsys)
    assert code == 1
    assert "requires --e" in err


def test_ub_solves_and_refutes(capsys):
    code, out, _ = go(["ub", "x0^3 + x1^3", "--points", "1,0; 0,1"], capsys)
    assert code == 0
    assert "count = 2" in out
    code, out, _ = go(["ub", "x0^3 + x1^3", "--points", "1,1; 1,0-1"],
                      capsys)
    assert code == 3
    assert "no decomposition" in out


def test_certify_exit_codes(capsys):
    argv = ["certify", "x0^3 + x1^3", "--ideal", "X0^2; X0*X1; X1^2",
            "--t", "X0*X1"]
    code, out, _ = go(argv + ["--points", "1,0; 0,1"], capsys)
    assert code == 0
    assert "status = certified-equal" in out
    assert "rank = 2" in out
    code, out, _ = go(argv, capsys)
    assert code == 2
    assert "status = bounds-only" in out


def test_rank_interval_exit_two(capsys):
    code, out, _ = go(
        ["rank", "x0*(x1^3 + x2^3 + x3^3 + x4^3 + x5^3)"], capsys)
    assert code == 2
    assert out == "13 <= rank <= 15 (power-times-sum, bounds only)\n"


def test_rank_family_labels(capsys):
    code, out, _ = go(["rank", "x0^4*x1 + x0^3*x1^2"], capsys)
    assert code == 0
    assert "(power-times-form, certified)" in out or \
        "(binary, certified)" in out
    code, out, _ = go(["rank", "x^3 + x*y^2 + y^3"], capsys)
    assert code == 0
    assert "(binary, certified)" in out


def test_sylvester_output(capsys):
    code, out, _ = go(["sylvester", "x0^4*x1"], capsys)
    assert code == 0
    assert out == ("h1 = X1^2 (degree 2, not squarefree)\n"
                   "h2 = X0^5 (degree 5)\n"
                   "rank = 5\n")


def test_strassen_exit_codes(capsys):
    code, out, _ = go(["strassen", "x0*x1^2 + x0*x2^2"], capsys)
    assert code == 3
    assert "verdict: refused" in out
    assert "ranks summing to 6" in out
    code, out, _ = go(["strassen", "x^5 + y^5", "--e", "4"], capsys)
    assert code == 2
    assert "verdict: conditional" in out
    assert "interval = [2, 2]" in out


def test_vandermonde_verb(capsys):
    code, out, _ = go(["vandermonde", "3"], capsys)
    assert code == 0
    assert "V_3: rank = 2 (certified-equal)" in out
    code, _, err = go(["vandermonde", "7"], capsys)
    assert code == 1
    assert "families.NOutOfRange" in err


def test_split_and_reduce(capsys):
    code, out, _ = go(["split", "x0^2*x1 + y0*y1*y2"], capsys)
    assert code == 0
    assert "block 0 (x0, x1): x0^2*x1" in out
    assert "block 1 (y0, y1, y2): y0*y1*y2" in out
    code, out, _ = go(["split", "a^2 + b^2", "--vars", "b,a"], capsys)
    assert code == 0
    assert out.startswith("block 0 (b): b^2")

    code, out, _ = go(["reduce", "(x + y)^2"], capsys)
    assert code == 0
    assert out == "essential variables: 1 of 2\nreduced = x^2\n"


def test_error_rendering(capsys):
    code, _, err = go(["rank", "x0 +* x1"], capsys)
    assert code == 1
    assert err.startswith("error: parser.ParseError:")
    code, _, err = go(["hf", "x0^2 + x1"], capsys)
    assert code == 1
    assert err.startswith("error: poly.NonHomogeneous:")
    code, _, err = go(["lb", "x0*x1", "--ideal", "X0", "--t", "X1"], capsys)
    assert code == 1
    assert err.startswith("error: bounds.TNotInIdeal:")
    code, _, err = go(["nosuchverb", "x"], capsys)
    assert code == 1
    assert "error: parser.ParseError:" in err


def test_stdin_dash(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("x0*x1*x2"))
    code, out, _ = go(["hf", "-"], capsys)
    assert code == 0
    assert out == "0: 1\n1: 3\n2: 3\n3: 1\n4: 0\n"


def test_extension_points_from_flags(capsys):
    code, out, _ = go(["ub", "x^2*y", "--ext", "w: w^2 + w + 1",
                       "--points", "1,1; 1,w; 1,w^2", "--vars", "x,y"],
                      capsys)
    assert code == 0
    assert "count = 3" in out


def test_json_outputs_are_byte_identical(capsys):
    argv = ["strassen", "x0^8*x1^2 + x0^8*x2^2 + y0*y1^4*y2^5", "--json"]
    first = go(argv, capsys)
    second = go(argv, capsys)
    assert first == second
    assert first[0] == 0
    data = json.loads(first[1])
    assert data["verdict"] == "certified"
    assert data["total_rank"] == 48
    assert data["module"] == "strassen"

    argv = ["lb", "x^2*(y^2 + z^2 + w^2)", "--ideal", "Y; Z; W", "--seed",
            "7", "--json"]
    a = go(argv, capsys)
    b = go(argv, capsys)
    assert a == b
    assert json.loads(a[1])["lower_bound"] == 9


def test_rank_json_carries_certificate(capsys):
    code, out, _ = go(["rank", "x0^2*x1", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "monomial"
    assert data["rank"] == 3
    assert data["status"] == "certified-equal"
    assert data["lower_bound"] == 3


def test_no_verb_prints_help(capsys):
    code, out, _ = go([], capsys)
    assert code == 1
    assert "usage" in out.lower()
