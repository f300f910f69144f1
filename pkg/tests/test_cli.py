import json
import subprocess
import sys

from hyperdefect.cli import main
from hyperdefect.polynomials import parse_expression, emit_term_list

SEGRE = "(x+y+z+u+v)^3-(x^3+y^3+z^3+u^3+v^3)"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_defect_expr_segre(capsys):
    code, out, _ = run(capsys, "defect", "--expr", SEGRE)
    assert code == 0
    assert "defect:  5" in out
    assert "gamma:   5" in out


def test_defect_json_schema(capsys):
    code, out, _ = run(capsys, "defect", "--expr", SEGRE, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["defect"] == 5
    assert payload["gamma"] == 5
    assert payload["input"]["variables"] == ["x", "y", "z", "u", "v"]
    assert [e["prime"] for e in payload["ranks"]["full"]["per_prime"]] == [
        32633, 32647, 32653,
    ]

    def no_floats(node):
        assert not isinstance(node, float), node
        if isinstance(node, dict):
            for v in node.values():
                no_floats(v)
        elif isinstance(node, list):
            for v in node:
                no_floats(v)

    no_floats(payload)


def test_json_output_is_byte_identical(capsys):
    first = run(capsys, "defect", "--expr", SEGRE, "--json")
    second = run(capsys, "defect", "--expr", SEGRE, "--json")
    assert first == second


def test_defect_term_list_input(tmp_path, capsys):
    path = tmp_path / "segre.terms"
    path.write_bytes(emit_term_list(parse_expression(SEGRE)))
    code, out, _ = run(capsys, "defect", "--input", str(path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["defect"] == 5
    assert payload["gamma"] == 5


def test_defect_nonhomogeneous_exits_2(capsys):
    code, _, err = run(capsys, "defect", "--expr", "x^2+y")
    assert code == 2
    assert "not homogeneous" in err


def test_defect_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "defect", "--expr", "x + * y")
    assert code == 2
    assert "error" in err


def test_defect_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "defect", "--input", "/nonexistent/f.terms")
    assert code == 2


def test_defect_exact_budget_exits_3(capsys):
    expr = "x*(x^4+y^4+z^4+u^4+v^4)+y*(x^4-2*y^4+3*z^4-4*u^4+5*v^4)"
    code, _, err = run(capsys, "defect", "--expr", expr, "--exact")
    assert code == 3
    assert "exceeds exact budget" in err


def test_defect_exact_certifies_small_degree(capsys):
    code, out, _ = run(capsys, "defect", "--expr", SEGRE, "--exact", "--json")
    assert code == 0
    payload = json.loads(out)
    assert all(block["certified"] for block in payload["ranks"].values())


def test_defect_k2_routes_to_raw_report(capsys):
    code, out, _ = run(capsys, "defect", "--expr", SEGRE, "--k", "2")
    assert code == 0
    assert "e2 dim:  5" in out
    assert "defect" not in out


def test_defect_four_variables_routes_to_raw_report(capsys):
    code, out, _ = run(
        capsys, "defect", "--expr", "x^3+y^3+z^3+u^3", "--vars", "x,y,z,u"
    )
    assert code == 0
    assert "e2 dim:" in out


def test_defect_prime_list(capsys):
    code, out, _ = run(
        capsys, "defect", "--expr", SEGRE, "--prime-list", "32687,32693", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [e["prime"] for e in payload["ranks"]["full"]["per_prime"]] == [32687, 32693]
    assert payload["defect"] == 5


def test_defect_bad_prime_count_exits_2(capsys):
    code, _, err = run(capsys, "defect", "--expr", SEGRE, "--primes", "99")
    assert code == 2


def test_hodge_quintic(capsys):
    code, out, _ = run(capsys, "hodge", "--n", "3", "--d", "5")
    assert code == 0
    assert "euler characteristic: -200" in out
    assert "1 101 101 1" in out
    assert "hodge symmetry: ok" in out


def test_hodge_hyperplane(capsys):
    code, out, _ = run(capsys, "hodge", "--n", "3", "--d", "1")
    assert code == 0
    assert "euler characteristic: 4" in out
    assert "0 0 0 0" in out


def test_hodge_elliptic_curve(capsys):
    code, out, _ = run(capsys, "hodge", "--n", "1", "--d", "3")
    assert code == 0
    assert "euler characteristic: 0" in out


def test_hodge_bad_flags_exit_2(capsys):
    code, _, err = run(capsys, "hodge", "--n", "0", "--d", "5")
    assert code == 2


def test_corpus_filter_segre(capsys):
    code, out, _ = run(capsys, "corpus", "--filter", "segre")
    assert code == 0
    assert "segre-cubic" in out
    assert "PASS" in out
    assert "FAIL" not in out


def test_corpus_filter_no_match_exits_2(capsys):
    code, _, err = run(capsys, "corpus", "--filter", "nosuchfixture")
    assert code == 2


def test_corpus_skip_slow_passes_six_fixtures(capsys):
    code, out, _ = run(capsys, "corpus", "--skip-slow")
    assert code == 0
    assert "6 fixtures PASS" in out
    assert "sextic" not in out


def test_corpus_mismatch_exits_1(capsys, monkeypatch):
    import dataclasses

    import hyperdefect.cli as cli

    broken = dataclasses.replace(
        next(f for f in cli.FIXTURES if f.name == "segre-cubic"), defect=4
    )
    monkeypatch.setattr(cli, "FIXTURES", (broken,))
    code, out, _ = run(capsys, "corpus")
    assert code == 1
    assert "FAIL" in out
    assert "mismatches" in out


def test_defect_k2_json(capsys):
    code, out, _ = run(capsys, "defect", "--expr", SEGRE, "--k", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["multiplier"] == 2
    assert payload["e2_dim"] == 5
    assert "ranks" in payload


def test_console_script_is_installed():
    result = subprocess.run(
        ["hyperdefect", "hodge", "--n", "3", "--d", "5"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "-200" in result.stdout


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "hyperdefect", "hodge", "--n", "1", "--d", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "euler characteristic: 0" in result.stdout
