import json

from qsphere.chains import chain_from_json
from qsphere.cli import main, read_chain, write_chain
from qsphere.homology import fundamental_class


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpressions:
    def test_normalize(self, capsys):
        code, out, _ = run(capsys, "normalize", "x1*xm1")
        assert code == 0
        assert out.strip() == "(1/q^2)*x0^2 + (1/q)*x0"

    def test_mul(self, capsys):
        code, out, _ = run(capsys, "mul", "x1", "x0")
        assert code == 0
        assert out.strip() == "(1/q^2)*x0*x1"

    def test_aut(self, capsys):
        code, out, _ = run(capsys, "aut", "--twist", "q^2", "xm1")
        assert code == 0
        assert out.strip() == "(1/q^2)*xm1"

    def test_parse_error_is_reported(self, capsys):
        code, out, err = run(capsys, "normalize", "x1*")
        assert code == 1
        assert "error:" in err


class TestChainCommands:
    def test_builtin_fundamental_chain(self, capsys):
        code, out, _ = run(capsys, "phi", "--variant", "delta",
                           "--chain", "fundamental")
        assert code == 0
        assert out.strip() == "1"

    def test_phi_variants_agree(self, capsys):
        for variant in ("efd", "cap"):
            code, out, _ = run(capsys, "phi", "--variant", variant,
                               "--chain", "fundamental")
            assert code == 0 and out.strip() == "1"

    def test_eta_and_h2class(self, capsys):
        code, out, _ = run(capsys, "eta", "--chain", "fundamental")
        assert code == 0 and out.strip() == "0"
        code, out, _ = run(capsys, "h2class", "--chain", "fundamental")
        assert code == 0 and out.strip() == "1"

    def test_boundary_of_fundamental_is_zero(self, capsys):
        code, out, _ = run(capsys, "boundary", "--chain", "fundamental")
        assert code == 0
        doc = json.loads(out)
        assert doc["degree"] == 1 and doc["terms"] == []

    def test_chain_file_round_trip(self, tmp_path, capsys):
        path = tmp_path / "fund.json"
        write_chain(fundamental_class(), str(path))
        assert read_chain(str(path)) == fundamental_class()
        code, out, _ = run(capsys, "phi", "--chain", str(path))
        assert code == 0 and out.strip() == "1"

    def test_cap_and_cyclic_emit_chains(self, tmp_path, capsys):
        code, out, _ = run(capsys, "cap", "--chain", "fundamental",
                           "--cochain", "d0")
        assert code == 0
        doc = json.loads(out)
        assert doc["degree"] == 1 and doc["twist"] == "q^2"
        out_path = tmp_path / "rot.json"
        code, _, _ = run(capsys, "cyclic", "--chain", "fundamental",
                         "--out", str(out_path))
        assert code == 0
        assert chain_from_json(out_path.read_text()).degree == 2

    def test_malformed_chain_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"degree": 2, "twist": "q^2", '
                       '"terms": [{"coeff": "1", "tensor": [[0, 0]]}]}')
        code, _, err = run(capsys, "boundary", "--chain", str(bad))
        assert code == 1 and "slots" in err

    def test_missing_chain_file(self, capsys):
        code, _, err = run(capsys, "boundary", "--chain", "nope.json")
        assert code == 1 and "no such chain file" in err

    def test_unknown_twist_text(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"degree": 0, "twist": "zz", "terms": []}')
        code, _, err = run(capsys, "boundary", "--chain", str(bad))
        assert code == 1 and "error:" in err


class TestOperators:
    def test_cup_eval(self, capsys):
        code, out, _ = run(capsys, "cup-eval", "--cochain", "cup(d1,dm1)",
                           "--args", "x1,xm1")
        assert code == 0
        assert out.strip() == "((q^4+2*q^2+1)/q^2)*x0^2 + ((2*q^2+2)/q)*x0 + 1"

    def test_cup_eval_arity_error(self, capsys):
        code, _, err = run(capsys, "cup-eval", "--cochain", "d1", "--args", "x1,x0")
        assert code == 1 and "degree" in err

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "trace", "--kind", "x0", "--twist", "1", "x0^2")
        assert code == 0
        assert out.strip() == "-q/(q^2+1)"

    def test_trace_kind_error(self, capsys):
        code, _, err = run(capsys, "trace", "--kind", "x5", "--twist", "1", "x0")
        assert code == 1 and "unknown trace kind" in err

    def test_trace_tower_kind(self, capsys):
        code, out, _ = run(capsys, "trace", "--kind", "x0^2", "--twist", "q^4",
                           "x0^2 + x1")
        assert code == 0 and out.strip() == "1"

    def test_trace_xpower_kinds(self, capsys):
        code, out, _ = run(capsys, "trace", "--kind", "xm1^2", "--twist", "1",
                           "3*xm1^2")
        assert code == 0 and out.strip() == "3"
        code, out, _ = run(capsys, "trace", "--kind", "x1", "--twist", "1", "x0")
        assert code == 0 and out.strip() == "0"

    def test_trace_twist_mismatch_reported(self, capsys):
        code, _, err = run(capsys, "trace", "--kind", "x1", "--twist", "q^2", "x1")
        assert code == 1 and "trivial twist" in err

    def test_h0(self, capsys):
        code, out, _ = run(capsys, "h0", "--twist", "1", "x0^2 + x1")
        assert code == 0
        assert out.splitlines() == ["[x0] = -q/(q^2+1)", "[x1] = 1"]

    def test_h0_zero(self, capsys):
        code, out, _ = run(capsys, "h0", "--twist", "q^4", "x0")
        assert code == 0 and out.strip() == "0"


class TestCyclicCheck:
    def test_phi_not_cyclic(self, capsys):
        code, out, _ = run(capsys, "cyclic-check", "--functional", "phi-delta",
                           "--truncation", "1,1")
        assert code == 0
        assert "not cyclic" in out
        assert "rotation defect -1/q" in out

    def test_sum_cyclic(self, capsys):
        code, out, _ = run(capsys, "cyclic-check", "--functional",
                           "phi-plus-eta", "--truncation", "1,1")
        assert code == 0
        assert out.strip().endswith("cyclic")
        assert "violations: 0" in out

    def test_unknown_functional(self, capsys):
        code, _, err = run(capsys, "cyclic-check", "--functional", "nope")
        assert code == 1 and "unknown functional" in err


class TestVerifyCommand:
    def test_selected_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "C2,C3", "--report", "md")
        assert code == 0
        assert "summary: 2/2 passed" in out

    def test_json_report_to_file(self, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code, _, _ = run(capsys, "verify", "--suite", "C2", "--report", "json",
                         "--out", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["summary"] == {"total": 1, "passed": 1, "failed": 0,
                                  "bounded": 0}

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "C99")
        assert code == 1 and "unknown checks" in err

    def test_truncation_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("QS2_TRUNCATION", "1,1")
        code, out, _ = run(capsys, "verify", "--suite", "C13")
        assert code == 0
        assert "216 basis tensors" in out  # 6^3 at truncation (1,1)

    def test_bad_truncation(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "C2",
                           "--truncation", "wide")
        assert code == 1 and "truncation" in err
