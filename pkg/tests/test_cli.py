import json

import pytest

from pbwlab.cli import main

SL2 = {"lie": {"n": 3, "c": [
    {"i": 1, "j": 2, "k": 3, "value": "1"},
    {"i": 1, "j": 3, "k": 1, "value": "-2"},
    {"i": 2, "j": 3, "k": 2, "value": "2"}]}}

STRANGE = {"potential": {"n": 3, "terms": [{"cycle": [3, 2, 1], "coeff": ["0", "-1"]}]}}

NON_JACOBI = {"lie": {"n": 3, "c": [
    {"i": 1, "j": 2, "k": 1, "value": "1"},
    {"i": 1, "j": 3, "k": 2, "value": "1"}]}}

TORSION_T = [{"word": [3, 2, 1], "coeff": ["-1"]}, {"word": [1, 3, 2], "coeff": ["1"]}]


@pytest.fixture
def sl2_file(tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(SL2))
    return str(path)


@pytest.fixture
def strange_file(tmp_path):
    path = tmp_path / "strange.json"
    path.write_text(json.dumps(STRANGE))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCertify:
    def test_sl2_lie_pass(self, capsys, sl2_file):
        code, out, _ = run_cli(capsys, "certify", "--input", sl2_file, "--d2", "lie")
        assert code == 0
        assert "pass" in out
        assert "every specialization" in out

    def test_fail_exit_code(self, capsys, tmp_path):
        path = tmp_path / "nj.json"
        path.write_text(json.dumps(NON_JACOBI))
        code, out, _ = run_cli(capsys, "certify", "--input", str(path), "--d2", "lie")
        assert code == 1
        assert "fail" in out


class TestPbw:
    def test_strange_defect_table(self, capsys, strange_file):
        code, out, _ = run_cli(capsys, "pbw", "--input", strange_file,
                               "--at", "1", "--degree", "3")
        assert code == 1
        assert "12" in out and "10" in out and "defect" in out

    def test_generic_match(self, capsys, strange_file):
        code, out, _ = run_cli(capsys, "hilbert", "--input", strange_file,
                               "--generic", "--degree", "4")
        assert code == 0
        assert "match" in out


class TestDerive:
    def test_prints_derivative(self, capsys, strange_file):
        code, out, _ = run_cli(capsys, "derive", "--input", strange_file, "--var", "1")
        assert code == 0
        assert out.strip() == "-h*x3*x2"


class TestFromPotential:
    def test_presentation_echo(self, capsys, strange_file):
        code, out, _ = run_cli(capsys, "from-potential", "--input", strange_file)
        assert code == 0
        assert "phi_12 = -h*x2*x1" in out


class TestMember:
    def test_yes_and_no(self, capsys, strange_file, tmp_path):
        poly = tmp_path / "T.json"
        poly.write_text(json.dumps(TORSION_T))
        code, _, _ = run_cli(capsys, "member", "--input", strange_file,
                             "--poly", str(poly), "--degree", "5", "--generic")
        assert code == 0  # over Q(h) the factor is invertible
        code, _, _ = run_cli(capsys, "member", "--input", strange_file,
                             "--poly", str(poly), "--degree", "5", "--at", "1")
        assert code == 1

    def test_out_of_range(self, capsys, strange_file, tmp_path):
        poly = tmp_path / "big.json"
        poly.write_text(json.dumps([{"word": [1, 2, 3, 1, 2], "coeff": ["1"]}]))
        code, _, err = run_cli(capsys, "member", "--input", strange_file,
                               "--poly", str(poly), "--degree", "4", "--generic")
        assert code == 2


class TestTorsion:
    def test_witness(self, capsys, strange_file, tmp_path):
        elem = tmp_path / "T.json"
        elem.write_text(json.dumps(TORSION_T))
        code, out, _ = run_cli(capsys, "torsion", "--input", strange_file,
                               "--element", str(elem), "--factor", "1-h",
                               "--degree", "5")
        assert code == 0
        assert "witness" in out

    def test_refuted(self, capsys, sl2_file, tmp_path):
        elem = tmp_path / "x1.json"
        elem.write_text(json.dumps([{"word": [1], "coeff": ["1"]}]))
        code, out, _ = run_cli(capsys, "torsion", "--input", sl2_file,
                               "--element", str(elem), "--factor", "1-h",
                               "--degree", "5")
        assert code == 1
        assert "refuted" in out


class TestValidate:
    def test_valid(self, capsys, sl2_file):
        code, out, _ = run_cli(capsys, "validate", "--input", sl2_file)
        assert code == 0
        assert "lie" in out

    def test_invalid(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 2, "phi": [
            {"i": 1, "j": 2, "terms": [{"word": [1, 2], "coeff": ["1"]}]}]}))
        code, out, _ = run_cli(capsys, "validate", "--input", str(path))
        assert code == 1
        assert "NotDeformation" in out


class TestObstruction:
    def test_extraction(self, capsys, tmp_path):
        path = tmp_path / "nj.json"
        path.write_text(json.dumps(NON_JACOBI))
        code, out, _ = run_cli(capsys, "obstruction", "--input", str(path), "--d2", "lie")
        assert code == 0
        assert "h-order 2" in out

    def test_pass_has_none(self, capsys, sl2_file):
        code, out, _ = run_cli(capsys, "obstruction", "--input", sl2_file, "--d2", "lie")
        assert code == 1
        assert "no obstruction" in out


class TestCustomDifferential:
    def test_custom_d2_file(self, capsys, sl2_file, tmp_path):
        """The unperturbed differential certifies sl2 (the correction cancels)."""
        value = []
        for s, t, u in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            sign, sym = (1, [t, u]) if t < u else (-1, [u, t])
            value.append({"word": [{"x": s}, {"xi2": sym}], "coeff": [str(sign)]})
            value.append({"word": [{"xi2": sym}, {"x": s}], "coeff": [str(-sign)]})
        d2_doc = [{"triple": [1, 2, 3], "value": value}]
        d2_file = tmp_path / "d2.json"
        d2_file.write_text(json.dumps(d2_doc))
        code, out, _ = run_cli(capsys, "certify", "--input", sl2_file,
                               "--d2", "custom", "--d2-file", str(d2_file))
        assert code == 0
        assert "pass" in out

    def test_custom_without_file_rejected(self, capsys, sl2_file):
        code, _, err = run_cli(capsys, "certify", "--input", sl2_file, "--d2", "custom")
        assert code == 3

    def test_bad_symbol_rejected(self, capsys, sl2_file, tmp_path):
        d2_file = tmp_path / "d2.json"
        d2_file.write_text(json.dumps([{"triple": [1, 2, 3],
                                        "value": [{"word": [{"xi3": [1, 2, 3]}],
                                                   "coeff": ["1"]}]}]))
        code, _, err = run_cli(capsys, "certify", "--input", sl2_file,
                               "--d2", "custom", "--d2-file", str(d2_file))
        assert code == 3


class TestVersionFlag:
    def test_version_exits_zero(self, capsys):
        assert main(["--version"]) == 0
        out = capsys.readouterr().out
        assert "pbwlab" in out


class TestContracts:
    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "validate", "--input", "/nonexistent.json")
        assert code == 3
        assert "input error" in err

    def test_bad_json_is_input_error(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "validate", "--input", str(path))
        assert code == 3

    def test_json_reports_are_byte_identical(self, capsys, strange_file):
        _, out1, _ = run_cli(capsys, "pbw", "--input", strange_file,
                             "--at", "1", "--degree", "3", "--format", "json")
        _, out2, _ = run_cli(capsys, "pbw", "--input", strange_file,
                             "--at", "1", "--degree", "3", "--format", "json")
        assert out1 == out2
        report = json.loads(out1)
        assert report["result"]["dims"] == [1, 3, 6, 12]
        assert report["presentation"]["n"] == 3

    def test_usage_error_maps_to_input_error(self, capsys):
        code = main(["hilbert", "--input", "x.json", "--degree", "3"])
        capsys.readouterr()
        assert code == 3  # neither --at nor --generic
