import json

from starborel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestProducts:
    def test_star_standard(self, capsys):
        code, out, _ = run(capsys, "star", "t*p", "t*q")
        assert code == 0
        assert out.strip() == "t^2*p*q + t^3"

    def test_star_moyal(self, capsys):
        code, out, _ = run(capsys, "star", "--kind", "moyal", "p", "q")
        assert code == 0
        assert out.strip() == "p*q + 1/2*t"

    def test_borel_roundtrip(self, capsys):
        code, out, _ = run(capsys, "borel", "t^3*p")
        assert code == 0
        assert out.strip() == "1/6*xi^3*p"
        code, out, _ = run(capsys, "unborel", "1/6*xi^3*p")
        assert code == 0
        assert out.strip() == "t^3*p"

    def test_borel_star(self, capsys):
        code, out, _ = run(capsys, "borel-star", "--kind", "moyal",
                           "xi*p", "xi*q")
        assert code == 0
        assert out.strip() == "1/2*xi^2*p*q + 1/12*xi^3"

    def test_transition(self, capsys):
        code, out, _ = run(capsys, "transition", "t^2*p*q")
        assert code == 0
        assert out.strip() == "t^2*p*q - 1/2*t^3"

    def test_hadamard(self, capsys):
        code, out, _ = run(capsys, "hadamard", "xi + xi^2", "xi")
        assert code == 0
        assert out.strip() == "xi"

    def test_odot(self, capsys):
        code, out, _ = run(capsys, "odot", "--i", "z1", "--j", "z2",
                           "--vars", "u,z1,z2", "z1*z2")
        assert code == 0
        assert out.strip() == "z1*z2 + xi"


class TestPolynomial:
    def test_simple_poly(self, capsys):
        code, out, _ = run(capsys, "simple-poly", "--var", "z1",
                           "--vars", "z1,z2",
                           "z1^2 - 2*z1*z2 + z2^2")
        assert code == 0
        assert out.strip() == "z1 - z2"

    def test_resultant(self, capsys):
        code, out, _ = run(capsys, "resultant", "--var", "z1",
                           "--vars", "z1,z2", "z1^2 - z2", "2*z1")
        assert code == 0
        assert out.strip() == "-4*z2"

    def test_locus_conv(self, capsys):
        code, out, _ = run(capsys, "locus", "conv", "--vars", "z1,z2",
                           "--bar-vars", "z,z2", "z2*z1 + 1", "z")
        assert code == 0
        assert out.startswith("intersect {")
        assert 'cond "endpoint"' in out

    def test_locus_hadamard1d(self, capsys):
        code, out, _ = run(capsys, "locus", "hadamard1d",
                           "--sf", "1", "--sg", "1")
        assert code == 0
        assert "xi^2 - xi" in out


class TestVerify:
    def test_examples_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "examples")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") >= 10
        assert "examples: OK" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "verify", "examples", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["suite"] == "examples"


class TestErrors:
    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, "star", "t*p")
        assert code == 1
        assert "error" in err.lower()

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "star", "t*(p", "q")
        assert code == 1
        assert "error" in err.lower()

    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
