"""CLI surface: spec parsing, subcommands, exit codes, round trips."""

import json

import pytest

from sumrank.cli import main, parse_bivar, parse_code_spec
from sumrank.errors import ParseError
from sumrank.tower import build_tower

TOWER_SECTION = """\
[tower]
p = 2
e_deg = 1
m = 3
h = 2
ell = 3
N = 3
"""

GEN_SPEC = TOWER_SECTION + """
[generator]
f1 = x^2+x+1
f2 = z+1
"""

MATRIX_SPEC = TOWER_SECTION + """
[matrix]
rows = 1 0 0 1 0 0 1 0 0
    0 1 0 0 1 0 0 1 0
"""


@pytest.fixture
def gen_spec_file(tmp_path):
    path = tmp_path / "gen.code"
    path.write_text(GEN_SPEC)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_generator_spec(self):
        spec = parse_code_spec(GEN_SPEC)
        assert spec.code.k == 2
        assert spec.f1 == (1, 1, 1)
        assert spec.generator is not None

    def test_matrix_spec(self):
        spec = parse_code_spec(MATRIX_SPEC)
        assert spec.code.k == 2
        assert spec.generator is None

    def test_g_spec(self):
        spec = parse_code_spec(TOWER_SECTION + "\n[generator]\ng = 1\n")
        assert spec.code.k == 9  # full space

    def test_missing_sections(self):
        with pytest.raises(ParseError):
            parse_code_spec("[generator]\ng = 1\n")
        with pytest.raises(ParseError):
            parse_code_spec(TOWER_SECTION)

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_code_spec(TOWER_SECTION + "\n[matrix]\nrows = 1 9 0\n")

    def test_parse_bivar(self):
        t = build_tower(2, 1, 3, 2, 3, 3)
        f = parse_bivar("g^2*x^2*z + x + 1", t)
        assert f.coeff(0, 0) == 1
        assert f.coeff(1, 0) == 1
        assert f.coeff(2, 1) == t.F.pow(t.F.gen, 2)
        with pytest.raises(ParseError):
            parse_bivar("x + $", t)


class TestSubcommands:
    def test_tower(self, capsys):
        code, out, _ = run(
            capsys, "tower", "--p", "2", "--m", "3", "--h", "2", "--ell", "3", "--N", "3"
        )
        assert code == 0
        data = json.loads(out)
        assert data["tower"]["moduli"] == {"E": 3, "F": 11, "K": 7, "L": 67}

    def test_code_build(self, capsys, gen_spec_file):
        code, out, _ = run(capsys, "code", "build", "--code", gen_spec_file)
        assert code == 0
        data = json.loads(out)
        assert data["code"]["k"] == 2
        assert data["code"]["cyclic_skew_cyclic"] is True

    def test_distance(self, capsys, gen_spec_file):
        code, out, _ = run(capsys, "distance", "--code", gen_spec_file)
        assert code == 0
        assert json.loads(out)["d"] == 3

    def test_certify_and_verify_round_trip(self, capsys, gen_spec_file, tmp_path):
        code, out, _ = run(
            capsys, "certify", "bch", "--code", gen_spec_file,
            "--b", "1", "--t", "1", "--delta", "3",
        )
        assert code == 0
        cert = json.loads(out)["certificate"]
        assert cert["bound"] == 3
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps(cert))
        code, out, _ = run(
            capsys, "verify", "--certificate", str(cert_path), "--code", gen_spec_file
        )
        assert code == 0
        assert json.loads(out)["verified"] is True

    def test_certify_missing_pair_exit_2(self, capsys, gen_spec_file):
        code, _, err = run(
            capsys, "certify", "bch", "--code", gen_spec_file,
            "--b", "0", "--t", "1", "--delta", "3",
        )
        assert code == 2
        assert "GridNotContained" in err

    def test_search(self, capsys, gen_spec_file):
        code, out, _ = run(capsys, "search", "--code", gen_spec_file)
        assert code == 0
        cert = json.loads(out)["certificate"]
        assert cert["bound"] == 3

    def test_search_deterministic(self, capsys, gen_spec_file):
        _, out1, _ = run(capsys, "search", "--code", gen_spec_file)
        _, out2, _ = run(capsys, "search", "--code", gen_spec_file)
        c1, c2 = json.loads(out1), json.loads(out2)
        c1.pop("timings"), c2.pop("timings")
        assert c1 == c2

    def test_product(self, capsys, gen_spec_file, tmp_path):
        other = tmp_path / "c2.code"
        other.write_text(GEN_SPEC)
        code, out, _ = run(
            capsys, "product", "--code1", gen_spec_file, "--code2", str(other)
        )
        assert code == 0
        data = json.loads(out)
        assert (data["k1"], data["k2"]) == (1, 2)
        assert data["dSR"] == data["dH"] * data["dR"]

    def test_budget_exit_3(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SUMRANK_BUDGET", "100")
        full = tmp_path / "full.code"
        full.write_text(TOWER_SECTION + "\n[generator]\ng = 1\n")
        code, _, err = run(capsys, "distance", "--code", str(full))
        assert code == 3
        assert "BudgetExceeded" in err

    def test_text_format(self, capsys, gen_spec_file):
        code, out, _ = run(
            capsys, "distance", "--code", gen_spec_file, "--format", "text"
        )
        assert code == 0
        assert "d: 3" in out

    def test_matrix_spec_distance(self, capsys, tmp_path):
        path = tmp_path / "m.code"
        path.write_text(MATRIX_SPEC)
        code, out, _ = run(capsys, "distance", "--code", str(path))
        assert code == 0
        assert json.loads(out)["d"] >= 1
