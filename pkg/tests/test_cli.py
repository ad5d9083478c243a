import io
import json

import pytest
from hypothesis import given

from quasiord.cli import ParseError, parse_poly, run
from quasiord.polyring import MPoly, YPoly, format_ypoly

from conftest import IRREDUCIBLE_OCTIC, BENT_OCTIC
from strategies import ypolys


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def octic_file(tmp_path):
    p = tmp_path / "irr_octic.txt"
    p.write_text(IRREDUCIBLE_OCTIC + "\n", encoding="utf-8")
    return str(p)


class TestParse:
    def test_irreducible_octic(self, irr_octic):
        assert parse_poly(IRREDUCIBLE_OCTIC) == irr_octic

    def test_y(self):
        assert parse_poly("y", 1) == YPoly.y(1)

    def test_non_monic(self):
        with pytest.raises(ParseError, match="not monic"):
            parse_poly("2*y^2 - x1")

    def test_rational_literals(self):
        f = parse_poly("y^2 - 3/4*x1 + (1/2)*x1^2", 1)
        assert f.coeff(0) == MPoly({(1,): -0.75, (2,): 0.5}, 1)

    @pytest.mark.parametrize("text, pos", [
        ("y^2 - x1 x2", 9),
        ("y^2 + x3", 6),
        ("y^2 + z", 6),
        ("y^2 + (x1", 9),
        ("y^2 + x1^x2", 9),
        ("y^2 + $", 6),
        ("y^2 +", 5),
    ])
    def test_errors_are_positioned(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_poly(text, 2)
        assert info.value.pos == pos

    @given(ypolys(max_deg=5))
    def test_roundtrip(self, f):
        assert parse_poly(format_ypoly(f), 2, require_monic=False) == f


class TestCommands:
    def test_analyze_irreducible_octic(self, octic_file):
        status, out, _ = call("analyze", "--input", octic_file)
        doc = json.loads(out)
        assert status == 0
        assert doc["verdict"] == "irreducible_quasi_ordinary"
        assert doc["d_sequence"] == [8, 2, 1]
        assert doc["r_sequence"] == [["2", "2"], ["12", "8"]]

    def test_analyze_bent_octic(self):
        status, out, _ = call("analyze", BENT_OCTIC)
        doc = json.loads(out)
        assert status == 0
        assert doc["verdict"] == "not_irreducible_quasi_ordinary"
        assert doc["reason"]["kind"] == "straightness_violation"
        assert doc["reason"]["witness"]["k_index"] == 3

    def test_approx_root(self):
        status, out, _ = call("approx-root", "-d", "2", IRREDUCIBLE_OCTIC)
        assert status == 0 and json.loads(out)["approximate_root"] == "y^4 - x1*x2"

    def test_byte_identical_output(self, octic_file):
        assert call("analyze", "--input", octic_file)[1] == call("analyze", IRREDUCIBLE_OCTIC)[1]

    def test_report_fields(self):
        doc = json.loads(call("analyze", IRREDUCIBLE_OCTIC)[1])
        for key in ("verdict", "reason", "d_sequence", "e_sequence", "r_sequence", "m_sequence",
                    "semigroup_generators", "approximate_roots", "polygons", "notes", "config"):
            assert key in doc

    def test_text_format(self):
        status, out, _ = call("analyze", IRREDUCIBLE_OCTIC, "--format", "text")
        assert status == 0 and "verdict: irreducible_quasi_ordinary" in out

    def test_strict_order(self):
        doc = json.loads(call("analyze", IRREDUCIBLE_OCTIC, "--strict-order", "strong")[1])
        assert doc["config"] == {"strictness": "strong"}
        assert doc["reason"]["kind"] == "ordering_violation"

    def test_expand(self):
        doc = json.loads(call("expand", "--base", "y^4 - x1*x2", IRREDUCIBLE_OCTIC)[1])
        assert doc["coefficients"] == ["0", "-x1^3*x2^2"]
        doc = json.loads(call("expand", "--base", "y", "--base", "y^4 - x1*x2", IRREDUCIBLE_OCTIC)[1])
        assert doc["entries"] == [{"coefficient": "-x1^3*x2^2", "theta": [0, 0]},
                                  {"coefficient": "1", "theta": [0, 2]}]

    def test_gnp(self):
        doc = json.loads(call("gnp", "-k", "3", IRREDUCIBLE_OCTIC)[1])
        (p,) = doc["polygons"]
        assert [(q["a_order"], q["g_order_scaled"]) for q in p["points"]] == [
            (["0", "0"], ["24", "16"]), (["24", "16"], ["0", "0"])]

    def test_discriminant(self):
        doc = json.loads(call("discriminant", "y^2 - x1*x2")[1])
        assert doc["monomial_times_unit"] and doc["monomial_exponent"] == [1, 1]

    def test_semigroup(self):
        doc = json.loads(call("semigroup", IRREDUCIBLE_OCTIC, "--member", "12,8")[1])
        assert doc["semigroup_generators"] == [["8", "0"], ["0", "8"], ["2", "2"], ["12", "8"]]
        assert doc["is_member"]

    def test_oracle_commands(self, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("n = 4\n1 6\n1 7\n", encoding="utf-8")
        status, out, _ = call("oracle-branch", "--input", str(path))
        assert status == 0
        assert json.loads(out)["polynomial"] == "y^4 - 2*x1^3*y^2 - 4*x1^5*y + x1^6 - x1^7"
        doc = json.loads(call("oracle-verify", "--input", str(path))[1])
        assert doc["consistent"] and doc["verdict"] == "irreducible_quasi_ordinary"

    def test_oracle_truncation_flag(self, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("n = 8\n1 2 2\n1/4 6 2\n-3/32 10 2\n", encoding="utf-8")
        doc = json.loads(call("oracle-branch", "--input", str(path), "--truncation", "12")[1])
        assert doc["truncation"] == 12
        assert doc["polynomial"].startswith("y^8 - 2*x1*x2*y^4")


class TestExitCodes:
    def test_parse_error(self):
        status, out, err = call("analyze", "2*y^2 - x1")
        assert status == 1 and not out and "not monic" in err

    def test_contract_error(self):
        status, _, err = call("approx-root", "-d", "3", IRREDUCIBLE_OCTIC)
        assert status == 1 and "divide" in err

    def test_missing_file(self):
        assert call("analyze", "--input", "/nonexistent/file")[0] == 1

    def test_ambiguous(self, monkeypatch):
        import dataclasses

        from quasiord import criterion

        real = criterion.formal_order

        def tied(w, G, F):
            fo = real(w, G, F)
            return dataclasses.replace(fo, ties=(fo.theta,))

        monkeypatch.setattr(criterion, "formal_order", tied)
        status, out, _ = call("analyze", IRREDUCIBLE_OCTIC)
        assert status == 2
        assert json.loads(out)["reason"]["kind"] == "ambiguous_initial_monomial"

    def test_internal_error(self, monkeypatch):
        from quasiord import cli
        from quasiord.criterion import InternalError

        def broken(*args, **kwargs):
            raise InternalError("boom")

        monkeypatch.setattr(cli, "analyze", broken)
        status, _, err = call("analyze", IRREDUCIBLE_OCTIC)
        assert status == 2 and "boom" in err
