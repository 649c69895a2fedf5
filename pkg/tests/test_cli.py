"""Smoke tests for the command line."""

import json

import pytest
from typer.testing import CliRunner

from tentpole.cli.main import app

runner = CliRunner()


def json_from(output: str) -> dict:
    """The first JSON object printed, ignoring log lines around it."""
    start = output.index("{")
    data, _ = json.JSONDecoder().raw_decode(output[start:])
    return data


@pytest.fixture
def fx(fixtures_dir):
    return lambda name: str(fixtures_dir / name)


class TestVerify:
    """Tests for the verify command."""

    def test_worked_certificate(self, fx):
        result = runner.invoke(
            app, ["verify", fx("triangle.json"), fx("triangle_cert.json"), "--json"]
        )
        assert result.exit_code == 0, result.output
        report = json_from(result.output)
        assert report["residual"] == 0
        assert report["exact"] is True
        assert report["passed"] is True

    def test_failing_certificate(self, fx, tmp_path):
        shifted = tmp_path / "shifted.json"
        shifted.write_text(
            json.dumps(
                {
                    "complex": {"m": 3, "edges": [[1, 2], [1, 3], [2, 3]]},
                    "edge_polys": {"1-2": [1, 0, 1], "1-3": [1, 0, 1], "2-3": [1, 0, 1]},
                }
            )
        )
        result = runner.invoke(app, ["verify", str(shifted), fx("triangle_cert.json"), "--json"])
        assert result.exit_code == 1
        assert "certificate_does_not_verify" in result.output

    def test_forced_float(self, fx):
        result = runner.invoke(
            app, ["verify", fx("triangle.json"), fx("triangle_cert.json"), "--no-exact", "--json"]
        )
        assert result.exit_code == 0, result.output
        assert json_from(result.output)["exact"] is False


class TestCheckNonneg:
    """Tests for the check-nonneg command."""

    def test_negative(self, fx):
        result = runner.invoke(app, ["check-nonneg", fx("negative_example.json"), "--json"])
        assert result.exit_code == 1
        report = json_from(result.output)
        assert report["verdict"] == "negative"
        assert report["witness"]["edge"] == "1-2"
        assert report["minimum"] == pytest.approx(-0.25)
        assert "code=not_nonnegative" in result.output

    def test_nonneg(self, fx):
        result = runner.invoke(app, ["check-nonneg", fx("float_function.json"), "--json"])
        assert result.exit_code == 0, result.output
        assert json_from(result.output)["verdict"] == "nonneg"


class TestCertify:
    """Tests for certify followed by verify."""

    def test_certify_then_verify(self, fx, tmp_path):
        cert = tmp_path / "cert.json"
        result = runner.invoke(app, ["certify", fx("triangle_tent.json"), "-o", str(cert)])
        assert result.exit_code == 0, result.output
        assert cert.exists()

        result = runner.invoke(app, ["verify", fx("triangle_tent.json"), str(cert), "--json"])
        assert result.exit_code == 0, result.output
        assert json_from(result.output)["passed"] is True

    def test_certificate_to_stdout(self, fx):
        result = runner.invoke(app, ["certify", fx("float_function.json"), "-f", "tent"])
        assert result.exit_code == 0, result.output
        data = json_from(result.output)
        assert data["format"] == "tent"
        assert len(data["s_roots"]) <= 2 * 2 + 1

    def test_negative_input(self, fx):
        result = runner.invoke(app, ["certify", fx("negative_example.json")])
        assert result.exit_code == 1

    def test_bad_format(self, fx):
        result = runner.invoke(app, ["certify", fx("triangle.json"), "-f", "yaml"])
        assert result.exit_code == 2


class TestDocuments:
    """Tests for commands that read or write single documents."""

    def test_degree(self, fx):
        result = runner.invoke(app, ["degree", fx("triangle.json")])
        assert result.exit_code == 0, result.output
        assert "2" in result.output.split()

    def test_info(self, fx):
        result = runner.invoke(app, ["info", fx("triangle.json"), "--json"])
        assert result.exit_code == 0, result.output
        assert json_from(result.output) == {
            "components": 1,
            "degree": 2,
            "e": 3,
            "exact": True,
            "m": 3,
            "m0": 0,
            "tent_degree": 2,
        }

    def test_convert_to_tent(self, fx):
        result = runner.invoke(app, ["convert", fx("triangle.json"), "-f", "tent"])
        assert result.exit_code == 0, result.output
        data = json_from(result.output)
        assert data["tent"][0] == {"c": 1}
        assert len(data["tent"]) == 4

    def test_qm_convert(self, fx):
        result = runner.invoke(app, ["qm-convert", fx("triangle_cert.json")])
        assert result.exit_code == 0, result.output
        data = json_from(result.output)
        assert [t["generator"] for t in data["terms"]] == [None, 1, 2]

    def test_gen_is_deterministic(self, fx, tmp_path):
        args = ["gen", "--complex", fx("triangle_complex.json"), "-d", "4", "-s", "7"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == 0, first.output
        assert first.output == second.output

        path = tmp_path / "f.json"
        path.write_text(first.output)
        result = runner.invoke(app, ["check-nonneg", str(path), "--json"])
        assert result.exit_code == 0, result.output

    def test_gen_negative_degree(self, fx):
        result = runner.invoke(app, ["gen", "--complex", fx("triangle_complex.json"), "-d", "-1"])
        assert result.exit_code == 2

    def test_schemas(self):
        result = runner.invoke(app, ["schemas"])
        assert result.exit_code == 0
        assert "v1/certificate" in result.output


class TestInputErrors:
    """Tests for exit code 2 on malformed input."""

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        result = runner.invoke(app, ["degree", str(path)])
        assert result.exit_code == 2
        assert "error code=" in result.output

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["info", str(tmp_path / "absent.json")])
        assert result.exit_code == 2

    def test_directory_argument(self, tmp_path):
        result = runner.invoke(app, ["degree", str(tmp_path)])
        assert result.exit_code == 2
        assert "code=validation" in result.output

    def test_malformed_complex(self, tmp_path):
        path = tmp_path / "loop.json"
        path.write_text('{"complex": {"m": 2, "edges": [[1, 1]]}, "edge_polys": {}}')
        result = runner.invoke(app, ["degree", str(path)])
        assert result.exit_code == 2
        assert "code=malformed_complex" in result.output

    def test_invalid_tolerance(self, fx):
        result = runner.invoke(app, ["--tol-cert", "-1", "degree", fx("triangle.json")])
        assert result.exit_code == 2
