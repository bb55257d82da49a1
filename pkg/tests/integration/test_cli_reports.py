"""
End-to-end runs of the command line on the reference figures.
"""

import io
import json

import pytest
import structlog

from src.cli import run
from src.main import main
from tests.strategies import H0_DSL, H1_DSL, H2_DSL, H3_DSL

REFERENCE = {"h0": H0_DSL, "h1": H1_DSL, "h2": H2_DSL, "h3": H3_DSL}


def _report(text, *flags):
    out = io.StringIO()
    code = run(["report", text, *flags], stdout=out)
    return code, out.getvalue()


@pytest.mark.numeric
class TestReport:
    """Full reports."""

    @pytest.mark.parametrize("name", sorted(REFERENCE))
    def test_reference_figures_succeed(self, name):
        code, out = _report(REFERENCE[name], "--json")
        data = json.loads(out)
        assert code == 0, data["sections"].get("error")
        assert data["passed"] is True
        assert data["sections"]["oracle"]["agrees"]
        assert len(data["sections"]["cohomology"]) == 9

    def test_degree_one_classes(self):
        classes = {}
        for name, text in REFERENCE.items():
            _, out = _report(text, "--json")
            reports = json.loads(out)["sections"]["cohomology"]
            classes[name] = next(r["class"] for r in reports if r["bidegree"] == [0, 1])
        assert classes == {"h0": "indiscrete", "h1": "indiscrete", "h2": "hausdorff", "h3": "mixed"}

    def test_punctured_bidisc_reduced_part(self):
        _, out = _report(H2_DSL, "--json")
        report = next(r for r in json.loads(out)["sections"]["cohomology"] if r["bidegree"] == [0, 1])
        assert report["reduced"]["spectrum"]["boxes"] == [[["-inf", -1], ["-inf", -1]]]
        assert report["reduced"]["convergence"]["dsl"] == "annulus(1/2,inf) x annulus(1/2,inf)"

    def test_runge_figure_envelope_is_not_a_box(self):
        _, out = _report(H0_DSL, "--json")
        envelope = json.loads(out)["sections"]["envelope"]
        assert envelope["envelope"] is None
        assert envelope["hull"]["is_box"] is False

    def test_json_is_byte_identical(self):
        assert _report(H3_DSL, "--json") == _report(H3_DSL, "--json")

    def test_equivalent_spellings_give_identical_json(self):
        spelled = "hartogs(X = disc(1.0), X0 = annulus(0.5, 1), Y = disc(1), Y0 = annulus(.5, 0.75))"
        assert _report(spelled, "--json") == _report(H3_DSL, "--json")

    def test_text_report(self):
        code, out = _report(H1_DSL)
        assert code == 0
        assert "### Summary" in out
        assert "### Pair X: (A(1/2,1), Δ)" in out
        assert "Envelope of holomorphy: Δ×Δ" in out
        assert "### Checks" in out


class TestRejectedInput:
    """Exit codes for bad or unsupported input."""

    def test_malformed_dsl(self):
        code, out = _report("hartogs(X=disc(1), X0=", "--json")
        assert code == 2
        assert json.loads(out)["passed"] is False

    def test_unsupported_product_pair(self):
        out = io.StringIO()
        code = run(["classify-pair", "(annulus(1/2,1) x disc(1/2), disc(1) x disc(1))"], stdout=out)
        assert code == 3
        assert "Reason: factor pairs mix runge, split" in out.getvalue()


class TestEntryPoint:
    """The console script."""

    @pytest.fixture(autouse=True)
    def restore_logging(self):
        yield
        structlog.reset_defaults()

    def test_main_exits_with_the_command_status(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.argv", ["hartogs", "cohomology", H2_DSL, "--json"])
        with pytest.raises(SystemExit) as excinfo:
            main()
        assert excinfo.value.code == 0
        assert json.loads(capsys.readouterr().out)["sections"]["cohomology"][0]["class"] == "hausdorff"
