import json

import pytest
from click.testing import CliRunner

from paircomp.cli import main
from paircomp.serialize import matrix_to_json
from paircomp.fixtures import _build_exam, _build_m1


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def exam_path(tmp_path):
    path = tmp_path / "exam.json"
    path.write_text(json.dumps(matrix_to_json(_build_exam())))
    return str(path)


@pytest.fixture
def m1_path(tmp_path):
    path = tmp_path / "m1.json"
    path.write_text(json.dumps(matrix_to_json(_build_m1())))
    return str(path)


@pytest.fixture
def inconsistent_253_path(tmp_path):
    doc = {
        "group": "PositiveReals",
        "mode": "strict",
        "labels": ["A", "B", "C"],
        "entries": [[1, 2, 5], [0.5, 1, 3], [0.2, 0.3333333333333333, 1]],
    }
    path = tmp_path / "inconsistent-253.json"
    path.write_text(json.dumps(doc))
    return str(path)


class TestAnalyze:
    def test_exam_ranking_and_kii(self, runner, exam_path):
        result = runner.invoke(main, ["analyze", exam_path, "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["consistent"] is True
        assert doc["kii"] == 0
        assert [entry["label"] for entry in doc["ranking"]] == ["D", "A", "B", "C"]
        assert doc["eigenvalue"] == 4

    def test_253_judgments_yield_one_sixth(self, runner, inconsistent_253_path):
        result = runner.invoke(main, ["analyze", inconsistent_253_path, "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["consistent"] is False
        assert doc["kii"] == pytest.approx(1 / 6, abs=1e-12)
        assert doc["worst_triad"] == {"i": 0, "k": 1, "j": 2, "x": 2, "y": 5, "z": 3}

    def test_research_matrix_needs_flag(self, runner, m1_path):
        result = runner.invoke(main, ["analyze", m1_path])
        assert result.exit_code == 1
        assert "StrictModeViolation" in result.stderr

    def test_research_flag_admits_m1(self, runner, m1_path):
        result = runner.invoke(main, ["analyze", m1_path, "--research", "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["consistent"] is True
        assert doc["gm_weights"] == [-1, 1, -1]
        assert doc["kii"] is None
        assert any("UndefinedForGroup" in note for note in doc["notes"])

    def test_parse_error_exit_code(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        result = runner.invoke(main, ["analyze", str(bad)])
        assert result.exit_code == 2
        assert "ParseError" in result.stderr

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(main, ["analyze", str(tmp_path / "ghost.json")])
        assert result.exit_code == 2

    def test_validation_error_exit_code(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text(json.dumps({"entries": [[1, 2], [0.6, 1]]}))
        result = runner.invoke(main, ["analyze", str(path)])
        assert result.exit_code == 1
        assert "ReciprocityViolation" in result.stderr

    def test_text_renders_the_json_numbers(self, runner, exam_path):
        as_json = json.loads(
            runner.invoke(main, ["analyze", exam_path, "--format", "json"]).output
        )
        as_text = runner.invoke(main, ["analyze", exam_path]).output
        for weight in as_json["gm_weights"]:
            assert f"{weight:.12g}" in as_text
        assert f"{as_json['kii']:.12g}" in as_text


class TestOrderability:
    def test_positive_reals(self, runner):
        result = runner.invoke(main, ["orderability", "PositiveReals"])
        assert result.exit_code == 0
        assert "orderable" in result.output

    def test_nonzero_complex(self, runner):
        result = runner.invoke(main, ["orderability", "NonzeroComplex"])
        assert result.exit_code == 3
        assert "0+1i" in result.output and "order 4" in result.output

    def test_nonzero_reals_witness(self, runner):
        result = runner.invoke(main, ["orderability", "NonzeroReals", "--format", "json"])
        assert result.exit_code == 3
        doc = json.loads(result.output)
        assert doc["witness"] == {"element": -1.0, "order": 2}

    def test_cyclic_six(self, runner):
        result = runner.invoke(main, ["orderability", "CyclicRootsOfUnity:6"])
        assert result.exit_code == 3

    def test_unknown_group(self, runner):
        result = runner.invoke(main, ["orderability", "Quaternions"])
        assert result.exit_code == 2


class TestFixtures:
    def test_all_gives_five_reports(self, runner):
        result = runner.invoke(main, ["fixtures", "all", "--format", "json"])
        assert result.exit_code == 0
        reports = json.loads(result.output)
        assert len(reports) == 5
        assert all(r["passed"] for r in reports)

    def test_m3_includes_branch_count(self, runner):
        result = runner.invoke(main, ["fixtures", "M3"])
        assert result.exit_code == 0
        assert "256" in result.output

    def test_m1_includes_gm_vector(self, runner):
        result = runner.invoke(main, ["fixtures", "M1"])
        assert result.exit_code == 0
        assert "[-1, 1, -1]" in result.output

    def test_unknown_fixture(self, runner):
        result = runner.invoke(main, ["fixtures", "M9"])
        assert result.exit_code == 2


class TestTransform:
    def test_log_of_m1(self, runner, m1_path):
        result = runner.invoke(main, ["transform", "log", m1_path, "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["additive_consistent"] is False
        assert doc["additive_reciprocal"] is False
        assert doc["matrix"]["domain"] == "additive"
        assert doc["matrix"]["entries"][0][1] == "0.0+3.141592653589793i"

    def test_log_then_exp_round_trip(self, runner, exam_path, tmp_path):
        logged = runner.invoke(main, ["transform", "log", exam_path, "--format", "json"])
        additive_path = tmp_path / "additive.json"
        additive_path.write_text(json.dumps(json.loads(logged.output)["matrix"]))
        back = runner.invoke(
            main, ["transform", "exp", str(additive_path), "--format", "json"]
        )
        assert back.exit_code == 0
        doc = json.loads(back.output)
        assert doc["consistent"] is True
        original = json.loads(
            runner.invoke(main, ["analyze", exam_path, "--format", "json"]).output
        )
        assert doc["matrix"]["n"] == original["n"]

    def test_exp_respects_strict_gate(self, runner, m1_path, tmp_path):
        logged = runner.invoke(main, ["transform", "log", m1_path, "--format", "json"])
        additive_path = tmp_path / "m4.json"
        additive_path.write_text(json.dumps(json.loads(logged.output)["matrix"]))
        strict = runner.invoke(main, ["transform", "exp", str(additive_path)])
        assert strict.exit_code == 1
        research = runner.invoke(
            main,
            ["transform", "exp", str(additive_path), "--group", "NonzeroReals", "--research"],
        )
        assert research.exit_code == 0

    def test_log_rejects_additive_input(self, runner, tmp_path):
        path = tmp_path / "a.json"
        path.write_text(json.dumps({"domain": "additive", "entries": [[0, 1], [-1, 0]]}))
        result = runner.invoke(main, ["transform", "log", str(path)])
        assert result.exit_code == 2


class TestComplete:
    def test_chain(self, runner, tmp_path):
        path = tmp_path / "chain.json"
        path.write_text(json.dumps([
            {"i": 0, "j": 1, "value": 2},
            {"i": 1, "j": 2, "value": 2},
            {"i": 2, "j": 3, "value": 2},
        ]))
        result = runner.invoke(main, ["complete", str(path), "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["consistent"] is True
        assert doc["matrix"]["entries"][0][3] == 8

    def test_labels_flow_through(self, runner, tmp_path):
        path = tmp_path / "pair.json"
        path.write_text(json.dumps([{"i": 0, "j": 1, "value": 7}]))
        result = runner.invoke(
            main, ["complete", str(path), "--labels", "A,B", "--format", "json"]
        )
        doc = json.loads(result.output)
        assert doc["matrix"]["labels"] == ["A", "B"]
        assert doc["matrix"]["entries"][1][0] == pytest.approx(1 / 7)

    def test_not_a_tree(self, runner, tmp_path):
        path = tmp_path / "extra.json"
        path.write_text(json.dumps([
            {"i": 0, "j": 1, "value": 2},
            {"i": 1, "j": 2, "value": 3},
            {"i": 0, "j": 2, "value": 5},
        ]))
        result = runner.invoke(main, ["complete", str(path)])
        assert result.exit_code == 1
        assert "NotATree" in result.stderr
