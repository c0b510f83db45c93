import json

import pytest

from app.brauer.diagram import identity_diagram
from app.brauer.search import witnesses_from_record
from app.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


class TestRingCommands:

    def test_simplify(self, capsys):
        code, out, _ = run(capsys, "simplify", "D(1,2)*D(1,2)", "--n", "2")
        assert code == 0
        assert out == "-D(1,2)*psi(1)"

    def test_simplify_infers_factor_count(self, capsys):
        code, out, _ = run(capsys, "simplify", "D(1,3)*psi(2)", "--format", "json")
        assert code == 0
        assert json.loads(out)["n"] == 3

    def test_simplify_zero(self, capsys):
        code, out, _ = run(capsys, "simplify", "0")
        assert code == 0
        assert out == "0"

    def test_leray_needs_factor_count(self, capsys):
        code, _, err = run(capsys, "leray", "--g", "3", "--k", "1")
        assert code == 1
        assert "--n" in err

    def test_syntax_error(self, capsys):
        code, out, err = run(capsys, "simplify", "psi(1) +", "--n", "2")
        assert code == 1
        assert out == ""
        assert err.startswith("error (syntax)")

    def test_pointed_degree(self, capsys):
        code, out, _ = run(capsys, "deg", "K(1)*K(2)", "--n", "2", "--flavor", "pointed")
        assert code == 0
        assert out == "4*g^2 - 8*g + 4"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "simplify", "D(1,2)*D(1,2)", "--n", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["n"] == 2
        assert data["flavor"] == "relative"

    def test_diagonal_power_witness(self, capsys):
        code, out, _ = run(capsys, "witness", "diagonal-power", "--format", "json")
        assert code == 0
        relations = {row["flavor"]: row["relation"] for row in json.loads(out)}
        assert relations == {"relative": "negated", "pointed": "both_zero"}

    def test_gs_minus_y_difference(self, capsys, fixture_data, pt):
        code, out, _ = run(capsys, "witness", "gs-minus-y")
        assert code == 0
        first = out.splitlines()[0]
        assert first.startswith("difference: ")
        expected = fixture_data("gs_minus_y_difference.json")["difference"]
        assert pt(first[len("difference: "):], 3) == pt(expected, 3)


class TestBrauerCommands:

    def test_loop_parameter(self, capsys):
        assert run(capsys, "loop-parameter")[1] == "-2*g"
        assert run(capsys, "loop-parameter", "--g", "2")[1] == "-4"

    def test_compose_closed_loop(self, capsys):
        code, out, _ = run(capsys, "brauer", "compose", "[(1,2),(1',2')]", "[(1,2),(1',2')]")
        assert code == 0
        assert out == "(-2*g)*[(1,2),(1',2')]"

    def test_search_writes_record(self, capsys, tmp_path):
        path = tmp_path / "fp1.json"
        code, out, _ = run(capsys, "brauer", "search", "--source", "fp1", "--target", "fp1", "--record", str(path))
        assert code == 0
        assert out.startswith("matchings checked: 3")
        record = json.loads(path.read_text())
        assert record["matchings_checked"] == 3
        assert not record["certified_absent"]
        assert identity_diagram(2) in [w.diagram for w in witnesses_from_record(record)]


class TestWeightCommands:

    def test_vanish(self, capsys):
        code, out, _ = run(capsys, "vanish", "--g", "7", "--i", "2", "--l", "3")
        assert code == 0
        assert out == "r: 0\nvanishes: true"

    def test_vanish_json(self, capsys):
        _, out, _ = run(capsys, "vanish", "--g", "7", "--i", "2", "--l", "3", "--format", "json")
        assert json.loads(out) == {"r": 0, "vanishes": True, "pure": False}

    def test_bbw_negative_weight(self, capsys):
        code, out, _ = run(capsys, "bbw", "(-5,1)", "--g", "2")
        assert code == 0
        assert out == "degree: 3\nweight: 1,1"

    def test_rank_must_be_integer(self, capsys):
        code, _, err = run(capsys, "vanish", "--g", "generic", "--i", "1", "--l", "1")
        assert code == 1
        assert "integer rank" in err

    def test_unstable_power_is_refused(self, capsys):
        code, out, err = run(capsys, "decompose-power", "3", "--g", "2")
        assert code == 2
        assert out == ""
        assert err.startswith("error (refusal)")

    def test_refusal_as_json(self, capsys):
        code, _, err = run(capsys, "decompose-power", "3", "--g", "2", "--format", "json")
        assert code == 2
        payload = json.loads(err)
        assert payload["kind"] == "refusal"
        assert payload["exit_code"] == 2


class TestSymprodCommands:

    def test_distinct_removal_fails(self, capsys):
        code, out, _ = run(capsys, "symprod", "verify", "--n", "3", "--alphabet", "2", "--removal", "distinct")
        assert code == 0
        assert out.splitlines()[0] == "holds: false"
        assert "counterexample: {o,o}" in out

    def test_decompose_level(self, capsys):
        code, out, _ = run(capsys, "symprod", "decompose", "{x,y} - {x,o} - {y,o} + {o,o}")
        assert code == 0
        assert out.endswith("level: 2")


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["brauer"], ["vanish", "--g", "3"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("error (usage)")
