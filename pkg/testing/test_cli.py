import pytest
import json
import pathlib
import logging
from cluster_tube import (
    Check,
    InternalInvariantBroken,
    Report,
    UsageError,
    distinguished_maximal_rigid,
    enumerate_pattern,
    initial_seed,
)
from cluster_tube import cli, verification
from cluster_tube.verification import TASK_COMPLETES
from cluster_tube.export import (
    dumps,
    export_exchange_graph,
    pattern_graph,
    pattern_to_csv,
    pattern_to_json,
    worked_example,
)

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def golden_worked_example() -> str:
    return (GOLDEN / "worked_n2.json").read_text(encoding="utf-8")


def test_worked_example_matches_golden(golden_worked_example) -> None:
    logging.info("::::::Running Worked Example Against The Golden File::::::")
    assert dumps(worked_example()) == golden_worked_example


def test_pattern_exports() -> None:
    pattern = enumerate_pattern(initial_seed(distinguished_maximal_rigid(2)))
    payload = pattern_to_json(pattern)
    assert payload["n"] == 2
    assert payload["clusters"] == 6
    assert payload["b_matrix"] == [[0, -1], [2, 0]]
    assert payload["initial"] == [{"a": 1, "b": 2}, {"a": 1, "b": 1}]
    assert len(payload["records"]) == 6

    free = pattern_to_json(pattern, coefficients=False)
    record = next(
        r for r in free["records"] if r["object"] == {"a": 1, "b": 1}
    )
    assert record["terms"] == [
        {"coef": "1", "exp": [0, -1, 0, 0]},
        {"coef": "1", "exp": [1, -1, 0, 0]},
    ]

    lines = pattern_to_csv(pattern).splitlines()
    assert lines[0] == "object,den,g"
    assert len(lines) == 7
    assert '"(1,1)",0 1,1 -1' in lines

    graph = pattern_graph(pattern)
    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 6


@pytest.mark.parametrize(
    "n, nodes, edges", [(1, 2, 1), (2, 6, 6), (3, 20, 30)]
)
def test_export_exchange_graph(n, nodes, edges) -> None:
    T = distinguished_maximal_rigid(n)
    payload = json.loads(export_exchange_graph(T, "json"))
    assert payload["n"] == n
    assert len(payload["nodes"]) == nodes
    assert len(payload["edges"]) == edges
    assert {edge["k"] for edge in payload["edges"]} == set(range(1, n + 1))

    dot = export_exchange_graph(T, "dot")
    assert dot.startswith(f"graph exchange_n{n} {{\n")
    assert dot.endswith("}\n")
    assert dot.count(" -- ") == edges


def test_export_exchange_graph_format() -> None:
    with pytest.raises(UsageError):
        export_exchange_graph(distinguished_maximal_rigid(1), "svg")


def test_cli_worked_example(tmp_path, golden_worked_example) -> None:
    out = tmp_path / "worked.json"
    assert cli.main(["worked-example", "--out", str(out)]) == 0
    assert out.read_bytes() == golden_worked_example.encode("utf-8")


def test_cli_enumeration(capsys) -> None:
    assert cli.main(["enum-maximal-rigids", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    assert "(1,2);(1,1)" in lines

    assert cli.main(["enum-rigids", "--n", "1", "--json"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == [{"a": 1, "b": 1}, {"a": 2, "b": 1}]


def test_cli_rigid_calculus(capsys) -> None:
    assert cli.main(["b-matrix", "--n", "2", "--json"]) == 0
    assert capsys.readouterr().out == "[[0, -1], [2, 0]]\n"

    assert cli.main(["mutate", "--n", "2", "--k", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["removed"] == {"a": 1, "b": 1}
    assert payload["replacement"] == {"a": 2, "b": 1}
    assert payload["U"] == []
    assert payload["U_prime"] == [{"a": 1, "b": 2}]

    assert cli.main(["quiver", "--n", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "1->1": 1,
        "1->2": 0,
        "2->1": 1,
    }


def test_cli_module_side(capsys) -> None:
    args = ["--n", "2", "--t", "(1,1);(1,2)", "--json"]
    assert cli.main(["index", "--x", "(2,1)"] + args) == 0
    assert json.loads(capsys.readouterr().out) == [1, -1]

    assert cli.main(["rank-vector", "--m", "(1,2)"] + args) == 0
    assert json.loads(capsys.readouterr().out) == [1, 2]

    assert cli.main(["c-vectors"] + args) == 0
    assert json.loads(capsys.readouterr().out) == [
        [0, 1],
        [1, 0],
        [1, 1],
        [1, 2],
    ]

    assert cli.main(["gcd"] + args) == 0
    assert json.loads(capsys.readouterr().out) == {
        "G": [[1, 0], [0, 1]],
        "C": [[1, 0], [0, 1]],
        "D": [[2, 0], [2, 1]],
    }


def test_cli_cluster_pattern(capsys) -> None:
    assert cli.main(["cluster-pattern", "--n", "2", "--csv"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "object,den,g"

    assert cli.main(["cluster-pattern", "--n", "1", "--no-coefficients"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["coefficients"] is False
    assert payload["clusters"] == 2


def test_cli_suite_exit_codes(capsys, monkeypatch) -> None:
    assert cli.main(["suite", "cvectors", "--n", "2"]) == 0
    assert "cvectors n=2: PASS" in capsys.readouterr().out

    def failing_suite(name, n):
        check = Check("forced failure")
        check.record(False, reason="monkeypatched")
        return Report(name, n, [check])

    monkeypatch.setattr(cli, "run_suite", failing_suite)
    assert cli.main(["suite", "cvectors", "--n", "2", "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is False


def test_cli_suite_error_fails_the_run(capsys, monkeypatch) -> None:
    def broken_pattern(*args, **kwargs):
        raise InternalInvariantBroken("object reached with two variables")

    monkeypatch.delenv("CTUBE_THREADS", raising=False)
    monkeypatch.setattr(verification, "enumerate_pattern", broken_pattern)
    assert cli.main(["suite", "denominator", "--n", "2", "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is False
    [check] = payload["checks"]
    assert check["description"] == TASK_COMPLETES
    assert "InternalInvariantBroken" in check["counterexample"]["error"]


def test_cli_exchange_graph_formats(capsys) -> None:
    assert cli.main(["exchange-graph", "--n", "2", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph exchange_n2 {")
    assert cli.main(["exchange-graph", "--n", "2"]) == 0
    assert capsys.readouterr().out.startswith("graph exchange_n2 {")
    assert cli.main(["exchange-graph", "--n", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 2
    assert cli.main(["exchange-graph", "--n", "2", "--json", "--dot"]) == 2
    assert "UsageError" in capsys.readouterr().err


def test_cli_usage_errors(capsys) -> None:
    assert cli.main(["mutate", "--n", "2", "--k", "3"]) == 2
    assert "BadDirection" in capsys.readouterr().err

    assert cli.main(["enum-rigids", "--n", "13"]) == 2
    assert "InvalidRank" in capsys.readouterr().err

    assert cli.main(["suite", "cvectors", "--n", "9"]) == 2
    assert "InvalidRank" in capsys.readouterr().err

    assert cli.main(["index", "--n", "9", "--x", "(2,1)"]) == 2
    assert "InvalidRank" in capsys.readouterr().err

    assert cli.main(["gcd", "--n", "9"]) == 2
    assert "InvalidRank" in capsys.readouterr().err

    assert cli.main(["b-matrix", "--n", "2", "--t", "(1,2);(2,2)"]) == 2
    assert "NotRigid" in capsys.readouterr().err

    assert cli.main(["index", "--n", "2", "--x", "1,2"]) == 2
    assert "UsageError" in capsys.readouterr().err

    with pytest.raises(SystemExit) as excinfo:
        cli.main(["suite", "no-such-suite", "--n", "2"])
    assert excinfo.value.code == 2
