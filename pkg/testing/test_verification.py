import pytest
import logging
from cluster_tube import (
    Check,
    InternalInvariantBroken,
    InvalidRank,
    Report,
    Suite,
    UsageError,
    enum_maximal_rigids,
    run_suite,
)
from cluster_tube import verification
from cluster_tube.verification import TASK_COMPLETES


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("name", Suite.list())
def test_suites_pass_at_small_ranks(name, n) -> None:
    logging.info(f"::::::Running Suite {name} At n={n}::::::")
    report = run_suite(name, n, threads=1)
    assert report.passed, report.summary_lines()
    assert report.suite == name
    assert report.n == n
    assert report.checks
    assert all(check.instances > 0 for check in report.checks)


@pytest.mark.slow
@pytest.mark.parametrize("n", [3])
@pytest.mark.parametrize("name", Suite.list())
def test_suites_pass_at_rank_three(name, n) -> None:
    logging.info(f"::::::Running Suite {name} At n={n}::::::")
    report = run_suite(name, n, threads=2)
    assert report.passed, report.summary_lines()


@pytest.mark.slow
@pytest.mark.parametrize(
    "name",
    [
        "matrix-commutation",
        "exchange-triangles",
        "compatibility",
        "denominator",
        "independence",
        "cvectors",
        "gdc-identity",
    ],
)
def test_suites_pass_at_rank_four(name) -> None:
    logging.info(f"::::::Running Suite {name} At n=4::::::")
    report = run_suite(name, 4, threads=2)
    assert report.passed, report.summary_lines()


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5])
def test_census_at_larger_ranks(n) -> None:
    report = run_suite("maximal-rigid-census", n)
    assert report.passed, report.summary_lines()


def test_census_counts() -> None:
    report = run_suite("maximal-rigid-census", 3)
    assert report.passed
    census = report.checks[0]
    assert census.description.startswith("number of maximal rigid objects")
    assert census.instances == 1


def test_denominator_suite_instances() -> None:
    report = run_suite("denominator", 2)
    by_description = {check.description: check for check in report.checks}
    # 6 initial seeds with 4 non-initial variables each
    assert by_description["den(X_M) = rank F(M)"].instances == 24


def test_suite_on_two_workers_matches_inline() -> None:
    inline = run_suite("cvectors", 2, threads=1)
    parallel = run_suite("cvectors", 2, threads=2)
    assert [c.to_json() for c in parallel.checks] == [
        c.to_json() for c in inline.checks
    ]


def test_suite_errors() -> None:
    with pytest.raises(UsageError):
        run_suite("no-such-suite", 2)
    with pytest.raises(InvalidRank):
        run_suite("cvectors", 9)
    with pytest.raises(InvalidRank):
        run_suite("cvectors", 0)


def test_check_keeps_first_counterexample() -> None:
    check = Check("entries are even")
    check.record(True, value=2)
    check.record(False, value=3)
    check.record(False, value=5)
    assert not check.passed
    assert check.instances == 3
    assert check.counterexample == {"value": 3, "instance": 2}

    other = Check("entries are even")
    other.record(True)
    other.merge(check)
    assert other.instances == 4
    assert other.counterexample == {"value": 3, "instance": 2}


def test_report_payload() -> None:
    failing = Check("always fails")
    failing.record(False, reason="forced")
    report = Report("cvectors", 2, [Check("empty"), failing], 0.5)
    assert not report.passed
    assert report.failures() == [failing]
    payload = report.to_json()
    assert payload["passed"] is False
    assert payload["checks"][1]["counterexample"] == {
        "reason": "forced",
        "instance": 1,
    }
    assert report.summary_lines()[0].startswith("cvectors n=2: FAIL")


def _broken_pattern(*args, **kwargs):
    raise InternalInvariantBroken("object reached with two variables")


def test_task_error_becomes_counterexample(monkeypatch) -> None:
    logging.info("::::::Running Suite With A Broken Pattern::::::")
    monkeypatch.setattr(verification, "enumerate_pattern", _broken_pattern)
    report = run_suite("denominator", 2, threads=1)
    assert not report.passed
    assert [check.description for check in report.checks] == [TASK_COMPLETES]
    failure = report.checks[0]
    assert failure.instances == 6
    assert failure.counterexample["error"].startswith(
        "InternalInvariantBroken"
    )
    assert failure.counterexample["at"] in {
        str(T) for T in enum_maximal_rigids(2)
    }
    assert failure.counterexample["instance"] == 1


def test_completion_is_recorded_for_every_initial_rigid() -> None:
    report = run_suite("cvectors", 2, threads=1)
    by_description = {check.description: check for check in report.checks}
    completion = by_description[TASK_COMPLETES]
    assert completion.passed
    assert completion.instances == 6
