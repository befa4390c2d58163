"""
Exhaustive verification suites

Each suite runs a family of checks at one rank n and collects them in a
Report. A check counts the instances it has seen and keeps the first
counterexample it was handed; it passes iff it never got one. Suites that
sweep every initial maximal rigid object fan the sweep out over the worker
processes configured through CTUBE_THREADS.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from sympy import Matrix

from .cluster_engine import (
    c_matrix,
    enumerate_pattern,
    has_t_denominator,
    initial_seed,
    matrix_rows,
    mutate_g_vector,
    mutate_matrix,
)
from .constants import HOM_ORACLE_LENGTH_FACTOR, MAX_PATTERN_RANK
from .errors import ClusterTubeError, InvalidRank, UsageError
from .rep_oracle import hom_dim_oracle
from .rigid_calculus import (
    MaximalRigid,
    b_matrix,
    check_compatibility,
    compatibility_excess,
    enum_maximal_rigids,
    enum_rigid_indecs,
    exchange_dimension,
    exchange_graph,
    is_skew_symmetrizable_by,
    mutate_rigid,
    quiver_arrows,
    skew_symmetrizer,
)
from .tau_tilt import (
    cartan_via_duality,
    conjugate_by_symmetrizer,
    d_matrix,
    g_c_d_matrices,
    index,
    positive_c_vectors,
    rank_vector,
    rank_vector_table,
)
from .tube_core import (
    Indec,
    ext1_dim,
    hom_cluster_dim,
    hom_object_dim,
    hom_tube_dim,
    in_wing,
    shift,
    shift_inv,
    tau,
    tau_inv,
    tube_rank,
    wing,
)
from .workers import configured_threads, run_tasks

logger = logging.getLogger("ClusterTube-Verify")
logger.setLevel(logging.DEBUG)


class Suite(Enum):
    HomOracle = "hom-oracle"
    MaximalRigidCensus = "maximal-rigid-census"
    MatrixCommutation = "matrix-commutation"
    ExchangeTriangles = "exchange-triangles"
    Compatibility = "compatibility"
    Denominator = "denominator"
    DVectorProps = "dvector-props"
    Independence = "independence"
    CVectors = "cvectors"
    GVectors = "gvectors"
    GDCIdentity = "gdc-identity"

    @classmethod
    def list(cls) -> List[str]:
        return [suite.value for suite in cls]


def _jsonable(value: Any) -> Any:
    if isinstance(value, (Indec, MaximalRigid)):
        return str(value)
    if isinstance(value, np.ndarray):
        return matrix_rows(value)
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class Check:
    description: str
    instances: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, ok: bool, **counterexample: Any) -> None:
        self.instances += 1
        if ok or self.counterexample is not None:
            return
        payload = _jsonable(counterexample) if counterexample else {}
        payload["instance"] = self.instances
        self.counterexample = payload

    def merge(self, other: "Check") -> None:
        if self.counterexample is None and other.counterexample is not None:
            self.counterexample = dict(other.counterexample)
        self.instances += other.instances

    def to_json(self) -> Dict[str, Any]:
        return {
            "description": self.description,
            "passed": self.passed,
            "instances": self.instances,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    suite: str
    n: int
    checks: List[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "checks": [check.to_json() for check in self.checks],
        }

    def summary_lines(self) -> List[str]:
        lines = [
            f"{self.suite} n={self.n}: {'PASS' if self.passed else 'FAIL'}"
            f" ({self.elapsed:.2f} s)"
        ]
        for check in self.checks:
            verdict = "ok" if check.passed else "FAILED"
            lines.append(
                f"  [{verdict}] {check.description} ({check.instances} instances)"
            )
            if not check.passed:
                lines.append(f"    counterexample: {check.counterexample}")
        return lines


class _Checks:
    """Ordered collection of named checks"""

    def __init__(self) -> None:
        self._checks: Dict[str, Check] = {}

    def __getitem__(self, description: str) -> Check:
        if description not in self._checks:
            self._checks[description] = Check(description)
        return self._checks[description]

    def merge(self, checks: List[Check]) -> None:
        for check in checks:
            self[check.description].merge(check)

    def as_list(self) -> List[Check]:
        return list(self._checks.values())


def _safely(
    checks: _Checks,
    description: str,
    action: Callable[[], Any],
    **context: Any,
) -> Any:
    """Run action; a ClusterTubeError becomes a counterexample of the check"""
    try:
        return action()
    except ClusterTubeError as e:
        checks[description].record(False, error=str(e), **context)
        return None


### Suites without an initial seed sweep ###
def _hom_oracle(n: int) -> List[Check]:
    p = tube_rank(n)
    checks = _Checks()
    indecs = [
        Indec(a, b, p)
        for a in range(1, p + 1)
        for b in range(1, HOM_ORACLE_LENGTH_FACTOR * p + 1)
    ]
    for X in indecs:
        for Y in indecs:
            closed, oracle = hom_tube_dim(X, Y), hom_dim_oracle(X, Y)
            checks["hammock count agrees with the representation oracle"].record(
                closed == oracle, X=X, Y=Y, hammock=closed, oracle=oracle
            )
            checks["Hom in the tube is tau-invariant"].record(
                hom_tube_dim(tau(X), tau(Y)) == closed, X=X, Y=Y
            )

    rigids = enum_rigid_indecs(n)
    for X in rigids:
        for Y in rigids:
            checks["Ext^1 is symmetric on rigid objects"].record(
                ext1_dim(X, Y) == ext1_dim(Y, X), X=X, Y=Y
            )
            if X.b == n:
                expected = 0 if in_wing(Y, tau(X)) else 2
                checks["Hom from a length-n object is 0 on its tau-wing, else 2"].record(
                    hom_cluster_dim(X, Y) == expected,
                    N=X,
                    M=Y,
                    dim=hom_cluster_dim(X, Y),
                )
        for Y in wing(tau_inv(X)):
            checks["Hom from the wing of tau^-1 X into X vanishes"].record(
                hom_cluster_dim(Y, X) == 0, X=X, Y=Y
            )
    return checks.as_list()


def _census(n: int) -> List[Check]:
    checks = _Checks()
    found = enum_maximal_rigids(n)
    checks["number of maximal rigid objects is binom(2n, n)"].record(
        len(found) == math.comb(2 * n, n), count=len(found)
    )
    for T in found:
        checks["exactly one summand of length n"].record(
            sum(1 for X in T if X.b == n) == 1, T=T
        )
    graph = exchange_graph(n)
    checks["mutation reaches every maximal rigid object"].record(
        set(graph.nodes) == {T.key for T in found},
        reached=graph.number_of_nodes(),
    )
    checks["exchange graph is n-regular"].record(
        all(degree == n for _, degree in graph.degree()),
        degrees=sorted({degree for _, degree in graph.degree()}),
    )
    return checks.as_list()


### Per initial maximal rigid tasks ###
def _matrix_commutation_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    B = b_matrix(T)
    D = skew_symmetrizer(T.n)
    checks["D B_T is skew-symmetric"].record(
        is_skew_symmetrizable_by(B, D), T=T, B=B
    )
    arrows = _safely(
        checks,
        "quiver has a loop at 1 and no 2-cycles",
        lambda: quiver_arrows(T),
        T=T,
    )
    if arrows is not None:
        two_cycles = [
            (i, j)
            for (i, j), count in arrows.items()
            if i < j and count and arrows[(j, i)]
        ]
        checks["quiver has a loop at 1 and no 2-cycles"].record(
            arrows[(1, 1)] == 1 and not two_cycles, T=T, arrows=two_cycles
        )
    for k in range(1, T.n + 1):
        mutated, _ = mutate_rigid(T, k)
        lhs, rhs = mutate_matrix(B, k), b_matrix(mutated)
        checks["mu_k(B_T) = B_{mu_k(T)}"].record(
            np.array_equal(lhs, rhs), T=T, k=k, mutated_matrix=lhs, target=rhs
        )
    return checks.as_list()


def _exchange_triangles_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    for k in range(1, T.n + 1):
        result = _safely(
            checks,
            "middle terms lie in add of the complement",
            lambda: mutate_rigid(T, k),
            T=T,
            k=k,
        )
        if result is None:
            continue
        _, data = result
        rest = T.complement(k)
        X, X_star = data.removed, data.replacement
        U, U_prime = data.U, data.U_prime
        checks["middle terms lie in add of the complement"].record(
            all(Y in rest for Y in U) and all(Y in rest for Y in U_prime),
            T=T,
            k=k,
        )
        expected = 2 if X.b == T.n and X_star.b == T.n else 1
        checks["dim Ext^1(X, X*) is 2 for length n, else 1"].record(
            exchange_dimension(X, X_star) == expected, X=X, X_star=X_star
        )
        for Y in rest:
            checks["U -> X is a right approximation"].record(
                hom_object_dim(Y, U) >= hom_cluster_dim(Y, X),
                T=T,
                k=k,
                Y=Y,
            )
            checks["X -> U' is a left approximation"].record(
                hom_object_dim(U_prime, Y) >= hom_cluster_dim(X, Y),
                T=T,
                k=k,
                Y=Y,
            )
    return checks.as_list()


def _compatibility_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    for k in range(1, T.n + 1):
        _, E = mutate_rigid(T, k)
        for M in enum_rigid_indecs(T.n):
            checks["every rigid object is compatible with every exchange pair"].record(
                check_compatibility(M, E),
                M=M,
                X=E.removed,
                X_star=E.replacement,
            )
            if tau(M) in (E.removed, E.replacement):
                expected = 2 if M.b == T.n else 1
                excess = compatibility_excess(M, E)
                checks["excess at tau N is 1 below length n, 2 at length n"].record(
                    excess == expected,
                    N=M,
                    X=E.removed,
                    X_star=E.replacement,
                    excess=excess,
                )
    return checks.as_list()


def _denominator_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    pattern = enumerate_pattern(initial_seed(T))
    n = T.n
    checks["pattern has binom(2n, n) clusters and n(n+1) variables"].record(
        len(pattern.seeds) == math.comb(2 * n, n)
        and len(pattern.records) == n * (n + 1),
        T=T,
        seeds=len(pattern.seeds),
        variables=len(pattern.records),
    )
    initial = pattern.initial_objects()
    for record in pattern.sorted_records():
        checks["cluster variables have positive coefficients"].record(
            record.variable.has_positive_coefficients(), T=T, M=record.object
        )
        if record.object in initial:
            continue
        expected = rank_vector(T, record.object)
        checks["den(X_M) = rank F(M)"].record(
            record.den == expected,
            T=T,
            M=record.object,
            den=record.den,
            rank=expected,
        )
        checks["X_M has a T-denominator"].record(
            has_t_denominator(record.variable, record.den),
            T=T,
            M=record.object,
        )
    return checks.as_list()


def _dvector_props_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    pattern = enumerate_pattern(initial_seed(T))
    initial = pattern.initial.objects
    records = pattern.sorted_records()
    for record in records:
        M = record.object
        if M in initial.key:
            continue
        checks["non-initial denominators are nonnegative"].record(
            all(d >= 0 for d in record.den), T=T, M=M, den=record.den
        )
        for i, X in enumerate(T.summands, start=1):
            shares = any(
                S.objects.contains(M) and S.objects.contains(initial.summand(i))
                for S in pattern.seeds
            )
            checks["d_i = 0 iff a cluster contains the variable and x_i"].record(
                (record.den[i - 1] == 0) == shares, T=T, M=M, i=i
            )
            dim = hom_cluster_dim(X, M)
            closed = dim // 2 if X.b == T.n else dim
            checks["d_i is determined by T_i and M"].record(
                record.den[i - 1] == closed, T=T, M=M, i=i
            )
    dens = [record.den for record in records]
    checks["different variables have different denominators"].record(
        len(set(dens)) == len(dens), T=T, dens=dens
    )
    return checks.as_list()


def _independence_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    pattern = enumerate_pattern(initial_seed(T))
    for S in pattern.seeds:
        dens = pattern.den_matrix(S)
        checks["denominator vectors of a cluster are linearly independent"].record(
            Matrix(dens.tolist()).det() != 0, T=T, cluster=S.objects, D=dens
        )
        predicted = d_matrix(T, S.objects.summands)
        checks["denominator matrix agrees with rank vectors of the tags"].record(
            np.array_equal(dens, predicted), T=T, cluster=S.objects
        )
    return checks.as_list()


def _cvectors_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    n = T.n
    pattern = enumerate_pattern(initial_seed(T))
    c_vectors = _safely(
        checks, "every c-vector is sign-coherent", pattern.c_vectors, T=T
    )
    if c_vectors is None:
        return checks.as_list()
    checks["every c-vector is sign-coherent"].record(True)
    checks["there are 2n^2 c-vectors"].record(
        len(c_vectors) == 2 * n * n, T=T, count=len(c_vectors)
    )
    positive = {c for c in c_vectors if any(x > 0 for x in c)}
    expected = positive_c_vectors(T)
    checks["positive c-vectors are the tau-rigid rank vectors"].record(
        positive == expected, T=T, c_vectors=positive, rank_vectors=expected
    )
    table = rank_vector_table(T)
    checks["there are n^2 tau-rigid rank vectors, pairwise distinct"].record(
        len(table) == n * n and len(set(table.values())) == n * n,
        T=T,
        table=table,
    )
    return checks.as_list()


def _gvectors_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    pattern = enumerate_pattern(initial_seed(T))
    B = b_matrix(T)
    for record in pattern.sorted_records():
        ind = index(T, shift_inv(record.object))
        checks["g(X_M) = ind_T(Sigma^-1 M)"].record(
            record.g == ind, T=T, M=record.object, g=record.g, index=ind
        )
    for k in range(1, T.n + 1):
        neighbour, _ = mutate_rigid(T, k)
        rerooted = enumerate_pattern(initial_seed(neighbour))
        for M, record in pattern.records.items():
            moved = mutate_g_vector(record.g, B, k)
            target = rerooted.record_of(M).g
            checks["g-vectors follow the re-rooting recurrence"].record(
                moved == target, T=T, k=k, M=M, moved=moved, rerooted=target
            )
    return checks.as_list()


def _gdc_identity_task(T: MaximalRigid) -> List[Check]:
    checks = _Checks()
    n = T.n
    pattern = enumerate_pattern(initial_seed(T))
    D = skew_symmetrizer(n)
    shifted_twice = {shift(shift(X)) for X in T}
    for S in pattern.seeds:
        G = pattern.g_matrix(S)
        C = _safely(
            checks,
            "G_t^tr D C_t = D",
            lambda: c_matrix(S),
            T=T,
            cluster=S.objects,
        )
        if C is None:
            continue
        checks["G_t^tr D C_t = D"].record(
            np.array_equal(G.T.dot(D).dot(C), D), T=T, cluster=S.objects
        )
        T_t = S.objects.desuspend()
        G_mod, C_mod, _ = g_c_d_matrices(T, T_t)
        checks["G-matrix of the cluster is the index matrix"].record(
            np.array_equal(G, G_mod), T=T, cluster=S.objects, G=G, index=G_mod
        )
        checks["C_t is the module C-matrix conjugated by D"].record(
            np.array_equal(C, conjugate_by_symmetrizer(C_mod)),
            T=T,
            cluster=S.objects,
            C=C,
            module=C_mod,
        )
        if any(M in shifted_twice for M in S.objects):
            continue
        cartan = _safely(
            checks,
            "G^tr D is a Cartan matrix",
            lambda: cartan_via_duality(T, T_t),
            T=T,
            cluster=T_t,
        )
        if cartan is None:
            continue
        diagonal = [int(cartan[j, j]) for j in range(n)]
        bounds = [hom_cluster_dim(X, X) for X in T_t]
        checks["G^tr D is a Cartan matrix"].record(
            all(1 <= d <= bound for d, bound in zip(diagonal, bounds)),
            T=T,
            cluster=T_t,
            cartan=cartan,
        )
        if T_t.key == T.key:
            expected = np.array(
                [[hom_cluster_dim(X, Y) for Y in T_t] for X in T_t],
                dtype=object,
            )
            checks["Cartan matrix of End(T) is dim Hom_C(T_i, T_j)"].record(
                np.array_equal(cartan, expected), T=T, cartan=cartan
            )
    return checks.as_list()


_PER_RIGID_TASKS = {
    Suite.MatrixCommutation: _matrix_commutation_task,
    Suite.ExchangeTriangles: _exchange_triangles_task,
    Suite.Compatibility: _compatibility_task,
    Suite.Denominator: _denominator_task,
    Suite.DVectorProps: _dvector_props_task,
    Suite.Independence: _independence_task,
    Suite.CVectors: _cvectors_task,
    Suite.GVectors: _gvectors_task,
    Suite.GDCIdentity: _gdc_identity_task,
}


TASK_COMPLETES = "suite task completes without an error"


def _completing(
    task: Callable[[Any], List[Check]], argument: Any
) -> List[Check]:
    """Checks of task(argument) followed by a check that it did not raise"""
    checks: List[Check] = []
    error = None
    try:
        checks = task(argument)
    except ClusterTubeError as e:
        error = str(e)
    completion = Check(TASK_COMPLETES)
    completion.record(error is None, at=argument, error=error)
    return checks + [completion]


def _sweep(
    task: Callable[[MaximalRigid], List[Check]], n: int, threads: int
) -> List[Check]:
    checks = _Checks()
    arguments = [(task, T) for T in enum_maximal_rigids(n)]
    for result in run_tasks(_completing, arguments, threads):
        checks.merge(result)
    return checks.as_list()


def run_suite(name: str, n: int, threads: Optional[int] = None) -> Report:
    try:
        suite = Suite(name)
    except ValueError:
        raise UsageError(
            f"unknown suite {name!r}, expected one of {', '.join(Suite.list())}"
        )
    if not 1 <= n <= MAX_PATTERN_RANK:
        raise InvalidRank(
            f"suites support 1 <= n <= {MAX_PATTERN_RANK}, got {n}"
        )
    if threads is None:
        threads = configured_threads()

    logger.info(f"Running suite {suite.value} at n={n} on {threads} worker(s)")
    start = time.perf_counter()
    if suite is Suite.HomOracle:
        checks = _completing(_hom_oracle, n)
    elif suite is Suite.MaximalRigidCensus:
        checks = _completing(_census, n)
    else:
        checks = _sweep(_PER_RIGID_TASKS[suite], n, threads)
    report = Report(suite.value, n, checks, time.perf_counter() - start)

    for check in report.failures():
        logger.warning(
            f"{suite.value} n={n}: {check.description} failed on {check.counterexample}"
        )
    logger.info(
        f"Suite {suite.value} at n={n}: {'PASS' if report.passed else 'FAIL'}"
    )
    return report
