"""
Cluster pattern with principal coefficients, tracked along rigid objects

A seed carries the extended exchange matrix (2n x n, principal part on
top, coefficient part below), n cluster variables as Laurent polynomials
in x1..x2n and the maximal rigid object whose summands tag those
variables. The initial seed of a maximal rigid T is tagged by Sigma T.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from .constants import DEFAULT_MAX_SEEDS
from .errors import (
    BadDirection,
    GradingViolation,
    InternalInvariantBroken,
    SeedCapExceeded,
    Undefined,
)
from .laurent import LaurentPoly
from .rigid_calculus import MaximalRigid, b_matrix, mutate_rigid
from .tube_core import Indec

logger = logging.getLogger("ClusterTube-Engine")
logger.setLevel(logging.DEBUG)

# 2n x n object array of python ints
ExtendedMatrix = np.ndarray
IntVector = Tuple[int, ...]


def int_matrix(rows: Sequence[Sequence[int]]) -> np.ndarray:
    return np.array([[int(x) for x in row] for row in rows], dtype=object)


def matrix_rows(M: np.ndarray) -> List[List[int]]:
    """Row-major nested lists of python ints (json friendly)"""
    return [[int(x) for x in row] for row in M]


def extended_matrix(B: np.ndarray) -> ExtendedMatrix:
    """Stack the identity coefficient part below B"""
    n = B.shape[1]
    identity = np.zeros((n, n), dtype=object)
    for i in range(n):
        identity[i, i] = 1
    return np.vstack([B.astype(object), identity])


def principal_part(M: ExtendedMatrix) -> np.ndarray:
    n = M.shape[1]
    return M[:n, :]


def coefficient_part(M: ExtendedMatrix) -> np.ndarray:
    n = M.shape[1]
    return M[n:, :]


def _positive(x: int) -> int:
    return x if x > 0 else 0


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_matrix(M: ExtendedMatrix, k: int) -> ExtendedMatrix:
    """Matrix mutation in direction k (1-based), applied to every row"""
    rows, n = M.shape
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    c = k - 1
    mutated = np.zeros((rows, n), dtype=object)
    for i in range(rows):
        for j in range(n):
            b_ij = int(M[i, j])
            if i == c or j == c:
                mutated[i, j] = -b_ij
            else:
                b_ik, b_kj = int(M[i, c]), int(M[c, j])
                mutated[i, j] = b_ij + _sign(b_ik) * _positive(b_ik * b_kj)
    return mutated


@dataclass(frozen=True, eq=False)
class Seed:
    """Extended matrix, cluster and the rigid objects tagging the cluster slot by slot"""

    matrix: ExtendedMatrix
    cluster: Tuple[LaurentPoly, ...]
    objects: MaximalRigid

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def key(self) -> FrozenSet[Tuple[Indec, LaurentPoly]]:
        return frozenset(zip(self.objects.summands, self.cluster))

    def variable(self, k: int) -> LaurentPoly:
        if not 1 <= k <= self.n:
            raise BadDirection(f"direction {k} outside 1..{self.n}")
        return self.cluster[k - 1]

    def variable_of(self, M: Indec) -> Optional[LaurentPoly]:
        slot = self.objects.slot_of(M)
        if slot is None:
            return None
        return self.cluster[slot - 1]


@dataclass(frozen=True)
class ClusterRecord:
    object: Indec
    variable: LaurentPoly
    den: IntVector
    g: IntVector

    def to_json(self) -> dict:
        return {
            "object": self.object.to_json(),
            "terms": self.variable.to_json(),
            "den": list(self.den),
            "g": list(self.g),
        }


def initial_seed(T: MaximalRigid) -> Seed:
    """Principal coefficients at B_T, cluster x1..xn tagged by Sigma T"""
    n = T.n
    cluster = tuple(LaurentPoly.variable(i, 2 * n) for i in range(1, n + 1))
    return Seed(extended_matrix(b_matrix(T)), cluster, T.suspend())


def _exchange_monomial(S: Seed, k: int, sign: int) -> LaurentPoly:
    n = S.n
    product = LaurentPoly.one(2 * n)
    coefficient_exps = [0] * (2 * n)
    for i in range(2 * n):
        e = _positive(sign * int(S.matrix[i, k - 1]))
        if not e:
            continue
        if i < n:
            product = product * S.cluster[i] ** e
        else:
            coefficient_exps[i] = e
    return product * LaurentPoly.monomial(coefficient_exps)


def mutate_seed(S: Seed, k: int) -> Seed:
    if not 1 <= k <= S.n:
        raise BadDirection(f"direction {k} outside 1..{S.n}")
    numerator = _exchange_monomial(S, k, 1) + _exchange_monomial(S, k, -1)
    # LaurentViolation here means a broken exchange relation
    new_variable = numerator.exact_divide(S.cluster[k - 1])
    cluster = list(S.cluster)
    cluster[k - 1] = new_variable
    objects, _ = mutate_rigid(S.objects, k)
    return Seed(mutate_matrix(S.matrix, k), tuple(cluster), objects)


def denominator_vector(v: LaurentPoly, n: Optional[int] = None) -> IntVector:
    """d_i = -(minimal exponent of x_i), i = 1..n; initial variables give -e_i"""
    if v.is_zero:
        raise Undefined("the zero polynomial has no denominator vector")
    if n is None:
        n = v.nvars // 2
    return tuple(-e for e in v.min_exponents()[:n])


def g_vector(v: LaurentPoly, B: np.ndarray) -> IntVector:
    """Common degree of the terms of v for deg x_i = e_i, deg x_{n+j} = -b_j"""
    n = B.shape[1]
    degrees = set()
    for exp, _ in v.items():
        low = np.array(exp[:n], dtype=object)
        high = np.array(exp[n:], dtype=object)
        degrees.add(tuple(int(x) for x in low - B.dot(high)))
    if len(degrees) != 1:
        raise GradingViolation(f"{v} is not homogeneous: {sorted(degrees)}")
    return degrees.pop()


def mutate_g_vector(g: Sequence[int], B: np.ndarray, k: int) -> IntVector:
    """g-vector of the same variable after moving the root from t0 to mu_k(t0)"""
    n = B.shape[1]
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    g_k = g[k - 1]
    mutated = []
    for j in range(n):
        if j == k - 1:
            mutated.append(-g_k)
            continue
        b_jk = int(B[j, k - 1])
        mutated.append(g[j] + _positive(b_jk) * g_k - b_jk * min(g_k, 0))
    return tuple(mutated)


def c_matrix(S: Seed) -> np.ndarray:
    C = coefficient_part(S.matrix)
    for j in range(S.n):
        column = [int(x) for x in C[:, j]]
        if any(x > 0 for x in column) and any(x < 0 for x in column):
            raise InternalInvariantBroken(
                f"c-vector {column} is not sign-coherent"
            )
    return C


def specialize_coefficients(v: LaurentPoly) -> LaurentPoly:
    """Set the coefficient variables x_{n+1}..x_{2n} to 1"""
    n = v.nvars // 2
    return v.substitute_one(range(n + 1, 2 * n + 1))


def has_t_denominator(v: LaurentPoly, den: Sequence[int]) -> bool:
    """
    True iff the coefficient-free form of v is f / x^den with f a polynomial
    in x1..xn such that f(eps_i) > 0 for every i, eps_i the all-ones point
    with a zero in slot i
    """
    n = v.nvars // 2
    free = specialize_coefficients(v)
    numerator = free * LaurentPoly.monomial(list(den) + [0] * n)
    if any(e < 0 for exp, _ in numerator.items() for e in exp):
        return False
    return all(numerator.value_at_epsilon(i) > 0 for i in range(1, n + 1))


@dataclass
class ClusterPattern:
    """Seeds in discovery order, mutation edges and one record per cluster variable"""

    initial: Seed
    seeds: List[Seed] = field(default_factory=list)
    edges: List[Tuple[int, int, int]] = field(default_factory=list)
    records: Dict[Indec, ClusterRecord] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.initial.n

    @property
    def initial_matrix(self) -> np.ndarray:
        return principal_part(self.initial.matrix)

    def record_of(self, M: Indec) -> ClusterRecord:
        if M not in self.records:
            raise Undefined(f"{M} tags no cluster variable")
        return self.records[M]

    def g_matrix(self, S: Seed) -> np.ndarray:
        """Columns are the g-vectors of the variables of S in slot order"""
        return np.array(
            [self.records[M].g for M in S.objects], dtype=object
        ).T

    def den_matrix(self, S: Seed) -> np.ndarray:
        return np.array(
            [self.records[M].den for M in S.objects], dtype=object
        ).T

    def c_vectors(self) -> Set[IntVector]:
        found = set()
        for S in self.seeds:
            C = c_matrix(S)
            for j in range(self.n):
                found.add(tuple(int(x) for x in C[:, j]))
        return found

    def initial_objects(self) -> FrozenSet[Indec]:
        return self.initial.objects.key

    def sorted_records(self) -> List[ClusterRecord]:
        return [self.records[M] for M in sorted(self.records)]


def _make_record(M: Indec, v: LaurentPoly, B0: np.ndarray) -> ClusterRecord:
    return ClusterRecord(M, v, denominator_vector(v), g_vector(v, B0))


def _check_same_seed(found: Seed, known: Seed) -> None:
    """A seed reached twice must agree up to a permutation of its slots"""
    n = known.n
    perm = [known.objects.slot_of(M) for M in found.objects]
    if None in perm:
        raise InternalInvariantBroken(
            f"seeds {found.objects} and {known.objects} share a key"
        )
    perm = [slot - 1 for slot in perm]
    for j in range(n):
        for i in range(n):
            if found.matrix[i, j] != known.matrix[perm[i], perm[j]]:
                raise InternalInvariantBroken(
                    f"principal parts disagree at {found.objects}"
                )
        for r in range(n, 2 * n):
            if found.matrix[r, j] != known.matrix[r, perm[j]]:
                raise InternalInvariantBroken(
                    f"coefficient parts disagree at {found.objects}"
                )


def enumerate_pattern(
    S0: Seed, max_seeds: int = DEFAULT_MAX_SEEDS
) -> ClusterPattern:
    """Breadth first closure of S0 under mutation, deduplicated by cluster"""
    n = S0.n
    B0 = principal_part(S0.matrix)
    pattern = ClusterPattern(S0)
    index: Dict[FrozenSet, int] = {S0.key: 0}
    pattern.seeds.append(S0)
    owner: Dict[LaurentPoly, Indec] = {}
    for M, v in zip(S0.objects, S0.cluster):
        pattern.records[M] = _make_record(M, v, B0)
        owner[v] = M
    seen_edges: Set[FrozenSet[int]] = set()

    queue = deque([0])
    while queue:
        current = queue.popleft()
        S = pattern.seeds[current]
        for k in range(1, n + 1):
            mutated = mutate_seed(S, k)
            M, v = mutated.objects.summand(k), mutated.variable(k)
            if M in pattern.records and pattern.records[M].variable != v:
                raise InternalInvariantBroken(
                    f"{M} tagged by {pattern.records[M].variable} and {v}"
                )
            if v in owner and owner[v] != M:
                raise InternalInvariantBroken(
                    f"{v} tagged by {owner[v]} and {M}"
                )
            if M not in pattern.records:
                pattern.records[M] = _make_record(M, v, B0)
                owner[v] = M

            key = mutated.key
            if key in index:
                target = index[key]
                _check_same_seed(mutated, pattern.seeds[target])
            else:
                if len(pattern.seeds) >= max_seeds:
                    raise SeedCapExceeded(
                        f"more than {max_seeds} seeds at n={n}"
                    )
                target = len(pattern.seeds)
                index[key] = target
                pattern.seeds.append(mutated)
                queue.append(target)
                logger.debug(f"Seed {target}: {mutated.objects}")

            edge = frozenset((current, target))
            if edge not in seen_edges:
                seen_edges.add(edge)
                pattern.edges.append((current, target, k))

    logger.info(
        f"Cluster pattern at n={n}: {len(pattern.seeds)} seeds, {len(pattern.records)} variables"
    )
    return pattern
