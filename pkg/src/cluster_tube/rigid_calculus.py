"""
Rigid and maximal rigid objects of the cluster tube

A basic maximal rigid object of the cluster tube of rank n+1 has exactly
n indecomposable summands, precisely one of them of length n. That summand
is kept in slot 1 so the skew-symmetrizer of B_T is always diag(2,1,...,1).

Mutation replaces the summand in slot k by the unique other rigid
indecomposable completing the remaining summands; the middle terms of the
two exchange triangles are read off closed formulas in (a, b, h, i).
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from .constants import MAX_ENUM_RANK
from .errors import (
    BadDirection,
    InternalInvariantBroken,
    InvalidRank,
    NotExchangePair,
    NotRigid,
    RankMismatch,
)
from .tube_core import (
    Indec,
    TubeObject,
    ext1_dim,
    format_indecs,
    hom_cluster_dim,
    hom_object_dim,
    is_rigid_indec,
    make_object,
    shift,
    shift_inv,
    tube_rank,
)

logger = logging.getLogger("ClusterTube-Rigid")
logger.setLevel(logging.DEBUG)


@dataclass(frozen=True)
class MaximalRigid:
    """Basic maximal rigid object as an ordered list of summands, length-n summand in slot 1"""

    n: int
    summands: Tuple[Indec, ...]

    @classmethod
    def from_summands(
        cls, n: int, summands: Iterable[Indec], validate: bool = True
    ) -> "MaximalRigid":
        """Build from summands in any order; the length-n summand is moved to slot 1"""
        summands = tuple(summands)
        top = [X for X in summands if X.b == n]
        rest = [X for X in summands if X.b != n]
        T = cls(n, tuple(top + rest))
        if validate:
            T.validate()
        return T

    @property
    def p(self) -> int:
        return self.n + 1

    @property
    def key(self) -> FrozenSet[Indec]:
        return frozenset(self.summands)

    def summand(self, k: int) -> Indec:
        self._check_direction(k)
        return self.summands[k - 1]

    def complement(self, k: int) -> Tuple[Indec, ...]:
        """Summands other than the one in slot k"""
        self._check_direction(k)
        return self.summands[: k - 1] + self.summands[k:]

    def replace(self, k: int, X: Indec) -> "MaximalRigid":
        self._check_direction(k)
        summands = list(self.summands)
        summands[k - 1] = X
        return MaximalRigid(self.n, tuple(summands))

    def contains(self, X: Indec) -> bool:
        return X in self.summands

    def slot_of(self, X: Indec) -> Optional[int]:
        if X not in self.summands:
            return None
        return self.summands.index(X) + 1

    def suspend(self) -> "MaximalRigid":
        return MaximalRigid(self.n, tuple(shift(X) for X in self.summands))

    def desuspend(self) -> "MaximalRigid":
        return MaximalRigid(
            self.n, tuple(shift_inv(X) for X in self.summands)
        )

    def validate(self) -> None:
        if len(self.summands) != self.n:
            raise NotRigid(
                f"expected {self.n} summands, got {len(self.summands)}"
            )
        if len(set(self.summands)) != self.n:
            raise NotRigid(f"repeated summand in {self}")
        for X in self.summands:
            if X.p != self.p:
                raise RankMismatch(f"{X} does not live in rank {self.p}")
            if not is_rigid_indec(X):
                raise NotRigid(f"{X} is not rigid")
        for X in self.summands:
            for Y in self.summands:
                if ext1_dim(X, Y) != 0:
                    raise NotRigid(f"Ext^1({X}, {Y}) does not vanish")
        if self.summands[0].b != self.n:
            raise NotRigid(f"{self} has no summand of length {self.n}")
        for Y in enum_rigid_indecs(self.n):
            if Y not in self.summands and all(
                ext1_dim(Y, X) == 0 for X in self.summands
            ):
                raise NotRigid(f"{self} extends by {Y}")

    def _check_direction(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise BadDirection(f"direction {k} outside 1..{self.n}")

    def __iter__(self) -> Iterator[Indec]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> List[Dict[str, int]]:
        return [X.to_json() for X in self.summands]

    def __str__(self) -> str:
        return format_indecs(self.summands)


@dataclass(frozen=True)
class ExchangeData:
    """
    Exchange pair (T_k, T_k*) with the middle terms of its triangles
    U: middle of T_k* -> U -> T_k
    U_prime: middle of T_k -> U_prime -> T_k*
    """

    removed: Indec
    replacement: Indec
    U: TubeObject
    U_prime: TubeObject

    def middles(self) -> Tuple[TubeObject, TubeObject]:
        return self.U, self.U_prime


def _check_rank_parameter(n: int) -> None:
    if n < 1 or n > MAX_ENUM_RANK:
        raise InvalidRank(f"rank parameter {n} outside 1..{MAX_ENUM_RANK}")


@lru_cache(maxsize=None)
def _rigid_indecs(n: int) -> Tuple[Indec, ...]:
    p = tube_rank(n)
    return tuple(
        Indec(a, b, p) for a in range(1, p + 1) for b in range(1, n + 1)
    )


def enum_rigid_indecs(n: int) -> List[Indec]:
    _check_rank_parameter(n)
    return list(_rigid_indecs(n))


def compatibility_graph(n: int) -> nx.Graph:
    """Rigid indecomposables joined when they are Ext-orthogonal"""
    rigids = enum_rigid_indecs(n)
    graph = nx.Graph()
    graph.add_nodes_from(rigids)
    for index, X in enumerate(rigids):
        for Y in rigids[index + 1 :]:
            if ext1_dim(X, Y) == 0:
                graph.add_edge(X, Y)
    return graph


def enum_maximal_rigids(n: int) -> List[MaximalRigid]:
    """Maximal cliques of the compatibility graph, in lexicographic order"""
    graph = compatibility_graph(n)
    found = []
    for clique in nx.find_cliques(graph):
        if len(clique) != n:
            raise InternalInvariantBroken(
                f"maximal rigid with {len(clique)} summands at n={n}"
            )
        found.append(
            MaximalRigid.from_summands(n, sorted(clique), validate=False)
        )
    found.sort(key=lambda T: T.summands)
    logger.debug(f"Enumerated {len(found)} maximal rigid objects at n={n}")
    return found


def distinguished_maximal_rigid(n: int) -> MaximalRigid:
    """The maximal rigid object (1,n) + (1,n-1) + ... + (1,1)"""
    p = tube_rank(n)
    return MaximalRigid(n, tuple(Indec(1, b, p) for b in range(n, 0, -1)))


def _lower_parameters(base: Indec, other: Indec) -> Optional[Tuple[int, int]]:
    """(h, i) with other = (a+h, b-h+i), 1 <= h <= b, 1 <= i <= n-b, if any"""
    n = base.p - 1
    if base.b >= n or other.b >= n:
        return None
    h = (other.a - base.a - 1) % base.p + 1
    if h > base.b:
        return None
    i = other.b - base.b + h
    if not 1 <= i <= n - base.b:
        return None
    return h, i


def exchange_triangles(
    X: Indec, X_star: Indec
) -> Tuple[TubeObject, TubeObject]:
    """
    Middle terms (U, U_prime) of the exchange triangles
    X_star -> U -> X and X -> U_prime -> X_star
    """
    if X.p != X_star.p:
        raise RankMismatch(f"{X} and {X_star} live in different ranks")
    p, n = X.p, X.p - 1
    if X == X_star or ext1_dim(X, X_star) == 0:
        raise NotExchangePair(f"({X}, {X_star})")

    if X.b == n and X_star.b == n:
        a = X.a
        h = (X_star.a - a - 1) % p + 1
        U = TubeObject.of(make_object(a, h - 1, p), make_object(a, h - 1, p))
        U_prime = TubeObject.of(
            make_object(a + h, n - h, p), make_object(a + h, n - h, p)
        )
        return U, U_prime

    forward = _lower_parameters(X, X_star)
    backward = _lower_parameters(X_star, X)
    if forward is not None:
        base, (h, i), starts_at_base = X, forward, True
    elif backward is not None:
        base, (h, i), starts_at_base = X_star, backward, False
    else:
        raise NotExchangePair(f"({X}, {X_star})")

    a, b = base.a, base.b
    from_base = TubeObject.of(
        make_object(a, b + i, p), make_object(a + h, b - h, p)
    )
    to_base = TubeObject.of(
        make_object(a + b + 1, i - 1, p), make_object(a, h - 1, p)
    )
    if starts_at_base:
        return to_base, from_base
    return from_base, to_base


def exchange_dimension(X: Indec, X_star: Indec) -> int:
    """dim Ext^1(X, X*): 2 for a pair of length-n objects, 1 otherwise"""
    return ext1_dim(X, X_star)


def mutate_rigid(T: MaximalRigid, k: int) -> Tuple[MaximalRigid, ExchangeData]:
    removed = T.summand(k)
    rest = T.complement(k)
    candidates = [
        Y
        for Y in _rigid_indecs(T.n)
        if Y != removed
        and Y not in rest
        and all(ext1_dim(Y, Z) == 0 for Z in rest)
    ]
    if len(candidates) != 1:
        raise InternalInvariantBroken(
            f"{len(candidates)} completions of {T} without slot {k}"
        )
    replacement = candidates[0]
    U, U_prime = exchange_triangles(removed, replacement)
    for middle in (U, U_prime):
        if any(Y not in rest for Y in middle):
            raise InternalInvariantBroken(
                f"middle term {middle} of ({removed}, {replacement}) leaves add of {format_indecs(rest)}"
            )
    logger.debug(f"Mutated {T} at {k}: {removed} -> {replacement}")
    return T.replace(k, replacement), ExchangeData(
        removed, replacement, U, U_prime
    )


def skew_symmetrizer(n: int) -> np.ndarray:
    D = np.zeros((n, n), dtype=object)
    for i in range(n):
        D[i, i] = 2 if i == 0 else 1
    return D


def b_matrix(T: MaximalRigid) -> np.ndarray:
    """b_ij = mult. of T_i in U_{T_j} - mult. of T_i in U'_{T_j}"""
    B = np.zeros((T.n, T.n), dtype=object)
    for j in range(1, T.n + 1):
        _, data = mutate_rigid(T, j)
        for i, X in enumerate(T.summands):
            B[i, j - 1] = data.U.multiplicity(X) - data.U_prime.multiplicity(X)
    return B


def is_skew_symmetrizable_by(B: np.ndarray, D: np.ndarray) -> bool:
    product = D.dot(B)
    return bool(np.array_equal(product, -product.T))


def quiver_arrows(T: MaximalRigid) -> Dict[Tuple[int, int], int]:
    """Arrow counts i -> j of the quiver of End(T); the loop sits at vertex 1"""
    B = b_matrix(T)
    arrows: Dict[Tuple[int, int], int] = {(1, 1): 1}
    for i in range(T.n):
        for j in range(T.n):
            if i == j:
                continue
            if j == 0:
                if B[i, 0] % 2:
                    raise InternalInvariantBroken(
                        f"odd entry b_{i + 1}1 = {B[i, 0]} for {T}"
                    )
                arrows[(i + 1, 1)] = max(B[i, 0] // 2, 0)
            else:
                arrows[(i + 1, j + 1)] = max(B[i, j], 0)
    return arrows


def compatibility_excess(M: Indec, E: ExchangeData) -> int:
    """dim Hom(M, X) + dim Hom(M, X*) - max(dim Hom(M, U), dim Hom(M, U'))"""
    if not is_rigid_indec(M):
        raise NotRigid(f"{M} is not rigid")
    total = hom_cluster_dim(M, E.removed) + hom_cluster_dim(M, E.replacement)
    return total - max(hom_object_dim(M, E.U), hom_object_dim(M, E.U_prime))


def check_compatibility(M: Indec, E: ExchangeData) -> bool:
    if not is_rigid_indec(M):
        raise NotRigid(f"{M} is not rigid")
    if shift(M) in (E.removed, E.replacement):
        return True
    return compatibility_excess(M, E) == 0


@lru_cache(maxsize=None)
def exchange_graph(n: int) -> nx.Graph:
    """Maximal rigid objects (keyed by summand set) joined by single mutations"""
    _check_rank_parameter(n)
    start = distinguished_maximal_rigid(n)
    graph = nx.Graph()
    graph.add_node(start.key, rigid=start)
    queue = deque([start])
    while queue:
        T = queue.popleft()
        for k in range(1, n + 1):
            neighbour, _ = mutate_rigid(T, k)
            if neighbour.key not in graph:
                graph.add_node(neighbour.key, rigid=neighbour)
                queue.append(neighbour)
            graph.add_edge(T.key, neighbour.key)
    logger.debug(
        f"Exchange graph at n={n}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges"
    )
    return graph
