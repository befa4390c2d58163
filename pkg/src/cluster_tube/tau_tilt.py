"""
Module side of a maximal rigid object T: Gamma = End_C(T)

F = Hom_C(T, -) sends a rigid indecomposable M outside add Sigma T to a
tau-rigid Gamma-module. Its dimension vector has entries dim Hom_C(T_i, M);
the rank vector halves the entry of the length-n summand, whose
endomorphism ring is K[x]/(x^2).

Indices with respect to T are computed by a breadth-first walk from T
to the nearest maximal rigid object containing X and pulling the basis
vector of X back through the piecewise linear maps of the exchange triangles.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import Matrix

from .errors import InShift, InternalInvariantBroken, NotRigid
from .rigid_calculus import (
    MaximalRigid,
    enum_rigid_indecs,
    mutate_rigid,
    skew_symmetrizer,
)
from .tube_core import Indec, hom_cluster_dim, is_rigid_indec, shift

logger = logging.getLogger("ClusterTube-Tilt")
logger.setLevel(logging.DEBUG)

IntVector = Tuple[int, ...]


def _check_rigid(M: Indec) -> None:
    if not is_rigid_indec(M):
        raise NotRigid(f"{M} is not rigid")


def _shifted_slot(T: MaximalRigid, M: Indec) -> int:
    """1-based slot i with M = Sigma T_i, 0 when there is none"""
    for i, X in enumerate(T.summands, start=1):
        if shift(X) == M:
            return i
    return 0


def f_dim_vector(T: MaximalRigid, M: Indec) -> IntVector:
    """Dimension vector of F(M): entry i is dim Hom_C(T_i, M)"""
    _check_rigid(M)
    return tuple(hom_cluster_dim(X, M) for X in T.summands)


def rank_vector(T: MaximalRigid, M: Indec) -> IntVector:
    if _shifted_slot(T, M):
        raise InShift(f"{M} lies in add Sigma T for T = {T}")
    dims = f_dim_vector(T, M)
    ranks = []
    for X, d in zip(T.summands, dims):
        if X.b == T.n:
            if d % 2:
                raise InternalInvariantBroken(
                    f"odd dimension {d} at the loop vertex for {M}"
                )
            d //= 2
        ranks.append(d)
    return tuple(ranks)


def _mutation_path(T: MaximalRigid, X: Indec) -> List[MaximalRigid]:
    """Maximal rigid objects from T to the nearest one containing X

    Breadth-first over mutations, stopping at the first level that holds X.
    """
    parents: Dict[FrozenSet[Indec], Optional[MaximalRigid]] = {T.key: None}
    level = [T]
    while level:
        found = [t for t in level if t.contains(X)]
        if found:
            chain = [min(found, key=lambda t: sorted(t.key))]
            while parents[chain[-1].key] is not None:
                chain.append(parents[chain[-1].key])
            return chain[::-1]
        following = []
        for t in level:
            for k in range(1, T.n + 1):
                neighbour, _ = mutate_rigid(t, k)
                if neighbour.key not in parents:
                    parents[neighbour.key] = t
                    following.append(neighbour)
        level = following
    raise InternalInvariantBroken(f"{X} lies in no maximal rigid object")


def _pull_back(t: MaximalRigid, k: int, g: Sequence[int]) -> IntVector:
    """Index with respect to mu_k(t) from the index with respect to t"""
    _, data = mutate_rigid(t, k)
    g_k = g[k - 1]
    middle = data.U if g_k >= 0 else data.U_prime
    moved = []
    for j, Y in enumerate(t.summands):
        if j == k - 1:
            moved.append(-g_k)
        else:
            moved.append(g[j] + g_k * middle.multiplicity(Y))
    return tuple(moved)


def index(T: MaximalRigid, X: Indec) -> IntVector:
    """ind_T(X) in the basis [T_1], ..., [T_n]"""
    _check_rigid(X)
    n = T.n
    slot = T.slot_of(X)
    if slot is not None:
        return tuple(int(i == slot) for i in range(1, n + 1))
    slot = _shifted_slot(T, X)
    if slot:
        return tuple(-int(i == slot) for i in range(1, n + 1))

    chain = _mutation_path(T, X)
    last = chain[-1]
    g = tuple(int(i == last.slot_of(X)) for i in range(1, n + 1))
    for r in range(len(chain) - 1, 0, -1):
        later, earlier = chain[r], chain[r - 1]
        k = next(
            i
            for i in range(1, n + 1)
            if later.summand(i) != earlier.summand(i)
        )
        g = _pull_back(later, k, g)
    logger.debug(f"ind_{T}({X}) = {g}")
    return g


def _columns(vectors: Sequence[Sequence[int]]) -> np.ndarray:
    return np.array([list(v) for v in vectors], dtype=object).T


def g_c_d_matrices(
    T: MaximalRigid, T_t: MaximalRigid
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    G: columns ind_T(T_t,j)
    C: inverse of the transpose of G
    D: columns f_dim_vector(T, T_t,j)
    """
    G = _columns([index(T, X) for X in T_t.summands])
    G_sym = Matrix(G.tolist())
    det = G_sym.det()
    if det not in (1, -1):
        raise InternalInvariantBroken(
            f"G-matrix of {T_t} has determinant {det}"
        )
    C = np.array(G_sym.T.inv().tolist(), dtype=object)
    C = np.vectorize(int, otypes=[object])(C)
    D = _columns([f_dim_vector(T, X) for X in T_t.summands])
    return G, C, D


def cartan_via_duality(T: MaximalRigid, T_t: MaximalRigid) -> np.ndarray:
    """G^tr D of a tau-tilting configuration T_t, the Cartan matrix of End F(T_t)"""
    for X in T_t.summands:
        if _shifted_slot(T, X):
            raise InShift(f"{X} lies in add Sigma T for T = {T}")
    G, _, D = g_c_d_matrices(T, T_t)
    cartan = G.T.dot(D)
    if Matrix(cartan.tolist()).det() == 0:
        raise InternalInvariantBroken(f"degenerate Cartan matrix for {T_t}")
    return cartan


def d_matrix(T: MaximalRigid, objects: Sequence[Indec]) -> np.ndarray:
    """Columns are the denominator vectors predicted for the variables tagged by objects"""
    columns = []
    for M in objects:
        slot = _shifted_slot(T, M)
        if slot:
            columns.append([-int(i == slot) for i in range(1, T.n + 1)])
        else:
            columns.append(rank_vector(T, M))
    return _columns(columns)


def positive_c_vectors(T: MaximalRigid) -> Set[IntVector]:
    """Rank vectors of the indecomposable tau-rigid Gamma-modules"""
    return {
        rank_vector(T, M)
        for M in enum_rigid_indecs(T.n)
        if not _shifted_slot(T, M)
    }


def rank_vector_table(T: MaximalRigid) -> Dict[Indec, IntVector]:
    return {
        M: rank_vector(T, M)
        for M in enum_rigid_indecs(T.n)
        if not _shifted_slot(T, M)
    }


def conjugate_by_symmetrizer(C_module: np.ndarray) -> np.ndarray:
    """D^-1 C D with D = diag(2, 1, ..., 1)"""
    n = C_module.shape[0]
    D = skew_symmetrizer(n)
    conjugated = np.zeros((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            scaled = int(C_module[i, j]) * D[j, j]
            if scaled % D[i, i]:
                raise InternalInvariantBroken(
                    f"entry ({i + 1},{j + 1}) of {C_module.tolist()} is not divisible by {D[i, i]}"
                )
            conjugated[i, j] = scaled // D[i, i]
    return conjugated
