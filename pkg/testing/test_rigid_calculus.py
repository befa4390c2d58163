import pytest
import math
import logging
import numpy as np
from cluster_tube import (
    BadDirection,
    Indec,
    InvalidRank,
    MaximalRigid,
    NotExchangePair,
    NotRigid,
    b_matrix,
    check_compatibility,
    distinguished_maximal_rigid,
    enum_maximal_rigids,
    enum_rigid_indecs,
    exchange_dimension,
    exchange_graph,
    exchange_triangles,
    mutate_rigid,
    quiver_arrows,
    skew_symmetrizer,
)
from cluster_tube.tube_core import TubeObject


def _rigid(*pairs, n: int = 2) -> MaximalRigid:
    return MaximalRigid.from_summands(n, [Indec(a, b, n + 1) for a, b in pairs])


def test_enum_rigid_indecs() -> None:
    assert len(enum_rigid_indecs(2)) == 6
    assert enum_rigid_indecs(1) == [Indec(1, 1, 2), Indec(2, 1, 2)]
    assert len(enum_rigid_indecs(4)) == 20
    with pytest.raises(InvalidRank):
        enum_rigid_indecs(0)


def test_enum_maximal_rigids_at_rank_two() -> None:
    found = enum_maximal_rigids(2)
    expected = set()
    for a in range(1, 4):
        expected.add(frozenset([Indec(a, 2, 3), Indec(a, 1, 3)]))
        expected.add(frozenset([Indec(a, 2, 3), Indec(a + 1, 1, 3)]))
    assert {T.key for T in found} == expected
    assert [T.key for T in enum_maximal_rigids(1)] == [
        frozenset([Indec(1, 1, 2)]),
        frozenset([Indec(2, 1, 2)]),
    ]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_maximal_rigid_census(n) -> None:
    logging.info(f"::::::Running Maximal Rigid Census At n={n}::::::")
    found = enum_maximal_rigids(n)
    assert len(found) == math.comb(2 * n, n)
    for T in found:
        assert T.summands[0].b == n
        assert sum(1 for X in T if X.b == n) == 1


def test_from_summands_pins_length_n_summand() -> None:
    T = _rigid((1, 1), (1, 2))
    assert T.summands == (Indec(1, 2, 3), Indec(1, 1, 3))
    assert T == distinguished_maximal_rigid(2)
    assert T.slot_of(Indec(1, 1, 3)) == 2
    assert T.slot_of(Indec(2, 1, 3)) is None
    assert str(T) == "(1,2);(1,1)"
    assert T.suspend().desuspend() == T


def test_invalid_maximal_rigids() -> None:
    with pytest.raises(NotRigid):
        _rigid((1, 2), (2, 2))
    with pytest.raises(NotRigid):
        _rigid((1, 2))
    with pytest.raises(NotRigid):
        _rigid((1, 3), (1, 1))
    with pytest.raises(BadDirection):
        mutate_rigid(distinguished_maximal_rigid(2), 3)


def test_mutate_rigid_examples() -> None:
    T = distinguished_maximal_rigid(2)
    mutated, data = mutate_rigid(T, 2)
    assert mutated.key == frozenset([Indec(1, 2, 3), Indec(2, 1, 3)])
    assert data.removed == Indec(1, 1, 3)
    assert data.replacement == Indec(2, 1, 3)

    mutated, data = mutate_rigid(T, 1)
    assert mutated.key == frozenset([Indec(3, 2, 3), Indec(1, 1, 3)])
    assert mutated.summands[0] == Indec(3, 2, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mutation_is_an_involution(n) -> None:
    for T in enum_maximal_rigids(n):
        for k in range(1, n + 1):
            mutated, _ = mutate_rigid(T, k)
            back, _ = mutate_rigid(mutated, k)
            assert back == T


def test_exchange_triangles_examples() -> None:
    logging.info("::::::Running Exchange Triangle Middle Terms::::::")
    p = 3
    U, U_prime = exchange_triangles(Indec(1, 1, p), Indec(2, 1, p))
    assert U.is_zero
    assert U_prime == TubeObject((Indec(1, 2, p),))

    U, U_prime = exchange_triangles(Indec(1, 2, p), Indec(3, 2, p))
    twice = TubeObject((Indec(1, 1, p), Indec(1, 1, p)))
    assert {U, U_prime} == {TubeObject(), twice}

    # triangle (3,2) -> U' -> (1,2)
    _, U_prime = exchange_triangles(Indec(3, 2, p), Indec(1, 2, p))
    assert U_prime == twice
    assert U_prime.multiplicity(Indec(1, 1, p)) == 2

    with pytest.raises(NotExchangePair):
        exchange_triangles(Indec(1, 2, p), Indec(1, 1, p))


def test_exchange_dimension() -> None:
    assert exchange_dimension(Indec(1, 1, 3), Indec(2, 1, 3)) == 1
    assert exchange_dimension(Indec(1, 2, 3), Indec(3, 2, 3)) == 2


def test_b_matrix_and_quiver() -> None:
    T = distinguished_maximal_rigid(2)
    B = b_matrix(T)
    assert B.tolist() == [[0, -1], [2, 0]]
    assert skew_symmetrizer(2).dot(B).tolist() == [[0, -2], [2, 0]]
    assert quiver_arrows(T) == {(1, 1): 1, (2, 1): 1, (1, 2): 0}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_b_matrices_are_skew_symmetrizable(n) -> None:
    D = skew_symmetrizer(n)
    for T in enum_maximal_rigids(n):
        DB = D.dot(b_matrix(T))
        assert np.array_equal(DB, -DB.T)


def test_compatibility() -> None:
    T = distinguished_maximal_rigid(2)
    _, E = mutate_rigid(T, 2)
    assert check_compatibility(Indec(3, 1, 3), E)
    _, E = mutate_rigid(T, 1)
    assert check_compatibility(Indec(1, 2, 3), E)
    with pytest.raises(NotRigid):
        check_compatibility(Indec(1, 3, 3), E)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_rigid_is_exchange_compatible(n) -> None:
    for T in enum_maximal_rigids(n):
        for k in range(1, n + 1):
            _, E = mutate_rigid(T, k)
            for M in enum_rigid_indecs(n):
                assert check_compatibility(M, E), (T, k, M)


@pytest.mark.parametrize(
    "n, nodes, edges", [(1, 2, 1), (2, 6, 6), (3, 20, 30)]
)
def test_exchange_graph(n, nodes, edges) -> None:
    graph = exchange_graph(n)
    assert graph.number_of_nodes() == nodes
    assert graph.number_of_edges() == edges
    assert all(degree == n for _, degree in graph.degree())
