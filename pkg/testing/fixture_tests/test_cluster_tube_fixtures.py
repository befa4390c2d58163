from cluster_tube import (
    ClusterPattern,
    Indec,
    MaximalRigid,
    distinguished_maximal_rigid,
)
from _pytest.config import Config


def test_tube_rank_fixture(tube_rank: int, pytestconfig: Config) -> None:
    assert tube_rank == int(pytestconfig.getini("cluster_tube_rank"))
    assert tube_rank == 2


def test_maximal_rigids_fixture(maximal_rigids) -> None:
    assert len(maximal_rigids) == 6
    for T in maximal_rigids:
        assert isinstance(T, MaximalRigid)
        assert T.summands[0].b == 2


def test_initial_rigid_fixture(initial_rigid: MaximalRigid) -> None:
    assert initial_rigid == distinguished_maximal_rigid(2)
    assert initial_rigid.summands == (Indec(1, 2, 3), Indec(1, 1, 3))


def test_cluster_pattern_fixture(
    cluster_pattern: ClusterPattern, initial_rigid: MaximalRigid
) -> None:
    assert len(cluster_pattern.seeds) == 6
    assert len(cluster_pattern.records) == 6
    assert cluster_pattern.initial.objects == initial_rigid.suspend()
