import logging
from typing import List

import pytest
from _pytest.config import Config

from .cluster_engine import ClusterPattern, enumerate_pattern, initial_seed
from .constants import MAX_PATTERN_RANK
from .errors import ClusterTubeError, ConfigurationError
from .rigid_calculus import (
    MaximalRigid,
    distinguished_maximal_rigid,
    enum_maximal_rigids,
)
from .tube_core import parse_indecs


def _read_int(pytestconfig: Config, name: str) -> int:
    raw = pytestconfig.getini(name)
    if not raw:
        raise ConfigurationError(
            f"Undefined value for {name}. Please provide it in the ini file"
        )
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} = {raw!r} is not an integer")


# Fixtures for the cluster tube
#########################################################
@pytest.fixture(scope="session")
def tube_rank(pytestconfig: Config) -> int:
    """Rank n configured through cluster_tube_rank"""
    n = _read_int(pytestconfig, "cluster_tube_rank")
    if not 1 <= n <= MAX_PATTERN_RANK:
        raise ConfigurationError(
            f"cluster_tube_rank must lie in 1..{MAX_PATTERN_RANK}, got {n}"
        )
    return n


@pytest.fixture(scope="session")
def maximal_rigids(tube_rank: int) -> List[MaximalRigid]:
    """All basic maximal rigid objects at the configured rank"""
    return enum_maximal_rigids(tube_rank)


@pytest.fixture(scope="session")
def initial_rigid(tube_rank: int, pytestconfig: Config) -> MaximalRigid:
    """Maximal rigid object from cluster_tube_initial, default (1,n);...;(1,1)"""
    text = pytestconfig.getini("cluster_tube_initial")
    if not text:
        return distinguished_maximal_rigid(tube_rank)
    try:
        return MaximalRigid.from_summands(
            tube_rank, parse_indecs(text, tube_rank + 1)
        )
    except ClusterTubeError as e:
        raise ConfigurationError(f"cluster_tube_initial = {text!r}: {e}")


# Fixtures for the cluster pattern
#########################################################
@pytest.fixture(scope="session")
def cluster_pattern(
    initial_rigid: MaximalRigid, pytestconfig: Config
) -> ClusterPattern:
    """Cluster pattern with principal coefficients rooted at initial_rigid"""
    max_seeds = _read_int(pytestconfig, "cluster_tube_max_seeds")
    logging.info(
        f"Enumerating the cluster pattern of {initial_rigid}"
        f" (cap {max_seeds} seeds)"
    )
    return enumerate_pattern(initial_seed(initial_rigid), max_seeds)
