"""ini options of the cluster_tube plugin, read back by the fixtures in fixtures.py"""

from _pytest.config.argparsing import Parser

from .constants import DEFAULT_MAX_SEEDS


def pytest_addoption(parser: Parser):
    # Cluster Tube Options
    ############################
    parser.addini(
        "cluster_tube_rank",
        type="string",
        default="2",
        help="rank n of the cluster tube (tube of rank n+1) used by the cluster_tube fixtures",
    )

    parser.addini(
        "cluster_tube_initial",
        type="string",
        default="",
        help='initial maximal rigid object as "(a,b);(a,b);...", empty selects (1,n);...;(1,1)',
    )

    # Cluster Pattern Options
    ############################
    parser.addini(
        "cluster_tube_max_seeds",
        type="string",
        default=str(DEFAULT_MAX_SEEDS),
        help="seed-count cap of the cluster_pattern fixture",
    )
