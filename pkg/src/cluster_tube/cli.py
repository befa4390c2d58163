"""
ctube: command line front door of cluster_tube

Exit codes: 0 when everything passed, 1 when a verification suite found a
counterexample, 2 on usage errors (bad arguments, invalid objects, ranks
outside the supported envelope).
"""

import argparse
import logging
import sys
from typing import Callable, List, Optional

from .__about__ import __version__
from .cluster_engine import enumerate_pattern, initial_seed, matrix_rows
from .constants import (
    DEFAULT_MAX_SEEDS,
    LOG_DATE_FORMAT,
    LOG_FORMAT,
    MAX_ENUM_RANK,
    MAX_PATTERN_RANK,
)
from .errors import ClusterTubeError, InvalidRank, UsageError
from .export import (
    dumps,
    export_exchange_graph,
    pattern_to_csv,
    pattern_to_json,
    worked_example,
)
from .rigid_calculus import (
    MaximalRigid,
    b_matrix,
    distinguished_maximal_rigid,
    enum_maximal_rigids,
    enum_rigid_indecs,
    mutate_rigid,
    quiver_arrows,
)
from .tau_tilt import g_c_d_matrices, index, positive_c_vectors, rank_vector
from .tube_core import parse_indec, parse_indecs, tube_rank
from .verification import Suite, run_suite

logger = logging.getLogger("ClusterTube-CLI")
logger.setLevel(logging.DEBUG)


def _configure_logging(level: str) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    logging.basicConfig(level=level, handlers=[handler])


def _rank(args: argparse.Namespace, limit: int) -> int:
    if not 1 <= args.n <= limit:
        raise InvalidRank(
            f"{args.subcommand} supports 1 <= n <= {limit}, got {args.n}"
        )
    return args.n


def _rigid(args: argparse.Namespace, text: Optional[str]) -> MaximalRigid:
    if not text:
        return distinguished_maximal_rigid(args.n)
    summands = parse_indecs(text, tube_rank(args.n))
    return MaximalRigid.from_summands(args.n, summands)


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)


def _rows_text(rows: List[List[int]]) -> str:
    return "".join(" ".join(f"{x:>3}" for x in row) + "\n" for row in rows)


### Subcommands ###
def _enum_rigids(args: argparse.Namespace) -> int:
    rigids = enum_rigid_indecs(_rank(args, MAX_ENUM_RANK))
    if args.json:
        _emit(args, dumps([X.to_json() for X in rigids]))
    else:
        _emit(args, "".join(f"{X}\n" for X in rigids))
    return 0


def _enum_maximal_rigids(args: argparse.Namespace) -> int:
    found = enum_maximal_rigids(_rank(args, MAX_ENUM_RANK))
    if args.json:
        _emit(args, dumps([T.to_json() for T in found]))
    else:
        _emit(args, "".join(f"{T}\n" for T in found))
    return 0


def _mutate(args: argparse.Namespace) -> int:
    _rank(args, MAX_ENUM_RANK)
    T = _rigid(args, args.t)
    mutated, data = mutate_rigid(T, args.k)
    if args.json:
        _emit(
            args,
            dumps(
                {
                    "mutated": mutated.to_json(),
                    "removed": data.removed.to_json(),
                    "replacement": data.replacement.to_json(),
                    "U": data.U.to_json(),
                    "U_prime": data.U_prime.to_json(),
                }
            ),
        )
    else:
        _emit(
            args,
            f"{mutated}\n"
            f"exchange {data.removed} <-> {data.replacement}\n"
            f"U  = {data.U}\n"
            f"U' = {data.U_prime}\n",
        )
    return 0


def _b_matrix(args: argparse.Namespace) -> int:
    _rank(args, MAX_ENUM_RANK)
    rows = matrix_rows(b_matrix(_rigid(args, args.t)))
    _emit(args, dumps(rows) if args.json else _rows_text(rows))
    return 0


def _quiver(args: argparse.Namespace) -> int:
    _rank(args, MAX_ENUM_RANK)
    arrows = quiver_arrows(_rigid(args, args.t))
    if args.json:
        _emit(args, dumps({f"{i}->{j}": c for (i, j), c in arrows.items()}))
    else:
        _emit(
            args,
            "".join(
                f"{i} -> {j}: {c}\n" for (i, j), c in sorted(arrows.items())
            ),
        )
    return 0


def _cluster_pattern(args: argparse.Namespace) -> int:
    _rank(args, MAX_PATTERN_RANK)
    S0 = initial_seed(_rigid(args, args.t))
    pattern = enumerate_pattern(S0, args.max_seeds)
    if args.csv:
        _emit(args, pattern_to_csv(pattern))
    else:
        _emit(args, dumps(pattern_to_json(pattern, not args.no_coefficients)))
    return 0


def _rank_vector(args: argparse.Namespace) -> int:
    _rank(args, MAX_ENUM_RANK)
    T = _rigid(args, args.t)
    vector = rank_vector(T, parse_indec(args.m, T.p))
    _emit(args, dumps(list(vector)) if args.json else f"{vector}\n")
    return 0


def _index(args: argparse.Namespace) -> int:
    _rank(args, MAX_PATTERN_RANK)
    T = _rigid(args, args.t)
    vector = index(T, parse_indec(args.x, T.p))
    _emit(args, dumps(list(vector)) if args.json else f"{vector}\n")
    return 0


def _c_vectors(args: argparse.Namespace) -> int:
    _rank(args, MAX_ENUM_RANK)
    vectors = sorted(positive_c_vectors(_rigid(args, args.t)))
    if args.json:
        _emit(args, dumps([list(c) for c in vectors]))
    else:
        _emit(args, "".join(f"{c}\n" for c in vectors))
    return 0


def _gcd(args: argparse.Namespace) -> int:
    _rank(args, MAX_PATTERN_RANK)
    T = _rigid(args, args.t)
    T_t = _rigid(args, args.tt) if args.tt else T
    G, C, D = g_c_d_matrices(T, T_t)
    matrices = {"G": matrix_rows(G), "C": matrix_rows(C), "D": matrix_rows(D)}
    if args.json:
        _emit(args, dumps(matrices))
    else:
        _emit(
            args,
            "".join(
                f"{name}:\n{_rows_text(rows)}" for name, rows in matrices.items()
            ),
        )
    return 0


def _suite(args: argparse.Namespace) -> int:
    report = run_suite(args.name, args.n)
    if args.json:
        _emit(args, dumps(report.to_json()))
    else:
        _emit(args, "\n".join(report.summary_lines()) + "\n")
    return 0 if report.passed else 1


def _exchange_graph(args: argparse.Namespace) -> int:
    _rank(args, MAX_PATTERN_RANK)
    if args.json and args.dot:
        raise UsageError("--json and --dot exclude each other")
    fmt = "dot" if args.dot or not args.json else "json"
    T = _rigid(args, args.t)
    _emit(args, export_exchange_graph(T, fmt, args.max_seeds))
    return 0


def _worked_example(args: argparse.Namespace) -> int:
    _emit(args, dumps(worked_example()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctube",
        description="Cluster tubes and cluster algebras of type C",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="level of the log messages written to stderr",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def command(
        name: str,
        handler: Callable[[argparse.Namespace], int],
        summary: str,
        rigid: bool = True,
        ranked: bool = True,
    ) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=summary)
        sub.set_defaults(handler=handler)
        if ranked:
            sub.add_argument("--n", type=int, required=True, help="rank n")
        if rigid:
            sub.add_argument(
                "--t",
                default=None,
                help='maximal rigid object "(a,b);(a,b);...",'
                " default (1,n);...;(1,1)",
            )
        sub.add_argument("--json", action="store_true", help="write JSON")
        sub.add_argument(
            "--out", default=None, help="write to FILE instead of stdout"
        )
        return sub

    command(
        "enum-rigids",
        _enum_rigids,
        "list the rigid indecomposables",
        rigid=False,
    )
    command(
        "enum-maximal-rigids",
        _enum_maximal_rigids,
        "list the basic maximal rigid objects",
        rigid=False,
    )
    sub = command("mutate", _mutate, "mutate a maximal rigid object")
    sub.add_argument("--k", type=int, required=True, help="direction 1..n")
    command("b-matrix", _b_matrix, "exchange matrix B_T")
    command("quiver", _quiver, "arrow counts of the quiver of End(T)")

    sub = command(
        "cluster-pattern",
        _cluster_pattern,
        "cluster variables of the pattern rooted at T",
    )
    sub.add_argument(
        "--csv", action="store_true", help="write (object, den, g) as CSV"
    )
    sub.add_argument(
        "--no-coefficients",
        action="store_true",
        help="specialize the coefficient variables to 1",
    )
    sub.add_argument("--max-seeds", type=int, default=DEFAULT_MAX_SEEDS)

    sub = command("rank-vector", _rank_vector, "rank vector of F(M)")
    sub.add_argument("--m", required=True, help='rigid indecomposable "(a,b)"')
    sub = command("index", _index, "index of X with respect to T")
    sub.add_argument("--x", required=True, help='rigid indecomposable "(a,b)"')
    command(
        "c-vectors", _c_vectors, "positive c-vectors as tau-rigid rank vectors"
    )
    sub = command(
        "gcd", _gcd, "G-, C- and D-matrices of T_t with respect to T"
    )
    sub.add_argument(
        "--tt", default=None, help="second maximal rigid object (default T)"
    )

    sub = command("suite", _suite, "run a verification suite", rigid=False)
    sub.add_argument("name", choices=Suite.list())

    sub = command(
        "exchange-graph",
        _exchange_graph,
        "exchange graph of the pattern rooted at T",
    )
    sub.add_argument("--dot", action="store_true", help="write DOT (default)")
    sub.add_argument("--max-seeds", type=int, default=DEFAULT_MAX_SEEDS)

    command(
        "worked-example",
        _worked_example,
        "the n = 2 worked example as JSON",
        rigid=False,
        ranked=False,
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return args.handler(args)
    except ClusterTubeError as e:
        sys.stderr.write(f"ctube {args.subcommand}: {e}\n")
        return 2
