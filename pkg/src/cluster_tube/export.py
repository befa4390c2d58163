"""
Serialization of patterns, exchange graphs and the worked n = 2 example

JSON is written with sorted keys on a single line, CSV through the csv
module, DOT as a plain undirected graph. Every writer orders its output
deterministically and terminates lines with LF.
"""

import csv
import io
import json
from typing import Any, Dict, List

import networkx as nx

from .cluster_engine import (
    ClusterPattern,
    enumerate_pattern,
    initial_seed,
    matrix_rows,
    mutate_seed,
    principal_part,
    specialize_coefficients,
)
from .constants import DEFAULT_MAX_SEEDS
from .errors import InternalInvariantBroken, UsageError
from .rigid_calculus import MaximalRigid
from .tube_core import Indec, format_indecs


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True) + "\n"


def pattern_to_json(
    pattern: ClusterPattern, coefficients: bool = True
) -> Dict[str, Any]:
    records = []
    for record in pattern.sorted_records():
        entry = record.to_json()
        if not coefficients:
            entry["terms"] = specialize_coefficients(record.variable).to_json()
        records.append(entry)
    return {
        "n": pattern.n,
        "initial": pattern.initial.objects.desuspend().to_json(),
        "b_matrix": matrix_rows(pattern.initial_matrix),
        "clusters": len(pattern.seeds),
        "coefficients": coefficients,
        "records": records,
    }


def pattern_to_csv(pattern: ClusterPattern) -> str:
    """One row per cluster variable: object, den, g"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["object", "den", "g"])
    for record in pattern.sorted_records():
        writer.writerow(
            [
                str(record.object),
                " ".join(str(d) for d in record.den),
                " ".join(str(g) for g in record.g),
            ]
        )
    return buffer.getvalue()


def pattern_graph(pattern: ClusterPattern) -> nx.Graph:
    """Seeds as nodes labelled by their tags, edges labelled by direction"""
    graph = nx.Graph()
    for position, S in enumerate(pattern.seeds):
        graph.add_node(position, label=format_indecs(sorted(S.objects)))
    for source, target, k in pattern.edges:
        graph.add_edge(source, target, k=k)
    if any(degree != pattern.n for _, degree in graph.degree()):
        raise InternalInvariantBroken(
            f"exchange graph at n={pattern.n} is not {pattern.n}-regular"
        )
    return graph


def _exchange_graph_payload(graph: nx.Graph) -> Dict[str, List]:
    nodes = [
        {"id": node, "objects": graph.nodes[node]["label"]}
        for node in sorted(graph.nodes)
    ]
    edges = sorted(
        (
            {"source": min(u, v), "target": max(u, v), "k": data["k"]}
            for u, v, data in graph.edges(data=True)
        ),
        key=lambda edge: (edge["source"], edge["target"]),
    )
    return {"nodes": nodes, "edges": edges}


def export_exchange_graph(
    T: MaximalRigid, fmt: str = "dot", max_seeds: int = DEFAULT_MAX_SEEDS
) -> str:
    """Exchange graph of the cluster pattern rooted at T, as dot or json text"""
    pattern = enumerate_pattern(initial_seed(T), max_seeds)
    payload = _exchange_graph_payload(pattern_graph(pattern))
    if fmt == "json":
        payload["n"] = T.n
        return dumps(payload)
    if fmt != "dot":
        raise UsageError(f"unknown graph format {fmt!r}, expected dot or json")
    lines = [f"graph exchange_n{T.n} {{"]
    for node in payload["nodes"]:
        lines.append(f'  {node["id"]} [label="{node["objects"]}"];')
    for edge in payload["edges"]:
        lines.append(
            f'  {edge["source"]} -- {edge["target"]} [label="{edge["k"]}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def worked_example() -> Dict[str, Any]:
    """Initial seed of (1,2);(1,1) at n = 2 with its two neighbours"""
    n, p = 2, 3
    T = MaximalRigid.from_summands(n, [Indec(1, 2, p), Indec(1, 1, p)])
    S0 = initial_seed(T)
    B0 = principal_part(S0.matrix)
    payload: Dict[str, Any] = {
        "n": n,
        "initial": T.to_json(),
        "b_matrix": matrix_rows(B0),
    }
    pattern = enumerate_pattern(S0)
    for k in range(1, n + 1):
        M = mutate_seed(S0, k).objects.summand(k)
        payload[f"mu{k}"] = pattern.record_of(M).to_json()
    return payload
