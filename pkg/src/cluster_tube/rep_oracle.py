"""
Brute-force Hom oracle on explicit representations

Realizes an indecomposable (a, b) as a nilpotent representation of the
opposite cyclic quiver (arrows v -> v-1) with basis e_1..e_b, e_j at
vertex a+j-1, and computes dim Hom by solving the intertwiner system
phi_{v-1} . alpha^X_v = alpha^Y_v . phi_v over the rationals.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import QQ, ImmutableMatrix, eye
from sympy.polys.matrices import DomainMatrix

from .tube_core import Indec, _check_same_rank

logger = logging.getLogger("ClusterTube-Oracle")
logger.setLevel(logging.DEBUG)


@dataclass(frozen=True)
class NilpotentRep:
    """Representation of the opposite cyclic quiver; maps[v-1] sends vertex v to vertex v-1"""

    p: int
    dims: Tuple[int, ...]
    maps: Tuple[ImmutableMatrix, ...]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def arrow_target(self, v: int) -> int:
        return (v - 2) % self.p + 1

    def cycle_composite(self, v: int) -> ImmutableMatrix:
        """Composite of the p arrow maps starting and ending at vertex v"""
        composite = eye(self.dims[v - 1])
        vertex = v
        for _ in range(self.p):
            composite = self.maps[vertex - 1] * composite
            vertex = self.arrow_target(vertex)
        return ImmutableMatrix(composite)

    def is_nilpotent(self) -> bool:
        for v in range(1, self.p + 1):
            if self.dims[v - 1] == 0:
                continue
            power = self.cycle_composite(v) ** self.dims[v - 1]
            if not power.is_zero_matrix:
                return False
        return True


def _vertex_bases(X: Indec) -> Dict[int, List[int]]:
    """Basis indices j of e_j grouped by the vertex they sit at"""
    bases: Dict[int, List[int]] = {v: [] for v in range(1, X.p + 1)}
    for j in range(1, X.b + 1):
        bases[(X.a + j - 2) % X.p + 1].append(j)
    return bases


def build_rep(X: Indec) -> NilpotentRep:
    bases = _vertex_bases(X)
    dims = tuple(len(bases[v]) for v in range(1, X.p + 1))
    maps = []
    for v in range(1, X.p + 1):
        target = (v - 2) % X.p + 1
        rows, cols = len(bases[target]), len(bases[v])
        entries = [0] * (rows * cols)
        for c, j in enumerate(bases[v]):
            if j > 1:
                r = bases[target].index(j - 1)
                entries[r * cols + c] = 1
        maps.append(ImmutableMatrix(rows, cols, entries))
    return NilpotentRep(X.p, dims, tuple(maps))


def hom_dim_oracle(X: Indec, Y: Indec) -> int:
    """Dimension of the space of representation maps build_rep(X) -> build_rep(Y)"""
    _check_same_rank(X, Y)
    rep_x, rep_y = build_rep(X), build_rep(Y)

    # unknowns: entry (r, c) of phi_v, shape dims_y[v] x dims_x[v]
    offsets: Dict[int, int] = {}
    n_unknowns = 0
    for v in range(1, X.p + 1):
        offsets[v] = n_unknowns
        n_unknowns += rep_y.dims[v - 1] * rep_x.dims[v - 1]
    if n_unknowns == 0:
        return 0

    def unknown(v: int, r: int, c: int) -> int:
        return offsets[v] + r * rep_x.dims[v - 1] + c

    rows: List[List[int]] = []
    for v in range(1, X.p + 1):
        t = rep_x.arrow_target(v)
        alpha_x, alpha_y = rep_x.maps[v - 1], rep_y.maps[v - 1]
        for r in range(rep_y.dims[t - 1]):
            for c in range(rep_x.dims[v - 1]):
                row = [0] * n_unknowns
                for s in range(rep_x.dims[t - 1]):
                    row[unknown(t, r, s)] += int(alpha_x[s, c])
                for s in range(rep_y.dims[v - 1]):
                    row[unknown(v, s, c)] -= int(alpha_y[r, s])
                if any(row):
                    rows.append(row)

    if not rows:
        return n_unknowns
    system = DomainMatrix(
        [[QQ(entry) for entry in row] for row in rows],
        (len(rows), n_unknowns),
        QQ,
    )
    dimension = n_unknowns - system.rank()
    logger.debug(f"Oracle Hom({X}, {Y}) = {dimension}")
    return dimension
