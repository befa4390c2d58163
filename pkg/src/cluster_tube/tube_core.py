"""
Combinatorial model of the tube of rank p and of its cluster tube

An indecomposable (a, b) is the uniserial nilpotent representation with
socle at vertex a and length b; its composition factors sit at the
vertices a, a+1, ..., a+b-1 (read modulo p). The AR-translate moves the
socle one step back, and in the cluster tube the shift agrees with it.

Morphism spaces are counted through the Hom-hammock: a nonzero map X -> Y
factors as a quotient of X that is also a submodule of Y, one per
admissible quotient.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .errors import (
    InvalidLength,
    InvalidRank,
    RankMismatch,
    UsageError,
    WingUndefined,
)

logger = logging.getLogger("ClusterTube-Core")
logger.setLevel(logging.DEBUG)

_PAIR_PATTERN = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


@dataclass(frozen=True, order=True)
class Indec:
    """Indecomposable object (a, b) of the tube of rank p, socle index kept in 1..p"""

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidRank(f"tube rank must be at least 2, got {self.p}")
        if self.b < 1:
            raise InvalidLength(
                f"length must be positive, got ({self.a},{self.b})"
            )
        object.__setattr__(self, "a", (self.a - 1) % self.p + 1)

    @property
    def n(self) -> int:
        return self.p - 1

    def to_json(self) -> Dict[str, int]:
        return {"a": self.a, "b": self.b}

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class TubeObject:
    """Finite direct sum of indecomposables; the empty sum is the zero object"""

    summands: Tuple[Indec, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, *parts: Union[Indec, "TubeObject"]) -> "TubeObject":
        """Direct sum of indecomposables and objects (zero parts are absorbed)"""
        summands: List[Indec] = []
        for part in parts:
            if isinstance(part, TubeObject):
                summands.extend(part.summands)
            else:
                summands.append(part)
        return cls(tuple(summands))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def multiplicity(self, X: Indec) -> int:
        return self.summands.count(X)

    def __add__(self, other: "TubeObject") -> "TubeObject":
        return TubeObject.of(self, other)

    def __iter__(self) -> Iterator[Indec]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> List[Dict[str, int]]:
        return [X.to_json() for X in self.summands]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(str(X) for X in self.summands)


ZERO_OBJECT = TubeObject()


def tube_rank(n: int) -> int:
    """Rank p = n + 1 of the tube attached to rank parameter n"""
    if n < 1:
        raise InvalidRank(f"rank parameter n must be at least 1, got {n}")
    return n + 1


def normalize(a: int, b: int, p: int) -> Indec:
    return Indec(a, b, p)


def make_object(a: int, b: int, p: int) -> TubeObject:
    """Object (a, b) as a direct sum; length 0 gives the zero object"""
    if b == 0:
        return ZERO_OBJECT
    return TubeObject((Indec(a, b, p),))


def tau(X: Indec) -> Indec:
    return Indec(X.a - 1, X.b, X.p)


def tau_inv(X: Indec) -> Indec:
    return Indec(X.a + 1, X.b, X.p)


# the suspension of the cluster tube is the AR-translate
shift = tau
shift_inv = tau_inv


def _check_same_rank(X: Indec, Y: Indec) -> None:
    if X.p != Y.p:
        raise RankMismatch(f"{X} lives in rank {X.p}, {Y} in rank {Y.p}")


@lru_cache(maxsize=None)
def hom_tube_dim(X: Indec, Y: Indec) -> int:
    """dim Hom_T(X, Y): quotients (X.a+k, X.b-k) of X that embed into Y"""
    _check_same_rank(X, Y)
    return sum(
        1
        for k in range(X.b)
        if (X.a + k - Y.a) % X.p == 0 and X.b - k <= Y.b
    )


@lru_cache(maxsize=None)
def hom_cluster_dim(X: Indec, Y: Indec) -> int:
    """dim Hom_C(X, Y) = dim Hom_T(X, Y) + dim Hom_T(Y, tau^2 X)"""
    _check_same_rank(X, Y)
    return hom_tube_dim(X, Y) + hom_tube_dim(Y, tau(tau(X)))


def ext1_dim(X: Indec, Y: Indec) -> int:
    return hom_cluster_dim(X, tau(Y))


def hom_object_dim(
    X: Union[Indec, TubeObject], Y: Union[Indec, TubeObject]
) -> int:
    """dim Hom_C between direct sums, additive in both arguments"""
    sources = X.summands if isinstance(X, TubeObject) else (X,)
    targets = Y.summands if isinstance(Y, TubeObject) else (Y,)
    return sum(hom_cluster_dim(S, R) for S in sources for R in targets)


def in_wing(M: Indec, W_top: Indec) -> bool:
    """True iff M sits in the triangle of the AR-quiver below W_top"""
    _check_same_rank(M, W_top)
    if W_top.b >= W_top.p:
        raise WingUndefined(f"wing of {W_top} needs length below {W_top.p}")
    j = (M.a - W_top.a) % M.p
    return j <= W_top.b - 1 and M.b <= W_top.b - j


def wing(W_top: Indec) -> List[Indec]:
    if W_top.b >= W_top.p:
        raise WingUndefined(f"wing of {W_top} needs length below {W_top.p}")
    return sorted(
        Indec(W_top.a + j, d, W_top.p)
        for j in range(W_top.b)
        for d in range(1, W_top.b - j + 1)
    )


def is_rigid_indec(X: Indec) -> bool:
    return X.b <= X.p - 1


def parse_indec(text: str, p: int) -> Indec:
    """Parse "(a,b)" into an indecomposable of rank p"""
    match = _PAIR_PATTERN.match(text.strip())
    if match is None:
        raise UsageError(f"cannot read an indecomposable from {text!r}")
    return Indec(int(match.group(1)), int(match.group(2)), p)


def parse_indecs(text: str, p: int) -> List[Indec]:
    """Parse semicolon separated "(a,b)" pairs"""
    parts = [part for part in text.split(";") if part.strip()]
    if not parts:
        raise UsageError("expected at least one (a,b) pair")
    return [parse_indec(part, p) for part in parts]


def format_indecs(objects: Iterable[Indec]) -> str:
    return ";".join(str(X) for X in objects)
