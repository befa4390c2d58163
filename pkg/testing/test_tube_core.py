import pytest
import logging
from cluster_tube import (
    Indec,
    InvalidLength,
    InvalidRank,
    RankMismatch,
    UsageError,
    WingUndefined,
    ext1_dim,
    hom_cluster_dim,
    hom_tube_dim,
    in_wing,
    make_object,
    normalize,
    shift,
    shift_inv,
    tau,
    tau_inv,
)
from cluster_tube.tube_core import is_rigid_indec, parse_indecs, wing


def _indecs(p: int, max_length: int):
    return [
        Indec(a, b, p)
        for a in range(1, p + 1)
        for b in range(1, max_length + 1)
    ]


@pytest.mark.parametrize(
    "a, b, p, expected",
    [(4, 2, 3, (1, 2)), (0, 1, 3, (3, 1)), (-1, 2, 3, (2, 2))],
)
def test_normalize(a, b, p, expected) -> None:
    X = normalize(a, b, p)
    assert (X.a, X.b) == expected
    assert X == Indec(*expected, p)


def test_invalid_objects() -> None:
    with pytest.raises(InvalidLength):
        Indec(1, 0, 3)
    with pytest.raises(InvalidRank):
        Indec(1, 1, 1)
    assert make_object(2, 0, 3).is_zero
    assert make_object(5, 1, 3).summands == (Indec(2, 1, 3),)


def test_translation_and_shift() -> None:
    logging.info("::::::Running AR-Translate And Shift::::::")
    assert tau(Indec(1, 2, 3)) == Indec(3, 2, 3)
    assert tau_inv(Indec(3, 2, 3)) == Indec(1, 2, 3)
    assert shift(Indec(2, 1, 3)) == Indec(1, 1, 3)
    for X in _indecs(4, 8):
        assert tau_inv(tau(X)) == X
        assert shift_inv(shift(X)) == X


@pytest.mark.parametrize(
    "X, Y, expected",
    [
        ((1, 1), (1, 1), 1),
        ((1, 2), (3, 2), 0),
        ((1, 4), (1, 4), 2),
        ((1, 1), (1, 2), 1),
    ],
)
def test_hom_tube_dim(X, Y, expected) -> None:
    assert hom_tube_dim(Indec(*X, 3), Indec(*Y, 3)) == expected


@pytest.mark.parametrize(
    "X, Y, expected",
    [
        ((1, 2), (2, 2), 2),
        ((1, 2), (1, 1), 0),
        ((1, 1), (1, 2), 2),
        ((1, 2), (1, 2), 2),
        ((2, 1), (2, 1), 1),
    ],
)
def test_hom_cluster_dim(X, Y, expected) -> None:
    assert hom_cluster_dim(Indec(*X, 3), Indec(*Y, 3)) == expected


def test_length_n_objects_have_two_dimensional_endomorphisms() -> None:
    for p in range(2, 7):
        for a in range(1, p + 1):
            X = Indec(a, p - 1, p)
            assert hom_cluster_dim(X, X) == 2


@pytest.mark.parametrize(
    "X, Y, expected",
    [
        ((1, 2), (1, 2), 0),
        ((1, 3), (1, 3), 2),
        # (1,1) and (2,1) form an exchange pair at n = 2
        ((1, 1), (2, 1), 1),
        ((1, 2), (1, 1), 0),
    ],
)
def test_ext1_dim(X, Y, expected) -> None:
    assert ext1_dim(Indec(*X, 3), Indec(*Y, 3)) == expected


def test_ext1_is_symmetric() -> None:
    for p in range(2, 6):
        objects = _indecs(p, 2 * p)
        for X in objects:
            for Y in objects:
                assert ext1_dim(X, Y) == ext1_dim(Y, X)


def test_rigid_iff_self_orthogonal() -> None:
    logging.info("::::::Running Rigidity Against Ext^1(X, X)::::::")
    for p in range(2, 7):
        for X in _indecs(p, 2 * p):
            assert is_rigid_indec(X) == (ext1_dim(X, X) == 0)
    assert is_rigid_indec(Indec(2, 2, 3))
    assert not is_rigid_indec(Indec(1, 3, 3))
    assert is_rigid_indec(Indec(1, 1, 2))


def test_rank_mismatch() -> None:
    with pytest.raises(RankMismatch):
        hom_tube_dim(Indec(1, 1, 3), Indec(1, 1, 4))
    with pytest.raises(RankMismatch):
        ext1_dim(Indec(1, 1, 3), Indec(1, 1, 4))


def test_wings() -> None:
    top = Indec(3, 2, 3)
    assert in_wing(Indec(3, 1, 3), top)
    assert not in_wing(Indec(2, 2, 3), top)
    assert in_wing(top, top)
    assert wing(top) == sorted([Indec(3, 2, 3), Indec(3, 1, 3), Indec(1, 1, 3)])
    with pytest.raises(WingUndefined):
        in_wing(Indec(1, 1, 3), Indec(1, 3, 3))


def test_parse_indecs() -> None:
    assert parse_indecs("(4,2); (1, 1)", 3) == [Indec(1, 2, 3), Indec(1, 1, 3)]
    with pytest.raises(UsageError):
        parse_indecs("(1,2", 3)
    with pytest.raises(UsageError):
        parse_indecs(" ; ", 3)
