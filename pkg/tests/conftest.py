import pytest

from predictor.betti import BettiTable
from scheme.params import AciParams


@pytest.fixture
def three_points() -> AciParams:
    """2P11 + 4P12 + 3P21."""
    return AciParams.unit(2, 4, 3)


@pytest.fixture
def three_points_table() -> BettiTable:
    return BettiTable.from_lists(
        [(7, 0, 1), (6, 1, 2), (5, 2, 3), (4, 3, 3), (3, 4, 3), (2, 5, 2), (1, 6, 2), (0, 7, 1)],
        [(7, 1, 2), (6, 2, 4), (5, 3, 5), (4, 4, 5), (3, 5, 4), (2, 6, 3), (1, 7, 2)],
        [(7, 2, 1), (6, 3, 2), (5, 4, 2), (4, 5, 2), (3, 6, 1), (2, 7, 1)],
    )


@pytest.fixture
def block_scheme() -> AciParams:
    """Blocks 2, 1 by 2, 2 with multiplicities 2, 4, 3."""
    return AciParams(2, 1, 2, 2, 2, 4, 3)


@pytest.fixture
def block_scheme_table() -> BettiTable:
    return BettiTable.from_lists(
        [
            (10, 2, 1), (9, 4, 1), (8, 6, 1), (8, 4, 1), (7, 6, 1), (6, 8, 1), (6, 6, 1),
            (5, 8, 1), (4, 10, 1), (4, 8, 1), (3, 10, 1), (2, 12, 1), (1, 12, 1), (0, 14, 1),
            (7, 4, 1), (9, 2, 1), (11, 0, 1),
        ],
        [
            (10, 4, 2), (9, 6, 2), (8, 8, 1), (8, 6, 2), (7, 8, 2), (6, 10, 1), (6, 8, 2),
            (5, 10, 2), (4, 10, 1), (4, 12, 1), (3, 12, 2), (2, 14, 1), (1, 14, 1),
            (7, 6, 1), (9, 4, 2), (11, 2, 2),
        ],
        [
            (10, 6, 1), (9, 8, 1), (8, 8, 1), (7, 10, 1), (6, 10, 1), (5, 12, 1), (3, 14, 1),
            (9, 6, 1), (11, 4, 1),
        ],
    )
