import logging

from base.ideal import BaseBigradedIdeal
from kernel.ideals import SymbolicIdeal
from predictor.betti import BettiTable
from scheme.params import BiDegree

logger = logging.getLogger(__name__)


def min_generators(ideal: BaseBigradedIdeal, box: BiDegree) -> dict[BiDegree, int]:
    """Minimal generator counts per bidegree inside the box."""
    return ideal.minimal_generator_counts(box)


def syzygy_betti(ideal: SymbolicIdeal, box: BiDegree) -> BettiTable:
    """Graded Betti numbers of the ideal of a fat-point scheme, read inside the box."""
    if ideal.grid.is_empty:
        return BettiTable.unit()
    beta0, beta1, beta2 = ideal.koszul.betti_tables(box)
    table = BettiTable(beta0, beta1, beta2)
    logger.debug("Oracle totals %s inside (%d, %d)", table.totals(), box.a, box.b)
    return table
