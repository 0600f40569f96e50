"""Predictor against oracle for one scheme."""
import logging
from dataclasses import dataclass, field

from base.ideal import box_degrees
from kernel.family import realize
from kernel.field import FieldConfig
from kernel.ideals import GeneratedIdeal, SymbolicIdeal
from kernel.syzygies import syzygy_betti
from predictor.betti import BettiTable, euler_hilbert
from predictor.resolutions import predict
from scheme.grid import build_grid
from scheme.params import AciParams, BiDegree

logger = logging.getLogger(__name__)


def verification_box(table: BettiTable, margin: BiDegree) -> BiDegree:
    return table.max_degree() + margin


def corrupt_table(table: BettiTable) -> BettiTable:
    """Negative control: one extra generator and syzygy in the top bidegree."""
    top = table.max_degree()
    return table + BettiTable(beta0={top: 1}, beta1={top: 1})


@dataclass
class VerificationReport:
    params: AciParams
    predicted: BettiTable
    oracle: BettiTable
    box: BiDegree
    hilbert_mismatches: list[tuple[BiDegree, int, int]] = field(default_factory=list)
    family_mismatches: list[tuple[BiDegree, int, int]] = field(default_factory=list)

    @property
    def tables_agree(self) -> bool:
        return self.predicted == self.oracle

    @property
    def passed(self) -> bool:
        return self.tables_agree and not self.hilbert_mismatches and not self.family_mismatches

    def diff(self) -> dict[str, list[tuple[BiDegree, int, int]]]:
        """Per module: (bidegree, predicted, oracle) wherever they differ."""
        out = {}
        for k, name in enumerate(("beta0", "beta1", "beta2")):
            ours, theirs = self.predicted.module(k), self.oracle.module(k)
            out[name] = [
                (d, ours.get(d, 0), theirs.get(d, 0))
                for d in sorted(set(ours) | set(theirs))
                if ours.get(d, 0) != theirs.get(d, 0)
            ]
        return out


def verify_params(
    params: AciParams,
    field_config: FieldConfig | None = None,
    margin: BiDegree = BiDegree(2, 2),
    corrupt: bool = False,
) -> VerificationReport:
    field_config = field_config or FieldConfig()
    predicted, _ = predict(params)
    if corrupt:
        predicted = corrupt_table(predicted)
    box = verification_box(predicted, margin)
    arrangement, family = realize(params, field_config)
    symbolic = SymbolicIdeal(build_grid(params), arrangement)
    generated = GeneratedIdeal(family.forms(), arrangement.p)

    report = VerificationReport(params, predicted, syzygy_betti(symbolic, box), box)
    for d in box_degrees(box):
        actual = symbolic.dim(d)
        expected = euler_hilbert(predicted, d)
        if expected != actual:
            report.hilbert_mismatches.append((d, expected, actual))
        spanned = generated.dim(d)
        if spanned != actual:
            report.family_mismatches.append((d, spanned, actual))
    logger.info("Verified %s: %s", params.as_tuple(), "pass" if report.passed else "FAIL")
    return report
