"""Comparisons between ordinary and symbolic powers, and the splitting of I_Z used by
the mapping-cone recursion."""
import logging
from dataclasses import dataclass, field

import torch

from base.ideal import BaseBigradedIdeal, DegreePiece, box_degrees
from kernel.family import Exponents, GeneratorFamily, realize, satisfies, staircase_exponents
from kernel.field import FieldConfig
from kernel.ideals import GeneratedIdeal, ScaledIdeal, SymbolicIdeal
from kernel.modp import rank_mod
from kernel.syzygies import min_generators
from predictor.resolutions import predict
from scheme.grid import build_grid
from scheme.params import AciParams, BiDegree, positive_part
from scheme.reduction import reduce_step
from utils.errors import KernelInvariantError, PreconditionError

logger = logging.getLogger(__name__)


def split_factor(
    exponents: Exponents, m: int, mults: tuple[int, int, int]
) -> tuple[Exponents, Exponents]:
    """Write Q1^a1 Q2^a2 U1^b1 U2^b2 in I^(m) as F1 * F2 with F1 in I and F2 in I^(m-1)."""
    if m < 1:
        raise PreconditionError(f"Power must be positive, got m={m}")
    if any(e < 0 for e in exponents):
        raise PreconditionError(f"Exponents must be nonnegative, got {exponents}")
    if not satisfies(exponents, mults, m):
        raise PreconditionError(
            f"Exponents {exponents} do not satisfy the {m}-fold constraints for multiplicities {mults}"
        )
    a1, a2, b1, b2 = exponents
    d1, s1 = divmod(b1, m)
    d2, s2 = divmod(b2, m)
    first = (a1 // m, a2 // m, d1 + int(s1 != 0), d2 + int(s2 != 0))
    second = tuple(x - y for x, y in zip(exponents, first))
    return first, second  # type: ignore[return-value]


def power_piece(fam: GeneratorFamily, m: int, d: BiDegree) -> DegreePiece:
    """Slice at d of the ideal generated by all m-fold products of the family."""
    return power_ideal(fam, m).piece(d)


def power_ideal(fam: GeneratorFamily, m: int) -> GeneratedIdeal:
    return GeneratedIdeal([fam.form(e) for e in fam.power_exponents(m)], fam.arrangement.p)


@dataclass(frozen=True)
class PowerDegreeRow:
    bidegree: BiDegree
    generators: int
    power_dim: int
    symbolic_dim: int

    @property
    def equal(self) -> bool:
        return self.power_dim == self.symbolic_dim


@dataclass
class PowerReport:
    params: AciParams
    m: int
    rows: list[PowerDegreeRow] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return all(row.equal for row in self.rows)


def candidate_degrees(params: AciParams, m: int, fam: GeneratorFamily) -> list[BiDegree]:
    """Bidegrees of the scaled staircase: they contain every generator degree of I^(m)."""
    return sorted({fam.bidegree(e) for e in staircase_exponents(params.mults, m)})


def check_power_equality(
    params: AciParams,
    m: int,
    field_config: FieldConfig | None = None,
    margin: BiDegree = BiDegree(2, 2),
    family: GeneratorFamily | None = None,
    exhaustive: bool = True,
) -> PowerReport:
    """Compare dim (I^m)_d with dim (I^(m))_d at the generator degrees of I^(m).

    I^m is contained in I^(m), so equality at every generator degree of I^(m) is
    equality of ideals. Generator degrees are read off the Koszul homology of the
    symbolic power over a box around its predicted generators; a generator on the
    box boundary raises BoxTooSmallError. `exhaustive=False` trusts the bidegrees
    of the scaled staircase instead. `family` replaces the realized staircase, e.g.
    to feed a truncated family.
    """
    if m < 1:
        raise PreconditionError(f"Power must be positive, got m={m}")
    field_config = field_config or FieldConfig()
    arrangement, realized = realize(params, field_config)
    family = family or realized
    symbolic = SymbolicIdeal(build_grid(params), arrangement, scale=m)
    if exhaustive:
        predicted, _ = predict(params.scaled(m))
        box = BiDegree(
            max(d.a for d in predicted.beta0) + margin.a,
            max(d.b for d in predicted.beta0) + margin.b,
        )
        logger.debug("Scanning generators of the symbolic power up to (%d, %d)", box.a, box.b)
        generators = min_generators(symbolic, box)
    else:
        generators = {d: symbolic.generator_count(d) for d in candidate_degrees(params, m, realized)}
    powered = power_ideal(family, m)

    report = PowerReport(params, m)
    for d in sorted(generators):
        if generators[d] == 0:
            continue
        piece = powered.piece(d)
        if not symbolic.annihilates(piece.basis, d):
            raise KernelInvariantError(
                f"A product of {m} generators in bidegree ({d.a}, {d.b}) is not in the symbolic power"
            )
        report.rows.append(PowerDegreeRow(d, generators[d], piece.rank, symbolic.dim(d)))
    logger.info("Power check %s m=%d: %s", params.as_tuple(), m, "equal" if report.equal else "different")
    return report


@dataclass(frozen=True)
class SplittingRow:
    bidegree: BiDegree
    target_dim: int
    sum_dim: int
    intersection_dim: int
    expected_intersection_dim: int

    @property
    def holds(self) -> bool:
        return self.target_dim == self.sum_dim and self.intersection_dim == self.expected_intersection_dim


@dataclass
class SplittingReport:
    params: AciParams
    rows: list[SplittingRow] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(row.holds for row in self.rows)


def splitting_pieces(
    params: AciParams, fam: GeneratorFamily
) -> tuple[BaseBigradedIdeal, BaseBigradedIdeal, BaseBigradedIdeal]:
    """U1 * I_Z1, Q1^m11 Q2^m21 (Q1, U2)^k and U1 Q1^m11 Q2^m21 (Q1, U2)^k, k = (m12 - m11)+."""
    p = fam.arrangement.p
    k = positive_part(params.m12 - params.m11)
    u1 = fam.form((0, 0, 1, 0))
    lowered = SymbolicIdeal(build_grid(reduce_step(params)), fam.arrangement)
    corner = GeneratedIdeal(
        [fam.form((params.m11 + i, params.m21, 0, k - i)) for i in range(k + 1)], p
    )
    return ScaledIdeal(u1, lowered), corner, ScaledIdeal(u1, corner)


def check_splitting_identity(
    params: AciParams, field_config: FieldConfig | None = None, box: BiDegree | None = None
) -> SplittingReport:
    """Check I_Z = U1 I_Z1 + C and U1 I_Z1 ∩ C = U1 C degree by degree, where
    C = Q1^m11 Q2^m21 (Q1, U2)^((m12 - m11)+)."""
    field_config = field_config or FieldConfig()
    arrangement, fam = realize(params, field_config)
    if box is None:
        predicted, _ = predict(params)
        box = predicted.max_degree() + BiDegree(2, 2)
    target = SymbolicIdeal(build_grid(params), arrangement)
    lifted, corner, overlap = splitting_pieces(params, fam)

    report = SplittingReport(params)
    for d in box_degrees(box):
        left, right = lifted.piece(d).basis, corner.piece(d).basis
        total = rank_mod(torch.cat([left, right]), arrangement.p)
        if not (target.annihilates(left, d) and target.annihilates(right, d)):
            raise KernelInvariantError(f"A summand leaves I_Z in bidegree ({d.a}, {d.b})")
        report.rows.append(
            SplittingRow(
                bidegree=d,
                target_dim=target.dim(d),
                sum_dim=total,
                intersection_dim=left.shape[0] + right.shape[0] - total,
                expected_intersection_dim=overlap.dim(d),
            )
        )
    return report
