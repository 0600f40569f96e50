"""Closed-form and recursive Betti tables of fat ACI schemes in P1 x P1."""
import logging
from collections import Counter

from component.degree_sets import aset_w, aset_z, block_image, bset, dset
from predictor.betti import BettiTable
from scheme.params import AciParams, BaseCaseTag, BiDegree, NormalizationRecord, positive_part
from scheme.reduction import classify, normalize, reduce_step
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


def resolve_single_fat_point(m: int) -> BettiTable:
    if m < 0:
        raise PreconditionError(f"Multiplicity must be nonnegative, got {m}")
    if m == 0:
        return BettiTable.unit()
    return BettiTable(
        beta0=Counter(BiDegree(m - t, t) for t in range(0, m + 1)),
        beta1=Counter(BiDegree(m + 1 - t, t) for t in range(1, m + 1)),
    )


def resolve_ci_column_blocks(alpha: int, beta1: int, beta2: int, m11: int, m12: int) -> BettiTable:
    """ACM scheme on CI(alpha, beta1 + beta2): m11 on the first beta1 columns, m12 on the rest."""
    if min(alpha, beta1, beta2) < 1 or min(m11, m12) < 0:
        raise PreconditionError(
            f"Need positive block sizes and nonnegative multiplicities, got "
            f"alpha={alpha}, beta1={beta1}, beta2={beta2}, m11={m11}, m12={m12}"
        )
    top = max(m11, m12)
    if top == 0:
        return BettiTable.unit()

    def height(t: int) -> int:
        return beta1 * positive_part(m11 - t) + beta2 * positive_part(m12 - t)

    return BettiTable(
        beta0=Counter(BiDegree(alpha * t, height(t)) for t in range(0, top + 1)),
        beta1=Counter(BiDegree(alpha * t, height(t - 1)) for t in range(1, top + 1)),
    )


def resolve_ci_homogeneous(alpha: int, beta: int, m: int) -> BettiTable:
    if min(alpha, beta) < 1 or m < 0:
        raise PreconditionError(f"Need alpha, beta >= 1 and m >= 0, got ({alpha}, {beta}, {m})")
    if m == 0:
        return BettiTable.unit()
    return BettiTable(
        beta0=Counter(BiDegree(i * alpha, (m - i) * beta) for i in range(0, m + 1)),
        beta1=Counter(BiDegree((i + 1) * alpha, (m - i) * beta) for i in range(0, m)),
    )


def resolve_two_fat_points(m12: int, m21: int) -> BettiTable:
    """Two non-collinear fat points m12*P12 + m21*P21."""
    if m21 > m12:
        raise PreconditionError(f"Expected m21 <= m12, got m12={m12}, m21={m21}; normalize first")
    if m21 == 0:
        return resolve_single_fat_point(m12)
    level = m12 + m21
    beta0 = {BiDegree(a, level - a): min(a, level - a, m21) + 1 for a in range(0, level + 1)}
    beta1 = {
        BiDegree(a, level + 1 - a): min(a, level - a, m21) + min(a - 1, level + 1 - a, m21) + 1
        for a in range(1, level + 1)
    }
    beta2 = {
        BiDegree(a, level + 2 - a): min(a - 1, level + 1 - a, m21)
        for a in range(2, level + 1)
    }
    return BettiTable(beta0, beta1, beta2)


def _three_point_step(m11: int, m12: int, m21: int) -> BettiTable:
    """Summands the mapping cone adds when passing from W1 to W."""
    corner = BiDegree(m11 + m21, positive_part(m12 - m11) + 1)
    ones = aset_w(1, m11, m12, m21)
    return BettiTable(
        beta0=aset_w(0, m11, m12, m21),
        beta1=ones + ones + Counter([corner]),
        beta2=aset_w(2, m11, m12, m21),
    )


def resolve_three_points(m11: int, m12: int, m21: int) -> BettiTable:
    if m21 > m12:
        raise PreconditionError(f"Expected m21 <= m12, got m12={m12}, m21={m21}; normalize first")
    if m11 == 0:
        return resolve_two_fat_points(m12, m21)
    if m21 == 0:
        return resolve_ci_column_blocks(1, 1, 1, m11, m12)
    previous = resolve_three_points(m11 - 1, m12, m21 - 1)
    return previous.shifted(BiDegree(0, 1)) + _three_point_step(m11, m12, m21)


def resolve_disjoint_ci(
    alpha1: int, alpha2: int, beta1: int, beta2: int, m12: int, m21: int
) -> BettiTable:
    """Support is CI(alpha1, beta2) on the m12 block and CI(alpha2, beta1) on the m21 block."""
    if m12 == 0 and m21 == 0:
        return BettiTable.unit()
    params = AciParams(alpha1, alpha2, beta1, beta2, 0, m12, m21)
    return BettiTable(*(block_image(dset(k, m12, m21), params) for k in range(3)))


def resolve_fat_aci(params: AciParams) -> BettiTable:
    if params.m21 > params.m12:
        raise PreconditionError(f"Expected m21 <= m12 for {params}; normalize first")
    tag = classify(params)
    logger.debug("resolve_fat_aci %s -> %s", params.as_tuple(), tag.name)
    if tag is BaseCaseTag.ACM_COLUMN_BLOCKS:
        if params.m11 == 0:
            return resolve_ci_homogeneous(params.alpha1, params.beta2, params.m12)
        return resolve_ci_column_blocks(params.alpha1, params.beta1, params.beta2, params.m11, params.m12)
    if tag is BaseCaseTag.DISJOINT_CI:
        return resolve_disjoint_ci(*params.blocks, params.m12, params.m21)

    lower = resolve_fat_aci(reduce_step(params)).shifted(BiDegree(0, params.beta1))
    new0, new1 = aset_z(0, params), aset_z(1, params)
    lift = BiDegree(0, params.beta1)
    return lower + BettiTable(
        beta0=new0,
        beta1=Counter({d + lift: n for d, n in new0.items()}) + new1,
        beta2=Counter({d + lift: n for d, n in new1.items()}),
    )


def resolve_equal_multiplicity(params: AciParams) -> BettiTable:
    """Closed form for m11 = m21 = n, m12 = m."""
    if params.m11 != params.m21 or params.m21 > params.m12:
        raise PreconditionError(f"Expected m11 = m21 <= m12, got {params.mults}")
    n, m = params.m11, params.m12
    return BettiTable(*(block_image(bset(k, n, m), params) for k in range(3)))


def resolve_homogeneous_aci(params: AciParams, m: int) -> BettiTable:
    """Every point of the ACI support with the same multiplicity m."""
    if m < 0:
        raise PreconditionError(f"Multiplicity must be nonnegative, got {m}")
    return resolve_equal_multiplicity(params.with_mults(m, m, m))


def triple_point_table(alpha1: int, alpha2: int, beta1: int, beta2: int) -> BettiTable:
    """Published resolution of homogeneous triple points on an ACI support.

    The support has row tuple (a,...,a [c times], b,...,b [d times]) with
    a = beta1 + beta2, b = beta1, c = alpha1, d = alpha2.
    """
    a, b, c, d = beta1 + beta2, beta1, alpha1, alpha2
    f0 = [
        (3 * c + 3 * d, 0), (3 * c + 2 * d, b), (2 * c + 2 * d, a), (3 * c + d, 2 * b),
        (2 * c + d, b + a), (c + d, 2 * a), (3 * c, 3 * b), (2 * c, 2 * b + a),
        (c, b + 2 * a), (0, 3 * a),
    ]
    f1 = [
        (c, 3 * a), (2 * c, 2 * a + b), (3 * c, a + 2 * b), (c + d, 2 * a + b),
        (2 * c + d, a + 2 * b), (3 * c + d, 3 * b), (2 * c + d, 2 * a), (3 * c + d, a + b),
        (2 * c + 2 * d, a + b), (3 * c + 2 * d, 2 * b), (3 * c + 2 * d, a), (3 * c + 3 * d, b),
    ]
    f2 = [(3 * c + 2 * d, b + a), (3 * c + d, a + 2 * b), (2 * c + d, 2 * a + b)]
    return BettiTable(*(Counter(BiDegree(x, y) for x, y in module) for module in (f0, f1, f2)))


def predict(params: AciParams) -> tuple[BettiTable, NormalizationRecord]:
    """Betti table of the scheme as given, computed on its normalized form."""
    normalized, record = normalize(params)
    table = resolve_fat_aci(normalized)
    if record.transposed:
        table = table.transposed()
    return table, record
