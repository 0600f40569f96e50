import logging

from scheme.params import AciParams, BaseCaseTag, NormalizationRecord, positive_part

logger = logging.getLogger(__name__)


def reduce_step(params: AciParams) -> AciParams:
    """Lower the multiplicity of every point on the first column block by one."""
    return params.with_mults(positive_part(params.m11 - 1), params.m12, positive_part(params.m21 - 1))


def normalize(params: AciParams) -> tuple[AciParams, NormalizationRecord]:
    if params.m21 <= params.m12:
        return params, NormalizationRecord(transposed=False)
    logger.debug("Transposing %s to enforce m21 <= m12", params)
    return params.transposed(), NormalizationRecord(transposed=True)


def classify(params: AciParams) -> BaseCaseTag:
    if params.m21 == 0:
        return BaseCaseTag.ACM_COLUMN_BLOCKS
    if params.m11 == 0:
        return BaseCaseTag.DISJOINT_CI
    if params.m11 == params.m21:
        return BaseCaseTag.EQUAL_MU_CI
    return BaseCaseTag.GENERAL


def reduction_chain(params: AciParams) -> list[AciParams]:
    """Z, Z1, ..., Z_mu with mu = min(m11, m21)."""
    chain = [params]
    while min(chain[-1].m11, chain[-1].m21) > 0:
        chain.append(reduce_step(chain[-1]))
    return chain
