from dataclasses import dataclass, replace
from enum import Enum

from utils.errors import InvalidParamsError


def positive_part(n: int) -> int:
    """(n)+ = max{n, 0}."""
    return n if n > 0 else 0


@dataclass(frozen=True, order=True)
class BiDegree:
    """Bidegree (a, b): a counts x0, x1 and b counts x2, x3."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InvalidParamsError(f"Bidegree entries must be nonnegative, got ({self.a}, {self.b})")

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.a + other.a, self.b + other.b)

    def minus(self, other: "BiDegree") -> "BiDegree | None":
        """Componentwise difference, or None when it leaves the positive quadrant."""
        a, b = self.a - other.a, self.b - other.b
        if a < 0 or b < 0:
            return None
        return BiDegree(a, b)

    def dominates(self, other: "BiDegree") -> bool:
        return self.a >= other.a and self.b >= other.b

    def transposed(self) -> "BiDegree":
        return BiDegree(self.b, self.a)

    @property
    def total(self) -> int:
        return self.a + self.b

    def ring_dim(self) -> int:
        """Number of monomials of this bidegree."""
        return (self.a + 1) * (self.b + 1)


@dataclass(frozen=True)
class AciParams:
    """Block widths/heights and block multiplicities of a fat ACI.

    Rows 1..alpha1 and columns 1..beta1 carry m11, rows alpha1+1..alpha1+alpha2 on
    the first column block carry m21, rows 1..alpha1 on columns beta1+1..beta1+beta2
    carry m12, and the remaining block is empty.
    """

    alpha1: int
    alpha2: int
    beta1: int
    beta2: int
    m11: int
    m12: int
    m21: int

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "beta1", "beta2"):
            if getattr(self, name) < 1:
                raise InvalidParamsError(f"{name} must be a positive integer, got {getattr(self, name)}")
        for name in ("m11", "m12", "m21"):
            if getattr(self, name) < 0:
                raise InvalidParamsError(f"{name} must be a nonnegative integer, got {getattr(self, name)}")

    @classmethod
    def unit(cls, m11: int, m12: int, m21: int) -> "AciParams":
        """Three points P11, P12, P21 (all blocks of size one)."""
        return cls(1, 1, 1, 1, m11, m12, m21)

    @property
    def mults(self) -> tuple[int, int, int]:
        return (self.m11, self.m12, self.m21)

    @property
    def blocks(self) -> tuple[int, int, int, int]:
        return (self.alpha1, self.alpha2, self.beta1, self.beta2)

    @property
    def is_empty(self) -> bool:
        return self.m11 == 0 and self.m12 == 0 and self.m21 == 0

    def with_mults(self, m11: int, m12: int, m21: int) -> "AciParams":
        return replace(self, m11=m11, m12=m12, m21=m21)

    def scaled(self, m: int) -> "AciParams":
        """Multiplicities multiplied by m: the scheme of the m-th symbolic power."""
        return self.with_mults(m * self.m11, m * self.m12, m * self.m21)

    def transposed(self) -> "AciParams":
        """Swap the two P1 factors; the m12 and m21 blocks trade places."""
        return AciParams(
            alpha1=self.beta1,
            alpha2=self.beta2,
            beta1=self.alpha1,
            beta2=self.alpha2,
            m11=self.m11,
            m12=self.m21,
            m21=self.m12,
        )

    def as_tuple(self) -> tuple[int, ...]:
        return (*self.blocks, *self.mults)


@dataclass(frozen=True)
class NormalizationRecord:
    transposed: bool = False

    def apply_params(self, params: AciParams) -> AciParams:
        return params.transposed() if self.transposed else params


class BaseCaseTag(Enum):
    ACM_COLUMN_BLOCKS = "acm_column_blocks"
    DISJOINT_CI = "disjoint_ci"
    EQUAL_MU_CI = "equal_mu_ci"
    GENERAL = "general"
