from dataclasses import dataclass
from typing import Iterator, Sequence

from scheme.params import AciParams
from utils.errors import InvalidParamsError


@dataclass(frozen=True)
class FatPointGrid:
    """Multiplicities w_ij of the points P_ij = H_i x V_j on an r x a grid.

    `blocks` keeps (alpha1, alpha2, beta1, beta2) when the grid was built from
    AciParams, so the block multiplicities can be read back.
    """

    rows: int
    cols: int
    weights: tuple[tuple[int, ...], ...]
    blocks: tuple[int, int, int, int] | None = None

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidParamsError(f"Grid shape must be nonnegative, got {self.rows}x{self.cols}")
        if len(self.weights) != self.rows or any(len(row) != self.cols for row in self.weights):
            raise InvalidParamsError(f"Weights do not form a {self.rows}x{self.cols} matrix")
        if any(w < 0 for row in self.weights for w in row):
            raise InvalidParamsError("Multiplicities must be nonnegative")

    @classmethod
    def from_rows(cls, weights: Sequence[Sequence[int]]) -> "FatPointGrid":
        rows = tuple(tuple(int(w) for w in row) for row in weights)
        return cls(rows=len(rows), cols=len(rows[0]) if rows else 0, weights=rows)

    def points(self) -> Iterator[tuple[int, int, int]]:
        """(i, j, w_ij) for every point of positive multiplicity, row-major."""
        for i, row in enumerate(self.weights):
            for j, w in enumerate(row):
                if w > 0:
                    yield i, j, w

    @property
    def is_empty(self) -> bool:
        return not any(True for _ in self.points())

    def transposed(self) -> "FatPointGrid":
        weights = tuple(tuple(self.weights[i][j] for i in range(self.rows)) for j in range(self.cols))
        blocks = None
        if self.blocks is not None:
            alpha1, alpha2, beta1, beta2 = self.blocks
            blocks = (beta1, beta2, alpha1, alpha2)
        return FatPointGrid(rows=self.cols, cols=self.rows, weights=weights, blocks=blocks)

    def to_params(self) -> AciParams:
        """Read the block multiplicities back; fails if the grid is not block-constant."""
        if self.blocks is None:
            raise InvalidParamsError("Grid has no recorded block structure")
        alpha1, alpha2, beta1, beta2 = self.blocks
        params = AciParams(alpha1, alpha2, beta1, beta2, *self._block_values(alpha1, beta1))
        if build_grid(params).weights != self.weights:
            raise InvalidParamsError("Grid weights are not constant on the recorded blocks")
        return params

    def _block_values(self, alpha1: int, beta1: int) -> tuple[int, int, int]:
        m11 = self.weights[0][0]
        m12 = self.weights[0][beta1]
        m21 = self.weights[alpha1][0]
        return m11, m12, m21


def build_grid(params: AciParams) -> FatPointGrid:
    rows = params.alpha1 + params.alpha2
    cols = params.beta1 + params.beta2
    weights = []
    for i in range(rows):
        row = []
        for j in range(cols):
            top, left = i < params.alpha1, j < params.beta1
            if top and left:
                row.append(params.m11)
            elif left:
                row.append(params.m21)
            elif top:
                row.append(params.m12)
            else:
                row.append(0)
        weights.append(tuple(row))
    return FatPointGrid(rows=rows, cols=cols, weights=tuple(weights), blocks=params.blocks)


def alpha_tuple(grid: FatPointGrid, fat: bool = False) -> tuple[int, ...]:
    """Row tuple of the grid, sorted non-increasingly.

    With fat=False this is the tuple of the reduced support: the number of points
    on each horizontal line that meets the support. With fat=True every row
    contributes the layer sums gamma_t = sum_j (w_ij - t)+ for t = 0, 1, ... while
    they stay positive, which is the tuple attached to an ACM fat scheme.
    """
    values = []
    for row in grid.weights:
        if fat:
            t = 0
            while True:
                gamma = sum(w - t for w in row if w > t)
                if gamma == 0:
                    break
                values.append(gamma)
                t += 1
        else:
            count = sum(1 for w in row if w > 0)
            if count:
                values.append(count)
    return tuple(sorted(values, reverse=True))
