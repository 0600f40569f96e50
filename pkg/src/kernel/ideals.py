"""Concrete bihomogeneous ideals: fat-point ideals, ideals generated by products of
lines, and multiples of an ideal by a fixed form."""
from typing import Sequence

import torch

from base.ideal import BaseBigradedIdeal, DegreePiece
from kernel.field import LineArrangement
from kernel.jets import JetSpace
from kernel.koszul import KoszulHomology
from kernel.modp import DTYPE, matmul_mod, nullspace_mod, rank_mod, row_basis
from kernel.polynomials import LineProduct
from scheme.grid import FatPointGrid
from scheme.params import BiDegree


class SymbolicIdeal(BaseBigradedIdeal):
    """Intersection of I_(P_ij)^(scale * w_ij) over the grid."""

    def __init__(self, grid: FatPointGrid, arrangement: LineArrangement, scale: int = 1):
        super().__init__(arrangement.p)
        self.grid = grid
        self.jets = JetSpace(grid, arrangement, scale)
        self.koszul = KoszulHomology(self.jets)

    def compute_piece(self, d: BiDegree) -> DegreePiece:
        return DegreePiece(d, nullspace_mod(self.jets.conditions(d), self.p))

    def dim(self, d: BiDegree) -> int:
        if d in self._pieces:
            return self._pieces[d].rank
        return d.ring_dim() - self.jets.rank(d)

    def annihilates(self, basis: torch.Tensor, d: BiDegree) -> bool:
        """Whether every row of `basis` (forms of bidegree d) lies in the ideal."""
        if basis.shape[0] == 0 or self.jets.size == 0:
            return True
        values = matmul_mod(self.jets.conditions(d), basis.T, self.p)
        return not bool(values.any())

    def minimal_generator_counts(self, box: BiDegree) -> dict[BiDegree, int]:
        return self.koszul.betti_module(0, box)


class GeneratedIdeal(BaseBigradedIdeal):
    def __init__(self, generators: Sequence[LineProduct], p: int):
        super().__init__(p)
        self.generators = list(generators)

    def _multiples(self, d: BiDegree) -> torch.Tensor:
        rows = [g.multiples(d, self.p) for g in self.generators]
        rows = [r for r in rows if r.shape[0]]
        if not rows:
            return torch.zeros((0, d.ring_dim()), dtype=DTYPE)
        return torch.cat(rows)

    def compute_piece(self, d: BiDegree) -> DegreePiece:
        return DegreePiece(d, row_basis(self._multiples(d), self.p))

    def dim(self, d: BiDegree) -> int:
        if d in self._pieces:
            return self._pieces[d].rank
        return rank_mod(self._multiples(d), self.p)


class ScaledIdeal(BaseBigradedIdeal):
    """form * inner."""

    def __init__(self, form: LineProduct, inner: BaseBigradedIdeal):
        super().__init__(inner.p)
        self.form = form
        self.inner = inner

    def compute_piece(self, d: BiDegree) -> DegreePiece:
        lower = d.minus(self.form.bidegree)
        if lower is None:
            return self.empty_piece(d)
        # multiplication by a nonzero form is injective, so independence is kept
        return DegreePiece(d, self.form.multiply(self.inner.piece(lower).basis, lower, self.p))

    def dim(self, d: BiDegree) -> int:
        lower = d.minus(self.form.bidegree)
        return 0 if lower is None else self.inner.dim(lower)


def hilbert_dim_symbolic(grid: FatPointGrid, m: int, d: BiDegree, arr: LineArrangement) -> int:
    """dim of the bidegree-d slice of the intersection of I_(P_ij)^(m * w_ij)."""
    return SymbolicIdeal(grid, arr, scale=m).dim(d)
