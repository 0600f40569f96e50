from abc import ABC, abstractmethod
from dataclasses import dataclass

import torch

from kernel.modp import DTYPE, rank_mod
from kernel.polynomials import multiply_by_variable
from scheme.params import BiDegree
from utils.errors import BoxTooSmallError

UNIT_STEPS = (BiDegree(1, 0), BiDegree(1, 0), BiDegree(0, 1), BiDegree(0, 1))


@dataclass(frozen=True)
class DegreePiece:
    """Rows spanning the bidegree-d slice of an ideal, in monomial coordinates."""

    bidegree: BiDegree
    basis: torch.Tensor

    @property
    def rank(self) -> int:
        return int(self.basis.shape[0])


def box_degrees(box: BiDegree):
    for a in range(box.a + 1):
        for b in range(box.b + 1):
            yield BiDegree(a, b)


def on_boundary(d: BiDegree, box: BiDegree) -> bool:
    return d.a == box.a or d.b == box.b


class BaseBigradedIdeal(ABC):
    """
    Abstract base class for bihomogeneous ideals of k[x0, x1, x2, x3] over GF(p).
    Subclasses only describe one bidegree slice at a time; everything else is
    derived from `compute_piece`.
    """

    def __init__(self, p: int):
        self.p = p
        self._pieces: dict[BiDegree, DegreePiece] = {}

    @abstractmethod
    def compute_piece(self, d: BiDegree) -> DegreePiece:
        """Linearly independent rows spanning the slice at d."""
        pass

    def piece(self, d: BiDegree) -> DegreePiece:
        cached = self._pieces.get(d)
        if cached is None:
            cached = self._pieces.setdefault(d, self.compute_piece(d))
        return cached

    def dim(self, d: BiDegree) -> int:
        return self.piece(d).rank

    def contains(self, other: "BaseBigradedIdeal", d: BiDegree) -> bool:
        """Whether other_d is a subspace of self_d."""
        theirs = other.piece(d).basis
        if theirs.shape[0] == 0:
            return True
        stacked = torch.cat([self.piece(d).basis, theirs])
        return rank_mod(stacked, self.p) == self.dim(d)

    def generator_count(self, d: BiDegree) -> int:
        """dim I_d - dim((x0, x1) I_(d-(1,0)) + (x2, x3) I_(d-(0,1)))_d"""
        total = self.dim(d)
        if total == 0:
            return 0
        pushed = []
        for var, step in enumerate(UNIT_STEPS):
            lower = d.minus(step)
            if lower is None:
                continue
            basis = self.piece(lower).basis
            if basis.shape[0]:
                pushed.append(multiply_by_variable(basis, lower, var))
        if not pushed:
            return total
        return total - rank_mod(torch.cat(pushed), self.p)

    def minimal_generator_counts(self, box: BiDegree) -> dict[BiDegree, int]:
        counts = {}
        for d in box_degrees(box):
            n = self.generator_count(d)
            if n == 0:
                continue
            if on_boundary(d, box):
                raise BoxTooSmallError(
                    f"Minimal generator in bidegree ({d.a}, {d.b}) touches the box ({box.a}, {box.b})"
                )
            counts[d] = n
        return counts

    def empty_piece(self, d: BiDegree) -> DegreePiece:
        return DegreePiece(d, torch.zeros((0, d.ring_dim()), dtype=DTYPE))
