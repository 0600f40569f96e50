"""Koszul homology of R/I computed on the jet space.

Tor_i(R/I, k) in bidegree d is the homology of
    C_i = sum over |S| = i of (R/I)_(d - deg S),
with S running over subsets of {x0, x1, x2, x3}. Since R/I embeds degreewise in J,
every C_i is written in ambient coordinates J^(4 choose i) and only ranks are needed.
"""
import logging
from itertools import combinations

import torch

from kernel.jets import JetSpace
from kernel.modp import DTYPE, matmul_mod, rank_mod
from kernel.polynomials import VARIABLE_DEGREES
from scheme.params import BiDegree
from utils.errors import BoxTooSmallError, ResolutionLengthError

logger = logging.getLogger(__name__)

SUBSETS = tuple(tuple(combinations(range(4), i)) for i in range(5))


def subset_degree(subset: tuple[int, ...]) -> BiDegree:
    a = sum(1 for k in subset if k < 2)
    return BiDegree(a, len(subset) - a)


class KoszulHomology:
    def __init__(self, jets: JetSpace):
        self.jets = jets
        self.p = jets.p
        self._ranks: dict[tuple[int, BiDegree], int] = {}

    def chain_dim(self, i: int, d: BiDegree) -> int:
        return sum(self.jets.rank(d.minus(subset_degree(S))) for S in SUBSETS[i])

    def boundary_rank(self, i: int, d: BiDegree) -> int:
        """Rank of C_i -> C_(i-1) in bidegree d."""
        if i <= 0 or i > 4:
            return 0
        key = (i, d)
        if key not in self._ranks:
            self._ranks.setdefault(key, rank_mod(self._boundary(i, d), self.p))
        return self._ranks[key]

    def _boundary(self, i: int, d: BiDegree) -> torch.Tensor:
        n = self.jets.size
        targets = {T: pos for pos, T in enumerate(SUBSETS[i - 1])}
        blocks = []
        for S in SUBSETS[i]:
            source = d.minus(subset_degree(S))
            if source is None:
                continue
            basis = self.jets.image(source)
            if basis.shape[0] == 0:
                continue
            block = torch.zeros((basis.shape[0], len(targets) * n), dtype=DTYPE)
            for pos, k in enumerate(S):
                T = S[:pos] + S[pos + 1 :]
                column = targets[T] * n
                image = matmul_mod(basis, self.jets.operators[k].T, self.p)
                if pos % 2:
                    image = torch.remainder(-image, self.p)
                block[:, column : column + n] = image
            blocks.append(block)
        if not blocks:
            return torch.zeros((0, len(targets) * n), dtype=DTYPE)
        return torch.cat(blocks)

    def tor(self, i: int, d: BiDegree) -> int:
        size = self.chain_dim(i, d)
        if size == 0:
            return 0
        return size - self.boundary_rank(i, d) - self.boundary_rank(i + 1, d)

    def is_stable(self, d: BiDegree) -> bool:
        """Multiplication by x0 (or x2) is an isomorphism on every chain group at d.

        Both act as the identity on J, so the Koszul complex at d is then a mapping
        cone of an isomorphism and all homology vanishes.
        """
        for var, others in ((0, (1, 2, 3)), (2, (0, 1, 3))):
            step = VARIABLE_DEGREES[var]
            below = d.minus(step)
            if below is None:
                continue
            if all(
                self.jets.rank(d.minus(subset_degree(T)))
                == self.jets.rank(below.minus(subset_degree(T)))
                for i in range(4)
                for T in combinations(others, i)
            ):
                return True
        return False

    def betti_module(self, k: int, box: BiDegree) -> dict[BiDegree, int]:
        """Graded Betti numbers beta_k(I) = Tor_(k+1)(R/I) inside the box."""
        counts = {}
        for a in range(box.a + 1):
            for b in range(box.b + 1):
                d = BiDegree(a, b)
                if self.is_stable(d):
                    continue
                n = self.tor(k + 1, d)
                if n == 0:
                    continue
                if d.a == box.a or d.b == box.b:
                    raise BoxTooSmallError(
                        f"Betti number beta_{k} in bidegree ({a}, {b}) touches the box ({box.a}, {box.b})"
                    )
                counts[d] = n
        return counts

    def betti_tables(self, box: BiDegree) -> tuple[dict[BiDegree, int], ...]:
        modules = tuple(self.betti_module(k, box) for k in range(3))
        third = self.betti_module(3, box)
        if third:
            d, n = next(iter(third.items()))
            raise ResolutionLengthError(
                f"Nonzero third syzygy module: {n} in bidegree ({d.a}, {d.b})"
            )
        logger.debug("Koszul Betti numbers inside (%d, %d): %s", box.a, box.b, modules)
        return modules
