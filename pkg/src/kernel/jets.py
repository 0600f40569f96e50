"""Truncated Taylor expansions of forms at the points of a fat-point scheme.

For a point P with multiplicity mu, the jet coordinates are the Hasse derivatives
D^(u,w) at P in the chart x0 = x2 = 1, for u + w < mu. A form lies in the ideal of
the scheme exactly when all of its jets vanish, so R/I in bidegree d is the image
of the evaluation map R_d -> J.
"""
import logging

import torch

from kernel.field import LineArrangement
from kernel.modp import DTYPE, rank_mod, row_basis
from kernel.polynomials import hasse_rows
from scheme.grid import FatPointGrid
from scheme.params import BiDegree

logger = logging.getLogger(__name__)


class JetSpace:
    def __init__(self, grid: FatPointGrid, arrangement: LineArrangement, scale: int = 1):
        if len(arrangement.h) < grid.rows or len(arrangement.v) < grid.cols:
            raise ValueError(
                f"Arrangement with {len(arrangement.h)}x{len(arrangement.v)} lines cannot host a "
                f"{grid.rows}x{grid.cols} grid"
            )
        self.grid = grid
        self.arrangement = arrangement
        self.scale = scale
        self.p = arrangement.p
        self.points = [
            (arrangement.h[i], arrangement.v[j], scale * w) for i, j, w in grid.points()
        ]
        self.coordinates = [
            (k, u, w)
            for k, (_, _, mu) in enumerate(self.points)
            for u in range(mu)
            for w in range(mu - u)
        ]
        self.size = len(self.coordinates)
        self.operators = self._build_operators()
        self._conditions: dict[BiDegree, torch.Tensor] = {}
        self._images: dict[BiDegree, torch.Tensor] = {}
        self._ranks: dict[BiDegree, int] = {}
        logger.debug("Jet space of %d points has dimension %d", len(self.points), self.size)

    def _build_operators(self) -> tuple[torch.Tensor, ...]:
        """Matrices of multiplication by x0, x1, x2, x3 acting on jet columns."""
        position = {c: n for n, c in enumerate(self.coordinates)}
        X1 = torch.zeros((self.size, self.size), dtype=DTYPE)
        X3 = torch.zeros((self.size, self.size), dtype=DTYPE)
        for n, (k, u, w) in enumerate(self.coordinates):
            h, v, _ = self.points[k]
            X1[n, n] = h % self.p
            X3[n, n] = v % self.p
            # Leibniz rule for Hasse derivatives: D^u(x f) = x D^u f + D^(u-1) f
            if u > 0:
                X1[n, position[(k, u - 1, w)]] = 1
            if w > 0:
                X3[n, position[(k, u, w - 1)]] = 1
        identity = torch.eye(self.size, dtype=DTYPE)
        return (identity, X1, identity, X3)

    def conditions(self, d: BiDegree) -> torch.Tensor:
        """Evaluation matrix J x R_d; its kernel is the slice I_d."""
        if d not in self._conditions:
            self._conditions.setdefault(d, self._evaluation(d))
        return self._conditions[d]

    def _evaluation(self, d: BiDegree) -> torch.Tensor:
        rows = []
        for h, v, mu in self.points:
            Hx = hasse_rows(h, mu, d.a, self.p)
            Hy = hasse_rows(v, mu, d.b, self.p)
            block = torch.remainder(torch.kron(Hx, Hy), self.p)
            keep = [u * mu + w for u in range(mu) for w in range(mu - u)]
            rows.append(block[keep])
        if not rows:
            return torch.zeros((0, d.ring_dim()), dtype=DTYPE)
        return torch.cat(rows)

    def image(self, d: BiDegree) -> torch.Tensor:
        """Basis of (R/I)_d inside J, as rows."""
        if d not in self._images:
            basis = row_basis(self.conditions(d).T.contiguous(), self.p)
            self._images.setdefault(d, basis)
            self._ranks.setdefault(d, int(basis.shape[0]))
        return self._images[d]

    def rank(self, d: BiDegree | None) -> int:
        """dim (R/I)_d, zero outside the positive quadrant."""
        if d is None:
            return 0
        if d not in self._ranks:
            self._ranks.setdefault(d, rank_mod(self.conditions(d), self.p))
        return self._ranks[d]
