"""Bihomogeneous polynomials in x0, x1 (bidegree (1,0)) and x2, x3 (bidegree (0,1)).

A form of bidegree (a, b) is a coefficient vector over x0^(a-s) x1^s x2^(b-t) x3^t,
indexed by (s, t) in lexicographic order, i.e. position s*(b+1) + t.
Univariate parts are vectors indexed by the power of x1 (resp. x3).
"""
from dataclasses import dataclass
from math import comb

import torch

from kernel.modp import DTYPE, matmul_mod
from scheme.params import BiDegree

VARIABLE_DEGREES = (BiDegree(1, 0), BiDegree(1, 0), BiDegree(0, 1), BiDegree(0, 1))


def poly_mul(f: torch.Tensor, g: torch.Tensor, p: int) -> torch.Tensor:
    # coefficients of f times the rows x^s * g
    return matmul_mod(f[None, :], toeplitz_rows(g, len(f) + len(g) - 2), p)[0]


def line_product(scalars: tuple[int, ...], exponent: int, p: int) -> torch.Tensor:
    """prod over c in scalars of (y - c*x)^exponent as a univariate coefficient vector."""
    f = torch.ones(1, dtype=DTYPE)
    for c in scalars:
        line = torch.tensor([(-c) % p, 1], dtype=DTYPE)
        for _ in range(exponent):
            f = poly_mul(f, line, p)
    return f


def toeplitz_rows(f: torch.Tensor, target: int) -> torch.Tensor:
    """Rows x^s * f for every shift that stays in degree `target`."""
    degree = len(f) - 1
    shifts = target - degree + 1
    if shifts <= 0:
        return torch.zeros((0, target + 1), dtype=DTYPE)
    T = torch.zeros((shifts, target + 1), dtype=DTYPE)
    rows = torch.arange(shifts)[:, None]
    cols = rows + torch.arange(degree + 1)[None, :]
    T[rows, cols] = f.expand(shifts, -1)
    return T


@dataclass(frozen=True)
class BiPoly:
    bidegree: BiDegree
    coeffs: torch.Tensor

    def __post_init__(self):
        if self.coeffs.numel() != self.bidegree.ring_dim():
            raise ValueError(
                f"A form of bidegree ({self.bidegree.a}, {self.bidegree.b}) needs "
                f"{self.bidegree.ring_dim()} coefficients, got {self.coeffs.numel()}"
            )


@dataclass(frozen=True)
class LineProduct:
    """f(x0, x1) * g(x2, x3) with both parts given as univariate vectors."""

    x_part: torch.Tensor
    y_part: torch.Tensor

    @property
    def bidegree(self) -> BiDegree:
        return BiDegree(len(self.x_part) - 1, len(self.y_part) - 1)

    def times(self, other: "LineProduct", p: int) -> "LineProduct":
        return LineProduct(poly_mul(self.x_part, other.x_part, p), poly_mul(self.y_part, other.y_part, p))

    def as_bipoly(self, p: int) -> BiPoly:
        return BiPoly(self.bidegree, torch.remainder(torch.kron(self.x_part, self.y_part), p))

    def multiples(self, d: BiDegree, p: int) -> torch.Tensor:
        """Spanning rows of (this form) * R_(d - deg) inside R_d."""
        if not d.dominates(self.bidegree):
            return torch.zeros((0, d.ring_dim()), dtype=DTYPE)
        Tx = toeplitz_rows(self.x_part, d.a)
        Ty = toeplitz_rows(self.y_part, d.b)
        return torch.remainder(torch.kron(Tx, Ty), p)

    def multiply(self, basis: torch.Tensor, d: BiDegree, p: int) -> torch.Tensor:
        """Multiply every row (a form of bidegree d) by this form."""
        e = self.bidegree
        target = d + e
        if basis.shape[0] == 0:
            return torch.zeros((0, target.ring_dim()), dtype=DTYPE)
        M = basis.reshape(-1, d.a + 1, d.b + 1)
        left = toeplitz_rows(self.x_part, target.a).T
        right = toeplitz_rows(self.y_part, target.b)
        out = matmul_mod(matmul_mod(left, M, p), right, p)
        return out.reshape(-1, target.ring_dim())


def multiply_by_variable(basis: torch.Tensor, d: BiDegree, var: int) -> torch.Tensor:
    """Rows of bidegree d multiplied by x0, x1, x2 or x3 (var = 0..3)."""
    target = d + VARIABLE_DEGREES[var]
    M = basis.reshape(-1, d.a + 1, d.b + 1)
    out = torch.zeros((M.shape[0], target.a + 1, target.b + 1), dtype=DTYPE)
    if var == 0:
        out[:, : d.a + 1, :] = M
    elif var == 1:
        out[:, 1:, :] = M
    elif var == 2:
        out[:, :, : d.b + 1] = M
    else:
        out[:, :, 1:] = M
    return out.reshape(-1, target.ring_dim())


def hasse_rows(c: int, orders: int, degree: int, p: int) -> torch.Tensor:
    """Row u holds the order-u Hasse derivative of y^s at y = c, for s = 0..degree."""
    rows = torch.zeros((orders, degree + 1), dtype=DTYPE)
    for u in range(min(orders, degree + 1)):
        for s in range(u, degree + 1):
            rows[u, s] = comb(s, u) % p * pow(c, s - u, p) % p
    return rows
