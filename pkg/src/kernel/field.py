from dataclasses import dataclass

import torch

from utils.errors import FieldTooSmallError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldConfig:
    p: int = 32003
    seed: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldTooSmallError(f"Field modulus must be prime, got {self.p}")
        if self.p >= 2**31:
            raise FieldTooSmallError(f"Field modulus {self.p} does not fit exact int64 products")


@dataclass(frozen=True)
class LineArrangement:
    """Scalars of the lines H_i: x1 - h_i x0 and V_j: x3 - v_j x2.

    The point P_ij is [1 : h_i] x [1 : v_j].
    """

    h: tuple[int, ...]
    v: tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(set(self.h)) != len(self.h) or len(set(self.v)) != len(self.v):
            raise FieldTooSmallError("Line scalars must be pairwise distinct")


def _distinct_scalars(count: int, field: FieldConfig, offset: int) -> tuple[int, ...]:
    if field.seed == 0:
        return tuple(i + 1 for i in range(count))
    generator = torch.Generator().manual_seed(field.seed + offset)
    chosen: list[int] = []
    while len(chosen) < count:
        x = int(torch.randint(0, field.p, (1,), generator=generator))
        if x not in chosen:
            chosen.append(x)
    return tuple(chosen)


def make_arrangement(rows: int, cols: int, field: FieldConfig) -> LineArrangement:
    if field.p <= rows + cols:
        raise FieldTooSmallError(
            f"Prime {field.p} is too small for a {rows}x{cols} grid; need p > {rows + cols}"
        )
    return LineArrangement(
        h=_distinct_scalars(rows, field, offset=0),
        v=_distinct_scalars(cols, field, offset=7919),
        p=field.p,
    )
