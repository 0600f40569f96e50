"""Index sets of the closed-form resolutions and their images in bidegrees.

Four-tuples (a, b, c, d) stand for the summand R(-a*alpha1 - b*alpha2, -c*beta1 - d*beta2),
i.e. the exponents of Q1, Q2, U1, U2.
"""
from collections import Counter
from typing import Iterable

from scheme.params import AciParams, BiDegree, positive_part

Quad = tuple[int, int, int, int]


def aset_w(k: int, m11: int, m12: int, m21: int) -> Counter:
    """A_k of three fat points: one antidiagonal segment per homological degree."""
    excess = positive_part(m12 - m11)
    level = m11 + m21 + excess + k
    if k == 0:
        b_range = range(0, excess + 1)
    elif k == 1:
        b_range = range(1, excess + 1)
    elif k == 2:
        b_range = range(2, excess + 2)
    else:
        raise ValueError(f"Homological degree must be 0, 1 or 2, got {k}")
    return Counter(BiDegree(level - b, b) for b in b_range)


def aset_z(k: int, params: AciParams) -> Counter:
    """A_0(Z) or A_1(Z): the new generators and the syzygies among them."""
    excess = positive_part(params.m12 - params.m11)
    if k == 0:
        steps = range(0, excess + 1)
    elif k == 1:
        steps = range(0, excess)
    else:
        raise ValueError(f"A(Z) is defined for k = 0 or 1, got {k}")
    return Counter(
        BiDegree(
            params.alpha1 * (params.m11 + i + k) + params.alpha2 * params.m21,
            (excess - i) * params.beta2,
        )
        for i in steps
    )


def _antidiagonal(total: int, low: int, high: int) -> Iterable[tuple[int, int]]:
    for x in range(max(low, total - high), min(high, total - low) + 1):
        yield x, total - x


def dset(k: int, m12: int, m21: int) -> list[Quad]:
    """Tensor product of the resolutions of (Q1,U2)^m12 and (Q2,U1)^m21."""
    if k not in (0, 1, 2):
        raise ValueError(f"Homological degree must be 0, 1 or 2, got {k}")
    branches = {0: [(0, 0)], 1: [(1, 0), (0, 1)], 2: [(1, 1)]}[k]
    quads = []
    for extra_ad, extra_bc in branches:
        for a, d in _antidiagonal(m12 + extra_ad, 0, m12):
            for b, c in _antidiagonal(m21 + extra_bc, 0, m21):
                quads.append((a, b, c, d))
    return sorted(quads)


def bset(k: int, n: int, m: int) -> list[Quad]:
    """Equal-multiplicity index sets for m11 = m21 = n and m12 = m, n <= m.

    B0 = {a+d = m, b+c = n, b <= a}; a summand of the first branch of B1 or of B2
    (a+d = m+1) needs b < a <= m, and one with b+c = n+1 needs b >= 1.
    """
    if k not in (0, 1, 2):
        raise ValueError(f"Homological degree must be 0, 1 or 2, got {k}")
    branches = {0: [(0, 0)], 1: [(1, 0), (0, 1)], 2: [(1, 1)]}[k]
    quads = []
    for extra_ad, extra_bc in branches:
        for a in range(0, m + 1):
            d = m + extra_ad - a
            if d < 0:
                continue
            for b in range(extra_bc, n + 1):
                c = n + extra_bc - b
                if b > a or (extra_ad and b == a):
                    continue
                quads.append((a, b, c, d))
    return sorted(quads)


def block_image(quads: Iterable[Quad], params: AciParams) -> Counter:
    """Map (a, b, c, d) to (a*alpha1 + b*alpha2, c*beta1 + d*beta2), adding multiplicities."""
    return Counter(
        BiDegree(a * params.alpha1 + b * params.alpha2, c * params.beta1 + d * params.beta2)
        for a, b, c, d in quads
    )
