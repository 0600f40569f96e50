import logging
from dataclasses import dataclass
from itertools import product

from kernel.field import FieldConfig, LineArrangement, make_arrangement
from kernel.polynomials import BiPoly, LineProduct, line_product, poly_mul
from scheme.params import AciParams, BiDegree

logger = logging.getLogger(__name__)

# Exponents (a1, a2, b1, b2) on (Q1, Q2, U1, U2).
Exponents = tuple[int, int, int, int]


def satisfies(e: Exponents, mults: tuple[int, int, int], scale: int = 1) -> bool:
    a1, a2, b1, b2 = e
    m11, m12, m21 = mults
    return a1 + b1 >= scale * m11 and a1 + b2 >= scale * m12 and a2 + b1 >= scale * m21


def staircase_exponents(mults: tuple[int, int, int], scale: int = 1) -> list[Exponents]:
    """Minimal exponent tuples with a1+b1 >= s*m11, a1+b2 >= s*m12, a2+b1 >= s*m21."""
    m11, m12, m21 = mults
    bounds = (
        scale * max(m11, m12),
        scale * m21,
        scale * max(m11, m21),
        scale * m12,
    )
    minimal = []
    for e in product(*(range(bound + 1) for bound in bounds)):
        if not satisfies(e, mults, scale):
            continue
        lowered = (e[:k] + (e[k] - 1,) + e[k + 1 :] for k in range(4) if e[k] > 0)
        if not any(satisfies(f, mults, scale) for f in lowered):
            minimal.append(e)
    return minimal


def dominated_free(exponents) -> list[Exponents]:
    """Drop every tuple that is a componentwise multiple of another one."""
    unique = sorted(set(exponents))
    return [
        e
        for e in unique
        if not any(f != e and all(x >= y for x, y in zip(e, f)) for f in unique)
    ]


@dataclass(frozen=True)
class GeneratorFamily:
    params: AciParams
    arrangement: LineArrangement
    exponents: tuple[Exponents, ...]

    def bidegree(self, e: Exponents) -> BiDegree:
        p = self.params
        return BiDegree(e[0] * p.alpha1 + e[1] * p.alpha2, e[2] * p.beta1 + e[3] * p.beta2)

    def form(self, e: Exponents) -> LineProduct:
        """Q1^a1 Q2^a2 U1^b1 U2^b2."""
        arr, p = self.arrangement, self.params
        P = arr.p
        x_part = poly_mul(
            line_product(arr.h[: p.alpha1], e[0], P),
            line_product(arr.h[p.alpha1 : p.alpha1 + p.alpha2], e[1], P),
            P,
        )
        y_part = poly_mul(
            line_product(arr.v[: p.beta1], e[2], P),
            line_product(arr.v[p.beta1 : p.beta1 + p.beta2], e[3], P),
            P,
        )
        return LineProduct(x_part, y_part)

    @property
    def members(self) -> list[tuple[Exponents, BiPoly]]:
        return [(e, self.form(e).as_bipoly(self.arrangement.p)) for e in self.exponents]

    def forms(self) -> list[LineProduct]:
        return [self.form(e) for e in self.exponents]

    def power_exponents(self, m: int) -> list[Exponents]:
        """Exponents of all products of m members, without redundant multiples."""
        sums: set[Exponents] = {(0, 0, 0, 0)}
        for _ in range(m):
            sums = {
                tuple(x + y for x, y in zip(s, e))  # type: ignore[misc]
                for s in sums
                for e in self.exponents
            }
            sums = set(dominated_free(sums))
        return sorted(sums)


def realize(params: AciParams, field: FieldConfig) -> tuple[LineArrangement, GeneratorFamily]:
    arrangement = make_arrangement(params.alpha1 + params.alpha2, params.beta1 + params.beta2, field)
    exponents = tuple(staircase_exponents(params.mults))
    logger.debug("Realized %s with %d staircase generators", params.as_tuple(), len(exponents))
    return arrangement, GeneratorFamily(params, arrangement, exponents)
