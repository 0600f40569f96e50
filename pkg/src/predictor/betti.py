from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from scheme.params import BiDegree

SHIFT_NAMES = ("beta0", "beta1", "beta2")


def _clean(shifts: Mapping[BiDegree, int] | Iterable[BiDegree]) -> dict[BiDegree, int]:
    counts = Counter(shifts) if not isinstance(shifts, Mapping) else Counter(dict(shifts))
    return {d: n for d, n in sorted(counts.items()) if n > 0}


@dataclass(frozen=True)
class BettiTable:
    """Shifts of F0, F1, F2 in 0 -> F2 -> F1 -> F0 -> I -> 0.

    A key (a, b) with value n stands for R(-a, -b)^n.
    """

    beta0: Mapping[BiDegree, int] = field(default_factory=dict)
    beta1: Mapping[BiDegree, int] = field(default_factory=dict)
    beta2: Mapping[BiDegree, int] = field(default_factory=dict)

    def __post_init__(self):
        for name in SHIFT_NAMES:
            object.__setattr__(self, name, _clean(getattr(self, name)))

    @classmethod
    def unit(cls) -> "BettiTable":
        """Table of the unit ideal (empty scheme)."""
        return cls(beta0={BiDegree(0, 0): 1})

    @classmethod
    def from_lists(cls, *modules: Iterable[tuple[int, int, int]]) -> "BettiTable":
        shifts: list[Counter] = [Counter() for _ in range(3)]
        for k, module in enumerate(modules):
            for a, b, n in module:
                shifts[k][BiDegree(a, b)] += n
        return cls(*shifts)

    def module(self, k: int) -> Mapping[BiDegree, int]:
        return getattr(self, SHIFT_NAMES[k])

    def totals(self) -> tuple[int, int, int]:
        return tuple(sum(self.module(k).values()) for k in range(3))  # type: ignore[return-value]

    def rank_identity(self) -> int:
        """sum beta0 - sum beta1 + sum beta2; equals 1 for the ideal of a scheme."""
        t0, t1, t2 = self.totals()
        return t0 - t1 + t2

    def shifted(self, delta: BiDegree) -> "BettiTable":
        return BettiTable(*({d + delta: n for d, n in self.module(k).items()} for k in range(3)))

    def transposed(self) -> "BettiTable":
        return BettiTable(*({d.transposed(): n for d, n in self.module(k).items()} for k in range(3)))

    def __add__(self, other: "BettiTable") -> "BettiTable":
        """Direct sum of the free modules, module by module."""
        return BettiTable(
            *(Counter(self.module(k)) + Counter(other.module(k)) for k in range(3))
        )

    def max_degree(self) -> BiDegree:
        degrees = [d for k in range(3) for d in self.module(k)]
        if not degrees:
            return BiDegree(0, 0)
        return BiDegree(max(d.a for d in degrees), max(d.b for d in degrees))

    def as_lists(self) -> dict[str, list[list[int]]]:
        return {
            name: [[d.a, d.b, n] for d, n in sorted(self.module(k).items())]
            for k, name in enumerate(SHIFT_NAMES)
        }


def euler_hilbert(table: BettiTable, d: BiDegree) -> int:
    """dim I_d read off the resolution: alternating sum of shifted ring dimensions."""
    total = 0
    for k in range(3):
        sign = -1 if k % 2 else 1
        for shift, n in table.module(k).items():
            rest = d.minus(shift)
            if rest is not None:
                total += sign * n * rest.ring_dim()
    return total


def hilbert_series_box(table: BettiTable, box: BiDegree) -> dict[BiDegree, int]:
    return {
        BiDegree(a, b): euler_hilbert(table, BiDegree(a, b))
        for a in range(box.a + 1)
        for b in range(box.b + 1)
    }
