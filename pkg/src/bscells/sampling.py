"""Deterministic rational sampling for the seeded verification suites."""

from __future__ import annotations

import random
from fractions import Fraction
from .shuffles import Subexpression
from .slgroup import SLModel, SLPoint


class RationalSampler:
    """Seeded source of small exact rationals and structured SL matrices."""

    def __init__(self, seed: int, max_num: int = 6, max_den: int = 4):
        self.rng = random.Random(seed)
        self.max_num = max_num
        self.max_den = max_den

    def fraction(self) -> Fraction:
        return Fraction(
            self.rng.randint(-self.max_num, self.max_num),
            self.rng.randint(1, self.max_den),
        )

    def nonzero(self) -> Fraction:
        while True:
            f = self.fraction()
            if f != 0:
                return f

    def cell_pattern(self, gamma: Subexpression) -> tuple[Fraction, ...]:
        """Coordinates vanishing on the forced set, nonzero elsewhere."""
        return tuple(
            Fraction(0) if j in gamma.J else self.nonzero()
            for j in range(1, gamma.setup.n + 1)
        )

    def open_pattern(self, gamma: Subexpression) -> tuple[Fraction, ...]:
        """Zero on J, anything on K, nonzero off I."""
        out = []
        for j in range(1, gamma.setup.n + 1):
            if j in gamma.J:
                out.append(Fraction(0))
            elif j in gamma.I:
                out.append(self.fraction())
            else:
                out.append(self.nonzero())
        return tuple(out)

    def vector(self, n: int) -> tuple[Fraction, ...]:
        return tuple(self.fraction() for _ in range(n))

    def upper(self, model: SLModel, unipotent: bool = False) -> SLPoint:
        m = model.m
        rows = [[Fraction(0)] * m for _ in range(m)]
        diag = self._det_one_diagonal(m) if not unipotent else [Fraction(1)] * m
        for i in range(m):
            rows[i][i] = diag[i]
            for j in range(i + 1, m):
                rows[i][j] = self.fraction()
        return SLPoint(tuple(tuple(r) for r in rows))

    def lower(self, model: SLModel, unipotent: bool = False) -> SLPoint:
        m = model.m
        rows = [[Fraction(0)] * m for _ in range(m)]
        diag = self._det_one_diagonal(m) if not unipotent else [Fraction(1)] * m
        for i in range(m):
            rows[i][i] = diag[i]
            for j in range(i):
                rows[i][j] = self.fraction()
        return SLPoint(tuple(tuple(r) for r in rows))

    def torus(self, model: SLModel) -> SLPoint:
        return model.torus(self._det_one_diagonal(model.m))

    def sl_point(self, model: SLModel) -> SLPoint:
        """A generic determinant-1 matrix: lower * torus * upper."""
        return self.lower(model, unipotent=True) @ self.torus(model) @ self.upper(
            model, unipotent=True
        )

    def _det_one_diagonal(self, m: int) -> list[Fraction]:
        diag = [self.nonzero() for _ in range(m - 1)]
        prod = Fraction(1)
        for d in diag:
            prod *= d
        diag.append(1 / prod)
        return diag
