"""Generalized minors and the regular functions attached to a distinguished
subexpression: the stagewise matrices g_j, the polynomials psi_{gamma,j},
their linear split in the last variable, and the exact cell test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .mpoly import MPoly, PolyMatrix
from .shuffles import ShuffleSetup, Subexpression
from .slgroup import SLModel, SLPoint
from .weyl import WeylElement


class NotInCell(ValueError):
    """Raised when a point fails the cell membership test."""


def delta_lambda(i: int, x: SLPoint | PolyMatrix) -> Fraction | MPoly:
    """The regular function extending the i-th diagonal torus character:
    the leading principal i x i minor."""
    if not 1 <= i <= x.size - 1:
        raise IndexError(f"minor index {i} out of range 1..{x.size - 1}")
    return x.principal_minor(i)


def gen_minor(
    model: SLModel,
    u: WeylElement,
    v: WeylElement,
    i: int,
    x: SLPoint | PolyMatrix,
) -> Fraction | MPoly:
    """Generalized minor: the principal minor of ubar^{-1} x vbar."""
    ub = model.wbar(u).inv()
    vb = model.wbar(v)
    if isinstance(x, PolyMatrix):
        return delta_lambda(i, ub.to_poly(x.nvars) @ x @ vb.to_poly(x.nvars))
    return delta_lambda(i, ub @ x @ vb)


def submatrix_minor(
    x: SLPoint | PolyMatrix, rows: Sequence[int], cols: Sequence[int]
) -> Fraction | MPoly:
    """Determinant of the submatrix on sorted 1-based row/column sets."""
    rs = sorted(rows)
    cs = sorted(cols)
    if isinstance(x, PolyMatrix):
        sub = PolyMatrix([[x.entry(r - 1, c - 1) for c in cs] for r in rs])
        return sub.det()
    sub = [[x.entry(r - 1, c - 1) for c in cs] for r in rs]
    from .slgroup import _rat_det

    return _rat_det(sub)


class FullSections:
    """The symbolic sections of the full-mask subexpression, with running
    products and exact inverses (each factor is elementary, so inverses are
    polynomial)."""

    def __init__(self, model: SLModel, setup: ShuffleSetup):
        self.model = model
        self.setup = setup
        n = setup.n
        full = setup.subexpression((1 << n) - 1)
        ident = PolyMatrix.identity(model.m, n)
        self.p_prod = [ident]
        self.qinv_prod = [ident]
        for j in range(1, n + 1):
            p, q, p_inv, q_inv = model.section_factors(full, j, MPoly.variable(n, j))
            assert (p @ p_inv).is_identity() and (q @ q_inv).is_identity()
            self.p_prod.append(self.p_prod[-1] @ p)
            self.qinv_prod.append(q_inv @ self.qinv_prod[-1])

    def g_matrix(self, j: int) -> PolyMatrix:
        """The stagewise matrix over z_1..z_j entering the minor functions."""
        if self.setup.eps[j - 1] == -1:
            return self.qinv_prod[j - 1] @ self.p_prod[j]
        return self.qinv_prod[j] @ self.p_prod[j - 1]


@dataclass(frozen=True)
class PsiFamily:
    """The minor functions of one distinguished subexpression, with their
    splits psi_j = L_j + z_j M_j."""

    gamma: Subexpression
    psi: tuple[MPoly, ...]
    L: tuple[MPoly, ...]
    M: tuple[MPoly, ...]

    def evaluate(self, point: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(p.evaluate(point) for p in self.psi)


def g_matrices(model: SLModel, setup: ShuffleSetup) -> tuple[PolyMatrix, ...]:
    sections = FullSections(model, setup)
    return tuple(sections.g_matrix(j) for j in range(1, setup.n + 1))


def psi_family(
    model: SLModel, gamma: Subexpression, sections: FullSections | None = None
) -> PsiFamily:
    """Compute all psi_{gamma,j} symbolically for a distinguished gamma."""
    if not gamma.is_distinguished:
        raise ValueError("minor functions are defined for distinguished subexpressions")
    setup = gamma.setup
    if sections is None:
        sections = FullSections(model, setup)
    nv = setup.n
    psis: list[MPoly] = []
    lows: list[MPoly] = []
    highs: list[MPoly] = []
    for j in range(1, setup.n + 1):
        c = setup.delta_word[j - 1]
        gj = sections.g_matrix(j)
        prev_bar = model.wbar(gamma.gamma_power(j - 1)).inv().to_poly(nv)
        if setup.eps[j - 1] == -1:
            val = delta_lambda(c, prev_bar @ gj)
        else:
            val = delta_lambda(c, gj @ prev_bar)
        for k in range(j + 1, setup.n + 1):
            assert val.degree_in(k) == 0, "psi_j must only involve z_1..z_j"
        low, high = val.coefficient_split(j)
        psis.append(val)
        lows.append(low)
        highs.append(high)
    return PsiFamily(gamma, tuple(psis), tuple(lows), tuple(highs))


def psi_split(family: PsiFamily, j: int) -> tuple[MPoly, MPoly]:
    """The pair (L_j, M_j) with psi_j = L_j + z_j M_j."""
    return family.L[j - 1], family.M[j - 1]


def cell_test_psi(family: PsiFamily, point: Sequence[Fraction]) -> bool:
    """Exact membership test: the minor functions vanish on the forced set
    and are nonzero off the letter set."""
    gamma = family.gamma
    values = family.evaluate(point)
    for j in range(1, gamma.setup.n + 1):
        if j in gamma.J and values[j - 1] != 0:
            return False
        if j not in gamma.I and values[j - 1] == 0:
            return False
    return True


def cor47_coords(
    family: PsiFamily, point: Sequence[Fraction]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """The isomorphism coordinates of an in-cell point: minor values over the
    free letter positions and over the complement of the letter set."""
    if not cell_test_psi(family, point):
        raise NotInCell("point fails the cell membership test")
    values = family.evaluate(point)
    k_part = tuple(values[j - 1] for j in sorted(family.gamma.K))
    gamma = family.gamma
    off = tuple(
        values[j - 1]
        for j in range(1, gamma.setup.n + 1)
        if j not in gamma.I
    )
    return k_part, off


def solve_targets(
    family: PsiFamily, targets: dict[int, Fraction], filler
) -> tuple[Fraction, ...] | None:
    """Solve psi_j(z) = targets[j] sequentially using the linear split.

    Positions without a target get filler() values.  When the leading
    coefficient M_j vanishes at the partial point, the value of psi_j no
    longer depends on z_j: if it already equals the target the coordinate is
    free (filled), otherwise the system is unsolvable and None is returned.
    """
    n = family.gamma.setup.n
    point: list[Fraction] = [Fraction(0)] * n
    for j in range(1, n + 1):
        if j in targets:
            mj = family.M[j - 1].evaluate(point)
            lj = family.L[j - 1].evaluate(point)
            if mj == 0:
                if lj != Fraction(targets[j]):
                    return None
                point[j - 1] = Fraction(filler())
            else:
                point[j - 1] = (Fraction(targets[j]) - lj) / mj
        else:
            point[j - 1] = Fraction(filler())
    return tuple(point)
