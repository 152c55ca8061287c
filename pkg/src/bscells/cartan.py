"""Finite-type Cartan data: simple roots, coroots, fundamental weights, pairings.

Conventions used throughout the package:

* the Cartan matrix is ``A[i][j] = (alpha_j, alphacheck_i)`` (pairing of the
  j-th simple root against the i-th simple coroot), so ``A[i][i] = 2``;
* weights are stored as integer vectors in the fundamental-weight basis, so
  the pairing ``(lam, alphacheck_k)`` is a single coordinate read;
* roots are stored as integer vectors in the simple-root basis.

Simple-root indices are 1-based in the public API, matching the usual
labelling ``A3 -> alpha_1, alpha_2, alpha_3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class CartanError(ValueError):
    """Raised for Cartan matrices that are not of finite crystallographic type."""


def _principal_minors_positive(a: Sequence[Sequence[int]]) -> bool:
    """Check all leading principal minors are > 0 (finite-type test)."""
    n = len(a)
    for k in range(1, n + 1):
        m = [[Fraction(a[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for col in range(k):
            piv = next((r for r in range(col, k) if m[r][col] != 0), None)
            if piv is None:
                return False
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, k):
                f = m[r][col] / m[col][col]
                if f:
                    m[r] = [m[r][c] - f * m[col][c] for c in range(k)]
        if det <= 0:
            return False
    return True


@dataclass(frozen=True)
class CartanData:
    """A finite-type Cartan matrix together with its symbolic label."""

    rank: int
    cartan: tuple[tuple[int, ...], ...]
    type_label: str = "custom"

    def __post_init__(self) -> None:
        a = self.cartan
        if self.rank < 1 or len(a) != self.rank or any(len(row) != self.rank for row in a):
            raise CartanError(f"cartan matrix must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            if a[i][i] != 2:
                raise CartanError("diagonal Cartan entries must equal 2")
            for j in range(self.rank):
                if i != j:
                    if a[i][j] > 0:
                        raise CartanError("off-diagonal Cartan entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise CartanError("zero pattern of the Cartan matrix must be symmetric")
        if not _principal_minors_positive(a):
            raise CartanError("Cartan matrix is not of finite type (nonpositive principal minor)")

    def entry(self, i: int, j: int) -> int:
        """Pairing (alpha_j, alphacheck_i), with 1-based indices."""
        self._check_index(i)
        self._check_index(j)
        return self.cartan[i - 1][j - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple-root index {i} out of range 1..{self.rank}")


@dataclass(frozen=True)
class Weight:
    """An integral weight in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def pair_coroot(self, k: int) -> int:
        """Pairing (self, alphacheck_k), 1-based k."""
        return self.coords[k - 1]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class RootVector:
    """A vector in the simple-root basis."""

    coords: tuple[int, ...]

    def is_positive(self) -> bool:
        """Nonzero with all coordinates >= 0 (valid test for roots in finite type)."""
        return any(self.coords) and all(c >= 0 for c in self.coords)

    def is_negative(self) -> bool:
        return any(self.coords) and all(c <= 0 for c in self.coords)

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))


def fundamental_weight(data: CartanData, i: int) -> Weight:
    data._check_index(i)
    return Weight(tuple(1 if k == i - 1 else 0 for k in range(data.rank)))


def simple_root_as_weight(data: CartanData, i: int) -> Weight:
    """alpha_i written in the fundamental-weight basis: coordinate k is (alpha_i, alphacheck_k)."""
    data._check_index(i)
    return Weight(tuple(data.cartan[k][i - 1] for k in range(data.rank)))


def reflect_weight(data: CartanData, i: int, lam: Weight) -> Weight:
    """Simple reflection s_i lam = lam - (lam, alphacheck_i) alpha_i."""
    data._check_index(i)
    c = lam.pair_coroot(i)
    if c == 0:
        return lam
    alpha = simple_root_as_weight(data, i)
    return Weight(tuple(x - c * a for x, a in zip(lam.coords, alpha.coords)))


def r_alpha(data: CartanData, i: int, x: Weight) -> Weight:
    """The (non-involutive) operator r_i x = x - (x, alphacheck_i) lambda_i.

    In fundamental-weight coordinates this zeroes the i-th coordinate.
    """
    data._check_index(i)
    return Weight(tuple(0 if k == i - 1 else c for k, c in enumerate(x.coords)))


def reflect_root(data: CartanData, i: int, beta: RootVector) -> RootVector:
    """Simple reflection on the root lattice: s_i alpha_j = alpha_j - A[i][j] alpha_i."""
    data._check_index(i)
    row = data.cartan[i - 1]
    pairing = sum(row[j] * beta.coords[j] for j in range(data.rank))
    return RootVector(
        tuple(c - pairing if k == i - 1 else c for k, c in enumerate(beta.coords))
    )


def positive_roots(data: CartanData) -> tuple[RootVector, ...]:
    """All positive roots, computed by closing the simple roots under reflections."""
    simple = [RootVector(tuple(1 if k == i else 0 for k in range(data.rank))) for i in range(data.rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, data.rank + 1):
                img = reflect_root(data, i, beta)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    pos = sorted((r for r in seen if r.is_positive()), key=lambda r: (sum(r.coords), r.coords))
    return tuple(pos)


_SERIES = {"A", "B", "C", "D", "E", "F", "G"}


def _series_matrix(series: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if series == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif series == "B":
        # alpha_n short: (alpha_n, alphacheck_{n-1}) = -1, (alpha_{n-1}, alphacheck_n) = -2
        if n < 2:
            raise CartanError("type B needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif series == "C":
        if n < 2:
            raise CartanError("type C needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif series == "D":
        if n < 4:
            raise CartanError("type D needs rank >= 4")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif series == "E":
        if n not in (6, 7, 8):
            raise CartanError("type E needs rank 6, 7 or 8")
        # Bourbaki labelling: node 2 attaches to node 4 of the chain 1-3-4-5-...-n.
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for x, y in zip(chain, chain[1:]):
            link(x - 1, y - 1)
        link(2 - 1, 4 - 1)
    elif series == "F":
        if n != 4:
            raise CartanError("type F needs rank 4")
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif series == "G":
        if n != 2:
            raise CartanError("type G needs rank 2")
        link(0, 1, -1, -3)
    return a


def cartan_from_label(label: str) -> CartanData:
    """Parse a finite-type label such as "A3", "B2", "D4", "G2", "F4" or "E6"."""
    label = label.strip()
    if len(label) < 2 or label[0].upper() not in _SERIES or not label[1:].isdigit():
        raise CartanError(f"unrecognised Cartan type label: {label!r}")
    series = label[0].upper()
    n = int(label[1:])
    if n < 1:
        raise CartanError(f"rank must be positive in label {label!r}")
    a = _series_matrix(series, n)
    return CartanData(rank=n, cartan=tuple(tuple(row) for row in a), type_label=f"{series}{n}")


def cartan_from_matrix(rows: Sequence[Sequence[int]]) -> CartanData:
    """Build CartanData from an explicit integer matrix, validating finite type."""
    t = tuple(tuple(int(x) for x in row) for row in rows)
    return CartanData(rank=len(t), cartan=t, type_label="custom")


def is_type_a(data: CartanData) -> bool:
    """Structural test for the type-A Cartan matrix (labels are not trusted)."""
    n = data.rank
    for i in range(n):
        for j in range(n):
            want = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if data.cartan[i][j] != want:
                return False
    return True
