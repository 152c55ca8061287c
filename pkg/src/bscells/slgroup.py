"""The SL(m, Q) realization: Chevalley generators, Weyl representatives,
Gaussian decomposition, the opposite-Bruhat class of a matrix, chart
sections, the stagewise flag invariant, and exact chart-coordinate
extraction.

Everything is exact over the rationals; conjugation signs are never assumed,
they come out of matrix arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cartan import Weight, is_type_a
from .mpoly import MPoly, PolyMatrix
from .shuffles import Subexpression
from .weyl import WeylElement, WeylGroup


class DecompositionUndefined(ValueError):
    """A leading principal minor vanishes, so the LDU factorization does not exist."""


class FactorizationFailed(ValueError):
    """A pivot needed by chart-coordinate extraction vanished."""


class SLPoint:
    """An m x m rational matrix of determinant 1."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: tuple[tuple[Fraction, ...], ...]):
        object.__setattr__(self, "size", len(rows))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SLPoint is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "SLPoint":
        t = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if any(len(r) != len(t) for r in t):
            raise ValueError("matrix must be square")
        p = SLPoint(t)
        if p.det() != 1:
            raise ValueError("matrix determinant must be exactly 1")
        return p

    @staticmethod
    def identity(m: int) -> "SLPoint":
        return SLPoint(tuple(tuple(Fraction(1 if i == j else 0) for j in range(m)) for i in range(m)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SLPoint):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "SLPoint") -> "SLPoint":
        # zero-skipping accumulation: most factors here are near-identity
        m = self.size
        a, b = self.rows, other.rows
        zero = Fraction(0)
        out = []
        for i in range(m):
            arow = a[i]
            acc = [zero] * m
            for k in range(m):
                x = arow[k]
                if x:
                    brow = b[k]
                    for j in range(m):
                        y = brow[j]
                        if y:
                            acc[j] = acc[j] + x * y
            out.append(tuple(acc))
        return SLPoint(tuple(out))

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def det(self) -> Fraction:
        return _rat_det([list(r) for r in self.rows])

    def inv(self) -> "SLPoint":
        m = self.size
        aug = [
            [Fraction(x) for x in self.rows[i]]
            + [Fraction(1 if i == j else 0) for j in range(m)]
            for i in range(m)
        ]
        for col in range(m):
            piv = next((r for r in range(col, m) if aug[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            d = aug[col][col]
            aug[col] = [x / d for x in aug[col]]
            for r in range(m):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return SLPoint(tuple(tuple(row[m:]) for row in aug))

    def is_upper(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.size) for j in range(i))

    def is_lower(self) -> bool:
        return all(self.rows[i][j] == 0 for j in range(self.size) for i in range(j))

    def is_upper_unitriangular(self) -> bool:
        return self.is_upper() and all(self.rows[i][i] == 1 for i in range(self.size))

    def is_lower_unitriangular(self) -> bool:
        return self.is_lower() and all(self.rows[i][i] == 1 for i in range(self.size))

    def is_diagonal(self) -> bool:
        return self.is_upper() and self.is_lower()

    def is_identity(self) -> bool:
        return self == SLPoint.identity(self.size)

    def principal_minor(self, k: int) -> Fraction:
        return _rat_det([[self.rows[i][j] for j in range(k)] for i in range(k)])

    def to_poly(self, nvars: int) -> PolyMatrix:
        return PolyMatrix.from_scalar_rows(self.rows, nvars)

    def __repr__(self) -> str:
        return "SLPoint(" + "; ".join(
            ", ".join(str(x) for x in row) for row in self.rows
        ) + ")"


def _rat_det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


SLPolyMat = PolyMatrix


def _poly_single_off_diagonal(mat: PolyMatrix) -> tuple[int, int, MPoly] | None:
    """If mat = I + c E_{ab} with a != b, return (a, b, c); else None."""
    m = mat.size
    one, zero = MPoly.one(mat.nvars), MPoly.zero(mat.nvars)
    found = None
    for i in range(m):
        if mat.entry(i, i) != one:
            return None
        for j in range(m):
            if i != j and mat.entry(i, j) != zero:
                if found is not None:
                    return None
                found = (i, j, mat.entry(i, j))
    return found if found is not None else (0, 1, zero)


@dataclass(frozen=True)
class ChartPoint:
    """Rational chart coordinates attached to a subexpression."""

    gamma: Subexpression
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.gamma.setup.n:
            raise ValueError("coordinate vector has wrong length")

    def vanishes_on_forced_set(self) -> bool:
        return all(self.coords[j - 1] == 0 for j in self.gamma.J)

    def in_open_pattern(self) -> bool:
        """Zero on J, unconstrained on K, nonzero off I."""
        return self.vanishes_on_forced_set() and all(
            self.coords[j - 1] != 0
            for j in range(1, self.gamma.setup.n + 1)
            if j not in self.gamma.I
        )


class SLModel:
    """Matrix realization of a type-A Weyl group inside SL(rank+1, Q)."""

    def __init__(self, group: WeylGroup):
        if not is_type_a(group.data):
            raise ValueError("the SL matrix model requires a type-A Cartan matrix")
        self.group = group
        self.m = group.rank + 1
        self._wbar_cache: dict[tuple, SLPoint] = {}
        self._rep_cache: dict[Subexpression, tuple[tuple[SLPoint, ...], tuple[SLPoint, ...]]] = {}

    # Chevalley generators -------------------------------------------------

    def x_plus(self, i: int, z) -> SLPoint | PolyMatrix:
        """One-parameter upper generator: identity plus z in entry (i, i+1)."""
        return self._one_param(i - 1, i, z)

    def x_minus(self, i: int, z) -> SLPoint | PolyMatrix:
        return self._one_param(i, i - 1, z)

    def _one_param(self, a: int, b: int, z) -> SLPoint | PolyMatrix:
        if not (0 <= min(a, b) and max(a, b) < self.m):
            raise IndexError("generator index out of range")
        if isinstance(z, MPoly):
            rows = [
                [MPoly.one(z.nvars) if i == j else MPoly.zero(z.nvars) for j in range(self.m)]
                for i in range(self.m)
            ]
            rows[a][b] = z
            return PolyMatrix(rows)
        rows = [[Fraction(1 if i == j else 0) for j in range(self.m)] for i in range(self.m)]
        rows[a][b] = Fraction(z)
        return SLPoint(tuple(tuple(r) for r in rows))

    def sbar(self, i: int) -> SLPoint:
        """Representative of the i-th simple reflection: block [[0,-1],[1,0]]."""
        self.group.data._check_index(i)
        rows = [[Fraction(1 if r == c else 0) for c in range(self.m)] for r in range(self.m)]
        a = i - 1
        rows[a][a] = rows[a + 1][a + 1] = Fraction(0)
        rows[a][a + 1] = Fraction(-1)
        rows[a + 1][a] = Fraction(1)
        return SLPoint(tuple(tuple(r) for r in rows))

    def coroot_torus(self, i: int, t: Fraction) -> SLPoint:
        """diag(1, .., t, t^{-1}, .., 1) with t at position i."""
        t = Fraction(t)
        if t == 0:
            raise ValueError("torus parameter must be nonzero")
        rows = [[Fraction(1 if r == c else 0) for c in range(self.m)] for r in range(self.m)]
        rows[i - 1][i - 1] = t
        rows[i][i] = 1 / t
        return SLPoint(tuple(tuple(r) for r in rows))

    def torus(self, diag: Sequence[Fraction]) -> SLPoint:
        d = [Fraction(x) for x in diag]
        if len(d) != self.m:
            raise ValueError("diagonal has wrong length")
        prod = Fraction(1)
        for x in d:
            prod *= x
        if prod != 1:
            raise ValueError("torus element must have determinant 1")
        rows = [[d[i] if i == j else Fraction(0) for j in range(self.m)] for i in range(self.m)]
        return SLPoint(tuple(tuple(r) for r in rows))

    def torus_character(self, h: SLPoint, lam: Weight) -> Fraction:
        """h^lam for diagonal h: the product of the leading-diagonal partial
        products raised to the fundamental-weight coordinates of lam."""
        if not h.is_diagonal():
            raise ValueError("character evaluation needs a diagonal matrix")
        out = Fraction(1)
        partial = Fraction(1)
        for i, c in enumerate(lam.coords, start=1):
            partial *= h.entry(i - 1, i - 1)
            if c:
                out *= partial**c
        return out

    def wbar(self, w: WeylElement) -> SLPoint:
        """Canonical representative: product of simple representatives along
        the canonical reduced word (word-independent)."""
        key = w.root_action
        got = self._wbar_cache.get(key)
        if got is None:
            got = SLPoint.identity(self.m)
            for i in self.group.reduced_word(w):
                got = got @ self.sbar(i)
            self._wbar_cache[key] = got
        return got

    def wbar_from_word(self, word: Sequence[int]) -> SLPoint:
        out = SLPoint.identity(self.m)
        for i in word:
            out = out @ self.sbar(i)
        return out

    # Decompositions --------------------------------------------------------

    def gauss_ldu(self, x: SLPoint) -> tuple[SLPoint, SLPoint, SLPoint]:
        """x = n_minus h n_plus with unitriangular factors and diagonal h.

        Exists iff all leading principal minors are nonzero."""
        m = x.size
        u = [list(row) for row in x.rows]
        lower = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
        for k in range(m):
            if u[k][k] == 0:
                raise DecompositionUndefined(
                    f"leading principal minor of order {k + 1} vanishes"
                )
            for r in range(k + 1, m):
                if u[r][k]:
                    f = u[r][k] / u[k][k]
                    lower[r][k] = f
                    u[r] = [a - f * b for a, b in zip(u[r], u[k])]
        h = [[u[i][i] if i == j else Fraction(0) for j in range(m)] for i in range(m)]
        n_plus = [[u[i][j] / u[i][i] for j in range(m)] for i in range(m)]
        return (
            SLPoint(tuple(tuple(r) for r in lower)),
            SLPoint(tuple(tuple(r) for r in h)),
            SLPoint(tuple(tuple(r) for r in n_plus)),
        )

    def bruhat_class(self, x: SLPoint) -> WeylElement:
        """The unique w with x in B_- w B.

        Left multiplication by lower-triangular matrices and right
        multiplication by upper-triangular ones preserve the ranks of all
        northwest submatrices, and those ranks pin down a permutation: scan
        columns left to right, take the topmost surviving nonzero row as the
        pivot, then clear below it and to its right.
        """
        m = x.size
        work = [list(row) for row in x.rows]
        perm = [-1] * m
        for col in range(m):
            piv = next((r for r in range(m) if work[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix has no Bruhat class")
            perm[col] = piv
            for r in range(piv + 1, m):
                if work[r][col]:
                    f = work[r][col] / work[piv][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[piv])]
            for cc in range(col + 1, m):
                work[piv][cc] = Fraction(0)
        return self.perm_to_element(tuple(p + 1 for p in perm))

    def perm_of_element(self, w: WeylElement) -> tuple[int, ...]:
        """One-line permutation (1-based): column j of wbar(w) hits row perm[j]."""
        mat = self.wbar(w)
        out = []
        for j in range(self.m):
            nz = [i for i in range(self.m) if mat.entry(i, j) != 0]
            assert len(nz) == 1
            out.append(nz[0] + 1)
        return tuple(out)

    def perm_to_element(self, perm: Sequence[int]) -> WeylElement:
        """Inverse of perm_of_element: sort by adjacent transpositions."""
        p = [x - 1 for x in perm]
        if sorted(p) != list(range(self.m)):
            raise ValueError("not a permutation")
        word = []
        changed = True
        while changed:
            changed = False
            for i in range(self.m - 1):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    word.append(i + 1)
                    changed = True
        return self.group.from_word(reversed(word))

    # Chart sections ---------------------------------------------------------

    def rep_powers(self, gamma: Subexpression) -> tuple[SLPoint, ...]:
        """Stagewise representatives: products of the chosen simple
        representatives, multiplied on the side dictated by the sign sequence.
        Index j holds the representative of gamma^j (entry 0 is the identity).
        """
        return self._rep_powers_with_inverses(gamma)[0]

    def _rep_powers_with_inverses(
        self, gamma: Subexpression
    ) -> tuple[tuple[SLPoint, ...], tuple[SLPoint, ...]]:
        got = self._rep_cache.get(gamma)
        if got is not None:
            return got
        setup = gamma.setup
        ident = SLPoint.identity(self.m)
        out = [ident]
        out_inv = [ident]
        cur = cur_inv = ident
        for j in range(1, setup.n + 1):
            if gamma.takes_letter(j):
                rep = self.sbar(setup.delta_word[j - 1])
                rep_inv = rep.inv()
                if setup.eps[j - 1] == -1:
                    cur, cur_inv = cur @ rep, rep_inv @ cur_inv
                else:
                    cur, cur_inv = rep @ cur, cur_inv @ rep_inv
            out.append(cur)
            out_inv.append(cur_inv)
        got = (tuple(out), tuple(out_inv))
        self._rep_cache[gamma] = got
        return got

    def section_pq(self, gamma: Subexpression, j: int, z) -> tuple:
        """The canonical section pair (p, q) at position j, for rational or
        polynomial z."""
        p, q, _, _ = self.section_factors(gamma, j, z)
        return p, q

    def section_factors(self, gamma: Subexpression, j: int, z) -> tuple:
        """The section pair (p, q) together with exact inverses, for rational
        or polynomial z.  Each factor is elementary (a one-parameter element,
        possibly times a simple representative), so inverses are structural:
        the conjugated factor is a single root-group element and its
        triangular projection is read off directly."""
        setup = gamma.setup
        c = setup.delta_word[j - 1]
        taken = gamma.takes_letter(j)
        symbolic = isinstance(z, MPoly)
        nvars = z.nvars if symbolic else None
        reps, reps_inv = self._rep_powers_with_inverses(gamma)
        rep_prev, rep_prev_inv = reps[j - 1], reps_inv[j - 1]

        def lift(mat: SLPoint):
            return mat.to_poly(nvars) if symbolic else mat

        if setup.eps[j - 1] == -1:
            # x_{-gamma_j alpha_j}(z): the letter flips the root sign
            if taken:
                xf, xf_inv = self.x_plus(c, z), self.x_plus(c, -z)
                p = xf @ lift(self.sbar(c))
                p_inv = lift(self.sbar(c).inv()) @ xf_inv
            else:
                xf, xf_inv = self.x_minus(c, z), self.x_minus(c, -z)
                p, p_inv = xf, xf_inv
            conj = lift(rep_prev) @ xf @ lift(rep_prev_inv)
            q = self._project_root_element(conj, lower=True, symbolic=symbolic)
            q_inv = self._negate_root_element(q, symbolic)
        else:
            if taken:
                xf, xf_inv = self.x_minus(c, z), self.x_minus(c, -z)
                q = xf @ lift(self.sbar(c).inv())
                q_inv = lift(self.sbar(c)) @ xf_inv
            else:
                xf, xf_inv = self.x_plus(c, z), self.x_plus(c, -z)
                q, q_inv = xf, xf_inv
            conj = lift(rep_prev_inv) @ xf @ lift(rep_prev)
            p = self._project_root_element(conj, lower=False, symbolic=symbolic)
            p_inv = self._negate_root_element(p, symbolic)
        return p, q, p_inv, q_inv

    def _negate_root_element(self, mat, symbolic: bool):
        """Inverse of I + c E_{ab}: flip the sign of the off-diagonal entry."""
        if symbolic:
            found = _poly_single_off_diagonal(mat)
            if found is None:
                raise ValueError("matrix is not a single root-group element")
            a, b, c = found
            if c.is_zero():
                return mat
            return self._one_param(a, b, -c)
        m = mat.size
        for i in range(m):
            for jj in range(m):
                if i != jj and mat.entry(i, jj) != 0:
                    return self._one_param(i, jj, -mat.entry(i, jj))
        return mat

    def _project_root_element(self, conj, lower: bool, symbolic: bool):
        """[x]_- or [x]_+ of a matrix known to be identity plus one off-diagonal entry."""
        if symbolic:
            found = _poly_single_off_diagonal(conj)
            if found is None:
                raise ValueError("conjugate is not a single root-group element")
            a, b, c = found
            keep = a > b if lower else a < b
            if not keep or c.is_zero():
                return PolyMatrix.identity(conj.size, conj.nvars)
            return self._one_param(a, b, c)
        m = conj.size
        found = None
        for i in range(m):
            if conj.entry(i, i) != 1:
                raise ValueError("conjugate is not a single root-group element")
            for jj in range(m):
                if i != jj and conj.entry(i, jj) != 0:
                    if found is not None:
                        raise ValueError("conjugate is not a single root-group element")
                    found = (i, jj, conj.entry(i, jj))
        if found is None:
            return SLPoint.identity(m)
        a, b, c = found
        keep = a > b if lower else a < b
        return self._one_param(a, b, c) if keep else SLPoint.identity(m)

    def point_tuple(self, cp: ChartPoint) -> tuple[tuple[SLPoint, SLPoint], ...]:
        """Evaluate the canonical section at rational coordinates."""
        return tuple(
            self.section_pq(cp.gamma, j, cp.coords[j - 1])
            for j in range(1, cp.gamma.setup.n + 1)
        )

    def stage_product(self, gamma: Subexpression, coords: Sequence[Fraction], upto: int | None = None) -> SLPoint:
        """(q_1 .. q_j)^{-1} p_1 .. p_j at rational coordinates."""
        setup = gamma.setup
        j_max = setup.n if upto is None else upto
        p_prod = SLPoint.identity(self.m)
        qinv_prod = SLPoint.identity(self.m)
        for j in range(1, j_max + 1):
            p, _, _, q_inv = self.section_factors(gamma, j, Fraction(coords[j - 1]))
            p_prod = p_prod @ p
            qinv_prod = q_inv @ qinv_prod
        return qinv_prod @ p_prod

    def alternating_product(self, gamma: Subexpression, coords: Sequence[Fraction]) -> SLPoint:
        """The full alternating product; with coordinates vanishing on the
        forced-zero set it collapses to the stagewise representative."""
        coords = [Fraction(x) for x in coords]
        if any(coords[j - 1] != 0 for j in gamma.J):
            raise ValueError("coordinates must vanish on the forced-zero positions")
        return self.stage_product(gamma, coords)

    def phi_n(self, pairs: Sequence[tuple[SLPoint, SLPoint]]) -> tuple[WeylElement, ...]:
        """Stagewise flag invariant: the opposite-Bruhat class of each partial
        quotient (h_1..h_j)^{-1} g_1..g_j."""
        out = []
        quotient = SLPoint.identity(self.m)
        for g, h in pairs:
            # (H h)^{-1} G g = h^{-1} (H^{-1} G) g, updated incrementally
            quotient = h.inv() @ quotient @ g
            out.append(self.bruhat_class(quotient))
        return tuple(out)

    def phi_of_chart_point(self, cp: ChartPoint) -> tuple[WeylElement, ...]:
        gamma = cp.gamma
        out = []
        quotient = SLPoint.identity(self.m)
        for j in range(1, gamma.setup.n + 1):
            p, _, _, q_inv = self.section_factors(gamma, j, cp.coords[j - 1])
            quotient = q_inv @ quotient @ p
            out.append(self.bruhat_class(quotient))
        return tuple(out)

    # Chart-coordinate extraction ---------------------------------------------

    def chart_coords(
        self, chart: Subexpression, pairs: Sequence[tuple[SLPoint, SLPoint]]
    ) -> tuple[Fraction, ...]:
        """Extract the chart coordinates of a point given by a section tuple.

        Peels one pair at a time: after correcting by the accumulated
        upper/lower factors, a single matrix entry forces z_j; the leftover
        factors must stay in B and B_-, which is asserted at every step.
        Raises FactorizationFailed when a required pivot vanishes (the point
        is not in this chart).
        """
        setup = chart.setup
        beta = SLPoint.identity(self.m)
        beta_minus = SLPoint.identity(self.m)
        coords: list[Fraction] = []
        for j in range(1, setup.n + 1):
            g_mat = beta @ pairs[j - 1][0]
            h_mat = beta_minus @ pairs[j - 1][1]
            c = setup.delta_word[j - 1]
            a = c - 1
            taken = chart.takes_letter(j)
            if setup.eps[j - 1] == -1:
                if taken:
                    piv = g_mat.entry(a + 1, a)
                    if piv == 0:
                        raise FactorizationFailed(f"pivot vanished at position {j}")
                    z = g_mat.entry(a, a) / piv
                else:
                    piv = g_mat.entry(a, a)
                    if piv == 0:
                        raise FactorizationFailed(f"pivot vanished at position {j}")
                    z = g_mat.entry(a + 1, a) / piv
            else:
                if taken:
                    piv = h_mat.entry(a, a + 1)
                    if piv == 0:
                        raise FactorizationFailed(f"pivot vanished at position {j}")
                    z = h_mat.entry(a + 1, a + 1) / piv
                else:
                    piv = h_mat.entry(a + 1, a + 1)
                    if piv == 0:
                        raise FactorizationFailed(f"pivot vanished at position {j}")
                    z = h_mat.entry(a, a + 1) / piv
            _, _, p_inv, q_inv = self.section_factors(chart, j, z)
            beta = p_inv @ g_mat
            beta_minus = q_inv @ h_mat
            if not (beta.is_upper() and all(beta.entry(i, i) != 0 for i in range(self.m))):
                raise FactorizationFailed(f"leftover factor left the upper Borel at position {j}")
            if not (beta_minus.is_lower() and all(beta_minus.entry(i, i) != 0 for i in range(self.m))):
                raise FactorizationFailed(f"leftover factor left the lower Borel at position {j}")
            coords.append(z)
        return tuple(coords)

    def factorize_to_z(self, gamma: Subexpression, xi: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of the point u_gamma(xi) in the chart of the full mask.

        Requires gamma distinguished and xi in the open pattern (zero on the
        forced set, nonzero off the letter set)."""
        if not gamma.is_distinguished:
            raise ValueError("factorization requires a distinguished subexpression")
        cp = ChartPoint(gamma, tuple(Fraction(x) for x in xi))
        if not cp.in_open_pattern():
            raise ValueError(
                "coordinates must vanish on the forced-zero set and be nonzero off the letter set"
            )
        full = gamma.setup.subexpression((1 << gamma.setup.n) - 1)
        return self.chart_coords(full, self.point_tuple(cp))

    def dictionary_signs(
        self, gamma: Subexpression, coords: Sequence[Fraction]
    ) -> tuple[int, ...] | None:
        """Search sign flips relating the section parametrization to the
        conjugated-generator parametrization of the same stratum.

        For a distinguished subexpression and coordinates vanishing on the
        forced set, finds signs eps_k such that the flag pair of the section
        tuple equals g_1(eps_1 z_1) .. g_n(eps_n z_n) applied to the base
        flags, where g_k conjugates a one-parameter generator by the
        one-sided representative.  Returns None if no sign vector works.
        """
        setup = gamma.setup
        n = setup.n
        coords = [Fraction(x) for x in coords]
        if any(coords[j - 1] != 0 for j in gamma.J):
            raise ValueError("coordinates must vanish on the forced-zero positions")
        p_prods = [SLPoint.identity(self.m)]
        q_prods = [SLPoint.identity(self.m)]
        for j in range(1, n + 1):
            p, q = self.section_pq(gamma, j, coords[j - 1])
            p_prods.append(p_prods[-1] @ p)
            q_prods.append(q_prods[-1] @ q)
        ubars = [self.wbar(gamma.gamma_u_power(j)) for j in range(n + 1)]
        vbars = [self.wbar(gamma.gamma_v_power(j)) for j in range(n + 1)]

        def g_factor(k: int, t: Fraction) -> SLPoint:
            if k in gamma.J:
                return SLPoint.identity(self.m)
            c = setup.delta_word[k - 1]
            if setup.eps[k - 1] == 1:
                wb = vbars[k]
                x = self.x_plus(c, t)
            else:
                wb = ubars[k]
                x = self.x_minus(c, t)
            return wb @ x @ wb.inv()

        def is_sign_diagonal(h: SLPoint) -> bool:
            return h.is_diagonal() and all(
                h.entry(i, i) in (1, -1) for i in range(self.m)
            )

        found: list[tuple[int, ...]] = []

        def dfs(j: int, acc: SLPoint, signs: list[int]) -> bool:
            if j > n:
                found.append(tuple(signs))
                return True
            options = (1,) if (j in gamma.J or coords[j - 1] == 0) else (1, -1)
            for s in options:
                nxt = acc @ g_factor(j, s * coords[j - 1])
                h = ubars[j] @ p_prods[j].inv() @ nxt
                if is_sign_diagonal(h):
                    signs.append(s)
                    if dfs(j + 1, nxt, signs):
                        return True
                    signs.pop()
            return False

        if not dfs(1, SLPoint.identity(self.m), []):
            return None
        signs = found[0]
        g_total = SLPoint.identity(self.m)
        for k in range(1, n + 1):
            g_total = g_total @ g_factor(k, signs[k - 1] * coords[k - 1])
        flag_b = p_prods[n].inv() @ g_total @ ubars[n]
        flag_bm = q_prods[n].inv() @ g_total @ vbars[n]
        ok = (
            flag_b.is_upper()
            and all(flag_b.entry(i, i) != 0 for i in range(self.m))
            and flag_bm.is_lower()
            and all(flag_bm.entry(i, i) != 0 for i in range(self.m))
        )
        return signs if ok else None

    def tuples_equal_as_points(
        self,
        a: Sequence[tuple[SLPoint, SLPoint]],
        b: Sequence[tuple[SLPoint, SLPoint]],
    ) -> bool:
        """Exact equality in the quotient: solve the chain of Borel factors
        greedily; the tuples agree iff every solved factor stays triangular."""
        beta = SLPoint.identity(self.m)
        beta_minus = SLPoint.identity(self.m)
        for (g1, h1), (g2, h2) in zip(a, b, strict=True):
            beta = g1.inv() @ beta @ g2
            beta_minus = h1.inv() @ beta_minus @ h2
            if not (beta.is_upper() and all(beta.entry(i, i) != 0 for i in range(self.m))):
                return False
            if not (
                beta_minus.is_lower()
                and all(beta_minus.entry(i, i) != 0 for i in range(self.m))
            ):
                return False
        return True
