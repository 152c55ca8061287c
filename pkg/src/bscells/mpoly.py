"""Sparse multivariate polynomials over exact rationals, in variables z1..zn.

Terms are kept in a dict from exponent tuples to nonzero Fraction
coefficients.  The canonical serialization sorts terms by total degree and
then by the reversed exponent tuple, both descending, so higher-indexed
variables dominate ties; parse(str(p)) round-trips.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


def _term_sort_key(expt: tuple[int, ...]) -> tuple:
    return (sum(expt), tuple(reversed(expt)))


class MPoly:
    """An immutable sparse polynomial over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise PolyError(f"exponent tuple {e} has wrong length for nvars={nvars}")
                c = Fraction(c)
                if c != 0:
                    clean[tuple(int(x) for x in e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        if name in ("nvars", "terms") and hasattr(self, "terms"):
            raise AttributeError("MPoly is immutable")
        object.__setattr__(self, name, value)

    @staticmethod
    def constant(nvars: int, c: Scalar) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return MPoly(nvars)
        return MPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars)

    @staticmethod
    def one(nvars: int) -> "MPoly":
        return MPoly.constant(nvars, 1)

    @staticmethod
    def variable(nvars: int, i: int) -> "MPoly":
        """The variable z_i, 1-based."""
        if not 1 <= i <= nvars:
            raise PolyError(f"variable index {i} out of range 1..{nvars}")
        e = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return MPoly(nvars, {e: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree_in(self, i: int) -> int:
        """Highest power of z_i appearing (0 for the zero polynomial)."""
        return max((e[i - 1] for e in self.terms), default=0)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise PolyError("nvars mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise PolyError("negative powers are not defined")
        out = MPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Scalar) -> "MPoly":
        c = Fraction(c)
        return MPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise PolyError(f"point length {len(point)} != nvars {self.nvars}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for x, k in zip(pt, e):
                if k:
                    val *= x**k
            total += val
        return total

    def substitute(self, assignments: Mapping[int, Union[Scalar, "MPoly"]]) -> "MPoly":
        """Substitute values or polynomials for 1-based variable indices."""
        subs: dict[int, MPoly] = {}
        for i, v in assignments.items():
            if not 1 <= i <= self.nvars:
                raise PolyError(f"variable index {i} out of range")
            subs[i] = v if isinstance(v, MPoly) else MPoly.constant(self.nvars, v)
            if subs[i].nvars != self.nvars:
                raise PolyError("substituted polynomial has wrong nvars")
        out = MPoly.zero(self.nvars)
        for e, c in self.terms.items():
            term = MPoly.constant(self.nvars, c)
            for idx, k in enumerate(e, start=1):
                if not k:
                    continue
                factor = subs.get(idx)
                if factor is None:
                    factor = MPoly.variable(self.nvars, idx)
                term = term * factor**k
            out = out + term
        return out

    def coefficient_split(self, i: int) -> tuple["MPoly", "MPoly"]:
        """Write self = A + z_i * B with A free of z_i; requires degree <= 1 in z_i."""
        lo: dict[tuple[int, ...], Fraction] = {}
        hi: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            k = e[i - 1]
            if k == 0:
                lo[e] = c
            elif k == 1:
                hi[tuple(0 if p == i - 1 else x for p, x in enumerate(e))] = c
            else:
                raise PolyError(f"degree in z{i} exceeds 1")
        return MPoly(self.nvars, lo), MPoly(self.nvars, hi)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"z{k + 1}" if p == 1 else f"z{k + 1}^{p}" for k, p in enumerate(e) if p
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    __repr__ = __str__


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>z\d+)|(?P<op>[-+*^]))")


def parse_poly(text: str, nvars: int) -> MPoly:
    """Parse the canonical polynomial text format back into an MPoly."""
    pos = 0
    tokens: list[tuple[str, str]] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyError(f"cannot tokenize polynomial text at {text[pos:]!r}")
            break
        pos = m.end()
        for kind in ("num", "var", "op"):
            if m.group(kind):
                tokens.append((kind, m.group(kind)))
                break
    result = MPoly.zero(nvars)
    i = 0
    sign = 1
    first = True
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            if not first and tokens[i - 1][0] == "op" and tokens[i - 1][1] in "+-":
                raise PolyError("consecutive signs in polynomial text")
            sign = 1 if val == "+" else -1
            i += 1
            continue
        # read one product of factors
        coeff = Fraction(sign)
        expt = [0] * nvars
        expect_factor = True
        while i < len(tokens):
            kind, val = tokens[i]
            if kind == "op" and val == "*":
                i += 1
                expect_factor = True
                continue
            if kind == "op" and val in "+-":
                break
            if not expect_factor:
                break
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                vi = int(val[1:])
                if not 1 <= vi <= nvars:
                    raise PolyError(f"variable {val} out of range for nvars={nvars}")
                power = 1
                if i + 2 < len(tokens) and tokens[i + 1] == ("op", "^") and tokens[i + 2][0] == "num":
                    power = int(tokens[i + 2][1])
                    i += 2
                expt[vi - 1] += power
                i += 1
            else:
                raise PolyError(f"unexpected token {val!r}")
            expect_factor = False
        result = result + MPoly(nvars, {tuple(expt): coeff})
        sign = 1
        first = False
    return result


class PolyMatrix:
    """A square matrix of MPoly entries, immutable."""

    __slots__ = ("size", "nvars", "rows")

    def __init__(self, rows: Sequence[Sequence[MPoly]]):
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise PolyError("matrix must be square")
        nv = rows[0][0].nvars if k else 0
        if any(p.nvars != nv for r in rows for p in r):
            raise PolyError("mixed nvars in matrix entries")
        object.__setattr__(self, "size", k)
        object.__setattr__(self, "nvars", nv)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def identity(size: int, nvars: int) -> "PolyMatrix":
        return PolyMatrix(
            [
                [MPoly.one(nvars) if i == j else MPoly.zero(nvars) for j in range(size)]
                for i in range(size)
            ]
        )

    @staticmethod
    def from_scalar_rows(rows: Sequence[Sequence[Scalar]], nvars: int) -> "PolyMatrix":
        return PolyMatrix(
            [[MPoly.constant(nvars, x) for x in row] for row in rows]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise PolyError("size mismatch")
        k = self.size
        return PolyMatrix(
            [
                [
                    sum(
                        (self.rows[i][m] * other.rows[m][j] for m in range(k)),
                        MPoly.zero(self.nvars),
                    )
                    for j in range(k)
                ]
                for i in range(k)
            ]
        )

    def entry(self, i: int, j: int) -> MPoly:
        return self.rows[i][j]

    def det(self) -> MPoly:
        """Exact determinant by minor expansion memoized over column subsets."""
        return det_on_rows(self.rows, self.nvars)

    def principal_minor(self, k: int) -> MPoly:
        """Determinant of the leading k x k block."""
        sub = tuple(tuple(self.rows[i][j] for j in range(k)) for i in range(k))
        return det_on_rows(sub, self.nvars)

    def evaluate(self, point: Sequence[Scalar]) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(p.evaluate(point) for p in row) for row in self.rows)

    def substitute(self, assignments: Mapping[int, Union[Scalar, MPoly]]) -> "PolyMatrix":
        return PolyMatrix([[p.substitute(assignments) for p in row] for row in self.rows])

    def is_identity(self) -> bool:
        one, zero = MPoly.one(self.nvars), MPoly.zero(self.nvars)
        return all(
            self.rows[i][j] == (one if i == j else zero)
            for i in range(self.size)
            for j in range(self.size)
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.rows[j][i] for j in range(self.size)] for i in range(self.size)]
        )

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(p) for p in row) for row in self.rows) + "]"


def det_on_rows(rows: Sequence[Sequence[MPoly]], nvars: int) -> MPoly:
    """Determinant via Laplace expansion with memoization on column subsets.

    Division-free, so it stays exact over the polynomial ring; at size k it
    performs O(2^k k) polynomial multiplications.
    """
    k = len(rows)
    if k == 0:
        return MPoly.one(nvars)
    cache: dict[int, MPoly] = {0: MPoly.one(nvars)}

    def minor(colmask: int) -> MPoly:
        got = cache.get(colmask)
        if got is not None:
            return got
        cols = [j for j in range(k) if colmask >> j & 1]
        i = k - len(cols)  # expand along row i (rows are consumed top-down)
        total = MPoly.zero(nvars)
        for idx, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero():
                continue
            sub = minor(colmask & ~(1 << j))
            term = entry * sub
            total = total + (term if idx % 2 == 0 else -term)
        cache[colmask] = total
        return total

    return minor((1 << k) - 1)
