"""Weyl group arithmetic: elements, length, reduced words, Bruhat order,
the Demazure monoid product and its two "min" companions.

Elements are stored by their integer action on the simple-root basis, so
equality is structural and multiplication is a matrix product; words are
derived on demand.  The canonical reduced word strips the smallest left
descent first, which makes every serialized word deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cartan import CartanData, RootVector, Weight, positive_roots


class IntervalTooLarge(RuntimeError):
    """Raised when a Bruhat interval enumeration exceeds its configured limit."""


def _mat_mul(a: tuple[tuple[int, ...], ...], b: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _mat_inv_int(a: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of an integer matrix known to be invertible over Z."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        d = m[col][col]
        m[col] = [x / d for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = m[i][j + n]
            if v.denominator != 1:
                raise ValueError("matrix is not invertible over the integers")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


class WeylElement:
    """A Weyl group element, represented by its action on the simple-root basis.

    ``root_action`` has column i equal to the image of alpha_{i+1}; the
    companion ``weight_action`` acts on fundamental-weight coordinates.
    """

    __slots__ = ("group", "root_action", "weight_action", "_len", "_inv", "_word")

    def __init__(self, group: "WeylGroup", root_action, weight_action):
        self.group = group
        self.root_action = root_action
        self.weight_action = weight_action
        self._len: int | None = None
        self._inv: "WeylElement | None" = None
        self._word: tuple[int, ...] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.root_action == other.root_action and self.group.data == other.group.data

    def __hash__(self) -> int:
        return hash(self.root_action)

    def __repr__(self) -> str:
        word = self.group.reduced_word(self)
        return "e" if not word else "*".join(f"s{i}" for i in word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.mul(self, other)

    def apply_root(self, beta: RootVector) -> RootVector:
        m = self.root_action
        n = len(m)
        return RootVector(
            tuple(sum(m[i][j] * beta.coords[j] for j in range(n)) for i in range(n))
        )

    def apply_weight(self, lam: Weight) -> Weight:
        m = self.weight_action
        n = len(m)
        return Weight(
            tuple(sum(m[i][j] * lam.coords[j] for j in range(n)) for i in range(n))
        )

    def is_identity(self) -> bool:
        return self is self.group.identity or self.root_action == self.group.identity.root_action


class WeylGroup:
    """The Weyl group of a finite-type Cartan datum, with cached root data."""

    def __init__(self, data: CartanData):
        self.data = data
        self.rank = data.rank
        self.positive_roots = positive_roots(data)
        n = data.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        self.identity = WeylElement(self, ident, ident)
        self._simple: list[WeylElement] = []
        for i in range(1, n + 1):
            root_cols = []
            wt_cols = []
            for j in range(1, n + 1):
                # s_i alpha_j = alpha_j - A[i][j] alpha_i
                col = [1 if k == j - 1 else 0 for k in range(n)]
                col[i - 1] -= data.cartan[i - 1][j - 1]
                root_cols.append(tuple(col))
                # s_i lambda_j = lambda_j - delta_{ij} alpha_i
                wcol = [1 if k == j - 1 else 0 for k in range(n)]
                if i == j:
                    for k in range(n):
                        wcol[k] -= data.cartan[k][i - 1]
                wt_cols.append(tuple(wcol))
            root_m = tuple(tuple(root_cols[j][i] for j in range(n)) for i in range(n))
            wt_m = tuple(tuple(wt_cols[j][i] for j in range(n)) for i in range(n))
            self._simple.append(WeylElement(self, root_m, wt_m))
        self._elements: dict[tuple, WeylElement] = {ident: self.identity}

    def _intern(self, root_m, weight_m) -> WeylElement:
        el = self._elements.get(root_m)
        if el is None:
            el = WeylElement(self, root_m, weight_m)
            self._elements[root_m] = el
        return el

    def simple(self, i: int) -> WeylElement:
        self.data._check_index(i)
        return self._simple[i - 1]

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        if a.group.data != self.data or b.group.data != self.data:
            raise ValueError("elements belong to different Weyl groups")
        return self._intern(
            _mat_mul(a.root_action, b.root_action),
            _mat_mul(a.weight_action, b.weight_action),
        )

    def inv(self, a: WeylElement) -> WeylElement:
        if a._inv is None:
            el = self._intern(
                _mat_inv_int(a.root_action), _mat_inv_int(a.weight_action)
            )
            a._inv = el
            el._inv = a
        return a._inv

    def from_word(self, word: Iterable[int]) -> WeylElement:
        out = self.identity
        for i in word:
            out = self.mul(out, self.simple(i))
        return out

    def length(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        if w._len is None:
            w._len = sum(1 for beta in self.positive_roots if w.apply_root(beta).is_negative())
        return w._len

    def right_descents(self, w: WeylElement) -> tuple[int, ...]:
        """Indices i with w alpha_i < 0, i.e. l(w s_i) < l(w)."""
        out = []
        for i in range(1, self.rank + 1):
            col = tuple(w.root_action[k][i - 1] for k in range(self.rank))
            if RootVector(col).is_negative():
                out.append(i)
        return tuple(out)

    def left_descents(self, w: WeylElement) -> tuple[int, ...]:
        return self.right_descents(self.inv(w))

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Canonical reduced word: repeatedly strip the smallest left descent."""
        if w._word is None:
            word: list[int] = []
            x = w
            y = self.inv(w)  # maintained as x^{-1}
            while True:
                des = self.right_descents(y)
                if not des:
                    break
                i = des[0]
                word.append(i)
                s = self.simple(i)
                x = self.mul(s, x)
                y = self.mul(y, s)
            w._word = tuple(word)
        return w._word

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Chevalley-Bruhat order via the descent recursion."""
        lv, lw = self.length(v), self.length(w)
        if lv > lw:
            return False
        if v == w:
            return True
        if lw == 0:
            return lv == 0
        i = self.right_descents(w)[0]
        s = self.simple(i)
        ws = self.mul(w, s)
        vs = self.mul(v, s)
        if self.length(vs) < lv:
            return self.bruhat_leq(vs, ws)
        return self.bruhat_leq(v, ws)

    def star_simple(self, i: int, w: WeylElement) -> WeylElement:
        """s_i * w = max{s_i w, w} in the Demazure monoid."""
        sw = self.mul(self.simple(i), w)
        return sw if self.length(sw) > self.length(w) else w

    def demazure_star(self, u: WeylElement, w: WeylElement) -> WeylElement:
        """u * w computed by folding a reduced word of u from the right."""
        out = w
        for i in reversed(self.reduced_word(u)):
            out = self.star_simple(i, out)
        return out

    def tri_left_simple(self, i: int, w: WeylElement) -> WeylElement:
        """s_i |> w = min{s_i w, w}."""
        sw = self.mul(self.simple(i), w)
        return sw if self.length(sw) < self.length(w) else w

    def tri_right_simple(self, w: WeylElement, i: int) -> WeylElement:
        """w <| s_i = min{w s_i, w}."""
        ws = self.mul(w, self.simple(i))
        return ws if self.length(ws) < self.length(w) else w

    def tri_left(self, u: WeylElement, w: WeylElement, word: Sequence[int] | None = None) -> WeylElement:
        """u |> w; independent of the reduced word of u (any such word may be passed)."""
        out = w
        for i in reversed(word if word is not None else self.reduced_word(u)):
            out = self.tri_left_simple(i, out)
        return out

    def tri_right(self, w: WeylElement, u: WeylElement, word: Sequence[int] | None = None) -> WeylElement:
        """w <| u, folding the reduced word of u from the left."""
        out = w
        for i in (word if word is not None else self.reduced_word(u)):
            out = self.tri_right_simple(out, i)
        return out

    def demazure_star_word(self, word: Sequence[int], w: WeylElement) -> WeylElement:
        """Demazure product s_{i_1} * ... * s_{i_k} * w for an arbitrary word."""
        out = w
        for i in reversed(word):
            out = self.star_simple(i, out)
        return out

    def bruhat_interval_below(self, w: WeylElement, limit: int = 100_000) -> frozenset[WeylElement]:
        """The full lower Bruhat interval {v : v <= w}.

        Walks covers downward: every co-atom of v appears among the single
        letter deletions of any fixed reduced word of v.
        """
        interval: set[WeylElement] = set()
        frontier = [w]
        interval.add(w)
        while frontier:
            nxt: list[WeylElement] = []
            for v in frontier:
                word = self.reduced_word(v)
                lv = self.length(v)
                for k in range(len(word)):
                    u = self.from_word(word[:k] + word[k + 1 :])
                    if self.length(u) == lv - 1 and u not in interval:
                        interval.add(u)
                        if len(interval) > limit:
                            raise IntervalTooLarge(
                                f"Bruhat interval exceeds the configured limit of {limit}"
                            )
                        nxt.append(u)
            frontier = nxt
        return frozenset(interval)

    def elements(self, limit: int = 1_000_000) -> Iterator[WeylElement]:
        """All group elements, by closure under right multiplication."""
        seen = {self.identity}
        frontier = [self.identity]
        yield self.identity
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    x = self.mul(w, self.simple(i))
                    if x not in seen:
                        seen.add(x)
                        if len(seen) > limit:
                            raise IntervalTooLarge("group enumeration exceeds limit")
                        nxt.append(x)
                        yield x
            frontier = nxt
