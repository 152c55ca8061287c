"""Shuffled subexpressions and their combinatorial invariants.

A shuffle of two letter sequences u (length l) and v (length n-l) is encoded
by its sign sequence ``eps`` of length n with exactly l entries -1: the k-th
-1 slot carries the k-th letter of u and the k-th +1 slot the k-th letter of
v.  A subexpression is a mask over the interleaved word: position j either
contributes the interleaved letter delta_j or the identity.  Prefix products
multiply delta_j on the right when eps_j = -1 and on the left when
eps_j = +1.

Positions j and simple-root indices are 1-based throughout the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal

from .cartan import Weight, simple_root_as_weight
from .weyl import WeylElement, WeylGroup

ENUMERATION_BOUND_BITS = 20


class SetupError(ValueError):
    """Raised for inconsistent shuffle setups or masks."""


class NotInMonoidInterval(ValueError):
    """Raised when a target element fails the w <= v^{-1} * u precondition."""


@dataclass(frozen=True)
class ShuffleSetup:
    """Two letter sequences with a shuffle, over a fixed Weyl group.

    ``u_word`` and ``v_word`` list simple-root indices; ``eps`` is the sign
    sequence selecting which slot of the interleaved word belongs to which
    side.
    """

    group: WeylGroup
    u_word: tuple[int, ...]
    v_word: tuple[int, ...]
    eps: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.u_word) + len(self.v_word)
        if len(self.eps) != n:
            raise SetupError(f"eps must have length {n}, got {len(self.eps)}")
        if any(e not in (-1, 1) for e in self.eps):
            raise SetupError("eps entries must be +1 or -1")
        if sum(1 for e in self.eps if e == -1) != len(self.u_word):
            raise SetupError("number of -1 entries in eps must equal len(u_word)")
        for i in self.u_word + self.v_word:
            self.group.data._check_index(i)

    @property
    def n(self) -> int:
        return len(self.eps)

    @cached_property
    def delta_word(self) -> tuple[int, ...]:
        """The interleaved word (delta_1 .. delta_n) as simple-root indices."""
        out = []
        iu = iv = 0
        for e in self.eps:
            if e == -1:
                out.append(self.u_word[iu])
                iu += 1
            else:
                out.append(self.v_word[iv])
                iv += 1
        return tuple(out)

    def delta(self, j: int) -> WeylElement:
        """The simple reflection at 1-based position j."""
        return self.group.simple(self.delta_word[j - 1])

    @cached_property
    def u_star(self) -> WeylElement:
        """Demazure product of the u letters."""
        return self.group.demazure_star_word(self.u_word, self.group.identity)

    @cached_property
    def v_star(self) -> WeylElement:
        return self.group.demazure_star_word(self.v_word, self.group.identity)

    @cached_property
    def monoid_bound(self) -> WeylElement:
        """The element v^{-1} * u bounding all mask endpoints."""
        return self.group.demazure_star(self.group.inv(self.v_star), self.u_star)

    def is_reduced(self) -> bool:
        g = self.group
        return (
            g.length(g.from_word(self.u_word)) == len(self.u_word)
            and g.length(g.from_word(self.v_word)) == len(self.v_word)
        )

    def subexpression(self, mask: int | tuple[int, ...] | list[int]) -> "Subexpression":
        """Build a subexpression from a bitmask int or an iterable of 0/1 flags."""
        if not isinstance(mask, int):
            bits = list(mask)
            if len(bits) != self.n or any(b not in (0, 1) for b in bits):
                raise SetupError("mask flags must be n entries of 0/1")
            mask = sum(1 << j for j, b in enumerate(bits) if b)
        if not 0 <= mask < (1 << self.n):
            raise SetupError(f"mask {mask} out of range for n={self.n}")
        return Subexpression(self, mask)

    def subexpression_from_positions(self, positions) -> "Subexpression":
        """Build a subexpression from 1-based positions where the letter is taken."""
        mask = 0
        for j in positions:
            if not 1 <= j <= self.n:
                raise SetupError(f"position {j} out of range 1..{self.n}")
            mask |= 1 << (j - 1)
        return Subexpression(self, mask)


@dataclass(frozen=True)
class CellProfile:
    """The combinatorial invariants of one subexpression's cell."""

    J: frozenset[int]
    I: frozenset[int]
    K: frozenset[int]
    dim: int
    is_positive: bool
    is_distinguished: bool
    w: WeylElement
    nu: tuple[Weight, ...]


@dataclass(frozen=True)
class Subexpression:
    """A subexpression of a shuffled word, encoded by its mask.

    Bit j-1 of ``mask`` is set exactly when position j carries the letter
    delta_j (so the set of 1-based positions with the bit set is I).
    """

    setup: ShuffleSetup
    mask: int

    def takes_letter(self, j: int) -> bool:
        return bool(self.mask >> (j - 1) & 1)

    @cached_property
    def gamma_powers(self) -> tuple[WeylElement, ...]:
        """Prefix products (gamma^1 .. gamma^n)."""
        g = self.setup.group
        out = []
        cur = g.identity
        for j in range(1, self.setup.n + 1):
            if self.takes_letter(j):
                d = self.setup.delta(j)
                cur = g.mul(cur, d) if self.setup.eps[j - 1] == -1 else g.mul(d, cur)
            out.append(cur)
        return tuple(out)

    def gamma_power(self, j: int) -> WeylElement:
        """gamma^j for j in [0, n], with gamma^0 = e."""
        return self.setup.group.identity if j == 0 else self.gamma_powers[j - 1]

    @cached_property
    def side_powers(self) -> tuple[tuple[WeylElement, ...], tuple[WeylElement, ...]]:
        """One-sided prefix products (gamma_u^j, gamma_v^j) for j in [1, n]."""
        g = self.setup.group
        us, vs = [], []
        cu = cv = g.identity
        for j in range(1, self.setup.n + 1):
            if self.takes_letter(j):
                d = self.setup.delta(j)
                if self.setup.eps[j - 1] == -1:
                    cu = g.mul(cu, d)
                else:
                    cv = g.mul(cv, d)
            us.append(cu)
            vs.append(cv)
        return tuple(us), tuple(vs)

    def gamma_u_power(self, j: int) -> WeylElement:
        return self.setup.group.identity if j == 0 else self.side_powers[0][j - 1]

    def gamma_v_power(self, j: int) -> WeylElement:
        return self.setup.group.identity if j == 0 else self.side_powers[1][j - 1]

    @property
    def endpoint(self) -> WeylElement:
        """gamma^n, the Weyl element the subexpression multiplies out to."""
        return self.gamma_power(self.setup.n)

    @cached_property
    def J(self) -> frozenset[int]:
        """Positions whose chart coordinate is forced to zero on the cell:
        j with (gamma^j)^{-eps_j} alpha_j < 0."""
        g = self.setup.group
        out = []
        for j in range(1, self.setup.n + 1):
            w = self.gamma_power(j)
            if self.setup.eps[j - 1] == 1:
                w = g.inv(w)
            alpha_index = self.setup.delta_word[j - 1]
            col = tuple(w.root_action[k][alpha_index - 1] for k in range(g.rank))
            if all(c <= 0 for c in col):
                out.append(j)
        return frozenset(out)

    @cached_property
    def I(self) -> frozenset[int]:
        return frozenset(j for j in range(1, self.setup.n + 1) if self.takes_letter(j))

    @property
    def K(self) -> frozenset[int]:
        return self.I - self.J

    @property
    def dim(self) -> int:
        return self.setup.n - len(self.J)

    @cached_property
    def is_positive(self) -> bool:
        """Every prefix strictly grows when the interleaved letter is applied
        on its side, whether or not the letter is taken."""
        g = self.setup.group
        for j in range(1, self.setup.n + 1):
            prev = self.gamma_power(j - 1)
            d = self.setup.delta(j)
            step = g.mul(prev, d) if self.setup.eps[j - 1] == -1 else g.mul(d, prev)
            if g.length(step) < g.length(prev):
                return False
        return True

    @property
    def is_distinguished(self) -> bool:
        return self.J <= self.I

    @cached_property
    def nu(self) -> tuple[Weight, ...]:
        """Torus weights of the chart coordinates:
        nu_j = -gamma_u^j alpha_j for eps_j = -1, +gamma_v^j alpha_j otherwise."""
        data = self.setup.group.data
        out = []
        for j in range(1, self.setup.n + 1):
            alpha = simple_root_as_weight(data, self.setup.delta_word[j - 1])
            if self.setup.eps[j - 1] == -1:
                out.append(-self.gamma_u_power(j).apply_weight(alpha))
            else:
                out.append(self.gamma_v_power(j).apply_weight(alpha))
        return tuple(out)

    def profile(self) -> CellProfile:
        return CellProfile(
            J=self.J,
            I=self.I,
            K=self.K,
            dim=self.dim,
            is_positive=self.is_positive,
            is_distinguished=self.is_distinguished,
            w=self.endpoint,
            nu=self.nu,
        )

    def letters(self) -> tuple[int, ...]:
        """Per-position letter: the simple-root index when taken, 0 otherwise."""
        return tuple(
            self.setup.delta_word[j - 1] if self.takes_letter(j) else 0
            for j in range(1, self.setup.n + 1)
        )


def sigma_word(setup: ShuffleSetup) -> tuple[int, ...]:
    """The interleaved word of the shuffle, as simple-root indices."""
    return setup.delta_word


def positive_from_w(setup: ShuffleSetup, w: WeylElement) -> Subexpression:
    """The unique positive subexpression with endpoint w.

    Runs the backward recursion w_{j-1} = w_j <| delta_j (eps_j = -1) or
    delta_j |> w_j (eps_j = +1); requires w <= v^{-1} * u.
    """
    g = setup.group
    if not g.bruhat_leq(w, setup.monoid_bound):
        raise NotInMonoidInterval(
            "endpoint is not below the monoid product bound of the setup"
        )
    ws = [None] * (setup.n + 1)
    ws[setup.n] = w
    for j in range(setup.n, 0, -1):
        i = setup.delta_word[j - 1]
        if setup.eps[j - 1] == -1:
            ws[j - 1] = g.tri_right_simple(ws[j], i)
        else:
            ws[j - 1] = g.tri_left_simple(i, ws[j])
    if not ws[0].is_identity():
        raise NotInMonoidInterval("backward recursion did not reach the identity")
    mask = 0
    for j in range(1, setup.n + 1):
        if ws[j] != ws[j - 1]:
            mask |= 1 << (j - 1)
    gamma = Subexpression(setup, mask)
    assert gamma.endpoint == w and gamma.is_positive
    return gamma


FilterName = Literal["all", "positive", "distinguished"]


def enumerate_subexpressions(
    setup: ShuffleSetup,
    which: FilterName = "all",
    fixed_w: WeylElement | None = None,
    max_bits: int = ENUMERATION_BOUND_BITS,
) -> Iterator[Subexpression]:
    """All subexpressions of the setup in ascending mask order, filtered."""
    if setup.n > max_bits:
        raise SetupError(
            f"enumeration bound exceeded: n={setup.n} > {max_bits} (2^n masks)"
        )
    for mask in range(1 << setup.n):
        gamma = Subexpression(setup, mask)
        if which == "positive" and not gamma.is_positive:
            continue
        if which == "distinguished" and not gamma.is_distinguished:
            continue
        if fixed_w is not None and gamma.endpoint != fixed_w:
            continue
        yield gamma


@dataclass(frozen=True)
class WyRecord:
    """The double-subexpression dictionary record for a mask over reduced words."""

    J0: frozenset[int]
    Jplus: frozenset[int]
    Jminus: frozenset[int]
    w_sequence: tuple[WeylElement, ...]


def wy_convert(gamma: Subexpression, allow_unreduced: bool = False) -> WyRecord:
    """Translate a subexpression into the double-subexpression index sets.

    With w_(k) = (gamma^k)^{-1}, position k lands in J^0 / J^+ / J^- according
    to whether w_(k) equals, covers, or is covered by w_(k-1); the three sets
    always partition [1, n].  For a distinguished subexpression they coincide
    with J^0 = [1,n] \\ I, J^+ = J, J^- = I \\ J (asserted here).

    The dictionary is only meaningful when both letter sequences are reduced;
    pass allow_unreduced=True to compute the index sets regardless.
    """
    setup = gamma.setup
    if not allow_unreduced and not setup.is_reduced():
        raise SetupError("u and v words must be reduced for the dictionary conversion")
    g = setup.group
    w_seq = tuple(g.inv(gamma.gamma_power(k)) for k in range(0, setup.n + 1))
    j0, jplus, jminus = set(), set(), set()
    for k in range(1, setup.n + 1):
        prev_len, cur_len = g.length(w_seq[k - 1]), g.length(w_seq[k])
        if w_seq[k] == w_seq[k - 1]:
            j0.add(k)
        elif cur_len > prev_len:
            jplus.add(k)
        else:
            jminus.add(k)
    if gamma.is_distinguished:
        full = frozenset(range(1, setup.n + 1))
        assert frozenset(j0) == full - gamma.I
        assert frozenset(jplus) == gamma.J
        assert frozenset(jminus) == gamma.I - gamma.J
    return WyRecord(
        J0=frozenset(j0),
        Jplus=frozenset(jplus),
        Jminus=frozenset(jminus),
        w_sequence=w_seq[1:],
    )
