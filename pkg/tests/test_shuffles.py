import pytest

from bscells.cartan import cartan_from_label, simple_root_as_weight
from bscells.shuffles import (
    NotInMonoidInterval,
    SetupError,
    ShuffleSetup,
    enumerate_subexpressions,
    positive_from_w,
    sigma_word,
    wy_convert,
)
from bscells.weyl import WeylGroup

WA2 = WeylGroup(cartan_from_label("A2"))
WA3 = WeylGroup(cartan_from_label("A3"))
WA4 = WeylGroup(cartan_from_label("A4"))
WA5 = WeylGroup(cartan_from_label("A5"))


def sl3_setup():
    """SL(3): u = v = (s1, s2), interleaved as (s1, s1, s2, s2)."""
    return ShuffleSetup(WA2, u_word=(1, 2), v_word=(1, 2), eps=(-1, 1, -1, 1))


def sl4_setup():
    """SL(4): interleaved word (s2, s3, s3, s1, s1, s2, s3, s1)."""
    return ShuffleSetup(
        WA3, u_word=(2, 3, 1, 3), v_word=(3, 1, 2, 1), eps=(-1, -1, 1, 1, -1, 1, -1, 1)
    )


def a4_setup():
    """Rank-4: u = (s3,s2,s3,s2,s3), v = (s4,s2,s1,s4)."""
    return ShuffleSetup(
        WA4,
        u_word=(3, 2, 3, 2, 3),
        v_word=(4, 2, 1, 4),
        eps=(-1, -1, 1, -1, 1, 1, -1, -1, 1),
    )


def test_setup_validation():
    with pytest.raises(SetupError):
        ShuffleSetup(WA2, (1,), (2,), (-1, -1))  # wrong -1 count
    with pytest.raises(SetupError):
        ShuffleSetup(WA2, (1,), (2,), (-1, 0))
    with pytest.raises(SetupError):
        ShuffleSetup(WA2, (1,), (2,), (-1,))
    with pytest.raises(IndexError):
        ShuffleSetup(WA2, (3,), (2,), (-1, 1))


def test_sigma_word_interleaving():
    setup = ShuffleSetup(WA5, u_word=(1, 2, 3), v_word=(4, 5), eps=(-1, 1, 1, -1, -1))
    assert sigma_word(setup) == (1, 4, 5, 2, 3)
    all_u = ShuffleSetup(WA5, u_word=(1, 2, 3), v_word=(), eps=(-1, -1, -1))
    assert sigma_word(all_u) == (1, 2, 3)
    all_v = ShuffleSetup(WA5, u_word=(), v_word=(4, 5), eps=(1, 1))
    assert sigma_word(all_v) == (4, 5)
    assert sigma_word(a4_setup()) == (3, 2, 4, 3, 2, 1, 2, 3, 4)


def test_prefix_products_worked_example():
    setup = ShuffleSetup(WA5, u_word=(1, 2, 3), v_word=(4, 5), eps=(-1, 1, 1, -1, -1))
    g = WA5
    gamma = setup.subexpression_from_positions([1, 2, 4])  # (s1, s4, e, s2, e)
    assert gamma.gamma_powers == (
        g.from_word([1]),
        g.from_word([4, 1]),
        g.from_word([4, 1]),
        g.from_word([4, 1, 2]),
        g.from_word([4, 1, 2]),
    )
    eta = setup.subexpression_from_positions([2, 5])  # (e, s4, e, e, s3)
    assert eta.gamma_powers == (
        g.identity,
        g.from_word([4]),
        g.from_word([4]),
        g.from_word([4]),
        g.from_word([4, 3]),
    )
    allzero = setup.subexpression(0)
    assert all(w.is_identity() for w in allzero.gamma_powers)


def test_profile_sl3_J_sets():
    setup = sl3_setup()
    gamma = setup.subexpression_from_positions([2])  # (e, s1, e, e)
    eta = setup.subexpression_from_positions([3, 4])  # (e, e, s2, s2)
    assert gamma.J == frozenset({2})
    assert eta.J == frozenset({3})
    assert gamma.is_positive
    assert eta.is_distinguished and not eta.is_positive


def test_profile_all_identity_mask():
    setup = sl3_setup()
    gamma = setup.subexpression(0)
    p = gamma.profile()
    assert p.J == frozenset() and p.I == frozenset()
    assert p.is_positive and p.is_distinguished
    assert p.w.is_identity()
    assert p.dim == setup.n


def test_profile_sl4_named_subexpressions():
    setup = sl4_setup()
    gamma = setup.subexpression_from_positions([1, 3, 7])
    eta = setup.subexpression_from_positions([2, 3, 4, 5])
    assert eta.J == frozenset({2, 4})
    assert eta.I == frozenset({2, 3, 4, 5})
    assert eta.K == frozenset({3, 5})
    assert eta.is_distinguished and not eta.is_positive
    assert gamma.is_positive and gamma.is_distinguished
    assert gamma.J == gamma.I == frozenset({1, 3, 7})


def test_positivity_rank4_example():
    setup = a4_setup()
    gamma1 = setup.subexpression_from_positions([4, 7, 8, 9])
    gamma2 = setup.subexpression_from_positions([3, 4, 5, 6, 7, 8])
    assert gamma1.is_positive
    assert not gamma2.is_positive


def test_letters():
    setup = sl3_setup()
    gamma = setup.subexpression_from_positions([2])
    assert gamma.letters() == (0, 1, 0, 0)


def test_positive_from_w():
    setup = sl3_setup()
    g = WA2
    assert positive_from_w(setup, g.identity).mask == 0
    # brute force: the unique positive mask with endpoint s1
    target = g.simple(1)
    matches = [
        s
        for s in enumerate_subexpressions(setup, "positive")
        if s.endpoint == target
    ]
    assert len(matches) == 1 and matches[0].I == frozenset({2})
    assert positive_from_w(setup, target) == matches[0]


@pytest.mark.parametrize("factory", [sl3_setup, sl4_setup])
def test_positive_round_trip(factory):
    setup = factory()
    for gamma in enumerate_subexpressions(setup, "positive"):
        assert positive_from_w(setup, gamma.endpoint) == gamma


def test_positive_from_w_precondition():
    setup = ShuffleSetup(WA2, u_word=(1,), v_word=(), eps=(-1,))
    with pytest.raises(NotInMonoidInterval):
        positive_from_w(setup, WA2.from_word([2]))


def test_enumeration_counts():
    small = ShuffleSetup(WA2, u_word=(1,), v_word=(2,), eps=(-1, 1))
    assert len(list(enumerate_subexpressions(small))) == 4
    setup = sl3_setup()
    assert len(list(enumerate_subexpressions(setup))) == 16
    fixed_e = list(enumerate_subexpressions(setup, fixed_w=WA2.identity))
    assert any(s.mask == 0 for s in fixed_e)
    with pytest.raises(SetupError):
        list(enumerate_subexpressions(setup, max_bits=3))


@pytest.mark.parametrize("factory", [sl3_setup, sl4_setup, a4_setup])
def test_positive_count_equals_interval_size(factory):
    setup = factory()
    g = setup.group
    positives = list(enumerate_subexpressions(setup, "positive"))
    interval = g.bruhat_interval_below(setup.monoid_bound)
    assert len(positives) == len(interval)
    assert {s.endpoint for s in positives} == set(interval)


@pytest.mark.parametrize("factory", [sl3_setup, sl4_setup])
def test_length_bound_and_positivity(factory):
    setup = factory()
    g = setup.group
    for gamma in enumerate_subexpressions(setup):
        ln = g.length(gamma.endpoint)
        assert ln <= len(gamma.J)
        assert (ln == len(gamma.J)) == gamma.is_positive


@pytest.mark.parametrize("factory", [sl3_setup, sl4_setup])
def test_positive_implications(factory):
    setup = factory()
    g = setup.group
    for gamma in enumerate_subexpressions(setup):
        if gamma.is_positive:
            assert gamma.J == gamma.I
            # one-sided lengths add up along a positive subexpression
            for j in range(1, setup.n + 1):
                assert g.length(gamma.gamma_power(j)) == g.length(
                    gamma.gamma_u_power(j)
                ) + g.length(gamma.gamma_v_power(j))
        if gamma.is_distinguished and gamma.J == gamma.I:
            assert gamma.is_positive


@pytest.mark.parametrize("factory", [sl3_setup, sl4_setup])
def test_positive_splits_are_positive(factory):
    """Restricting a positive mask to either side gives a positive
    subexpression of that side's word."""
    setup = factory()
    g = setup.group
    minus_slots = [j for j in range(1, setup.n + 1) if setup.eps[j - 1] == -1]
    plus_slots = [j for j in range(1, setup.n + 1) if setup.eps[j - 1] == 1]
    u_side = ShuffleSetup(g, u_word=setup.u_word, v_word=(), eps=(-1,) * len(setup.u_word))
    v_side = ShuffleSetup(g, u_word=setup.v_word, v_word=(), eps=(-1,) * len(setup.v_word))
    for gamma in enumerate_subexpressions(setup, "positive"):
        u_mask = [1 if gamma.takes_letter(j) else 0 for j in minus_slots]
        v_mask = [1 if gamma.takes_letter(j) else 0 for j in plus_slots]
        assert u_side.subexpression(u_mask).is_positive
        assert v_side.subexpression(v_mask).is_positive


def test_nu_weights_sl3():
    setup = sl3_setup()
    data = WA2.data
    gamma = setup.subexpression_from_positions([2])  # (e, s1, e, e)
    alpha1 = simple_root_as_weight(data, 1)
    alpha2 = simple_root_as_weight(data, 2)
    # j=1: eps=-1, gamma_u^1 = e -> nu = -alpha_1
    assert gamma.nu[0] == -alpha1
    # j=2: eps=+1, gamma_v^2 = s1 -> nu = s1 alpha_1 = -alpha_1
    assert gamma.nu[1] == -alpha1
    # j=3: eps=-1, gamma_u^3 = e -> nu = -alpha_2
    assert gamma.nu[2] == -alpha2
    # j=4: eps=+1, gamma_v^4 = s1 -> nu = s1 alpha_2 = alpha_1 + alpha_2
    assert gamma.nu[3] == alpha1 + alpha2


def test_wy_convert():
    setup = sl3_setup()
    g = WA2
    allzero = setup.subexpression(0)
    rec = wy_convert(allzero)
    assert rec.J0 == frozenset({1, 2, 3, 4})
    assert rec.Jplus == rec.Jminus == frozenset()
    assert all(w.is_identity() for w in rec.w_sequence)
    for gamma in enumerate_subexpressions(setup):
        rec = wy_convert(gamma)
        n = setup.n
        assert rec.J0 | rec.Jplus | rec.Jminus == frozenset(range(1, n + 1))
        assert not (rec.J0 & rec.Jplus) and not (rec.J0 & rec.Jminus)
        assert not (rec.Jplus & rec.Jminus)
        # the index-set formulas are a theorem for distinguished masks only
        if gamma.is_distinguished:
            assert rec.Jplus == gamma.J and rec.Jminus == gamma.I - gamma.J
            assert rec.J0 == frozenset(range(1, n + 1)) - gamma.I
        assert rec.w_sequence == tuple(
            g.inv(gamma.gamma_power(k)) for k in range(1, n + 1)
        )
        if gamma.is_positive:
            assert rec.Jminus == frozenset()


@pytest.mark.parametrize("label", ["B2", "G2", "C3"])
def test_combinatorics_beyond_type_a(label):
    """The mask combinatorics is type-independent: counting, the length
    bound and the positive round trip hold in non-simply-laced types."""
    import random

    g = WeylGroup(cartan_from_label(label))
    rng = random.Random(17)
    for _ in range(5):
        n = rng.randint(1, 6)
        eps = tuple(rng.choice((-1, 1)) for _ in range(n))
        l = sum(1 for e in eps if e == -1)
        u = tuple(rng.randint(1, g.rank) for _ in range(l))
        v = tuple(rng.randint(1, g.rank) for _ in range(n - l))
        setup = ShuffleSetup(g, u_word=u, v_word=v, eps=eps)
        positives = list(enumerate_subexpressions(setup, "positive"))
        interval = g.bruhat_interval_below(setup.monoid_bound)
        assert len(positives) == len(interval)
        assert {s.endpoint for s in positives} == set(interval)
        for gamma in enumerate_subexpressions(setup):
            ln = g.length(gamma.endpoint)
            assert ln <= len(gamma.J)
            assert (ln == len(gamma.J)) == gamma.is_positive
        for gamma in positives:
            assert positive_from_w(setup, gamma.endpoint) == gamma


def test_wy_convert_requires_reduced_words():
    setup = sl4_setup()  # u = s2 s3 s1 s3 is not reduced
    gamma = setup.subexpression_from_positions([2, 3, 4, 5])
    with pytest.raises(SetupError):
        wy_convert(gamma)
    rec = wy_convert(gamma, allow_unreduced=True)
    assert rec.Jplus == frozenset({2, 4})
    assert rec.Jminus == frozenset({3, 5})
    assert rec.J0 == frozenset({1, 6, 7, 8})
