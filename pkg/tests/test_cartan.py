import pytest
from hypothesis import given, strategies as st

from bscells.cartan import (
    CartanError,
    Weight,
    cartan_from_label,
    cartan_from_matrix,
    fundamental_weight,
    is_type_a,
    positive_roots,
    r_alpha,
    reflect_weight,
    simple_root_as_weight,
)

A1 = cartan_from_label("A1")
A2 = cartan_from_label("A2")
A3 = cartan_from_label("A3")
B2 = cartan_from_label("B2")
G2 = cartan_from_label("G2")


def test_label_parsing_basic():
    assert A2.rank == 2 and A2.cartan == ((2, -1), (-1, 2))
    assert B2.cartan == ((2, -1), (-2, 2))
    assert G2.cartan == ((2, -1), (-3, 2))
    assert cartan_from_label("F4").rank == 4
    assert cartan_from_label("E6").rank == 6
    assert cartan_from_label("D4").rank == 4
    for bad in ("H3", "A0", "B1", "D3", "E5", "xyz", ""):
        with pytest.raises(CartanError):
            cartan_from_label(bad)


def test_rejects_non_finite_type():
    with pytest.raises(CartanError):
        cartan_from_matrix([[2, -2], [-2, 2]])  # affine A1~
    with pytest.raises(CartanError):
        cartan_from_matrix([[2, -1], [-5, 2]])  # indefinite
    with pytest.raises(CartanError):
        cartan_from_matrix([[2, 1], [1, 2]])  # positive off-diagonal
    with pytest.raises(CartanError):
        cartan_from_matrix([[2, -1], [0, 2]])  # asymmetric zero pattern
    with pytest.raises(CartanError):
        cartan_from_matrix([[1]])


@pytest.mark.parametrize("data", [A1, A2, A3, B2, G2, cartan_from_label("C3")])
def test_pairing_convention_matches_cartan_matrix(data):
    # (alpha_j, alphacheck_i) read off through the weight coordinates must
    # reproduce the Cartan entry: this pins the basis convention.
    for i in range(1, data.rank + 1):
        for j in range(1, data.rank + 1):
            assert simple_root_as_weight(data, j).pair_coroot(i) == data.cartan[i - 1][j - 1]


def test_simple_root_as_weight_examples():
    assert simple_root_as_weight(A2, 1) == Weight((2, -1))
    assert simple_root_as_weight(A1, 1) == Weight((2,))
    assert simple_root_as_weight(A3, 2) == Weight((-1, 2, -1))
    with pytest.raises(IndexError):
        simple_root_as_weight(A2, 3)


def test_reflect_weight_examples():
    # s_1 lambda_1 = lambda_1 - alpha_1 = -lambda_1 + lambda_2 in A2
    assert reflect_weight(A2, 1, fundamental_weight(A2, 1)) == Weight((-1, 1))
    for data in (A2, A3, B2):
        for i in range(1, data.rank + 1):
            for j in range(1, data.rank + 1):
                if i != j:
                    assert reflect_weight(data, i, fundamental_weight(data, j)) == fundamental_weight(data, j)
    lam = fundamental_weight(A2, 1)
    assert reflect_weight(A2, 1, reflect_weight(A2, 1, lam)) == lam


@given(
    coords=st.tuples(*(st.integers(-4, 4) for _ in range(3))),
    i=st.integers(1, 3),
)
def test_reflect_weight_involution_a3(coords, i):
    lam = Weight(coords)
    assert reflect_weight(A3, i, reflect_weight(A3, i, lam)) == lam


def test_r_alpha_examples():
    for j in (1, 2):
        expected = fundamental_weight(A3, j)
        assert r_alpha(A3, 3, expected) == expected
    assert r_alpha(A2, 1, fundamental_weight(A2, 1)) == Weight((0, 0))
    # r_1(alpha_1) in A2: (2, -1) with first coordinate zeroed
    assert r_alpha(A2, 1, simple_root_as_weight(A2, 1)) == Weight((0, -1))
    # r is not an involution in general: r_1(r_1 x) = r_1 x always, but
    # r_1 x != x whenever the first coordinate is nonzero.
    x = Weight((3, 1))
    assert r_alpha(A2, 1, x) != x
    assert r_alpha(A2, 1, r_alpha(A2, 1, x)) == r_alpha(A2, 1, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_positive_root_count_type_a(n):
    data = cartan_from_label(f"A{n - 1}")
    assert len(positive_roots(data)) == n * (n - 1) // 2


def test_positive_root_count_other_types():
    assert len(positive_roots(B2)) == 4
    assert len(positive_roots(G2)) == 6
    assert len(positive_roots(cartan_from_label("D4"))) == 12


def test_is_type_a():
    assert is_type_a(A3) and is_type_a(A1)
    assert not is_type_a(B2)
    assert is_type_a(cartan_from_matrix([[2, -1], [-1, 2]]))
