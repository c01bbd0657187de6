import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vdwkit.instantaneous import exact_energy_normal_modes, london_energy, london_series_coefficients
from vdwkit.kato import (
    FockOperator,
    FockSpace,
    KatoTerm,
    annihilation,
    build_bilinear,
    build_coupled_pair,
    compositions,
    creation,
    kato_energy_coefficient,
    number,
    position,
    s_operator,
    verify_fourth_order_subtraction,
)
import scipy.sparse as sp


@pytest.fixture(scope="module")
def three_channel():
    return {g: build_coupled_pair(g, 4, channels=3) for g in (0.05, 0.1, 0.2)}


@pytest.fixture(scope="module")
def pair():
    return {g: build_coupled_pair(g, 6, channels=1) for g in (0.0, 0.1, 0.2)}


def pair_series(n):
    """g**n coefficient of (sqrt(1+g) + sqrt(1-g) - 2)/2."""
    if n % 2:
        return Fraction(0)
    b = Fraction(1)
    for j in range(n):
        b *= Fraction(1, 2) - j
    return b / math.factorial(n)


def test_fock_indexing_round_trip():
    space = FockSpace(3, 2)
    assert space.dimension == 27
    for idx in range(space.dimension):
        assert space.index(space.occupations(idx)) == idx
    assert space.index((0, 0, 1)) == 1
    assert space.index((1, 0, 0)) == 9


def test_fock_space_limits():
    with pytest.raises(ValueError):
        FockSpace(0, 2)
    with pytest.raises(ValueError):
        FockSpace(8, 6)


def test_ladder_operators():
    space = FockSpace(2, 5)
    a, ad = annihilation(space, 1), creation(space, 1)
    assert ad.element((0, 3), (0, 2)) == pytest.approx(math.sqrt(3))
    assert a.element((1, 1), (1, 2)) == pytest.approx(math.sqrt(2))
    comm = (a @ ad - ad @ a).toarray()
    # [a, a+] = 1 except on the truncation edge
    for idx in range(space.dimension):
        occ = space.occupations(idx)
        expected = 1.0 if occ[1] < space.n_max else -space.n_max
        assert comm[idx, idx] == pytest.approx(expected)
    assert np.allclose((ad @ a).toarray(), number(space, 1).toarray())
    x = position(space, 0).toarray()
    assert np.allclose(x, x.T)


def test_operator_space_mismatch():
    with pytest.raises(ValueError):
        number(FockSpace(2, 3), 0) + number(FockSpace(2, 4), 0)
    with pytest.raises(ValueError):
        FockOperator(FockSpace(1, 2), sp.csr_matrix((2, 2)))


def test_compositions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    for n in range(1, 7):
        comps = list(compositions(n, n))
        assert len(comps) == math.comb(2 * n - 1, n)
        assert len(set(comps)) == len(comps)
        assert comps == sorted(comps)
        assert all(sum(c) == n for c in comps)
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []


@given(st.integers(0, 6), st.integers(1, 5))
def test_compositions_match_brute_force(total, parts):
    brute = [c for c in product(range(total + 1), repeat=parts) if sum(c) == total]
    assert list(compositions(total, parts)) == brute


def test_kato_term():
    assert KatoTerm((1, 1, 1)).weight == 1.0
    assert KatoTerm((0, 1, 2)).weight == 0.5
    assert KatoTerm((0, 0, 3)).order == 4
    with pytest.raises(ValueError):
        KatoTerm((1, 2))


def test_s_operator():
    space = FockSpace(1, 4)
    h0 = number(space, 0)
    s0 = s_operator(h0, 0).toarray()
    assert np.trace(s0) == -1.0 and s0[0, 0] == -1.0
    assert np.allclose(np.diag(s_operator(h0, 1).toarray()), [0, 1, 1 / 2, 1 / 3, 1 / 4])
    assert np.allclose(np.diag(s_operator(h0, 2).toarray()), [0, 1, 1 / 4, 1 / 9, 1 / 16])


def test_s_operator_rejects_bad_h0():
    space = FockSpace(2, 2)
    with pytest.raises(ValueError):
        s_operator(number(space, 0), 1)  # degenerate vacuum
    h0 = number(space, 0) + number(space, 1)
    with pytest.raises(ValueError):
        s_operator(h0 + position(space, 0), 1)


def test_zero_coupling(pair):
    h0, v = pair[0.0]
    assert v.matrix.count_nonzero() == 0
    chk = verify_fourth_order_subtraction(h0, v)
    assert chk == (0.0, 0.0, 0.0)


def test_pair_low_orders(pair):
    g = 0.1
    h0, v = pair[g]
    assert kato_energy_coefficient(h0, v, 1) == 0.0
    # single intermediate state |1,1> with matrix element g/2
    assert kato_energy_coefficient(h0, v, 2) == pytest.approx(-(g / 2) ** 2 / 2, rel=1e-14)
    assert kato_energy_coefficient(h0, v, 2) == pytest.approx(-g * g / 8, rel=1e-14)
    assert abs(kato_energy_coefficient(h0, v, 3)) < 1e-16


@pytest.mark.parametrize("n", [2, 4, 6])
def test_pair_orders_match_series(pair, n):
    g = 0.2
    h0, v = pair[g]
    assert kato_energy_coefficient(h0, v, n) == pytest.approx(float(pair_series(n)) * g**n, rel=1e-10)


def test_pair_fourth_order_identity(pair):
    g = 0.1
    chk = verify_fourth_order_subtraction(*pair[g])
    assert chk.direct == pytest.approx(-5 / 128 * g**4, rel=1e-10)
    assert abs(chk.direct - (chk.chained - chk.subtraction)) <= 1e-12
    assert chk.subtraction != 0.0


@pytest.mark.parametrize("g", [0.05, 0.1, 0.2])
def test_three_channel_second_order_is_london(three_channel, g):
    h0, v = three_channel[g]
    assert kato_energy_coefficient(h0, v, 2) == pytest.approx(london_energy(g), rel=1e-12)


def test_three_channel_fourth_order(three_channel):
    g = 0.1
    h0, v = three_channel[g]
    c4 = float(london_series_coefficients(4)[1])
    chk = verify_fourth_order_subtraction(h0, v)
    assert chk.direct == pytest.approx(c4 * g**4, rel=1e-10)
    assert chk.direct == pytest.approx(-45 / 64 * g**4, rel=1e-10)


@pytest.mark.parametrize("g", [0.05, 0.1, 0.2])
def test_odd_orders_vanish(three_channel, g):
    h0, v = three_channel[g]
    for n in (1, 3):
        assert abs(kato_energy_coefficient(h0, v, n)) <= 1e-16


@pytest.mark.parametrize("g", [0.05, 0.1, 0.2])
def test_partial_sums_bounded_by_next_term(three_channel, g):
    h0, v = three_channel[g]
    partial = sum(kato_energy_coefficient(h0, v, n) for n in range(1, 5))
    c6 = float(london_series_coefficients(6)[2])
    assert abs(partial - exact_energy_normal_modes(g).re) <= 2 * abs(c6) * g**6


@pytest.mark.parametrize("g", [0.1, 0.2])
def test_truncation_convergence(g):
    small = build_coupled_pair(g, 4, channels=1)
    large = build_coupled_pair(g, 6, channels=1)
    for n in (2, 4):
        a = kato_energy_coefficient(*small, n)
        b = kato_energy_coefficient(*large, n)
        assert a == pytest.approx(b, rel=1e-12)


def test_sixth_order_three_channel():
    g = 0.1
    h0, v = build_coupled_pair(g, 3, channels=3)
    c6 = float(london_series_coefficients(6)[2])
    assert kato_energy_coefficient(h0, v, 6) == pytest.approx(c6 * g**6, rel=1e-10)


def test_generic_engine_against_dense_diagonalization():
    # arbitrary symmetric coupling matrix between two 2-mode atoms
    K = 0.08 * np.array([[1.0, -0.4], [0.7, 0.3]])
    h0, v = build_bilinear(K, 6)
    lam = 1e-3
    evals = np.linalg.eigvalsh((h0 + v * lam).toarray())
    # degenerate perturbation check through a small-lambda expansion
    e2 = kato_energy_coefficient(h0, v, 2)
    e4 = kato_energy_coefficient(h0, v, 4)
    # ground state of the truncated problem, dominated by the perturbative series
    assert evals[0] == pytest.approx(e2 * lam**2 + e4 * lam**4, rel=1e-6, abs=1e-20)
    # exact: sum over singular values s of K of the pair energies
    s = np.linalg.svd(K, compute_uv=False)
    exact_e2 = sum(-x * x / 8 for x in s)
    assert e2 == pytest.approx(exact_e2, rel=1e-12)


def test_bilinear_validation():
    with pytest.raises(ValueError):
        build_bilinear(np.ones((2, 3)), 3)
    with pytest.raises(ValueError):
        build_coupled_pair(0.1, 1)
    with pytest.raises(ValueError):
        build_coupled_pair(0.1, 3, channels=2)
    with pytest.raises(ValueError):
        build_coupled_pair(-0.1, 3)
