import pytest
from hypothesis import given, settings, strategies as st

from qhilb.bn_combinatorics import (
    chi_BN,
    chi_S,
    chi_S_stratified,
    chi_T,
    chi_T_stratified,
    discriminant_euler,
    enumerate_phi,
    enumerate_psi,
    enumerate_theta,
    excess,
    k_max,
    xi,
)
from qhilb.errors import ParameterError
from qhilb.partitions import enumerate_partitions

from oracles import psi_bruteforce


@pytest.mark.parametrize("rho, m, expected", [((3,), 0, 2), ((2, 1), 1, 0), ((4, 3, 1), 1, 3)])
def test_excess(rho, m, expected):
    assert excess(rho, m) == expected


def test_phi_psi_small():
    assert enumerate_phi(1, 2, 0) == [(2,)]
    assert enumerate_psi(1, 2, 0) == []
    assert sorted(enumerate_psi(1, 3, 0)) == sorted([((2,), (1,)), ((1,), (2,))])


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=0, max_value=6),
)
def test_psi_matches_bruteforce(k, l, m):
    assert set(enumerate_psi(k, l, m)) == psi_bruteforce(k, l, m)


def test_psi_is_closed_under_swap():
    for l in range(2, 9):
        for m in range(0, 4):
            for k in range(1, l):
                psi = set(enumerate_psi(k, l, m))
                assert psi == {(b, a) for a, b in psi}


def test_phi_is_union_of_single_theta():
    for l in range(1, 9):
        for m in range(0, 4):
            for k in range(1, l):
                union = [t[0] for nu in range(1, l + 1) for t in enumerate_theta(k, l, m, (nu,))]
                assert sorted(union) == sorted(enumerate_phi(k, l, m))


def test_emptiness_beyond_top():
    for l in range(1, 10):
        for m in range(0, 10):
            for k in range(1, l + 2):
                if k > l - m - 1 or m >= l - 1:
                    assert not enumerate_phi(k, l, m) and not enumerate_psi(k, l, m)
                    assert chi_T(k, l, m) == 0


def test_xi_spot_values():
    assert xi(2, 0) == 6
    assert xi(5, 2) == 60
    assert xi(8, 0) == 10034
    assert xi(4, 3) == 0


def test_xi_rejects_bad_l():
    with pytest.raises(ParameterError):
        xi(0, 0)


def test_strata_spot_values():
    # 2 b((2)) = 6 = chi(P^1 x P^2)
    assert chi_S(1, 2, 0) == 6
    # route A: 2 b((2,1)) + b((2))b((1)) + b((1))b((2)) = 8 + 6 + 6
    assert chi_T(1, 3, 0) == 20
    assert chi_T_stratified(1, 3, 0) == 20
    assert chi_S(1, 3, 1) == 8 and chi_T(1, 3, 1) == 8
    assert chi_BN(1, 3, 1, 1) == 16


def test_stratified_route_agrees():
    for l in range(1, 9):
        for k in range(1, l + 1):
            for m in range(0, 9):
                assert chi_T(k, l, m) == chi_T_stratified(k, l, m)
                assert chi_S(k, l, m) == chi_S_stratified(k, l, m)


def test_stratified_zero_when_twist_large():
    for l in range(1, 8):
        for m in range(l - 1, l + 2):
            for k in range(1, l + 1):
                assert chi_T_stratified(k, l, m) == 0


@pytest.mark.parametrize(
    "eps, expected", [((3,), 2), ((2, 1), 2), ((1, 1), 1), ((1, 1, 1), 0), ((3, 2, 1), 0)]
)
def test_discriminant_weights(eps, expected):
    assert discriminant_euler(eps) == expected


@pytest.mark.parametrize("l, m, n, expected", [(5, 1, 3, 3), (4, 3, 3, 0), (8, 2, 6, 5)])
def test_k_max(l, m, n, expected):
    assert k_max(l, m, n) == expected


def _valid(lmax=8, tmax=8):
    for l in range(2, lmax + 1):
        for m in range(0, tmax + 1):
            for n in range(0, tmax + 1):
                if m + n >= l - 1:
                    yield l, m, n


def test_top_stratum_law():
    for l, m, n in _valid():
        top = k_max(l, m, n)
        if top == 0:
            continue
        expected = 4 * (l + 1) if m == n else 2 * (l + 1)
        assert chi_BN(top, l, m, n) == expected
        for k in range(top + 1, l + 1):
            assert chi_BN(k, l, m, n) == 0


def test_weighted_sum_identity():
    for l, m, n in _valid():
        lhs = xi(l, m) + xi(l, n)
        rhs = sum(k * chi_BN(k, l, m, n) for k in range(1, l + 1))
        assert lhs == rhs


@pytest.mark.parametrize("args", [(1, 1, 0, 0), (0, 3, 1, 1), (1, 5, 0, 2), (1, 3, -1, 3)])
def test_chi_bn_rejects_outside_hypotheses(args):
    with pytest.raises(ParameterError):
        chi_BN(*args)


def test_raw_accessors_defined_everywhere():
    # S and T make sense for any twist, even where BN does not decompose
    assert chi_T(2, 5, 0) == chi_T_stratified(2, 5, 0)
    assert chi_S(1, 6, 1) > 0


def test_enumeration_scales():
    phi = enumerate_phi(5, 25, 3)
    assert phi and all(sum(p) == 25 and excess(p, 3) == 5 for p in phi)
    psi = enumerate_psi(3, 20, 4)
    assert all(sum(a) + sum(b) == 20 for a, b in psi)
    assert len(enumerate_partitions(25)) == 1958
