import pytest
from hypothesis import given, settings, strategies as st

import oracles
from fockblocks.fock import LEG, FockVector, apply_S
from fockblocks.partitions import partitions_of
from fockblocks.symfunc import (
    inverse_kostka,
    iter_power_sum,
    kostka_inverse_matrix,
    kostka_matrix,
    lr_coefficient,
    lr_multi,
    plethysm_pe_schur,
    psi_e,
    rim_hook_sign,
    schur_product,
    schur_times_h,
    skew_schur,
)


def test_pieri_examples():
    assert schur_times_h((), 2) == {(2,): 1}
    assert schur_times_h((1,), 1) == {(2,): 1, (1, 1): 1}
    assert schur_times_h((2, 1), 1) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}


def test_pieri_matches_oracle():
    for n in range(8):
        for lam in partitions_of(n):
            for k in range(1, 4):
                assert schur_times_h(lam, k) == {mu: 1 for mu in oracles.pieri(lam, k)}


def test_kostka_small():
    k2 = kostka_matrix(2)
    # h_2 = s_2 and h_11 = s_2 + s_11
    assert (k2[(2,), (2,)], k2[(1, 1), (2,)]) == (1, 0)
    assert (k2[(2,), (1, 1)], k2[(1, 1), (1, 1)]) == (1, 1)
    assert kostka_matrix(1).entries == [[1]]


def test_kostka_matches_tableau_count():
    for n in range(1, 7):
        k = kostka_matrix(n)
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert k[lam, rho] == oracles.kostka_ssyt(lam, rho)


def test_kostka_diagonal():
    for n in range(1, 9):
        k, ki = kostka_matrix(n), kostka_inverse_matrix(n)
        for lam in partitions_of(n):
            assert k[lam, lam] == 1
            assert inverse_kostka(lam, lam) == 1


def test_inverse_kostka_examples():
    assert inverse_kostka((2,), (2,)) == 1
    assert inverse_kostka((2,), (1, 1)) == 0
    assert inverse_kostka((1, 1), (2,)) == -1
    assert inverse_kostka((1, 1), (1, 1)) == 1


def test_kostka_inverse_is_inverse():
    for n in range(1, 11):
        assert (kostka_matrix(n) @ kostka_inverse_matrix(n)).is_identity()


def test_lr_examples():
    assert lr_coefficient((3, 1), (), (3, 1)) == 1
    assert lr_coefficient((2,), (1,), (1,)) == 1
    assert lr_coefficient((1, 1), (1,), (1,)) == 1
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((3,), (1,), (1, 1)) == 0


def test_lr_multi_examples():
    assert lr_multi([(3,), ()], (3,)) == 1
    assert lr_multi([(2,), (1,)], (3,)) == 1
    assert lr_multi([(1,), (1,)], (2,)) == 1
    assert lr_multi([(1,), (1,)], (1, 1)) == 1
    with pytest.raises(ValueError):
        lr_multi([(1,)], (2,))


def test_lr_against_pieri_oracle():
    for n in range(10):
        for lam in partitions_of(n):
            for k in range(1, 11 - n):
                got = {nu: lr_coefficient(nu, lam, (k,)) for nu in partitions_of(n + k)}
                assert {nu: c for nu, c in got.items() if c} == {mu: 1 for mu in oracles.pieri(lam, k)}


def test_schur_product_against_jacobi_trudi():
    for a in range(6):
        for b in range(7 - a):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    assert dict(schur_product(lam, mu)) == oracles.jacobi_trudi_product(lam, mu)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions_of(n))),
       st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_lr_symmetry(lam, mu):
    assert schur_product(lam, mu) == schur_product(mu, lam)


def test_skew_schur_adjoint_to_product():
    for n in range(7):
        for nu in partitions_of(n):
            for k in range(n + 1):
                for lam in partitions_of(k):
                    sk = skew_schur(nu, lam)
                    for mu in partitions_of(n - k):
                        assert sk.get(mu, 0) == lr_coefficient(nu, lam, mu)


# -- rim hooks and plethysm --------------------------------------------------------------------

def test_psi_examples():
    # under the runner-order quotient the single horizontal domino (2) sits on runner 1
    assert psi_e((2,), 2) == (1, ((), (1,)))
    sign, quot = psi_e((1, 1), 2)
    assert sign == -1 and quot.size == 1
    assert psi_e((2, 1), 2) is None


def test_rim_hook_sign_is_independent_of_removal_order():
    for e in (2, 3, 4):
        for n in range(9):
            for lam in partitions_of(n):
                outcomes = oracles.all_core_removals(lam, e)
                parities = {p for _, p in outcomes}
                assert len(parities) == 1
                core = next(iter(outcomes))[0]
                if not core:
                    assert rim_hook_sign(lam, e, "leg") == (-1) ** parities.pop()


def test_arm_sign_relation():
    for e in (2, 3):
        for k in range(5):
            for lam in partitions_of(e * k):
                if psi_e(lam, e) is None:
                    continue
                assert rim_hook_sign(lam, e, "arm") == (-1) ** ((e - 1) * k) * rim_hook_sign(lam, e, "leg")


def test_plethysm_examples():
    assert plethysm_pe_schur((), 2) == {(): 1}
    assert plethysm_pe_schur((1,), 2) == {(2,): 1, (1, 1): -1}
    # the classical expansion of p_2[s_3]
    assert plethysm_pe_schur((3,), 2) == {(6,): 1, (5, 1): -1, (4, 2): 1, (3, 3): -1}
    # column statistic: the sign pattern of the row indexed by 3^2
    assert plethysm_pe_schur((3,), 2, "arm") == {(3, 3): 1, (4, 2): -1, (5, 1): 1, (6,): -1}


def test_plethysm_matches_power_sums():
    # p_e[h_1] = p_e, expanded by Murnaghan-Nakayama
    for e in (2, 3, 4):
        assert plethysm_pe_schur((1,), e) == iter_power_sum(e)


def test_plethysm_dual_route():
    for e in (2, 3):
        for k in range(5):
            for mu in partitions_of(k):
                ribbon = apply_S(FockVector.basis((), e), mu, LEG).at_one()
                assert dict(plethysm_pe_schur(mu, e, "leg")) == ribbon
