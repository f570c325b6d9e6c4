import pytest

import oracles
from golden import D4_E4, D4_E4_LABELS, E6_E2, E6_E2_LABELS, e6_row
from fockblocks.canonical import (
    bar,
    bar_images,
    bar_matrix,
    block_matrix,
    brauer_as_lusztig,
    canonical_minus,
    canonical_minus_all,
    canonical_plus,
    canonical_plus_all,
    conjugate_order,
    decomposition_matrix,
    inverse_decomposition_matrix,
    inverse_transpose_matrix,
    steinberg_factor,
)
from fockblocks.exact_ring import LaurentPoly
from fockblocks.fock import FockVector, apply_V_rho
from fockblocks.lusztig import block_partition
from fockblocks.partitions import core_and_quotient, decompose_singular, is_core, is_e_regular, partitions_of

SMALL = [(n, e) for e in (2, 3, 4) for n in range(9)]


def only_positive(p: LaurentPoly) -> bool:
    return all(k > 0 for k, _ in p.terms())


def only_negative(p: LaurentPoly) -> bool:
    return all(k < 0 for k, _ in p.terms())


# -- bar involution ------------------------------------------------------------------------------

def test_bar_small_cases():
    assert bar_matrix(0, 2).entries == [[1]]
    assert bar(FockVector.basis((), 2)) == FockVector.basis((), 2)
    # |2> + v|1,1> is fixed, and so is |1,1>
    assert bar(FockVector.basis((1, 1), 2)) == FockVector.basis((1, 1), 2)
    two = FockVector({(2,): 1, (1, 1): LaurentPoly({1: 1, -1: -1})}, 2)
    assert bar(FockVector.basis((2,), 2)) == two


def test_bar_fixes_singleton_blocks():
    for e in (2, 3, 4):
        for n in range(9):
            for core, members in block_partition(n, e):
                if len(members) == 1:
                    x = FockVector.basis(members[0], e)
                    assert bar(x) == x


def test_bar_is_involution():
    for n, e in SMALL:
        for lam in partitions_of(n):
            x = FockVector.basis(lam, e)
            assert bar(bar(x)) == x


def test_bar_is_semilinear():
    x = FockVector({(2,): LaurentPoly({1: 2}), (1, 1): LaurentPoly({0: 1, -2: 3})}, 2)
    expected = bar(FockVector.basis((2,), 2)).scale(LaurentPoly({-1: 2})) + bar(
        FockVector.basis((1, 1), 2)
    ).scale(LaurentPoly({0: 1, 2: 3}))
    assert bar(x) == expected


def test_bar_fixes_highest_weight_vectors():
    for e in (2, 3):
        for k in range(1, 5):
            for rho in partitions_of(k):
                x = apply_V_rho(FockVector.basis((), e), rho, "leg")
                assert bar(x) == x


@pytest.mark.parametrize("n,e", [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3), (6, 3), (4, 4)])
def test_bar_matches_linear_algebra_oracle(n, e):
    labels, ref = oracles.sympy_bar_matrix(n, e)
    images = bar_images(n, e)
    for j, lam in enumerate(labels):
        got = images[lam]
        for i, mu in enumerate(labels):
            assert dict(got.coefficient(mu).terms()) == ref[i][j]


def test_bar_matrix_layout():
    m = bar_matrix(2, 2)
    assert m.labels == [(2,), (1, 1)]
    assert m[(1, 1), (2,)] == LaurentPoly({1: 1, -1: -1})
    assert m[(2,), (1, 1)] == 0


# -- upper canonical basis -----------------------------------------------------------------------

def test_canonical_plus_examples():
    assert canonical_plus((2,), 2).vector == FockVector({(2,): 1, (1, 1): LaurentPoly({1: 1})}, 2)
    assert canonical_plus((1, 1), 2).vector == FockVector.basis((1, 1), 2)
    assert canonical_plus((2, 1), 2).vector == FockVector.basis((2, 1), 2)
    assert canonical_plus((), 3).vector == FockVector.basis((), 3)


def test_canonical_plus_properties():
    for n, e in SMALL:
        plus = canonical_plus_all(n, e)
        for lam, g in plus.items():
            assert g.coefficient(lam) == 1
            assert bar(g) == g
            for mu, c in g.items():
                if mu != lam:
                    assert only_positive(c)
                    assert core_and_quotient(mu, e)[0] == core_and_quotient(lam, e)[0]


def test_canonical_plus_is_order_independent():
    for e in (2, 3):
        for n in range(1, 9):
            assert canonical_plus_all(n, e, conjugate_order(n)) == canonical_plus_all(n, e)


def test_canonical_plus_rejects_bad_order():
    with pytest.raises(ValueError):
        canonical_plus_all(3, 2, [(3,), (2, 1)])


# -- decomposition matrices ---------------------------------------------------------------------------

def test_decomposition_matrix_small():
    assert decomposition_matrix(1, 2).entries == [[1]]
    assert decomposition_matrix(2, 2).entries == [[1, 0], [1, 1]]
    assert decomposition_matrix(0, 3).entries == [[1]]


def test_decomposition_matrix_n4_e4():
    d = decomposition_matrix(4, 4).restrict(D4_E4_LABELS)
    assert d.entries == D4_E4
    # the omitted label (2,2) is a 4-core and sits alone
    assert is_core((2, 2), 4)
    assert decomposition_matrix(4, 4)[(2, 2), (2, 2)] == 1


def test_decomposition_matrices_unitriangular_and_nonnegative():
    for n, e in SMALL:
        d = decomposition_matrix(n, e)
        assert d.is_lower_unitriangular()
        assert all(x >= 0 for row in d.entries for x in row)


def test_decomposition_matrix_is_block_diagonal():
    for n, e in SMALL:
        d = decomposition_matrix(n, e)
        for mu in d.labels:
            for lam in d.labels:
                if core_and_quotient(mu, e)[0] != core_and_quotient(lam, e)[0]:
                    assert d[mu, lam] == 0


def test_block_matrix():
    d = decomposition_matrix(4, 4)
    assert block_matrix(d, (), 4).labels == D4_E4_LABELS
    assert block_matrix(d, (2, 2), 4).entries == [[1]]


def test_mirrored_chevalley_rule_conjugates_labels():
    d = decomposition_matrix(2, 2, f_rule="below")
    assert d.labels == [(1, 1), (2,)]
    assert d.entries == [[1, 0], [1, 1]]


# -- lower canonical basis and inverse matrices ------------------------------------------------------

def test_canonical_minus_examples():
    assert canonical_minus((2,), 2).vector == FockVector.basis((2,), 2)
    assert canonical_minus((1, 1), 2).at_one() == {(2,): -1, (1, 1): 1}
    assert canonical_minus((1,) * 6, 2).at_one() == e6_row((1,) * 6)
    assert canonical_minus((2, 1), 2).vector == FockVector.basis((2, 1), 2)


def test_inverse_matrix_n6_e2():
    e6 = inverse_decomposition_matrix(6, 2).restrict(E6_E2_LABELS)
    assert e6.entries == E6_E2
    # the omitted label is the 2-core (3,2,1)
    assert inverse_decomposition_matrix(6, 2)[(3, 2, 1), (3, 2, 1)] == 1


def test_canonical_minus_coefficients():
    for n, e in SMALL:
        for lam, g in canonical_minus_all(n, e).items():
            assert g.coefficient(lam) == 1
            for mu, c in g.items():
                if mu != lam:
                    assert only_negative(c)


def test_inverse_transpose_at_one():
    for n, e in SMALL:
        d = decomposition_matrix(n, e)
        assert (d @ inverse_transpose_matrix(n, e).transpose()).is_identity()
        assert (inverse_decomposition_matrix(n, e) @ d).is_identity()


def test_inverse_transpose_generic():
    # D(v^-1) E(v)^T = I, which fixes the twist between the two bases
    for e in (2, 3):
        for n in range(9):
            d = decomposition_matrix(n, e, generic=True)
            dbar = type(d)(d.labels, [[LaurentPoly.coerce(x).bar() for x in row] for row in d.entries])
            assert (dbar @ inverse_transpose_matrix(n, e, generic=True).transpose()).is_identity()


# -- Steinberg factorization and Brauer characters ---------------------------------------------------

def test_steinberg_examples():
    check = steinberg_factor((3, 3), 2)
    assert (check.mu, check.alpha, check.at_one) == ((), (3,), True)
    assert canonical_minus((3, 3), 2).at_one() == e6_row((3, 3))
    check = steinberg_factor((2, 1, 1, 1, 1), 2)
    assert (check.mu, check.alpha, check.verified) == ((2,), (1, 1), True)
    assert canonical_minus((2, 1, 1, 1, 1), 2).at_one() == e6_row((2, 1, 1, 1, 1))
    reg = steinberg_factor((3, 1), 2)
    assert reg.alpha == () and reg.verified


def test_steinberg_other_singular_rows():
    for lam in ((2, 2, 2), (3, 1, 1, 1)):
        check = steinberg_factor(lam, 2)
        assert check.alpha and check.at_one
        assert canonical_minus(lam, 2).at_one() == e6_row(lam)


def test_steinberg_exhaustive():
    for e in (2, 3):
        for n in range(9):
            for lam in partitions_of(n):
                check = steinberg_factor(lam, e)
                assert check.at_one and check.generic, lam
                assert (check.mu, check.alpha) == decompose_singular(lam, e)


def test_brauer_examples():
    b = brauer_as_lusztig((1,) * 6, 2)
    assert str(b.levi) == "GL(3,q^2)" and b.singular and b.matches
    assert dict(b.expansion.items()) == e6_row((1,) * 6)
    b = brauer_as_lusztig((2, 2, 1, 1), 2)
    assert str(b.levi) == "GL(3,q^2)" and dict(b.expansion.items()) == e6_row((2, 2, 1, 1))
    b = brauer_as_lusztig((4, 1, 1), 2)
    assert str(b.levi) == "GL(4,q) x GL(1,q^2)" and dict(b.expansion.items()) == e6_row((4, 1, 1))
    b = brauer_as_lusztig((3, 1), 2)
    assert not b.singular and b.matches


def test_brauer_exhaustive():
    for e in (2, 3):
        for n in range(9):
            for lam in partitions_of(n):
                b = brauer_as_lusztig(lam, e)
                assert b.matches
                assert b.singular == (not is_e_regular(lam, e))
