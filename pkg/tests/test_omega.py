from math import gcd

import pytest
from hypothesis import given

from knots11.errors import DomainError
from knots11.omega import (GENERATOR_MATRICES, LensSpace, Sl2Matrix, continued_fraction,
                           factor_off_trivial, is_kernel, lens_space, lens_space_of, omega,
                           trivial_knot_word)
from knots11.words import TA, TB, TC, TwistWord, expand_kernel, parse_word
from oracles import brute_omega, kernel_words, twist_words


def test_generator_matrices():
    assert omega(TA).rows() == [[1, 0], [1, 1]]
    assert omega(TB).rows() == [[1, -1], [0, 1]]
    assert omega(TC) == omega(TB)
    assert omega(TwistWord.identity()) == Sl2Matrix.identity()
    for g, m in GENERATOR_MATRICES.items():
        assert omega(TwistWord.gen(g)) == m
        assert omega(TwistWord.gen(g, 5)).rows() == brute_omega([(g, 5)])


def test_determinant_is_enforced():
    with pytest.raises(DomainError):
        Sl2Matrix(2, 0, 0, 1)


def test_matrix_string():
    assert str(omega(TA)) == "[[1,0],[1,1]]"


@given(twist_words)
def test_omega_matches_letterwise_product(w):
    assert omega(w).rows() == brute_omega(w)


@given(twist_words, twist_words)
def test_omega_is_a_homomorphism(u, v):
    assert omega(u * v) == omega(u) @ omega(v)
    assert omega(u.inverse()) == omega(u).inverse()


@given(kernel_words)
def test_kernel_words_map_to_identity(w):
    assert is_kernel(expand_kernel(w))


def test_trivial_knot_words_of_s3_and_s1xs2():
    assert trivial_knot_word(1, 0) == TB * TA * TB
    assert lens_space_of(trivial_knot_word(1, 0)) == LensSpace(1, 0)
    assert lens_space_of(trivial_knot_word(0, 1)) == LensSpace(0, 1)


def test_trivial_knot_word_shapes():
    # 5/2 = [2, 2]: even length, so tb ta tb is appended
    assert trivial_knot_word(5, 2) == parse_word("ta^2 tb^-2 tb ta tb")
    # 7/5 = [1, 2, 2]: odd length, nothing appended
    assert trivial_knot_word(7, 5) == parse_word("ta tb^-2 ta^2")


@pytest.mark.parametrize("p", range(2, 25))
def test_trivial_knot_word_lens_spaces(p):
    for q in range(1, p):
        if gcd(p, q) == 1:
            assert lens_space_of(trivial_knot_word(p, q)) == LensSpace(p, q)


@pytest.mark.parametrize("p,q", [(4, 2), (5, 0), (3, 5), (-1, 0)])
def test_trivial_knot_word_domain(p, q):
    with pytest.raises(DomainError):
        trivial_knot_word(p, q)


def test_continued_fraction():
    assert continued_fraction(7, 3) == [2, 3]
    assert continued_fraction(13, 5) == [2, 1, 1, 2]
    assert continued_fraction(5, 1) == [5]


def test_lens_space_normalisation_and_homeomorphism():
    assert lens_space(-7, 9) == LensSpace(7, 2)
    assert lens_space(1, 5) == LensSpace(1, 0)
    assert lens_space(0, -1) == LensSpace(0, 1)
    assert LensSpace(7, 2).homeomorphic(LensSpace(7, 3))  # 2 * 4 = 1 mod 7, -4 = 3
    assert LensSpace(7, 2).homeomorphic(LensSpace(7, 5))
    assert not LensSpace(7, 1).homeomorphic(LensSpace(7, 2))
    with pytest.raises(DomainError):
        LensSpace(6, 2)


def test_factor_off_trivial():
    w = parse_word("tb tc^-1 tb ta tb")
    assert factor_off_trivial(w, 1, 0) == parse_word("tb tc^-1")
    assert factor_off_trivial(TA, 1, 0) is None


@given(kernel_words)
def test_factor_off_recovers_kernel_prefix(k):
    prefix = expand_kernel(k)
    for p, q in ((1, 0), (5, 2), (7, 3)):
        assert factor_off_trivial(prefix * trivial_knot_word(p, q), p, q) == prefix
