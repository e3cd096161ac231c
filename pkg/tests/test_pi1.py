import pytest
from hypothesis import given

from knots11.omega import omega
from knots11.pi1 import (A, B, C, I_SHARP_BETA_IMAGE, ONE, LoopWord, TwistEndo,
                         calibration_report, check_calibration, generator_action, i_sharp, in_E,
                         word_action)
from knots11.words import TA, TB, TC, TwistWord, parse_word
from oracles import short_twist_words as twist_words


def test_calibration_passes():
    assert calibration_report() == []
    check_calibration()


def test_membership_facts():
    assert in_E(TB)
    assert in_E(TC)
    assert in_E((TB * TA * TB) ** 2)
    assert not in_E(TA)
    assert in_E(TwistWord.identity())


def test_i_sharp_kills_beta():
    assert I_SHARP_BETA_IMAGE == ONE
    assert i_sharp(A * B * C * B.inverse()) == A * C


def test_alpha_twist_matches_omega():
    assert word_action(TA).torus_matrix().rows() == [[1, 0], [1, 1]]


def test_identity_actions():
    assert word_action(TwistWord.identity()) == TwistEndo.identity()
    assert word_action(TA * TA.inverse()) == TwistEndo.identity()


@pytest.mark.parametrize("g", ["ta", "tb", "tc"])
def test_generator_inverses(g):
    ident = TwistEndo.identity()
    assert generator_action(g) @ generator_action(g, True) == ident
    assert generator_action(g, True) @ generator_action(g) == ident


def test_braid_relations():
    # alpha meets beta and gamma once; beta and gamma are disjoint
    assert word_action("ta tb ta") == word_action("tb ta tb")
    assert word_action("ta tc ta") == word_action("tc ta tc")
    assert word_action("tb tc") == word_action("tc tb")


@given(twist_words, twist_words)
def test_word_action_is_a_homomorphism(u, v):
    assert word_action(u * v) == word_action(u) @ word_action(v)


@given(twist_words)
def test_inverse_word_acts_inversely(w):
    assert word_action(w.inverse()) @ word_action(w) == TwistEndo.identity()


@given(twist_words)
def test_abelianization_matches_omega(w):
    assert word_action(w).torus_matrix() == omega(w)


@given(twist_words)
def test_punctured_homology_action_is_unimodular(w):
    m = word_action(w).abelianized()
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert det in (1, -1)


def test_string_input_and_images():
    assert word_action("tb").images() == {"a": "a b^-1", "b": "b", "c": "c"}
    assert in_E("tb ta tb tb ta tb")


def test_loop_word_alphabet():
    with pytest.raises(ValueError):
        LoopWord.gen("d")
    assert str(parse_word("tm")) == "tb tc^-1"
