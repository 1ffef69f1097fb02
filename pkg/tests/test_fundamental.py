import pytest

from mltab.cartan import DomainError, LieType, simple_root_in_weights
from mltab.fundamental import (
    is_letter,
    letter_e,
    letter_eps,
    letter_f,
    letter_key,
    letter_phi,
    letter_weight,
    letters,
    word_e,
    word_eps,
    word_f,
    word_f_position,
    word_phi,
)


def lt(name):
    return LieType.parse(name)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("A3", (1, 2, 3, 4)),
        ("B3", (1, 2, 3, 0, -3, -2, -1)),
        ("C3", (1, 2, 3, -3, -2, -1)),
        ("D4", (1, 2, 3, 4, -4, -3, -2, -1)),
        ("G2", (1, 2, 3, 0, -3, -2, -1)),
    ],
)
def test_letters(name, expected):
    assert letters(lt(name)) == expected


def test_letter_order():
    b3 = lt("B3")
    ranks = [letter_key(b3, x) for x in letters(b3)]
    assert ranks == sorted(ranks)
    # type D: r and -r share a rank
    d4 = lt("D4")
    assert letter_key(d4, 4) == letter_key(d4, -4)
    assert letter_key(d4, 3) < letter_key(d4, 4) < letter_key(d4, -3)


def test_is_letter():
    b3 = lt("B3")
    assert is_letter(b3, 0)
    assert is_letter(b3, -3)
    assert not is_letter(b3, 4)
    assert not is_letter(lt("C3"), 0)
    with pytest.raises(DomainError):
        letter_key(b3, 9)


class TestEdges:
    def test_type_a_chain(self):
        a3 = lt("A3")
        assert letter_f(a3, 1, 1) == 2
        assert letter_f(a3, 3, 3) == 4
        assert letter_f(a3, 2, 1) is None

    def test_type_b_middle(self):
        b3 = lt("B3")
        assert letter_f(b3, 3, 3) == 0
        assert letter_f(b3, 3, 0) == -3
        assert letter_f(b3, 2, -3) == -2
        assert letter_e(b3, 3, 0) == 3

    def test_type_c_fold(self):
        c3 = lt("C3")
        assert letter_f(c3, 3, 3) == -3
        assert letter_f(c3, 3, 0) is None

    def test_type_d_diamond(self):
        d4 = lt("D4")
        assert letter_f(d4, 3, 3) == 4
        assert letter_f(d4, 4, 3) == -4
        assert letter_f(d4, 4, 4) == -3
        assert letter_f(d4, 3, -4) == -3
        assert letter_f(d4, 4, -4) is None
        assert letter_f(d4, 3, 4) is None

    def test_g2_path(self):
        g2 = lt("G2")
        path = [1, 2, 3, 0, -3, -2, -1]
        indices = [1, 2, 1, 1, 2, 1]
        for x, y, i in zip(path, path[1:], indices):
            assert letter_f(g2, i, x) == y
            assert letter_e(g2, i, y) == x

    def test_f_e_inverse_on_letters(self):
        for name in ["A3", "B3", "C3", "D4", "G2"]:
            lie = lt(name)
            for x in letters(lie):
                for i in lie.index_set:
                    y = letter_f(lie, i, x)
                    if y is not None:
                        assert letter_e(lie, i, y) == x


class TestEpsPhi:
    def test_counts_match_edges(self):
        for name in ["B3", "C3", "D4", "G2"]:
            lie = lt(name)
            for x in letters(lie):
                for i in lie.index_set:
                    assert letter_phi(lie, i, x) == (0 if letter_f(lie, i, x) is None else 1) + (
                        0
                        if letter_f(lie, i, x) is None or letter_f(lie, i, letter_f(lie, i, x)) is None
                        else 1
                    )

    def test_double_edges(self):
        # the only two-step strings: through 0 in type B, through 3 in G2 (via i=1)
        b3 = lt("B3")
        assert letter_phi(b3, 3, 3) == 2
        assert letter_eps(b3, 3, -3) == 2
        assert letter_eps(b3, 3, 0) == 1
        g2 = lt("G2")
        assert letter_phi(g2, 1, 3) == 2
        assert letter_eps(g2, 1, 3) == 0
        assert letter_eps(g2, 1, -3) == 2
        assert letter_phi(g2, 1, 0) == 1


def test_letter_weights_sum_to_zero():
    for name in ["A2", "B3", "C3", "D4", "G2"]:
        lie = lt(name)
        total = [0] * lie.rank
        for x in letters(lie):
            for k, c in enumerate(letter_weight(lie, x)):
                total[k] += c
        assert total == [0] * lie.rank


def test_letter_weights_drop_by_simple_root():
    for name in ["A3", "B3", "C3", "D4", "G2"]:
        lie = lt(name)
        for x in letters(lie):
            for i in lie.index_set:
                y = letter_f(lie, i, x)
                if y is None:
                    continue
                alpha = simple_root_in_weights(lie, i)
                assert letter_weight(lie, y) == tuple(
                    a - b for a, b in zip(letter_weight(lie, x), alpha)
                )


def test_highest_letter_weight():
    assert letter_weight(lt("B3"), 1) == (1, 0, 0)
    assert letter_weight(lt("B3"), -1) == (-1, 0, 0)
    assert letter_weight(lt("B3"), 0) == (0, 0, 0)


class TestWords:
    def test_signature_rule(self):
        a2 = lt("A2")
        # word (1, 2, 1): the minus at pos 1 cancels the plus at pos 0
        word = (1, 2, 1)
        assert word_phi(a2, 1, word) == 1
        assert word_eps(a2, 1, word) == 0
        assert word_f_position(a2, 1, word) == 2
        assert word_f(a2, 1, word) == (1, 2, 2)

    def test_cancellation(self):
        a2 = lt("A2")
        # (2, 1): the minus from 2 cancels nothing to its left; plus survives at pos 1
        assert word_eps(a2, 1, (2, 1)) == 1
        assert word_phi(a2, 1, (2, 1)) == 1
        assert word_f(a2, 1, (2, 1)) == (2, 2)
        assert word_e(a2, 1, (2, 1)) == (1, 1)
        # (1, 2): plus at 0 cancels against the following minus
        assert word_eps(a2, 1, (1, 2)) == 0
        assert word_phi(a2, 1, (1, 2)) == 0
        assert word_f(a2, 1, (1, 2)) is None
        assert word_e(a2, 1, (1, 2)) is None

    def test_f_e_inverse_on_words(self):
        b2 = lt("B2")
        word = (2, 0, -2, 1)
        for i in b2.index_set:
            down = word_f(b2, i, word)
            if down is not None:
                assert word_e(b2, i, down) == word
            up = word_e(b2, i, word)
            if up is not None:
                assert word_f(b2, i, up) == word

    def test_double_contribution(self):
        # a single letter can emit two pluses (phi = 2)
        b2 = lt("B2")
        assert word_phi(b2, 2, (2,)) == 2
        assert word_f(b2, 2, (2,)) == (0,)
        assert word_f(b2, 2, (0,)) == (-2,)
