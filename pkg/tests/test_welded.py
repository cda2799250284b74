import pytest
from hypothesis import given

from linkmap.milnor import Mf3Auto, magnus
from linkmap.parsing import ParseError
from linkmap.welded import (
    FORBIDDEN, RELATIONS, BraidWord, NotPureError, braid_action, braid_permutation,
    compose_images, conjugating_images, is_identity_action, is_pure, letter_name, longitudes,
    parse_braid, relation_holds, to_mf3_auto,
)

from hypothesis import strategies as st

from strategies import letters, pure_braids

braid_words = st.lists(letters, max_size=6).map(lambda ls: BraidWord(tuple(ls)))

CONJ_X_BY_Y = "s1' v1"


class TestParsing:
    def test_examples(self):
        assert parse_braid("") == BraidWord()
        b = parse_braid("s1 v2 s1'")
        assert len(b) == 3 and [letter_name(a) for a in b.letters] == ["s1", "v2", "s1'"]
        assert str(b) == "s1 v2 s1'"

    @pytest.mark.parametrize("text", ["x9", "s3", "v0", "v1'", "s", "s1''"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_braid(text)

    def test_normalized(self):
        assert parse_braid("s1 s1' v2 v2 s2").normalized() == parse_braid("s2")


class TestPermutation:
    def test_examples(self):
        assert braid_permutation("") == (1, 2, 3)
        assert braid_permutation("v1") == (2, 1, 3)
        assert braid_permutation("s1 s1") == (1, 2, 3)
        assert is_pure("s1 s1") and not is_pure("s2")

    @given(braid_words)
    def test_permutation_of_action(self, b):
        # the image of x_i abelianizes to the generator named by the permutation
        perm = braid_permutation(b)
        for n, img in enumerate(braid_action(b)):
            tally = [0, 0, 0]
            for g in img:
                tally[abs(g) - 1] += 1 if g > 0 else -1
            assert tally == [int(perm[n] == m + 1) for m in range(3)]


class TestAction:
    def test_identity(self):
        assert is_identity_action(braid_action(""))

    def test_conjugating_braid(self):
        assert braid_action(CONJ_X_BY_Y) == ((-2, 1, 2), (2,), (3,))

    def test_generators(self):
        assert braid_action("s1") == ((1, 2, -1), (1,), (3,))
        assert braid_action("v2") == ((1,), (3,), (2,))

    @pytest.mark.parametrize("name", sorted(RELATIONS))
    def test_relations(self, name):
        lhs, rhs = RELATIONS[name]
        assert relation_holds(lhs, rhs)
        assert is_identity_action(braid_action(lhs + " " + str(parse_braid(rhs).inverse())))

    def test_forbidden_move_fails(self):
        assert not relation_holds(*FORBIDDEN)

    @given(braid_words, braid_words)
    def test_action_of_product(self, a, b):
        assert braid_action(a + b) == compose_images(braid_action(a), braid_action(b))

    @given(braid_words)
    def test_inverse_word(self, b):
        assert is_identity_action(braid_action(b + b.inverse()))
        assert is_identity_action(braid_action(b.inverse() + b))


class TestLongitudes:
    def test_empty(self):
        d = longitudes("")
        assert d.longitudes == ((), (), ())
        assert set(d.exponents.values()) == {0}

    def test_conjugating_braid(self):
        d = longitudes(CONJ_X_BY_Y)
        assert d.longitudes == ((2,), (), ())
        assert (d.k, d.k_prime) == (1, 0)
        assert (d.l, d.l_prime, d.m, d.m_prime) == (0, 0, 0, 0)

    def test_not_pure(self):
        with pytest.raises(NotPureError):
            longitudes("s1")

    @given(pure_braids)
    def test_images_rebuild(self, b):
        assert tuple(magnus(w) for w in conjugating_images(b)) == tuple(magnus(w) for w in braid_action(b))
        assert conjugating_images(b) == braid_action(b)

    @given(pure_braids)
    def test_own_exponent_is_zero(self, b):
        d = longitudes(b)
        for i, w in enumerate(d.longitudes, start=1):
            assert sum(1 if g > 0 else -1 for g in w if abs(g) == i) == 0

    @given(pure_braids, pure_braids)
    def test_exponents_additive(self, a, b):
        ea, eb, eab = longitudes(a).exponents, longitudes(b).exponents, longitudes(a + b).exponents
        assert eab == {key: ea[key] + eb[key] for key in ea}

    def test_to_auto(self):
        assert to_mf3_auto(CONJ_X_BY_Y) == Mf3Auto([(2,), (), ()])
        assert to_mf3_auto("").is_identity()

    @given(pure_braids)
    def test_auto_of_inverse(self, b):
        assert to_mf3_auto(b + b.inverse()).is_identity()
        assert to_mf3_auto(b) @ to_mf3_auto(b.inverse()) == Mf3Auto.identity()
