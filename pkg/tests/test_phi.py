"""The framed-letter action: tables, properties, and case fixtures."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purehilden.braids import braids_equal
from purehilden.catalog import framed_letters, realize
from purehilden.phi import (
    FramedWord,
    PhiCase,
    _all_letters,
    check_inverse_squared,
    check_phi_inverse,
    check_property_A,
    check_property_B,
    check_property_C_case,
    check_property_D_weak,
    load_phi_cases,
    phi,
    phi_letter,
)
from purehilden.symbols import GeneratorSymbol, SWord, p, sigma, t, tau, word, x, y


def framed_strategy(n=4, max_len=4):
    letters = st.tuples(
        st.one_of(
            st.integers(1, n - 1).map(lambda i: sigma(i)),
            st.integers(1, n).map(lambda k: tau(k)),
        ),
        st.sampled_from((1, -1)),
    )
    return st.lists(letters, max_size=max_len).map(lambda ls: SWord(n, tuple(ls)))


def sword_strategy(n=4, max_len=6):
    syms = _all_letters(n)
    letters = st.tuples(st.sampled_from(syms), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_len).map(lambda ls: SWord(n, tuple(ls)))


class TestLetterTable:
    def test_tau_fixes_bands(self):
        assert phi(word(2, tau(1)), word(2, p(1, 2))) == word(2, p(1, 2))

    def test_adjacent_swap_turns_y_into_x(self):
        assert phi(word(2, sigma(1)), word(2, y(1, 2))) == word(2, x(1, 2))

    def test_tau_reverses_own_loop(self):
        got = phi(word(3, tau(1)), word(3, x(1, 3)))
        assert got.format() == "x(1,3)^-1 p(1,3)"

    def test_double_half_twist_conjugates(self):
        got = phi(word(2, tau(1), tau(1)), word(2, x(1, 2)))
        assert got.format() == "p(1,2)^-1 x(1,2) p(1,2)"

    def test_t_letters_swap(self):
        assert phi(word(3, sigma(1)), word(3, t(1))) == word(3, t(2))
        assert phi(word(3, sigma(1)), word(3, t(2))) == word(3, t(1))
        assert phi(word(3, sigma(1)), word(3, t(3))) == word(3, t(3))
        # The inverse table swaps the same pair.
        assert phi(word(3, (sigma(1), -1)), word(3, t(1))) == word(3, t(2))

    def test_inverse_framed_letter_uses_own_table(self):
        got = phi_letter(tau(1), -1, x(1, 2), 1, 2)
        assert got.format() == "p(1,2) x(1,2)^-1"

    def test_inverse_symbol_letter_is_formal_inverse(self):
        fwd = phi_letter(sigma(1), 1, x(1, 2), 1, 3)
        bwd = phi_letter(sigma(1), 1, x(1, 2), -1, 3)
        assert bwd == fwd.inverse()

    def test_shift_cases_at_boundary_conditions(self):
        # sigma at the larger index of an adjacent pair still shifts it.
        assert phi(word(3, sigma(2)), word(3, x(1, 2))) == word(3, x(1, 3))
        # sigma between a distance-two pair conjugates it downward.
        got = phi(word(3, sigma(2)), word(3, x(1, 3)))
        assert got.format() == "p(2,3) x(1,2) p(2,3)^-1"

    def test_non_framed_letter_rejected(self):
        with pytest.raises(ValueError):
            phi_letter(p(1, 2), 1, x(1, 2), 1, 2)

    def test_framed_word_type_rejects_symbols(self):
        with pytest.raises(ValueError):
            FramedWord(2, ((p(1, 2), 1),))
        FramedWord(2, ((sigma(1), 1), (tau(2), -1)))


class TestActionLaws:
    def test_empty_word_is_identity(self):
        w = SWord.parse("x(1,2) t(1)^-1 y(2,3)", 3)
        assert phi(SWord(3), w) == w

    def test_letter_then_inverse_is_identity(self):
        w = SWord.parse("x(1,3) y(1,2)", 3)
        g = word(3, sigma(1), (sigma(1), -1))
        assert phi(g, w) == w

    @settings(max_examples=50, deadline=None)
    @given(framed_strategy(), sword_strategy(), sword_strategy())
    def test_automorphism_on_products(self, g, u, v):
        lhs = phi(g, u * v)
        rhs = (phi(g, u) * phi(g, v)).free_reduced()
        assert lhs == rhs

    @settings(max_examples=20, deadline=None)
    @given(framed_strategy(n=3, max_len=2), framed_strategy(n=3, max_len=2),
           st.sampled_from(_all_letters(3)))
    def test_action_composes_at_braid_level(self, g1, g2, s):
        lhs = realize(phi(g1 * g2, word(3, s)))
        rhs = realize(phi(g1, phi(g2, word(3, s))))
        assert braids_equal(lhs, rhs)


class TestPropertyA:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_all_single_letters(self, n):
        for g in framed_letters(n):
            for sign in (1, -1):
                gw = SWord(n, ((g, sign),))
                for s in _all_letters(n):
                    assert check_property_A(gw, word(n, s)), (g, sign, s)

    def test_spec_instances(self):
        assert check_property_A(word(2, tau(1)), word(2, x(1, 2)))
        assert check_property_A(word(2, sigma(1)), word(2, y(1, 2)))
        assert check_property_A(SWord(2), word(2, t(1)))

    def test_random_words(self):
        rng = random.Random(17)
        letters = _all_letters(3)
        framed = framed_letters(3)
        for _ in range(10):
            g = SWord(3, tuple((rng.choice(framed), rng.choice((1, -1)))
                               for _ in range(rng.randint(1, 3))))
            w = SWord(3, tuple((rng.choice(letters), rng.choice((1, -1)))
                               for _ in range(rng.randint(1, 4))))
            assert check_property_A(g, w)


class TestPropertyB:
    def test_all_letters_stay_in_stabilizer_alphabet(self):
        n = 4
        stab = [s for s in _all_letters(n) if s.kind in ("p", "t")]
        for g in framed_letters(n):
            for sign in (1, -1):
                gw = SWord(n, ((g, sign),))
                for s in stab:
                    assert check_property_B(gw, word(n, s))

    def test_spec_instances(self):
        assert check_property_B(word(3, sigma(2)), SWord.parse("p(2,3) t(1)", 3))
        assert check_property_B(word(3, tau(1)), word(3, t(1)))
        assert check_property_B(word(2, sigma(1)), word(2, p(1, 2)))

    def test_rejects_non_stabilizer_input(self):
        with pytest.raises(ValueError):
            check_property_B(word(2, tau(1)), word(2, x(1, 2)))


class TestInverses:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_tables_are_mutually_inverse(self, n):
        for g in framed_letters(n):
            assert check_phi_inverse(g, n), g.format()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_inverse_squared_conjugations(self, n):
        for kind, top in (("sigma", n - 1), ("tau", n)):
            for m in range(1, top + 1):
                for s in _all_letters(n):
                    assert check_inverse_squared(m, kind, s, n), (kind, m, s)

    def test_spec_instances(self):
        assert check_inverse_squared(1, "tau", x(1, 2), 2)
        assert check_inverse_squared(1, "sigma", y(1, 3), 3)
        assert check_inverse_squared(2, "sigma", p(1, 2), 3)

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            check_inverse_squared(1, "rho", x(1, 2), 2)


class TestPropertyCCases:
    def test_all_fixtures_verify(self):
        cases = load_phi_cases()
        assert len(cases) == 27
        for case in cases:
            assert check_property_C_case(case), case.paper_case

    def test_fixture_coverage(self):
        labels = {c.paper_case for c in load_phi_cases()}
        sigma_patterns = [
            "before-first", "at-first adjacent", "at-first separated",
            "before-second", "at-second adjacent", "at-second separated",
            "before-third", "at-third",
        ]
        for pattern in sigma_patterns:
            hits = [l for l in labels if l.startswith(f"sigma {pattern} ")]
            assert len(hits) == 3, pattern
        assert sum(1 for l in labels if l.startswith("tau ")) == 3

    def test_case_words_have_stabilizer_conjugators(self):
        for case in load_phi_cases():
            assert case.h1.is_over(("p", "t"))
            assert case.h2.is_over(("p", "t"))

    def test_spec_case_instances(self):
        spec_cases = [
            PhiCase(4, word(4, sigma(1)), SWord.parse("x(2,3) x(2,4)", 4),
                    word(4, p(1, 2)), SWord.parse("x(1,3) x(1,4)", 4),
                    word(4, (p(1, 2), -1)), "spot"),
            PhiCase(3, word(3, tau(1)), SWord.parse("x(1,2) x(1,3)", 3),
                    SWord(3), SWord.parse("x(1,3)^-1 x(1,2)^-1", 3),
                    SWord.parse("p(1,2) p(1,3)", 3), "spot"),
            PhiCase(4, word(4, sigma(3)), SWord.parse("y(1,3) y(2,3)", 4),
                    SWord(4), SWord.parse("y(1,4) y(2,4)", 4), SWord(4), "spot"),
        ]
        for case in spec_cases:
            assert check_property_C_case(case)

    def test_rejects_non_stabilizer_conjugator(self):
        with pytest.raises(ValueError):
            PhiCase(3, word(3, tau(1)), word(3, x(1, 2)),
                    word(3, y(1, 2)), word(3, x(1, 2)), SWord(3), "bad")

    def test_mutated_case_fails(self):
        case = load_phi_cases()[0]
        broken = PhiCase(case.n, case.g, case.r, case.h1,
                         (case.r_target * word(case.n, t(1))).free_reduced(),
                         case.h2, "mutant")
        assert not check_property_C_case(broken)


class TestPropertyDWeak:
    def test_images_of_relations_stay_equal(self):
        assert check_property_D_weak(3) == []

    def test_images_of_relations_stay_equal_at_four_caps(self):
        assert check_property_D_weak(4) == []
