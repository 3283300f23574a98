"""Characters, the sphere, Sigma membership, kernel finiteness types."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thompson_sigma.charspace import (
    annihilator_basis,
    character,
    chi1,
    chi2,
    evaluate,
    in_sigma1,
    in_sigma_m,
    kernel_finiteness,
    parse_character,
    sphere_point,
)
from thompson_sigma.errors import (
    ArityMismatchError,
    ConjectureRequiredError,
    ParseError,
    ZeroCharacterError,
)
from thompson_sigma.words import parse_word


def grid_characters(n, span):
    """All nonzero integer vectors with entries in [-span, span]."""
    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(-span, span + 1):
            yield from rec(prefix + [v])

    for values in rec([]):
        if any(v != 0 for v in values):
            yield character(n, values)


class TestBasics:
    def test_chi1_chi2(self):
        assert chi1(2).values == (-1, 0)
        assert chi2(2).values == (1, 1)
        assert chi1(3).values == (-1, 0, 0)
        assert tuple(a + b for a, b in zip(chi1(4).values, chi2(4).values)) == (0, 1, 1, 1)

    def test_extension_rule(self):
        chi = character(3, (5, 7, 11))
        assert chi.value_at(3) == 7  # x_3 folds onto x_1
        assert chi.value_at(4) == 11
        assert chi.value_at(5) == 7

    def test_evaluate(self):
        assert evaluate(character(2, (1, 1)), parse_word(2, "x0 x1^-1")) == 0
        assert evaluate(chi1(2), parse_word(2, "x0")) == -1
        assert evaluate(character(2, (2, 3)), parse_word(2, "x2")) == 3

    def test_evaluate_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            evaluate(chi1(2), parse_word(3, "x0"))

    def test_parse(self):
        assert parse_character(2, "-1,0") == chi1(2)
        assert parse_character(2, "1/2, 3").values == (Fraction(1, 2), Fraction(3))
        with pytest.raises(ParseError):
            parse_character(2, "1")
        with pytest.raises(ParseError):
            parse_character(2, "a,b")

    def test_sphere_point_normalization(self):
        assert sphere_point(character(2, (-2, 0))) == sphere_point(chi1(2))
        assert sphere_point(character(2, (3, 3))) == sphere_point(chi2(2))
        assert sphere_point(character(2, (-3, 3))).values == (-1, 1)
        with pytest.raises(ZeroCharacterError):
            sphere_point(character(2, (0, 0)))


class TestSigma1:
    def test_exceptional_points(self):
        assert not in_sigma1(chi1(2))
        assert not in_sigma1(character(2, (-2, 0)))
        assert in_sigma1(character(2, (0, 1)))
        assert not in_sigma1(chi2(3))

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_positive_scaling_invariance(self, data):
        n = data.draw(st.sampled_from((2, 3)))
        values = data.draw(
            st.lists(st.integers(-4, 4), min_size=n, max_size=n).filter(
                lambda vs: any(vs)
            )
        )
        chi = character(n, values)
        scale = Fraction(
            data.draw(st.integers(1, 9)), data.draw(st.integers(1, 9))
        )
        scaled = character(n, tuple(v * scale for v in values))
        assert in_sigma1(chi) == in_sigma1(scaled)

    def test_exactly_two_failures_on_grid(self):
        for n, span in ((2, 6), (3, 3)):
            failing = {
                sphere_point(chi)
                for chi in grid_characters(n, span)
                if not in_sigma1(chi)
            }
            assert failing == {sphere_point(chi1(n)), sphere_point(chi2(n))}


class TestSigmaM:
    def test_wedge_examples(self):
        assert not in_sigma_m(character(2, (0, 1)), 2)
        assert in_sigma_m(character(2, (1, -1)), 2)
        assert not in_sigma_m(chi2(3), 2)

    def test_m1_defers(self):
        assert in_sigma_m(character(2, (0, 1)), 1)
        assert not in_sigma_m(chi1(2), 1)

    def test_conjecture_gate(self):
        chi = character(3, (1, 2, 3))
        with pytest.raises(ConjectureRequiredError):
            in_sigma_m(chi, 3)
        assert in_sigma_m(chi, 3, assume_conjecture=True)
        # n = 2 never needs the flag
        assert in_sigma_m(character(2, (1, -1)), 7)

    def test_zero_character_rejected(self):
        with pytest.raises(ZeroCharacterError):
            in_sigma_m(character(2, (0, 0)), 2)

    def test_monotone_in_m(self):
        # Sigma^m inside Sigma^(m-1)
        for chi in grid_characters(2, 4):
            for m in (2, 3, 4):
                if in_sigma_m(chi, m):
                    assert in_sigma_m(chi, m - 1)
        for chi in grid_characters(3, 2):
            if in_sigma_m(chi, 2):
                assert in_sigma_m(chi, 1)


class TestKernelFiniteness:
    def test_full_rank_is_f_infinity(self):
        report = kernel_finiteness([[2, 0], [0, 3]])
        assert report.is_finitely_generated
        assert report.max_certified_f_type == "infinity"
        assert report.witness is None
        assert not report.assumed_conjecture

    def test_fg_but_not_f2(self):
        # annihilator of Z(1,1) is the (-1,1) direction: 2*chi1 + 1*chi2
        report = kernel_finiteness([[1, 1]])
        assert report.is_finitely_generated
        assert report.max_certified_f_type == 1
        assert report.witness is not None
        assert sphere_point(report.witness).values == (-1, 1)

    def test_not_finitely_generated(self):
        # the subgroup generated by G' and x_1: annihilator holds chi1
        report = kernel_finiteness([[0, 1]])
        assert not report.is_finitely_generated
        assert report.max_certified_f_type == 0
        assert sphere_point(report.witness) == sphere_point(chi1(2))

    def test_kernel_of_chi2_not_fg(self):
        for n in (2, 3, 4):
            rows = [
                [1 if c == i else (-1 if c == i + 1 else 0) for c in range(n)]
                for i in range(n - 1)
            ]
            report = kernel_finiteness(rows)
            assert not report.is_finitely_generated
            assert sphere_point(report.witness) == sphere_point(chi2(n))

    def test_x0_xn1_subgroup_at_least_f2(self):
        for n in (3, 4, 5):
            rows = [
                [1 if c == 0 else 0 for c in range(n)],
                [1 if c == n - 1 else 0 for c in range(n)],
            ]
            report = kernel_finiteness(rows)
            assert report.is_finitely_generated
            assert report.max_certified_f_type == 2
            assert not report.assumed_conjecture
            flagged = kernel_finiteness(rows, assume_conjecture=True)
            assert flagged.max_certified_f_type == "infinity"
            assert flagged.assumed_conjecture

    def test_n2_wedge_missed_is_f_infinity_unconditionally(self):
        # annihilator of Z(1,-2) is spanned by (2,1): outside the wedge
        report = kernel_finiteness([[1, -2]])
        assert report.max_certified_f_type == "infinity"
        assert not report.assumed_conjecture

    def test_annihilator_basis(self):
        basis = annihilator_basis([[1, 1]])
        assert len(basis) == 1
        a, b = basis[0]
        assert a + b == 0 and (a, b) != (0, 0)
