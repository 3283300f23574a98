"""Shift and flip matrices, their orders, word-level shift, orbits."""

from fractions import Fraction

import pytest

from thompson_sigma.autos import (
    CharacterMatrix,
    apply,
    d_orbit,
    delta_involution,
    identity_matrix,
    mat_mul,
    mat_pow,
    matrix_A,
    matrix_C,
    order_of,
    phi_on_word,
    reduction_identity_check,
    rho0_cycle_power,
)
from thompson_sigma.charspace import character, chi1, chi2, evaluate, sphere_point
from thompson_sigma.errors import DomainError
from thompson_sigma.words import parse_word, word


def det(mat: CharacterMatrix) -> Fraction:
    n = mat.arity
    rows = [[Fraction(x) for x in r] for r in mat.entries]
    sign = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    out = Fraction(sign)
    for c in range(n):
        out *= rows[c][c]
    return out


class TestMatrixA:
    def test_display_n3(self):
        assert matrix_A(3).entries == ((1, 0, 0), (0, 0, 1), (0, 1, 0))

    def test_n2_is_identity(self):
        assert matrix_A(2) == identity_matrix(2)

    def test_action(self):
        out = apply(matrix_A(3), character(3, (1, 2, 3)))
        assert out.values == (1, 3, 2)

    def test_order(self):
        assert order_of(matrix_A(2)) == 1
        assert order_of(matrix_A(4)) == 3
        for n in range(2, 9):
            assert mat_pow(matrix_A(n), n - 1) == identity_matrix(n)
            assert order_of(matrix_A(n)) == max(1, n - 1)

    def test_fixes_chi1_and_chi2(self):
        for n in (2, 3, 5):
            assert apply(matrix_A(n), chi1(n)) == chi1(n)
            assert apply(matrix_A(n), chi2(n)) == chi2(n)


class TestMatrixC:
    def test_display_n3(self):
        assert matrix_C(3).entries == ((-1, 0, 0), (-1, 0, 1), (-1, 1, 0))

    def test_display_n2(self):
        assert matrix_C(2).entries == ((-1, 0), (-1, 1))

    def test_swaps_chi1_chi2(self):
        for n in range(2, 7):
            assert apply(matrix_C(n), chi1(n)) == chi2(n)
            assert apply(matrix_C(n), chi2(n)) == chi1(n)

    def test_involution(self):
        for n in range(2, 9):
            assert mat_mul(matrix_C(n), matrix_C(n)) == identity_matrix(n)
            assert order_of(matrix_C(n)) == 2

    def test_determinants(self):
        for n in range(2, 9):
            assert abs(det(matrix_A(n))) == 1
            assert abs(det(matrix_C(n))) == 1

    def test_delta_matches_cycle_formula(self):
        # delta(i) = rho0^(-i-1)(n-1); a mismatch here is a bug, not a choice
        for n in range(2, 11):
            delta = delta_involution(n)
            for i in range(1, n):
                assert delta[i] == rho0_cycle_power(n, n - 1, -(i + 1)), (n, i)
            # involution
            assert all(delta[delta[i]] == i for i in range(1, n))


class TestApplyAndConsistency:
    def test_identity_matrix(self):
        chi = character(3, (4, 5, 6))
        assert apply(identity_matrix(3), chi) == chi

    def test_shift_consistency_with_words(self):
        # evaluating A . chi on w equals evaluating chi on the shifted word
        cases = [
            (2, "x0 x1^-1 x3", (2, 5)),
            (3, "x2 x4 x0^-1", (1, -2, 3)),
            (4, "x1 x5^-1", (0, 1, 2, 3)),
        ]
        for n, text, values in cases:
            w = parse_word(n, text)
            chi = character(n, values)
            lhs = evaluate(apply(matrix_A(n), chi), w)
            rhs = evaluate(chi, phi_on_word(w, 1))
            assert lhs == rhs, (n, text, values)


class TestPhiOnWord:
    def test_examples(self):
        assert phi_on_word(word(2, [(1, 1)])) == word(2, [(2, 1)])
        assert phi_on_word(word(2, [(0, 1)])) == word(2, [(0, 1)])
        assert phi_on_word(word(2, [(3, 1)]), 2) == word(2, [(5, 1)])

    def test_negative_power_rejected(self):
        with pytest.raises(DomainError):
            phi_on_word(word(2, [(1, 1)]), -1)


class TestReductionIdentity:
    def test_n3_all_ones(self):
        rho0 = reduction_identity_check(3, character(3, (1, 1, 1)))
        assert rho0.values == (-1, 0, 0)

    def test_n4_first_equals_last(self):
        rho0 = reduction_identity_check(4, character(4, (1, 5, 1, 1)))
        assert rho0.values[1] == 0

    def test_chi2_lands_on_chi1_ray(self):
        for n in (3, 4, 5):
            rho0 = reduction_identity_check(n, chi2(n))
            assert sphere_point(rho0) == sphere_point(chi1(n))

    def test_preconditions(self):
        with pytest.raises(DomainError):
            reduction_identity_check(2, character(2, (1, 1)))
        with pytest.raises(DomainError):
            reduction_identity_check(3, character(3, (1, 1, 2)))


class TestOrbits:
    def test_exceptional_orbit(self):
        for n in (2, 3, 4):
            orbit = d_orbit(sphere_point(chi1(n)))
            assert orbit == {sphere_point(chi1(n)), sphere_point(chi2(n))}

    def test_orbit_scale_invariant(self):
        p = d_orbit(sphere_point(character(3, (1, 2, 3))))
        q = d_orbit(sphere_point(character(3, (2, 4, 6))))
        assert p == q

    def test_distinct_positive_coordinates_orbit_size(self):
        for n in (3, 4, 5):
            values = tuple(range(1, n + 1))
            orbit = d_orbit(sphere_point(character(n, values)))
            assert len(orbit) >= n - 1

    def test_complement_is_stable(self):
        for n in (2, 3, 4):
            complement = {sphere_point(chi1(n)), sphere_point(chi2(n))}
            hit = set()
            for p in complement:
                hit |= d_orbit(p)
            assert hit == complement
