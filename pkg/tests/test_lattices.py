"""HNF lattices, the HNN ingredients, enumeration, chains."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thompson_sigma.charspace import character, chi2
from thompson_sigma.errors import DomainError, RankDeficientError, ResourceLimitError
from thompson_sigma.lattices import (
    ChainSpec,
    alpha,
    brute_force_index_count,
    chain,
    divisor_sum,
    enumerate_subgroups,
    full_lattice,
    hnf,
    index,
    intersect_with_M,
    member,
    restrict_character,
    theta_shift,
)
from thompson_sigma.words import abelianize, word


class TestHNF:
    def test_identity(self):
        lat = hnf([[1, 0], [0, 1]])
        assert lat.basis == ((1, 0), (0, 1))

    def test_even_sum_lattice(self):
        # rows (1,1),(1,-1) span {(a,b) : a+b even}
        lat = hnf([[1, 1], [1, -1]])
        assert lat.basis == ((2, 0), (1, 1))
        assert index(lat) == 2
        assert member(lat, (1, 1)) and member(lat, (2, 0))
        assert not member(lat, (1, 0))

    def test_row_order_irrelevant(self):
        rows = [[3, 0, 0], [1, 2, 0], [0, 1, 1]]
        for perm in itertools.permutations(rows):
            assert hnf(list(perm)) == hnf(rows)

    def test_idempotent(self):
        lat = hnf([[4, 2], [2, 3]])
        assert hnf(lat.basis) == lat

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError):
            hnf([[1, 1], [2, 2]])
        with pytest.raises(RankDeficientError):
            hnf([[0, 1]])

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_unimodular_scramble_preserves_hnf(self, data):
        n = data.draw(st.sampled_from((2, 3)))
        diag = [data.draw(st.integers(1, 5)) for _ in range(n)]
        rows = [[diag[i] if j == i else 0 for j in range(n)] for i in range(n)]
        lat = hnf(rows)
        # elementary row operations keep the lattice
        scrambled = [list(r) for r in lat.basis]
        for _ in range(data.draw(st.integers(1, 6))):
            i = data.draw(st.integers(0, n - 1))
            j = data.draw(st.integers(0, n - 1))
            if i == j:
                continue
            c = data.draw(st.integers(-3, 3))
            scrambled[i] = [a + c * b for a, b in zip(scrambled[i], scrambled[j])]
        assert hnf(scrambled) == lat


class TestAlphaIndex:
    def test_examples(self):
        assert alpha(full_lattice(2)) == 1
        assert alpha(hnf([[1, 1], [1, -1]])) == 2
        assert alpha(hnf([[3, 0], [0, 1]])) == 3
        assert index(hnf([[2, 0], [0, 1]])) == 2

    def test_alpha_is_least_multiple_of_e0(self):
        for lat in enumerate_subgroups(2, 12):
            a = alpha(lat)
            assert member(lat, (a, 0))
            assert all(not member(lat, (k, 0)) for k in range(1, a))

    def test_alpha_divides_index(self):
        for n, max_index in ((2, 50), (3, 50), (4, 16)):
            for lat in enumerate_subgroups(n, max_index):
                assert index(lat) % alpha(lat) == 0


class TestIntersectTheta:
    def test_full_lattice_fixed(self):
        for n in (2, 3, 4):
            assert intersect_with_M(full_lattice(n)) == full_lattice(n)
            assert theta_shift(full_lattice(n)) == full_lattice(n)

    def test_n2_even_second_coordinate(self):
        # L = {(a,b) : b even} pulls back to {(v1,v2) : v1+v2 even}
        got = intersect_with_M(hnf([[1, 0], [0, 2]]))
        assert got == hnf([[1, 1], [1, -1]])

    def test_n3_even_first_coordinate(self):
        # psi never reaches coordinate 0, so the condition v0 even is vacuous
        got = intersect_with_M(hnf([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
        assert got == full_lattice(3)

    def test_theta_preserves_index(self):
        for lat in enumerate_subgroups(2, 10):
            lat_m = intersect_with_M(lat)
            assert index(theta_shift(lat_m)) == index(lat_m)

    def test_intersection_index_bound(self):
        # [Z^n : L_M] divides n * [Z^n : L]  (sanity bound)
        for n, cap in ((2, 12), (3, 6)):
            for lat in enumerate_subgroups(n, cap):
                got = index(intersect_with_M(lat))
                assert (index(lat) * n) % got == 0

    def test_intersection_by_brute_force(self):
        # check psi-preimage membership pointwise on a window
        for lat in enumerate_subgroups(2, 6):
            got = intersect_with_M(lat)
            for v1 in range(-4, 5):
                for v2 in range(-4, 5):
                    image = (0, v1 + v2)  # psi for n = 2
                    assert member(got, (v1, v2)) == member(lat, image)


class TestRestrictCharacter:
    def test_examples(self):
        assert restrict_character(character(2, (5, 7))).values == (7, 7)
        assert restrict_character(chi2(3)) == chi2(3)
        assert restrict_character(character(3, (1, 2, 3))).values == (2, 3, 2)

    def test_first_equals_last(self):
        rho = restrict_character(character(4, (9, 1, 2, 3)))
        assert rho.values[0] == rho.values[-1]


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_subgroups(2, 1)) == 1
        exactly_two = [l for l in enumerate_subgroups(2, 2) if index(l) == 2]
        assert len(exactly_two) == 3
        assert len(enumerate_subgroups(2, 3)) == 8  # sigma(1)+sigma(2)+sigma(3)

    def test_matches_divisor_sum(self):
        for k in range(1, 11):
            exact = [l for l in enumerate_subgroups(2, k) if index(l) == k]
            assert len(exact) == divisor_sum(k) == brute_force_index_count(2, k)

    def test_no_duplicates_and_canonical(self):
        lats = enumerate_subgroups(3, 6)
        assert len(set(lats)) == len(lats)
        for lat in lats:
            assert hnf(lat.basis) == lat
            assert index(lat) <= 6

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            enumerate_subgroups(2, 30, cap=10)


class TestMembershipLaw:
    def test_word_image_membership(self):
        rng = random.Random(17)
        lat = hnf([[2, 1], [0, 3]])
        for _ in range(60):
            letters = [(rng.randrange(5), rng.choice((1, -1))) for _ in range(8)]
            w = word(2, letters)
            image = abelianize(w)
            brute = any(
                image == (2 * a, a + 3 * b)
                for a in range(-20, 21)
                for b in range(-20, 21)
            )
            assert member(lat, image) == brute


class TestChains:
    def test_scaling(self):
        lat = chain(ChainSpec("scaling", p=2), 3, 2)
        assert lat.basis == ((8, 0), (0, 8))
        assert index(lat) == 64

    def test_coordinate(self):
        lat = chain(ChainSpec("coordinate", p=2), 3, 2)
        assert index(lat) == 8
        assert lat.basis[0][0] == 8

    def test_scaling_nested(self):
        spec = ChainSpec("scaling", p=3)
        for s in range(4):
            outer = chain(spec, s, 2)
            inner = chain(spec, s + 1, 2)
            assert all(member(outer, row) for row in inner.basis)
            assert index(inner) > index(outer)

    def test_explicit(self):
        terms = (hnf([[2, 0], [0, 1]]), hnf([[3, 0], [0, 2]]))
        spec = ChainSpec("explicit", terms=terms)
        assert chain(spec, 1, 2) == terms[1]
        with pytest.raises(DomainError):
            chain(spec, 2, 2)

    def test_bad_specs(self):
        with pytest.raises(ValueError):
            ChainSpec("scaling", p=1)
        with pytest.raises(ValueError):
            ChainSpec("mystery", p=2)
        with pytest.raises(ValueError):
            ChainSpec("explicit", terms=())
