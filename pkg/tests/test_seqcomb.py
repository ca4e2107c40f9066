"""Binomial expansions, growth bounds, and sequence predicates.

Oracles here are deliberately independent of the implementation:
``math.comb`` for every numeric identity, brute-force scans for uniqueness,
and hand-computed reference values for the worked examples.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorenstein.seqcomb import (
    TAG_SI_CODIM_LE_3,
    TAG_SI_H4_LE_33,
    TAG_UNIMODAL_H4_LE_33,
    HVector,
    InvalidDegreeError,
    evaluate_terms,
    expand,
    expansion_terms,
    first_difference,
    green_reduce,
    guarantees,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
)


def oracle_expand(n: int, i: int) -> list[tuple[int, int]]:
    """Straightforward greedy expansion computed only with math.comb."""
    terms = []
    rem, bottom = n, i
    while rem > 0:
        top = bottom
        while math.comb(top + 1, bottom) <= rem:
            top += 1
        terms.append((top, bottom))
        rem -= math.comb(top, bottom)
        bottom -= 1
    return terms


class TestExpansion:
    def test_worked_example_33_deg4(self):
        # 33 = C(6,4) + C(5,3) + C(4,2) + C(2,1) = 15 + 10 + 6 + 2
        assert expansion_terms(33, 4) == [(6, 4), (5, 3), (4, 2), (2, 1)]

    def test_worked_example_13_deg4(self):
        # 13 = C(6,4)? no: C(6,4)=15 > 13; 13 = C(5,4) + C(4,3) + C(3,2) + C(1,1)
        assert expansion_terms(13, 4) == [(5, 4), (4, 3), (3, 2), (1, 1)]

    def test_worked_example_24_deg4(self):
        # 24 = C(6,4) + C(5,3)? 15+10=25 > 24; 24 = C(6,4) + C(4,3) + C(3,2) + C(2,1)
        assert evaluate_terms(expansion_terms(24, 4)) == 24

    def test_worked_example_15_deg5(self):
        # the 3j shape at j = 5: 15 = C(6,5) + C(5,4) + C(4,3)
        assert expansion_terms(15, 5) == [(6, 5), (5, 4), (4, 3)]

    def test_zero_expands_empty(self):
        assert expansion_terms(0, 7) == []

    def test_rejects_bad_degree(self):
        with pytest.raises(InvalidDegreeError):
            expansion_terms(5, 0)
        with pytest.raises(InvalidDegreeError):
            expansion_terms(-1, 3)

    @pytest.mark.parametrize("i", [1, 2, 3, 4, 5, 8])
    def test_matches_oracle_small(self, i):
        for n in range(0, 600):
            assert expansion_terms(n, i) == oracle_expand(n, i), (n, i)

    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=1, max_value=14))
    @settings(max_examples=300, deadline=None)
    def test_shape_and_roundtrip(self, n, i):
        terms = expansion_terms(n, i)
        assert evaluate_terms(terms) == n
        tops = [t for t, _ in terms]
        bottoms = [b for _, b in terms]
        assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
        assert bottoms == list(range(i, i - len(terms), -1))
        assert all(t >= b for t, b in terms)

    def test_expand_object(self):
        ex = expand(33, 4)
        assert (ex.n, ex.degree) == (33, 4)
        assert ex.evaluate() == 33


class TestGreenAndMacaulay:
    def test_green_chain_from_quartic_bound(self):
        # Two-step reduction chains used throughout the codim-4 analysis.
        assert green_reduce(33, 4) == 13
        assert green_reduce(13, 4) == 3
        assert green_reduce(24, 4) == 8
        assert green_reduce(8, 4) == 1

    def test_green_oracle(self):
        for i in range(1, 7):
            for n in range(0, 300):
                want = sum(math.comb(t - 1, b) for t, b in oracle_expand(n, i))
                assert green_reduce(n, i) == want

    def test_macaulay_examples(self):
        # C(i+r-1, r-1) growth of a polynomial ring: bound is attained.
        assert macaulay_bound(3, 1) == 6  # dim R_2 for r = 3
        assert macaulay_bound(20, 3) == 35  # 20 = C(6,3), bound C(7,4) = 35
        assert macaulay_bound(0, 5) == 0
        assert macaulay_bound(1, 9) == 1

    def test_macaulay_oracle(self):
        for i in range(1, 7):
            for n in range(0, 300):
                want = sum(
                    math.comb(t + 1, b + 1) for t, b in oracle_expand(n, i)
                )
                assert macaulay_bound(n, i) == want

    def test_polynomial_ring_growth_is_fixed_point(self):
        # dim R_{i+1} = macaulay_bound(dim R_i, i) for every r.
        for r in range(1, 7):
            for i in range(1, 9):
                di = math.comb(i + r - 1, r - 1)
                dnext = math.comb(i + r, r - 1)
                assert macaulay_bound(di, i) == dnext

    @given(
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=1, max_value=12),
    )
    @settings(max_examples=200, deadline=None)
    def test_bounds_monotone_in_n(self, n, i):
        assert macaulay_bound(n + 1, i) >= macaulay_bound(n, i)
        assert green_reduce(n + 1, i) >= green_reduce(n, i)


class TestIdentitySuites:
    def test_quadratic_cap_identity(self):
        # 2s^2 + 1 = C(s+2,s) + C(s+1,s-1) + C(s,s-2) + C(s-1,s-3) - 1
        for s in range(3, 51):
            total = (
                math.comb(s + 2, s)
                + math.comb(s + 1, s - 1)
                + math.comb(s, s - 2)
                + math.comb(s - 1, s - 3)
                - 1
            )
            assert total == 2 * s * s + 1, s

    def test_triple_identity(self):
        # 3j = C(j+1,j) + C(j,j-1) + C(j-1,j-2)  (C(0,-1) = 0 at j = 1)
        def c(n, k):
            return math.comb(n, k) if 0 <= k <= n else 0

        for j in range(1, 51):
            assert c(j + 1, j) + c(j, j - 1) + c(j - 1, j - 2) == 3 * j, j

    def test_triple_identity_is_the_greedy_expansion(self):
        for j in range(3, 51):
            assert expansion_terms(3 * j, j) == [
                (j + 1, j),
                (j, j - 1),
                (j - 1, j - 2),
            ], j


class TestHVector:
    def test_parse_and_str_roundtrip(self):
        h = HVector.parse("1, 4, 6, 4, 1")
        assert h.entries == (1, 4, 6, 4, 1)
        assert str(h) == "1,4,6,4,1"
        assert h.socle_degree == 4
        assert h.get(2) == 6 and h.get(9) == 0

    def test_trailing_zeros_trimmed(self):
        assert HVector([1, 4, 6, 0, 0]).entries == (1, 4, 6)

    def test_rejects_internal_zero_and_negatives(self):
        with pytest.raises(ValueError):
            HVector([1, 0, 3])
        with pytest.raises(ValueError):
            HVector([1, -2, 1])


class TestPredicates:
    def test_o_sequence_examples(self):
        assert is_o_sequence([1, 3, 6, 10])
        assert is_o_sequence([1, 4, 10, 20])
        assert is_o_sequence([1, 2, 3, 4, 5])
        assert not is_o_sequence([1, 2, 4])  # macaulay_bound(2,1) = 3
        assert not is_o_sequence([2, 1])  # h_0 must be 1
        assert is_o_sequence([1])

    def test_o_sequence_oracle_small(self):
        # Independent check: h_{i+1} <= sum C(top+1, bottom+1) over the
        # greedy expansion of h_i, all computed with math.comb.
        def oracle(h):
            if not h or h[0] != 1 or any(x < 0 for x in h):
                return False
            for i in range(1, len(h) - 1):
                cap = sum(
                    math.comb(t + 1, b + 1) for t, b in oracle_expand(h[i], i)
                )
                if h[i + 1] > cap:
                    return False
            return True

        import itertools

        for cand in itertools.product(range(0, 7), repeat=4):
            seq = [1, *cand]
            assert is_o_sequence(seq) == oracle(seq), seq

    def test_unimodal(self):
        assert is_unimodal([1, 4, 6, 4, 1])
        assert is_unimodal([1, 1, 1])
        assert is_unimodal([1, 5, 5, 2])
        assert not is_unimodal([1, 13, 12, 13, 1])
        assert not is_unimodal([1, 3, 2, 3])

    def test_symmetric(self):
        assert is_symmetric([1, 4, 6, 4, 1])
        assert is_symmetric([1, 13, 12, 13, 1])
        assert not is_symmetric([1, 4, 6, 4, 2])

    def test_si_examples(self):
        assert is_si_sequence([1, 4, 4, 1])
        assert is_si_sequence([1, 4, 10, 4, 1])
        assert is_si_sequence([1, 4, 5, 8, 5, 4, 1]) is False  # diff (1,3,1,3) not O-seq
        assert is_si_sequence([1, 3, 6, 6, 3, 1])

    def test_nonunimodal_witness_fails_si(self):
        stanley = [1, 13, 12, 13, 1]
        assert is_symmetric(stanley)
        assert not is_unimodal(stanley)
        assert not is_si_sequence(stanley)

    def test_first_difference(self):
        assert first_difference([1, 4, 6, 4, 1], upto=2) == [1, 3, 2]
        assert first_difference([1, 4]) == [1, 3]


class TestGuarantees:
    def test_codim3_tag(self):
        tags = guarantees([1, 3, 5, 5, 3, 1])
        assert TAG_SI_CODIM_LE_3 in tags

    def test_codim4_quartic_tags(self):
        tags = guarantees([1, 4, 10, 20, 10, 4, 1])
        assert TAG_SI_H4_LE_33 in tags
        assert TAG_UNIMODAL_H4_LE_33 in tags

    def test_socle_below_four_still_tagged(self):
        # No degree-4 entry at all: the quartic cap is vacuous.
        tags = guarantees([1, 4, 4, 1])
        assert TAG_SI_H4_LE_33 in tags

    def test_quartic_cap_respected(self):
        # h_4 = 35 (generic growth) is outside the certified range.
        tags = guarantees([1, 4, 10, 20, 35, 20, 10, 4, 1])
        assert TAG_SI_H4_LE_33 not in tags
        assert TAG_UNIMODAL_H4_LE_33 not in tags

    def test_middle_cap_tag_e14(self):
        h = [1, 5, 15, 35] + [51] * 7 + [35, 15, 5, 1]
        assert len(h) == 15  # socle degree 14
        tags = guarantees(h)
        assert "UNIMODAL_MIDDLE_CAP(5)" in tags

    def test_middle_cap_needs_strict_window(self):
        # s = 5 needs 2(s+1) < e; at e = 12 the same middle value must not fire.
        h = [1, 5, 15, 35, 51, 51, 51, 51, 51, 35, 15, 5, 1]
        assert len(h) == 13  # socle degree 12
        assert "UNIMODAL_MIDDLE_CAP(5)" not in guarantees(h)

    def test_nonunimodal_witness_gets_no_tags(self):
        assert guarantees([1, 13, 12, 13, 1]) == set()
