import itertools

import pytest
from hypothesis import given, strategies as st

from cycleforce.sequences import (
    DegreeSequence,
    SequenceParseError,
    forces_one,
    forces_two,
    is_large,
    is_large_exhaustive,
    is_rs_large,
    parse_sequence,
)


def seq(*terms):
    return DegreeSequence(tuple(terms))


def all_sequences(n, max_term):
    for terms in itertools.combinations_with_replacement(range(max_term + 1), n):
        yield DegreeSequence(terms)


nondecreasing = st.lists(st.integers(0, 12), min_size=1, max_size=10).map(
    lambda xs: DegreeSequence(tuple(sorted(xs)))
)


class TestIsRsLarge:
    def test_min_outdegree_three(self):
        assert is_rs_large(seq(3, 3, 3), 1, 1)

    def test_clause_a_fails(self):
        assert not is_rs_large(seq(1, 2, 3, 4, 5), 1, 2)

    def test_conditional_clause_fails(self):
        # position 2s-r+2 = 5 carries s+1 = 3 and no later j has d_j >= j
        assert not is_rs_large(seq(1, 3, 3, 3, 3, 5), 1, 2)

    def test_conditional_clause_witnessed(self):
        assert is_rs_large(seq(1, 3, 3, 3, 3, 6), 1, 2)

    def test_index_errors(self):
        with pytest.raises(IndexError):
            is_rs_large(seq(1, 2), 0, 1)
        with pytest.raises(IndexError):
            is_rs_large(seq(1, 2), 2, 1)
        with pytest.raises(IndexError):
            is_rs_large(seq(1, 2), 1, 3)

    def test_boundary_beyond_n_is_vacuous(self):
        # 2s-r+2 = 4 > n = 2, so only the degree clauses matter
        assert is_rs_large(seq(2, 3), 1, 2)

    def test_singleton(self):
        assert is_rs_large(seq(2), 1, 1)
        assert not is_rs_large(seq(1), 1, 1)


class TestIsLarge:
    def test_staircase_not_large(self):
        assert is_large(seq(1, 2, 3, 4, 5)) is None

    def test_min_outdegree_three(self):
        cert = is_large(seq(3, 3, 3))
        assert (cert.r, cert.s, cert.j) == (1, 1, None)

    def test_layered_sequence_not_large(self):
        assert is_large(seq(1, 3, 3, 3, 3, 5)) is None

    def test_canonical_pair_is_minimal(self):
        cert = is_large(seq(1, 3, 3, 3, 3, 6))
        assert (cert.r, cert.s, cert.j) == (1, 2, 6)

    def test_certificates_validate(self):
        for d in all_sequences(6, 6):
            cert = is_large(d)
            if cert is not None:
                cert.check(d)
            cert = is_large_exhaustive(d)
            if cert is not None:
                cert.check(d)

    def test_agrees_with_exhaustive_scan(self):
        for n in range(1, 7):
            for d in all_sequences(n, n):
                assert (is_large(d) is None) == (is_large_exhaustive(d) is None), d


class TestExhaustiveScan:
    def test_no_pair_satisfies_degrees(self):
        assert is_large_exhaustive(seq(1, 2, 3, 4, 5)) is None

    def test_smallest_pair_returned(self):
        cert = is_large_exhaustive(seq(3, 3, 3))
        assert (cert.r, cert.s) == (1, 1)

    def test_witness_index_reported(self):
        cert = is_large_exhaustive(seq(1, 3, 3, 3, 3, 6))
        assert (cert.r, cert.s, cert.j) == (1, 2, 6)


class TestForcesOne:
    def test_staircase_below_diagonal(self):
        assert forces_one(seq(0, 1, 2)) is None

    def test_single_loop(self):
        assert forces_one(seq(1)) == 1

    def test_smallest_position(self):
        assert forces_one(seq(0, 2, 2)) == 2


class TestForcesTwo:
    def test_min_outdegree_three(self):
        forces, cert = forces_two(seq(3, 3, 3, 3))
        assert forces and (cert.r, cert.s) == (1, 1)

    def test_staircase(self):
        forces, cert = forces_two(seq(1, 2, 3, 4, 5, 6))
        assert not forces and cert is None

    def test_layered_sequence(self):
        forces, cert = forces_two(seq(1, 3, 3, 3, 3, 5))
        assert not forces and cert is None

    def test_large_implies_forces_one(self):
        for d in all_sequences(6, 6):
            forces, cert = forces_two(d)
            if forces:
                assert forces_one(d) is not None
                assert forces_one(d) <= cert.r


class TestSurgery:
    def test_delete_middle(self):
        assert seq(1, 3, 3, 5).delete(2).terms == (1, 3, 5)

    def test_delete_first(self):
        assert seq(3, 3, 3).delete(1).terms == (3, 3)

    def test_delete_last(self):
        assert seq(0, 1, 2).delete(3).terms == (0, 1)

    def test_delete_errors(self):
        with pytest.raises(ValueError):
            seq(1).delete(1)
        with pytest.raises(IndexError):
            seq(1, 2).delete(3)

    def test_pointwise_leq(self):
        assert seq(1, 1, 2).pointwise_leq(seq(1, 2, 3))
        assert not seq(1, 3).pointwise_leq(seq(1, 2))
        assert seq(0, 0).pointwise_leq(seq(0, 0))
        with pytest.raises(ValueError):
            seq(1).pointwise_leq(seq(1, 2))


class TestInvariants:
    def test_monotone_under_single_increment(self):
        # bumping one term preserves (r,s)-largeness; single increments
        # compose to arbitrary pointwise dominance
        for n in range(1, 7):
            for d in all_sequences(n, n):
                for i in range(n):
                    bumped = list(d.terms)
                    bumped[i] += 1
                    if i + 1 < n and bumped[i] > bumped[i + 1]:
                        continue
                    e = DegreeSequence(tuple(bumped))
                    for s in range(1, n + 1):
                        for r in range(1, s + 1):
                            if is_rs_large(d, r, s):
                                assert is_rs_large(e, r, s), (d, e, r, s)

    @given(nondecreasing)
    def test_min_outdegree_three_always_large(self, d):
        shifted = DegreeSequence(tuple(t + 3 for t in d.terms))
        assert is_rs_large(shifted, 1, 1)

    def test_deletion_preserves_largeness(self):
        # witnessing pairs with s < n survive any single deletion when d_n < n
        for n in range(2, 7):
            for terms in itertools.combinations_with_replacement(range(n), n):
                d = DegreeSequence(terms)
                for s in range(1, n):
                    for r in range(1, s + 1):
                        if not is_rs_large(d, r, s):
                            continue
                        for i in range(1, n + 1):
                            assert is_rs_large(d.delete(i), r, s), (d, r, s, i)


class TestValidation:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            DegreeSequence(())

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            DegreeSequence((-1, 2))

    def test_rejects_decreasing(self):
        with pytest.raises(ValueError):
            DegreeSequence((2, 1))

    def test_realizability_caps(self):
        assert seq(3, 3, 3).is_realizable(loops=True)
        assert not seq(3, 3, 3).is_realizable(loops=False)
        assert not seq(4, 4, 4).is_realizable(loops=True)


class TestParsing:
    def test_round_trip(self):
        d = parse_sequence("1,3,3,3,3,5")
        assert d.terms == (1, 3, 3, 3, 3, 5)
        assert parse_sequence(str(d)) == d

    def test_whitespace_tolerated(self):
        assert parse_sequence(" 1, 2 ,3 ").terms == (1, 2, 3)

    def test_decreasing_names_position(self):
        with pytest.raises(SequenceParseError) as err:
            parse_sequence("1,3,2")
        assert err.value.position == 3

    def test_non_integer_names_position(self):
        with pytest.raises(SequenceParseError) as err:
            parse_sequence("1,x,3")
        assert err.value.position == 2

    def test_negative_rejected(self):
        with pytest.raises(SequenceParseError):
            parse_sequence("-1,2")
