import pytest

from petdom import (
    DominationKind,
    ParameterError,
    SolveMethod,
    brute_force_min,
    build_petersen,
    dp_min,
    f_one_two,
    g_one_two_total,
    gamma_ref,
    gamma_t_ref,
    is_valid,
)

K = DominationKind


class TestDpExamples:
    @pytest.mark.parametrize(
        "n,kind,expected",
        [
            (12, K.ONE_TWO, 8),
            (13, K.ONE_TWO, 9),
            (13, K.ONE_TWO_TOTAL, 10),
            (20, K.PLAIN, 12),
            (9, K.TOTAL, 6),
        ],
    )
    def test_examples(self, n, kind, expected):
        result = dp_min(n, kind)
        assert result.minimum == expected
        assert result.method is SolveMethod.TRANSFER_DP
        assert result.k == 2

    def test_rejects_small_n(self):
        with pytest.raises(ParameterError, match="n >= 5"):
            dp_min(4, K.ONE_TWO)


class TestWitness:
    @pytest.mark.parametrize("n", range(5, 13))
    @pytest.mark.parametrize("kind", list(K))
    def test_matches_brute_force_exactly(self, n, kind):
        # same minimum and the same lexicographically-smallest witness
        rb = brute_force_min(build_petersen(n, 2), kind)
        rd = dp_min(n, kind)
        assert rd.minimum == rb.minimum
        assert rd.witness.members == rb.witness.members

    @pytest.mark.parametrize("n", [17, 40, 97])
    @pytest.mark.parametrize("kind", list(K))
    def test_witness_sound_at_larger_n(self, n, kind):
        result = dp_min(n, kind)
        assert len(result.witness) == result.minimum
        assert is_valid(build_petersen(n, 2), result.witness, kind).valid


class TestFormulaAgreement:
    # short ranges here; the full 5..200 sweep lives in the acceptance suite
    @pytest.mark.parametrize("n", range(5, 41))
    def test_window(self, n):
        assert dp_min(n, K.ONE_TWO).minimum == f_one_two(n)
        assert dp_min(n, K.ONE_TWO_TOTAL).minimum == g_one_two_total(n)
        assert dp_min(n, K.PLAIN).minimum == gamma_ref(n)
        assert dp_min(n, K.TOTAL).minimum == gamma_t_ref(n)

    def test_large_n(self):
        assert dp_min(601, K.ONE_TWO).minimum == f_one_two(601)
        assert dp_min(601, K.ONE_TWO_TOTAL).minimum == g_one_two_total(601)
