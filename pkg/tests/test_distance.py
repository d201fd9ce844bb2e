import numpy as np
import pytest

from conftest import hamming, identity_encoder, random_code
from nnfcodes.boolfn import NnfPoly, OpCounter, eval_nnf_hypercube
from nnfcodes.codes import defining_polynomials, load_code
from nnfcodes.distance import (
    DEFAULT_MAX_K,
    distance_distribution,
    distance_evaluations,
    distance_limit,
    distance_polynomial,
    min_distance,
)
from nnfcodes.errors import KTooLarge, TooFewWords
from nnfcodes.oracle import distance_distribution_bf


def distance_matrix(c):
    return eval_nnf_hypercube(distance_polynomial(defining_polynomials(c))).reshape(c.M, c.M)


class TestDistancePolynomial:
    def test_repetition(self):
        # 3 * (x - y)^2 with x^2 = x: 3x + 3y - 6xy; x is the high bit, y the low bit
        dp = distance_polynomial(defining_polynomials(load_code(["000", "111"])))
        assert dp == NnfPoly.from_terms(2, [(0b10, 3), (0b01, 3), (0b11, -6)])

    def test_constant_column_contributes_nothing(self, rng):
        c = random_code(rng, 8, 4)
        words = np.concatenate([c.words, np.ones((8, 1), dtype=np.uint8)], axis=1)
        assert distance_polynomial(defining_polynomials(load_code(words))) == distance_polynomial(
            defining_polynomials(c)
        )

    def test_random_matches_pairwise(self, rng):
        c = random_code(rng, 8, 6)
        mat = distance_matrix(c)
        words = c.as_strings()
        for v in range(8):
            for w in range(8):
                assert mat[v, w] == hamming(words[v], words[w])

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_diagonal_symmetry_correctness(self, k, rng):
        for _ in range(10):
            c = random_code(rng, 1 << k, int(rng.integers(1, 12)))
            mat = distance_matrix(c)
            assert not np.diag(mat).any()
            assert np.array_equal(mat, mat.T)
            words = c.as_strings()
            expected = [[hamming(a, b) for b in words] for a in words]
            assert mat.tolist() == expected

    def test_row_zero_is_weight_of_xor(self, rng):
        c = random_code(rng, 16, 9)
        mat = distance_matrix(c)
        for v in range(16):
            assert mat[v, 0] == int((c.words[v] ^ c.words[0]).sum())

    def test_randomized_up_to_k7(self, rng):
        for k in (5, 6, 7):
            c = random_code(rng, 1 << k, 5)
            mat = distance_matrix(c)
            direct = (c.words[:, None, :] != c.words[None, :, :]).sum(axis=2)
            assert np.array_equal(mat, direct)

    def test_counts_multiplications(self, rng):
        c = random_code(rng, 4, 3)
        d = defining_polynomials(c)
        counter = OpCounter()
        distance_polynomial(d, counter)
        from nnfcodes.distance import column_difference

        expected = sum(column_difference(f).nnz ** 2 for f in d.polys)
        assert counter.int_muls == expected


class TestDistribution:
    def test_repetition(self):
        dist = distance_distribution(load_code(["000", "111"]))
        assert dist.counts == {3: 1}
        assert dist.pairs_total == 1

    def test_identity_encoder(self):
        assert distance_distribution(identity_encoder(2)).counts == {1: 4, 2: 2}

    def test_matches_oracle(self, rng):
        for _ in range(50):
            k = int(rng.integers(1, 6))
            c = random_code(rng, 1 << k, int(rng.integers(1, 17)))
            a, b = distance_distribution(c), distance_distribution_bf(c)
            assert a.counts == b.counts
            assert a.min_distance == b.min_distance
            assert a.witness_indices == b.witness_indices
            assert sum(a.counts.values()) == c.M * (c.M - 1) // 2

    def test_ordered_counts(self, rng):
        c = random_code(rng, 8, 5)
        dist = distance_distribution(c, ordered=True)
        raw = np.bincount(distance_evaluations(defining_polynomials(c)))
        assert dist.ordered_counts == {v: int(cnt) for v, cnt in enumerate(raw) if cnt}
        assert sum(dist.ordered_counts.values()) == 64
        for v, cnt in dist.counts.items():
            assert dist.ordered_counts[v] == 2 * cnt + (8 if v == 0 else 0)

    def test_from_polynomials(self, rng):
        c = random_code(rng, 16, 7)
        a = distance_distribution(defining_polynomials(c))
        b = distance_distribution(c)
        assert a.counts == b.counts and a.witness == b.witness

    @pytest.mark.parametrize("m", [3, 5, 6, 7, 11, 30])
    def test_partitioned(self, m, rng):
        c = random_code(rng, m, 6)
        a = distance_distribution(c, ordered=True)
        b = distance_distribution_bf(c, ordered=True)
        assert a.partition is not None and sum(a.partition) == m
        assert a.counts == b.counts
        assert a.ordered_counts == b.ordered_counts
        assert a.witness_indices == b.witness_indices


class TestMinDistance:
    def test_repetition(self):
        assert min_distance(load_code(["000", "111"])) == (3, (0, 1), ("000", "111"))

    def test_duplicate(self):
        md = min_distance(load_code(["0101", "1100", "0011", "1100"]))
        assert md.distance == 0 and md.pair == (1, 3)

    def test_too_few(self):
        with pytest.raises(TooFewWords):
            min_distance(load_code(["01"]))

    def test_matches_brute_force(self, rng):
        for _ in range(30):
            c = random_code(rng, int(rng.integers(2, 40)), int(rng.integers(1, 12)))
            words = c.as_strings()
            best = min(
                (hamming(words[i], words[j]), i, j) for i in range(c.M) for j in range(i + 1, c.M)
            )
            md = min_distance(c)
            assert (md.distance, *md.pair) == best


class TestLimit:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("NNFCODES_MAX_K", raising=False)
        assert distance_limit() == DEFAULT_MAX_K

    def test_env_lowers(self, monkeypatch):
        monkeypatch.setenv("NNFCODES_MAX_K", "3")
        assert distance_limit() == 3

    def test_env_cannot_raise(self, monkeypatch):
        monkeypatch.setenv("NNFCODES_MAX_K", "40")
        assert distance_limit() == DEFAULT_MAX_K
        assert distance_limit(max_k=99) == DEFAULT_MAX_K

    def test_too_large(self, rng):
        c = random_code(rng, 16, 3)
        with pytest.raises(KTooLarge):
            distance_distribution(c, max_k=3)
