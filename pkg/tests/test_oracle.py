import pytest

from conftest import identity_encoder, random_code
from nnfcodes.boolfn import OpCounter
from nnfcodes.codes import load_code
from nnfcodes.errors import TooFewWords
from nnfcodes.oracle import distance_distribution_bf, min_weight_bf, weight_distribution_bf


def test_weight_repetition():
    assert weight_distribution_bf(load_code(["000", "111"])).counts == {0: 1, 3: 1}


def test_weight_identity_encoder():
    assert weight_distribution_bf(identity_encoder(3)).counts == {0: 1, 1: 3, 2: 3, 3: 1}


def test_weight_any_cardinality():
    dist = weight_distribution_bf(load_code(["110", "011", "111"]))
    assert dist.counts == {2: 2, 3: 1}
    assert (dist.min_weight, dist.witness_index) == (2, 0)


def test_weight_bit_ops():
    counter = OpCounter()
    weight_distribution_bf(identity_encoder(4), counter)
    assert counter.bit_ops == 4 * 16


def test_distance_repetition():
    assert distance_distribution_bf(load_code(["000", "111"])).counts == {3: 1}


def test_distance_equal_words():
    dist = distance_distribution_bf(load_code(["01"] * 4))
    assert dist.counts == {0: 6}
    assert dist.witness_indices == (0, 1)


def test_distance_too_few():
    with pytest.raises(TooFewWords):
        distance_distribution_bf(load_code(["0"]))


def test_min_weight_bf():
    assert min_weight_bf(load_code(["000", "111", "010"]), exclude_zero=True) == (1, 2)


def test_order_invariance(rng):
    for _ in range(20):
        c = random_code(rng, int(rng.integers(2, 30)), 6)
        perm = rng.permutation(c.M)
        shuffled = load_code(c.words[perm])
        assert weight_distribution_bf(c).counts == weight_distribution_bf(shuffled).counts
        assert distance_distribution_bf(c).counts == distance_distribution_bf(shuffled).counts
