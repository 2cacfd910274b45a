"""Property checkers, Dyck counting, and the exhaustive maximum-code oracle."""

import math

import pytest

from mucodes.seqcore import from_str, seq
from mucodes.verify import (
    dyck_count_exact,
    dyck_words,
    is_balanced_code,
    is_f_apd,
    is_kappa_wmu,
    is_mu_code,
    is_self_uncorrelated,
    min_hamming_distance,
    oracle_max_code_size,
)


def test_self_uncorrelated_examples():
    assert is_self_uncorrelated(seq([1, 0, 0, 0]))
    report = is_self_uncorrelated(seq([1, 0, 0, 1]))
    assert not report and "length 1" in report.counterexample
    assert not is_self_uncorrelated(seq([0, 0, 0, 0]))


def test_mu_and_wmu_examples():
    assert is_mu_code([seq([0, 0, 1, 0, 1]), seq([0, 0, 1, 1, 1])])
    members = [seq([1, 0, 0]), seq([0, 1, 1])]
    assert not is_mu_code(members)
    assert is_kappa_wmu(members, 2)
    assert is_mu_code([seq([1, 0, 0, 0])])


def test_wmu_weakening_monotonicity():
    members = [seq([1, 0, 0]), seq([0, 1, 1])]
    for kappa in range(2, 3):
        if is_kappa_wmu(members, kappa):
            for weaker in range(kappa, 3):
                assert is_kappa_wmu(members, weaker)


def test_distance_and_balance():
    assert min_hamming_distance([seq([0, 0, 0]), seq([1, 1, 1])]) == 3
    assert min_hamming_distance([seq([1, 1, 0, 0]), seq([0, 0, 1, 1])]) == 4
    report = is_balanced_code([seq([1, 1, 0, 0]), seq([1, 0, 0, 0])])
    assert not report and "1000" in report.counterexample
    with pytest.raises(ValueError):
        min_hamming_distance([seq([0, 1])])


def test_apd_detects_complement_hybridization():
    a = seq([1, 0, 1, 1])
    assert not is_f_apd([a, seq([0, 1, 0, 0])], 4)
    assert is_f_apd([seq([1, 1, 1, 1])], 4)
    with pytest.raises(ValueError):
        is_f_apd([a], 5)


def test_dyck_counts():
    assert dyck_count_exact(2) == 2
    assert dyck_count_exact(2, 1) == 1
    assert dyck_count_exact(5) == 42
    # uncapped counts are the Catalan numbers
    for half in range(7):
        catalan = math.comb(2 * half, half) // (half + 1)
        assert dyck_count_exact(half) == catalan


def test_dyck_words_match_counts_and_are_sorted():
    for half in range(1, 6):
        for cap in (None, 1, 2, 3):
            words = list(dyck_words(half, cap))
            assert len(words) == dyck_count_exact(half, cap)
            assert words == sorted(words)
            for w in words:
                height = 0
                for s in w.symbols:
                    height += 1 if s == 1 else -1
                    assert height >= 0
                    if cap is not None:
                        assert height <= cap
                assert height == 0


def test_oracle_small_cases():
    size, witness = oracle_max_code_size(2, 4)
    assert size == len(witness) == 1
    assert is_mu_code(witness)

    size_bal, witness_bal = oracle_max_code_size(2, 4, balanced=True)
    assert size_bal == 1
    assert is_balanced_code(witness_bal)

    # kappa = n makes every prefix constraint vacuous except none at all
    size_free, _ = oracle_max_code_size(2, 3, kappa=3)
    assert size_free == 8


def test_oracle_witness_is_deterministic_and_feasible():
    size, witness = oracle_max_code_size(2, 5, kappa=2)
    again_size, again_witness = oracle_max_code_size(2, 5, kappa=2)
    assert size == again_size and witness == again_witness
    assert is_kappa_wmu(witness, 2)


def test_oracle_budget():
    with pytest.raises(ValueError):
        oracle_max_code_size(4, 7)
