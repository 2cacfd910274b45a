"""Sequence primitives: complements, psi pairing, distances, balance."""

import pytest
from hypothesis import given, strategies as st

from mucodes.seqcore import (
    Alphabet,
    AlphabetError,
    Seq,
    balance_weight,
    complement,
    contains_substring,
    from_str,
    hamming_distance,
    is_balanced,
    max_zero_run,
    prefix_height,
    psi,
    psi_inverse,
    read_sequences,
    reverse,
    seq,
    write_sequences,
)


def binary_seqs(min_size=1, max_size=16):
    return st.lists(
        st.integers(0, 1), min_size=min_size, max_size=max_size
    ).map(lambda s: seq(s, q=2))


def dna_seqs(min_size=1, max_size=16):
    return st.lists(
        st.integers(0, 3), min_size=min_size, max_size=max_size
    ).map(lambda s: seq(s, q=4))


def test_alphabet_rejects_other_sizes():
    with pytest.raises(AlphabetError):
        Alphabet(3)
    with pytest.raises(AlphabetError):
        Alphabet(5)


def test_complement_examples():
    assert complement(seq([0, 1, 1, 0])).symbols == (1, 0, 0, 1)
    assert str(complement(from_str("ACGT"))) == "TGCA"
    assert complement(complement(from_str("ACGT"))) == from_str("ACGT")


def test_reverse_examples():
    assert str(reverse(from_str("ACG"))) == "GCA"
    assert reverse(seq([0, 0, 1])).symbols == (1, 0, 0)
    assert reverse(from_str("ATA")) == from_str("ATA")


@given(dna_seqs())
def test_complement_and_reverse_are_involutions(a):
    assert complement(complement(a)) == a
    assert reverse(reverse(a)) == a


@given(binary_seqs())
def test_binary_complement_involution(a):
    assert complement(complement(a)) == a


def test_psi_examples():
    assert str(psi(seq([0, 1, 1, 0]), seq([0, 1, 0, 1]))) == "AGCT"
    assert str(psi(seq([0, 0]), seq([0, 0]))) == "AA"
    assert psi_inverse(from_str("AGCT")) == (seq([0, 1, 1, 0]), seq([0, 1, 0, 1]))
    assert psi_inverse(from_str("AAA")) == (seq([0, 0, 0]), seq([0, 0, 0]))
    assert psi_inverse(from_str("GG")) == (seq([1, 1]), seq([1, 1]))


def test_psi_length_mismatch():
    with pytest.raises(ValueError):
        psi(seq([0]), seq([0, 1]))


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
    )
))
def test_psi_roundtrip(pair):
    a, b = seq(pair[0]), seq(pair[1])
    assert psi_inverse(psi(a, b)) == (a, b)


@given(st.tuples(binary_seqs(max_size=8), binary_seqs(max_size=8),
                 binary_seqs(max_size=8), binary_seqs(max_size=8)))
def test_psi_concatenation_homomorphism(quad):
    a, b, c, d = quad
    # psi needs equal-length pairs; trim to the shorter operand
    n = min(len(a), len(b))
    m = min(len(c), len(d))
    a, b = seq(a.symbols[:n]), seq(b.symbols[:n])
    c, d = seq(c.symbols[:m]), seq(d.symbols[:m])
    assert psi(a, b) + psi(c, d) == psi(a + c, b + d)


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
    )
))
def test_complement_acts_on_second_psi_component(pair):
    a, b = seq(pair[0]), seq(pair[1])
    assert complement(psi(a, b)) == psi(a, complement(b))


@given(st.integers(1, 10).flatmap(
    lambda n: st.tuples(*[
        st.lists(st.integers(0, 1), min_size=n, max_size=n) for _ in range(4)
    ])
))
def test_psi_distance_dominates_components(quad):
    a, b, a2, b2 = (seq(x) for x in quad)
    d = hamming_distance(psi(a, b), psi(a2, b2))
    assert d >= hamming_distance(a, a2)
    assert d >= hamming_distance(b, b2)


def test_hamming_distance_examples():
    assert hamming_distance(seq([0] * 4), seq([0] * 4)) == 0
    assert hamming_distance(from_str("ACGT"), from_str("TGCA")) == 4
    assert hamming_distance(seq([1, 0, 0]), seq([0, 1, 1])) == 3
    with pytest.raises(ValueError):
        hamming_distance(seq([0]), seq([0, 1]))


def test_balance():
    assert balance_weight(from_str("ACGT")) == 2
    assert is_balanced(from_str("ACGT"))
    assert balance_weight(from_str("AAAA")) == 0
    assert not is_balanced(from_str("AAAA"))
    assert is_balanced(seq([1, 1, 0, 0]))
    with pytest.raises(ValueError):
        is_balanced(seq([1, 0, 1]))


def test_runs_and_substrings():
    assert max_zero_run(seq([0, 0, 1, 0])) == 2
    assert max_zero_run(seq([1] * 5)) == 0
    assert contains_substring(seq([0, 0, 1, 0, 1]), seq([0, 1, 0]))
    assert not contains_substring(seq([1, 1]), seq([0]))


def test_prefix_height():
    assert prefix_height(seq([1, 0, 1, 0])) == (1, True)
    assert prefix_height(seq([1, 1, 0, 0])) == (2, True)
    assert prefix_height(seq([0, 1]))[1] is False


def test_substring_one_based_and_reversal():
    a = from_str("ACGT")
    assert str(a.substring(2, 3)) == "CG"
    assert str(a.substring(3, 2)) == "GC"
    assert str(a.substring(4, 1)) == "TGCA"
    with pytest.raises(IndexError):
        a.substring(0, 2)


def test_sequence_file_roundtrip():
    seqs = [from_str("ACGT"), from_str("TTAA")]
    text = write_sequences(seqs, header="example")
    back = read_sequences(text.splitlines())
    assert back == seqs


def test_mixed_alphabet_file_rejected():
    with pytest.raises(AlphabetError):
        read_sequences(["0101", "ACGT"])
