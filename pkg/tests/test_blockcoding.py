"""Address books and the four information-block encoding schemes."""

import itertools

import pytest

from mucodes import algebra, constructions as cons
from mucodes.blockcoding import (
    AddressBook,
    EncodingError,
    address_book_from_code,
    avoids_addresses,
    cyclic_shifts,
    scheme_a_encode,
    scheme_b_codebook,
    scheme_b_decode,
    scheme_b_encode,
    scheme_c_build,
    scheme_d_decode,
    scheme_d_encode,
)
from mucodes.seqcore import Alphabet, Seq, from_str, seq


def coset_book() -> AddressBook:
    """A = {100, 011}: the coset of the [3,1,3] code with syndrome (1,0)."""
    base = algebra.repetition_code(3)
    return AddressBook(
        n=3,
        alphabet=Alphabet(2),
        members=(seq([0, 1, 1]), seq([1, 0, 0])),
        field=algebra.F2,
        parity_rows=tuple(base.parity_check_rows()),
        target_syndrome=(1, 0),
    )


def test_reserved_word_must_not_be_an_address():
    with pytest.raises(EncodingError):
        AddressBook(n=3, alphabet=Alphabet(2), members=(seq([0, 0, 1]),))


def test_syndrome_membership_cross_check():
    book = coset_book()
    assert seq([1, 0, 0]) in book
    assert seq([0, 1, 1]) in book
    assert seq([1, 1, 1]) not in book
    with pytest.raises(EncodingError):
        AddressBook(
            n=3, alphabet=Alphabet(2), members=(seq([1, 1, 1]),),
            field=algebra.F2,
            parity_rows=tuple(algebra.repetition_code(3).parity_check_rows()),
            target_syndrome=(1, 0),
        )


def test_avoids_addresses_examples():
    book = coset_book()
    assert avoids_addresses(seq([1, 0, 1, 0, 1]), book)
    report = avoids_addresses(seq([1, 1, 0, 0, 1]), book)
    assert not report and "position 2" in report.counterexample
    assert avoids_addresses(seq([1, 1, 1]), book)
    with pytest.raises(EncodingError):
        avoids_addresses(seq([1, 1]), book)


def scheme_ab_fixture(n):
    code = cons.levenshtein_mu(2, n, 2)
    members = sorted(code.members)
    book = AddressBook(
        n=n, alphabet=Alphabet(2), members=(members[-1],), kappa=1
    )
    return code, book


def test_scheme_a_roundtrip():
    code, book = scheme_ab_fixture(7)
    pool = [m for m in code.members if m not in book]
    block = scheme_a_encode(code, book, [pool[0], pool[1], pool[0]])
    assert len(block.payload) == 21
    assert avoids_addresses(block.payload, book)
    with pytest.raises(EncodingError):
        scheme_a_encode(code, book, [book.members[0]])


def test_scheme_a_requires_small_kappa():
    core = cons.levenshtein_mu(2, 3, 1)
    code = cons.wmu_concat(core, 4)  # kappa=4 > n/2=3
    book = AddressBook(n=6, alphabet=Alphabet(2), members=(sorted(code.members)[-1],))
    with pytest.raises(EncodingError):
        scheme_a_encode(code, book, [sorted(code.members)[0]])


def test_scheme_b_roundtrip_exhaustive():
    code, book = scheme_ab_fixture(7)
    pool = scheme_b_codebook(code, book, 2)
    assert len(pool) == 4
    for message in itertools.product(pool, repeat=2):
        block = scheme_b_encode(code, book, 2, 3, list(message))
        assert avoids_addresses(block.payload, book)
        assert scheme_b_decode(code, book, 2, 3, 2, block.payload) == list(message)


def test_scheme_b_corrects_one_block_error():
    code, book = scheme_ab_fixture(10)
    pool = scheme_b_codebook(code, book, 3)
    message = [pool[1], pool[5]]
    block = scheme_b_encode(code, book, 3, 4, message)
    corrupted = list(block.payload.symbols)
    corrupted[12] ^= 1  # damage the second block
    damaged = Seq(block.payload.alphabet, tuple(corrupted))
    assert scheme_b_decode(code, book, 3, 4, 2, damaged) == message


def test_scheme_b_expurgation_shortfall():
    code, book = scheme_ab_fixture(7)
    with pytest.raises(EncodingError):
        scheme_b_codebook(code, book, 3)  # only 4 members available


def test_scheme_c_shift_validation():
    trivial = cons.ConstraintProfile()
    c1 = cons.make_code([seq([1, 1, 0])], trivial, "c1")
    c2 = cons.make_code([seq([1, 0, 1])], trivial, "c2")
    with pytest.raises(EncodingError):
        scheme_c_build(c1, c2)


def test_scheme_c_valid_blocks_avoid_addresses():
    trivial = cons.ConstraintProfile()
    c1 = cons.make_code([seq([1, 0, 0])], trivial, "c1")
    c2 = cons.make_code([seq([1, 1, 1])], trivial, "c2")
    book, generator = scheme_c_build(c1, c2)
    assert book.n == 6
    assert len(book.members) == 2 ** 6
    import random

    rng = random.Random(0)
    g = c2.members[0]
    for _ in range(50):
        frees = [seq([rng.randint(0, 1) for _ in range(3)]) for _ in range(2)]
        block = generator.build(frees, [g, g])
        assert avoids_addresses(block.payload, book)


def test_cyclic_shifts():
    shifts = {str(s) for s in cyclic_shifts(seq([1, 1, 0]))}
    assert shifts == {"110", "101", "011"}


def test_scheme_d_worked_example():
    book = coset_book()
    block = scheme_d_encode(book, seq([1, 0]), [0, 0, 0])
    assert str(block.payload) == "10101"
    assert avoids_addresses(block.payload, book)
    head, digits = scheme_d_decode(book, block.payload)
    assert head == seq([1, 0]) and digits == (0, 0, 0)


def test_scheme_d_exhaustive_roundtrip():
    book = coset_book()
    for big_n in range(3, 9):
        for head_bits in itertools.product((0, 1), repeat=2):
            head = seq(head_bits)
            tail = [0] * (big_n - 2)
            block = scheme_d_encode(book, head, tail)
            assert len(block.payload) == big_n
            assert avoids_addresses(block.payload, book)
            assert scheme_d_decode(book, block.payload) == (head, tuple(tail))


def test_scheme_d_rejects_bad_inputs():
    book = coset_book()
    with pytest.raises(EncodingError):
        scheme_d_encode(book, seq([1, 0]), [1])  # digit > q-2
    explicit = AddressBook(
        n=3, alphabet=Alphabet(2), members=(seq([1, 0, 0]),)
    )
    with pytest.raises(EncodingError):
        scheme_d_encode(explicit, seq([1, 0]), [0])


def test_address_book_from_code():
    code = cons.cyclic_coset_wmu(algebra.repetition_code(3))
    book = address_book_from_code(code)
    assert book.kappa == 2 and seq([1, 0, 0]) in book
