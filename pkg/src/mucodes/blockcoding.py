"""Address-avoiding information-block encoders and decoders.

An address book is a code A of primer addresses of length n; an
information block is a payload of length N >= n none of whose length-n
windows belongs to A.  Four encoding schemes are provided:

  a: plain concatenation of non-address members of a WMU code;
  b: the same with a Reed-Solomon wrapper for block-error correction;
  c: paired-sequence addresses with free-component payload blocks;
  d: a sequential symbol-by-symbol encoder steering every window's
     syndrome away from the address coset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebra import Field, MDSCodec, _dot
from .constructions import Code
from .seqcore import Alphabet, Seq, psi
from .verify import PropertyReport


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class AddressBook:
    """The address set A, with membership by explicit set or by syndrome.

    In syndrome mode a word of length n belongs to A exactly when its
    product with the parity-check rows equals the target syndrome.  The
    reserved word e = (0, ..., 0, 1) must never be an address.
    """

    n: int
    alphabet: Alphabet
    members: Optional[Tuple[Seq, ...]] = None
    field: Optional[Field] = None
    parity_rows: Optional[Tuple[Tuple[int, ...], ...]] = None
    target_syndrome: Optional[Tuple[int, ...]] = None
    kappa: Optional[int] = None

    def __post_init__(self):
        if self.members is None and self.parity_rows is None:
            raise EncodingError("address book needs an explicit set or a parity check")
        if self.parity_rows is not None:
            if self.field is None or self.target_syndrome is None:
                raise EncodingError("syndrome mode needs a field and a target syndrome")
            if self.field.order != self.alphabet.q:
                raise EncodingError("field order must match the alphabet")
            if any(len(row) != self.n for row in self.parity_rows):
                raise EncodingError("parity-check row length != n")
        if self.members is not None:
            for a in self.members:
                if len(a) != self.n or a.alphabet != self.alphabet:
                    raise EncodingError("address length/alphabet mismatch")
            if self.parity_rows is not None:
                for a in self.members:
                    if not self._syndrome_match(a.symbols):
                        raise EncodingError(
                            f"address {a} fails the syndrome membership test"
                        )
        excluded = (0,) * (self.n - 1) + (1,)
        if self.contains_symbols(excluded):
            raise EncodingError("the reserved word (0,...,0,1) may not be an address")

    def _syndrome_match(self, symbols: Tuple[int, ...]) -> bool:
        syn = tuple(_dot(self.field, symbols, row) for row in self.parity_rows)
        return syn == self.target_syndrome

    def contains_symbols(self, symbols: Tuple[int, ...]) -> bool:
        if self.parity_rows is not None:
            return self._syndrome_match(symbols)
        return any(a.symbols == symbols for a in self.members)

    def __contains__(self, word: Seq) -> bool:
        return self.contains_symbols(word.symbols)

    @property
    def syndrome_mode(self) -> bool:
        return self.parity_rows is not None


@dataclass(frozen=True)
class InfoBlock:
    """An encoded payload: length-N sequence avoiding all addresses."""

    payload: Seq
    scheme: str
    n: int


def address_book_from_code(code: Code, kappa: Optional[int] = None) -> AddressBook:
    kappa = kappa if kappa is not None else (1 if code.profile.mu else code.profile.wmu)
    return AddressBook(
        n=code.n, alphabet=code.alphabet, members=tuple(code.members), kappa=kappa
    )


def avoids_addresses(b: Seq, book: AddressBook) -> PropertyReport:
    """True iff no length-n window of b is an address."""
    n = book.n
    if len(b) < n:
        raise EncodingError(f"payload length {len(b)} < address length {n}")
    for i in range(len(b) - n + 1):
        window = b.symbols[i : i + n]
        if book.contains_symbols(window):
            return PropertyReport(
                "avoids-addresses",
                False,
                f"window at position {i + 1} of {b} is the address "
                f"{Seq(b.alphabet, window)}",
            )
    return PropertyReport("avoids-addresses", True)


def _payload_pool(code: Code, book: AddressBook) -> List[Seq]:
    pool = [c for c in code.members if c not in book]
    if not pool:
        raise EncodingError("every member of the code is an address")
    return pool


def scheme_a_encode(code: Code, book: AddressBook, blocks: Sequence[Seq]) -> InfoBlock:
    """Concatenate blocks drawn from the non-address part of a WMU code."""
    kappa = 1 if code.profile.mu else code.profile.wmu
    if kappa is None:
        raise EncodingError("code must be certified (W)MU")
    if 2 * kappa > code.n:
        raise EncodingError(f"scheme a requires kappa <= n/2, got kappa={kappa}, n={code.n}")
    if not blocks:
        raise EncodingError("need at least one block")
    members = {m.symbols for m in code.members}
    payload = None
    for b in blocks:
        if b.symbols not in members:
            raise EncodingError(f"block {b} is not a member of the code")
        if b in book:
            raise EncodingError(f"block {b} is an address")
        payload = b if payload is None else payload + b
    report = avoids_addresses(payload, book)
    if not report:
        raise EncodingError(f"internal avoidance failure: {report.counterexample}")
    return InfoBlock(payload, "a", book.n)


def scheme_b_codebook(code: Code, book: AddressBook, t: int) -> List[Seq]:
    """The 2^t non-address members used as the Reed-Solomon symbol alphabet.

    Expurgates the lexicographically largest members until exactly 2^t
    remain.
    """
    pool = sorted(_payload_pool(code, book))
    want = 1 << t
    if len(pool) < want:
        raise EncodingError(
            f"need {want} non-address members, only {len(pool)} available"
        )
    return pool[:want]


def scheme_b_encode(code: Code, book: AddressBook, t: int, r: int,
                    message: Sequence[Seq]) -> InfoBlock:
    """Encode s message blocks into r blocks with an RS [r, s] wrapper."""
    pool = scheme_b_codebook(code, book, t)
    index = {m.symbols: i for i, m in enumerate(pool)}
    s = len(message)
    codec = MDSCodec(Field(t), r, s)
    symbols = []
    for m in message:
        if m.symbols not in index:
            raise EncodingError(f"message block {m} is not in the expurgated codebook")
        symbols.append(index[m.symbols])
    coded = codec.encode(tuple(symbols))
    payload = pool[coded[0]]
    for sym in coded[1:]:
        payload = payload + pool[sym]
    report = avoids_addresses(payload, book)
    if not report:
        raise EncodingError(f"internal avoidance failure: {report.counterexample}")
    return InfoBlock(payload, "b", book.n)


def scheme_b_decode(code: Code, book: AddressBook, t: int, r: int, s: int,
                    received: Seq) -> List[Seq]:
    """Recover the s message blocks from a payload with <= (r-s)/2 bad blocks.

    Blocks that fail to match any codebook member are treated as
    arbitrary corruption: decoding searches all messages for the nearest
    codeword in whole-block Hamming distance.
    """
    pool = scheme_b_codebook(code, book, t)
    n = book.n
    if len(received) != r * n:
        raise EncodingError(f"payload length {len(received)} != r*n = {r * n}")
    chunks = [received.symbols[i * n : (i + 1) * n] for i in range(r)]
    codec = MDSCodec(Field(t), r, s)
    radius = (r - s) // 2
    best, best_dist = None, None
    for msg in itertools.product(range(1 << t), repeat=s):
        coded = codec.encode(msg)
        dist = sum(1 for sym, chunk in zip(coded, chunks) if pool[sym].symbols != chunk)
        if best_dist is None or dist < best_dist:
            best, best_dist = msg, dist
    if best_dist > radius:
        raise EncodingError(
            f"payload outside decoding radius {radius} (block distance {best_dist})"
        )
    return [pool[i] for i in best]


def cyclic_shifts(a: Seq) -> List[Seq]:
    return [
        Seq(a.alphabet, a.symbols[i:] + a.symbols[:i]) for i in range(len(a))
    ]


def scheme_c_build(c1: Code, c2: Code) -> Tuple[AddressBook, "SchemeCGenerator"]:
    """Paired-sequence addresses psi(c, a.a); payload blocks psi(f, g), g in c2.

    Requires that no cyclic shift of any member of c1 lies in c2
    (including the identity shift, so the codes are disjoint).
    """
    if c1.q != 2 or c2.q != 2 or c1.n != c2.n:
        raise EncodingError("component codes must be binary and of equal length")
    n = c1.n
    targets = {b.symbols for b in c2.members}
    for a in c1.members:
        for k, shifted in enumerate(cyclic_shifts(a)):
            if shifted.symbols in targets:
                raise EncodingError(
                    f"cyclic shift by {k} of {a} lies in the payload component code"
                )
    members = []
    for a in c1.members:
        doubled = a + a
        for c in itertools.product((0, 1), repeat=2 * n):
            members.append(psi(Seq(a.alphabet, c), doubled))
    book = AddressBook(n=2 * n, alphabet=Alphabet(4), members=tuple(members))
    return book, SchemeCGenerator(book, c2)


@dataclass(frozen=True)
class SchemeCGenerator:
    """Builds scheme-c payload blocks psi(f_1, g_1) ... psi(f_m, g_m)."""

    book: AddressBook
    c2: Code

    def build(self, free_parts: Sequence[Seq], payload_parts: Sequence[Seq]) -> InfoBlock:
        if len(free_parts) != len(payload_parts) or not free_parts:
            raise EncodingError("need matching, nonempty free and payload block lists")
        allowed = {g.symbols for g in self.c2.members}
        payload = None
        for f, g in zip(free_parts, payload_parts):
            if g.symbols not in allowed:
                raise EncodingError(f"payload component {g} is not in the component code")
            block = psi(f, g)
            payload = block if payload is None else payload + block
        report = avoids_addresses(payload, self.book)
        if not report:
            raise EncodingError(f"internal avoidance failure: {report.counterexample}")
        return InfoBlock(payload, "c", self.book.n)


def _phi_allowed(book: AddressBook, window: Tuple[int, ...]) -> List[int]:
    """Symbols v with (window, v) outside the address coset, in canonical order."""
    q = book.alphabet.q
    allowed = [v for v in range(q) if not book.contains_symbols(window + (v,))]
    if len(allowed) < q - 1:
        raise EncodingError(
            f"window {window} excludes {q - len(allowed)} symbols; "
            "the reserved-word premise is violated"
        )
    return allowed


def scheme_d_encode(book: AddressBook, head: Seq, tail: Sequence[int]) -> InfoBlock:
    """Sequential encoder: free head of length n-1, then steered symbols.

    Each subsequent payload symbol is the tail-digit-th smallest symbol
    that keeps the current length-n window out of the address set.  Tail
    digits lie in {0, ..., q-2}.
    """
    if not book.syndrome_mode:
        raise EncodingError("scheme d needs an address book in syndrome mode")
    n, q = book.n, book.alphabet.q
    if len(head) != n - 1 or head.alphabet != book.alphabet:
        raise EncodingError(f"head must have length n-1 = {n - 1} over the address alphabet")
    symbols = list(head.symbols)
    for digit in tail:
        if not 0 <= digit <= q - 2:
            raise EncodingError(f"tail digit {digit} out of range 0..{q - 2}")
        window = tuple(symbols[-(n - 1):])
        symbols.append(_phi_allowed(book, window)[digit])
    payload = Seq(book.alphabet, tuple(symbols))
    report = avoids_addresses(payload, book)
    if not report:
        raise EncodingError(f"internal avoidance failure: {report.counterexample}")
    return InfoBlock(payload, "d", n)


def scheme_d_decode(book: AddressBook, payload: Seq) -> Tuple[Seq, Tuple[int, ...]]:
    """Invert scheme d: recover the head and the tail digits."""
    if not book.syndrome_mode:
        raise EncodingError("scheme d needs an address book in syndrome mode")
    n = book.n
    if len(payload) < n:
        raise EncodingError(f"payload shorter than n = {n}")
    symbols = payload.symbols
    head = Seq(book.alphabet, symbols[: n - 1])
    digits = []
    for i in range(n - 1, len(symbols)):
        window = symbols[i - n + 1 : i]
        allowed = _phi_allowed(book, window)
        if symbols[i] not in allowed:
            raise EncodingError(
                f"payload symbol at position {i + 1} lands inside the address set"
            )
        digits.append(allowed.index(symbols[i]))
    return head, tuple(digits)
