"""Finite fields of characteristic 2, polynomials, and small block codes.

Fields GF(2^t) for t <= 16 are represented by integer bit patterns and a
fixed primitive polynomial per t.  GF(4) uses x^2 + x + 1, so the element
indices 0, 1, 2, 3 correspond to 0, 1, w, w+1 and coincide with the
symbol indices used by seqcore for the DNA alphabet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .seqcore import Seq, Alphabet, max_zero_run, seq

# Primitive polynomials for GF(2^t), given as bit patterns including the
# leading term, e.g. 0b111 = x^2 + x + 1.
PRIMITIVE_POLYS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

ENUMERATION_BUDGET = 1 << 24


class CodeParameterError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class Field:
    """GF(2^t) arithmetic on integer bit patterns."""

    t: int

    def __post_init__(self):
        if self.t not in PRIMITIVE_POLYS:
            raise CodeParameterError(f"no primitive polynomial for t={self.t}")

    @property
    def order(self) -> int:
        return 1 << self.t

    @property
    def modulus(self) -> int:
        return PRIMITIVE_POLYS[self.t]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        result = 0
        mod = self.modulus
        top = 1 << self.t
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return result

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def elements(self) -> range:
        return range(self.order)


F2 = Field(1)
F4 = Field(2)


# --- polynomials, coefficients ascending, over a Field ---

def poly_trim(p: Sequence[int]) -> Tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_deg(p: Sequence[int]) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(poly_trim(p)) - 1


def poly_add(field: Field, p: Sequence[int], r: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * max(len(p), len(r))
    for i, c in enumerate(p):
        out[i] ^= c
    for i, c in enumerate(r):
        out[i] ^= c
    return poly_trim(out)


def poly_mul(field: Field, p: Sequence[int], r: Sequence[int]) -> Tuple[int, ...]:
    p, r = poly_trim(p), poly_trim(r)
    if not p or not r:
        return ()
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(r):
            out[i + j] ^= field.mul(a, b)
    return poly_trim(out)


def poly_divmod(field: Field, p: Sequence[int], r: Sequence[int]):
    r = poly_trim(r)
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(p))
    quo = [0] * max(len(rem) - len(r) + 1, 0)
    lead_inv = field.inv(r[-1])
    while len(rem) >= len(r):
        shift = len(rem) - len(r)
        factor = field.mul(rem[-1], lead_inv)
        quo[shift] = factor
        for i, c in enumerate(r):
            rem[shift + i] ^= field.mul(factor, c)
        rem = list(poly_trim(rem))
        if not rem:
            break
    return poly_trim(quo), poly_trim(rem)


def poly_mod(field: Field, p: Sequence[int], r: Sequence[int]) -> Tuple[int, ...]:
    return poly_divmod(field, p, r)[1]


def poly_divides(field: Field, p: Sequence[int], r: Sequence[int]) -> bool:
    """True iff p divides r."""
    return poly_mod(field, r, p) == ()


def _x_n_minus_1(n: int) -> Tuple[int, ...]:
    # characteristic 2: x^n - 1 = x^n + 1
    return (1,) + (0,) * (n - 1) + (1,)


def _field_alphabet(field: Field) -> Alphabet:
    if field.order not in (2, 4):
        raise CodeParameterError("sequence codes are limited to F2 and F4")
    return Alphabet(field.order)


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic [n, k] code given by its generator polynomial."""

    field: Field
    n: int
    generator: Tuple[int, ...]

    def __post_init__(self):
        g = poly_trim(self.generator)
        object.__setattr__(self, "generator", g)
        if not g:
            raise CodeParameterError("zero generator polynomial")
        if not poly_divides(self.field, g, _x_n_minus_1(self.n)):
            raise CodeParameterError(
                f"generator {g} does not divide x^{self.n} - 1"
            )

    @property
    def k(self) -> int:
        return self.n - poly_deg(self.generator)

    def check_polynomial(self) -> Tuple[int, ...]:
        quo, rem = poly_divmod(self.field, _x_n_minus_1(self.n), self.generator)
        assert rem == ()
        return quo

    def parity_check_rows(self) -> List[Tuple[int, ...]]:
        """(n-k) parity-check rows in the standard cyclic form.

        Rows are shifts of the reversed check polynomial; a word w is a
        codeword iff dot(w, row) = 0 for every row.
        """
        h = self.check_polynomial()
        rev = tuple(reversed(h))
        rows = []
        for i in range(self.n - self.k):
            row = (0,) * i + rev
            rows.append(row + (0,) * (self.n - len(row)))
        return rows

    def encode(self, msg: Seq) -> Seq:
        """Multiply the message polynomial by the generator."""
        if len(msg) != self.k:
            raise CodeParameterError(f"message length {len(msg)} != k={self.k}")
        prod = poly_mul(self.field, tuple(msg.symbols), self.generator)
        coeffs = list(prod) + [0] * (self.n - len(prod))
        return Seq(_field_alphabet(self.field), tuple(coeffs))

    def codewords(self):
        alpha = _field_alphabet(self.field)
        q = self.field.order
        if q ** self.k > ENUMERATION_BUDGET:
            raise BudgetExceededError("too many codewords to enumerate")
        for msg in itertools.product(range(q), repeat=self.k):
            yield self.encode(Seq(alpha, msg))

    def syndrome(self, word: Seq) -> Tuple[int, ...]:
        return syndrome(self, word)


@dataclass(frozen=True)
class LinearCode:
    """Linear code given by generator and/or parity-check rows."""

    field: Field
    n: int
    generator_rows: Optional[Tuple[Tuple[int, ...], ...]] = None
    parity_rows: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        if self.generator_rows is None and self.parity_rows is None:
            raise CodeParameterError("need a generator or parity-check matrix")
        for rows in (self.generator_rows, self.parity_rows):
            if rows is not None and any(len(r) != self.n for r in rows):
                raise CodeParameterError("matrix row length != n")
        if self.generator_rows is not None and self.parity_rows is not None:
            for g in self.generator_rows:
                for h in self.parity_rows:
                    if _dot(self.field, g, h) != 0:
                        raise CodeParameterError("G . H^T != 0")

    @property
    def k(self) -> int:
        if self.generator_rows is not None:
            return len(self.generator_rows)
        return self.n - len(self.parity_rows)

    def encode(self, msg: Seq) -> Seq:
        if self.generator_rows is None:
            raise CodeParameterError("no generator matrix available")
        if len(msg) != self.k:
            raise CodeParameterError(f"message length {len(msg)} != k={self.k}")
        word = [0] * self.n
        for coeff, row in zip(msg.symbols, self.generator_rows):
            if coeff == 0:
                continue
            for i, c in enumerate(row):
                word[i] ^= self.field.mul(coeff, c)
        return Seq(_field_alphabet(self.field), tuple(word))

    def codewords(self):
        alpha = _field_alphabet(self.field)
        q = self.field.order
        if q ** self.k > ENUMERATION_BUDGET:
            raise BudgetExceededError("too many codewords to enumerate")
        for msg in itertools.product(range(q), repeat=self.k):
            yield self.encode(Seq(alpha, msg))


def _dot(field: Field, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc ^= field.mul(x, y)
    return acc


def parity_rows_of(code) -> List[Tuple[int, ...]]:
    if isinstance(code, CyclicCode):
        return code.parity_check_rows()
    if code.parity_rows is not None:
        return list(code.parity_rows)
    raise CodeParameterError("no parity-check matrix available")


def syndrome(code, word: Seq) -> Tuple[int, ...]:
    """Syndrome of a word: one dot product per parity-check row."""
    n = code.n
    if len(word) != n:
        raise CodeParameterError(f"word length {len(word)} != n={n}")
    return tuple(_dot(code.field, word.symbols, row) for row in parity_rows_of(code))


def is_codeword(code, word: Seq) -> bool:
    return all(s == 0 for s in syndrome(code, word))


def min_distance_exhaustive(code) -> int:
    """Exact minimum distance by enumerating all codewords."""
    q = code.field.order
    if q ** code.k > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            "codeword enumeration budget exceeded; supply the distance explicitly"
        )
    best = None
    for w in code.codewords():
        wt = sum(1 for s in w.symbols if s != 0)
        if wt > 0 and (best is None or wt < best):
            best = wt
    if best is None:
        raise CodeParameterError("code has no nonzero codeword")
    return best


def zero_run_bound_holds(code: CyclicCode) -> bool:
    """Check that no nonzero codeword has a zero-run of length >= k."""
    k = code.k
    for w in code.codewords():
        if any(s != 0 for s in w.symbols) and max_zero_run(w) >= k:
            return False
    return True


# --- built-in small code library ---

def repetition_code(n: int, field: Field = F2) -> CyclicCode:
    """[n, 1, n] repetition code, generator (x^n - 1)/(x - 1)."""
    g = tuple([1] * n)
    return CyclicCode(field, n, g)


def parity_code(n: int, field: Field = F2) -> CyclicCode:
    """[n, n-1, 2] single-parity-check code, generator x + 1."""
    return CyclicCode(field, n, (1, 1))


def hamming74() -> CyclicCode:
    """Binary [7, 4, 3] Hamming code, generator 1 + x + x^3."""
    return CyclicCode(F2, 7, (1, 1, 0, 1))


def f4_repetition3() -> CyclicCode:
    """[3, 1, 3] repetition code over F4; contains the all-ones word."""
    return repetition_code(3, F4)


def builtin_cyclic_codes() -> List[CyclicCode]:
    codes = [repetition_code(n) for n in (3, 5, 7)]
    codes += [parity_code(n) for n in range(3, 9)]
    codes += [hamming74(), f4_repetition3(), repetition_code(6)]
    return codes


# --- MDS (Reed-Solomon) codec ---

@dataclass(frozen=True)
class MDSCodec:
    """Systematic [r, s, r-s+1] Reed-Solomon codec over GF(2^t).

    Encoding evaluates the degree < s interpolation polynomial of the
    message at r fixed points; the first s coordinates reproduce the
    message.  Decoding is exhaustive nearest-codeword search (desk
    scale), correcting up to floor((r-s)/2) symbol errors.
    """

    field: Field
    r: int
    s: int

    def __post_init__(self):
        if self.r > self.field.order - 1:
            raise CodeParameterError("r must be <= 2^t - 1")
        if not 1 <= self.s <= self.r:
            raise CodeParameterError("need 1 <= s <= r")

    @property
    def points(self) -> Tuple[int, ...]:
        return tuple(range(1, self.r + 1))

    def encode(self, msg: Sequence[int]) -> Tuple[int, ...]:
        if len(msg) != self.s:
            raise CodeParameterError(f"message length {len(msg)} != s={self.s}")
        if self.s == self.r:
            return tuple(msg)
        poly = self._interpolate(self.points[: self.s], msg)
        return tuple(self._eval(poly, x) for x in self.points)

    def decode(self, received: Sequence[int]) -> Tuple[int, ...]:
        """Bounded-distance decode; returns the message symbols."""
        if len(received) != self.r:
            raise CodeParameterError(f"received length {len(received)} != r={self.r}")
        if self.field.order ** self.s > ENUMERATION_BUDGET:
            raise BudgetExceededError("exhaustive decoding budget exceeded")
        radius = (self.r - self.s) // 2
        best_msg, best_dist = None, None
        for msg in itertools.product(self.field.elements(), repeat=self.s):
            word = self.encode(msg)
            dist = sum(1 for a, b in zip(word, received) if a != b)
            if best_dist is None or dist < best_dist:
                best_msg, best_dist = msg, dist
        if best_dist > radius:
            raise CodeParameterError(
                f"received word outside decoding radius {radius} (distance {best_dist})"
            )
        return best_msg

    def _eval(self, poly: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = self.field.mul(acc, x) ^ c
        return acc

    def _interpolate(self, xs: Sequence[int], ys: Sequence[int]) -> Tuple[int, ...]:
        # Lagrange interpolation over GF(2^t).
        f = self.field
        result: Tuple[int, ...] = ()
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            if yi == 0:
                continue
            basis: Tuple[int, ...] = (1,)
            denom = 1
            for j, xj in enumerate(xs):
                if j == i:
                    continue
                basis = poly_mul(f, basis, (xj, 1))
                denom = f.mul(denom, xi ^ xj)
            scale = f.mul(yi, f.inv(denom))
            result = poly_add(f, result, tuple(f.mul(scale, c) for c in basis))
        return result
