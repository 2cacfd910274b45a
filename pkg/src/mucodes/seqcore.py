"""Sequences over the binary and DNA alphabets.

Symbols are stored as integer indices.  For q = 4 the canonical symbol
order is 0, 1, w, w+1 (w a primitive element of GF(4)) rendered as the
letters A, C, T, G.  Under this indexing the Watson-Crick complement is
``index XOR 2`` and the GC symbols are exactly the odd indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Tuple

F4_LETTERS = "ACTG"
_LETTER_TO_INDEX = {c: i for i, c in enumerate(F4_LETTERS)}


class AlphabetError(ValueError):
    """Raised for unsupported alphabet sizes or mixed-alphabet operands."""


@dataclass(frozen=True)
class Alphabet:
    """Alphabet of size q, restricted to q in {2, 4}."""

    q: int

    def __post_init__(self):
        if self.q not in (2, 4):
            raise AlphabetError(f"alphabet size must be 2 or 4, got {self.q}")

    def render(self, symbol: int) -> str:
        return F4_LETTERS[symbol] if self.q == 4 else str(symbol)


BINARY = Alphabet(2)
DNA = Alphabet(4)


@dataclass(frozen=True)
class Seq:
    """Immutable sequence of symbol indices over a fixed alphabet."""

    alphabet: Alphabet
    symbols: Tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) < 1:
            raise ValueError("sequences must have length >= 1")
        q = self.alphabet.q
        for s in self.symbols:
            if not 0 <= s < q:
                raise ValueError(f"symbol index {s} out of range for q={q}")

    @property
    def q(self) -> int:
        return self.alphabet.q

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __add__(self, other: "Seq") -> "Seq":
        if self.alphabet != other.alphabet:
            raise AlphabetError("cannot concatenate sequences over different alphabets")
        return Seq(self.alphabet, self.symbols + other.symbols)

    def __str__(self) -> str:
        return "".join(self.alphabet.render(s) for s in self.symbols)

    def __lt__(self, other: "Seq") -> bool:
        return self.symbols < other.symbols

    def substring(self, i: int, j: int) -> "Seq":
        """Substring by 1-based positions; i > j yields the reversed slice."""
        n = len(self.symbols)
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions ({i}, {j}) out of range for length {n}")
        if i <= j:
            return Seq(self.alphabet, self.symbols[i - 1 : j])
        return Seq(self.alphabet, tuple(reversed(self.symbols[j - 1 : i])))

    def prefix(self, length: int) -> "Seq":
        return self.substring(1, length)

    def suffix(self, length: int) -> "Seq":
        return self.substring(len(self) - length + 1, len(self))


def seq(symbols: Iterable[int], q: int = 2) -> Seq:
    """Build a Seq from symbol indices."""
    return Seq(Alphabet(q), tuple(symbols))


def from_str(text: str) -> Seq:
    """Parse a sequence from text: [01]+ for q=2, [ACTG]+ for q=4."""
    text = text.strip()
    if not text:
        raise ValueError("empty sequence string")
    if all(c in "01" for c in text):
        return seq((int(c) for c in text), q=2)
    if all(c in _LETTER_TO_INDEX for c in text):
        return seq((_LETTER_TO_INDEX[c] for c in text), q=4)
    raise ValueError(f"unparseable sequence {text!r} (expected [01]+ or [ACTG]+)")


def complement(a: Seq) -> Seq:
    """Complement: bit flip for q=2, Watson-Crick A<->T, C<->G for q=4."""
    mask = 1 if a.q == 2 else 2
    return Seq(a.alphabet, tuple(s ^ mask for s in a.symbols))


def reverse(a: Seq) -> Seq:
    return Seq(a.alphabet, tuple(reversed(a.symbols)))


def psi(a: Seq, b: Seq) -> Seq:
    """Pair two binary sequences into a DNA sequence, positionwise.

    (0,0) -> A, (0,1) -> T, (1,0) -> C, (1,1) -> G.  In index space this
    is ``a_i + 2*b_i``, which makes the map a concatenation homomorphism.
    """
    if a.q != 2 or b.q != 2:
        raise AlphabetError("psi expects two binary sequences")
    if len(a) != len(b):
        raise ValueError(f"psi length mismatch: {len(a)} vs {len(b)}")
    return Seq(DNA, tuple(x + 2 * y for x, y in zip(a.symbols, b.symbols)))


def psi_inverse(c: Seq) -> Tuple[Seq, Seq]:
    """Invert psi, splitting a DNA sequence into its two binary components."""
    if c.q != 4:
        raise AlphabetError("psi_inverse expects a quaternary sequence")
    a = tuple(s & 1 for s in c.symbols)
    b = tuple(s >> 1 for s in c.symbols)
    return Seq(BINARY, a), Seq(BINARY, b)


def hamming_distance(a: Seq, b: Seq) -> int:
    if a.alphabet != b.alphabet:
        raise AlphabetError("hamming distance needs a common alphabet")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a.symbols, b.symbols) if x != y)


def balance_weight(a: Seq) -> int:
    """GC count for q=4; count of ones for q=2."""
    if a.q == 4:
        return sum(1 for s in a.symbols if s & 1)
    return sum(a.symbols)


def is_balanced(a: Seq) -> bool:
    """True iff exactly half the symbols carry weight; odd length is an error."""
    n = len(a)
    if n % 2 != 0:
        raise ValueError(f"balance is undefined for odd length {n}")
    return balance_weight(a) * 2 == n


def max_zero_run(a: Seq) -> int:
    best = run = 0
    for s in a.symbols:
        run = run + 1 if s == 0 else 0
        if run > best:
            best = run
    return best


def contains_substring(a: Seq, s: Seq) -> bool:
    """Contiguous substring containment."""
    m = len(s)
    if m > len(a):
        return False
    target = s.symbols
    return any(a.symbols[i : i + m] == target for i in range(len(a) - m + 1))


def prefix_height(a: Seq) -> Tuple[int, bool]:
    """Max prefix disbalance (ones minus zeros) and a valid-Dyck flag.

    The flag is true iff no prefix has more zeros than ones and the whole
    sequence is balanced.
    """
    if a.q != 2:
        raise AlphabetError("prefix_height expects a binary sequence")
    height = 0
    best = 0
    dyck = True
    for s in a.symbols:
        height += 1 if s == 1 else -1
        if height > best:
            best = height
        if height < 0:
            dyck = False
    return best, dyck and height == 0


@dataclass(frozen=True)
class ConstraintProfile:
    """Certificate of verified (or construction-guaranteed) properties.

    ``sources`` records, per property name, whether the flag came from a
    verifier or from a construction's correctness lemma.
    """

    mu: bool = False
    wmu: Optional[int] = None
    balanced: bool = False
    min_distance: Optional[int] = None
    apd: Optional[int] = None
    prefix_balanced: Optional[int] = None
    sources: Tuple[Tuple[str, str], ...] = field(default=())

    def describe(self) -> str:
        parts = []
        if self.mu:
            parts.append("mu")
        if self.wmu is not None:
            parts.append(f"wmu={self.wmu}")
        if self.balanced:
            parts.append("bal")
        if self.min_distance is not None:
            parts.append(f"d={self.min_distance}")
        if self.apd is not None:
            parts.append(f"apd={self.apd}")
        if self.prefix_balanced is not None:
            parts.append(f"D={self.prefix_balanced}")
        return " ".join(parts)


def read_sequences(lines: Iterable[str]) -> list:
    """Read the text sequence format: one sequence per line, '#' comments.

    Mixed-alphabet files are rejected.
    """
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(from_str(line))
    qs = {s.q for s in out}
    if len(qs) > 1:
        raise AlphabetError("mixed-alphabet sequence file")
    return out


def write_sequences(seqs: Iterable[Seq], header: str = "") -> str:
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.extend(str(s) for s in seqs)
    return "\n".join(lines) + "\n"
