"""Ground-truth property checkers and exhaustive oracles.

Everything a construction claims, this module can confirm independently
at desk scale.  Counterexamples are reported with 1-based positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .seqcore import (
    Seq,
    Alphabet,
    complement,
    hamming_distance,
    is_balanced,
    reverse,
)

ORACLE_BUDGET = 4096


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a property check, with a replayable counterexample on failure."""

    property_name: str
    passed: bool
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


def _members(code) -> List[Seq]:
    """Accept a Code, a list of Seq, or any iterable of Seq."""
    members = getattr(code, "members", code)
    return list(members)


def is_self_uncorrelated(a: Seq) -> PropertyReport:
    """True iff no proper prefix of a equals its suffix."""
    n = len(a)
    for i in range(1, n):
        if a.symbols[:i] == a.symbols[n - i :]:
            return PropertyReport(
                "self-uncorrelated",
                False,
                f"prefix of length {i} of {a} equals its suffix",
            )
    return PropertyReport("self-uncorrelated", True)


def is_kappa_wmu(code, kappa: int) -> PropertyReport:
    """No proper prefix of length >= kappa of a member is a suffix of a member."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    members = _members(code)
    name = f"{kappa}-WMU" if kappa > 1 else "MU"
    if not members:
        return PropertyReport(name, True)
    n = len(members[0])
    for length in range(kappa, n):
        prefixes: Dict[Tuple[int, ...], Seq] = {}
        for m in members:
            prefixes.setdefault(m.symbols[:length], m)
        for m in members:
            suf = m.symbols[n - length :]
            if suf in prefixes:
                return PropertyReport(
                    name,
                    False,
                    f"prefix of length {length} of {prefixes[suf]} is a suffix of {m} "
                    f"(positions {n - length + 1}..{n})",
                )
    return PropertyReport(name, True)


def is_mu_code(code) -> PropertyReport:
    return is_kappa_wmu(code, 1)


def min_hamming_distance(code) -> int:
    members = _members(code)
    if len(members) < 2:
        raise ValueError("minimum distance needs at least two members")
    return min(
        hamming_distance(a, b) for a, b in itertools.combinations(members, 2)
    )


def is_balanced_code(code) -> PropertyReport:
    for m in _members(code):
        if not is_balanced(m):
            return PropertyReport("balanced", False, f"member {m} is not balanced")
    return PropertyReport("balanced", True)


def is_f_apd(code, f: int) -> PropertyReport:
    """Check the avoid-primer-dimer property of effective length f.

    For all member pairs (a, b), not necessarily distinct, no length-f
    window of complement(a) may equal a forward or reversed length-f
    window of b.
    """
    members = _members(code)
    if not members:
        return PropertyReport(f"{f}-APD", True)
    n = len(members[0])
    if f > n:
        raise ValueError(f"f={f} exceeds sequence length {n}")
    windows: Dict[Tuple[int, ...], Tuple[Seq, int, str]] = {}
    for b in members:
        for j in range(n - f + 1):
            w = b.symbols[j : j + f]
            windows.setdefault(w, (b, j + 1, "forward"))
            windows.setdefault(tuple(reversed(w)), (b, j + 1, "reverse"))
    for a in members:
        abar = complement(a).symbols
        for i in range(n - f + 1):
            w = abar[i : i + f]
            if w in windows:
                b, j, direction = windows[w]
                return PropertyReport(
                    f"{f}-APD",
                    False,
                    f"complement of {a} at position {i + 1} hybridizes with "
                    f"{direction} window of {b} at position {j}",
                )
    return PropertyReport(f"{f}-APD", True)


def dyck_count_exact(half_length: int, height_cap: Optional[int] = None) -> int:
    """Count Dyck sequences of length 2*half_length (height <= cap if given).

    Dynamic program over (position, height); the uncapped count is the
    Catalan number C(half_length).
    """
    if half_length < 0:
        raise ValueError("negative length")
    if half_length > 32:
        raise ValueError("half length capped at 32")
    cap = 2 * half_length if height_cap is None else height_cap
    heights = {0: 1}
    for _ in range(2 * half_length):
        nxt: Dict[int, int] = {}
        for h, ways in heights.items():
            if h + 1 <= cap:
                nxt[h + 1] = nxt.get(h + 1, 0) + ways
            if h - 1 >= 0:
                nxt[h - 1] = nxt.get(h - 1, 0) + ways
        heights = nxt
    return heights.get(0, 0)


def dyck_words(half_length: int, height_cap: Optional[int] = None):
    """Yield Dyck sequences of length 2*half_length in lexicographic order."""
    cap = 2 * half_length if height_cap is None else height_cap
    alpha = Alphabet(2)

    def rec(prefix: List[int], height: int, remaining: int):
        if remaining == 0:
            if height == 0:
                yield Seq(alpha, tuple(prefix))
            return
        # 0 before 1 keeps lexicographic order
        if height - 1 >= 0 and height - 1 <= remaining - 1:
            prefix.append(0)
            yield from rec(prefix, height - 1, remaining - 1)
            prefix.pop()
        if height + 1 <= cap and height + 1 <= remaining - 1:
            prefix.append(1)
            yield from rec(prefix, height + 1, remaining - 1)
            prefix.pop()

    if half_length == 0:
        return
    yield from rec([], 0, 2 * half_length)


# --- exhaustive maximum-code oracle ---

def _wmu_self_ok(a: Seq, kappa: int) -> bool:
    n = len(a)
    return all(
        a.symbols[:length] != a.symbols[n - length :] for length in range(kappa, n)
    )


def _wmu_pair_ok(a: Seq, b: Seq, kappa: int) -> bool:
    n = len(a)
    for length in range(kappa, n):
        if a.symbols[:length] == b.symbols[n - length :]:
            return False
        if b.symbols[:length] == a.symbols[n - length :]:
            return False
    return True


def _apd_pair_ok(a: Seq, b: Seq, f: int) -> bool:
    n = len(a)
    abar = complement(a).symbols
    bbar = complement(b).symbols
    for i in range(n - f + 1):
        wa = abar[i : i + f]
        wb = bbar[i : i + f]
        for j in range(n - f + 1):
            fwd_b = b.symbols[j : j + f]
            fwd_a = a.symbols[j : j + f]
            if wa == fwd_b or wa == tuple(reversed(fwd_b)):
                return False
            if wb == fwd_a or wb == tuple(reversed(fwd_a)):
                return False
    return True


def oracle_max_code_size(
    q: int,
    n: int,
    kappa: int = 1,
    balanced: bool = False,
    min_distance: Optional[int] = None,
    apd: Optional[int] = None,
) -> Tuple[int, List[Seq]]:
    """Exact maximum code size under the given constraints, with witness.

    Branch-and-bound maximum clique on the pairwise-compatibility graph,
    restricted to self-compatible vertices.  The witness is the
    lexicographically least optimum, found deterministically.
    """
    if q ** n > ORACLE_BUDGET:
        raise ValueError(f"oracle budget exceeded: {q}^{n} > {ORACLE_BUDGET}")
    alpha = Alphabet(q)
    vertices = []
    for symbols in itertools.product(range(q), repeat=n):
        a = Seq(alpha, symbols)
        if not _wmu_self_ok(a, kappa):
            continue
        if balanced and not is_balanced(a):
            continue
        if apd is not None and not _apd_pair_ok(a, a, apd):
            continue
        vertices.append(a)
    vertices.sort()
    m = len(vertices)
    adj = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            a, b = vertices[i], vertices[j]
            if not _wmu_pair_ok(a, b, kappa):
                continue
            if min_distance is not None and hamming_distance(a, b) < min_distance:
                continue
            if apd is not None and not _apd_pair_ok(a, b, apd):
                continue
            adj[i].add(j)
            adj[j].add(i)

    best_size = 0

    def grow(current: int, cands: List[int]):
        nonlocal best_size
        if current + len(cands) <= best_size:
            return
        if not cands:
            best_size = max(best_size, current)
            return
        for idx, v in enumerate(cands):
            if current + len(cands) - idx <= best_size:
                return
            grow(current + 1, [u for u in cands[idx + 1 :] if u in adj[v]])
        best_size = max(best_size, current)

    grow(0, list(range(m)))

    # second pass: lexicographically least clique of maximum size
    def find_lex(chosen: List[int], cands: List[int]) -> Optional[List[int]]:
        if len(chosen) == best_size:
            return chosen
        for idx, v in enumerate(cands):
            if len(chosen) + len(cands) - idx < best_size:
                return None
            result = find_lex(
                chosen + [v], [u for u in cands[idx + 1 :] if u in adj[v]]
            )
            if result is not None:
                return result
        return None

    witness_idx = find_lex([], list(range(m))) or []
    return best_size, [vertices[i] for i in witness_idx]
