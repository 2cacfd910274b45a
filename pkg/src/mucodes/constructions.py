"""Address-code constructions.

Each construction returns a Code whose profile records the properties its
correctness argument guarantees.  Every flag set here can be re-checked
independently by the verify module, and the test suite does exactly that
at desk scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from . import verify
from .algebra import CyclicCode, LinearCode, min_distance_exhaustive
from .seqcore import (
    Alphabet,
    ConstraintProfile,
    Seq,
    balance_weight,
    is_balanced,
    max_zero_run,
    psi,
    seq,
)

DEFAULT_MEMBER_BUDGET = 1 << 20


class ConstructionError(ValueError):
    pass


class MemberBudgetError(RuntimeError):
    """Raised when a construction would enumerate too many members."""


@dataclass(frozen=True)
class Code:
    """A finite set of equal-length sequences with a property certificate."""

    alphabet: Alphabet
    n: int
    members: Tuple[Seq, ...]
    profile: ConstraintProfile
    provenance: str

    def __post_init__(self):
        seen = set()
        for m in self.members:
            if len(m) != self.n or m.alphabet != self.alphabet:
                raise ConstructionError("member length/alphabet mismatch")
            if m.symbols in seen:
                raise ConstructionError(f"duplicate member {m}")
            seen.add(m.symbols)

    @property
    def q(self) -> int:
        return self.alphabet.q

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def make_code(members: Sequence[Seq], profile: ConstraintProfile, provenance: str) -> Code:
    members = sorted(members)
    if not members:
        raise ConstructionError(f"{provenance}: empty code")
    return Code(members[0].alphabet, len(members[0]), tuple(members), profile, provenance)


def _check_budget(count: int, budget: int, provenance: str):
    if count > budget:
        raise MemberBudgetError(
            f"{provenance}: {count} members exceeds enumeration budget {budget}"
        )


def _guaranteed(provenance: str, *props: str) -> Tuple[Tuple[str, str], ...]:
    return tuple((p, f"construction:{provenance}") for p in props)


def dyck_mu(n: int, height_cap: Optional[int] = None,
            budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced MU code from Dyck sequences: members 1.a.0 with a Dyck.

    Uncapped size is the Catalan number C((n-2)/2), equal to
    binom(n, n/2) / (2(n-1)).
    """
    if n % 2 != 0 or n < 4:
        raise ConstructionError("n must be even and >= 4")
    if height_cap is not None and height_cap < 1:
        raise ConstructionError("height cap must be >= 1")
    half = (n - 2) // 2
    _check_budget(verify.dyck_count_exact(half, height_cap), budget, "dyck_mu")
    one, zero = seq([1]), seq([0])
    members = [one + a + zero for a in verify.dyck_words(half, height_cap)]
    profile = ConstraintProfile(
        mu=True, balanced=True, sources=_guaranteed("dyck_mu", "mu", "balanced")
    )
    return make_code(members, profile, f"dyck_mu(n={n}, D={height_cap})")


def levenshtein_mu(q: int, n: int, ell: int,
                   budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """MU code of all words starting 0^ell, with interior run limits.

    Members satisfy: a_1..a_ell = 0^ell, a_(ell+1) != 0, a_n != 0, and
    the window a_(ell+2)..a_(n-1) contains no 0^ell substring.
    """
    if n < 2 or not 1 <= ell <= n - 1:
        raise ConstructionError("need n >= 2 and 1 <= ell <= n-1")
    alpha = Alphabet(q)
    free = n - ell - 1  # positions ell+2 .. n, minus the fixed a_(ell+1)
    _check_budget((q - 1) * max(q, 1) ** max(free, 0), budget, "levenshtein_mu")
    members = []
    head = (0,) * ell
    for first in range(1, q):
        if free == 0:
            if first != 0:
                members.append(Seq(alpha, head + (first,)))
            continue
        for tail in itertools.product(range(q), repeat=free):
            if tail[-1] == 0:
                continue
            word = head + (first,) + tail
            interior = Seq(alpha, word[ell + 1 : n - 1]) if n - 1 > ell + 1 else None
            if interior is not None and max_zero_run(interior) >= ell:
                continue
            members.append(Seq(alpha, word))
    profile = ConstraintProfile(mu=True, sources=_guaranteed("levenshtein_mu", "mu"))
    return make_code(members, profile, f"levenshtein_mu(q={q}, n={n}, ell={ell})")


def optimal_parsing_split(n: int) -> Tuple[int, int, int]:
    """Best (ell, t, n_H) split for the parsing code at total length n.

    Requires n - 1 to be a perfect square; then ell = sqrt(n-1),
    t = sqrt(n-1) - 1 and n_H = n - 2*sqrt(n-1).
    """
    root = math.isqrt(n - 1)
    if root * root != n - 1:
        raise ConstructionError("n - 1 must be a perfect square for the exact split")
    return root, root - 1, n - 2 * root


def parsing_ecc_mu(component, ell: int, t: int,
                   distance: Optional[int] = None,
                   budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Error-correcting MU code by parsing a linear code with 0^ell 1 markers.

    Each component codeword b of length t*(ell-1) maps to
    0^ell 1 b-chunk 1 b-chunk 1 ... 1 of length (t+1)*ell + 1.  Size and
    minimum distance equal those of the component code.
    """
    if ell < 2 or t < 1:
        raise ConstructionError("need ell >= 2 and t >= 1")
    if component.n != t * (ell - 1):
        raise ConstructionError(
            f"component length {component.n} != t*(ell-1) = {t * (ell - 1)}"
        )
    if component.field.order != 2:
        raise ConstructionError("parsing construction expects a binary component code")
    _check_budget(2 ** component.k, budget, "parsing_ecc_mu")
    if distance is None:
        distance = min_distance_exhaustive(component)
    members = []
    for b in component.codewords():
        word = [0] * ell + [1]
        for chunk_start in range(0, component.n, ell - 1):
            word.extend(b.symbols[chunk_start : chunk_start + ell - 1])
            word.append(1)
        members.append(seq(word))
    profile = ConstraintProfile(
        mu=True,
        min_distance=distance,
        sources=_guaranteed("parsing_ecc_mu", "mu", "min_distance"),
    )
    return make_code(members, profile, f"parsing_ecc_mu(ell={ell}, t={t})")


def wmu_concat(mu_core: Code, kappa: int, tail: Optional[Code] = None,
               budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """kappa-WMU code as MU core of length n-kappa+1 followed by a free tail."""
    if kappa < 1:
        raise ConstructionError("kappa must be >= 1")
    if not mu_core.profile.mu:
        raise ConstructionError("core code is not certified MU")
    if kappa == 1:
        profile = ConstraintProfile(
            mu=True, wmu=1, sources=_guaranteed("wmu_concat", "mu", "wmu")
        )
        return make_code(list(mu_core.members), profile, f"wmu_concat(kappa=1)")
    q = mu_core.q
    if tail is None:
        _check_budget(len(mu_core) * q ** (kappa - 1), budget, "wmu_concat")
        alpha = mu_core.alphabet
        tails = [Seq(alpha, s) for s in itertools.product(range(q), repeat=kappa - 1)]
    else:
        if tail.n != kappa - 1 or tail.q != q:
            raise ConstructionError("tail code must have length kappa-1 over the same alphabet")
        _check_budget(len(mu_core) * len(tail), budget, "wmu_concat")
        tails = list(tail.members)
    members = [a + b for a in mu_core.members for b in tails]
    profile = ConstraintProfile(wmu=kappa, sources=_guaranteed("wmu_concat", "wmu"))
    return make_code(members, profile, f"wmu_concat(kappa={kappa})")


def psi_combine(c1: Code, c2: Code, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Decoupled construction: pair two binary codes into a DNA code.

    Profile inheritance: balance from c1; kappa-WMU from either input
    (the smaller kappa wins); minimum distance >= min(d1, d2); f-APD
    from c2.
    """
    if c1.q != 2 or c2.q != 2:
        raise ConstructionError("psi_combine expects binary component codes")
    if c1.n != c2.n:
        raise ConstructionError(f"length mismatch: {c1.n} vs {c2.n}")
    _check_budget(len(c1) * len(c2), budget, "psi_combine")
    members = [psi(a, b) for a in c1.members for b in c2.members]
    kappas = [k for k in (_kappa_of(c1), _kappa_of(c2)) if k is not None]
    wmu = min(kappas) if kappas else None
    d1, d2 = c1.profile.min_distance, c2.profile.min_distance
    dist = min(d1, d2) if d1 is not None and d2 is not None else None
    props = []
    if c1.profile.balanced:
        props.append("balanced")
    if wmu is not None:
        props.append("wmu")
    if dist is not None:
        props.append("min_distance")
    if c2.profile.apd is not None:
        props.append("apd")
    profile = ConstraintProfile(
        mu=(wmu == 1),
        wmu=wmu,
        balanced=c1.profile.balanced,
        min_distance=dist,
        apd=c2.profile.apd,
        sources=_guaranteed("psi_combine", *props),
    )
    return make_code(members, profile, f"psi_combine({c1.provenance}, {c2.provenance})")


def _kappa_of(code: Code) -> Optional[int]:
    if code.profile.mu:
        return 1
    return code.profile.wmu


def cyclic_coset_wmu(base: CyclicCode, distance: Optional[int] = None,
                     budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """kappa-WMU coset code: shift an [n, kappa-1, d] cyclic code by e = (1,0,...,0).

    The zero-run bound for cyclic codes turns the coset into a kappa-WMU
    code with the same minimum distance.
    """
    if base.k < 1:
        raise ConstructionError("base code must have dimension >= 1")
    q = base.field.order
    _check_budget(q ** base.k, budget, "cyclic_coset_wmu")
    if distance is None:
        distance = min_distance_exhaustive(base)
    kappa = base.k + 1
    members = []
    for w in base.codewords():
        shifted = (w.symbols[0] ^ 1,) + w.symbols[1:]
        members.append(Seq(w.alphabet, shifted))
    profile = ConstraintProfile(
        wmu=kappa,
        min_distance=distance,
        sources=_guaranteed("cyclic_coset_wmu", "wmu", "min_distance"),
    )
    return make_code(members, profile, f"cyclic_coset_wmu(n={base.n}, kappa={kappa})")


def interleaved_ecc_mu(
    n_prime: int,
    kappa: int,
    parity_fn: Optional[Callable[[Tuple[int, ...]], Tuple[int, ...]]] = None,
    distance: int = 1,
    ell: Optional[int] = None,
    budget: int = DEFAULT_MEMBER_BUDGET,
) -> Code:
    """MU ECC code: run-limited information bits interleaved with parity bits.

    Codewords are 0^ell 1, then the information sequence in blocks of
    p = ceil(kappa / (n_prime - kappa)) bits each followed by one parity
    bit, then a terminal 1; total length n_prime + ell + 2.  Information
    sequences may not contain a zero-run of length >= ell - 1.  When
    n_prime == kappa (no parity bits) the construction degenerates to
    0^ell 1 u 1.
    """
    if ell is None:
        ell = math.ceil(math.log2(4 * n_prime))
    if ell < 2:
        raise ConstructionError("ell must be >= 2")
    n_parity = n_prime - kappa
    if n_parity < 0:
        raise ConstructionError("kappa cannot exceed n_prime")
    if n_parity > 0:
        p = math.ceil(kappa / n_parity)
        if p <= ell:
            raise ConstructionError(f"need p = ceil(kappa/(n'-kappa)) = {p} > ell = {ell}")
        if parity_fn is None:
            raise ConstructionError("a systematic parity function is required when n' > kappa")
    else:
        p = kappa
    _check_budget(2 ** kappa, budget, "interleaved_ecc_mu")
    members = []
    for u in itertools.product((0, 1), repeat=kappa):
        if max_zero_run(seq(u)) >= ell - 1:
            continue
        word = [0] * ell + [1]
        if n_parity == 0:
            word.extend(u)
        else:
            parity = parity_fn(u)
            if len(parity) != n_parity:
                raise ConstructionError("parity function returned wrong length")
            for i in range(n_parity):
                word.extend(u[i * p : (i + 1) * p])
                word.append(parity[i])
        word.append(1)
        if len(word) != n_prime + ell + 2:
            raise ConstructionError("internal length mismatch in interleaving")
        members.append(seq(word))
    profile = ConstraintProfile(
        mu=True,
        min_distance=distance,
        sources=_guaranteed("interleaved_ecc_mu", "mu", "min_distance"),
    )
    return make_code(members, profile, f"interleaved_ecc_mu(n'={n_prime}, kappa={kappa})")


def balanced_binary(n: int, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """All balanced binary words of length n."""
    if n % 2 != 0:
        raise ConstructionError("balanced words need even length")
    _check_budget(math.comb(n, n // 2), budget, "balanced_binary")
    members = [
        seq(s) for s in itertools.product((0, 1), repeat=n) if sum(s) * 2 == n
    ]
    profile = ConstraintProfile(
        balanced=True,
        min_distance=2,
        sources=_guaranteed("balanced_binary", "balanced", "min_distance"),
    )
    return make_code(members, profile, f"balanced_binary(n={n})")


def default_wmu_component(n: int, kappa: int, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Default binary kappa-WMU code of length n for the decoupled constructions.

    Uses the concatenation construction on an MU core of length
    n-kappa+1 with ell = ceil(log2 2(n-kappa+1)); a length-1 core
    degenerates to the singleton {1}.
    """
    core_len = n - kappa + 1
    if core_len < 1:
        raise ConstructionError("kappa out of range")
    if core_len == 1:
        core = make_code(
            [seq([1])],
            ConstraintProfile(mu=True, sources=_guaranteed("singleton_core", "mu")),
            "singleton_core",
        )
    else:
        ell = math.ceil(math.log2(2 * core_len))
        ell = min(ell, core_len - 1)
        core = levenshtein_mu(2, core_len, ell, budget=budget)
    return wmu_concat(core, kappa, budget=budget)


def balanced_wmu4(n: int, kappa: int, c1: Optional[Code] = None,
                  c2: Optional[Code] = None,
                  budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced kappa-WMU DNA code via the decoupled construction.

    c1 defaults to all balanced binary words of length n; c2 defaults to
    the concatenation-based kappa-WMU code.
    """
    if n % 2 != 0:
        raise ConstructionError("n must be even")
    if c1 is None:
        c1 = balanced_binary(n, budget=budget)
    if c2 is None:
        c2 = default_wmu_component(n, kappa, budget=budget)
    if not c1.profile.balanced:
        raise ConstructionError("c1 must be a certified balanced code")
    if _kappa_of(c2) is None or _kappa_of(c2) > kappa:
        raise ConstructionError("c2 must be certified kappa-WMU")
    combined = psi_combine(c1, c2, budget=budget)
    profile = ConstraintProfile(
        mu=(kappa == 1),
        balanced=True,
        wmu=kappa,
        sources=_guaranteed("balanced_wmu4", "balanced", "wmu"),
    )
    return make_code(list(combined.members), profile, f"balanced_wmu4(n={n}, kappa={kappa})")


def prefix_balanced_wmu(n: int, kappa: int, height_cap: int,
                        budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced kappa-WMU DNA code with bounded prefix disbalance.

    The first binary component concatenates balanced words of length
    kappa-1 with Dyck-based MU blocks 1.w.0 of length n-kappa+1 and
    height at most the cap; the second component is free.  Requires n
    even and kappa odd so both pieces have even length.
    """
    if height_cap < 1:
        raise ConstructionError("height cap must be >= 1")
    if n % 2 != 0 or kappa % 2 == 0:
        raise ConstructionError("need n even and kappa odd")
    if kappa < 3:
        raise ConstructionError("kappa must be >= 3 (head of length kappa-1 >= 2)")
    block_len = n - kappa + 1
    if block_len < 2:
        raise ConstructionError("kappa too large for a Dyck block")
    head = balanced_binary(kappa - 1, budget=budget)
    block = dyck_mu(block_len, height_cap, budget=budget)
    _check_budget(len(head) * len(block) * 2 ** n, budget, "prefix_balanced_wmu")
    c1_members = [h + b for h in head.members for b in block.members]
    c1 = make_code(
        c1_members,
        ConstraintProfile(
            balanced=True, wmu=kappa,
            sources=_guaranteed("prefix_balanced_head_block", "balanced", "wmu"),
        ),
        "prefix_balanced_head_block",
    )
    c2 = make_code(
        [seq(s) for s in itertools.product((0, 1), repeat=n)],
        ConstraintProfile(),
        "full_binary",
    )
    combined = psi_combine(c1, c2, budget=budget)
    profile = ConstraintProfile(
        balanced=True,
        wmu=kappa,
        prefix_balanced=height_cap,
        sources=_guaranteed("prefix_balanced_wmu", "balanced", "wmu", "prefix_balanced"),
    )
    return make_code(
        list(combined.members), profile,
        f"prefix_balanced_wmu(n={n}, kappa={kappa}, D={height_cap})",
    )


def apd_mu2(f: int, p: int, ell: int, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Binary MU code of length p*f that avoids primer dimers of length f.

    Concatenates one block from a marker code (starts 0^ell 1, ends 1,
    no interior 0^ell) with 2p-1 blocks that each end in 1, contain
    0 1^ell 0 and avoid 0^ell.
    """
    if f % 2 != 0:
        raise ConstructionError("f must be even")
    if ell + 3 > f // 2:
        raise ConstructionError(f"need ell + 3 <= f/2, got {ell + 3} > {f // 2}")
    if p < 1:
        raise ConstructionError("p must be >= 1")
    half = f // 2
    c1, c2 = [], []
    marker = (0,) + (1,) * ell + (0,)
    for s in itertools.product((0, 1), repeat=half):
        word = seq(s)
        if s[-1] != 1:
            continue
        if s[:ell] == (0,) * ell and s[ell] == 1:
            if max_zero_run(seq(s[ell:])) < ell:
                c1.append(word)
        if max_zero_run(word) < ell:
            from .seqcore import contains_substring

            if contains_substring(word, seq(marker)):
                c2.append(word)
    if not c1 or not c2:
        raise ConstructionError("empty component code; relax the parameters")
    _check_budget(len(c1) * len(c2) ** (2 * p - 1), budget, "apd_mu2")
    members = []
    for a1 in c1:
        for rest in itertools.product(c2, repeat=2 * p - 1):
            word = a1
            for b in rest:
                word = word + b
            members.append(word)
    profile = ConstraintProfile(
        mu=True, apd=f, sources=_guaranteed("apd_mu2", "mu", "apd")
    )
    return make_code(members, profile, f"apd_mu2(f={f}, p={p}, ell={ell})")


def v1_bal_ecc_wmu4(base: CyclicCode, distance: Optional[int] = None,
                    budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced error-correcting DNA code from an F4 cyclic code.

    For an [n/2, k, d] cyclic code over F4 containing the all-ones word,
    the members (c+e, c+1^{n/2}+e) with e = (1,0,...,0) are GC balanced
    with minimum distance 2d.

    The member set is NOT (k+1)-WMU despite the coset shift: the base is
    closed under adding the all-ones word, so the set of first halves
    equals the set of second halves and some length-n/2 prefix always
    reappears as a suffix.  The profile therefore records only balance
    and distance; run the WMU verifier on a specific instance if the
    stronger property is needed.
    """
    if base.field.order != 4:
        raise ConstructionError("base must be a cyclic code over F4")
    half = base.n
    all_ones = (1,) * half
    words = list(base.codewords())
    if not any(w.symbols == all_ones for w in words):
        raise ConstructionError("base code must contain the all-ones word")
    if distance is None:
        distance = min_distance_exhaustive(base)
    _check_budget(len(words), budget, "v1_bal_ecc_wmu4")
    alpha = Alphabet(4)
    members = []
    for w in words:
        first = (w.symbols[0] ^ 1,) + w.symbols[1:]
        shifted_plus = tuple(s ^ 1 for s in w.symbols)  # c + 1^n/2
        second = (shifted_plus[0] ^ 1,) + shifted_plus[1:]
        members.append(Seq(alpha, first + second))
    profile = ConstraintProfile(
        balanced=True,
        min_distance=2 * distance,
        sources=_guaranteed("v1_bal_ecc_wmu4", "balanced", "min_distance"),
    )
    return make_code(members, profile, f"v1_bal_ecc_wmu4(n={2 * half}, k={base.k})")


def v2_bal_ecc_wmu4(c1: Code, c2: Code, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced error-correcting WMU DNA code via the decoupled construction."""
    if not c1.profile.balanced:
        raise ConstructionError("c1 must be a certified balanced code")
    kappa = _kappa_of(c2)
    if kappa is None:
        raise ConstructionError("c2 must be certified (W)MU")
    combined = psi_combine(c1, c2, budget=budget)
    return make_code(
        list(combined.members),
        combined.profile,
        f"v2_bal_ecc_wmu4(kappa={kappa})",
    )


def apd_bal_mu4(c1: Code, c2: Code, budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Balanced MU DNA code avoiding primer dimers, via the decoupled construction."""
    if not c1.profile.balanced:
        raise ConstructionError("c1 must be a certified balanced code")
    if not c2.profile.mu or c2.profile.apd is None:
        raise ConstructionError("c2 must be a certified f-APD MU code")
    combined = psi_combine(c1, c2, budget=budget)
    profile = ConstraintProfile(
        mu=True,
        balanced=True,
        apd=c2.profile.apd,
        sources=_guaranteed("apd_bal_mu4", "mu", "balanced", "apd"),
    )
    return make_code(list(combined.members), profile, "apd_bal_mu4")


def validate_schedule(c0: Code, schedule: Sequence[Sequence[Seq]]):
    """Check the disjointness clause chain for the concatenation construction.

    Clause r (0-based) requires at least one of the intersections
    C_(1+j) with C_(m-r+j), j = 0..r, to be empty.
    """
    m = len(schedule)
    sets = [frozenset(s.symbols for s in part) for part in schedule]
    universe = {s.symbols for s in c0.members}
    for idx, part in enumerate(sets):
        if not part <= universe:
            raise ConstructionError(f"schedule part {idx + 1} is not a subset of the seed code")
    for r in range(m - 1):
        if not any(not (sets[j] & sets[m - 1 - r + j]) for j in range(r + 1)):
            clauses = " or ".join(
                f"C{j + 1} disjoint C{m - r + j}" for j in range(r + 1)
            )
            raise ConstructionError(f"schedule violates clause {r + 1}: need {clauses}")


def split_schedule(c0: Code, m: int) -> List[List[Seq]]:
    """Build a valid schedule by making C_1 and C_m disjoint halves of the seed."""
    if len(c0) < 2:
        raise ConstructionError("seed code needs at least two members to split")
    if m < 2:
        raise ConstructionError("m must be >= 2")
    members = list(c0.members)
    half = len(members) // 2
    first, last = members[:half], members[half:]
    return [first] + [members] * (m - 2) + [last] if m > 2 else [first, last]


def concat_seed(c0: Code, schedule: Sequence[Sequence[Seq]],
                budget: int = DEFAULT_MEMBER_BUDGET) -> Code:
    """Concatenation construction over a seed code with a disjointness schedule.

    Inherits balance, minimum distance and kappa-WMU from the seed; an
    f-APD seed yields a 2f-APD concatenation.
    """
    validate_schedule(c0, schedule)
    total = 1
    for part in schedule:
        total *= len(part)
    _check_budget(total, budget, "concat_seed")
    members = []
    for combo in itertools.product(*schedule):
        word = combo[0]
        for piece in combo[1:]:
            word = word + piece
        members.append(word)
    prof = c0.profile
    props = []
    if prof.balanced:
        props.append("balanced")
    if prof.apd is not None:
        props.append("apd")
    if prof.min_distance is not None:
        props.append("min_distance")
    if _kappa_of(c0) is not None:
        props.append("wmu")
    profile = ConstraintProfile(
        balanced=prof.balanced,
        apd=None if prof.apd is None else 2 * prof.apd,
        min_distance=prof.min_distance,
        wmu=_kappa_of(c0),
        sources=_guaranteed("concat_seed", *props),
    )
    return make_code(members, profile, f"concat_seed(m={len(schedule)})")
