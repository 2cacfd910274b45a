"""Closed-form size bounds for constrained address codes.

Values are exact rationals wherever the formula is rational; entropy and
trigonometric expressions use double precision (documented tolerance
1e-12).  Negative-radius sphere volumes are 0 by convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Dict, Optional, Tuple


class BoundParameterError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    """Named lower/upper bound values plus the parameters that produced them."""

    name: str
    params: Tuple[Tuple[str, object], ...]
    lower: Optional[Real] = None
    upper: Optional[Real] = None
    terms: Tuple[Tuple[str, object], ...] = field(default=())
    note: str = ""

    def __post_init__(self):
        if self.lower is not None and self.upper is not None:
            if self.lower > self.upper:
                raise BoundParameterError(
                    f"{self.name}: lower {self.lower} exceeds upper {self.upper}"
                )

    def param(self, key: str):
        return dict(self.params)[key]

    def _log2_rate(self, value) -> Optional[float]:
        n = dict(self.params).get("n")
        if value is None or n is None or value <= 0:
            return None
        return math.log2(value) / n

    @property
    def log2_rate_lower(self) -> Optional[float]:
        return self._log2_rate(self.lower)

    @property
    def log2_rate_upper(self) -> Optional[float]:
        return self._log2_rate(self.upper)


def size_constant(q: int) -> Fraction:
    """The constant c_q = (q-1)^2 (2q-1) / (4 q^4) from the MU size bounds."""
    if q < 2:
        raise BoundParameterError("q must be >= 2")
    return Fraction((q - 1) ** 2 * (2 * q - 1), 4 * q ** 4)


def sphere_volume(q: int, n: int, r: int) -> int:
    """Hamming ball size V_q(n, r); r < 0 gives 0 and r >= n gives q^n."""
    if r < 0:
        return 0
    if r >= n:
        return q ** n
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(r + 1))


def mu_bounds(q: int, n: int) -> BoundReport:
    """Size sandwich c_q q^n / n <= A_MU(n) <= q^n / (2n)."""
    if q not in (2, 4):
        raise BoundParameterError("q must be 2 or 4")
    if n < 2:
        raise BoundParameterError("n must be >= 2")
    c = size_constant(q)
    return BoundReport(
        "mu",
        (("q", q), ("n", n)),
        lower=c * q ** n / n,
        upper=Fraction(q ** n, 2 * n),
    )


def wmu_bounds(q: int, n: int, kappa: int) -> BoundReport:
    """Size sandwich c_q q^n / (n-kappa+1) <= A(n, kappa) <= q^n / (n-kappa+1)."""
    if q not in (2, 4):
        raise BoundParameterError("q must be 2 or 4")
    if not 1 <= kappa < n:
        raise BoundParameterError("need 1 <= kappa < n")
    c = size_constant(q)
    span = n - kappa + 1
    return BoundReport(
        "wmu",
        (("q", q), ("n", n), ("kappa", kappa)),
        lower=c * q ** n / span,
        upper=Fraction(q ** n, span),
    )


def binary_entropy(x: float) -> float:
    if not 0 <= x <= 1:
        raise BoundParameterError("entropy argument must lie in [0, 1]")
    if x in (0, 1):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def gv_rate(n: int, d: int) -> float:
    """Asymptotic Gilbert-Varshamov rate lower bound 1 - h(d/n).

    The o(1) term is reported as 0; treat the value as an asymptotic
    guide, not a finite-length guarantee.
    """
    if not 0 <= d <= n / 2:
        raise BoundParameterError("need 0 <= d <= n/2")
    return 1.0 - binary_entropy(d / n)


def constrained_gv_wmu(q: int, n: int, kappa: int, d: int) -> BoundReport:
    """Gilbert-Varshamov style lower bound for error-correcting WMU codes.

    Evaluates the three exclusion terms L0, L1, L2 and the bound
    c_q q^n / ((n-kappa+1)(L0 - L1 - L2)) with the marker run length
    ell = ceil(log_q 2(n-kappa+1)).
    """
    if q not in (2, 4):
        raise BoundParameterError("q must be 2 or 4")
    if not 1 <= kappa < n:
        raise BoundParameterError("need 1 <= kappa < n")
    ell = math.ceil(math.log(2 * (n - kappa + 1), q))
    if n - kappa - 1 < 2 * ell:
        raise BoundParameterError(
            f"need n - kappa - 1 >= 2*ell; got {n - kappa - 1} < {2 * ell}"
        )
    v = sphere_volume
    l0 = v(q, n - ell - 1, d - 1) + (q - 2) * v(q, n - ell - 1, d - 2)
    l1 = (q - 1) * sum(
        math.comb(i - ell - 2, j) * (q - 2) ** j * v(q, n - i - ell + 1, d - ell - j - 2)
        for i in range(ell + 2, n - kappa - ell + 2)
        for j in range(i - ell - 1)
    )
    l2 = sum(
        math.comb(n - kappa - ell, i) * (q - 2) ** i * v(q, kappa - 1, d - i - 2)
        for i in range(n - kappa - ell + 1)
    )
    denom = l0 - l1 - l2
    if denom <= 0:
        raise BoundParameterError(
            f"exclusion terms L0 - L1 - L2 = {denom} <= 0; d too large for this bound"
        )
    bound = size_constant(q) * q ** n / ((n - kappa + 1) * denom)
    return BoundReport(
        "constrained-gv",
        (("q", q), ("n", n), ("kappa", kappa), ("d", d)),
        lower=bound,
        terms=(("L0", l0), ("L1", l1), ("L2", l2), ("ell", ell)),
    )


def gyorfi_lb(n: int, d: int, w: int, a_dist: Optional[int] = None) -> BoundReport:
    """Constant-weight size lower bound (binom(n,w)/2^(n-1)) * A(n,d), d even.

    A(n, d) must be supplied except for d = 2 where A(n, 2) = 2^(n-1)
    exactly.
    """
    if d % 2 != 0:
        raise BoundParameterError("d must be even")
    if not 0 <= w <= n:
        raise BoundParameterError("need 0 <= w <= n")
    if a_dist is None:
        if d != 2:
            raise BoundParameterError("A(n, d) must be supplied for d > 2")
        a_dist = 2 ** (n - 1)
    lower = Fraction(math.comb(n, w), 2 ** (n - 1)) * a_dist
    return BoundReport(
        "gyorfi",
        (("n", n), ("d", d), ("w", w)),
        lower=lower,
        note=f"A(n,d) taken as {a_dist}",
    )


def balanced_wmu_bounds(q: int, n: int, kappa: int) -> BoundReport:
    """Size bounds for balanced kappa-WMU codes.

    q=4: c_2 binom(n,n/2) 2^n/(n-kappa+1) <= A <= binom(n,n/2) 2^n/(n-kappa+1).
    q=2: A <= binom(n,n/2)/(n-kappa+1); for kappa=1 additionally
    A >= binom(n,n/2)/(2(n-1)) with the tighter upper binom(n,n/2)/n.
    """
    if n % 2 != 0 or n < 2:
        raise BoundParameterError("n must be even and >= 2")
    if not 1 <= kappa < n:
        raise BoundParameterError("need 1 <= kappa < n")
    central = math.comb(n, n // 2)
    span = n - kappa + 1
    if q == 4:
        lower = size_constant(2) * central * 2 ** n / span
        upper = Fraction(central * 2 ** n, span)
    elif q == 2:
        if kappa == 1:
            lower = Fraction(central, 2 * (n - 1))
            upper = Fraction(central, n)
        else:
            lower = None
            upper = Fraction(central, span)
    else:
        raise BoundParameterError("q must be 2 or 4")
    return BoundReport(
        "balanced-wmu", (("q", q), ("n", n), ("kappa", kappa)), lower=lower, upper=upper
    )


def apd_mu_bounds(n: int, c3: Optional[float] = None) -> BoundReport:
    """Size bounds for binary MU codes avoiding primer dimers.

    The lower bound constant c3 is an existence constant with no
    published numeric value; the lower value stays symbolic (None)
    unless the caller supplies c3.
    """
    if n < 2:
        raise BoundParameterError("n must be >= 2")
    lower = None if c3 is None else c3 * 2 ** n / n
    return BoundReport(
        "apd-mu",
        (("n", n),),
        lower=lower,
        upper=Fraction(2 ** n, n),
        note="lower bound is c3 * 2^n / n with c3 an unspecified existence constant",
    )


def dyck_asymptotic(n: int, height_cap: int) -> float:
    """Asymptotic count of height-limited non-negative balanced walks.

    Evaluates (4^n / (D+1)) tan^2(pi/(D+1)) cos^(2n)(pi/(D+1)) where D
    is the cap parameter of the closed form; note the closed form's cap
    convention is offset by one from the exact counter's inclusive cap
    (D=2 here corresponds to exact counts with cap 1).
    """
    if height_cap < 1:
        raise BoundParameterError("height cap must be >= 1")
    angle = math.pi / (height_cap + 1)
    return (4.0 ** n / (height_cap + 1)) * math.tan(angle) ** 2 * math.cos(angle) ** (2 * n)


def avoid_string_lb(q: int, n: int, n_s: int, t: int) -> Fraction:
    """Count lower bound q^n (1 - n t / q^(n_s)) for sequences of length n
    avoiding t fixed patterns of length n_s, clipped at 0; vacuous-tight
    q^n when n <= n_s."""
    if n < 1 or n_s < 1 or t < 0:
        raise BoundParameterError("need n, n_s >= 1 and t >= 0")
    if n <= n_s:
        return Fraction(q ** n)
    value = q ** n * (1 - Fraction(n * t, q ** n_s))
    return max(Fraction(0), value)


def bch_wmu_rates(m: int, t: int) -> Tuple[float, float]:
    """Rates for WMU codes built from [2^m - 1, 2^m - 1 - mt] BCH codes.

    Returns (construction rate (n - mt)/n, optimal-order rate lower
    bound 1 - (5 + log2(mt))/n) with n = 2^m - 1.
    """
    if m < 2 or t < 1:
        raise BoundParameterError("need m >= 2 and t >= 1")
    n = 2 ** m - 1
    return ((n - m * t) / n, 1 - (5 + math.log2(m * t)) / n)
