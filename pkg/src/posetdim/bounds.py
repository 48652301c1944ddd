"""Closed-form bounds on the guaranteed size of a low-dimension subposet.

Upper bounds come from lexicographic powers of standard examples: ``S_m^k`` has
``(2m)^k`` points and its largest dimension-``d`` subposet has ``(m+d)^k``
points, so the exponent to beat is ``log(m+d) / log(2m)``. Sizes that are not
powers of ``2m`` are handled digit by digit in base ``2m`` with disjoint unions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .invariants import ceil_sqrt
from .poset import Poset, antichain, disjoint_union, lex_power, standard_example

TABLE_DS = (2, 3, 4, 10, 100)


@dataclass(frozen=True)
class BoundRow:
    d: int
    m: int
    exponent: float

    @property
    def rounded(self) -> str:
        return round5(self.exponent)


@dataclass(frozen=True)
class DigitVector:
    base: int
    digits: tuple[int, ...]  # least significant first

    def value(self) -> int:
        return sum(a * self.base**i for i, a in enumerate(self.digits))


@dataclass(frozen=True)
class Corollary2Bound:
    n: int
    d: int
    m_star: int
    digits: DigitVector
    digit_bound: int
    smoothed: float


def round5(x: float) -> str:
    """Round half up to five decimals, as printed in the table."""
    return str(Decimal(repr(x)).quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP))


def goodwillie_lower_bound(n: int, d: int) -> tuple[float, int]:
    """``sqrt(d n)`` and its integer ceiling."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    return math.sqrt(d * n), ceil_sqrt(d * n)


def exponent(m: int, d: int) -> float:
    if m < 2 or d < 2:
        raise ValueError("exponent requires m >= 2 and d >= 2")
    return math.log(m + d) / math.log(2 * m)


def optimal_m(d: int, m_max: int | None = None) -> BoundRow:
    """Integer ``m`` in ``[2, m_max]`` minimising ``exponent(m, d)``; smallest on ties."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if m_max is None:
        m_max = max(10**4, 100 * d)
    best_m, best_e = 2, exponent(2, d)
    for m in range(3, m_max + 1):
        e = exponent(m, d)
        if e < best_e:
            best_m, best_e = m, e
    return BoundRow(d, best_m, best_e)


def table(ds=TABLE_DS) -> list[BoundRow]:
    return [optimal_m(d) for d in ds]


def table_tsv(rows=None) -> str:
    rows = table() if rows is None else rows
    return "".join(f"{r.d}\t{r.m}\t{r.rounded}\n" for r in rows)


def base_digits(n: int, b: int) -> DigitVector:
    if n < 0 or b < 2:
        raise ValueError("base_digits requires n >= 0 and b >= 2")
    digits = []
    while True:
        n, r = divmod(n, b)
        digits.append(r)
        if not n:
            break
    return DigitVector(b, tuple(digits))


def digit_bound(n: int, m: int, d: int) -> int:
    """``sum_i a_i (m+d)^i`` over the base-``2m`` digits ``a_i`` of ``n``."""
    digits = base_digits(n, 2 * m).digits
    return sum(a * (m + d) ** i for i, a in enumerate(digits))


def log_smoothed_bound(n: int, m: int, d: int) -> float:
    """Natural log of :func:`smoothed_bound`; usable for integers beyond float range."""
    e = exponent(m, d)
    s = sum(base_digits(n, 2 * m).digits)
    return (1 - e) * math.log(s) + e * math.log(n)


def smoothed_bound(n: int, m: int, d: int) -> float:
    """``(sum a_i)^(1-e) n^e`` with ``e = exponent(m, d)`` and ``a_i`` the base-``2m`` digits."""
    return math.exp(log_smoothed_bound(n, m, d))


def corollary2_bound(n: int, d: int) -> Corollary2Bound:
    if n < 1 or d < 2:
        raise ValueError("corollary2_bound requires n >= 1 and d >= 2")
    m = optimal_m(d).m
    return Corollary2Bound(
        n=n,
        d=d,
        m_star=m,
        digits=base_digits(n, 2 * m),
        digit_bound=digit_bound(n, m, d),
        smoothed=smoothed_bound(n, m, d),
    )


def build_corollary2_witness(n: int, m: int) -> Poset:
    """Disjoint union of ``a_i`` copies of ``S_m^i`` over the base-``2m`` digits of ``n``.

    ``S_m^0`` is a single point.
    """
    if n < 1:
        raise ValueError("n must be positive")
    digits = base_digits(n, 2 * m).digits
    pieces = []
    for i, a in enumerate(digits):
        block = antichain(1) if i == 0 else lex_power(standard_example(m), i)
        pieces.extend([block] * a)
    return disjoint_union(*pieces)


def corollary2_threshold(d: int = 2, target: float = 0.8295) -> int:
    """Smallest ``K`` such that every ``n >= (2m)^K`` has ``smoothed < n^target``.

    Uses the worst case over ``n`` with ``k = floor(log_{2m} n)``, namely
    ``((2m-1)(k+1))^(1-e) (2m)^(k e) < (2m)^(k target)``. The gap
    ``f(k) = (target-e) k log(2m) - (1-e) log((2m-1)(k+1))`` is increasing once
    ``k + 1 > (1-e) / ((target-e) log 2m)``, so the last sign change is final.
    Returns ``-1`` when ``target`` does not exceed the exponent.
    """
    row = optimal_m(d)
    e, b = row.exponent, 2 * row.m
    if target <= e:
        return -1
    slope = (target - e) * math.log(b)

    def gap(k: int) -> float:
        return slope * k - (1 - e) * math.log((b - 1) * (k + 1))

    k = max(0, math.ceil((1 - e) / slope))
    while gap(k) <= 0:
        k += 1
    while k > 0 and gap(k - 1) > 0:
        k -= 1
    return k
