"""Signed Stirling numbers of the first kind and checks built on them.

s(n, t) is the coefficient of x**t in x (x-1) ... (x-n+1), computed through
the triangle recurrence s(n, t) = s(n-1, t-1) - (n-1) s(n-1, t) with the
conventions s(0, 0) = 1 and s(0, t) = 0 for t >= 1 (so the recurrence
instantiates cleanly at n = 1) and s(n, t) = 0 outside 1 <= t <= n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from .poly import falling_factorial_poly


class StirlingTable:
    """Triangular memo of s(n, t); immutable once built."""

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError(f"StirlingTable: n_max must be >= 0, got {n_max}")
        rows: list[list[int]] = [[1]]
        for n in range(1, n_max + 1):
            prev = rows[n - 1]
            row = [0] * (n + 1)
            for t in range(1, n + 1):
                above = prev[t] if t < len(prev) else 0
                row[t] = prev[t - 1] - (n - 1) * above
            rows.append(row)
        self._rows = tuple(tuple(r) for r in rows)
        self.n_max = n_max

    def value(self, n: int, t: int) -> int:
        if n < 0:
            raise ValueError(f"StirlingTable.value: n must be >= 0, got {n}")
        if n > self.n_max:
            raise IndexError(f"StirlingTable built to n_max={self.n_max}, asked for n={n}")
        if t < 0 or t > n:
            return 0
        return self._rows[n][t]

    def row(self, n: int) -> tuple[int, ...]:
        """The values s(n, 1), ..., s(n, n) (what the CLI table emits)."""
        if n < 1 or n > self.n_max:
            raise ValueError(f"row index out of range: {n}")
        return self._rows[n][1:]


_table = StirlingTable(32)
_table_lock = threading.Lock()


def _shared(n: int) -> StirlingTable:
    global _table
    if n > _table.n_max:
        with _table_lock:
            if n > _table.n_max:
                _table = StirlingTable(max(n, 2 * _table.n_max))
    return _table


def _s(n: int, t: int) -> int:
    # Internal accessor: accepts n >= 0 under the s(0, .) convention.
    return _shared(max(n, 0)).value(n, t)


def stirling1(n: int, t: int) -> int:
    """Signed Stirling number of the first kind; 0 when t < 1 or t > n."""
    if n < 1:
        raise ValueError(f"stirling1: n must be >= 1, got {n}")
    return _s(n, t)


@dataclass(frozen=True)
class CheckResult:
    """Both exactly evaluated sides of one identity instance."""

    lhs: Any
    rhs: Any

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.passed


def _require_t_range(k: int, t: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if t < 1 or t > k:
        raise ValueError(f"t must satisfy 1 <= t <= k, got t={t}, k={k}")


def check_eq19(k: int, t: int) -> CheckResult:
    """sum_{j=t+1}^{k} C(j,t) s(k,j)  ==  k * s(k-1,t)."""
    _require_t_range(k, t)
    lhs = sum(comb(j, t) * _s(k, j) for j in range(t + 1, k + 1))
    rhs = k * _s(k - 1, t)
    return CheckResult(lhs, rhs)


def check_eq18(k: int, t: int) -> CheckResult:
    """sum_{j=t}^{k} C(j,t) s(k,j) (k-1)**(j-t)  ==  (-1)**(k+t) s(k,t).

    Uses 0**0 == 1 for the k = 1 diagonal term, which the identity itself
    forces (without it the k = 1 instance would fail).
    """
    _require_t_range(k, t)
    lhs = sum(comb(j, t) * _s(k, j) * (k - 1) ** (j - t) for j in range(t, k + 1))
    rhs = (-1) ** (k + t) * _s(k, t)
    return CheckResult(lhs, rhs)


def check_eq31(k: int, t: int) -> CheckResult:
    """Literal double sum

        sum_{r=t}^{k} (-1)**r C(r,t) s(k,r) sum_{i=0}^{k} (-1)**i C(k+1,i+1) i**r

    compared against s(k,t) + k s(k-1,t).  The interior sum is evaluated
    term by term, deliberately not simplified.
    """
    _require_t_range(k, t)
    lhs = 0
    for r in range(t, k + 1):
        interior = sum((-1) ** i * comb(k + 1, i + 1) * i ** r for i in range(k + 1))
        lhs += (-1) ** r * comb(r, t) * _s(k, r) * interior
    rhs = _s(k, t) + k * _s(k - 1, t)
    return CheckResult(lhs, rhs)


def check_eq41(n: int, t: int) -> CheckResult:
    """s(n,t) * sum_{i=1}^{n} (-1)**(i-1) C(n,i) i**(t-1)  ==  0, for t >= 2."""
    if n < 1:
        raise ValueError(f"check_eq41: n must be >= 1, got {n}")
    if t < 2:
        raise ValueError(f"check_eq41: t must be >= 2, got {t}")
    value = _s(n, t) * sum(
        (-1) ** (i - 1) * comb(n, i) * i ** (t - 1) for i in range(1, n + 1)
    )
    return CheckResult(value, 0)


def verify_generating_poly(n: int) -> CheckResult:
    """Coefficients of x (x-1) ... (x-n+1) against the s(n, .) table row."""
    if n < 1:
        raise ValueError(f"verify_generating_poly: n must be >= 1, got {n}")
    poly = falling_factorial_poly(n)
    lhs = tuple(poly.coefficient(j) for j in range(n + 1))
    rhs = tuple(Fraction(_s(n, j)) for j in range(n + 1))
    return CheckResult(lhs, rhs)
