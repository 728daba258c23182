"""Fibonacci generation, membership, and the elementary inequalities/identities.

Indexing is F_0 = 0, F_1 = 1.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import contextlib
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Optional

from fibwalk.errors import DomainError

# Self-test hook: index -> replacement value.  Empty outside fault injection.
_overrides: dict[int, int] = {}


def _fib_pair(n: int) -> tuple[int, int]:
    """Return (F_n, F_{n+1}) by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # (F_k, F_{k+1}) -> (F_2k, F_2k+1)
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


# F_0..F_93, every value below 2**64; the hot path for small indices.
_SMALL: tuple[int, ...] = tuple(_fib_pair(i)[0] for i in range(94))


def fib(n: int) -> int:
    if n < 0:
        raise DomainError(f"Fibonacci index must be non-negative, got {n}")
    if _overrides and n in _overrides:
        return _overrides[n]
    if n < len(_SMALL):
        return _SMALL[n]
    return _fib_pair(n)[0]


@contextlib.contextmanager
def corrupted(n: int, value: int) -> Iterator[None]:
    """Temporarily make ``fib(n)`` return ``value``.

    Used only by the battery's fault-injection self test.
    """
    previous = _overrides.get(n)
    _overrides[n] = value
    try:
        yield
    finally:
        if previous is None:
            del _overrides[n]
        else:
            _overrides[n] = previous


@dataclass(frozen=True)
class FibTable:
    values: tuple[int, ...]

    @property
    def top(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def index_of(self, x: int) -> Optional[int]:
        """Smallest index holding ``x``, by linear scan."""
        for i, v in enumerate(self.values):
            if v == x:
                return i
            if v > x and i >= 2:
                break
        return None


def fib_table_up_to(bound: int) -> FibTable:
    """All F_i <= bound, plus the first F_i exceeding it."""
    if bound < 0:
        raise DomainError(f"bound must be non-negative, got {bound}")
    values = [0, 1]
    while values[-1] <= bound:
        values.append(values[-1] + values[-2])
    return FibTable(tuple(values))


def first_index_at_least(x: int) -> int:
    """Smallest i >= 2 with F_i >= x (for x >= 1), by bracketing then bisection."""
    if x <= 1:
        return 2
    if not _overrides and x <= _SMALL[-1]:
        return bisect_left(_SMALL, x, 2)
    # phi^(i-2) <= F_i <= phi^(i-1) and log_phi(2) ~ 1.44042 give a narrow window;
    # the loops below repair the estimate if it is off.
    b = x.bit_length()
    lo = max(2, (b - 1) * 14404 // 10000 - 1)
    hi = max(lo + 1, b * 14405 // 10000 + 3)
    while lo > 2 and fib(lo) >= x:
        lo = max(2, lo - 8)
    while fib(hi) < x:
        lo, hi = hi, 2 * hi
    # invariant: F_lo < x <= F_hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fib(mid) < x:
            lo = mid
        else:
            hi = mid
    return hi


def is_fibonacci(x: int) -> Optional[int]:
    """Index of ``x`` in the sequence (smallest, so 1 -> 1), or None."""
    if x < 0:
        return None
    if x <= 1:
        return x
    i = first_index_at_least(x)
    return i if fib(i) == x else None


def fibs_in_range(lo: int, hi: int) -> list[tuple[int, int]]:
    """(index, value) pairs with lo <= F_i <= hi, i >= 2 when lo >= 1.

    Duplicated value 1 is reported once, at index 1.
    """
    if hi < lo or hi < 0:
        return []
    out: list[tuple[int, int]] = []
    if lo <= 0:
        out.append((0, 0))
    if lo <= 1 <= hi:
        out.append((1, 1))
    i = first_index_at_least(max(lo, 2))
    v = fib(i)
    while v <= hi:
        out.append((i, v))
        i += 1
        v = fib(i)
    return out


def check_lemma3(m: int, k: int) -> bool:
    """F_{k+1} F_m <= F_{m+k} <= F_{k+2} F_m."""
    if m < 1 or k < 1:
        raise DomainError(f"need m, k >= 1, got m={m}, k={k}")
    fm = fib(m)
    mid = fib(m + k)
    return fib(k + 1) * fm <= mid <= fib(k + 2) * fm


def check_lemma4(m: int, k: int) -> bool:
    """F_{m+k} = (F_{k+2} - F_{k-2}) F_m + (-1)^{k+1} F_{m-k}."""
    if k < 2 or m < k:
        raise DomainError(f"need m >= k >= 2, got m={m}, k={k}")
    sign = 1 if (k + 1) % 2 == 0 else -1
    rhs = (fib(k + 2) - fib(k - 2)) * fib(m) + sign * fib(m - k)
    return fib(m + k) == rhs


def eq5_chain(m: int) -> list[int]:
    fm = fib(m)
    return [5 * fm, fib(m + 4), 8 * fm, fib(m + 5), 13 * fm, fib(m + 6), 21 * fm]


def check_eq5(m: int) -> bool:
    """5F_m <= F_{m+4} <= 8F_m <= F_{m+5} <= 13F_m <= F_{m+6} <= 21F_m."""
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    chain = eq5_chain(m)
    return all(a <= b for a, b in zip(chain, chain[1:]))


def check_eq6(m: int) -> bool:
    if m <= 5:
        raise DomainError(f"need m > 5, got {m}")
    return fib(m + 5) == 11 * fib(m) + fib(m - 5)


def cassini_defect(n: int) -> int:
    # F_{n+1} F_{n-1} - F_n^2 = (-1)^n; consecutive ratios therefore tend to phi.
    return fib(n + 1) * fib(n - 1) - fib(n) ** 2
