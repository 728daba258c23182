"""Fibonacci residues, Pisano periods, and the power-of-ten difference search."""

from __future__ import annotations

from dataclasses import dataclass

from fibwalk import fibcore
from fibwalk.errors import DomainError


def fib_mod(n: int, m: int) -> int:
    """F_n mod m by fast doubling, reducing at every step."""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    if n < 0:
        raise DomainError(f"Fibonacci index must be non-negative, got {n}")
    a, b = 0, 1 % m
    for bit in bin(n)[2:]:
        c = a * (2 * b - a) % m
        d = (a * a + b * b) % m
        if bit == "1":
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return a


@dataclass(frozen=True)
class PisanoResult:
    modulus: int
    period: int
    residues: tuple[int, ...]


def pisano_period(m: int) -> PisanoResult:
    """Least period of F_n mod m, by scanning for the first return of the state (0, 1)."""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    start = (0, 1 % m)
    a, b = start
    residues = [a]
    # At most m*m distinct state pairs, so the state recurs within m*m + 1 steps.
    for step in range(1, m * m + 2):
        a, b = b, (a + b) % m
        if (a, b) == start:
            return PisanoResult(m, step, tuple(residues))
        residues.append(a)
    raise AssertionError(f"no period found for modulus {m}")  # pragma: no cover


def lemma6_residue_search(k_lo: int, k_hi: int) -> list[tuple[int, int]]:
    """(k, (F_{k+2} - F_{k-2}) mod 10) for k_lo <= k <= k_hi."""
    if k_lo < 2 or k_hi < k_lo:
        raise DomainError(f"need 2 <= k_lo <= k_hi, got {k_lo}, {k_hi}")
    return [(k, (fib_mod(k + 2, 10) - fib_mod(k - 2, 10)) % 10) for k in range(k_lo, k_hi + 1)]


def power_of_ten_differences(N: int) -> list[int]:
    """Every k >= 2, with F_{k+2} <= 22 * 10^N, where F_{k+2} - F_{k-2} = 10^N."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    target = 10**N
    cutoff = 22 * target
    hits = []
    k = 2
    while True:
        top = fibcore.fib(k + 2)
        if top > cutoff:
            return hits
        if top - fibcore.fib(k - 2) == target:
            hits.append(k)
        k += 1


def lemma6_direct_check(N: int) -> bool:
    return not power_of_ten_differences(N)
