"""Digit-append walks on the Fibonacci numbers.

A walk starts at a Fibonacci number >= 1 and repeatedly appends a block of
decimal digits on the right, every intermediate value being Fibonacci.  Blocks
may carry leading zeros, so under the at-most-N rule "5" and "05" are two
different appends.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from fibwalk import fibcore
from fibwalk.errors import DomainError
from fibwalk.report import DEGENERATE, FAIL, PASS, Fragment

BASE = 10


class Mode(str, enum.Enum):
    EXACT = "exact"
    AT_MOST = "atmost"


@dataclass(frozen=True)
class AppendRule:
    mode: Mode
    N: int
    base: int = BASE

    def __post_init__(self) -> None:
        if self.N < 1:
            raise DomainError(f"digit budget must be positive, got {self.N}")
        if self.base != BASE:
            raise DomainError("only base 10 is supported")

    @classmethod
    def exact(cls, N: int) -> AppendRule:
        return cls(Mode.EXACT, N)

    @classmethod
    def at_most(cls, N: int) -> AppendRule:
        return cls(Mode.AT_MOST, N)

    @property
    def block_lengths(self) -> range:
        if self.mode is Mode.EXACT:
            return range(self.N, self.N + 1)
        return range(1, self.N + 1)

    def __str__(self) -> str:
        return f"{self.mode.value}({self.N})"


@dataclass(frozen=True)
class WalkStep:
    value: int
    block: str = ""

    @property
    def block_len(self) -> int:
        return len(self.block)


@dataclass(frozen=True)
class Walk:
    steps: tuple[WalkStep, ...]
    maximal: bool = True
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def values(self) -> list[int]:
        return [s.value for s in self.steps]

    @property
    def blocks(self) -> list[str]:
        return [s.block for s in self.steps[1:]]

    def __str__(self) -> str:
        return " -> ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class TheoremBound:
    N: int
    N0: int
    bound: int
    degenerate: bool = False


def digits(x: int) -> int:
    return len(str(x))


def _require_start(x: int) -> None:
    if x < 1 or fibcore.is_fibonacci(x) is None:
        raise DomainError(f"{x} is not a positive Fibonacci number")


def block_hits(x: int, L: int) -> list[WalkStep]:
    """Fibonacci values x*10^L + d, 0 <= d < 10^L, found by bracketing; ``x`` need not be Fibonacci."""
    if x < 1 or L < 1:
        raise DomainError(f"need x, L >= 1, got x={x}, L={L}")
    width = BASE**L
    lo = x * width
    return [WalkStep(y, str(y - lo).zfill(L)) for _, y in fibcore.fibs_in_range(lo, lo + width - 1)]


def _successors_unchecked(x: int, rule: AppendRule) -> list[WalkStep]:
    return [step for L in rule.block_lengths for step in block_hits(x, L)]


def successors(x: int, rule: AppendRule) -> list[WalkStep]:
    """Every Fibonacci value reachable from ``x`` by one append, ordered by (block length, value).

    Each block length is handled by bracketing the Fibonacci numbers inside
    [x*10^L, x*10^L + 10^L - 1]; no digit strings are enumerated.
    """
    _require_start(x)
    return _successors_unchecked(x, rule)


def enumerate_walks(start: int, rule: AppendRule, max_len: int = 64) -> list[Walk]:
    """All maximal walks from ``start``, depth first.

    A walk that reaches ``max_len`` terms while still extendable is returned
    with ``truncated=True``; under the theorems that never happens.
    """
    _require_start(start)
    if max_len < 1:
        raise DomainError(f"max_len must be at least 1, got {max_len}")
    walks: list[Walk] = []

    def dfs(path: list[WalkStep]) -> None:
        nxt = _successors_unchecked(path[-1].value, rule)
        if not nxt:
            walks.append(Walk(tuple(path)))
            return
        if len(path) >= max_len:
            walks.append(Walk(tuple(path), maximal=False, truncated=True))
            return
        for step in nxt:
            path.append(step)
            dfs(path)
            path.pop()

    dfs([WalkStep(start)])
    return walks


def appendable_bound(N: int) -> int:
    """floor(8 (10^N - 1) / 7): no larger Fibonacci number takes an exact-N append."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return 8 * (BASE**N - 1) // 7


def min_block_len(x: int, N: int) -> int:
    """Shortest block length that can possibly follow ``x``: digits(x) - 1.

    A Fibonacci number with at least M + 2 digits admits no M-digit append.
    """
    if x < 1:
        raise DomainError(f"x must be positive, got {x}")
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return digits(x) - 1


def theorem2_bound(N: int, N0: int) -> TheoremBound:
    """Longest possible at-most-N walk from an N0-digit start.

    Evaluates the largest M with 2^(M-1) * (N0 - 1) <= N (with N0 - 1 read as
    1 when N0 = 1) and returns M + 1 terms.  For N0 >= 2 with N < N0 - 1 no
    first append exists; that case is flagged degenerate with bound 1.
    """
    if N < 1 or N0 < 1:
        raise DomainError(f"need N, N0 >= 1, got N={N}, N0={N0}")
    unit = 1 if N0 == 1 else N0 - 1
    if unit > N:
        return TheoremBound(N, N0, 1, degenerate=True)
    M = 1
    while (unit << M) <= N:
        M += 1
    return TheoremBound(N, N0, M + 1)


def fibonacci_starts(max_value: int, min_value: int = 1) -> list[int]:
    """Distinct Fibonacci values in [min_value, max_value]."""
    return [v for _, v in fibcore.fibs_in_range(max(min_value, 1), max_value)]


def _step_json(s: WalkStep) -> dict:
    return {"value": s.value, "block": s.block}


def verify_lemma7(N: int, scan_cutoff: Optional[int] = None) -> Fragment:
    """Every Fibonacci x <= scan_cutoff admitting an exact-N append satisfies x <= appendable_bound(N)."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if scan_cutoff is None:
        scan_cutoff = BASE ** (N + 3)
    if scan_cutoff < BASE ** (N + 2):
        raise DomainError(f"scan_cutoff must be at least 10^{N + 2}")
    bound = appendable_bound(N)
    rule = AppendRule.exact(N)
    starts = fibonacci_starts(scan_cutoff)
    appendable = []
    violations = []
    for x in starts:
        nxt = _successors_unchecked(x, rule)
        if nxt:
            entry = {"value": x, "successors": [_step_json(s) for s in nxt]}
            appendable.append(entry)
            if x > bound:
                violations.append(entry)
    return Fragment.from_bool(
        not violations,
        bound=bound,
        scan_cutoff=scan_cutoff,
        scanned=len(starts),
        appendable=appendable,
        violations=violations,
    )


def verify_corollary8(N: int, max_len: int = 16) -> Fragment:
    """Exact-N appendable values have <= N+1 digits and no exact-N walk has more than 3 terms."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    rule = AppendRule.exact(N)
    starts = fibonacci_starts(BASE ** (N + 1) - 1)
    too_long = []
    truncated = []
    appendable_digits = []
    longest_walk: list[int] = []
    for x in starts:
        walks = enumerate_walks(x, rule, max_len)
        for w in walks:
            if w.length > len(longest_walk):
                longest_walk = w.values
            if w.length > 3:
                too_long.append(w.values)
            if w.truncated:
                truncated.append(w.values)
            for s in w.steps[:-1]:
                appendable_digits.append(digits(s.value))
    # Larger starts, up to N+3 digits, must be barren.
    sample = fibonacci_starts(BASE ** (N + 3) - 1, BASE ** (N + 1))
    not_barren = [x for x in sample if _successors_unchecked(x, rule)]
    ok = not too_long and not truncated and not not_barren
    ok = ok and all(d <= N + 1 for d in appendable_digits)
    return Fragment.from_bool(
        ok,
        starts=len(starts),
        max_length=len(longest_walk),
        longest_walk=longest_walk,
        max_appendable_digits=max(appendable_digits, default=0),
        too_long=too_long,
        truncated=truncated,
        barren_sample=len(sample),
        not_barren=not_barren,
    )


THEOREM1_WALKS = [[1, 13], [2, 21], [3, 34], [5, 55], [8, 89]]


def verify_theorem1(index_cutoff: int = 480, max_len: int = 16) -> Fragment:
    """Exact(1) walks from every F_m, 1 <= m <= index_cutoff: at most 2 terms, exactly five of length 2."""
    if index_cutoff < 30:
        raise DomainError(f"index_cutoff must be at least 30, got {index_cutoff}")
    rule = AppendRule.exact(1)
    starts = sorted({fibcore.fib(m) for m in range(1, index_cutoff + 1)})
    long_walks = []
    max_length = 0
    anomalies = []
    for x in starts:
        for w in enumerate_walks(x, rule, max_len):
            max_length = max(max_length, w.length)
            if w.length >= 2:
                long_walks.append(w.values)
            if w.truncated or w.length > 2:
                anomalies.append(w.values)
    ok = max_length <= 2 and not anomalies and long_walks == THEOREM1_WALKS
    return Fragment.from_bool(
        ok,
        index_cutoff=index_cutoff,
        starts=len(starts),
        max_length=max_length,
        walks=long_walks,
        anomalies=anomalies,
    )


def verify_theorem2(N: int, max_len: int = 64) -> Fragment:
    """At-most-N walks from every Fibonacci start with <= N+2 digits, grouped by start digit count.

    Each class's longest walk is compared against ``theorem2_bound``; every
    step must also use a block of at least ``min_block_len`` digits.  Starts
    with N+3 or N+4 digits are sampled to confirm they have no successor.
    """
    if not 1 <= N <= 6:
        raise DomainError(f"N must lie in [1, 6], got {N}")
    rule = AppendRule.at_most(N)
    classes: dict[int, dict] = {
        n0: {"N0": n0, "starts": 0, "observed": 0, "longest_walk": [], "block_violations": []}
        for n0 in range(1, N + 3)
    }
    truncated = []
    for x in fibonacci_starts(BASE ** (N + 2) - 1):
        cls = classes[digits(x)]
        cls["starts"] += 1
        for w in enumerate_walks(x, rule, max_len):
            if w.truncated:
                truncated.append(w.values)
            if w.length > cls["observed"]:
                cls["observed"] = w.length
                cls["longest_walk"] = w.values
            for prev, step in zip(w.steps, w.steps[1:]):
                if step.block_len < min_block_len(prev.value, N):
                    cls["block_violations"].append([prev.value, step.value, step.block])
    ok = not truncated
    for n0, cls in classes.items():
        tb = theorem2_bound(N, n0)
        cls["bound"] = tb.bound
        good = cls["observed"] <= tb.bound and not cls["block_violations"]
        if not good:
            cls["status"] = FAIL
        else:
            cls["status"] = DEGENERATE if tb.degenerate else PASS
        ok = ok and good
    sample = fibonacci_starts(BASE ** (N + 4) - 1, BASE ** (N + 2))
    not_barren = [x for x in sample if _successors_unchecked(x, rule)]
    ok = ok and not not_barren
    return Fragment.from_bool(
        ok,
        classes=[classes[n0] for n0 in sorted(classes)],
        truncated=truncated,
        barren_sample=len(sample),
        not_barren=not_barren,
    )
