"""The full verification battery: a fixed, ordered registry of checks."""

from __future__ import annotations

import contextlib
import dataclasses
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional, Sequence

from fibwalk import __version__, fibcore, modular, walks, zphi
from fibwalk.errors import ConfigError
from fibwalk.report import CheckResult, Fragment, VerificationReport

THREADS_ENV = "FIBWALK_THREADS"

# Index and value planted by the fault-injection self test (F_12 is 144).
FAULT_INDEX = 12
FAULT_VALUE = 145


@dataclass
class BatteryConfig:
    lemma3_max: int = 300
    lemma4_k_min: int = 2
    lemma4_k_max: int = 300
    lemma4_m_max: int = 300
    lemma4_algebraic_max: int = 100
    eq5_max: int = 300
    eq6_max: int = 300
    binet_max: int = 500
    cassini_max: int = 500
    pisano_modulus: int = 10
    lemma6_k_max: int = 62
    lemma6_period_k_max: int = 120
    lemma6_direct_max_n: int = 8
    lemma7_ns: list[int] = field(default_factory=lambda: [1, 2, 3])
    corollary8_ns: list[int] = field(default_factory=lambda: [1, 2, 3])
    theorem1_cutoff: int = 480
    theorem2_ns: list[int] = field(default_factory=lambda: [1, 2, 3, 4])
    workers: int = 1
    self_test: bool = False

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> BatteryConfig:
        known = {f.name for f in dataclasses.fields(cls)}
        kwargs = {}
        for key, value in data.items():
            name = key.replace("-", "_")
            if name not in known:
                raise ConfigError(f"unknown configuration key {key!r}")
            kwargs[name] = value
        return cls(**kwargs)

    def validate(self) -> None:
        def within(name: str, lo: int, hi: int) -> None:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or not lo <= value <= hi:
                raise ConfigError(f"{name} must be an integer in [{lo}, {hi}], got {value!r}")

        def all_within(name: str, lo: int, hi: int) -> None:
            values = getattr(self, name)
            if not isinstance(values, list) or not values:
                raise ConfigError(f"{name} must be a non-empty list")
            for v in values:
                if isinstance(v, bool) or not isinstance(v, int) or not lo <= v <= hi:
                    raise ConfigError(f"{name} entries must be integers in [{lo}, {hi}], got {v!r}")

        within("lemma3_max", 1, 1000)
        within("lemma4_k_min", 2, 1000)
        within("lemma4_k_max", 2, 1000)
        within("lemma4_m_max", 2, 1000)
        if not self.lemma4_k_min <= self.lemma4_k_max <= self.lemma4_m_max:
            raise ConfigError("lemma4 grid needs k_min <= k_max <= m_max (k may not exceed m)")
        within("lemma4_algebraic_max", 2, 300)
        within("eq5_max", 1, 1000)
        within("eq6_max", 6, 1000)
        within("binet_max", 0, 5000)
        within("cassini_max", 2, 5000)
        within("pisano_modulus", 1, 10_000)
        # The window argument needs at least one full period beyond k = 2.
        within("lemma6_k_max", 62, 1000)
        within("lemma6_period_k_max", 62, 1000)
        within("lemma6_direct_max_n", 1, 30)
        all_within("lemma7_ns", 1, 5)
        all_within("corollary8_ns", 1, 5)
        within("theorem1_cutoff", 30, 2000)
        all_within("theorem2_ns", 1, 6)
        within("workers", 1, 64)


@dataclass
class Check:
    name: str
    params: dict[str, Any]
    run: Callable[[], Fragment]


def _grid_failures(pairs: Sequence[tuple[int, ...]], pred: Callable[..., bool]) -> list[list[int]]:
    return [list(p) for p in pairs if not pred(*p)]


def _grid(pairs: list[tuple[int, ...]], pred: Callable[..., bool]) -> Fragment:
    failures = _grid_failures(pairs, pred)
    return Fragment.from_bool(not failures, cases=len(pairs), failures=failures[:20])


def _lemma3(cfg: BatteryConfig) -> Fragment:
    n = cfg.lemma3_max
    return _grid([(m, k) for m in range(1, n + 1) for k in range(1, n + 1)], fibcore.check_lemma3)


def _lemma4_pairs(cfg: BatteryConfig, m_max: int) -> list[tuple[int, int]]:
    return [
        (m, k)
        for k in range(cfg.lemma4_k_min, cfg.lemma4_k_max + 1)
        for m in range(k, m_max + 1)
    ]


def _lemma4(cfg: BatteryConfig) -> Fragment:
    return _grid(_lemma4_pairs(cfg, cfg.lemma4_m_max), fibcore.check_lemma4)


def _lemma4_algebraic(cfg: BatteryConfig) -> Fragment:
    top = cfg.lemma4_algebraic_max
    pairs = [(m, k) for k in range(2, top + 1) for m in range(k, top + 1)]
    mismatched = [
        [m, k] for m, k in pairs if zphi.verify_lemma4_algebraic(m, k) != fibcore.check_lemma4(m, k)
    ]
    failures = _grid_failures(pairs, zphi.verify_lemma4_algebraic)
    return Fragment.from_bool(
        not failures and not mismatched,
        cases=len(pairs),
        failures=failures[:20],
        disagreements_with_numeric=mismatched[:20],
    )


def _eq3(cfg: BatteryConfig) -> Fragment:
    lhs, rhs = zphi.eq3_sides()
    return Fragment.from_bool(zphi.verify_eq3(), lhs=[lhs.a, lhs.b], rhs=[rhs.a, rhs.b])


def _binet(cfg: BatteryConfig) -> Fragment:
    return _grid([(n,) for n in range(cfg.binet_max + 1)], lambda n: zphi.binet_exact(n) == fibcore.fib(n))


def _eq5(cfg: BatteryConfig) -> Fragment:
    return _grid([(m,) for m in range(1, cfg.eq5_max + 1)], fibcore.check_eq5)


def _eq6(cfg: BatteryConfig) -> Fragment:
    return _grid([(m,) for m in range(6, cfg.eq6_max + 1)], fibcore.check_eq6)


def _cassini(cfg: BatteryConfig) -> Fragment:
    return _grid(
        [(n,) for n in range(2, cfg.cassini_max + 1)], lambda n: abs(fibcore.cassini_defect(n)) == 1
    )


def _pisano(cfg: BatteryConfig) -> Fragment:
    res = modular.pisano_period(cfg.pisano_modulus)
    ok = True
    if cfg.pisano_modulus == 10:
        ok = res.period == 60
    # Cross-check a few residues against exact values.
    sample = range(min(res.period, 100))
    ok = ok and all(res.residues[i] == fibcore.fib(i) % cfg.pisano_modulus for i in sample)
    return Fragment.from_bool(ok, modulus=res.modulus, period=res.period)


def _lemma6_residues(cfg: BatteryConfig) -> Fragment:
    window = modular.lemma6_residue_search(2, cfg.lemma6_k_max)
    zeros = [k for k, r in window if r == 0]
    top = cfg.lemma6_period_k_max
    shifted = dict(modular.lemma6_residue_search(2, top + 60))
    aperiodic = [k for k in range(2, top + 1) if shifted[k] != shifted[k + 60]]
    # Independent of the residue path: exact differences reduced mod 10.
    exact_mismatch = [
        k for k, r in window if (fibcore.fib(k + 2) - fibcore.fib(k - 2)) % 10 != r
    ]
    return Fragment.from_bool(
        not zeros and not aperiodic and not exact_mismatch,
        window=[2, cfg.lemma6_k_max],
        residues=[r for _, r in window],
        zero_residue_k=zeros,
        periodicity_checked=[2, top],
        aperiodic_k=aperiodic,
        exact_mismatch_k=exact_mismatch,
    )


def _lemma6_direct(cfg: BatteryConfig) -> Fragment:
    hits = {N: modular.power_of_ten_differences(N) for N in range(1, cfg.lemma6_direct_max_n + 1)}
    bad = {str(N): ks for N, ks in hits.items() if ks}
    return Fragment.from_bool(not bad, max_n=cfg.lemma6_direct_max_n, hits=bad)


def build_registry(cfg: BatteryConfig) -> list[Check]:
    checks = [
        Check("lemma3", {"m": [1, cfg.lemma3_max], "k": [1, cfg.lemma3_max]}, lambda: _lemma3(cfg)),
        Check(
            "lemma4",
            {"k": [cfg.lemma4_k_min, cfg.lemma4_k_max], "m_max": cfg.lemma4_m_max},
            lambda: _lemma4(cfg),
        ),
        Check(
            "lemma4_algebraic",
            {"k": [2, cfg.lemma4_algebraic_max], "m_max": cfg.lemma4_algebraic_max},
            lambda: _lemma4_algebraic(cfg),
        ),
        Check("eq3", {}, lambda: _eq3(cfg)),
        Check("binet", {"n": [0, cfg.binet_max]}, lambda: _binet(cfg)),
        Check("eq5", {"m": [1, cfg.eq5_max]}, lambda: _eq5(cfg)),
        Check("eq6", {"m": [6, cfg.eq6_max]}, lambda: _eq6(cfg)),
        Check("cassini", {"n": [2, cfg.cassini_max]}, lambda: _cassini(cfg)),
        Check("pisano", {"m": cfg.pisano_modulus}, lambda: _pisano(cfg)),
        Check(
            "lemma6_residues",
            {"k": [2, cfg.lemma6_k_max], "period_k": [2, cfg.lemma6_period_k_max]},
            lambda: _lemma6_residues(cfg),
        ),
        Check("lemma6_direct", {"N": [1, cfg.lemma6_direct_max_n]}, lambda: _lemma6_direct(cfg)),
    ]
    for N in cfg.lemma7_ns:
        checks.append(Check("lemma7", {"N": N}, lambda N=N: walks.verify_lemma7(N)))
    for N in cfg.corollary8_ns:
        checks.append(Check("corollary8", {"N": N}, lambda N=N: walks.verify_corollary8(N)))
    checks.append(
        Check(
            "theorem1",
            {"index_cutoff": cfg.theorem1_cutoff},
            lambda: walks.verify_theorem1(cfg.theorem1_cutoff),
        )
    )
    for N in cfg.theorem2_ns:
        checks.append(Check("theorem2", {"N": N}, lambda N=N: walks.verify_theorem2(N)))
    return checks


CHECK_NAMES = tuple(dict.fromkeys(c.name for c in build_registry(BatteryConfig())))


def _timed(check: Check) -> CheckResult:
    t0 = time.perf_counter()
    frag = check.run()
    elapsed = round((time.perf_counter() - t0) * 1000.0, 3)
    return CheckResult(check.name, check.params, frag.status, frag.witnesses, elapsed)


@contextlib.contextmanager
def _maybe_fault(enabled: bool) -> Iterator[None]:
    if enabled:
        with fibcore.corrupted(FAULT_INDEX, FAULT_VALUE):
            yield
    else:
        yield


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"{THREADS_ENV} must be positive, got {n}")
    return n


def run_battery(cfg: Optional[BatteryConfig] = None, only: Optional[str] = None) -> VerificationReport:
    """Run every registered check (or those named ``only``) and collect a report.

    Results are kept in registry order whatever the worker count.
    """
    cfg = cfg or BatteryConfig()
    cfg.validate()
    checks = build_registry(cfg)
    if only is not None and only != "all":
        if only not in CHECK_NAMES:
            raise ConfigError(f"unknown check {only!r}; choose from all, {', '.join(CHECK_NAMES)}")
        checks = [c for c in checks if c.name == only]
    with _maybe_fault(cfg.self_test):
        if cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                results = list(pool.map(_timed, checks))
        else:
            results = [_timed(c) for c in checks]
    return VerificationReport(results, __version__)
