"""Command-line front end.

Exit codes: 0 all checks pass, 1 at least one verification failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from fibwalk import __version__, fibcore, modular, walks
from fibwalk.battery import CHECK_NAMES, BatteryConfig, default_workers, run_battery
from fibwalk.errors import ConfigError, DomainError
from fibwalk.report import FORMATS, emit_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _nat(text: str) -> int:
    """Non-negative decimal integer of any length."""
    s = text.strip()
    if not s.isdigit() or not s.isascii():
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(s)


def _pos(text: str) -> int:
    n = _nat(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _int_list(text: str) -> list[int]:
    return [_pos(part) for part in text.split(",") if part.strip()]


def _walk_json(w: walks.Walk) -> dict[str, Any]:
    return {
        "values": w.values,
        "blocks": w.blocks,
        "length": w.length,
        "maximal": w.maximal,
        "truncated": w.truncated,
    }


def cmd_fib(args: argparse.Namespace) -> int:
    print(fibcore.fib(args.n))
    return EXIT_OK


def cmd_is_fib(args: argparse.Namespace) -> int:
    idx = fibcore.is_fibonacci(args.x)
    if idx is None:
        print(f"{args.x} is not a Fibonacci number")
    else:
        print(f"{args.x} = F_{idx}")
    return EXIT_OK


def cmd_pisano(args: argparse.Namespace) -> int:
    res = modular.pisano_period(args.m)
    print(res.period)
    if args.residues:
        print(" ".join(str(r) for r in res.residues))
    return EXIT_OK


def cmd_walks(args: argparse.Namespace) -> int:
    rule = walks.AppendRule(walks.Mode(args.mode), args.n)
    found = walks.enumerate_walks(args.start, rule, args.max_len)
    if args.format == "json":
        doc = {"start": args.start, "rule": str(rule), "walks": [_walk_json(w) for w in found]}
        print(json.dumps(doc, indent=2))
    else:
        for w in found:
            blocks = ", ".join(repr(b) for b in w.blocks)
            tag = " [truncated]" if w.truncated else ""
            print(f"{w}  (length {w.length}; blocks: {blocks or '-'}){tag}")
    return EXIT_FAIL if any(w.truncated for w in found) else EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    if args.lemma7:
        print(walks.appendable_bound(args.n))
        return EXIT_OK
    if args.n0 is None:
        raise ConfigError("bound --theorem2 requires --n0")
    tb = walks.theorem2_bound(args.n, args.n0)
    if tb.degenerate:
        print(f"{tb.bound} (degenerate: no {args.n}-digit-or-shorter append from a {args.n0}-digit start)")
    else:
        print(tb.bound)
    return EXIT_OK


def _load_config(args: argparse.Namespace) -> BatteryConfig:
    data: dict[str, Any] = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
    cfg = BatteryConfig.from_mapping(data)
    if "workers" not in data:
        cfg.workers = default_workers()
    for f in dataclasses.fields(BatteryConfig):
        value = getattr(args, f.name, None)
        if value is not None:
            setattr(cfg, f.name, value)
    return cfg


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    report = run_battery(cfg, only=args.check)
    text = emit_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibwalk", description="Digit-append walks on the Fibonacci sequence."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="print F_n")
    p.add_argument("n", type=_nat)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("is-fib", help="report the index of x in the Fibonacci sequence")
    p.add_argument("x", type=_nat)
    p.set_defaults(func=cmd_is_fib)

    p = sub.add_parser("pisano", help="Pisano period of the Fibonacci sequence mod m")
    p.add_argument("m", type=_pos)
    p.add_argument("--residues", action="store_true", help="also print one period of residues")
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("walks", help="enumerate all maximal walks from a start")
    p.add_argument("--start", type=_pos, required=True)
    p.add_argument("--mode", choices=[m.value for m in walks.Mode], required=True)
    p.add_argument("--n", type=_pos, required=True, help="digit budget per append")
    p.add_argument("--max-len", type=_pos, default=64)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("bound", help="evaluate a walk-length or appendability bound")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--theorem2", action="store_true", help="longest at-most-N walk")
    kind.add_argument("--lemma7", action="store_true", help="largest exact-N appendable value")
    p.add_argument("--n", type=_pos, required=True)
    p.add_argument("--n0", type=_pos, help="digit count of the starting number")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("check", choices=("all",) + CHECK_NAMES, metavar="check|all")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--config", help="JSON file with battery settings (same keys as the flags)")
    p.add_argument("--self-test", action="store_true", default=None, help="inject a fault; must exit 1")
    for f in dataclasses.fields(BatteryConfig):
        if f.name == "self_test":
            continue
        flag = "--" + f.name.replace("_", "-")
        conv = _int_list if f.name.endswith("_ns") else _nat
        p.add_argument(flag, dest=f.name, type=conv, default=None, help="battery setting override")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (ConfigError, DomainError) as exc:
        print(f"fibwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
