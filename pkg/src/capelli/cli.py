"""Command-line verification harness.

`capelli verify <suite> [--N ...] [--m ...] [--k ...] [--K ...]
[--seed ...] [--format json|md|text] [--out path]` runs one named suite
and emits a machine- or human-readable report; `capelli list-suites`
prints the registry.  Exit codes: 0 all checks pass, 1 at least one
check failed, 2 usage error.  The environment variable VERIFY_MAX_CELLS
adjusts the tensor-space size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .core import DimensionError
from .suites import SUITES, CheckResult, UsageError, run_suite

REPORT_VERSION = "1"


@dataclass
class SuiteConfig:
    suite: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    fmt: str = "text"
    out: str | None = None


@dataclass
class VerificationReport:
    suites: list

    def passed(self):
        return all(c.status == "pass" for _n, _p, checks in self.suites for c in checks)


def run(config: SuiteConfig) -> VerificationReport:
    checks = run_suite(config.suite, dict(config.params), seed=config.seed)
    checks.sort(key=lambda c: c.id)
    shown = {k: v for k, v in config.params.items() if v is not None}
    shown["seed"] = config.seed
    return VerificationReport(suites=[(config.suite, shown, checks)])


def report_emit(report: VerificationReport, fmt: str) -> bytes:
    if fmt == "json":
        payload = {
            "version": REPORT_VERSION,
            "suites": [
                {
                    "name": name,
                    "params": {k: params[k] for k in sorted(params)},
                    "checks": [_check_json(c) for c in checks],
                }
                for name, params, checks in report.suites
            ],
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "md":
        lines = []
        for name, params, checks in report.suites:
            lines.append(f"## {name} {params}")
            lines.append("")
            lines.append("| check | status | witness |")
            lines.append("|---|---|---|")
            for c in checks:
                lines.append(f"| {c.id} | {c.status} | {c.witness or ''} |")
            lines.append("")
        return ("\n".join(lines)).encode()
    if fmt == "text":
        lines = []
        for name, params, checks in report.suites:
            for c in checks:
                mark = "PASS" if c.status == "pass" else "FAIL"
                extra = f"  [{c.witness}]" if c.witness else ""
                lines.append(f"{mark} {name}:{c.id}{extra}")
            npass = sum(1 for c in checks if c.status == "pass")
            lines.append(f"{name}: {npass}/{len(checks)} checks passed")
        return ("\n".join(lines) + "\n").encode()
    raise UsageError(f"unknown format {fmt!r}")


def _check_json(c: CheckResult):
    out = {"id": c.id, "status": c.status}
    if c.witness is not None:
        out["witness"] = c.witness
    out["ms"] = round(c.ms, 3)
    return out


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="capelli",
        description="Exact verification suites for the central-element identities.",
    )
    sub = parser.add_subparsers(dest="command")
    v = sub.add_parser("verify", help="run one named suite")
    v.add_argument("suite")
    v.add_argument("--N", type=int, default=None)
    v.add_argument("--m", type=int, default=None)
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--K", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", dest="fmt", default="text",
                   choices=["json", "md", "text"])
    v.add_argument("--out", default=None)
    sub.add_parser("list-suites", help="print the suite registry")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "list-suites":
        width = max(len(n) for n in SUITES)
        for name in sorted(SUITES):
            print(f"{name:<{width}}  {SUITES[name][0]}")
        return 0
    if args.command != "verify":
        parser.print_usage()
        return 2
    config = SuiteConfig(
        suite=args.suite,
        params={"N": args.N, "m": args.m, "k": args.k, "K": args.K},
        seed=args.seed,
        fmt=args.fmt,
        out=args.out,
    )
    try:
        report = run(config)
    except (UsageError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    blob = report_emit(report, config.fmt)
    if config.out:
        with open(config.out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.write(blob.decode())
    return 0 if report.passed() else 1


if __name__ == "__main__":
    raise SystemExit(main())
