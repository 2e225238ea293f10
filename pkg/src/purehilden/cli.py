"""
Command-line surface for the verification suites.

All machine-readable output goes to stdout (text, or JSON with
--format json); diagnostics go to stderr.  Exit codes: 0 when every
requested check passes, 1 on check failure, 2 on usage errors, 3 when a
handle-reduction budget is exhausted.  HF_BUDGET and HF_WORKERS preset
the step budget and worker count; the --budget and --workers flags win
over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from purehilden.braids import BraidWord, BudgetExceededError, braids_equal, handle_reduce
from purehilden.relations import ORDER_CLASSES, c2_triples
from purehilden.rewrite import DerivationError, DerivationScript, check_derivation
from purehilden.tl import hilden_cap_test
from purehilden import verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class Config:
    n: int = 4
    workers: int = 1
    budget: int = 0  # 0 means: keep whatever the environment provides
    fmt: str = "text"
    fixtures: Path | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.budget < 0:
            raise ValueError("budget must be positive")


def _emit_report(report, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.summary())
        for failure in report.failures:
            print(f"  FAIL {failure.schema}{failure.indices} "
                  f"{failure.symbols} [{failure.oracle}]")
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_reduce(args, config) -> int:
    w = handle_reduce(BraidWord.parse(args.word))
    print(json.dumps(w.to_json()) if config.fmt == "json" else w.format())
    return EXIT_OK


def _cmd_equal(args, config) -> int:
    equal = braids_equal(BraidWord.parse(args.left), BraidWord.parse(args.right))
    print(json.dumps({"equal": equal}) if config.fmt == "json" else str(equal).lower())
    return EXIT_OK if equal else EXIT_FAIL


def _cmd_verify_relations(args, config) -> int:
    return _emit_report(verify.verify_relations(config.n, workers=config.workers),
                        config.fmt)


def _cmd_table_c2(args, config) -> int:
    found = verify.bruteforce_c2(config.n, workers=config.workers)
    matches = all(found[cls] == c2_triples(cls) for cls in ORDER_CLASSES)
    if config.fmt == "json":
        print(json.dumps({
            "n": config.n,
            "classes": {cls: sorted("".join(t) for t in found[cls])
                        for cls in ORDER_CLASSES},
            "matches_table": matches,
        }))
    else:
        for cls in ORDER_CLASSES:
            triples = " ".join("(" + ",".join(t) + ")" for t in sorted(found[cls]))
            print(f"{cls}: {triples}")
        print(f"matches stored table: {str(matches).lower()}")
    return EXIT_OK if matches else EXIT_FAIL


def _cmd_purity(args, config) -> int:
    return _emit_report(verify.purity_suite(config.n, workers=config.workers),
                        config.fmt)


def _cmd_membership(args, config) -> int:
    return _emit_report(verify.membership_suite(config.n, workers=config.workers),
                        config.fmt)


def _cmd_cap_test(args, config) -> int:
    result = hilden_cap_test(BraidWord.parse(args.word))
    print(json.dumps(result.to_json()))
    return EXIT_OK if result.passed else EXIT_FAIL


def _cmd_phi_check(args, config) -> int:
    return _emit_report(
        verify.phi_report(args.prop, config.n, workers=config.workers,
                          fixtures=config.fixtures),
        config.fmt,
    )


def _cmd_prove(args, config) -> int:
    if args.script.exists():
        script = DerivationScript.load(args.script)
    else:
        from purehilden.rewrite import shipped_scripts

        bundled = shipped_scripts()
        name = args.script.stem.removeprefix("script_")
        if name not in bundled:
            raise OSError(f"no such script file or bundled fixture: {args.script}")
        script = bundled[name]
    try:
        check_derivation(script)
    except DerivationError as exc:
        if config.fmt == "json":
            print(json.dumps({"ok": False, "step": exc.step_index,
                              "reason": exc.reason}))
        else:
            print(f"error: {exc}")
        return EXIT_FAIL
    if config.fmt == "json":
        print(json.dumps({"ok": True, "steps": len(script.steps)}))
    else:
        print(f"ok ({len(script.steps)} steps)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purehilden",
        description="verification suites for the realized presentation",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel checks (default: HF_WORKERS or 1)")
    parser.add_argument("--budget", type=int, default=None,
                        help="handle reduction step budget (default: HF_BUDGET or 10^7)")
    parser.add_argument("--fixtures", type=Path, default=None,
                        help="directory of fixture files (default: bundled)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="free- and handle-reduce a braid word")
    s.add_argument("word")
    s.set_defaults(func=_cmd_reduce)

    s = sub.add_parser("equal", help="decide equality of two braid words")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=_cmd_equal)

    s = sub.add_parser("verify-relations", help="check every relation instance")
    s.add_argument("--n", type=int, default=4)
    s.set_defaults(func=_cmd_verify_relations)

    s = sub.add_parser("table-c2", help="brute-force the admissible symbol triples")
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(func=_cmd_table_c2)

    s = sub.add_parser("phi-check", help="check properties of the framed action")
    s.add_argument("--prop", choices=("A", "B", "inv", "sq", "C"), required=True)
    s.add_argument("--n", type=int, default=4)
    s.set_defaults(func=_cmd_phi_check)

    s = sub.add_parser("cap-test", help="run the cap-state membership test")
    s.add_argument("word")
    s.set_defaults(func=_cmd_cap_test)

    s = sub.add_parser("prove", help="replay a derivation script")
    s.add_argument("script", type=Path)
    s.set_defaults(func=_cmd_prove)

    s = sub.add_parser("purity", help="check induced permutations of all generators")
    s.add_argument("--n", type=int, default=4)
    s.set_defaults(func=_cmd_purity)

    s = sub.add_parser("membership", help="cap test over generators and controls")
    s.add_argument("--n", type=int, default=4)
    s.set_defaults(func=_cmd_membership)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # Flags win over the environment for the duration of the command;
    # the previous environment is restored so in-process callers (tests,
    # embedding) see no side effects.
    saved = {key: os.environ.get(key) for key in ("HF_BUDGET", "HF_WORKERS")}
    if args.budget is not None:
        os.environ["HF_BUDGET"] = str(args.budget)
    if args.workers is not None:
        os.environ["HF_WORKERS"] = str(args.workers)
    try:
        config = Config(
            n=getattr(args, "n", 4),
            workers=verify.worker_count(),
            budget=int(os.environ.get("HF_BUDGET", "0") or 0),
            fmt=args.format,
            fixtures=args.fixtures,
        )
        return args.func(args, config)
    except BudgetExceededError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for key, value in saved.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
