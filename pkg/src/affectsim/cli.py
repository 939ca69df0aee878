"""Command line frontend: scenario replay, live serving, config validation.

Exit codes: 0 success, 2 usage error (argparse), 3 missing file,
4 malformed scenario, 5 invalid configuration.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import __version__
from .config import load_config
from .engine import run_scenario
from .errors import ConfigError, ScenarioError

EXIT_OK = 0
EXIT_MISSING_FILE = 3
EXIT_BAD_SCENARIO = 4
EXIT_BAD_CONFIG = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affectsim",
        description="Deterministic emotion-appraisal engine for human-robot interaction.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="replay a scenario file and write a CSV trace")
    run_p.add_argument("scenario", help="scenario JSON file")
    run_p.add_argument("--config", help="engine config JSON (default: packaged config)")
    run_p.add_argument("--out", required=True, help="output trace CSV path")
    run_p.add_argument("--seed", type=int, help="override the config rng seed")

    serve_p = sub.add_parser("serve", help="run a live session server")
    serve_p.add_argument("--config", help="engine config JSON (default: packaged config)")
    serve_p.add_argument("--bind", default="127.0.0.1:8130", help="host:port to listen on")
    serve_p.add_argument("--seed", type=int, help="override the config rng seed")
    serve_p.add_argument("--console-dir", help="serve a built operator console from this directory")
    serve_p.add_argument(
        "--injection-log",
        help="on shutdown, write the injected percepts as a replayable scenario file",
    )

    val_p = sub.add_parser("validate", help="validate a config file and everything it references")
    val_p.add_argument("config", help="engine config JSON")

    for p in (run_p, serve_p, val_p):
        p.add_argument(
            "--allow-sector-mismatch",
            action="store_true",
            help="start even if the emotion word table's checksum differs from the packaged one",
        )
    return parser


def _load_config(args: argparse.Namespace):
    config = load_config(getattr(args, "config", None))
    if getattr(args, "allow_sector_mismatch", False):
        config = replace(config, allow_sector_mismatch=True)
    return config


def cmd_run(args: argparse.Namespace) -> int:
    config = _load_config(args)
    records = run_scenario(args.scenario, config, args.out, seed=args.seed)
    print(f"wrote {len(records)} trace records to {args.out}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve_session

    config = _load_config(args)
    serve_session(
        config,
        args.bind,
        seed=args.seed,
        console_dir=args.console_dir,
        injection_log_path=args.injection_log,
    )
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    config = _load_config(args)
    from .engine import Engine

    Engine.from_config(config)
    print(f"{args.config}: OK")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": cmd_run, "serve": cmd_serve, "validate": cmd_validate}
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename or exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_SCENARIO
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
