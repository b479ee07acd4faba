"""Command-line entry point for trilog."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any

from trilog import __version__
from trilog.engine.registry import CommandRegistry
from trilog.errors import TrilogError, UsageError
from trilog.storage.results import ResultStore

logger = logging.getLogger(__name__)


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilog",
        description="Discrete logarithms for compressed SIDH public keys, tables built at runtime.",
    )
    parser.add_argument("--version", action="version", version=f"trilog {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for command_id, cls in sorted(registry.commands.items()):
        sp = sub.add_parser(command_id, help=cls.meta.label, description=cls.meta.description)
        for option in cls.meta.options:
            option.add_to(sp)
        sp.add_argument("--pretty", action="store_true", help="indent JSON output")
        sp.add_argument("--out", help="also write the JSON result to this file")
        sp.add_argument("--save", help="store the result in the report store under this name")
    return parser


def _emit(payload: dict[str, Any], pretty: bool) -> str:
    text = json.dumps(payload, indent=2 if pretty else None)
    print(text)
    return text


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("TRILOG_LOG_LEVEL", "WARNING").upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    registry = CommandRegistry()
    registry.discover()
    parser = build_parser(registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    command = registry.get(args.command)()
    try:
        result = command.run(args)
    except UsageError as exc:
        _emit({"error": exc.message, "kind": type(exc).__name__}, args.pretty)
        return 2
    except TrilogError as exc:
        logger.exception("%s failed", args.command)
        _emit({"error": exc.message, "kind": type(exc).__name__}, args.pretty)
        return 1

    text = _emit(result, args.pretty)
    if args.out:
        Path(args.out).write_text(text + "\n")
    if args.save:
        ResultStore().save_report(args.command, args.save, result)
    return 0


def cli():
    raise SystemExit(main())


if __name__ == "__main__":
    cli()
