"""Base command definitions for the trilog CLI."""

import argparse
from typing import Any

from pydantic import BaseModel, Field

from trilog.errors import UsageError
from trilog.params import ParamSet, resolve_params


class CommandOption(BaseModel):
    """One command-line flag of a subcommand."""
    flag: str                                        # e.g. "--params"
    help: str = ""
    kind: str = "str"                                # "str" | "int" | "flag"
    default: Any = None
    required: bool = False

    def add_to(self, parser: argparse.ArgumentParser):
        if self.kind == "flag":
            parser.add_argument(self.flag, action="store_true", help=self.help)
            return
        parser.add_argument(
            self.flag,
            type=int if self.kind == "int" else str,
            default=self.default,
            required=self.required,
            help=self.help,
        )


class CommandMeta(BaseModel):
    """Metadata describing a subcommand."""
    id: str                                          # e.g. "solve"
    label: str
    description: str = ""
    options: list[CommandOption] = Field(default_factory=list)


PARAMS_OPTION = CommandOption(flag="--params", default="p431", help="named set or '2^a*3^b-1'")
ELL_OPTION = CommandOption(flag="--ell", kind="int", default=2, help="subgroup prime: 2 or 3")
W_OPTION = CommandOption(flag="--w", kind="int", help="window (base power); default 4 for ell=2, 3 for ell=3")
SEED_OPTION = CommandOption(flag="--seed", kind="int", default=0, help="random seed")
W_SET_OPTION = CommandOption(flag="--w-set", default="1,2,3,4,6", help="comma-separated window sizes")


class BaseCommand:
    """Base class for all trilog subcommands.

    Subclasses must define a `meta` class attribute (CommandMeta) and override `run()`.
    """

    meta: CommandMeta  # subclasses define this

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        """Execute the subcommand and return its JSON-ready result."""
        raise NotImplementedError


def subgroup_from_args(args: argparse.Namespace) -> ParamSet:
    return resolve_params(args.params).subgroup(args.ell, args.w)


def parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None
