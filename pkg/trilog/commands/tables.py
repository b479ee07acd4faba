import argparse
from pathlib import Path
from typing import Any

from trilog.commands.base import (
    PARAMS_OPTION,
    SEED_OPTION,
    W_SET_OPTION,
    BaseCommand,
    CommandMeta,
    CommandOption,
    parse_int_list,
)
from trilog.errors import UsageError
from trilog.field import sample_mu_generator
from trilog.params import MAX_W, resolve_params
from trilog.storage.results import dump_table
from trilog.tables import build_table, select_base, table_bytes, table_kib


class TablesCommand(BaseCommand):
    meta = CommandMeta(
        id="tables",
        label="Table sizes",
        description="Lookup-table memory per subgroup and window; optionally dump one table.",
        options=[
            PARAMS_OPTION,
            W_SET_OPTION,
            CommandOption(flag="--dump", help="write the table for --ell/--w to this file"),
            CommandOption(flag="--ell", kind="int", help="subgroup for --dump"),
            CommandOption(flag="--w", kind="int", help="window for --dump"),
            SEED_OPTION,
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        family = resolve_params(args.params)
        result: dict[str, Any] = {"params": family.name, "bit_length": family.modulus.bit_length}
        for ell in (3, 2):
            e_ell = family.e2 if ell == 2 else family.e3
            for w in parse_int_list(args.w_set, "--w-set"):
                if not 1 <= w <= min(e_ell, MAX_W):
                    continue
                ps = family.subgroup(ell, w)
                result[f"w{w}_ell{ell}_kib"] = table_kib(ps)
                result[f"w{w}_ell{ell}_bytes"] = table_bytes(ps)

        if args.dump:
            if args.ell is None:
                raise UsageError("--dump needs --ell")
            ps = family.subgroup(args.ell, args.w)
            g = sample_mu_generator(ps.modulus, ps.ell, ps.e_ell, args.seed)
            table = build_table(select_base(g, ps), ps)
            size = dump_table(table, Path(args.dump))
            result["dump"] = {"path": args.dump, "bytes": size, **ps.describe(), "base": g.to_hex()}
        return result
